from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regpow.polyring import (PrimeField, Ring, RingMismatch, buchberger, divide,
                             is_groebner, normal_form, s_polynomial)

R3 = Ring(["x", "y", "z"], field=PrimeField(101))
E = Ring([f"x{i}" for i in range(1, 4)] + [f"y{i}" for i in range(1, 4)])


def f_(i, j):
    return E.parse(f"x{i}*y{j} - x{j}*y{i}")


@st.composite
def polys(draw, ring=R3, max_deg=3, max_terms=4, homogeneous=False):
    deg = draw(st.integers(0, max_deg))
    terms = []
    for _ in range(draw(st.integers(1, max_terms))):
        d = deg if homogeneous else draw(st.integers(0, max_deg))
        a = draw(st.integers(0, d))
        b = draw(st.integers(0, d - a))
        exps = [a, b, d - a - b] + [0] * (ring.nvars - 3)
        c = draw(st.integers(1, ring.p - 1))
        terms.append((c, exps))
    f = ring.zero()
    for c, exps in terms:
        f = f + ring.const(c) * _mono(ring, exps)
    return f


def _mono(ring, exps):
    out = ring.one()
    for v, e in zip(ring.gens(), exps):
        out = out * v ** e
    return out


def test_prime_field():
    with pytest.raises(ValueError):
        PrimeField(15)
    F = PrimeField(7)
    assert all(a * F.inv(a) % 7 == 1 for a in range(1, 7))
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_arithmetic_examples():
    x, y, z = R3.gens()
    assert (x * y + R3.const(-1) * x * y).is_zero()
    assert f_(1, 2) * E.one() == f_(1, 2)
    prod = f_(1, 2) * f_(2, 3)
    assert len(prod) == 4 and prod.degree() == 4 and prod.is_homogeneous()
    with pytest.raises(RingMismatch):
        x + E.gens()[0]


def test_normal_form_examples():
    x, y, _ = R3.gens()
    assert normal_form(x * x, [x]).is_zero()
    assert normal_form(y, [x]) == y


def test_buchberger_examples():
    x = R3.gens()[0]
    assert buchberger([x]) == [x]
    p3 = buchberger([f_(1, 2), f_(2, 3)])
    assert sorted(map(str, p3)) == sorted(str(g.monic()) for g in [f_(1, 2), f_(2, 3)])
    k3 = buchberger([f_(1, 2), f_(1, 3), f_(2, 3)])
    assert all(g.degree() == 2 for g in k3) and is_groebner(k3)


def test_print_parse_examples():
    f = E.parse("3*x1*y2^2 - x2*y1 + 5")
    assert E.parse(str(f)) == f
    with pytest.raises(ValueError):
        E.parse("x1 + q7")


def test_exponent_overflow():
    with pytest.raises(OverflowError):
        R3.monomial([300, 0, 0])


@given(polys(), st.lists(polys(max_deg=2), min_size=1, max_size=3))
def test_division_identity(f, basis):
    basis = [b for b in basis if not b.is_zero()]
    if not basis:
        return
    qs, r = divide(f, basis)
    total = r
    for q, b in zip(qs, basis):
        total = total + q * b
    assert total == f
    leads = [b.lead_key() for b in basis]
    for K in r.terms:
        assert not any(R3.divides(L, K) for L in leads)


@given(st.lists(polys(max_deg=2, max_terms=3), min_size=1, max_size=3), st.randoms())
def test_reduced_gb_independent_of_order(gens, rnd):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    a = buchberger(gens)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert a == buchberger(shuffled)
    assert is_groebner(a)
    for f, g in zip(a, a[1:]):
        assert normal_form(s_polynomial(f, g), a).is_zero()
    assert all(g.lead_coeff() == 1 for g in a)


@given(st.lists(polys(max_deg=2, max_terms=3), min_size=1, max_size=3), polys(max_deg=2))
def test_membership_soundness(gens, r):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    gb = buchberger(gens)
    for g in gens:
        assert normal_form(g, gb).is_zero()
        assert normal_form(r * g, gb).is_zero()


@given(polys(max_deg=4, max_terms=6))
def test_print_parse_roundtrip(f):
    assert R3.parse(str(f)) == f if not f.is_zero() else str(f) == "0"
