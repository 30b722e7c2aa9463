from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regpow import graph as gr
from regpow.edge_ideals import build_ideal, edge_generator, edge_ring, phi_ideal
from regpow.ideals import (Ideal, check_obs24, ideal_colon, ideal_equal, ideal_intersect,
                           ideal_power, is_d_sequence, is_regular_sequence)
from regpow.polyring import PrimeField, Ring, normal_form
from regpow.resolution import rank_mod_p

R = Ring(["x", "y", "z"], field=PrimeField(101))
x, y, z = R.gens()


def test_power_examples():
    assert ideal_equal(ideal_power(Ideal(R, [x, y]), 2), Ideal(R, [x * x, x * y, y * y]))
    J = build_ideal(gr.cycle_graph(3), "binomial")
    assert ideal_equal(ideal_power(J, 1), J)
    assert len(ideal_power(J, 2).generators) == 6


def test_intersect_examples():
    assert ideal_equal(ideal_intersect(Ideal(R, [x]), Ideal(R, [y])), Ideal(R, [x * y]))
    assert ideal_equal(ideal_intersect(Ideal(R, [x * x]), Ideal(R, [x])), Ideal(R, [x * x]))
    g = gr.path_graph(3)
    J = build_ideal(g, "binomial")
    f12 = J.generators[0]
    assert ideal_equal(ideal_intersect(J, Ideal(J.ring, [f12])), Ideal(J.ring, [f12]))


def test_colon_examples():
    assert ideal_equal(ideal_colon(Ideal(R, [x * x]), x), Ideal(R, [x]))
    assert ideal_equal(ideal_colon(Ideal(R, [x * y]), x), Ideal(R, [y]))
    # path 1-3-2 with e = {1,2}: the completion adds nothing, so the colon by
    # g_12 is the swapped binomial ideal of the path itself
    g = gr.Graph(3, [(1, 3), (2, 3)])
    assert gr.edge_completion(g, (1, 2)) == g
    S = edge_ring(3)
    lhs = ideal_colon(build_ideal(g, "parity"), edge_generator(S, 3, (1, 2), "parity"))
    assert ideal_equal(lhs, phi_ideal(build_ideal(g, "binomial"), gr.bipartition(g)))
    with pytest.raises(ValueError):
        ideal_colon(Ideal(R, [x]), R.zero())


def test_equal_examples():
    assert ideal_equal(Ideal(R, [x, y]), Ideal(R, [y, x + y]))
    assert not ideal_equal(Ideal(R, [x * x]), Ideal(R, [x]))
    g = gr.path_graph(4)
    assert ideal_equal(phi_ideal(build_ideal(g, "parity"), gr.bipartition(g)),
                       build_ideal(g, "binomial"))


def test_regular_sequence_examples():
    assert is_regular_sequence([x, y])
    assert not is_regular_sequence([x, x])
    assert not is_regular_sequence([x, R.one()])
    for n in range(2, 6):
        assert is_regular_sequence(build_ideal(gr.path_graph(n), "binomial").generators)


def test_d_sequence_examples():
    assert is_d_sequence([x, y, z])
    # x^2, x is not a d-sequence: (x^2) : x*x = (1) but (x^2) : x = (x)
    assert not is_d_sequence([x * x, x])
    assert is_d_sequence([x * x, x * y]) is False


def test_obs24_examples():
    assert check_obs24([x, y], 1, 2)
    assert check_obs24([x, y], 2, 3)
    # a non-d-sequence where the identity breaks: (x^4, x^3y, x^2y^2) : x^2 = (x^2, xy, y^2)
    assert not is_d_sequence([x * x, x * y])
    assert not check_obs24([x * x, x * y], 1, 2)


def _monomials(ring, d):
    out = []
    for combo in itertools.combinations_with_replacement(range(ring.nvars), d):
        e = [0] * ring.nvars
        for i in combo:
            e[i] += 1
        out.append(ring.monomial(e))
    return out


def _colon_dim_by_linear_algebra(I, f, d):
    """dim_k (I : f)_d as the kernel of g -> NF(g*f) on degree-d forms."""
    gb = I.gb()
    ring = I.ring
    rows = []
    cols = {}
    for K in _monomials(ring, d):
        m = type(f)(ring, {K: 1})
        r = normal_form(m * f, gb)
        rows.append({cols.setdefault(k, len(cols)): v for k, v in r.terms.items()})
    mons = _monomials(ring, d)
    return len(mons) - rank_mod_p(rows, ring.p)


def _dim_in_degree(J, d):
    leads = [g.lead_key() for g in J.gb()]
    return sum(1 for K in _monomials(J.ring, d) if any(J.ring.divides(L, K) for L in leads))


@st.composite
def homogeneous_forms(draw, deg):
    mons = _monomials(R, deg)
    f = R.zero()
    for K in draw(st.lists(st.sampled_from(mons), min_size=1, max_size=3, unique=True)):
        f = f + R.const(draw(st.integers(1, 100))) * type(x)(R, {K: 1})
    return f


@given(st.lists(homogeneous_forms(2), min_size=1, max_size=3), homogeneous_forms(1))
def test_colon_against_linear_algebra(gens, f):
    I = Ideal(R, gens)
    C = ideal_colon(I, f)
    for g in C.generators:
        assert I.contains(g * f)
    assert I.is_subset_of(C)
    for d in range(0, 4):
        assert _colon_dim_by_linear_algebra(I, f, d) == _dim_in_degree(C, d)


@given(st.lists(homogeneous_forms(2), min_size=1, max_size=3), st.integers(1, 3))
def test_power_monotone(gens, t):
    I = Ideal(R, gens)
    assert ideal_power(I, t + 1).is_subset_of(ideal_power(I, t))


@given(st.lists(homogeneous_forms(2), min_size=1, max_size=3),
       st.lists(homogeneous_forms(1), min_size=1, max_size=2))
def test_intersection_contained_in_both(a, b):
    I, J = Ideal(R, a), Ideal(R, b)
    K = ideal_intersect(I, J)
    assert K.is_subset_of(I) and K.is_subset_of(J)
    assert (I * J).is_subset_of(K)
