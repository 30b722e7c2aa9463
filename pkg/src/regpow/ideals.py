"""Ideals with cached Groebner bases: powers, intersections, colons, and the
sequence conditions (regular sequence, d-sequence, colon/power identity)."""

from __future__ import annotations

import threading
from itertools import combinations_with_replacement

from .polyring import Polynomial, Ring, RingMismatch, buchberger, divide_exact, normal_form


class Ideal:
    """An ideal given by generators; the reduced Groebner basis is memoized.

    Instances are treated as immutable.  Concurrent readers may race to fill
    the cache; each computes the same unique reduced basis, so the race is
    harmless.
    """

    def __init__(self, ring, generators=()):
        self.ring = ring
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be polynomials")
            if g.ring != ring:
                raise RingMismatch("generator lives in a different ring")
            if g.terms:
                gens.append(g)
        self.generators = tuple(gens)
        self._gb = None
        self._lock = threading.Lock()

    def __repr__(self):
        shown = ", ".join(str(g) for g in self.generators[:4])
        more = ", ..." if len(self.generators) > 4 else ""
        return f"Ideal({shown}{more})"

    def __len__(self):
        return len(self.generators)

    def gb(self, deadline=None):
        gb = self._gb
        if gb is None:
            gb = tuple(buchberger(list(self.generators), deadline=deadline))
            with self._lock:
                if self._gb is None:
                    self._gb = gb
                gb = self._gb
        return list(gb)

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return any(g.is_constant() for g in self.gb())

    def contains(self, f):
        if f.ring != self.ring:
            raise RingMismatch("polynomial lives in a different ring")
        return not normal_form(f, self.gb()).terms

    def reduce(self, f):
        return normal_form(f, self.gb())

    def is_subset_of(self, other):
        gb = other.gb()
        return all(not normal_form(g, gb).terms for g in self.generators)

    def __add__(self, other):
        if other.ring != self.ring:
            raise RingMismatch("ideals live in different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other):
        return Ideal(self.ring, _dedupe(a * b for a in self.generators for b in other.generators))

    def __pow__(self, t):
        return ideal_power(self, t)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def initial_ideal(self):
        """Leading monomials of the reduced Groebner basis (as exponent tuples)."""
        return [g.lead_exponents() for g in self.gb()]


def _dedupe(polys):
    seen = set()
    out = []
    for f in polys:
        f = f.monic()
        if f.terms and f not in seen:
            seen.add(f)
            out.append(f)
    return out


def ideal_power(I, t):
    """Ideal generated by all t-fold products of the generators of ``I``."""
    if t < 1:
        raise ValueError("power must be a positive integer")
    if t == 1:
        return Ideal(I.ring, I.generators)
    prods = []
    for combo in combinations_with_replacement(range(len(I.generators)), t):
        f = I.ring.one()
        for i in combo:
            f = f * I.generators[i]
        prods.append(f)
    return Ideal(I.ring, _dedupe(prods))


def ideal_equal(I, J, deadline=None):
    if I.ring != J.ring:
        raise RingMismatch("ideals live in different rings")
    a = I.gb(deadline)
    b = J.gb(deadline)
    return len(a) == len(b) and all(f == g for f, g in zip(a, b))


def _elim_ring(ring):
    name = "w"
    while name in ring.names:
        name += "_"
    return Ring((name,) + ring.names, field=ring.field, order="elim", n_elim=1)


def ideal_intersect(I, J, deadline=None):
    """``I`` intersected with ``J`` via elimination of ``w`` from ``w*I + (1-w)*J``.

    The auxiliary variable has degree 0, so homogeneous input stays
    homogeneous and the basis is computed degree by degree.
    """
    if I.ring != J.ring:
        raise RingMismatch("ideals live in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    big = _elim_ring(ring)
    w = big.var(0)
    gens = [w * big.embed_from(g, 1) for g in I.generators]
    gens += [big.embed_from(g, 1) - w * big.embed_from(g, 1) for g in J.generators]
    gb = buchberger(gens, deadline=deadline)
    keep = []
    for g in gb:
        if g.lead_exponents()[0] == 0:
            keep.append(big.restrict_to(g, ring, 1))
    return Ideal(ring, keep)


def ideal_colon(I, f, deadline=None):
    """``I : f = {g : g*f in I}`` computed as ``(I cap (f)) / f``."""
    if not f.terms:
        raise ValueError("colon by the zero polynomial")
    if f.ring != I.ring:
        raise RingMismatch("polynomial lives in a different ring")
    if I.is_zero():
        return Ideal(I.ring)
    inter = ideal_intersect(I, Ideal(I.ring, [f]), deadline=deadline)
    quotients = []
    for g in inter.generators:
        try:
            quotients.append(divide_exact(g, f))
        except ArithmeticError as exc:
            raise ArithmeticError("intersection generator not divisible by f") from exc
    return Ideal(I.ring, quotients)


def is_regular_sequence(fs, deadline=None):
    """True iff each ``f_i`` is a nonzerodivisor modulo its predecessors and
    the ideal they generate is proper."""
    fs = list(fs)
    if not fs:
        return True
    ring = fs[0].ring
    for i, f in enumerate(fs):
        prev = Ideal(ring, fs[:i])
        if Ideal(ring, fs[: i + 1]).is_unit():
            return False
        if not ideal_equal(ideal_colon(prev, f, deadline), prev, deadline):
            return False
    return True


def is_d_sequence(us, deadline=None):
    """Check ``((u_0..u_i) : u_{i+1} u_j) == ((u_0..u_i) : u_j)`` for all
    ``0 <= i <= n-1`` and ``j >= i+1`` (with ``u_0 = 0``)."""
    us = list(us)
    n = len(us)
    if n == 0:
        return True
    ring = us[0].ring
    for i in range(n):
        prefix = Ideal(ring, us[:i])
        for j in range(i, n):
            lhs = ideal_colon(prefix, us[i] * us[j], deadline)
            rhs = ideal_colon(prefix, us[j], deadline)
            if not ideal_equal(lhs, rhs, deadline):
                return False
    return True


def check_obs24(us, i, t, deadline=None):
    """Compare ``((u_0..u_{i-1}) + U^t) : u_i`` with ``((u_0..u_{i-1}) : u_i) + U^(t-1)``.

    ``i`` is 1-based as in the usual statement; ``t >= 1``.
    """
    us = list(us)
    if not 1 <= i <= len(us):
        raise ValueError("index out of range")
    if t < 1:
        raise ValueError("power must be at least 1")
    ring = us[0].ring
    U = Ideal(ring, us)
    prefix = Ideal(ring, us[: i - 1])
    lhs = ideal_colon(prefix + ideal_power(U, t), us[i - 1], deadline)
    lower = ideal_power(U, t - 1) if t > 1 else Ideal(ring, [ring.one()])
    rhs = ideal_colon(prefix, us[i - 1], deadline) + lower
    return ideal_equal(lhs, rhs, deadline)
