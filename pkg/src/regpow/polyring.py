"""Sparse polynomials over prime fields and a homogeneous Buchberger engine.

Monomials are packed into a single Python integer whose natural integer order
*is* the monomial order, so comparing, multiplying and dividing monomials are
plain integer operations.  Exponents live in 8-bit fields (7 value bits and a
guard bit used for divisibility tests), which bounds every exponent by 127.

For a ring with ``N`` variables the packed exponent vector is::

    P = e[0] + e[1]*2**8 + ... + e[N-1]*2**(8*(N-1))

and the stored key is ``K = (H << 8*N) - P`` where ``H`` is a weighted degree
(total degree for degrevlex).  Larger ``K`` means larger monomial: first by
``H``, then by the reverse-lexicographic tie break on ``P``.  ``K`` is additive
under multiplication, so ``K(a*b) == K(a) + K(b)``.
"""

from __future__ import annotations

import heapq
import re
from itertools import combinations

W = 8
FIELD_MASK = (1 << W) - 1
MAX_EXP = (1 << (W - 1)) - 1


class RingMismatch(ValueError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class BudgetExceeded(TimeoutError):
    """A computation ran past its deadline."""


class PrimeField:
    """The field Z/pZ."""

    def __init__(self, p=32003):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def __call__(self, a):
        return int(a) % self.p

    def symmetric(self, a):
        """Representative of ``a`` in (-p/2, p/2]."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


DEFAULT_FIELD = PrimeField(32003)


class Ring:
    """Polynomial ring over a prime field with a packed monomial order.

    ``order`` is ``"degrevlex"`` or ``"elim"``.  The elimination order treats
    the first ``n_elim`` variables as a block that is compared first; those
    variables carry degree 0 in the grading, the remaining ones degree 1.
    """

    def __init__(self, names, field=None, order="degrevlex", n_elim=0):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.names)
        self.field = field if field is not None else DEFAULT_FIELD
        self.p = self.field.p
        if order not in ("degrevlex", "elim"):
            raise ValueError(f"unknown monomial order {order!r}")
        if order == "elim" and not 0 < n_elim < self.nvars:
            raise ValueError("elimination order needs 0 < n_elim < nvars")
        self.order = order
        self.n_elim = n_elim if order == "elim" else 0
        self.shift = W * self.nvars
        self.guard = sum(1 << (W * i + W - 1) for i in range(self.nvars))
        self._index = {name: i for i, name in enumerate(self.names)}
        self._elim_mask = sum(FIELD_MASK << (W * i) for i in range(self.n_elim))

    # -- identity -------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, Ring) and self.names == other.names
                and self.field == other.field and self.order == other.order
                and self.n_elim == other.n_elim)

    def __hash__(self):
        return hash((self.names, self.p, self.order, self.n_elim))

    def __repr__(self):
        return (f"Ring({list(self.names)}, p={self.p}, order={self.order!r}"
                + (f", n_elim={self.n_elim})" if self.n_elim else ")"))

    # -- monomial encoding ----------------------------------------------
    def head(self, P):
        """Weighted degree ``H`` of a packed exponent vector."""
        if self.n_elim:
            block = P & self._elim_mask
            rest = P >> (W * self.n_elim)
            return ((block % FIELD_MASK) << W) | (rest % FIELD_MASK)
        return P % FIELD_MASK

    def key_from_packed(self, P):
        return (self.head(P) << self.shift) - P

    def packed(self, K):
        H = -((-K) >> self.shift)
        return (H << self.shift) - K

    def degree_of_key(self, K):
        """Grading degree (elimination variables have degree 0)."""
        H = -((-K) >> self.shift)
        return H & FIELD_MASK if self.n_elim else H

    def monomial(self, exps):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        P = 0
        for i, e in enumerate(exps):
            if e < 0 or e > MAX_EXP:
                raise OverflowError(f"exponent {e} out of range 0..{MAX_EXP}")
            P |= e << (W * i)
        if sum(exps) >= FIELD_MASK:
            raise OverflowError("total degree too large for packed monomials")
        return self.key_from_packed(P)

    def exponents(self, K):
        P = self.packed(K)
        return tuple((P >> (W * i)) & FIELD_MASK for i in range(self.nvars))

    def divides(self, Ka, Kb):
        """True iff monomial a divides monomial b."""
        g = self.guard
        return ((self.packed(Kb) | g) - self.packed(Ka)) & g == g

    def lcm_packed(self, Pa, Pb):
        g = self.guard
        ge = (((Pa | g) - Pb) & g) >> (W - 1)
        mask = ge * FIELD_MASK
        return (Pa & mask) | (Pb & ~mask)

    def coprime_packed(self, Pa, Pb):
        g = self.guard
        ge = (((Pa | g) - Pb) & g) >> (W - 1)
        mask = ge * FIELD_MASK
        return ((Pb & mask) | (Pa & ~mask)) == 0

    def var(self, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else self._index[name_or_index]
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {self.monomial(exps): 1})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def index(self, name):
        return self._index[name]

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {0: 1})

    def const(self, c):
        c %= self.p
        return Polynomial(self, {0: c} if c else {})

    # -- conversions ----------------------------------------------------
    def embed_from(self, f, offset):
        """Copy polynomial ``f`` of a smaller ring into this ring.

        The variables of ``f.ring`` land at indices ``offset..offset+n-1``.
        """
        src = f.ring
        terms = {}
        for K, c in f.terms.items():
            P = src.packed(K) << (W * offset)
            terms[self.key_from_packed(P)] = c
        return Polynomial(self, terms)

    def restrict_to(self, f, target, offset):
        """Inverse of :meth:`embed_from`; all other variables must be absent."""
        terms = {}
        low = (1 << (W * offset)) - 1
        for K, c in f.terms.items():
            P = self.packed(K)
            if P & low:
                raise ValueError("polynomial involves an eliminated variable")
            P >>= W * offset
            if P >> target.shift:
                raise ValueError("polynomial involves an eliminated variable")
            terms[target.key_from_packed(P)] = c
        return Polynomial(target, terms)

    def substitute_vars(self, f, perm):
        """Apply the variable permutation ``i -> perm[i]`` to ``f``."""
        terms = {}
        for K, c in f.terms.items():
            e = self.exponents(K)
            new = [0] * self.nvars
            for i, ei in enumerate(e):
                new[perm[i]] += ei
            terms[self.monomial(new)] = c
        return Polynomial(self, terms)

    # -- printing and parsing -------------------------------------------
    def format_monomial(self, K):
        parts = []
        for name, e in zip(self.names, self.exponents(K)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    _TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")

    def parse(self, text):
        """Parse strings such as ``"3*x1*y2^2 - x2*y1 + 5"``."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial string")
        terms = {}
        pos = 0
        first = True
        while pos < len(text):
            m = self._TERM.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
            sign, body = m.group(1), m.group(2).strip()
            if sign is None and not first:
                raise ValueError(f"missing operator before {body!r}")
            first = False
            pos = m.end()
            coeff = -1 if sign == "-" else 1
            exps = [0] * self.nvars
            for factor in body.split("*"):
                factor = factor.strip()
                if not factor:
                    raise ValueError(f"empty factor in {body!r}")
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                name, _, power = factor.partition("^")
                name = name.strip()
                if name not in self._index:
                    raise ValueError(f"unknown variable {name!r}")
                e = int(power) if power else 1
                exps[self._index[name]] += e
            K = self.monomial(exps)
            v = (terms.get(K, 0) + coeff) % self.p
            if v:
                terms[K] = v
            else:
                terms.pop(K, None)
        return Polynomial(self, terms)


class Polynomial:
    """Immutable sparse polynomial: a map from packed monomial to coefficient."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # -- structure ------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def lead_key(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms)
        return self._lead

    def lead_coeff(self):
        return self.terms[self.lead_key()]

    def lead_exponents(self):
        return self.ring.exponents(self.lead_key())

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def degree(self):
        if not self.terms:
            return -1
        return max(self.ring.degree_of_key(K) for K in self.terms)

    def is_homogeneous(self):
        degs = {self.ring.degree_of_key(K) for K in self.terms}
        return len(degs) <= 1

    def monic(self):
        if not self.terms:
            return self
        p = self.ring.p
        inv = pow(self.lead_coeff(), -1, p)
        if inv == 1:
            return self
        return Polynomial(self.ring, {K: c * inv % p for K, c in self.terms.items()})

    def is_constant(self):
        return not self.terms or set(self.terms) == {0}

    # -- arithmetic -----------------------------------------------------
    def _check(self, other):
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatch("polynomials live in different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        terms = dict(self.terms)
        for K, c in other.terms.items():
            v = (terms.get(K, 0) + c) % p
            if v:
                terms[K] = v
            else:
                terms.pop(K, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {K: p - c for K, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {K: v * c % p for K, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        terms = {}
        for K1, c1 in self.terms.items():
            for K2, c2 in other.terms.items():
                K = K1 + K2
                v = (terms.get(K, 0) + c1 * c2) % p
                if v:
                    terms[K] = v
                else:
                    del terms[K]
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, K, c):
        p = self.ring.p
        return Polynomial(self.ring, {K1 + K: c1 * c % p for K1, c1 in self.terms.items()})

    # -- comparison and printing ----------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        out = []
        for K, c in self.sorted_terms():
            c = field.symmetric(c)
            mono = self.ring.format_monomial(K)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            out.append((sign, body))
        first_sign, first_body = out[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


# ---------------------------------------------------------------------------
# Division and normal forms
# ---------------------------------------------------------------------------

class _Reducer:
    """A monic basis element prepared for repeated use in reductions."""

    __slots__ = ("lead", "lead_packed", "tail", "index")

    def __init__(self, ring, poly, index):
        f = poly.monic()
        self.lead = f.lead_key()
        self.lead_packed = ring.packed(self.lead)
        self.tail = [(K, c) for K, c in f.sorted_terms()[1:]]
        self.index = index


def _prepare(ring, basis):
    return [_Reducer(ring, g, i) for i, g in enumerate(basis) if g.terms]


def _find_reducer(ring, reducers, K):
    g = ring.guard
    P = (ring.packed(K)) | g
    for r in reducers:
        if (P - r.lead_packed) & g == g:
            return r
    return None


def _reduce_terms(ring, terms, reducers, full=True, quotients=None, scales=None):
    """Reduce the dict ``terms`` in place; returns the remainder dict.

    When ``quotients`` is a list of dicts, the multiples subtracted for each
    reducer are accumulated there (in terms of the original, non-monic basis
    element when ``scales`` gives the lead-coefficient inverses).
    """
    p = ring.p
    heap = [-K for K in terms]
    heapq.heapify(heap)
    rem = {}
    while heap:
        K = -heapq.heappop(heap)
        c = terms.pop(K, 0)
        if not c:
            continue
        r = _find_reducer(ring, reducers, K)
        if r is None:
            rem[K] = c
            if not full:
                for K2 in terms:
                    rem[K2] = terms[K2]
                return rem
            continue
        q = K - r.lead
        if quotients is not None:
            qd = quotients[r.index]
            coeff = c * scales[r.index] % p if scales else c
            v = (qd.get(q, 0) + coeff) % p
            if v:
                qd[q] = v
            else:
                qd.pop(q, None)
        for K2, c2 in r.tail:
            Kn = K2 + q
            v = terms.get(Kn)
            if v is None:
                terms[Kn] = (-c * c2) % p
                heapq.heappush(heap, -Kn)
            else:
                v = (v - c * c2) % p
                if v:
                    terms[Kn] = v
                else:
                    del terms[Kn]
    return rem


def normal_form(f, basis):
    """Remainder of ``f`` under multivariate division by ``basis``.

    No term of the result is divisible by a leading monomial of ``basis``.
    """
    ring = f.ring
    for g in basis:
        if g.ring != ring:
            raise RingMismatch("basis element in a different ring")
    reducers = _prepare(ring, basis)
    return Polynomial(ring, _reduce_terms(ring, dict(f.terms), reducers))


def divide(f, basis):
    """Multivariate division: returns ``(quotients, remainder)``.

    ``f == sum(q*g for q, g in zip(quotients, basis)) + remainder`` exactly.
    """
    ring = f.ring
    reducers = [_Reducer(ring, g, i) for i, g in enumerate(basis)]
    scales = [pow(g.lead_coeff(), -1, ring.p) for g in basis]
    quot = [dict() for _ in basis]
    rem = _reduce_terms(ring, dict(f.terms), reducers, quotients=quot, scales=scales)
    return [Polynomial(ring, q) for q in quot], Polynomial(ring, rem)


def divide_exact(f, g):
    """Return ``f / g``; raises ``ArithmeticError`` if ``g`` does not divide ``f``."""
    (q,), r = divide(f, [g])
    if r.terms:
        raise ArithmeticError("division is not exact")
    return q


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def s_polynomial(f, g):
    ring = f.ring
    Pf, Pg = ring.packed(f.lead_key()), ring.packed(g.lead_key())
    L = ring.key_from_packed(ring.lcm_packed(Pf, Pg))
    fm, gm = f.monic(), g.monic()
    return fm.mul_term(L - fm.lead_key(), 1) - gm.mul_term(L - gm.lead_key(), 1)


class _Pair:
    __slots__ = ("i", "j", "lcm", "deg")

    def __init__(self, i, j, lcm, deg):
        self.i, self.j, self.lcm, self.deg = i, j, lcm, deg


def buchberger(gens, deadline=None):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by sugar degree (the degree of the lcm for homogeneous
    input) with the Gebauer-Moeller criteria and the coprime-lead criterion.
    The output is monic, interreduced and sorted by increasing leading
    monomial; it does not depend on the order of ``gens``.
    """
    import time

    gens = [g for g in gens if g.terms]
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generators live in different rings")
    p = ring.p
    g_mask = ring.guard

    def divides_packed(Pa, Pb):
        return ((Pb | g_mask) - Pa) & g_mask == g_mask

    polys = []      # every basis element ever added (monic)
    reducer_of = []
    sugar = []
    lead_p = []
    active = []     # indices of elements not made redundant
    pairs = []

    def update(h):
        nonlocal active, pairs
        Ph = lead_p[h]
        cand = []
        for g in active:
            L = ring.lcm_packed(lead_p[g], Ph)
            cand.append((g, L, ring.coprime_packed(lead_p[g], Ph)))
        # Gebauer-Moeller criterion M/F on the new pairs
        kept = []
        for idx, (g, L, cop) in enumerate(cand):
            redundant = False
            for jdx, (g2, L2, cop2) in enumerate(cand):
                if jdx == idx:
                    continue
                if divides_packed(L2, L):
                    if L2 != L:
                        redundant = True
                        break
                    # equal lcms: keep a single representative, preferring coprime
                    if cop2 and not cop:
                        redundant = True
                        break
                    if cop2 == cop and jdx < idx:
                        redundant = True
                        break
            if not redundant:
                kept.append((g, L, cop))
        new_pairs = []
        for g, L, cop in kept:
            if cop:
                continue
            Lk = ring.key_from_packed(L)
            s = max(sugar[g] + ring.degree_of_key(Lk) - ring.degree_of_key(polys[g].lead_key()),
                    sugar[h] + ring.degree_of_key(Lk) - ring.degree_of_key(polys[h].lead_key()))
            new_pairs.append(_Pair(g, h, L, s))
        # criterion B on old pairs
        old = []
        for pr in pairs:
            if divides_packed(Ph, pr.lcm):
                Li = ring.lcm_packed(lead_p[pr.i], Ph)
                Lj = ring.lcm_packed(lead_p[pr.j], Ph)
                if Li != pr.lcm and Lj != pr.lcm:
                    continue
            old.append(pr)
        pairs = old + new_pairs
        active = [g for g in active if not divides_packed(Ph, lead_p[g])] + [h]

    def add(poly, s):
        poly = poly.monic()
        polys.append(poly)
        reducer_of.append(_Reducer(ring, poly, len(polys) - 1))
        sugar.append(s)
        lead_p.append(ring.packed(poly.lead_key()))
        update(len(polys) - 1)

    # initial generators: interreduce by adding them in increasing lead order
    for g in sorted(gens, key=lambda f: (f.degree(), f.lead_key())):
        reducers = [reducer_of[i] for i in active]
        r = _reduce_terms(ring, dict(g.terms), reducers)
        if r:
            add(Polynomial(ring, r), g.degree())

    while pairs:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded("Groebner basis computation exceeded its budget")
        dmin = min(pr.deg for pr in pairs)
        batch = [pr for pr in pairs if pr.deg == dmin]
        pairs = [pr for pr in pairs if pr.deg != dmin]
        batch.sort(key=lambda pr: ring.key_from_packed(pr.lcm))
        for pr in batch:
            sp = s_polynomial(polys[pr.i], polys[pr.j])
            reducers = [reducer_of[i] for i in active]
            r = _reduce_terms(ring, dict(sp.terms), reducers)
            if r:
                add(Polynomial(ring, r), pr.deg)

    return interreduce([polys[i] for i in active])


def interreduce(basis):
    """Reduced Groebner basis from a Groebner basis (minimalize + tail reduce)."""
    basis = [g.monic() for g in basis if g.terms]
    if not basis:
        return []
    ring = basis[0].ring
    basis.sort(key=lambda f: f.lead_key())
    minimal = []
    for g in basis:
        if not any(ring.divides(h.lead_key(), g.lead_key()) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = _prepare(ring, minimal[:i] + minimal[i + 1:])
        lead = g.lead_key()
        tail = dict(g.terms)
        del tail[lead]
        r = _reduce_terms(ring, tail, others)
        r[lead] = 1
        out.append(Polynomial(ring, r))
    out.sort(key=lambda f: f.lead_key())
    return out


def is_groebner(basis):
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    basis = [g for g in basis if g.terms]
    for f, g in combinations(basis, 2):
        if normal_form(s_polynomial(f, g), basis).terms:
            return False
    return True
