"""Graded free resolutions, Betti tables, regularity, dimension and height.

The resolution of ``R/I`` is built with Schreyer's construction.  Level ``k``
holds the basis of the free module ``F_k``; each basis element remembers the
element ``a`` of ``F_{k-1}`` whose leading term it was built on, and its
"total monomial" ``T``: the product of the leading monomials down to ``F_0``.
With the Schreyer order, a term ``m*e_b`` of ``F_k`` is ordered by the pair
``(m*T_b, b)``, which we pack into the single integer ``(m*T_b)*RADIX + b``.
Level elements are numbered grouped by the element they sit over, which makes
this packed order agree with the recursive Schreyer order.

Minimal graded Betti numbers are read off the non-minimal resolution as the
homology of ``F (x) k``: only the constant entries of the differentials
matter, so ``beta_{k,j} = f_{k,j} - rank_j(d_k) - rank_j(d_{k+1})``.
"""

from __future__ import annotations

import heapq
import json
import time
from dataclasses import dataclass, field

from .polyring import BudgetExceeded, Polynomial, buchberger

RADIX = 1 << 32


class ResolutionError(RuntimeError):
    pass


@dataclass(frozen=True)
class GradedFreeModule:
    rank: int
    shifts: tuple

    def __post_init__(self):
        if len(self.shifts) != self.rank:
            raise ValueError("one shift per basis element")


@dataclass
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}`` of ``R/I``; zero entries are omitted."""

    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {(int(i), int(j)): int(r) for (i, j), r in self.entries.items() if r}

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def regularity(self):
        if not self.entries:
            raise ValueError("Betti table of the zero module has no regularity")
        return max(j - i for i, j in self.entries)

    def pdim(self):
        if not self.entries:
            raise ValueError("Betti table of the zero module has no projective dimension")
        return max(i for i, _ in self.entries)

    def total(self, i):
        return sum(r for (a, _), r in self.entries.items() if a == i)

    def hilbert_numerator(self):
        """Alternating sum ``sum (-1)^i beta_{i,j} t^j`` as ``{j: coeff}``."""
        num = {}
        for (i, j), r in self.entries.items():
            num[j] = num.get(j, 0) + (-1) ** i * r
        return {j: c for j, c in num.items() if c}

    def to_json(self):
        rows = [[i, j, r] for (i, j), r in sorted(self.entries.items())]
        out = {"entries": rows}
        if self.entries:
            out["regularity"] = self.regularity()
            out["pdim"] = self.pdim()
        return out

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        table = cls({(i, j): r for i, j, r in data["entries"]})
        if table.entries:
            if "regularity" in data and data["regularity"] != table.regularity():
                raise ValueError("stored regularity disagrees with entries")
            if "pdim" in data and data["pdim"] != table.pdim():
                raise ValueError("stored pdim disagrees with entries")
        return table

    def __str__(self):
        if not self.entries:
            return "(zero module)"
        pd = self.pdim()
        reg = self.regularity()
        lines = ["      " + " ".join(f"{i:>5}" for i in range(pd + 1))]
        for row in range(reg + 1):
            vals = []
            for i in range(pd + 1):
                r = self.entries.get((i, i + row), 0)
                vals.append(f"{r:>5}" if r else "    .")
            lines.append(f"{row:>4}: " + " ".join(vals))
        return "\n".join(lines)


@dataclass
class FreeResolution:
    """A graded free resolution ``... -> F_1 -> F_0 = R`` of ``R/I``.

    ``differentials[k-1]`` is the matrix of ``d_k : F_k -> F_{k-1}`` stored
    column-wise: ``columns[a] = {row: Polynomial}``.
    """

    ring: object
    modules: list
    differentials: list
    minimal: bool = False

    def length(self):
        return len(self.modules) - 1

    def check_exact(self):
        """All consecutive compositions vanish identically."""
        for k in range(1, len(self.differentials)):
            dk = self.differentials[k - 1]
            dk1 = self.differentials[k]
            for col in dk1:
                acc = {}
                for mid, entry in col.items():
                    for row, e2 in dk[mid].items():
                        acc[row] = acc.get(row, self.ring.zero()) + e2 * entry
                if any(v.terms for v in acc.values()):
                    return False
        return True

    def check_homogeneous(self):
        """Each entry is homogeneous of degree (source shift - target shift)."""
        for k, dk in enumerate(self.differentials, start=1):
            src = self.modules[k].shifts
            tgt = self.modules[k - 1].shifts
            for a, col in enumerate(dk):
                for row, entry in col.items():
                    degs = {self.ring.degree_of_key(K) for K in entry.terms}
                    if degs and degs != {src[a] - tgt[row]}:
                        return False
        return True

    def has_unit_entries(self):
        return any(entry.terms and entry.is_constant()
                   for dk in self.differentials for col in dk for entry in col.values())

    def betti(self):
        if not self.minimal:
            raise ValueError("Betti numbers are intrinsic only for a minimal resolution")
        entries = {}
        for i, mod in enumerate(self.modules):
            for s in mod.shifts:
                entries[(i, s)] = entries.get((i, s), 0) + 1
        return BettiTable(entries)


# ---------------------------------------------------------------------------
# Schreyer frame
# ---------------------------------------------------------------------------

class _Elem:
    __slots__ = ("comp", "T", "TP", "deg", "vec", "consts")

    def __init__(self, comp, T, TP, deg):
        self.comp = comp
        self.T = T
        self.TP = TP
        self.deg = deg
        self.vec = None
        self.consts = None


class SchreyerComputation:
    """Runs the Schreyer construction level by level.

    ``levels[k]`` lists the basis elements of ``F_k`` (``levels[0]`` is the
    single generator of ``R``).  After :meth:`run`, ``elem.vec`` holds
    ``d_k(elem)`` as a descending list of ``(packed_key, coeff)`` and
    ``elem.consts`` the constant entries ``{row: coeff}``.
    """

    def __init__(self, ring, gb, deadline=None, keep_vectors=True):
        self.ring = ring
        self.deadline = deadline
        self.keep_vectors = keep_vectors
        root = _Elem(-1, 0, 0, 0)
        self.levels = [[root]]
        self.unit = any(g.is_constant() for g in gb)
        if self.unit or not gb:
            return
        ring = self.ring
        first = []
        for g in gb:
            g = g.monic()
            K = g.lead_key()
            e = _Elem(0, K, ring.packed(K), ring.degree_of_key(K))
            e.vec = [(Kt * RADIX, c) for Kt, c in g.sorted_terms()]
            e.consts = {}
            first.append(e)
        first.sort(key=lambda e: ring.exponents(e.T))
        self.levels.append(first)

    def _check_time(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("resolution exceeded its time budget")

    def run(self, length_bound=None, max_level=None):
        """Build levels until the frame is empty (or ``max_level`` is reached,
        after which only Betti numbers below ``max_level`` are meaningful)."""
        ring = self.ring
        bound = length_bound if length_bound is not None else ring.nvars
        if self.unit or len(self.levels) == 1:
            return self
        while max_level is None or len(self.levels) <= max_level:
            cur = self.levels[-1]
            nxt = self._frame(cur)
            if not nxt:
                break
            if len(self.levels) > bound:
                raise ResolutionError("resolution longer than the length bound")
            self._fill(cur, nxt)
            self.levels.append(nxt)
            if not self.keep_vectors and len(self.levels) >= 4:
                # only the newest two levels are needed to go on
                for e in self.levels[-3]:
                    e.vec = None
        return self

    def _frame(self, cur):
        """Leading terms of the next level: minimal generators of
        ``(mu_b : mu_a)`` over earlier ``b`` sitting on the same element."""
        ring = self.ring
        g = ring.guard
        groups = {}
        for idx, e in enumerate(cur):
            groups.setdefault(e.comp, []).append(idx)
        prev = self.levels[-2]
        new = []
        for comp, idxs in groups.items():
            Tc = prev[comp].T
            mus = [ring.packed(cur[i].T - Tc) for i in idxs]
            for pos in range(1, len(idxs)):
                self._check_time()
                Pa = mus[pos]
                qs = set()
                for Pb in mus[:pos]:
                    L = ring.lcm_packed(Pa, Pb)
                    qs.add(L - Pa)
                qs = sorted(qs, key=lambda P: ring.head(P))
                minimal = []
                for q in qs:
                    if not any(((q | g) - m) & g == g for m in minimal):
                        minimal.append(q)
                a = idxs[pos]
                Ta = cur[a].T
                for q in minimal:
                    T = ring.key_from_packed(q) + Ta
                    new.append(_Elem(a, T, ring.packed(T), ring.degree_of_key(T)))
        new.sort(key=lambda e: (e.comp, ring.exponents(ring.key_from_packed(e.TP - cur[e.comp].TP))))
        return new

    def _fill(self, cur, nxt):
        ring = self.ring
        p = ring.p
        g = ring.guard
        packed = ring.packed
        by_comp = {}
        for idx, e in enumerate(cur):
            by_comp.setdefault(e.comp, []).append((e.TP, e.T, idx, e.vec))
        for z in nxt:
            self._check_time()
            a = z.comp
            ea = cur[a]
            qR = (z.T - ea.T) * RADIX
            terms = {}
            heap = []
            for k, c in ea.vec:
                kk = k + qR
                terms[kk] = c
                heap.append(-kk)
            heapq.heapify(heap)
            out = {z.T * RADIX + a: 1}
            consts = {}
            if z.T == ea.T:
                consts[a] = 1
            first = True
            while heap:
                key = -heapq.heappop(heap)
                c = terms.pop(key, 0)
                if not c:
                    continue
                Ktot, comp = divmod(key, RADIX)
                Ptot = packed(Ktot) | g
                found = None
                for TPb, Tb, b, vecb in by_comp.get(comp, ()):
                    if first and b == a:
                        continue
                    if (Ptot - TPb) & g == g:
                        found = (Tb, b, vecb)
                        break
                if found is None:
                    raise ResolutionError("syzygy reduction left a nonzero remainder")
                first = False
                Tb, b, vecb = found
                out_key = Ktot * RADIX + b
                out[out_key] = (out.get(out_key, 0) - c) % p
                if Ktot == Tb:
                    consts[b] = (consts.get(b, 0) - c) % p
                mR = (Ktot - Tb) * RADIX
                it = iter(vecb)
                next(it)
                for k2, c2 in it:
                    kk = k2 + mR
                    v = terms.get(kk)
                    if v is None:
                        terms[kk] = (-c * c2) % p
                        heapq.heappush(heap, -kk)
                    else:
                        v = (v - c * c2) % p
                        if v:
                            terms[kk] = v
                        else:
                            del terms[kk]
            z.vec = sorted(((k, c) for k, c in out.items() if c), reverse=True)
            if z.vec[0][0] != z.T * RADIX + a:
                raise ResolutionError("unexpected leading term in Schreyer syzygy")
            z.consts = {b: c for b, c in consts.items() if c}

    # -- outputs ----------------------------------------------------------
    def frame_ranks(self):
        out = {}
        for k, level in enumerate(self.levels):
            for e in level:
                out[(k, e.deg)] = out.get((k, e.deg), 0) + 1
        return out

    def betti_table(self):
        if self.unit:
            return BettiTable({})
        p = self.ring.p
        counts = self.frame_ranks()
        ranks = {}
        for k in range(2, len(self.levels)):
            by_deg = {}
            for e in self.levels[k]:
                if e.consts:
                    by_deg.setdefault(e.deg, []).append(e.consts)
            for j, rows in by_deg.items():
                ranks[(k, j)] = rank_mod_p(rows, p)
        entries = {}
        for (k, j), f in counts.items():
            b = f - ranks.get((k, j), 0) - ranks.get((k + 1, j), 0)
            if b:
                entries[(k, j)] = b
        return BettiTable(entries)

    def to_resolution(self):
        ring = self.ring
        modules = [GradedFreeModule(len(lv), tuple(e.deg for e in lv)) for lv in self.levels]
        diffs = []
        for k in range(1, len(self.levels)):
            prev = self.levels[k - 1]
            cols = []
            for e in self.levels[k]:
                col = {}
                for key, c in e.vec:
                    Ktot, row = divmod(key, RADIX)
                    m = Ktot - prev[row].T
                    col.setdefault(row, {})[m] = c
                cols.append({row: Polynomial(ring, t) for row, t in col.items()})
            diffs.append(cols)
        return FreeResolution(ring, modules, diffs, minimal=False)


def rank_mod_p(rows, p):
    """Rank over GF(p) of a sparse matrix given as a list of ``{col: value}``."""
    pivots = {}
    rank = 0
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            col = max(row)
            if col not in pivots:
                inv = pow(row[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in row.items()}
                rank += 1
                break
            piv = pivots[col]
            f = row[col]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return rank


def _gb_of(I, deadline=None):
    if hasattr(I, "gb"):
        return I.ring, I.gb(deadline=deadline)
    I = list(I)
    return I[0].ring, buchberger(I, deadline)


def schreyer_resolution(I, length_bound=None, deadline=None):
    """A (generally non-minimal) graded free resolution of ``R/I``."""
    ring, gb = _gb_of(I, deadline)
    if length_bound is not None and length_bound < ring.nvars:
        raise ValueError("length bound must be at least the number of variables")
    comp = SchreyerComputation(ring, gb, deadline=deadline).run(length_bound)
    if comp.unit:
        # R/R = 0: the one-step complex R -> R
        return FreeResolution(ring, [GradedFreeModule(1, (0,)), GradedFreeModule(1, (0,))],
                              [[{0: ring.one()}]], minimal=False)
    return comp.to_resolution()


def minimalize(res):
    """Cancel unit entries by Gaussian elimination until none remain."""
    ring = res.ring
    p = ring.p
    shifts = [list(m.shifts) for m in res.modules]
    diffs = [[dict(col) for col in dk] for dk in res.differentials]
    alive = [set(range(m.rank)) for m in res.modules]
    changed = True
    while changed:
        changed = False
        for k in range(1, len(diffs) + 1):
            dk = diffs[k - 1]
            hit = None
            for a in sorted(alive[k]):
                for b, entry in dk[a].items():
                    if b in alive[k - 1] and entry.terms and entry.is_constant():
                        hit = (a, b, entry.terms[0])
                        break
                if hit:
                    break
            if hit is None:
                continue
            a, b, u = hit
            uinv = pow(u, -1, p)
            col_a = dk[a]
            # d_k' = d_k - d_k[:, a] * u^-1 * d_k[b, :] on the surviving block
            for c in alive[k]:
                if c == a:
                    continue
                col = dk[c]
                e_bc = col.get(b)
                if e_bc is None or not e_bc.terms:
                    continue
                factor = e_bc.scale(uinv)
                for r, e_ra in col_a.items():
                    if r == b:
                        continue
                    nv = col.get(r, ring.zero()) - e_ra * factor
                    if nv.terms:
                        col[r] = nv
                    else:
                        col.pop(r, None)
                col.pop(b, None)
            alive[k].discard(a)
            alive[k - 1].discard(b)
            # drop row a of d_{k+1} and column b of d_{k-1}
            if k < len(diffs):
                for col in diffs[k]:
                    col.pop(a, None)
            changed = True
            break
    modules = []
    new_index = []
    for k, m in enumerate(res.modules):
        keep = sorted(alive[k])
        new_index.append({old: new for new, old in enumerate(keep)})
        modules.append(GradedFreeModule(len(keep), tuple(shifts[k][i] for i in keep)))
    new_diffs = []
    for k in range(1, len(diffs) + 1):
        cols = []
        for a in sorted(alive[k]):
            col = {}
            for r, e in diffs[k - 1][a].items():
                if r in new_index[k - 1] and e.terms:
                    col[new_index[k - 1][r]] = e
            cols.append(col)
        new_diffs.append(cols)
    while len(modules) > 1 and modules[-1].rank == 0:
        modules.pop()
        new_diffs.pop()
    return FreeResolution(ring, modules, new_diffs, minimal=True)


def betti_table(I, deadline=None):
    """Minimal graded Betti numbers of ``R/I``."""
    ring, gb = _gb_of(I, deadline)
    comp = SchreyerComputation(ring, gb, deadline=deadline, keep_vectors=False).run()
    return comp.betti_table()


def betti_numbers_below(I, k, deadline=None):
    """``beta_{i,j}`` for ``i < k`` only, from a resolution truncated at level ``k``."""
    ring, gb = _gb_of(I, deadline)
    comp = SchreyerComputation(ring, gb, deadline=deadline, keep_vectors=False).run(max_level=k)
    table = comp.betti_table()
    return BettiTable({ij: r for ij, r in table.entries.items() if ij[0] < k})


def minimal_generator_count(I, deadline=None):
    """``mu(I)``, read off as the total first Betti number of ``R/I``."""
    if I.is_zero():
        return 0
    return betti_numbers_below(I, 2, deadline).total(1)


def regularity(I, deadline=None):
    return betti_table(I, deadline).regularity()


def proj_dim(I, deadline=None):
    return betti_table(I, deadline).pdim()


# ---------------------------------------------------------------------------
# Monomial-ideal combinatorics: dimension and Hilbert series
# ---------------------------------------------------------------------------

def _supports(exps_list):
    out = set()
    for e in exps_list:
        mask = 0
        for i, v in enumerate(e):
            if v:
                mask |= 1 << i
        out.add(mask)
    # keep minimal supports
    mins = []
    for s in sorted(out, key=lambda m: bin(m).count("1")):
        if not any(m & s == m for m in mins):
            mins.append(s)
    return mins


def _min_transversal(edges, nvars):
    best = [nvars + 1]

    def search(chosen, count):
        if count >= best[0]:
            return
        for e in edges:
            if not e & chosen:
                bits = [i for i in range(nvars) if e >> i & 1]
                for i in bits:
                    search(chosen | (1 << i), count + 1)
                return
        best[0] = count

    search(0, 0)
    return best[0]


def monomial_dimension(exps_list, nvars):
    """Krull dimension of ``R/M`` for the monomial ideal with these generators.

    It is ``nvars`` minus the smallest set of variables meeting the support
    of every generator.
    """
    if any(not any(e) for e in exps_list):
        return -1
    edges = _supports(exps_list)
    if not edges:
        return nvars
    return nvars - _min_transversal(edges, nvars)


def hilbert_dimension(I):
    """Krull dimension of ``R/I`` from the initial ideal."""
    gb = I.gb()
    return monomial_dimension([g.lead_exponents() for g in gb], I.ring.nvars)


def height(I):
    d = hilbert_dimension(I)
    if d < 0:
        raise ValueError("the unit ideal has no height")
    return I.ring.nvars - d


def _poly_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def _poly_shift(a, d):
    return {k + d: v for k, v in a.items()}


def _minimal_monomials(mons):
    mons = sorted(set(mons), key=sum)
    out = []
    for m in mons:
        if not any(all(x <= y for x, y in zip(o, m)) for o in out):
            out.append(m)
    return out


def hilbert_numerator(exps_list):
    """Numerator ``K(t)`` with ``HS(R/M) = K(t) / (1-t)^n`` for a monomial ideal.

    Uses the pivot recursion ``K(M) = K(M + (v)) + t^deg(v) K(M : v)`` with a
    variable pivot, returned as ``{degree: coefficient}``.
    """
    memo = {}

    def rec(mons):
        mons = tuple(sorted(_minimal_monomials(mons)))
        if mons in memo:
            return memo[mons]
        if not mons:
            res = {0: 1}
        elif any(not any(m) for m in mons):
            res = {}
        elif all(sum(1 for v in m if v) == 1 for m in mons):
            res = {0: 1}
            for m in mons:
                d = sum(m)
                res = _poly_sub(res, _poly_shift(res, d))
        else:
            n = len(mons[0])
            # pivot on a variable of some mixed monomial so both branches shrink
            mixed = [m for m in mons if sum(1 for v in m if v) > 1]
            counts = [sum(1 for m in mixed if m[i]) for i in range(n)]
            i = max(range(n), key=lambda k: counts[k])
            var = tuple(1 if k == i else 0 for k in range(n))
            plus = rec(mons + (var,))
            colon = rec(tuple(tuple(max(v - (1 if k == i else 0), 0) for k, v in enumerate(m))
                              for m in mons))
            res = dict(plus)
            for k, v in _poly_shift(colon, 1).items():
                res[k] = res.get(k, 0) + v
            res = {k: v for k, v in res.items() if v}
        memo[mons] = res
        return res

    return rec(tuple(tuple(e) for e in exps_list))
