"""Binomial and parity binomial edge ideals, the bipartite variable swap, and
the end-to-end oracle ``reg(S/I^t)``."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

from . import graph as gr
from .graph import Graph
from .ideals import (Ideal, check_obs24, ideal_colon, ideal_equal, ideal_power,
                     is_d_sequence, is_regular_sequence)
from .polyring import DEFAULT_FIELD, PrimeField, Ring
from .resolution import betti_table

KINDS = ("binomial", "parity")


class EmptyEdgeSet(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


@lru_cache(maxsize=None)
def _ring(n, p):
    names = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
    return Ring(names, field=PrimeField(p))


def edge_ring(n, field=None):
    """``k[x_1..x_n, y_1..y_n]``; ``x_i`` is variable ``i-1``, ``y_i`` is ``n+i-1``."""
    return _ring(n, (field or DEFAULT_FIELD).p)


def _field(char):
    if char is None:
        return DEFAULT_FIELD
    if isinstance(char, PrimeField):
        return char
    return PrimeField(char)


def edge_generator(ring, n, e, kind):
    i, j = sorted(e)
    x = ring.gens()
    xi, xj, yi, yj = x[i - 1], x[j - 1], x[n + i - 1], x[n + j - 1]
    if kind == "binomial":
        return xi * yj - xj * yi
    if kind == "parity":
        return xi * xj - yi * yj
    raise ValueError(f"unknown ideal kind {kind!r}")


def build_ideal(g: Graph, kind: str, char=None, edge_order=None) -> Ideal:
    """One generator per edge, in lexicographic edge order unless ``edge_order`` is given."""
    fld = _field(char)
    if kind == "parity" and fld.p == 2:
        raise ValueError("parity binomial edge ideals need characteristic other than 2")
    if kind not in KINDS:
        raise ValueError(f"unknown ideal kind {kind!r}")
    if g.m == 0:
        raise EmptyEdgeSet("graph has no edges")
    ring = edge_ring(g.n, fld)
    edges = g.sorted_edges() if edge_order is None else [tuple(sorted(e)) for e in edge_order]
    if sorted(edges) != g.sorted_edges():
        raise ValueError("edge_order must list every edge exactly once")
    return Ideal(ring, [edge_generator(ring, g.n, e, kind) for e in edges])


def phi_permutation(n, bipartition):
    """Variable permutation swapping ``x_i`` and ``y_i`` exactly for ``i`` in ``V2``."""
    _, v2 = bipartition
    perm = list(range(2 * n))
    for i in v2:
        perm[i - 1], perm[n + i - 1] = n + i - 1, i - 1
    return perm


def phi_map(f, bipartition):
    n = f.ring.nvars // 2
    return f.ring.substitute_vars(f, phi_permutation(n, bipartition))


def phi_ideal(I, bipartition):
    return Ideal(I.ring, [phi_map(f, bipartition) for f in I.generators])


def oracle_betti(g: Graph, kind: str, t: int, char=None, deadline=None):
    if t < 1:
        raise ValueError("power must be at least 1")
    I = build_ideal(g, kind, char)
    return betti_table(ideal_power(I, t), deadline=deadline)


def oracle_regularity(g: Graph, kind: str, t: int, char=None, budget=None):
    """``reg(S/I^t)`` from the minimal graded Betti numbers.

    ``budget`` is in seconds; exceeding it raises ``BudgetExceeded``.
    """
    deadline = None if budget is None else time.monotonic() + budget
    return oracle_betti(g, kind, t, char, deadline).regularity()


# -- hypothesis checks -------------------------------------------------------

def verify_colon_lemma(g: Graph, e, char=None, deadline=None):
    """Compare ``I_{G-e} : g_e`` with the swap of ``J_{(G-e)_e}``."""
    e = tuple(sorted(e))
    if gr.is_bipartite(g):
        raise PreconditionViolated("graph must be non-bipartite")
    h = gr.delete_edge(g, e)
    bp = gr.bipartition(h)
    if bp is None:
        raise PreconditionViolated("graph minus the edge must be bipartite")
    fld = _field(char)
    ring = edge_ring(g.n, fld)
    ge = edge_generator(ring, g.n, e, "parity")
    if h.m:
        lhs = ideal_colon(build_ideal(h, "parity", fld), ge, deadline)
    else:
        lhs = Ideal(ring)
    completed = gr.edge_completion(h, e)
    if completed.m:
        rhs = phi_ideal(build_ideal(completed, "binomial", fld), bp)
    else:
        rhs = Ideal(ring)
    return ideal_equal(lhs, rhs, deadline)


def traversal_edge_order(g: Graph, last=None):
    """Edges in DFS order from the smallest end vertex of each component;
    ``last`` (if given) is moved to the end."""
    last = tuple(sorted(last)) if last is not None else None
    order = []
    seen_e = set()
    visited = set()
    for comp in gr.components(g):
        ends = [v for v in comp if g.degree(v) == 1]
        start = min(ends) if ends else comp[0]
        stack = [start]
        while stack:
            v = stack.pop()
            if v in visited:
                continue
            visited.add(v)
            for w in sorted(g.neighbors(v), reverse=True):
                e = tuple(sorted((v, w)))
                if e not in seen_e and e != last:
                    seen_e.add(e)
                    order.append(e)
                if w not in visited:
                    stack.append(w)
    if last is not None:
        order.append(last)
    return order


@dataclass
class DSeqReport:
    edge: tuple
    order: list
    prefix_regular: bool
    d_sequence: bool
    obs24: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "edge": list(self.edge) if self.edge else None,
            "order": [list(e) for e in self.order],
            "prefix_regular": self.prefix_regular,
            "d_sequence": self.d_sequence,
            "obs24": {str(k): v for k, v in sorted(self.obs24.items())},
        }


def ordered_generators(g: Graph, kind, e=None, char=None):
    order = traversal_edge_order(g, e)
    I = build_ideal(g, kind, char, edge_order=order)
    return order, list(I.generators)


def verify_dseq_hypotheses(g: Graph, kind: str, e=None, char=None, obs24_powers=(), deadline=None):
    """Natural generators with the witness edge's generator last: is the prefix a
    regular sequence, is the whole a d-sequence, and (optionally) does the
    colon/power identity hold for the listed powers and every index."""
    order, us = ordered_generators(g, kind, e, char)
    prefix_ok = is_regular_sequence(us[:-1] if e is not None else us, deadline)
    dseq = is_d_sequence(us, deadline)
    obs = {}
    for t in obs24_powers:
        for i in range(1, len(us) + 1):
            obs[(t, i)] = check_obs24(us, i, t, deadline)
    return DSeqReport(tuple(e) if e is not None else None, order, prefix_ok, dseq, obs)
