"""Combinatorial recognition of graphs whose binomial edge ideal ``J_G`` or parity
binomial edge ideal ``I_G`` is a complete or almost complete intersection.

Everything here is structural; no algebra is done.  Each verdict carries a
witness (the distinguished edge, cycle, attached paths) that downstream
modules use to pick formulas and to order generators for hypothesis checks.
Ties are broken by the lexicographically smallest qualifying edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from . import graph as gr
from .graph import Graph


class BinomialClass(str, Enum):
    CI_Paths = "CI_Paths"
    ACI_Cycle = "ACI_Cycle"
    ACI_Balloon = "ACI_Balloon"
    ACI_G2Type = "ACI_G2Type"
    ACI_C3Type = "ACI_C3Type"
    ACI_TTypeTree = "ACI_TTypeTree"
    ACI_HTypeTree = "ACI_HTypeTree"
    NotACI = "NotACI"


class ParityClass(str, Enum):
    CI_PathsAndOddCycles = "CI_PathsAndOddCycles"
    ACI_BipartiteTree = "ACI_BipartiteTree"
    ACI_BipartiteUnicyclic = "ACI_BipartiteUnicyclic"
    ACI_OddBalloon = "ACI_OddBalloon"
    ACI_OddCycleInternalPath = "ACI_OddCycleInternalPath"
    ACI_G2Odd = "ACI_G2Odd"
    ACI_TrianglePaths = "ACI_TrianglePaths"
    ACI_TwoOddCyclesBridge = "ACI_TwoOddCyclesBridge"
    ACI_ChordOddCycle = "ACI_ChordOddCycle"
    ACI_ChordEvenCycle = "ACI_ChordEvenCycle"
    ACI_ChordEvenCyclePlusPath = "ACI_ChordEvenCyclePlusPath"
    NotACI = "NotACI"


class WitnessNotFound(RuntimeError):
    """Raised when a verdict has no structural witness (a classifier bug)."""


@dataclass
class Classification:
    """Verdict for one ideal kind plus the parameters formulas consume.

    ``params`` always has ``n``, ``m``, ``girth`` and ``iv``; ``witness``
    describes the decomposition (empty for NotACI).  For a disconnected
    graph, ``witness["component"]`` lists the vertices of the component
    that carries the ACI verdict.
    """

    kind: str
    verdict: Enum
    subtype: str = ""
    params: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)
    reason: str = ""

    @property
    def label(self):
        return self.verdict.value + (f"-{self.subtype}" if self.subtype else "")

    @property
    def is_ci(self):
        return self.verdict.value.startswith("CI_")

    @property
    def is_aci(self):
        return self.verdict.value.startswith("ACI_")

    def to_json(self):
        return {
            "kind": self.kind,
            "verdict": self.label,
            "family": self.verdict.value,
            "subtype": self.subtype,
            "params": _jsonable(self.params),
            "witness": _jsonable(self.witness),
            "reason": self.reason,
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, Enum):
        return x.value
    return x


def basic_params(g: Graph):
    bp = gr.bipartition(g)
    return {
        "n": g.n,
        "m": g.m,
        "girth": gr.girth(g),
        "iv": gr.internal_vertex_count(g),
        "connected": gr.is_connected(g),
        "bipartition": None if bp is None else [sorted(bp[0]), sorted(bp[1])],
    }


# -- structural helpers on a connected graph --------------------------------

def _cycle_edges(g):
    """Edges whose removal keeps g connected (i.e. the edges lying on a cycle)."""
    out = []
    for e in g.sorted_edges():
        if gr.is_connected(gr.delete_edge(g, e)):
            out.append(e)
    return out


def _path_plus_edge(g):
    """All ways to see a connected unicyclic g as ``P_n`` plus one edge.

    Yields ``(edge, order, pos_u, pos_v)`` where ``order`` is the path after
    deleting ``edge`` and ``pos_*`` are the endpoint positions on it.
    """
    for e in _cycle_edges(g):
        h = gr.delete_edge(g, e)
        if gr.is_path(h):
            order = gr.path_order(h)
            idx = {v: k for k, v in enumerate(order)}
            yield e, order, idx[e[0]], idx[e[1]]


def _end_or_internal(pos, length):
    return "end" if pos in (0, length - 1) else "internal"


def _unique_cycle(g):
    """Vertices of the unique cycle of a connected unicyclic graph, in cyclic order."""
    core = set(g.vertices())
    # strip leaves until only the cycle is left
    deg = {v: g.degree(v) for v in core}
    leaves = [v for v in core if deg[v] <= 1]
    while leaves:
        v = leaves.pop()
        if v not in core:
            continue
        core.discard(v)
        for w in g.neighbors(v):
            if w in core:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    return gr.cycle_order(g, core)


def _hanging_paths(g, cycle):
    """For each cycle vertex, the path hanging off it (as a vertex list starting
    next to the cycle), or None if the attached tree is not a single path."""
    cset = set(cycle)
    out = {}
    for c in cycle:
        outside = sorted(g.neighbors(c) - cset)
        if not outside:
            out[c] = []
            continue
        if len(outside) > 1:
            out[c] = None
            continue
        path = [outside[0]]
        prev = c
        ok = True
        while True:
            v = path[-1]
            nxt = sorted(g.neighbors(v) - {prev})
            if any(w in cset for w in nxt):
                ok = False
                break
            if not nxt:
                break
            if len(nxt) > 1:
                ok = False
                break
            prev = v
            path.append(nxt[0])
        out[c] = path if ok else None
    return out


def _two_paths_plus_edge(g):
    """Ways to see a tree as two disjoint paths joined by one edge."""
    for e in g.sorted_edges():
        h = gr.delete_edge(g, e)
        comps = gr.components(h)
        if len(comps) != 2:
            continue
        if all(gr.is_path(h.induced(c)) for c in comps):
            kinds = []
            paths = []
            for v in e:
                comp = next(c for c in comps if v in c)
                order = gr.path_order(h, comp)
                paths.append(order)
                kinds.append(_end_or_internal(order.index(v), len(order)))
            yield e, paths, kinds


# -- binomial classifier -----------------------------------------------------

def _classify_binomial_connected(g):
    if gr.is_path(g):
        return BinomialClass.CI_Paths, "", {"path": gr.path_order(g)}
    if g.m == g.n - 1:
        for e, paths, kinds in _two_paths_plus_edge(g):
            if kinds == ["end", "end"]:
                continue
            if "end" in kinds:
                return BinomialClass.ACI_TTypeTree, "", {
                    "edge": list(e), "paths": paths, "path_lengths": [len(p) - 1 for p in paths]}
            return BinomialClass.ACI_HTypeTree, "", {
                "edge": list(e), "paths": paths, "path_lengths": [len(p) - 1 for p in paths]}
        return BinomialClass.NotACI, "", {}
    if g.m != g.n:
        return BinomialClass.NotACI, "", {}
    cycle = _unique_cycle(g)
    hang = _hanging_paths(g, cycle)
    if len(cycle) == 3 and all(p is not None for p in hang.values()):
        lengths = [len(hang[c]) for c in cycle]
        sub = "degenerate" if 0 in lengths else ""
        return BinomialClass.ACI_C3Type, sub, {
            "edge": [cycle[0], cycle[1]] if cycle[0] < cycle[1] else [cycle[1], cycle[0]],
            "cycle": cycle, "path_lengths": lengths,
            "paths": {c: hang[c] for c in cycle}}
    for e, order, pu, pv in _path_plus_edge(g):
        kinds = sorted(_end_or_internal(p, len(order)) for p in (pu, pv))
        wit = {"edge": list(e), "path": order, "cycle": cycle, "cycle_length": len(cycle),
               "tails": {c: len(hang[c]) for c in cycle if hang[c]}}
        if kinds == ["end", "end"]:
            return BinomialClass.ACI_Cycle, "", wit
        if kinds == ["end", "internal"]:
            return BinomialClass.ACI_Balloon, "", wit
        return BinomialClass.ACI_G2Type, "", wit
    return BinomialClass.NotACI, "", {}


def classify_binomial(g: Graph) -> Classification:
    params = basic_params(g)
    if g.m == 0:
        return Classification("binomial", BinomialClass.NotACI, params=params, reason="no edges")
    comps = gr.components(g)
    results = []
    for comp in comps:
        h = g.induced(comp)
        verdict, sub, wit = _classify_binomial_connected(h)
        results.append((comp, h, verdict, sub, _lift(wit, comp)))
    return _combine("binomial", g, params, results, BinomialClass)


# -- parity classifier -------------------------------------------------------

def _is_odd_cycle_graph(h):
    return gr.is_cycle(h) and h.n % 2 == 1


def _classify_parity_connected(g):
    bp = gr.bipartition(g)
    if bp is not None:
        if gr.is_path(g):
            return ParityClass.CI_PathsAndOddCycles, "path", {"path": gr.path_order(g)}
        if g.m == g.n - 1:
            for e, paths, kinds in _two_paths_plus_edge(g):
                if kinds == ["end", "end"]:
                    continue
                sub = "T" if "end" in kinds else "H"
                return ParityClass.ACI_BipartiteTree, sub, {
                    "edge": list(e), "paths": paths, "path_lengths": [len(p) - 1 for p in paths]}
            return ParityClass.NotACI, "", {}
        if g.m == g.n:
            cycle = _unique_cycle(g)
            for e, order, pu, pv in _path_plus_edge(g):
                kinds = sorted(_end_or_internal(p, len(order)) for p in (pu, pv))
                sub = {("end", "end"): "even-cycle", ("end", "internal"): "balloon",
                       ("internal", "internal"): "G2"}[tuple(kinds)]
                return ParityClass.ACI_BipartiteUnicyclic, sub, {
                    "edge": list(e), "path": order, "cycle": cycle, "cycle_length": len(cycle)}
        return ParityClass.NotACI, "", {}

    if _is_odd_cycle_graph(g):
        return ParityClass.CI_PathsAndOddCycles, "odd-cycle", {"cycle": gr.cycle_order(g, g.vertices())}

    if g.m == g.n:
        cycle = _unique_cycle(g)
        hang = _hanging_paths(g, cycle)
        cset = set(cycle)
        tails = {c: p for c, p in hang.items() if p}
        wit_base = {"cycle": cycle, "cycle_length": len(cycle)}
        if all(p is not None for p in hang.values()):
            if len(tails) == 1:
                (c, p), = tails.items()
                nb = sorted(g.neighbors(c) & cset)
                return ParityClass.ACI_OddBalloon, "", dict(
                    wit_base, edge=sorted((c, nb[0])), attach=c, tail=p, tail_length=len(p))
            if len(tails) == 2:
                a, b = sorted(tails)
                if g.has_edge(a, b):
                    return ParityClass.ACI_G2Odd, "", dict(
                        wit_base, edge=[a, b], tails={a: tails[a], b: tails[b]},
                        path_lengths=[len(tails[a]), len(tails[b])])
            if len(tails) == 3 and len(cycle) == 3:
                return ParityClass.ACI_TrianglePaths, "", dict(
                    wit_base, edge=sorted(cycle[:2]), paths={c: hang[c] for c in cycle},
                    path_lengths=[len(hang[c]) for c in cycle])
            return ParityClass.NotACI, "", {}
        # one cycle vertex carries a tree: it must be a bridge to an internal path vertex
        bad = [c for c, p in hang.items() if p is None]
        if len(bad) == 1 and all(not p for c, p in hang.items() if c != bad[0]):
            c = bad[0]
            outside = sorted(g.neighbors(c) - cset)
            if len(outside) == 1:
                w = outside[0]
                h = gr.delete_edge(g, (c, w))
                rest = [comp for comp in gr.components(h) if w in comp][0]
                ph = h.induced(rest)
                if gr.is_path(ph):
                    order = gr.path_order(h, rest)
                    if _end_or_internal(order.index(w), len(order)) == "internal":
                        return ParityClass.ACI_OddCycleInternalPath, "", dict(
                            wit_base, edge=sorted((c, w)), attach=c, path=order,
                            path_vertex=w)
        return ParityClass.NotACI, "", {}

    if g.m == g.n + 1:
        # two odd cycles joined by a bridge
        for e in g.sorted_edges():
            h = gr.delete_edge(g, e)
            comps = gr.components(h)
            if len(comps) == 2 and all(_is_odd_cycle_graph(h.induced(c)) for c in comps):
                cyc = [gr.cycle_order(h, c) for c in sorted(comps, key=lambda c: e[0] not in c)]
                return ParityClass.ACI_TwoOddCyclesBridge, "", {
                    "edge": list(e), "cycles": cyc, "cycle_lengths": [len(c) for c in cyc]}
        # a chord in a cycle, possibly with one hanging path
        for e in g.sorted_edges():
            u, v = e
            h = gr.delete_edge(g, e)
            if not gr.is_connected(h) or h.m != h.n:
                continue
            if h.degree(u) != 2 or h.degree(v) != 2:
                continue
            if gr.is_cycle(h):
                cyc = gr.cycle_order(h, h.vertices())
                wit = {"edge": [u, v], "chord": [u, v], "cycle": cyc, "cycle_length": len(cyc)}
                if h.n % 2 == 1:
                    return ParityClass.ACI_ChordOddCycle, "", wit
                return ParityClass.ACI_ChordEvenCycle, "", wit
            cycle = _unique_cycle(h)
            if len(cycle) % 2 or u not in cycle or v not in cycle:
                continue
            hang = _hanging_paths(h, cycle)
            tails = {c: p for c, p in hang.items() if p}
            if any(p is None for p in hang.values()) or len(tails) != 1:
                continue
            (i, p), = tails.items()
            if h.has_edge(u, i) and h.has_edge(v, i):
                return ParityClass.ACI_ChordEvenCyclePlusPath, "", {
                    "edge": [u, v], "chord": [u, v], "cycle": cycle, "cycle_length": len(cycle),
                    "attach": i, "tail": p, "tail_length": len(p)}
        return ParityClass.NotACI, "", {}
    return ParityClass.NotACI, "", {}


def classify_parity(g: Graph) -> Classification:
    params = basic_params(g)
    params["oc"] = gr.longest_induced_odd_cycle(g)
    if g.m == 0:
        return Classification("parity", ParityClass.NotACI, params=params, reason="no edges")
    results = []
    for comp in gr.components(g):
        h = g.induced(comp)
        verdict, sub, wit = _classify_parity_connected(h)
        results.append((comp, h, verdict, sub, _lift(wit, comp)))
    return _combine("parity", g, params, results, ParityClass)


# -- disconnected graphs -----------------------------------------------------

def _lift(wit, comp):
    """Map a witness computed on the relabeled component back to g's labels."""
    lab = {k + 1: v for k, v in enumerate(comp)}

    def conv(key, x):
        if key in ("path_lengths", "cycle_length", "cycle_lengths", "tail_length"):
            return x
        if isinstance(x, dict):
            return {lab[k]: conv(key, v) if not isinstance(v, int) or key != "tails" else v
                    for k, v in x.items()}
        if isinstance(x, list):
            return [conv(key, v) for v in x]
        if isinstance(x, tuple):
            return tuple(conv(key, v) for v in x)
        if isinstance(x, int):
            return lab[x]
        return x

    out = {}
    for key, val in wit.items():
        out[key] = conv(key, val)
    if "edge" in out:
        out["edge"] = sorted(out["edge"])
    if "chord" in out:
        out["chord"] = sorted(out["chord"])
    return out


def _combine(kind, g, params, results, enum):
    ci_value = enum.CI_Paths if enum is BinomialClass else enum.CI_PathsAndOddCycles
    nonci = [r for r in results if r[2] is not ci_value]
    if not nonci:
        return Classification(kind, ci_value, subtype="", params=params,
                              witness={"components": [r[0] for r in results]})
    if len(nonci) == 1 and nonci[0][2] is not enum.NotACI:
        comp, h, verdict, sub, wit = nonci[0]
        params = dict(params)
        if len(results) > 1:
            # formulas refer to the component carrying the ACI structure
            params["component_n"] = h.n
            params["component_iv"] = gr.internal_vertex_count(h)
            wit = dict(wit, component=comp)
        else:
            params["component_n"] = g.n
            params["component_iv"] = params["iv"]
        return Classification(kind, verdict, subtype=sub, params=params, witness=wit)
    reason = "a component is not of an ACI family" if any(r[2] is enum.NotACI for r in nonci) \
        else "more than one component is not a complete intersection"
    return Classification(kind, enum.NotACI, params=params, reason=reason)


def classify(g: Graph, kind: str) -> Classification:
    if kind == "binomial":
        return classify_binomial(g)
    if kind == "parity":
        return classify_parity(g)
    raise ValueError(f"unknown ideal kind {kind!r}")


def decompose_structure(g: Graph, cls) -> dict:
    """Decomposition witness for a classified graph (recomputed from scratch)."""
    if isinstance(cls, Classification):
        verdict, kind = cls.verdict, cls.kind
    else:
        verdict = cls
        kind = "binomial" if isinstance(cls, BinomialClass) else "parity"
    if verdict.value == "NotACI":
        raise ValueError("NotACI graphs have no decomposition")
    fresh = classify(g, kind)
    if fresh.verdict is not verdict:
        raise WitnessNotFound(f"graph is {fresh.label}, not {verdict.value}")
    if verdict.value.startswith("ACI_") and "edge" not in fresh.witness:
        raise WitnessNotFound(f"no distinguished edge for {verdict.value}")
    return fresh.witness
