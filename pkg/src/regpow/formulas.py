"""Closed-form regularity of powers.

Two layers: evaluators for equigenerated ideals generated by a homogeneous
d-sequence (parameters: number of generators ``n``, degree ``delta``,
``regU = reg(R/U)`` and ``B = reg(R/((u_1..u_{n-1}) : u_n))``), and the graph
family formulas built on top of them, returned as affine functions of ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import graph as gr
from .taxonomy import BinomialClass, Classification, ParityClass

PROVEN = "proven"
CONJECTURED = "conjectured"
UNAVAILABLE = "unavailable"


class HypothesisViolated(ValueError):
    pass


class PowerOutOfRange(ValueError):
    pass


class GapCase(ValueError):
    """The excluded value ``regU = (n-1)(delta-1)``: B is needed."""


class ClassOutOfScope(ValueError):
    pass


@dataclass(frozen=True)
class DSeqParams:
    n: int
    delta: int
    regU: Optional[int] = None
    B: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one generator")
        if self.delta < 2:
            raise ValueError("generator degree must be at least 2")

    @property
    def edge(self):
        """``n*delta - n - delta``, the threshold that separates the regimes."""
        return self.n * self.delta - self.n - self.delta


def thm31_value(p: DSeqParams, t: int) -> int:
    """``n*delta - n - 2*delta + delta*t`` for ``t >= 2`` when ``regU <= n*delta - n - delta``."""
    if t < 2:
        raise PowerOutOfRange("needs t >= 2")
    if p.regU is None or p.regU > p.edge:
        raise HypothesisViolated("needs reg(R/U) <= n*delta - n - delta")
    return p.n * p.delta - p.n - 2 * p.delta + p.delta * t


def u2_value(p: DSeqParams) -> int:
    """The ``t = 2`` value ``n*delta - n`` under the same hypothesis."""
    if p.regU is None or p.regU > p.edge:
        raise HypothesisViolated("needs reg(R/U) <= n*delta - n - delta")
    return p.n * p.delta - p.n


def colon_shift_value(p: DSeqParams, t: int) -> int:
    """``reg(R/(((u_1..u_{n-1}) : u_n) + (u_n^t))) = B + delta*t - 1`` for ``t >= 1``."""
    if t < 1:
        raise PowerOutOfRange("needs t >= 1")
    if p.B is None:
        raise HypothesisViolated("needs B")
    return p.B + p.delta * t - 1


def thm35_value(p: DSeqParams, t: int, i: int = 0) -> int:
    """``B + delta*t - 1``, the regularity of ``R/((u_1..u_i) + U^t)``, any ``0 <= i < n``."""
    if t < 2:
        raise PowerOutOfRange("needs t >= 2")
    if not 0 <= i <= p.n - 1:
        raise ValueError("i must lie in 0..n-1")
    if p.B is None:
        raise HypothesisViolated("needs B")
    lower = p.n * p.delta - p.n - 3 * p.delta + 2
    if p.regU is not None:
        lower = max(lower, p.regU - p.delta + 1)
    if p.B < lower:
        raise HypothesisViolated(f"needs B >= {lower}")
    return p.B + p.delta * t - 1


def cor36_value(p: DSeqParams, t: int) -> int:
    """``B + delta*t - 1`` for ``t >= 2``; without B, ``regU + delta*t - delta`` in the
    two special ranges of ``regU`` (valid for ``t >= 1``)."""
    gap = (p.n - 1) * (p.delta - 1)
    if p.regU is not None and p.regU == gap:
        raise GapCase("reg(R/U) = (n-1)(delta-1): unavailable, requires B")
    special = p.regU is not None and (p.regU >= p.edge + 2 or p.regU == p.edge)
    if special:
        if t < 1:
            raise PowerOutOfRange("needs t >= 1")
        return p.regU + p.delta * t - p.delta
    if t < 2:
        raise PowerOutOfRange("needs t >= 2")
    if p.B is None:
        raise HypothesisViolated("needs B (or reg(R/U) in a special range)")
    return p.B + p.delta * t - 1


@dataclass
class PointValue:
    value: int
    status: str
    source: str

    def to_json(self):
        return {"value": self.value, "status": self.status, "source": self.source}


@dataclass
class RegularityPrediction:
    """``reg = slope*t + intercept`` for ``t >= valid_from``; ``points`` holds
    separately known values for smaller ``t``."""

    slope: Optional[int]
    intercept: Optional[int]
    valid_from: int
    status: str
    source: str
    points: dict = field(default_factory=dict)
    note: str = ""

    def value(self, t):
        if t in self.points:
            return self.points[t].value
        if self.status != UNAVAILABLE and t >= self.valid_from:
            return self.slope * t + self.intercept
        return None

    def status_at(self, t):
        if t in self.points:
            return self.points[t].status
        if self.status != UNAVAILABLE and t >= self.valid_from:
            return self.status
        return UNAVAILABLE

    def source_at(self, t):
        if t in self.points:
            return self.points[t].source
        if self.status != UNAVAILABLE and t >= self.valid_from:
            return self.source
        return ""

    def formula(self):
        if self.status == UNAVAILABLE:
            return None
        b = self.intercept
        sign = "+" if b >= 0 else "-"
        return f"{self.slope}t {sign} {abs(b)} (t >= {self.valid_from})"

    def table(self, t_max):
        return [{"t": t, "value": self.value(t), "status": self.status_at(t),
                 "source": self.source_at(t)} for t in range(1, t_max + 1)]

    def to_json(self):
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "valid_from": self.valid_from,
            "status": self.status,
            "source": self.source,
            "formula": self.formula(),
            "points": {str(t): p.to_json() for t, p in sorted(self.points.items())},
            "note": self.note,
        }


def _unavailable(source, note="", points=None):
    return RegularityPrediction(None, None, 1, UNAVAILABLE, source, points or {}, note)


def cor37_value(n: int, delta: int, regU: int, t: Optional[int] = None):
    """Prediction for an equigenerated almost complete intersection with ``n``
    generators of degree ``delta`` and height ``n-1``.

    Case (a) ``regU <= n*delta-n-delta``: ``n*delta - n + delta*t - 2*delta`` for t >= 2.
    Case (b) ``regU >= n*delta-n-delta+2``: ``regU + delta*t - delta`` for t >= 1.
    The value in between is a gap.  With ``t`` given, the integer value (or None).
    """
    if delta < 2:
        raise ValueError("generator degree must be at least 2")
    edge = n * delta - n - delta
    if regU <= edge:
        pred = RegularityPrediction(delta, n * delta - n - 2 * delta, 2, PROVEN,
                                    "aci-small-reg", {1: PointValue(regU, PROVEN, "input")})
    elif regU >= edge + 2:
        pred = RegularityPrediction(delta, regU - delta, 1, PROVEN, "aci-large-reg")
    else:
        pred = _unavailable("aci-gap", "reg(R/U) = n*delta - n - delta + 1 is not covered")
    if t is None:
        return pred
    return pred.value(t)


# -- graph family formulas ---------------------------------------------------

SOURCES = {
    "ci": "complete intersection of quadrics: reg(S/I) = number of generators",
    "c3": "triangle with a path at each vertex (empty allowed), binomial: 2t+n-4 for t>=1",
    "g2": "path plus an edge, girth >= 4, binomial: 2t+n-4 for t>=2",
    "g2-t1": "path plus an edge between two internal vertices, girth >= 4: reg(S/J_G) = n-3",
    "cycle-t1": "cycle on n >= 4 vertices: reg(S/J_G) = n-2",
    "tree": "tree of two paths joined by an edge, binomial: 2t+iv-1 for t>=2",
    "tree-t1": "tree of two paths joined by an edge: reg(S/J_G) = iv+1",
    "bip-tree": "bipartite tree with ACI parity ideal: 2t+iv-1 for t>=2",
    "bip-uni": "bipartite unicyclic with ACI parity ideal: 2t+n-4 for t>=2",
    "bip-uni-t1": "bipartite even cycle or balloon: reg(S/I_G) = n-2",
    "odd-balloon": "balloon with odd girth, parity: 2t+n-3 for t>=1",
    "odd-int": "odd cycle joined to an internal path vertex, parity: 2t+n-4 for t>=1",
    "g2-odd": "path plus an edge between internal vertices, odd girth, parity: 2t+n-4 for t>=1",
    "tri-paths": "triangle with a path of length >= 1 at each vertex, parity: 2t+n-4 for t>=2",
    "chord-odd": "odd cycle plus a chord, parity: 2t+n-3 for t>=2",
    "chord-odd-t1": "odd cycle plus a chord: reg(S/I_G) = n-2",
    "chord-even": "non-bipartite even cycle plus a chord, parity: 2t+n-3 for t>=1",
    "chord-even-path": "even cycle with a chord across a path attachment, parity: 2t+n-3 for t>=2",
    "two-odd": "two odd cycles joined by an edge, parity: conjectured reg(S/I_G) = n-1, "
               "giving 2t+n-3",
}


def _affine(intercept, t0, key, status=PROVEN, points=None, note=""):
    return RegularityPrediction(2, intercept, t0, status, SOURCES[key], points or {}, note)


def _pt(value, key, status=PROVEN):
    return PointValue(value, status, SOURCES[key])


def _check(cls, kind):
    if not isinstance(cls, Classification):
        raise TypeError("expected a Classification")
    if cls.kind != kind:
        raise ValueError(f"classification is for the {cls.kind} ideal")


def predict_binomial(cls: Classification, t: Optional[int] = None):
    """Family prediction for ``reg(S/J_G^t)``; with ``t`` the value (or None)."""
    _check(cls, "binomial")
    pred = _predict_binomial(cls)
    return pred if t is None else pred.value(t)


def _predict_binomial(cls):
    v = cls.verdict
    n = cls.params["n"]
    iv = cls.params["iv"]
    if v is BinomialClass.NotACI:
        raise ClassOutOfScope("graph is neither CI nor ACI for the binomial edge ideal")
    if v is BinomialClass.CI_Paths:
        return _unavailable(SOURCES["ci"], "complete intersection; only t = 1 is recorded",
                            {1: _pt(cls.params["m"], "ci")})
    if not cls.params["connected"]:
        return _unavailable("disconnected", "formulas are stated for connected graphs")
    if v is BinomialClass.ACI_C3Type:
        return _affine(n - 4, 1, "c3")
    if v is BinomialClass.ACI_G2Type:
        return _affine(n - 4, 2, "g2", points={1: _pt(n - 3, "g2-t1")})
    if v is BinomialClass.ACI_Cycle:
        return _affine(n - 4, 2, "g2", points={1: _pt(n - 2, "cycle-t1")})
    if v is BinomialClass.ACI_Balloon:
        return _affine(n - 4, 2, "g2")
    if v in (BinomialClass.ACI_TTypeTree, BinomialClass.ACI_HTypeTree):
        return _affine(iv - 1, 2, "tree", points={1: _pt(iv + 1, "tree-t1")})
    raise ClassOutOfScope(v.value)


def predict_parity(cls: Classification, t: Optional[int] = None):
    """Family prediction for ``reg(S/I_G^t)``; with ``t`` the value (or None)."""
    _check(cls, "parity")
    pred = _predict_parity(cls)
    return pred if t is None else pred.value(t)


def _predict_parity(cls):
    v = cls.verdict
    P = ParityClass
    n = cls.params["n"]
    iv = cls.params["iv"]
    if v is P.NotACI:
        raise ClassOutOfScope("graph is neither CI nor ACI for the parity binomial edge ideal")
    if v is P.CI_PathsAndOddCycles:
        return _unavailable(SOURCES["ci"], "complete intersection; only t = 1 is recorded",
                            {1: _pt(cls.params["m"], "ci")})
    if not cls.params["connected"]:
        return _unavailable("disconnected", "formulas are stated for connected graphs")
    if v is P.ACI_BipartiteTree:
        return _affine(iv - 1, 2, "bip-tree", points={1: _pt(iv + 1, "tree-t1")})
    if v is P.ACI_BipartiteUnicyclic:
        t1 = n - 3 if cls.subtype == "G2" else n - 2
        return _affine(n - 4, 2, "bip-uni",
                       points={1: _pt(t1, "g2-t1" if cls.subtype == "G2" else "bip-uni-t1")})
    if v is P.ACI_OddBalloon:
        return _affine(n - 3, 1, "odd-balloon")
    if v is P.ACI_OddCycleInternalPath:
        return _affine(n - 4, 1, "odd-int")
    if v is P.ACI_G2Odd:
        return _affine(n - 4, 1, "g2-odd")
    if v is P.ACI_TrianglePaths:
        return _affine(n - 4, 2, "tri-paths", note=f"reg(S/I_G) <= {n - 2} at t = 1")
    if v is P.ACI_ChordOddCycle:
        return _affine(n - 3, 2, "chord-odd", points={1: _pt(n - 2, "chord-odd-t1")})
    if v is P.ACI_ChordEvenCycle:
        return _affine(n - 3, 1, "chord-even")
    if v is P.ACI_ChordEvenCyclePlusPath:
        return _affine(n - 3, 2, "chord-even-path", note=f"reg(S/I_G) <= {n - 2} at t = 1")
    if v is P.ACI_TwoOddCyclesBridge:
        return _affine(n - 3, 2, "two-odd", status=CONJECTURED,
                       points={1: _pt(n - 1, "two-odd", CONJECTURED)},
                       note="open case: excluded from pass/fail")
    raise ClassOutOfScope(v.value)


def predict(cls: Classification, t: Optional[int] = None):
    if cls.kind == "binomial":
        return predict_binomial(cls, t)
    return predict_parity(cls, t)


def matsuda_murai_bounds(g, kind="binomial"):
    """``(lower, upper)`` for ``reg(S/I)`` at ``t = 1``.

    Binomial: ``(l(G), n-1)`` with ``l`` the longest induced path.  Parity: the
    lower bound is ``max(l(G), oc(G))`` (longest induced odd cycle) and no
    upper bound is asserted (``None``).
    """
    if g.m == 0:
        raise ValueError("graph has no edges")
    ell = gr.longest_induced_path(g)
    if kind == "binomial":
        return ell, g.n - 1
    if kind == "parity":
        return max(ell, gr.longest_induced_odd_cycle(g)), None
    raise ValueError(f"unknown ideal kind {kind!r}")


# -- per-family d-sequence data, as used in the derivations ------------------

FAMILY_PARAMETERS = {
    # family: (number of generators, reg(R/U), B or None, route) as functions of (n, iv)
    "C3Type": (lambda n, iv: n, lambda n, iv: n - 2, None, "cor37"),
    "G2Type": (lambda n, iv: n, lambda n, iv: n - 3, None, "cor37"),
    "HTypeTree": (lambda n, iv: n - 1, lambda n, iv: iv + 1, None, "cor37"),
    "TTypeTree": (lambda n, iv: n - 1, lambda n, iv: iv + 1, lambda n, iv: n - 3, "thm35"),
    "OddBalloon": (lambda n, iv: n, lambda n, iv: n - 1, lambda n, iv: n - 2, "thm35"),
    "OddCycleInternalPath": (lambda n, iv: n, lambda n, iv: n - 2, None, "cor37"),
    "G2Odd": (lambda n, iv: n, lambda n, iv: n - 2, None, "cor37"),
    "TrianglePaths": (lambda n, iv: n, lambda n, iv: n - 2, None, "cor37"),
    "ChordOddCycle": (lambda n, iv: n + 1, lambda n, iv: n - 2, None, "cor37"),
    "ChordEvenCycle": (lambda n, iv: n + 1, lambda n, iv: n - 1, None, "cor37"),
    "ChordEvenCyclePlusPath": (lambda n, iv: n + 1, lambda n, iv: n - 2, None, "cor37"),
    "TwoOddCyclesBridge": (lambda n, iv: n + 1, lambda n, iv: n - 1, None, "cor37"),
}


def family_value_from_dseq(family, n, iv, t):
    """Evaluate a family through the d-sequence layer, the way its derivation does."""
    gens, reg_u, b, route = FAMILY_PARAMETERS[family]
    N, R = gens(n, iv), reg_u(n, iv)
    if route == "thm35":
        return thm35_value(DSeqParams(N, 2, R, b(n, iv)), t)
    return cor37_value(N, 2, R, t)
