from __future__ import annotations

import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from regpow.graph import Graph

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.register_profile("quick", deadline=None, max_examples=15)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CRITERIA: dict = {}


def record(number, passed, detail=""):
    CRITERIA.setdefault(number, []).append((passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        parts = CRITERIA[number]
        tag = "PASS" if all(ok for ok, _ in parts) else "FAIL"
        detail = "; ".join(d for _, d in parts if d)
        terminalreporter.write_line(f"criterion {number:>2}: {tag}  {detail}")


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if connected:
        # random spanning tree first
        order = draw(st.permutations(list(range(1, n + 1))))
        tree = set()
        for k in range(1, n):
            parent = order[draw(st.integers(0, k - 1))]
            tree.add(tuple(sorted((order[k], parent))))
        chosen = sorted(tree | set(chosen))
    return Graph(n, chosen)


@st.composite
def relabelings(draw, g):
    return draw(st.permutations(list(range(1, g.n + 1))))
