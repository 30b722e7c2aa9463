"""Closed-form predictions for reg(S/I^t) next to the exact values from the
Groebner/resolution engine.  Everything here runs in a few seconds."""

import time

from regpow import graph as gr
from regpow.graph import Graph
from regpow.harness import verify_graph

CASES = [
    ("triangle", gr.cycle_graph(3), "binomial"),
    ("star K13", gr.star_graph(3), "binomial"),
    ("four-cycle", gr.cycle_graph(4), "binomial"),
    ("triangle with a two-edge tail", gr.balloon_graph(3, 2), "parity"),
    ("four-cycle with a chord", Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]), "parity"),
    ("path P4 (complete intersection)", gr.path_graph(4), "binomial"),
]


def show(name, g, kind):
    t0 = time.perf_counter()
    rep, _ = verify_graph(g, kind, t_max=3, checks="none")
    dt = time.perf_counter() - t0
    pred = rep["prediction"]
    print(f"\n{name}  [{kind}, {rep['classification']['verdict']}]  ({dt:.1f}s)")
    if pred.get("formula"):
        print(f"  formula: {pred['formula']}")
    print(f"  {'t':>2} {'predicted':>9} {'oracle':>6}  status       match")
    for row in rep["powers"]:
        pv = "-" if row["predicted"] is None else row["predicted"]
        ov = "-" if row["oracle"] is None else row["oracle"]
        match = {True: "yes", False: "NO", None: ""}[row["match"]]
        print(f"  {row['t']:>2} {pv:>9} {ov:>6}  {row['status']:12s} {match}")
    b = rep["bounds"]
    print(f"  t=1 bounds: {b['lower']} <= reg <= {b['upper']}")


def main():
    for case in CASES:
        show(*case)


if __name__ == "__main__":
    main()
