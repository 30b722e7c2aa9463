"""Two triangles joined by a bridge: the parity ideal is an almost complete
intersection, but its regularity at t = 1 is only conjectured.  The report
keeps the prediction separate from proven ones and never counts it as a
match; the oracle value is shown for comparison."""

from regpow.graph import Graph
from regpow.harness import verify_graph

g = Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)])
rep, run = verify_graph(g, "parity", t_max=2, checks="none")
print("class:", rep["classification"]["verdict"])
print("note:", rep["prediction"]["note"])
for row in rep["powers"]:
    print(f"t={row['t']}: predicted {row['predicted']} ({row['status']}), "
          f"oracle {row['oracle']}, counted as match: {row['match']}")
print("timings (ms):", run["timings_ms"])
