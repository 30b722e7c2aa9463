"""The regularity formulas rest on algebraic facts about the natural
generators: a regular prefix, a d-sequence, the colon/power identity, and a
colon ideal that is the swapped binomial ideal of a completed graph.  Check
them directly for the triangle with a two-edge tail."""

from regpow import graph as gr
from regpow.edge_ideals import build_ideal, phi_ideal, verify_colon_lemma, verify_dseq_hypotheses
from regpow.ideals import ideal_equal
from regpow.taxonomy import classify

g = gr.balloon_graph(3, 2)
cls = classify(g, "parity")
e = tuple(cls.witness["edge"])
print("graph edges:", g.sorted_edges())
print("classified as", cls.label, "with distinguished edge", e)

rep = verify_dseq_hypotheses(g, "parity", e, obs24_powers=(2, 3))
print("generator order:", rep.order)
print("prefix is a regular sequence:", rep.prefix_regular)
print("whole sequence is a d-sequence:", rep.d_sequence)
print("colon/power identity, all indices, t = 2, 3:", all(rep.obs24.values()))

h = gr.delete_edge(g, e)
print("\nG - e:", h.sorted_edges(), " completion adds:",
      sorted(set(gr.edge_completion(h, e).sorted_edges()) - set(h.sorted_edges())))
print("I_{G-e} : g_e equals the swapped J of the completion:", verify_colon_lemma(g, e))

# the swap turns binomial edge ideals of bipartite graphs into parity ones
b = gr.fm_graph(3)
swapped = phi_ideal(build_ideal(b, "binomial"), gr.bipartition(b))
print("\nswap(J_G) == I_G for the bipartite graph", b.sorted_edges(), ":",
      ideal_equal(swapped, build_ideal(b, "parity")))
