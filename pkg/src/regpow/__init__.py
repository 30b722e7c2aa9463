"""Almost complete intersection binomial and parity binomial edge ideals:
classification, regularity formulas for powers, and an exact checking engine."""

from .graph import (ACYCLIC, EdgeListParseError, Graph, GraphError, canonical_form,
                    edge_completion, girth, internal_vertex_count, parse_edge_list,
                    read_edge_list)
from .taxonomy import (BinomialClass, Classification, ParityClass, classify,
                       classify_binomial, classify_parity, decompose_structure)
from .formulas import (CONJECTURED, PROVEN, UNAVAILABLE, ClassOutOfScope,
                       RegularityPrediction, matsuda_murai_bounds, predict)
from .polyring import BudgetExceeded, PrimeField, Ring
from .ideals import Ideal, ideal_colon, ideal_equal, ideal_power
from .resolution import BettiTable, betti_table, height, minimalize, schreyer_resolution
from .edge_ideals import build_ideal, oracle_betti, oracle_regularity, phi_ideal
from .cache import ResultCache
from .harness import run_corpus, verify_graph

__version__ = "0.1.0"
