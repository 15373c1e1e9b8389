"""
created matt_dumont
on: 17/10/26
"""
from komanawa.rainbow_tools.version import __version__
from komanawa.rainbow_tools.matroids import Matroid, MatroidAxiomError, ScaleLimitError, uniform_matroid, \
    free_matroid, partition_matroid, graphic_matroid, linear_matroid, from_circuits, explicit_matroid, \
    check_matroid_axioms, rank, is_independent, circuits, flats, closure_and_flats, contract, restrict, delete, \
    truncate, quotient_to
from komanawa.rainbow_tools.complexes import Hypergraph, SimplicialComplex, independence_complex, delete_edge, \
    contract_hypergraph, intersect_hypergraphs, restrict_complex
from komanawa.rainbow_tools.homology import betti, eta, eta_recursion_check, eta_lower_bound_certificate, \
    replay_certificate, ETA_INF
from komanawa.rainbow_tools.rainbow import RainbowInstance, RainbowSelection, LayeredElement, make_instance, \
    layered_ground, lift_matroid, build_complex, find_rainbow, verify_selection, matchability_check, \
    lemma_main_check, InstanceValidationError
from komanawa.rainbow_tools.reductions import BipartiteGraph, Diagonal, bipartite_to_matroid_pair, \
    matchings_to_instance, drisko_matrix_to_matchings, chappell_matrix_to_instance, selection_to_diagonal, \
    gen_cycle_tightness, gen_complete_bipartite_example
from komanawa.rainbow_tools.instance_io import InstanceParseError, parse_instance, format_instance
from komanawa.rainbow_tools.campaigns import VerificationReport, InfeasibleInstanceError, gen_random_instance
