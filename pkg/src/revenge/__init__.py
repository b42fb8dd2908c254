"""Group theory of the Rubik's Revenge: facelet model, configurations, first law, sampling."""

from .config import Configuration, Configuration3, extract, realize, to_facelet_permutation
from .cube import CubeState, MoveSequence, apply, generator_permutation, parse_sequence, sequence_permutation, solved_state
from .law import Verdict, check_cube3, check_revenge, signature
from .perm import BSGS, Permutation, compose, contains, group_order, schreier_sims

__all__ = [
    "BSGS",
    "Configuration",
    "Configuration3",
    "CubeState",
    "MoveSequence",
    "Permutation",
    "Verdict",
    "apply",
    "check_cube3",
    "check_revenge",
    "compose",
    "contains",
    "extract",
    "generator_permutation",
    "group_order",
    "parse_sequence",
    "realize",
    "schreier_sims",
    "sequence_permutation",
    "signature",
    "solved_state",
    "to_facelet_permutation",
]
