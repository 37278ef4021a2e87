"""
constants.py
====================================
Package-wide constants: registries, search defaults and the verification levels.
"""

import os

__all__ = [
    "PACKAGE_PATH",
    "DEFAULT_SEED",
    "DEFAULT_BUDGET_SECONDS",
    "ISOMORPHISM_NODE_LIMIT",
    "EXHAUSTIVE_ORDERING_LIMIT",
    "BEAM_WIDTH",
    "DFS_BUDGET_SHARE",
    "NAIVE_LCWD_LIMIT",
    "GENERAL_CWD_LIMIT",
    "FAMILY_MODULES",
    "FAMILY_PRESETS",
    "CLAIM_MODULES",
    "LEVELS",
]

path = __file__
PACKAGE_PATH = os.path.dirname(path)

DEFAULT_SEED = 0

# wall-clock seconds per decided instance
DEFAULT_BUDGET_SECONDS = 60.0

ISOMORPHISM_NODE_LIMIT = 2_000_000

# synth: orderings are searched exhaustively up to this many vertices
EXHAUSTIVE_ORDERING_LIMIT = 9
BEAM_WIDTH = 1000
DFS_BUDGET_SHARE = 0.5

NAIVE_LCWD_LIMIT = 7
GENERAL_CWD_LIMIT = 5

# CLI family name -> module path below cwkit/families
FAMILY_MODULES = {
    "path-power": "path_powers/power_graph",
    "J": "path_powers/j_graph",
    "Z": "path_powers/z_graph",
    "S": "s_graphs/s_graph",
    "S+": "s_graphs/s_plus_graph",
    "F": "m_graphs/f_graph",
    "M": "m_graphs/m_graph",
    "gem": "m_graphs/gem",
    "M2+": "m_graphs/m2_graph",
    "M2-": "m_graphs/m2_graph",
}

# parameters implied by the family name itself
FAMILY_PRESETS = {
    "M2+": {"sign": "+"},
    "M2-": {"sign": "-"},
}

# claim id -> module path below cwkit/verify/claims
CLAIM_MODULES = {
    "lemma1": "section1/lemma1",
    "lemma2": "section2/lemma2",
    "thm1": "section2/theorem1",
    "prop3": "section2/prop3",
    "iso-pairs": "section3/iso_pairs",
    "lemma4": "section3/lemma4",
    "thm2.1": "section3/theorem2",
    "thm2.2": "section3/theorem2",
    "thm2.3": "section3/theorem2",
    "prop5.1": "section3/prop5",
    "prop5.2": "section3/prop5",
    "prop5.3": "section3/prop5",
    "prop5.disjoint": "section3/prop5",
    "prop5.neg-remark": "section3/prop5",
    "thm3": "section4/theorem3",
    "prop6.1": "section4/prop6",
    "prop6.2": "section4/prop6",
    "m2plus-variants": "section4/m2plus_variants",
}

# claim id -> parameters per level; a claim missing from a level is not run there
LEVELS = {
    "smoke": {
        "lemma1": {"k": [2], "budget": 30.0},
        "lemma2": {"k": [3, 4], "budget": 10.0},
        "thm1": {"k": [1], "budget": 30.0},
        "prop3": {"k": [0, 1, 2], "budget": 30.0},
        "iso-pairs": {"k": [3], "budget": 10.0},
        "lemma4": {"k": [3], "budget": 60.0},
        "prop5.disjoint": {"k": [2, 3], "budget": 10.0},
        "prop5.neg-remark": {"k": [3], "budget": 60.0},
        "m2plus-variants": {"budget": 60.0},
    },
    "desk": {
        "lemma1": {"k": [2, 3, 4], "budget": 600.0},
        "lemma2": {"k": [3, 4, 5, 6], "budget": 10.0},
        "thm1": {"k": [1, 2, 3], "budget": 600.0},
        "prop3": {"k": [0, 1, 2, 3], "budget": 1800.0},
        "iso-pairs": {"k": [3, 4, 5], "budget": 60.0},
        "lemma4": {"k": [3, 4, 5], "budget": 120.0},
        "thm2.3": {"k": [2], "budget": 600.0},
        "prop5.1": {"k": [3], "budget": 600.0},
        "prop5.2": {"k": [3], "budget": 600.0},
        "prop5.3": {"k": [2], "budget": 600.0},
        "prop5.disjoint": {"k": [2, 3, 4], "budget": 10.0},
        "prop5.neg-remark": {"k": [3], "budget": 600.0},
        "thm3": {"budget": 600.0},
        "prop6.1": {"budget": 600.0},
        "m2plus-variants": {"budget": 600.0},
    },
    "stretch": {
        "thm2.1": {"k": [3], "budget": 7200.0},
        "thm2.2": {"k": [3], "budget": 7200.0},
        "prop6.2": {"k": [3], "l": [0, 1, 2], "budget": 7200.0},
    },
}
