"""
Constants used throughout the zf-proptime application.
"""

import os

# exact Z search: order cap and number of candidate subsets examined
DEFAULT_MAX_ORDER_Z = 20
DEFAULT_MAX_SUBSETS = 3_000_000

# force-set enumeration is exponential in the number of chronologies
DEFAULT_MAX_ORDER_FORCE_ENUM = 6
DEFAULT_MAX_FORCE_SETS = 20_000

DEFAULT_MAX_ORDER_ISO = 12

DEFAULT_JOBS = min(8, os.cpu_count() or 1)

# graph6 short form
GRAPH6_MAX_ORDER = 62
GRAPH6_HEADER = ">>graph6<<"

ENV_PREFIX = "ZF_"

EXCEPTIONS_FILE = "zigzag_exceptions.g6"
EXCEPTIONS_SIDECAR = "zigzag_exceptions.json"

CSV_COLUMNS = [
    "graph6", "n", "m", "Z", "pt", "PT", "pd",
    "realized_times", "eff_count", "eff_intersection",
]

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_BUDGET = 2
EXIT_IO = 3

# networkx.graph_atlas_g() holds every graph on at most 7 vertices
MAX_ATLAS_ORDER = 7

# two-parallel-path graphs are generated and deduplicated up to this order
MAX_PARALLEL_ORDER = 10

# all n! matchings are tried per graph in the K_n matching suite
MAX_ORDER_MATCHING_SWEEP = 5

SUITE_NAMES = [
    "bounds", "extremes", "nonuniqueness", "reversal", "intersection",
    "deletion", "zigzag", "matching", "kn-matching", "vertex", "prime",
    "trail", "tree",
]
