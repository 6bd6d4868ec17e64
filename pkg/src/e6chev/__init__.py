"""Structure constants, commutator formulas and root graphs for the Chevalley group E6.

The engine derives all signs of N_{r,s} from the thirty extraspecial pairs as
products of free sign variables, specialises them, and checks the results
against the Lie algebra and against the reference tables.
"""

from .rootsys import RootSystem, build_e6
from .signcalc import SignMonomial, parse_monomial
from .constants import ConstantTable, derive_constants, positive_table, extraspecial_pair
from .commutator import generate_all, commutator_rule
from .liealg import build_algebra, jacobi_scan
from .unipotent import UnipotentGroup
from .rootgraph import build_graph, path_counts, k_numbers

__version__ = "0.1.0"

__all__ = [
    "RootSystem", "build_e6", "SignMonomial", "parse_monomial", "ConstantTable",
    "derive_constants", "positive_table", "extraspecial_pair", "generate_all",
    "commutator_rule", "build_algebra", "jacobi_scan", "UnipotentGroup",
    "build_graph", "path_counts", "k_numbers",
]
