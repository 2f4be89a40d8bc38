"""Triple Roman domination: verification, exact solvers, bounds, families and the X3C reduction."""

from .bounds import BoundEntry, BoundReport, best_bounds, randomized_3rdf
from .exact import (
    ChainReport,
    Method,
    SizeGuardError,
    SolveResult,
    domination_number,
    double_roman_number,
    gamma_3R_bnb,
    gamma_kR_bruteforce,
    inequality_chain_report,
    roman_number,
)
from .families import (
    M_value,
    attains_seven_quarters,
    gamma_cycle,
    gamma_double_star,
    gamma_path,
    gamma_star,
    gen_family_F,
    gen_family_H,
)
from .graph import Graph, GraphFormatError, from_edge_list, struct_report, to_edge_list
from .labeling import (
    InvalidLabelingError,
    Labeling,
    Violation,
    eliminate_ones,
    is_valid,
    verify_3rdf,
    verify_krdf,
)
from .reduction import X3CInstance, build_gadget, cover_to_labeling, labeling_to_cover, x3c_bruteforce
from .treedp import gamma_3R_tree

__version__ = "0.1.0"
