"""Count tuples of group elements satisfying first-order formulas and check
the divisibility of those counts predicted by the formula matrix."""

from .counting import BACKEND, BudgetExceeded, count_solutions, evaluate, evaluate_word
from .formula import (
    Formula,
    Word,
    change_free_variable,
    classify_variables,
    detect_isolated,
    substitute_bound,
)
from .graph import assemble_matrix, build_graph, cycle_basis_rows, export_dot
from .groups import (
    GroupError,
    GroupTable,
    brauer_check,
    centralizer,
    enumerate_subgroups,
    gcd_group_int,
    load_group,
)
from .linalg import IntMatrix, compute_n, minors_gcd, smith_normal_form
from .parser import FormulaSyntaxError, parse_formula
from .verify import AnalysisReport, analyze, predicted_divisor, verify

__version__ = "0.1.0"
