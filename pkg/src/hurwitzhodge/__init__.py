"""Exact Hurwitz numbers, ELSV polynomiality and the lambda_g formula."""
from .elsv import (WittenTable, c_g, extract_witten, interpolate_P, lambda_g_check,
                   verify_genus_ansatz, witten_table)
from .hurwitz import HurwitzCache, hurwitz_oracle, hurwitz_solve, solve_closure
from .pipeline import (change_of_vars, k1_closed_form, lambda_series, minhur_closed_form, omega,
                       table_report)
from .sympoly import SymPoly
from .workspace import Workspace

__all__ = ["HurwitzCache", "SymPoly", "WittenTable", "Workspace", "c_g", "change_of_vars",
           "extract_witten", "hurwitz_oracle", "hurwitz_solve", "interpolate_P",
           "k1_closed_form", "lambda_g_check", "lambda_series", "minhur_closed_form", "omega",
           "solve_closure", "table_report", "verify_genus_ansatz", "witten_table"]
__version__ = "0.1.0"
