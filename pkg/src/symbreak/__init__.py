"""Row and column symmetry breaking for matrix models of constraint problems."""
from .breaking import (PugetOrder, SymBreak, SymBreakConfig, ValueOrder, ValuePrecedence,
                       apply_config, check_double_lex, check_double_lex_col_sum,
                       check_order_1st_row_col, check_snakelex_c, check_snakelex_r,
                       check_value_precedence, post_double_lex, post_double_lex_col_sum,
                       post_order_1st_row_col, post_precedence, post_puget,
                       post_row_wise_lex_leader, post_snakelex_c, post_snakelex_r,
                       puget_channel)
from .canonical import (ClassReport, Classifier, canonical_form, classify, is_lex_leader,
                        min_col_permutation, orbit)
from .core import (DomainSet, Failure, Matrix, Model, ResourceLimitError, Strength, VarGrid,
                   apply_row_col_perm, apply_value_map, compose, matrix_transpose)
from .lexorder import entwined_lex_leq, lex_leq, lex_lt, reversed_lex_leq
from .models import (BibdParams, CaParams, EfpaParams, UnconstrainedParams, build,
                     build_bibd, build_ca, build_efpa, build_unconstrained, parse_problem)
from .search import SearchConfig, SearchStats, VarOrder, all_solutions, propagate, solve_all

__version__ = "0.1.0"
