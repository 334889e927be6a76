from .pm_square import (LINES, PMSquare, LineCheck, SquareReport, pm_square, line_product,  # noqa
                        line_product_orderings, line_positions, verify_square, line_expectations,
                        beta_quantum, format_square, parse_square)
from .nchv import (ValueAssignment, NCHVBound, line_correlations, classical_beta,  # noqa
                   all_classical_betas, nchv_max)
