'''
Exact polynomial algebra: the sparse ring, moment/cumulant conversion and the
integer relations P_n among gamma, gamma^(2), ..., gamma^(2n).
'''
from .poly import Poly, VarId, GAMMA_VAR, KAPPA_VAR, ZETA_VAR, gamma_var, kappa_var, \
    zeta_var, poly_arith, eval_poly_interval
from .bell import moment_from_cumulants, cumulant_from_moments, gamma_poly, zeta_poly
from .relations import build_P, solve_even, structure_report
from .textformat import dumps, loads, body_lines, golden_body, PolyCache
