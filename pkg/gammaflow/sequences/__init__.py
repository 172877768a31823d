'''
Rigorous enclosures of the constant sequences and the identities and tables
built on them.
'''
from .series import eval_F, eta_n, eta_tilde_n, multisection, partial_sum
from .moments import gamma_n, gamma_sequence, gamma_star, delta_n, delta_tilde_n, \
    ConstantRecord, constant_record
from .quadrature import delta_n_quadrature, quadrature_abs_delta, tail_bound
from .identities import reflection_residual, zeta_consistency, identity_residual, \
    delta_tilde_identity_residual, eta_bracket, eta_tilde_bracket, sign_pattern_ok
from .tables import CertifiedValue, TableRow, TableArtifact, emit_tables, to_csv, \
    to_json, to_text
