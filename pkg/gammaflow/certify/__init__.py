'''
Certification that the Jacobians of the relations P_2, ..., P_n do not
vanish at the true constants, and the exact Pascal-submatrix checks in
cumulant coordinates. ``certify`` itself lives in ``gammaflow.certify.runner``.
'''
from .jacobian import ThetaChoice, theta_choices, jacobian_columns, jacobian_matrix, JacobianSystem
from .determinants import symbolic_det, permutation_det, bareiss_det, minor_det, interval_det
from .lemma4 import lemma4_rows, lemma4_columns, lemma4_case, pascal_submatrix_det, \
    lstp_index_check, bell_jacobian_at_Kstar
from .certifier import CertRecord, certify_pair, certification_jobs, verdict
from .ledger import Ledger
