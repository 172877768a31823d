from .interval import Interval, PrecisionConfig, iv_arith, with_escalation, working_precision
from .constants import enclose_e, enclose_gamma, enclose_pi, enclose_zeta, enclose_zeta_em
