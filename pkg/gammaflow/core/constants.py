import logging

BATCH = 'batch'
INLINE = 'inline'
FLOW_TYPES = [BATCH, INLINE]

LOGGING_LEVEL = logging.INFO

# Precision
GUARD_BITS = 16
MIN_BITS = 64
DEFAULT_BITS = 128
DEFAULT_MAX_ESCALATIONS = 4
DEFAULT_ESCALATION_FACTOR = 2

# Sequences
GAMMA_N = 'GAMMA_N'
ETA_N = 'ETA_N'
DELTA_N = 'DELTA_N'
ETA_TILDE_N = 'ETA_TILDE_N'
DELTA_TILDE_N = 'DELTA_TILDE_N'
G_AT_1 = 'G_AT_1'
H_AT_1 = 'H_AT_1'
SEQUENCES = [GAMMA_N, ETA_N, DELTA_N, ETA_TILDE_N, DELTA_TILDE_N, G_AT_1, H_AT_1]

SERIES = 'SERIES'
RECURRENCE = 'RECURRENCE'
IDENTITY = 'IDENTITY'
QUADRATURE = 'QUADRATURE'
METHODS = [SERIES, RECURRENCE, IDENTITY, QUADRATURE]

# Certification
CERTIFIED_NONZERO = 'CERTIFIED_NONZERO'
INDETERMINATE = 'INDETERMINATE'
CERT_STATUSES = [CERTIFIED_NONZERO, INDETERMINATE]

SYMBOLIC = 'SYMBOLIC'
INTERVAL_LU = 'INTERVAL_LU'
CERT_PATHS = [SYMBOLIC, INTERVAL_LU]

DEFAULT_TERM_BUDGET = 500
# Largest Jacobian tried symbolically before interval elimination
SYMBOLIC_MAX_SIZE = 4

# Ledger line kinds
LEDGER_CERT = 'cert'
LEDGER_TELEMETRY = 'telemetry'

# Column set used for theta = gamma in J_{m, theta}
THETA_GAMMA_OWN = 'own'
THETA_GAMMA_SHIFTED = 'shifted'
THETA_GAMMA_CONVENTIONS = [THETA_GAMMA_OWN, THETA_GAMMA_SHIFTED]

# How table entries are cut to their printed digits
TRUNCATE = 'trunc'
ROUND_HALF_EVEN = 'half_even'
DIGIT_ROUNDINGS = [TRUNCATE, ROUND_HALF_EVEN]

# Polynomial cache
NORMALIZATION_ID = 'primitive-positive-leading/1'
CACHE_DIR_ENV = 'GAMMAFLOW_CACHE_DIR'
DEFAULT_CACHE_DIR = '.gammaflow_cache'

# Exit codes
EXIT_OK = 0
EXIT_INVARIANT_FAILURE = 1
EXIT_INDETERMINATE = 2
EXIT_USAGE = 3
