'''
Lambert W enclosures and the growth laws of the constant sequences.
'''
from .lambertw import lambert_w
from .laws import eta_asym, eta_tilde_asym, gamma_asym, delta_asym, delta_tilde_asym, \
    SaddleReport, saddle_point_diagnostics, AsymptoticReport, asymptotic_report, \
    relative_error_trend, report_rows, ASYMPTOTIC_SEQUENCES, BRACKETED
