'''
Exact integer and rational building blocks shared by the symbolic and the
numeric layers.
'''
from .combinatorics import factorial, binomial, bernoulli, bernoulli_number, \
    even_zeta_coeff, reflection_coeff
