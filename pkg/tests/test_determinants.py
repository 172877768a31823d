from fractions import Fraction

import numpy as np
import pytest

from gammaflow.certify import symbolic_det, permutation_det, bareiss_det, minor_det, interval_det, \
    JacobianSystem, theta_choices
from gammaflow.core.errors import IntervalContainsZero, TermBudgetExceeded
from gammaflow.numerics import Interval
from gammaflow.polys import Poly, gamma_var

def _integer_matrix(size, seed):
    rng = np.random.RandomState(seed)
    M = np.empty((size, size), dtype = object)
    for i in range(size):
        for j in range(size):
            M[i, j] = int(rng.randint(-9, 10))
    return M

def test_exact_strategies_agree():
    for size in range(1, 6):
        for seed in range(5):
            M = _integer_matrix(size, seed)
            expected = permutation_det(M)
            assert bareiss_det(M) == expected
            assert minor_det(M) == expected

def test_known_determinants():
    assert bareiss_det(np.array([[2, 1], [1, 1]], dtype = object)) == 1
    # A zero leading pivot needs a row swap
    assert bareiss_det(np.array([[0, 1], [1, 0]], dtype = object)) == -1
    assert bareiss_det(np.array([[0, 0], [1, 2]], dtype = object)) == 0
    assert bareiss_det(np.empty((0, 0), dtype = object)) == 1

def test_polynomial_matrices():
    x = Poly.var(gamma_var(1))
    y = Poly.var(gamma_var(2))
    M = np.array([[x, y, Poly.const(1)],
                  [y, x, Poly.const(2)],
                  [Poly.const(1), x + y, x * y]], dtype = object)
    expected = Poly._coerce(permutation_det(M))
    assert symbolic_det(M, 'bareiss') == expected
    assert symbolic_det(M, 'minors') == expected
    assert symbolic_det(M) == expected
    with pytest.raises(ValueError):
        symbolic_det(M, 'laplace')

def test_term_budget():
    variables = [Poly.var(gamma_var(k)) for k in range(1, 17)]
    M = np.array([variables[4 * i:4 * i + 4] for i in range(4)], dtype = object)
    assert symbolic_det(M, term_budget = None).term_count() == 24
    with pytest.raises(TermBudgetExceeded):
        symbolic_det(M, 'minors', term_budget = 5)

def test_symbolic_determinants_of_jacobians():
    system = JacobianSystem(5)
    for m in range(2, 6):
        for theta in theta_choices(m):
            M = system.matrix(m, theta)
            expected = Poly._coerce(permutation_det(M))
            assert symbolic_det(M, term_budget = None) == expected, (m, theta)

def test_interval_determinant_encloses_exact_value():
    M = _integer_matrix(5, 11)
    for i in range(5):
        M[i, i] += 50
    exact = permutation_det(M)
    boxed = np.empty(M.shape, dtype = object)
    for i in range(5):
        for j in range(5):
            boxed[i, j] = Interval.exact(Fraction(M[i, j], 3), 128)
    value = interval_det(boxed)
    assert value.contains(Fraction(exact, 3 ** 5))
    assert value.width < Fraction(1, 2 ** 100)

def test_interval_determinant_of_singular_box():
    zero = Interval.hull(-1, 1)
    M = np.array([[zero, zero], [zero, zero]], dtype = object)
    with pytest.raises(IntervalContainsZero):
        interval_det(M)

def test_non_square_rejected():
    with pytest.raises(ValueError):
        bareiss_det(np.zeros((2, 3), dtype = object))

if __name__ == "__main__":
    pytest.main([__file__])
