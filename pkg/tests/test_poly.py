from fractions import Fraction

import pytest

from gammaflow.numerics import Interval
from gammaflow.polys import Poly, VarId, gamma_var, kappa_var, poly_arith, eval_poly_interval

x = Poly.var(gamma_var(1))
y = Poly.var(gamma_var(2))

def test_construction_and_inspection():
    p = x ** 2 * 3 + y - 5
    assert p.term_count() == 3
    assert p.total_degree() == 2
    assert p.degree_in(gamma_var(1)) == 2
    assert p.coefficient([(gamma_var(1), 2)]) == 3
    assert p.coefficient([]) == -5
    assert p.variables() == [gamma_var(2), gamma_var(1)]
    assert Poly.const(0).is_zero()
    assert Poly.const(7).constant_value() == 7
    with pytest.raises(ValueError):
        p.constant_value()

def test_monomial_merges_repeated_variables():
    m = Poly.monomial([(gamma_var(1), 1), (gamma_var(2), 1), (gamma_var(1), 2)], 4)
    assert m == x ** 3 * y * 4

def test_varid():
    assert str(gamma_var(12)) == 'g12'
    assert VarId.parse('k3') == kappa_var(3)
    with pytest.raises(ValueError):
        VarId.parse('g')
    with pytest.raises(ValueError):
        gamma_var(0)

def test_arithmetic():
    p = x + y
    q = x - y
    assert p * q == x ** 2 - y ** 2
    assert poly_arith(p, q, 'add') == x * 2
    assert 1 - x == -(x - 1)
    assert (p * 3) / 3 == p
    assert x ** 0 == Poly.const(1)
    with pytest.raises(ValueError):
        poly_arith(p, q, 'div')
    with pytest.raises(ValueError):
        x ** -1

def test_exact_division():
    p = (x + y) * (x - y * 2)
    assert p.exquo(x + y) == x - y * 2
    with pytest.raises(ValueError):
        (x ** 2 + 1).exquo(x + y)
    with pytest.raises(ZeroDivisionError):
        p.exquo(Poly())

def test_leading_term_and_primitive():
    p = x ** 2 * Fraction(3, 2) + y * 3
    mono, coef = p.leading_term()
    assert coef == Fraction(3, 2)
    assert p.primitive() == x ** 2 + y * 2
    assert p.content() == Fraction(3, 2)
    with pytest.raises(ValueError):
        Poly().leading_term()

def test_derivative_substitute_evaluate():
    p = x ** 3 * y + y ** 2
    assert p.partial_derivative(gamma_var(1)) == x ** 2 * y * 3
    assert p.partial_derivative(gamma_var(3)).is_zero()
    assert p.substitute({gamma_var(2): x + 1}) == x ** 4 + x ** 3 + (x + 1) ** 2
    assert p.evaluate({gamma_var(1): 2, gamma_var(2): Fraction(1, 2)}) == Fraction(17, 4)
    with pytest.raises(ValueError):
        p.evaluate({gamma_var(1): 2})

def test_interval_evaluation_encloses_exact_value():
    p = x ** 3 * y - y ** 2 * 7 + x * Fraction(1, 3)
    point = {gamma_var(1): Fraction(2, 3), gamma_var(2): Fraction(-5, 7)}
    exact = p.evaluate(point)
    box = {v: Interval.exact(q, 128) for v, q in point.items()}
    value = eval_poly_interval(p, box, 128)
    assert value.contains(exact)
    assert value.width < Fraction(1, 2 ** 120)
    with pytest.raises(ValueError):
        eval_poly_interval(p, {gamma_var(1): Interval.exact(1)})

def test_equality_and_hash():
    assert x + y == y + x
    assert hash(x + y) == hash(y + x)
    assert x != 'x'
    assert {x + y: 1}[y + x] == 1

if __name__ == "__main__":
    pytest.main([__file__])
