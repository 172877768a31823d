import pickle
from fractions import Fraction

import numpy as np
import pytest

from gammaflow.core.errors import IntervalContainsZero
from gammaflow.numerics import Interval, PrecisionConfig, iv_arith, with_escalation
from gammaflow.numerics.interval import decimal_string, resolve_bits

def test_exact_contains_rational():
    third = Interval.exact(Fraction(1, 3), 64)
    assert third.contains(Fraction(1, 3))
    assert third.width > 0
    assert third.width < Fraction(1, 2 ** 64)
    assert Interval.exact(5).contains(5)
    assert Interval.exact(5).width == 0

def test_hull_rejects_reversed_endpoints():
    with pytest.raises(ValueError):
        Interval.hull(2, 1)

def test_arithmetic_encloses_exact_result():
    a = Interval.exact(Fraction(1, 3), 128)
    b = Interval.exact(Fraction(2, 7), 128)
    assert (a + b).contains(Fraction(13, 21))
    assert (a - b).contains(Fraction(1, 21))
    assert (a * b).contains(Fraction(2, 21))
    assert (a / b).contains(Fraction(7, 6))
    assert iv_arith(a, b, 'mul').contains(Fraction(2, 21))
    assert (1 - a).contains(Fraction(2, 3))
    assert (a ** 3).contains(Fraction(1, 27))
    with pytest.raises(ValueError):
        iv_arith(a, b, 'pow')

def test_negation_keeps_precision():
    x = Interval.exact(Fraction(1, 3), 256)
    y = -x
    assert y.contains(Fraction(-1, 3))
    assert y.width <= x.width
    assert y.width < Fraction(1, 2 ** 250)
    assert (-Interval.exact(Fraction(2, 7), 512)).width < Fraction(1, 2 ** 500)

def test_random_rational_arithmetic_is_sound():
    rng = np.random.RandomState(1234)
    exact = {
        'add': lambda p, q: p + q,
        'sub': lambda p, q: p - q,
        'mul': lambda p, q: p * q,
        'div': lambda p, q: p / q
    }
    for _ in range(200):
        p = Fraction(int(rng.randint(-10 ** 6, 10 ** 6)), int(rng.randint(1, 10 ** 6)))
        q = Fraction(int(rng.randint(-10 ** 6, 10 ** 6)), int(rng.randint(1, 10 ** 6)))
        bits = int(rng.choice([64, 128, 256]))
        a = Interval.exact(p, bits)
        b = Interval.exact(q, bits)
        for op, f in exact.items():
            if op == 'div' and not b.excludes_zero():
                continue
            assert iv_arith(a, b, op).contains(f(p, q)), (op, p, q, bits)
        assert (-a).contains(-p)

def test_division_by_interval_containing_zero():
    with pytest.raises(IntervalContainsZero):
        Interval.exact(1) / Interval.hull(-1, 1)

def test_sign_queries():
    assert Interval.hull(1, 2).is_positive()
    assert Interval.hull(-2, -1).is_negative()
    straddle = Interval.hull(-1, 1)
    assert straddle.contains_zero()
    assert not straddle.excludes_zero()
    assert straddle.mignitude() == 0
    assert straddle.magnitude() == 1
    assert Interval.hull(-3, -2).mignitude() == 2

def test_elementary_functions():
    one = Interval.exact(1, 128)
    e = one.exp()
    assert e.log().contains(1)
    assert Interval.exact(4, 128).sqrt().contains(2)
    with pytest.raises(ValueError):
        Interval.exact(0).log()
    with pytest.raises(ValueError):
        Interval.exact(-1).sqrt()

def test_widen_hull_intersect():
    a = Interval.hull(1, 2)
    assert a.widen(Fraction(1, 2)).contains(Interval.hull(Fraction(1, 2), Fraction(5, 2)))
    assert a.hull_with(Interval.hull(3, 4)).contains(Interval.hull(1, 4))
    assert Interval.hull(1, 3).intersect(Interval.hull(2, 4)).contains(Interval.hull(2, 3))
    with pytest.raises(ValueError):
        Interval.hull(1, 2).intersect(Interval.hull(3, 4))

def test_unbounded():
    whole = Interval.unbounded()
    assert not whole.is_finite()
    assert whole.contains_zero()
    assert whole.lo_str(5) == '-inf'
    assert whole.hi_str(5) == 'inf'
    with pytest.raises(ValueError):
        whole.lo
    assert not Interval.from_strings('-inf', 'inf').is_finite()

def test_endpoint_strings_round_outward():
    third = Interval.exact(Fraction(1, 3), 64)
    assert third.lo_str(5) == '0.33333'
    assert third.hi_str(5) == '0.33334'
    back = Interval.from_strings(third.lo_str(30), third.hi_str(30), 64)
    assert back.contains(third)

def test_decimal_string():
    assert decimal_string(Fraction(1, 8), 2) == '0.12'
    assert decimal_string(Fraction(3, 8), 2) == '0.38'
    assert decimal_string(Fraction(-1, 3), 3, 'floor') == '-0.334'
    assert decimal_string(Fraction(-1, 3), 3, 'ceil') == '-0.333'
    assert decimal_string(Fraction(5, 2), 0) == '2'
    assert decimal_string(Fraction(1, 200), 2, 'ceil') == '0.01'
    assert decimal_string(Fraction(7, 9), 2, 'trunc') == '0.77'
    assert decimal_string(Fraction(-1, 3), 3, 'trunc') == '-0.333'
    assert decimal_string(Fraction(-1, 10000), 3, 'trunc') == '-0.000'
    assert decimal_string(Fraction(-7, 2), 0, 'trunc') == '-3'
    with pytest.raises(ValueError):
        decimal_string(Fraction(1), 2, 'up')

def test_pickle_round_trip_keeps_bits():
    a = Interval.exact(Fraction(1, 3), 96)
    b = pickle.loads(pickle.dumps(a))
    assert b.bits == 96
    assert b.lo == a.lo and b.hi == a.hi

def test_precision_config():
    cfg = PrecisionConfig(64, 3, 2)
    assert [c.bits for c in cfg.ladder()] == [64, 128, 256, 512]
    assert cfg.escalate().bits == 128
    with pytest.raises(ValueError):
        PrecisionConfig(32)
    with pytest.raises(ValueError):
        PrecisionConfig(64, -1)
    with pytest.raises(ValueError):
        PrecisionConfig(64, 1, 1)
    assert resolve_bits(cfg) == 64
    assert resolve_bits(200) == 200
    with pytest.raises(ValueError):
        resolve_bits(8)

def test_with_escalation_climbs_until_accepted():
    seen = []

    def attempt(step):
        seen.append(step.bits)
        if step.bits < 256:
            raise IntervalContainsZero('too coarse')
        return step.bits

    result, step, accepted = with_escalation(attempt, PrecisionConfig(64, 4))
    assert accepted
    assert result == 256 and step.bits == 256
    assert seen == [64, 128, 256]

def test_with_escalation_exhausted():
    result, step, accepted = with_escalation(lambda s: s.bits, PrecisionConfig(64, 2),
                                             accept = lambda r: False)
    assert not accepted
    assert result == 256
    assert step.bits == 256

if __name__ == "__main__":
    pytest.main([__file__])
