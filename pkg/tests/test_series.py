import random
from fractions import Fraction

import pytest

from twophoton.scalars import ComplexRational, parse_complex_rational, parse_rational
from twophoton.series import TruncatedSeries


def S(coeffs):
    return TruncatedSeries([Fraction(c) for c in coeffs])


def test_addition_examples():
    # (1 + z) + (1 - z) at k=2
    assert S([1, 1, 0]) + S([1, -1, 0]) == S([2, 0, 0])
    a = S([3, -2, 7])
    assert a + TruncatedSeries.zero(2) == a
    # both z^2 terms truncate away at k=1
    assert S([0, 0]) + S([0, 0]) == TruncatedSeries.zero(1)


def test_multiplication_examples():
    assert S([1, 1, 0]) * S([1, -1, 0]) == S([1, 0, -1])
    assert S([1, 1]) * S([1, 1]) == S([1, 2])
    z = TruncatedSeries.z_power(1, 1)
    assert z * z == TruncatedSeries.zero(1)


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        S([1, 2]) + S([1, 2, 3])
    with pytest.raises(ValueError):
        S([1, 2]) * S([1, 2, 3])


def test_exp_examples():
    c = Fraction(3, 2)
    e = TruncatedSeries.z_power(1, 2, c).exp()
    assert e == TruncatedSeries([1, c, c * c / 2])
    assert TruncatedSeries.zero(3).exp() == TruncatedSeries.one(3)
    # exp(2z) exp(-2z) = 1 at k=3; both factors expanded independently
    plus = TruncatedSeries([Fraction(1), Fraction(2), Fraction(2), Fraction(4, 3)])
    minus = TruncatedSeries([Fraction(1), Fraction(-2), Fraction(2), Fraction(-4, 3)])
    assert TruncatedSeries.z_power(1, 3, 2).exp() == plus
    assert TruncatedSeries.z_power(1, 3, -2).exp() == minus
    assert plus * minus == TruncatedSeries.one(3)
    with pytest.raises(ValueError):
        S([1, 1]).exp()


def test_sqrt_examples():
    assert S([1, 1, 0]).sqrt() == TruncatedSeries(
        [Fraction(1), Fraction(1, 2), Fraction(-1, 8)])
    assert TruncatedSeries.one(4).sqrt() == TruncatedSeries.one(4)
    s = S([1, -2, 1, 0]).sqrt()
    assert s == S([1, -1, 0, 0])
    assert s * s == S([1, -2, 1, 0])
    with pytest.raises(ValueError):
        S([4, 0]).sqrt()


def test_inverse_examples():
    assert S([1, -1, 0]).inverse() == S([1, 1, 1])
    assert TruncatedSeries.one(3).inverse() == TruncatedSeries.one(3)
    a = S([1, 2, 0, 0, 0])
    assert a.inverse() * a == TruncatedSeries.one(4)
    with pytest.raises(ValueError):
        S([0, 1]).inverse()


def test_divided_by_z():
    assert S([0, 2, 3]).divided_by_z() == S([2, 3])
    with pytest.raises(ValueError):
        S([1, 2]).divided_by_z()


def _random_series(rng, order):
    return TruncatedSeries(
        [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(order + 1)])


def test_ring_axioms_random():
    rng = random.Random(7)
    for order in (0, 1, 3, 5):
        for _ in range(25):
            a, b, c = (_random_series(rng, order) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_exp_sqrt_functional_identities_random():
    rng = random.Random(11)
    for order in (1, 2, 4, 6):
        for _ in range(10):
            a = _random_series(rng, order)
            nil = TruncatedSeries([Fraction(0)] + list(a.coeffs[1:]))
            assert nil.exp() * (-nil).exp() == TruncatedSeries.one(order)
            unit = TruncatedSeries([Fraction(1)] + list(a.coeffs[1:]))
            s = unit.sqrt()
            assert s * s == unit
            assert unit.inverse() * unit == TruncatedSeries.one(order)


def test_truncation_consistency_random():
    # computing at high order then truncating equals computing low order
    rng = random.Random(13)
    for _ in range(20):
        a, b = _random_series(rng, 6), _random_series(rng, 6)
        for kp in (0, 2, 4):
            assert (a * b).truncate(kp) == a.truncate(kp) * b.truncate(kp)
            assert (a + b).truncate(kp) == a.truncate(kp) + b.truncate(kp)


def test_floats_rejected():
    with pytest.raises(TypeError):
        TruncatedSeries([0.5, 1])
    with pytest.raises(TypeError):
        S([1, 2]) * 0.5


def test_complex_rational_coefficients():
    i = ComplexRational(0, 1)
    a = TruncatedSeries([i, ComplexRational(1)], 1)
    sq = a * a
    assert sq == TruncatedSeries([ComplexRational(-1), ComplexRational(0, 2)], 1)
    assert a.inverse() * a == TruncatedSeries.one(1)


def test_scalar_parsing():
    assert parse_rational("1/10") == Fraction(1, 10)
    assert parse_rational("-3") == Fraction(-3)
    with pytest.raises(ValueError):
        parse_rational("x")
    assert parse_complex_rational("1/2+3/4i") == ComplexRational(
        Fraction(1, 2), Fraction(3, 4))
    assert parse_complex_rational("-i") == ComplexRational(0, -1)
    assert parse_complex_rational("2i") == ComplexRational(0, 2)
    assert parse_complex_rational("5/3") == ComplexRational(Fraction(5, 3))
    assert str(ComplexRational(Fraction(1, 2), Fraction(-1))) == "1/2-1i"


def test_complex_rational_arithmetic():
    i = ComplexRational(0, 1)
    assert i * i == -1
    assert (Fraction(1, 2) + i) - i == Fraction(1, 2)
    assert (1 / i) == -i
    assert i.reciprocal() == -i
    assert Fraction(2) * i == ComplexRational(0, 2)
