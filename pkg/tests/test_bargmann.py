import random
from fractions import Fraction

import pytest

from twophoton.bargmann import (DiffOperator, EigenProblem,
                                SingularRecurrenceError, classical_rep,
                                deformed_rep, eigen_operator, first_order_rep,
                                rep_checks, series_solve, verify_rep)
from twophoton.scalars import ComplexRational
from twophoton.series import TruncatedSeries


def op0(terms):
    return DiffOperator.from_scalar_terms(0, {k: Fraction(v) for k, v in terms.items()})


def test_compose_boson_relation():
    d = classical_rep("A-", 0)
    a = classical_rep("A+", 0)
    assert d * a == op0({(1, 1): 1, (0, 0): 1})
    assert a * a == op0({(2, 0): 1})
    n = classical_rep("N", 0)
    assert n * n == op0({(2, 2): 1, (1, 1): 1})


def test_compose_matches_action_on_monomials():
    rng = random.Random(3)
    for _ in range(15):
        x = DiffOperator.from_scalar_terms(0, {
            (rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(-4, 4))
            for _ in range(3)})
        y = DiffOperator.from_scalar_terms(0, {
            (rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(-4, 4))
            for _ in range(3)})
        both = x * y
        for n in range(13):
            mono = {n: Fraction(1)}
            via_product = both.apply_to_polynomial(mono)
            via_steps = x.apply_to_polynomial(y.apply_to_polynomial(mono))
            assert via_product == via_steps, (x, y, n)


def test_compose_associative_random():
    rng = random.Random(9)
    for _ in range(10):
        ops = []
        for _ in range(3):
            ops.append(DiffOperator(1, {
                (rng.randint(0, 2), rng.randint(0, 2)): TruncatedSeries(
                    [Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))])
                for _ in range(3)}))
        x, y, z = ops
        assert (x * y) * z == x * (y * z)


def test_classical_table():
    assert classical_rep("B-", 0) == op0({(0, 2): 1})
    assert classical_rep("M", 0) == op0({(0, 0): 1})
    com = classical_rep("A-", 0).commutator(classical_rep("A+", 0))
    assert com == DiffOperator.identity(0)
    with pytest.raises(KeyError):
        classical_rep("Q")


def test_deformed_first_order_values():
    z1 = lambda c: TruncatedSeries([Fraction(0), Fraction(c)])
    one1 = TruncatedSeries([Fraction(1), Fraction(0)])
    assert deformed_rep("N", 1) == DiffOperator(1, {(1, 1): one1, (3, 1): z1(1)})
    assert deformed_rep("A+", 1) == DiffOperator(
        1, {(1, 0): one1, (3, 0): z1(Fraction(-1, 2))})
    assert deformed_rep("B-", 1) == DiffOperator(
        1, {(0, 2): one1, (2, 2): z1(1), (1, 1): z1(1)})
    assert deformed_rep("B+", 1) == DiffOperator(1, {(2, 0): one1})


def test_deformed_rep_reduces_to_classical():
    for gen in ("B+", "N", "M", "A+", "A-", "B-"):
        assert deformed_rep(gen, 0) == classical_rep(gen, 0)


def test_first_order_table_equals_truncated_full():
    for gen in ("B+", "N", "M", "A+", "A-", "B-"):
        assert deformed_rep(gen, 3).truncate(1) == first_order_rep(gen, 1)


def test_verify_rep_all_orders():
    for order in (0, 1, 2, 3, 4):
        for entry in verify_rep(order):
            assert entry.passed, (entry.name, order, entry.residual)
    for entry in rep_checks(2):
        assert entry.passed, entry.name


def test_eigen_operator_classical_shape():
    betas = tuple(ComplexRational(b) for b in (2, 3, 5, 7, 11))
    problem = EigenProblem(betas, ComplexRational(13))
    got = eigen_operator(problem, 0, "classical")
    # beta2 d^2 + (beta1 a + beta4) d + (beta3 a^2 + beta5 a - lambda)
    want = DiffOperator.from_scalar_terms(0, {
        (0, 2): ComplexRational(3), (1, 1): ComplexRational(2),
        (0, 1): ComplexRational(7), (2, 0): ComplexRational(5),
        (1, 0): ComplexRational(11), (0, 0): ComplexRational(-13)})
    assert got == want


def test_eigen_operator_first_order_displayed_terms():
    betas = tuple(ComplexRational(b) for b in (2, 3, 5, 7, 11))
    problem = EigenProblem(betas, ComplexRational(13))
    got = eigen_operator(problem, 1, "first-order")
    z1 = lambda c: TruncatedSeries([Fraction(0), Fraction(c)])
    # d coefficient gains z(beta1 a^3 + beta2 a + 3 beta4 a^2 / 2)
    assert got.terms[(3, 1)] == z1(2)
    assert got.terms[(1, 1)].coeffs[1] == Fraction(3)
    assert got.terms[(2, 1)] == z1(Fraction(21, 2))
    # constant part gains -z beta5 a^3 / 2
    assert got.terms[(3, 0)] == z1(Fraction(-11, 2))
    # d^2 coefficient becomes beta2 (1 + z a^2)
    assert got.terms[(2, 2)] == z1(3)


def test_first_order_equals_full_mod_z2():
    betas = tuple(ComplexRational(b) for b in (1, 1, 1, 1, 1))
    problem = EigenProblem(betas, ComplexRational(2))
    assert eigen_operator(problem, 3, "full").truncate(1) == \
        eigen_operator(problem, 1, "first-order")


def test_eigenproblem_validation():
    with pytest.raises(ValueError):
        EigenProblem((ComplexRational(0),) * 5, ComplexRational(1))
    with pytest.raises(ValueError):
        EigenProblem((ComplexRational(1),) * 4, ComplexRational(1))


def test_series_solve_number_operator():
    zero, one = ComplexRational(0), ComplexRational(1)
    problem = EigenProblem((one, zero, zero, zero, zero), ComplexRational(4))
    coeffs, tail = series_solve(eigen_operator(problem, 0, "classical"), 9)
    assert coeffs == [0, 0, 0, 0, 1, 0, 0, 0, 0, 0]
    assert tail == {}


def test_series_solve_beta2_recurrence():
    zero, one = ComplexRational(0), ComplexRational(1)
    lam = ComplexRational(Fraction(3, 2))
    problem = EigenProblem((zero, one, zero, zero, zero), lam)
    coeffs, _ = series_solve(eigen_operator(problem, 0, "classical"), 11)
    # independent recurrence c_{n+2} = lam c_n / ((n+1)(n+2))
    expect = [Fraction(1), Fraction(0)]
    for n in range(10):
        expect.append(Fraction(3, 2) * expect[n] / ((n + 1) * (n + 2)))
    assert coeffs == expect


def test_series_solve_deformed_residual_window():
    zero, one = ComplexRational(0), ComplexRational(1)
    problem = EigenProblem((zero, one, zero, zero, zero), one)
    op = eigen_operator(problem, 1, "first-order").substitute_z(Fraction(1, 10))
    coeffs, tail = series_solve(op, 30)
    # the d^2 head lowers degree by two: residual vanishes through degree 28
    assert all(m > 28 for m in tail)
    assert tail
    image = op.apply_to_polynomial(dict(enumerate(coeffs)))
    for m, s in image.items():
        if m <= 28:
            assert s.coeffs[0] == 0


def test_series_solve_custom_seeds():
    # f'' = 0 with seeds picks out the affine solutions
    op = op0({(0, 2): 1})
    coeffs, tail = series_solve(op, 5, seeds={0: Fraction(2), 1: Fraction(3)})
    assert coeffs == [2, 3, 0, 0, 0, 0]
    assert tail == {}


def test_series_solve_singular_head_with_obstruction():
    # (1 - a/5) d + 1: the head (m+1)(1 - m/5) vanishes at m = 5 while the
    # constant term keeps feeding the right-hand side
    op = op0({(0, 1): 1, (1, 2): Fraction(-1, 5), (0, 0): 1})
    with pytest.raises(SingularRecurrenceError) as exc:
        series_solve(op, 10)
    assert exc.value.index == 6


def test_series_solve_rejects_unsubstituted_operator():
    with pytest.raises(ValueError):
        series_solve(deformed_rep("N", 2), 5)
    with pytest.raises(ValueError):
        series_solve(DiffOperator.zero(0), 5)
