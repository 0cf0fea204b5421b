import random
from fractions import Fraction

import pytest

from twophoton.discrete import (ExpPolyFunction, SchrodingerOperator,
                                apply_and_recheck, casimir,
                                discrete_derivative, exponential_solutions,
                                heat_polynomials, realize, sample_grid,
                                solution_checks, symmetry_check,
                                symmetry_checks, verify_realization)

Z = Fraction(1, 10)
M = Fraction(1)
A = Fraction(-1, 2)

PARAM_MATRIX = [(z, m, a)
                for z in (Fraction(1, 10), Fraction(1, 4))
                for m in (Fraction(1), Fraction(2))
                for a in (Fraction(-1, 2), Fraction(0))]


def basis_op(z, key):
    return SchrodingerOperator(z, {key: Fraction(1)})


def test_canonicalization_confluent_on_random_words():
    # multiply the same word with different association orders
    rng = random.Random(21)
    letters = [
        (1, 0, 0, 0, 0),   # x
        (0, 1, 0, 0, 0),   # t
        (0, 0, 1, 0, 0),   # T
        (0, 0, -1, 0, 0),  # T^{-1}
        (0, 0, 0, 1, 0),   # dx
        (0, 0, 0, 0, 1),   # dt
    ]
    for _ in range(20):
        word = [basis_op(Z, rng.choice(letters)) for _ in range(rng.randint(2, 8))]
        left = word[0]
        for w in word[1:]:
            left = left * w
        right = word[-1]
        for w in reversed(word[:-1]):
            right = w * right
        assert left == right


def test_shift_relations():
    t = basis_op(Z, (0, 1, 0, 0, 0))
    T = basis_op(Z, (0, 0, 1, 0, 0))
    Tinv = basis_op(Z, (0, 0, -1, 0, 0))
    # T t = (t + 4z) T
    assert T * t == (t + SchrodingerOperator(Z, {(0, 0, 0, 0, 0): 4 * Z})) * T
    assert Tinv * t == (t - SchrodingerOperator(Z, {(0, 0, 0, 0, 0): 4 * Z})) * Tinv
    assert T * Tinv == SchrodingerOperator.identity(Z)
    dt = basis_op(Z, (0, 0, 0, 0, 1))
    assert (dt * t - t * dt) == SchrodingerOperator.identity(Z)
    # dt and T are independent generators: they commute as operators
    assert (dt * T) == (T * dt)


def test_realize_examples():
    h = realize("H", M, A, Z)
    p = realize("P", M, A, Z)
    m_op = realize("M", M, A, Z)
    assert h == basis_op(Z, (0, 0, 0, 0, 1))
    assert p == basis_op(Z, (0, 0, 0, 1, 0))
    assert m_op == SchrodingerOperator(Z, {(0, 0, 0, 0, 0): M})
    k = realize("K", M, A, Z)
    assert k == SchrodingerOperator(Z, {
        (0, 1, 1, 1, 0): -1, (0, 0, 1, 1, 0): -4 * Z, (1, 0, 0, 0, 0): -M})
    d = realize("D", M, A, Z)
    assert d == SchrodingerOperator(Z, {
        (0, 1, 1, 0, 0): Fraction(1, 2) / Z, (0, 1, 0, 0, 0): -Fraction(1, 2) / Z,
        (0, 0, 1, 0, 0): 2, (0, 0, 0, 0, 0): -2 - A, (1, 0, 0, 1, 0): 1})


def test_realization_brackets_over_matrix():
    for z, m, a in PARAM_MATRIX:
        for entry in verify_realization(m, a, z):
            assert entry.passed, (entry.name, z, m, a, entry.residual)
    for entry in verify_realization(M, A, 0, classical=True):
        assert entry.passed, entry.name


def test_discrete_derivative_examples():
    fwd = discrete_derivative(Z, "forward")
    t = ExpPolyFunction.from_monomials(Z, {(0, 1): 1})
    t2 = ExpPolyFunction.from_monomials(Z, {(0, 2): 1})
    one = ExpPolyFunction.from_monomials(Z, {(0, 0): 1})
    assert fwd.apply(t) == one
    # ((t+4z)^2 - t^2)/(4z) = 2t + 4z
    assert fwd.apply(t2) == ExpPolyFunction.from_monomials(
        Z, {(0, 1): 2, (0, 0): 4 * Z})
    bwd = discrete_derivative(Z, "backward")
    assert bwd.apply(one).is_zero()
    with pytest.raises(ValueError):
        discrete_derivative(Z, "sideways")
    with pytest.raises(ValueError):
        discrete_derivative(0)


def test_casimir_annihilates_basic_solutions():
    ez = casimir(M, Z)
    for mono in ({(0, 0): 1}, {(1, 0): 1}, {(2, 0): 1, (0, 1): Fraction(1) / M}):
        phi = ExpPolyFunction.from_monomials(Z, mono)
        assert ez.apply(phi).is_zero()


def test_symmetry_lambdas():
    entries = {e.name.rsplit("/", 1)[1]: e for e in symmetry_checks(M, A, Z)}
    assert all(e.passed for e in entries.values()), {
        k: e.residual for k, e in entries.items() if not e.passed}
    _, lams = symmetry_check("D", M, A, Z)
    assert lams == (Fraction(2), Fraction(0), Fraction(0))
    _, lams = symmetry_check("C", M, A, Z)
    # Lambda = 2t + 2z(1 - m) - 4z x dx
    assert lams == (2 * Z * (1 - M), Fraction(2), -4 * Z)
    for gen in ("K", "H", "P", "M"):
        _, lams = symmetry_check(gen, M, A, Z)
        assert lams == (0, 0, 0)


def test_symmetry_lambda_matrix():
    for z, m, a in PARAM_MATRIX:
        if a != Fraction(-1, 2):
            continue
        _, lams = symmetry_check("C", m, a, z)
        assert lams == (2 * z * (1 - m), Fraction(2), -4 * z), (z, m)


def test_conformal_negative_control():
    entry, lams = symmetry_check("C", M, Fraction(0), Z)
    assert lams is None
    assert not entry.passed
    assert entry.residual != "0"
    # the obstruction is exactly m(1 + 2a) at a = 0
    entries = symmetry_checks(M, Fraction(0), Z)
    conformal = [e for e in entries if e.name.endswith("/C")][0]
    assert not conformal.passed


def test_classical_symmetries():
    entries = {e.name.rsplit("/", 1)[1]: e
               for e in symmetry_checks(M, A, 0, classical=True)}
    assert all(e.passed for e in entries.values())
    _, lams = symmetry_check("C", M, A, 0, classical=True)
    assert lams == (Fraction(0), Fraction(2), Fraction(0))


def test_heat_polynomials_values():
    polys = heat_polynomials(M, Z, 5)
    assert polys[2] == ExpPolyFunction.from_monomials(
        Z, {(2, 0): 1, (0, 1): Fraction(1) / M})
    assert polys[3] == ExpPolyFunction.from_monomials(
        Z, {(3, 0): 1, (1, 1): Fraction(3) / M})
    # degree four gains the lattice correction 3t(t + 4z)/m^2
    assert polys[4] == ExpPolyFunction.from_monomials(
        Z, {(4, 0): 1, (2, 1): Fraction(6) / M,
            (0, 2): Fraction(3) / M ** 2, (0, 1): Fraction(12) * Z / M ** 2})


def test_exponential_solution_step_factor():
    sols = exponential_solutions(Fraction(1), Fraction(1, 10), [Fraction(1)])
    ((_, _, kap, omega, rho),) = sols[0].terms
    assert (kap, omega, rho) == (Fraction(1), Fraction(0), Fraction(5, 4))
    zero_sol = exponential_solutions(M, Z, [Fraction(0)])[0]
    assert zero_sol == ExpPolyFunction.from_monomials(Z, {(0, 0): 1})
    with pytest.raises(ValueError):
        exponential_solutions(Fraction(1), Fraction(1, 8), [Fraction(2)])


def test_apply_and_recheck():
    phi = heat_polynomials(M, Z, 3)[2]
    for gen in ("H", "D", "M", "P", "K", "C"):
        entry = apply_and_recheck(gen, phi, M, A, Z)
        assert entry.passed, (gen, entry.residual)
    not_solution = ExpPolyFunction.from_monomials(Z, {(0, 1): 1})
    with pytest.raises(ValueError):
        apply_and_recheck("H", not_solution, M, A, Z)


def test_solution_checks_count_and_classical():
    entries = solution_checks(M, A, Z)
    # 5 polynomial + 3 exponential solutions, each certified and mapped by 6 generators
    assert len(entries) == 8 * 7
    assert all(e.passed for e in entries)
    entries = solution_checks(M, A, 0, classical=True)
    assert all(e.passed for e in entries)


def test_operator_and_function_level_agree():
    ez = casimir(M, Z)
    sols = heat_polynomials(M, Z, 5) + exponential_solutions(M, Z, [1, 2])
    for gen in ("H", "D", "M", "P", "K", "C"):
        s_op = realize(gen, M, A, Z)
        com = ez.commutator(s_op)
        for phi in sols:
            direct = com.apply(phi)
            stepwise = ez.apply(s_op.apply(phi)) - s_op.apply(ez.apply(phi))
            assert direct == stepwise, gen


def test_backward_difference_matches_quotient():
    bwd = discrete_derivative(Z, "backward")
    samples = heat_polynomials(M, Z, 4) + exponential_solutions(M, Z, [1])
    for phi in samples:
        quotient = (phi - phi.shift(-1)).scale(Fraction(1, 4) / Z)
        assert bwd.apply(phi) == quotient


def test_sample_grid():
    phi = exponential_solutions(Fraction(1), Fraction(1, 10), [Fraction(1)])[0]
    rows = sample_grid(phi, [Fraction(0), Fraction(1)], Fraction(0), 3)
    assert len(rows) == 6
    x, t, v = rows[0]
    assert (x, t) == (0.0, 0.0) and v == 1.0
    # after one step the value gains the factor rho = 5/4
    assert rows[2][2] == 1.25


def test_solution_serialization():
    phi = heat_polynomials(M, Z, 3)[2]
    data = phi.to_json_dict()
    assert data["z"] == "1/10"
    assert {"x_pow": 2, "t_pow": 0, "kappa": "0", "omega": "0",
            "step": "1", "coeff": "1"} in data["terms"]
