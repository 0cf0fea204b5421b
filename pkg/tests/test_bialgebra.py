from fractions import Fraction

import pytest

from twophoton.bialgebra import (H6_DELTA_TABLE, H6_R_MATRIX, H6_TO_SCH_MAP,
                                 SCH_DELTA_TABLE, SCH_R_MATRIX, SL2_EXT_MAP,
                                 WedgeElement, basis_change, cocommutator_from_r,
                                 delta_table_from_r, schrodinger_lie,
                                 two_photon_lie, verify_cocycle, verify_cybe)


def test_builtin_tables_satisfy_jacobi():
    assert two_photon_lie().jacobi_violations() == []
    assert schrodinger_lie().jacobi_violations() == []


def test_wedge_antisymmetry_storage():
    w = WedgeElement({(1, 0): Fraction(3)})
    assert w.coeffs == {(0, 1): Fraction(-3)}
    assert w.add_pair(0, 1, Fraction(3)).is_zero()
    with pytest.raises(ValueError):
        WedgeElement({(1, 1): 1})


def test_cocommutator_examples():
    h6 = two_photon_lie()
    # delta(A+) = -z A+ ^ B+
    got = cocommutator_from_r(h6, H6_R_MATRIX, "A+")
    assert got == WedgeElement({(3, 0): Fraction(-1)})
    assert cocommutator_from_r(h6, H6_R_MATRIX, "M").is_zero()
    sch = schrodinger_lie()
    # delta(K) = z(2 K^H + 2 P^D + P^M)
    got = cocommutator_from_r(sch, SCH_R_MATRIX, "K")
    assert got == WedgeElement({(4, 0): Fraction(2), (3, 1): Fraction(2),
                                (3, 2): Fraction(1)})


def test_cocommutator_tables_match_displayed():
    h6, sch = two_photon_lie(), schrodinger_lie()
    assert delta_table_from_r(h6, H6_R_MATRIX) == H6_DELTA_TABLE
    assert delta_table_from_r(sch, SCH_R_MATRIX) == SCH_DELTA_TABLE


def test_cybe_positive_cases():
    assert verify_cybe(two_photon_lie(), H6_R_MATRIX).passed
    assert verify_cybe(schrodinger_lie(), SCH_R_MATRIX).passed


def test_cybe_negative_control():
    # z A+ ^ A- is not a Yang-Baxter solution: [A-, A+] = M obstructs it
    entry = verify_cybe(two_photon_lie(), WedgeElement({(3, 4): Fraction(1)}))
    assert not entry.passed
    assert "M" in entry.residual


def test_cocycle_and_cojacobi():
    h6, sch = two_photon_lie(), schrodinger_lie()
    for entry in verify_cocycle(h6, delta_table_from_r(h6, H6_R_MATRIX)):
        assert entry.passed, entry.name
    for entry in verify_cocycle(sch, delta_table_from_r(sch, SCH_R_MATRIX)):
        assert entry.passed, entry.name
    zero = {name: WedgeElement() for name in h6.basis}
    for entry in verify_cocycle(h6, zero):
        assert entry.passed


def test_basis_change_to_schrodinger():
    h6, sch = two_photon_lie(), schrodinger_lie()
    mapped = basis_change(h6, H6_TO_SCH_MAP)
    assert mapped.basis == sch.basis
    for i in range(6):
        for j in range(i):
            assert mapped.bracket_basis(i, j) == sch.bracket_basis(i, j), (
                mapped.basis[i], mapped.basis[j])
    # spot value: [D, H] = -2H
    d, h = mapped.index("D"), mapped.index("H")
    assert mapped.bracket_basis(d, h) == {h: Fraction(-2)}


def test_basis_change_identity():
    h6 = two_photon_lie()
    rows = [(name, {i: Fraction(1)}) for i, name in enumerate(h6.basis)]
    mapped = basis_change(h6, rows)
    for i in range(6):
        for j in range(i):
            assert mapped.bracket_basis(i, j) == h6.bracket_basis(i, j)


def test_extended_sl2_identification():
    sl2 = basis_change(two_photon_lie(), SL2_EXT_MAP)
    jp, jm, j3, ii = (sl2.index(n) for n in ("J+", "J-", "J3", "I"))
    assert sl2.bracket_basis(j3, jp) == {jp: Fraction(2)}
    assert sl2.bracket_basis(j3, jm) == {jm: Fraction(-2)}
    assert sl2.bracket_basis(jp, jm) == {j3: Fraction(1), ii: Fraction(-1)}
    for other in (jp, jm, j3):
        assert sl2.bracket_basis(ii, other) == {}


def test_basis_change_rejects_singular_map():
    h6 = two_photon_lie()
    rows = [("X", {0: Fraction(1)}), ("Y", {0: Fraction(2)})]
    with pytest.raises(ValueError):
        basis_change(h6, rows)


def test_basis_change_rejects_open_span():
    h6 = two_photon_lie()
    # [B-, B+] = 4N + 2M escapes the span {N, B-, B+}
    rows = [("X", {1: Fraction(1)}), ("Y", {5: Fraction(1)}),
            ("Z", {0: Fraction(1)})]
    with pytest.raises(ValueError):
        basis_change(h6, rows)


def test_wedge_render():
    w = WedgeElement({(0, 1): Fraction(-2)})
    assert w.render(two_photon_lie().basis) == "-2*B+^N"
    assert WedgeElement().render(two_photon_lie().basis) == "0"
