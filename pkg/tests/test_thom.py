from __future__ import annotations

import pytest

from fixtures import E_TABLE, H, H_BAR, THOM_1, THOM_2
from schurthom.partitions import Partition, contains
from schurthom.poly import Polynomial
from schurthom.schur import SchurExpansion, eval_expansion, resultant
from schurthom.thom import (
    D,
    X2,
    CoefficientTable,
    e_closed,
    e_recursive,
    f_part,
    h_bar,
    h_decompose,
    h_part2,
    h_part2_closed,
    h_part2_recursive,
    i_partition,
    ilo_residual,
    pv_closed_form,
    specialization,
    taylor_seed,
    thom_a3,
    u_function,
    v_function,
    verify_restriction,
    verify_structure,
)

parse = SchurExpansion.parse


# -- coefficient table --------------------------------------------------------------


def test_taylor_seed():
    assert taylor_seed(7) == [5, 24, 89, 300, 965, 3024, 9329]


def test_e_table_matches_display():
    for i, row in E_TABLE.items():
        assert tuple(e_recursive(i, j) for j in range(len(row))) == row
        assert e_recursive(i, len(row)) == 0


def test_table_object():
    t = CoefficientTable.build(7)
    assert t[8, 3] == 526
    assert t[2, 1] == 0
    assert t.to_json()[-1] == [9329, 4402, 1904, 526]


def test_e_recursive_domain():
    with pytest.raises(ValueError):
        e_recursive(1, 0)


@pytest.mark.parametrize("i", range(2, 41))
def test_closed_formula(i):
    for j in range((i - 2) // 2 + 1):
        assert e_closed(i, j) == e_recursive(i, j)


def test_closed_formula_outside_support():
    with pytest.raises(ValueError):
        e_closed(4, 2)


# -- expansions ------------------------------------------------------------------------


def test_i_partition():
    assert i_partition(2, 0) == Partition.of(3, 3)
    assert i_partition(7, 2) == Partition.of(10, 11)
    with pytest.raises(ValueError):
        i_partition(3, 1)


def test_small_thom_polynomials():
    assert thom_a3(1) == parse(THOM_1)
    assert f_part(1) == parse(THOM_1)
    assert thom_a3(2) == parse(THOM_2)
    assert len(thom_a3(2)) == 7
    assert thom_a3(2) - f_part(2) == parse("5S_{33}")


@pytest.mark.parametrize("r", sorted(H))
def test_h_fixtures(r):
    assert h_bar(r) == parse(H_BAR[r])
    assert h_part2(r) == parse(H[r])


def test_h_latex_rendering():
    rendered = h_part2(7).to_latex()
    for term in ("89S_{3,8,10}", "113S_{1,10,10}", "3024S_{8,13}", "5S_{588}"):
        assert term in rendered


@pytest.mark.parametrize("r", range(2, 11))
def test_recursive_equals_closed(r):
    assert h_part2_recursive(r) == h_part2_closed(r)


@pytest.mark.parametrize("r", range(1, 9))
def test_structure_of_expansion(r):
    T = thom_a3(r)
    assert T.weight == 3 * r
    assert all(c > 0 for c in T.values())
    assert all(contains(I, Partition.of(r)) for I in T)
    assert all(len(I) <= 3 for I in T)
    parts = h_decompose(T, r)
    expected = {1: f_part(r)}
    if r >= 2:
        expected[2] = h_part2(r)
    assert parts == expected


# -- restriction equations ----------------------------------------------------------------


def test_specialization_targets():
    d, expected = specialization("A3", 1)
    x = Polynomial.var("x")
    assert expected == -6 * x**3
    with pytest.raises(ValueError):
        specialization("III22", 1)


@pytest.mark.parametrize("r", range(1, 6))
def test_restriction(r):
    report = verify_restriction(thom_a3(r), r)
    assert report.passed, report.to_text()
    assert report.names() == (["A0", "A1", "A2", "A3", "III22"] if r >= 2 else ["A0", "A1", "A2", "A3"])


def test_restriction_parallel_matches_serial():
    serial = verify_restriction(thom_a3(3), 3)
    parallel = verify_restriction(thom_a3(3), 3, jobs=3)
    assert [c.to_json() for c in serial.checks] == [c.to_json() for c in parallel.checks]


def test_restriction_rejects_wrong_weight():
    with pytest.raises(ValueError):
        verify_restriction(thom_a3(2), 3)


def test_f_part_fails_only_the_last_equation():
    report = verify_restriction(f_part(2), 2)
    assert [c.name for c in report.checks if not c.passed] == ["III22"]
    d, _ = specialization("III22", 2)
    assert report["III22"].residual == -eval_expansion(h_part2(2), d)


@pytest.mark.parametrize("r", range(2, 6))
def test_structure_identities(r):
    report = verify_structure(r)
    assert report.passed, report.to_text()


def test_v_and_u_small_values():
    x1, x2 = Polynomial.var("x1"), Polynomial.var("x2")
    assert v_function(2, with_b=False) == 5
    assert v_function(3, with_b=False) == 9 * x1 + 9 * x2
    assert u_function(2) == -5
    assert pv_closed_form(2) == 5


@pytest.mark.parametrize("r", range(2, 7))
def test_ilo(r):
    assert not ilo_residual(r)


def test_resultant_of_iii22_alphabets():
    x1, x2 = Polynomial.var("x1"), Polynomial.var("x2")
    expected = Polynomial(1)
    for a in (x1, x2):
        for b in (2 * x1, 2 * x2, x1 + x2):
            expected = expected * (a - b)
    assert resultant(X2, D) == expected
