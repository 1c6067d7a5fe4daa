from fractions import Fraction

import pytest

import freeboson as fb

VAC = fb.VACUUM
H1 = {(1,): Fraction(1)}


def test_numbers():
    assert fb.bernoulli(2) == Fraction(1, 6)
    assert fb.zeta_neg(2) == Fraction(-1, 12)
    assert fb.regularization_constant(0) == Fraction(-1, 24)
    assert fb.character_offset() == Fraction(-1, 24)
    assert [fb.graded_dim(n) for n in range(6)] == [1, 1, 2, 3, 5, 7]
    assert len(fb.partitions_of(5)) == 7


def test_operators():
    assert fb.h(-1, VAC) == H1
    assert fb.h(1, H1) == VAC
    assert fb.virasoro(0, H1) == H1
    assert fb.virasoro(-1, VAC) == {}
    assert fb.virasoro(0, VAC, regularized=True) == {(): Fraction(-1, 24)}
    assert fb.vertex_mode(fb.omega(), 1, H1) == H1
    assert fb.x_mode(H1, -2, VAC) == fb.h(-2, VAC)


def test_bracket_vacuum_part():
    assert fb.bracket_coeff(H1, -2, H1)[()] == 1
    assert fb.bracket_coeff(H1, 0, H1)[()] == Fraction(-1, 12)


def test_run_suite():
    reports = fb.run_suite("HEISENBERG,ZETA-TABLE", weight_cap=4)
    assert [r["check"] for r in reports] == ["HEISENBERG", "ZETA-TABLE"]
    assert all(r["status"] == "pass" for r in reports)
    assert fb.run_suite("") == []
    assert len(fb.catalog_ids()) == 18


def test_errors():
    with pytest.raises(ValueError):
        fb.run_suite("NOPE")
    with pytest.raises(ValueError):
        fb.run_suite("HEISENBERG", weight_cap=0)
