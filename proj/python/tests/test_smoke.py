from fractions import Fraction

import pytest

import gstark


def test_padic_basics():
    x = gstark.PadicNumber.from_integer(5, 7, 10)
    y = gstark.PadicNumber.from_rational(5, Fraction(1, 3), 10)
    assert (x * y * gstark.PadicNumber.from_integer(5, 3, 10)).residue() == 7
    assert gstark.hensel_sqrt(-4, 5, 2).residue() == 11
    assert gstark.cornacchia(4, 5) == (4, 1)
    assert gstark.cornacchia(3, 5) is None


def test_characters_and_bernoulli():
    chi = gstark.DirichletCharacter.kronecker(-4)
    assert chi.conductor == 4 and chi.is_odd
    assert gstark.classical_L(chi, 0) == Fraction(1, 2)
    assert gstark.gen_bernoulli(1, chi) == Fraction(-1, 2)


def test_gross_stark_rank_one():
    chi = gstark.DirichletCharacter.kronecker(-4)
    inst = gstark.LSeriesInstance.make(chi, 5, 12)
    assert inst.r == 1
    reg = gstark.gross_regulator_rank1(gstark.find_p_unit(-4, 5, 12))
    assert gstark.discrepancy_valuation(inst.analytic_invariant(), reg) >= 8
    with pytest.raises(ValueError):
        gstark.find_p_unit(-4, 3, 12)


def test_w_algebra_dimension():
    assert len(gstark.w_algebra_basis(1, 2, 2, L=Fraction(3, 7))) == 5
    assert len(gstark.w_algebra_basis(2, 2, 2, L=3, W=2)) == 6
    with pytest.raises(ValueError):
        gstark.w_algebra_basis(3, 1, s=1, t=1)


def test_verify_report():
    code, report = gstark.verify("interp", p=5, discs=[-3, -4])
    assert code == 0
    assert report["version"] == gstark.__version__
    assert all(c["status"] == "pass" for c in report["checks"])
    with pytest.raises(ValueError):
        gstark.verify("interp")
