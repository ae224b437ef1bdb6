import math
from fractions import Fraction

import pytest

import hardy_lab as hl


def frac(t):
    return Fraction(*t)


def test_sequence_operators():
    u = hl.FiniteSequence(1, [1.0, 2.0, 3.0])
    lap = hl.laplace(u)
    assert [lap[n] for n in range(5)] == [-1.0, 0.0, 0.0, 4.0, -3.0]
    d = hl.half_laplace_power(hl.FiniteSequence.delta(3), 3)
    assert [d[n] for n in range(2, 6)] == [-1.0, 3.0, -3.0, 1.0]


def test_weight_coefficients():
    assert [frac(hl.kpp_coefficient(k)) for k in (1, 2, 3)] == [Fraction(1, 4), Fraction(5, 64), Fraction(21, 512)]
    assert frac(hl.gks_coefficient(1)) == Fraction(9, 16)
    assert frac(hl.improved_rellich2_coefficient(4)) == Fraction(9, 16)
    assert frac(hl.improved_rellich2_coefficient(6)) == Fraction(213, 128)


def test_weights_match_closed_forms():
    assert hl.kpp_weight(1) == pytest.approx(2 - math.sqrt(2), rel=1e-15)
    for n in (32, 100, 128):
        a = hl.weight("shifted_hardy", n, -2.0, "direct")
        b = hl.weight("shifted_hardy", n, -2.0, "series")
        assert a == pytest.approx(b, rel=1e-12)
        assert hl.weight("kpp", n) >= hl.weight_bound("kpp", n)
    with pytest.raises(ValueError):
        hl.weight("nope", 3)


def test_sharpness():
    assert hl.sharp_constant(2) == 9 / 16
    assert frac(hl.sharp_constant_rational(3)) == Fraction(225, 64)
    assert hl.min_eig(1, 2)["lambda_min"] == pytest.approx(5 - math.sqrt(13), abs=1e-12)
    s = hl.eig_sweep(1, [50, 100, 200])
    assert s["strictly_decreasing"] and s["above_constant"]


def test_counterexample_and_continuum():
    c = hl.counterexample(2)
    assert c["W"][1:11] == [5, 5, 2, 0, -2, -4, -3, -2, -1, 0]
    assert c["sum_W"] == 0
    r = hl.continuum_probe("bump", 256, 2)
    assert r["discrete_lhs"] / r["discrete_rhs"] > 9 / 16


def test_suites_and_scans():
    assert hl.identity_suite("iterated", 2, instances=20, seed=1)["pass"]
    assert hl.inequality_suite("rellich", 2, trials=200, seed=2)["pass"]
    assert hl.scan("H", -2.0)["pass"]
    assert hl.picone_suite(3.0, 200, 3)["pass"]


def test_lattice_and_landau():
    assert hl.zd_weight(0.0, [2000, 0, 0]) * 4e6 == pytest.approx(0.25, rel=1e-5)
    assert hl.zd_check(1.0, 2, 10, 5, 1)["pass"]
    lhs, rhs, margin = hl.landau_check(hl.FiniteSequence.delta(1), 2.0)
    assert lhs == pytest.approx(math.pi ** 2 / 24, rel=1e-13)
    assert rhs == 1.0 and margin > 0
