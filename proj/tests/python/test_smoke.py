"""Smoke tests for the bound module."""

from fractions import Fraction

import pytest

import genusforge as gf


def test_version():
    assert gf.__version__ == "0.1.0"


def test_numbers():
    assert gf.factorial(6) == 720
    assert gf.double_factorial(7) == 105
    assert gf.binomial(10, 3) == 120
    assert gf.binomial(-3, 2) == 6
    assert gf.stirling_cycle(4, 2) == 11
    assert gf.catalan(5) == 42


def test_partitions_and_dimensions():
    assert gf.partitions_of(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert gf.dimension([2, 2]) == 2
    assert gf.dimension([3, 1]) == 3


def test_characters():
    assert gf.mn_character([2, 1], [2, 1]) == 0
    assert gf.mn_character([2, 1], [1, 1, 1]) == 2
    assert gf.chi_hook_on_ncycle(4, 3) == -1
    assert gf.chi_hook_on_involution(4, 2) == -1
    assert gf.chi_hook_general(4, 2, [2, 2]) == -1
    assert gf.f_weight(4, 2) == Fraction(-1, 3)
    assert gf.class_size([2, 2]) == 3


def test_genus_distribution():
    assert gf.genus_distribution(2) == {1: Fraction(1, 3), 3: Fraction(2, 3)}
    for n in range(1, 5):
        expected = gf.genus_distribution(n, method="stirling")
        for method in ("theorem", "hz", "oracle"):
            assert gf.genus_distribution(n, method=method) == expected
    with pytest.raises(ValueError):
        gf.genus_distribution(3, method="nonsense")


def test_epsilon_counts():
    assert gf.epsilon_counts(3) == {0: 5, 1: 10}
    assert gf.epsilon_counts(1) == {0: 1}


def test_census():
    assert gf.enumerate_census(2) == {1: 1, 3: 2}
    with pytest.raises(ValueError):
        gf.enumerate_census(20)


def test_fourier():
    assert gf.frobenius_count([[4], [4]]) == 6
    assert gf.product_law_pointmass([[2, 2], [4]], [1, 1, 1, 1]) == 0
    assert gf.hook_only_law([1, 1]) == 1
    law = gf.bruteforce_law([[2, 1], [2, 1]])
    assert law[(1, 1, 1)] == Fraction(1, 3)
    assert sum(law.values()) == 1


def test_run_mc():
    a = gf.run_mc(3, samples=2000, seed=12, threads=1)
    b = gf.run_mc(3, samples=2000, seed=12, threads=4)
    assert a == b
    assert a["mean_within_band"] is True
    assert sum(a["frequencies"].values()) == 2000
    assert a["tv"] < Fraction(1, 4)
