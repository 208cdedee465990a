"""Spectrum arithmetic and roots for weighted-homogeneous models."""

from itertools import product
from math import prod

import pytest

from pairlab.bfun import (
    candidate_roots,
    check_lct_relation,
    largest_root_full,
    reduced_bpoly,
    yano_spectrum,
)
from pairlab.errors import DomainError
from pairlab.lct import lct_monomial_sum
from pairlab.pairs import ResolutionData
from pairlab.rational import Rat, rat


def spectrum_of(ms):
    return yano_spectrum([Rat(1, m) for m in ms])


def test_cusp_spectrum():
    spectrum = spectrum_of([2, 3])
    assert spectrum.to_pairs() == [("5/6", 1), ("7/6", 1)]
    assert spectrum.L == 6


def test_cusp_roots():
    roots = reduced_bpoly(spectrum_of([2, 3]))
    assert roots.roots == (Rat(-5, 6), Rat(-7, 6))
    assert largest_root_full(roots) == Rat(-5, 6)


def test_two_seven_spectrum():
    spectrum = spectrum_of([2, 7])
    assert [e for e, _ in spectrum.to_pairs()] == [
        "9/14", "11/14", "13/14", "15/14", "17/14", "19/14",
    ]
    assert all(q == 1 for _, q in spectrum.to_pairs())
    assert largest_root_full(reduced_bpoly(spectrum)) == Rat(-9, 14)


def test_quadric_threefold_root_is_minus_one():
    # only root -3/2; the full polynomial always adds -1
    roots = reduced_bpoly(spectrum_of([2, 2, 2]))
    assert roots.roots == (Rat(-3, 2),)
    assert largest_root_full(roots) == -1


def test_repeated_exponents_collapse_in_reduced_roots():
    spectrum = spectrum_of([2, 2])
    # exponents 1 (mult 1): distinct roots once each
    assert reduced_bpoly(spectrum).roots == (rat(-1),)


def test_weights_domain():
    with pytest.raises(DomainError):
        yano_spectrum([Rat(2, 3)])
    with pytest.raises(DomainError):
        yano_spectrum([rat(0), Rat(1, 2)])
    with pytest.raises(DomainError):
        yano_spectrum([])


def small_grids():
    for n in (1, 2, 3):
        for ms in product(range(2, 7), repeat=n):
            yield ms


def test_spectrum_symmetry_on_grid():
    """Multiplicity at exponent s equals the one at n - s."""
    for ms in small_grids():
        spectrum = spectrum_of(ms)
        n = len(ms)
        for k, q in spectrum.coeffs.items():
            mirror = n * spectrum.L - k
            assert spectrum.coeffs.get(mirror) == q, (ms, k)


def test_spectrum_mass_on_grid():
    for ms in small_grids():
        spectrum = spectrum_of(ms)
        assert spectrum.total_mass == prod(m - 1 for m in ms), ms


def test_spectrum_window_on_grid():
    for ms in small_grids():
        spectrum = spectrum_of(ms)
        n = len(ms)
        for k, q in spectrum.coeffs.items():
            assert 0 < k < n * spectrum.L
            assert q > 0


def test_roots_descending_and_distinct_on_grid():
    for ms in small_grids():
        roots = reduced_bpoly(spectrum_of(ms)).roots
        assert all(a > b for a, b in zip(roots, roots[1:]))
        assert len(set(roots)) == len(roots)


def test_lct_relation_examples():
    assert check_lct_relation([2, 3])
    assert check_lct_relation([2, 2, 2])
    assert check_lct_relation([3, 4])


def test_lct_relation_on_grid():
    for ms in small_grids():
        assert check_lct_relation(list(ms)), ms
        spectrum = spectrum_of(ms)
        largest = largest_root_full(reduced_bpoly(spectrum))
        assert largest == -lct_monomial_sum(list(ms)).value


def test_candidate_roots_example():
    res = ResolutionData(((0, 1, False), (1, 2), (2, 3), (4, 6)))
    roots = candidate_roots(res, 3)
    assert Rat(-5, 6) in roots
    assert Rat(-7, 6) in roots
    assert rat(0) in roots
    assert len(roots) == 11


def test_candidate_roots_requires_positive_b():
    res = ResolutionData(((1, 0),))
    with pytest.raises(DomainError):
        candidate_roots(res, 1)
