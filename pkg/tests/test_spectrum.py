from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hookspherical.exact import KappaPoly
from hookspherical.spectrum import (DEFAULT_NORMALIZATION, DegreeProfile, Normalization,
                                    eigenvalue_sum, shifted_degrees)
from hookspherical.spherical import NoInvariants


def test_profile_parse_and_accessors():
    prof = DegreeProfile.parse("5:2, 3:1, 0:3")
    assert prof.degrees == (5, 3, 0) and prof.sizes == (2, 1, 3)
    assert prof.p == 3 and prof.N == 6 and prof.total_degree == 13
    assert prof.exponent == (5, 5, 3, 0, 0, 0)
    assert DegreeProfile.parse(str(prof)) == prof


@pytest.mark.parametrize("text", ["0:1,1:1", "2:1,2:1", "1:0", "-1:2", "", "1-2", "a:1"])
def test_profile_rejects_bad_input(text):
    with pytest.raises(ValueError):
        DegreeProfile.parse(text)


def test_shifted_degrees():
    prof = DegreeProfile(((5, 2), (3, 1), (0, 3)))
    assert shifted_degrees(prof) == [KappaPoly((5, 4)), KappaPoly((3, 3)), KappaPoly((0,))]


def test_normalization_parse_and_weight():
    assert Normalization.parse("plain") is Normalization.PLAIN
    assert Normalization.parse("As-Printed") is Normalization.AS_PRINTED
    with pytest.raises(ValueError):
        Normalization.parse("neither")
    assert Normalization.PLAIN.weight([3, 2]) == 6
    assert Normalization.AS_PRINTED.weight([3, 2]) == 12
    assert DEFAULT_NORMALIZATION is Normalization.PLAIN


@pytest.mark.parametrize("profile,b,k,coeffs", [
    ("1:1,0:1", 1, 1, [1, 2]),
    ("1:1,0:1", 0, 1, [1]),
    ("1:3", 0, 2, [3]),
])
def test_eigenvalue_sum_examples(profile, b, k, coeffs):
    res = eigenvalue_sum(DegreeProfile.parse(profile), b, k)
    assert res.value == KappaPoly(coeffs)


def test_single_block_variants_differ():
    prof = DegreeProfile.parse("1:3")
    assert eigenvalue_sum(prof, 0, 1, "plain").value == KappaPoly((3,))
    assert eigenvalue_sum(prof, 0, 1, "as-printed").value == KappaPoly((6,))


def test_eigenvalue_sum_errors():
    with pytest.raises(NoInvariants):
        eigenvalue_sum(DegreeProfile.parse("1:2"), 1, 1)
    with pytest.raises(ValueError):
        eigenvalue_sum(DegreeProfile.parse("1:2"), 0, 0)


profiles = st.lists(st.integers(1, 3), min_size=1, max_size=4).flatmap(
    lambda sizes: st.lists(st.integers(0, 6), min_size=len(sizes), max_size=len(sizes), unique=True).map(
        lambda ds: DegreeProfile(tuple(zip(sorted(ds, reverse=True), sizes)))))


@settings(max_examples=80, deadline=None)
@given(profiles, st.integers(0, 3), st.integers(1, 4))
def test_kappa_zero_and_degree(prof, b, k):
    if b > prof.p - 1:
        return
    res = eigenvalue_sum(prof, b, k)
    assert res.value.degree <= k
    mu = comb(prof.p - 1, b)
    dim = comb(prof.N - 1, b)
    assert res.value(0) == dim * mu * sum(n * d**k for d, n in prof.pairs)
    assert res.dimension == dim and res.multiplicity == mu


@settings(max_examples=40, deadline=None)
@given(profiles, st.integers(1, 3))
def test_variants_agree_when_blocks_small(prof, k):
    if max(prof.sizes) <= 2:
        assert eigenvalue_sum(prof, 0, k, "plain").value == eigenvalue_sum(prof, 0, k, "as-printed").value
