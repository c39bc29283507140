import itertools
from fractions import Fraction
from math import comb

import pytest

from hookspherical.dunkl import (MonomialSpace, OperatorMatrix, isotype_projector, isotype_trace,
                                 monomial_space_dim, orbit_projector, permutation_matrix, pk_matrix,
                                 symmetric_line_check, xDx_matrix)
from hookspherical.exact import KappaPoly
from hookspherical.hookchar import HookShape
from hookspherical.permgroup import Permutation
from hookspherical.spectrum import DegreeProfile, eigenvalue_sum
from hookspherical.spherical import NoInvariants


def test_space_basics():
    space = MonomialSpace(3, 2)
    assert space.dim == monomial_space_dim(3, 2) == 6
    assert all(space.index[e] == i for i, e in enumerate(space.basis))
    assert len(space.orbit((2, 0, 0))) == 3
    assert len(space.orbit((1, 1, 0))) == 3


def test_xdx_two_variables():
    # x_1 D_1 (x_1) = x_1 + kappa x_1 (x_1 - x_2)/(x_1 - x_2) = (1 + kappa) x_1
    space = MonomialSpace(2, 1)
    k0 = Fraction(2, 5)
    m = xDx_matrix(space, 1, k0)
    i1, i2 = space.index[(1, 0)], space.index[(0, 1)]
    assert m.entry(i1, i1) == 1 + k0 and m.entry(i2, i1) == 0
    # x_1 D_1 (x_2) = kappa x_1 (x_2 - x_1)/(x_1 - x_2) = -kappa x_1
    assert m.entry(i1, i2) == -k0 and m.entry(i2, i2) == 0


def test_kappa_zero_is_euler_power():
    space = MonomialSpace(3, 3)
    for k in (1, 2, 3):
        pk = pk_matrix(space, k, 0)
        assert pk.is_diagonal()
        for i, e in enumerate(space.basis):
            assert pk.entry(i, i) == sum(a**k for a in e)


def test_p1_trace_n2_degree1():
    space = MonomialSpace(2, 1)
    k0 = Fraction(3, 7)
    assert pk_matrix(space, 1, k0).trace() == 2 + 2 * k0


@pytest.mark.parametrize("N,d,k", list(itertools.product(range(1, 5), range(0, 3), range(1, 4))))
def test_symmetric_line(N, d, k):
    assert symmetric_line_check(N, d, k, Fraction(5, 4))
    prof = DegreeProfile(((d, N),))
    assert isotype_trace(prof, 0, k, Fraction(-2, 3)) == N * d**k


def test_isotype_trace_examples():
    prof = DegreeProfile.parse("1:1,0:1")
    assert isotype_trace(prof, 1, 1, Fraction(1, 3)) == Fraction(5, 3)
    assert isotype_trace(prof, 0, 1, Fraction(1, 3)) == 1
    with pytest.raises(NoInvariants):
        isotype_trace(DegreeProfile.parse("2:3"), 1, 1, 0)


def test_projector_is_idempotent_and_commutes():
    space = MonomialSpace(3, 3)
    for b in range(3):
        proj = isotype_projector(space, HookShape(3, b))
        assert proj @ proj == proj
        for lam in [(3, 0, 0), (2, 1, 0), (1, 1, 1)]:
            q = orbit_projector(space, lam)
            assert q @ proj == proj @ q


def test_projectors_sum_to_identity_on_hooks_for_n2():
    space = MonomialSpace(2, 3)
    total = isotype_projector(space, HookShape(2, 0)) + isotype_projector(space, HookShape(2, 1))
    assert total == OperatorMatrix.identity(space)


def test_orbit_isotype_trace_is_multiplicity_times_dimension():
    space = MonomialSpace(4, 3)
    for lam in [(3, 0, 0, 0), (2, 1, 0, 0), (1, 1, 1, 0)]:
        p = len(set(lam))
        q = orbit_projector(space, lam)
        for b in range(p):
            proj = isotype_projector(space, HookShape(4, b))
            assert (q @ proj @ q).trace() == comb(p - 1, b) * comb(3, b)


def test_pk_commutes_with_permutations():
    space = MonomialSpace(3, 3)
    pk = pk_matrix(space, 2, Fraction(1, 2))
    for images in itertools.permutations(range(3)):
        w = permutation_matrix(space, Permutation(images))
        assert w @ pk == pk @ w


@pytest.mark.parametrize("profile,b,k", [("2:1,1:1,0:1", 1, 2), ("2:2,0:1", 1, 3), ("1:2,0:2", 1, 2),
                                         ("3:1,0:2", 0, 2), ("1:3,0:1", 1, 1)])
def test_oracle_matches_closed_sum(profile, b, k):
    prof = DegreeProfile.parse(profile)
    nodes = [Fraction(i, 2) - 1 for i in range(k + 2)]
    oracle = KappaPoly.interpolate([(x, isotype_trace(prof, b, k, x)) for x in nodes])
    assert eigenvalue_sum(prof, b, k).value == oracle
