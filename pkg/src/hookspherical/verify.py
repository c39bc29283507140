"""Verification grids shared by the ``verify`` subcommand and the test-suite."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterator

from .exact import KappaPoly, format_rational
from .hookchar import HookShape, spherical_bruteforce
from .invariant import (MultivariatePoly, check_jucys_murphy, check_sumdelt, spherical_via_gram,
                        symmetrize, xi_basis)
from .permgroup import BlockStructure
from .spectrum import DegreeProfile, Normalization, eigenvalue_sum
from .spherical import SphericalQuery, spherical_big1, spherical_big2
from .symfunc import complete_sym, elem_sym, elem_sym_all


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, passed: bool, **details):
        self.checked += 1
        if not passed:
            self.failures.append(details)


def spherical_grid(max_p: int = 4, max_n: int = 3, max_b: int = 3,
                   max_order: int = factorial(10)) -> Iterator[SphericalQuery]:
    """Every (b, blocks, A) with m >= 0 inside the caps, all nonempty supports A."""
    for p in range(1, max_p + 1):
        for sizes in itertools.product(range(1, max_n + 1), repeat=p):
            blocks = BlockStructure(sizes)
            if blocks.order > max_order:
                continue
            for b in range(0, min(max_b, p - 1, blocks.N - 1) + 1):
                for ell in range(1, p + 1):
                    for A in itertools.combinations(range(1, p + 1), ell):
                        yield SphericalQuery(b, blocks, A)


def random_queries(count: int, max_p: int = 8, max_n: int = 20, seed: int = 0) -> Iterator[SphericalQuery]:
    """Random queries with m >= 0 and l >= 2."""
    rng = random.Random(seed)
    made = 0
    while made < count:
        p = rng.randint(2, max_p)
        sizes = tuple(rng.randint(1, max_n) for _ in range(p))
        b = rng.randint(0, p - 1)
        if b > sum(sizes) - 1:
            continue
        ell = rng.randint(2, p)
        A = tuple(sorted(rng.sample(range(1, p + 1), ell)))
        made += 1
        yield SphericalQuery(b, BlockStructure(sizes), A)


def degree_profiles(max_N: int = 4, max_degree: int = 5) -> Iterator[DegreeProfile]:
    """Every profile with N <= max_N and total degree <= max_degree."""
    for N in range(1, max_N + 1):
        for p in range(1, N + 1):
            for sizes in itertools.product(range(1, N + 1), repeat=p):
                if sum(sizes) != N:
                    continue
                for degs in itertools.combinations(range(max_degree, -1, -1), p):
                    if sum(d * n for d, n in zip(degs, sizes)) <= max_degree:
                        yield DegreeProfile(tuple(zip(degs, sizes)))


def kappa_nodes(k: int) -> list[Fraction]:
    return [Fraction(i, 3) - 1 for i in range(k + 2)]


def _describe(q: SphericalQuery) -> dict:
    return {"b": q.b, "blocks": list(q.blocks.sizes), "support": list(q.support)}


def run_spherical(max_p: int = 4, max_n: int = 3, max_b: int = 3, max_gram_n: int = 7,
                  n_random: int = 500, seed: int = 0, backend: str | None = None) -> SuiteReport:
    rep = SuiteReport("spherical")
    for q in spherical_grid(max_p, max_n, max_b):
        closed = spherical_big2(q)
        shape = HookShape(q.blocks.N, q.b)
        brute = spherical_bruteforce(shape, q.blocks, q.cycle(), backend=backend)
        rep.check(closed == brute, check="big2 == bruteforce", **_describe(q),
                  big2=format_rational(closed), bruteforce=format_rational(brute))
        if q.ell >= 2:
            b1 = spherical_big1(q)
            rep.check(b1 == closed, check="big1 == big2", **_describe(q),
                      big1=format_rational(b1), big2=format_rational(closed))
        if q.blocks.N <= max_gram_n:
            gram = spherical_via_gram(shape, q.blocks, q.cycle())
            rep.check(gram == closed, check="gram == big2", **_describe(q),
                      gram=format_rational(gram), big2=format_rational(closed))
    for q in random_queries(n_random, seed=seed):
        b1, b2 = spherical_big1(q), spherical_big2(q)
        rep.check(b1 == b2, check="big1 == big2 (random)", **_describe(q),
                  big1=format_rational(b1), big2=format_rational(b2))
    return rep


def run_identities(seed: int = 0, points_per_b: int = 100) -> SuiteReport:
    rep = SuiteReport("identities")
    rng = random.Random(seed)

    def rand_q():
        return Fraction(rng.randint(-50, 50), rng.randint(1, 12))

    for b in range(0, 5):
        for _ in range(points_per_b):
            pt = [rand_q() for _ in range(b + 2)]
            rep.check(check_sumdelt(b, pt), check="sumdelt", b=b, point=[format_rational(x) for x in pt])
    for N in range(1, 7):
        for b in range(0, min(3, N - 1) + 1):
            rep.check(check_jucys_murphy(N, b), check="jucys-murphy", N=N, b=b)
    for sizes in [(2, 1), (2, 2), (3, 1), (1, 2, 1), (2, 1, 2)]:
        blocks = BlockStructure(sizes)
        for _ in range(5):
            f = MultivariatePoly(blocks.N, {
                tuple(rng.randint(0, 2) for _ in range(blocks.N)): rand_q() for _ in range(4)})
            once = symmetrize(f, blocks)
            rep.check(symmetrize(once, blocks) == once, check="rho idempotent", blocks=list(sizes))
    for _ in range(50):
        vals = [rand_q() for _ in range(rng.randint(0, 6))]
        e = elem_sym_all(vals)
        t_poly = KappaPoly.one()
        for c in vals:
            t_poly = t_poly * KappaPoly((1, c))
        rep.check(KappaPoly(e) == t_poly, check="elementary generating function",
                  vals=[format_rational(v) for v in vals])
        for k in range(1, len(vals) + 1):
            s = sum((-1) ** i * elem_sym(i, vals) * complete_sym(k - i, vals) for i in range(k + 1))
            rep.check(s == 0, check="newton e/h", k=k, vals=[format_rational(v) for v in vals])
    return rep


def run_eigsum(max_N: int = 4, max_degree: int = 5, max_k: int = 3) -> SuiteReport:
    from .dunkl import isotype_trace

    rep = SuiteReport("eigsum")
    wins = {nm: 0 for nm in Normalization}
    instances = 0
    for prof in degree_profiles(max_N, max_degree):
        for b in range(0, prof.p):
            for k in range(1, max_k + 1):
                nodes = kappa_nodes(k)
                oracle = KappaPoly.interpolate([(x, isotype_trace(prof, b, k, x)) for x in nodes])
                instances += 1
                matched = []
                for nm in Normalization:
                    if eigenvalue_sum(prof, b, k, nm).value == oracle:
                        wins[nm] += 1
                        matched.append(nm.value)
                rep.check(bool(matched), check="some normalization matches the Dunkl oracle",
                          profile=str(prof), b=b, k=k, oracle=oracle.to_strings())
                if all(n == 1 for n in prof.sizes):
                    rep.check(len(matched) == len(Normalization),
                              check="all-distinct degrees: both variants agree",
                              profile=str(prof), b=b, k=k)
    certified = [nm.value for nm in Normalization if wins[nm] == instances]
    rep.check(len(certified) == 1, check="exactly one variant certified on every instance",
              wins={nm.value: c for nm, c in wins.items()}, instances=instances)
    rep.info = {"instances": instances, "wins": {nm.value: c for nm, c in wins.items()},
                "certified": certified[0] if len(certified) == 1 else None}
    return rep


SUITES = {"spherical": run_spherical, "identities": run_identities, "eigsum": run_eigsum}
