import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detcsm.errors import ConsistencyError, UsageError
from detcsm.exactalg import DPoly, USeries
from detcsm.grassmann import (
    TANGENT,
    DirectSumPower,
    Dual,
    Q,
    S,
    Sym2,
    Tensor,
    Wedge2,
    chern_series,
    euler_denominator,
    integrate,
    rank,
    roots_at,
)


def test_roots_examples():
    assert roots_at(Tensor(Dual(S), Q), (1,), (1, 2)) == [1]
    assert roots_at(Wedge2(Q), (1,), (1, 2, 3)) == [5]
    assert sorted(roots_at(Sym2(Dual(Q)), (1,), (1, 2, 3))) == [-6, -5, -4]


BUNDLES = [S, Q, Dual(S), TANGENT, Sym2(Dual(Q)), Wedge2(Dual(Q)), Wedge2(S),
           DirectSumPower(Dual(Q), 3), Tensor(Sym2(S), Dual(Q))]


@pytest.mark.parametrize("b", BUNDLES, ids=repr)
@pytest.mark.parametrize("n,r", [(3, 1), (4, 2), (5, 2), (5, 4)])
def test_root_count_equals_rank(b, n, r):
    for fp in combinations(range(1, n + 1), r):
        assert len(roots_at(b, fp, range(1, n + 1))) == rank(b, n, r)


def test_chern_series_examples():
    d = DPoly.var()
    assert chern_series([1, 2], 2) == USeries(2, [1, 3, 2])
    assert chern_series([1], 1, "affine", shift=d) == USeries(1, [d, 1])
    assert chern_series([1], 2, "segre") == USeries(2, [1, -1, 1])
    with pytest.raises(UsageError):
        chern_series([1], 2, "affine")


def test_euler_denominator_examples():
    assert euler_denominator((1,), (1, 2)) == 1
    assert euler_denominator((2,), (1, 2)) == -1
    assert euler_denominator((1, 2), (1, 2, 3, 4)) == 12


def _tangent_chern(n, r):
    T = r * (n - r)
    return lambda fp, w=None: chern_series(roots_at(TANGENT, fp, w or range(1, n + 1)), T)


def test_integrate_examples():
    assert integrate(2, 1, lambda fp: USeries.one(1)) == DPoly()
    assert integrate(2, 1, _tangent_chern(2, 1)) == DPoly.const(2)
    assert integrate(4, 2, _tangent_chern(4, 2)) == DPoly.const(6)


@pytest.mark.parametrize("n,r", [(3, 1), (4, 2), (5, 2), (6, 3)])
def test_euler_characteristic_of_grassmannian(n, r):
    assert integrate(n, r, _tangent_chern(n, r)) == DPoly.const(comb(n, r))


def test_schubert_number_lines_meeting_four_lines():
    # sigma_1^4 on G(2,4) is 2; sigma_1 = c_1(Q)
    def integrand(fp):
        c1 = sum(roots_at(Q, fp, (1, 2, 3, 4)))
        return USeries(4, [0, 0, 0, 0, c1 ** 4])

    assert integrate(4, 2, integrand) == DPoly.const(2)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_weight_independence(seed):
    rng = random.Random(seed)
    n, r = rng.choice([(3, 1), (4, 2), (5, 2)])
    w = tuple(rng.sample(range(-30, 31), n))
    T = r * (n - r)

    def integrand(fp):
        return chern_series(roots_at(TANGENT, fp, w), T) * chern_series(roots_at(Dual(Q), fp, w), T)

    def reference(fp):
        ww = tuple(range(1, n + 1))
        return chern_series(roots_at(TANGENT, fp, ww), T) * chern_series(roots_at(Dual(Q), fp, ww), T)

    assert integrate(n, r, integrand, w) == integrate(n, r, reference)


def test_non_polynomial_integrand_detected():
    # a "class" that depends on the fixed point in a non-equivariant way
    def bad(fp):
        return USeries(1, [1 if fp == (1,) else 0, 0])

    with pytest.raises(ConsistencyError):
        integrate(2, 1, bad)


def test_weight_collision_and_size_limits():
    with pytest.raises(UsageError):
        integrate(3, 1, lambda fp: USeries.one(2), weights=(1, 1, 2))
    with pytest.raises(UsageError):
        integrate(3, 0, lambda fp: USeries.one(0))
    with pytest.raises(UsageError):
        integrate(13, 1, lambda fp: USeries.one(12))
    with pytest.raises(UsageError):
        integrate(3, 1, lambda fp: USeries.one(1))


def test_rational_weights():
    w = (Fraction(0), Fraction(1, 2), Fraction(3))
    assert integrate(3, 1, lambda fp: chern_series(roots_at(TANGENT, fp, w), 2), w) == DPoly.const(3)
