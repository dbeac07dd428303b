from math import comb

import pytest

from detcsm.cycles import (
    BiClass,
    characteristic,
    conormal,
    cycle_transform,
    flip,
    ged,
    ged_formula,
    polar_degrees,
)
from detcsm.errors import UsageError
from detcsm.exactalg import DPoly, HClass
from detcsm.qpoly import MatrixKind
from detcsm.strata import RankLocusSpec, csm_closure, mather, singular_coranks
from detcsm.verify import dual_corank


def test_transform_examples():
    assert cycle_transform(mather("symmetric", 3, 2)).coeffs == (3, 6, 4, 0, 0)
    assert cycle_transform(mather("symmetric", 3, 1)).coeffs == (0, 0, 4, 6, 3)
    assert cycle_transform(csm_closure("skew", 6, 2)).coeffs == (
        -3, -6, -12, -24, -48, -82, -108, -108, -82, -48, -24, -12, -6, -3)


def test_characteristic_examples():
    assert characteristic("symmetric", 3, 1).coeffs == (3, 6, 8, 6, 3)
    row = (-4, -12, -16, -8, 0, 0, 0, 0, 0)
    assert characteristic("symmetric", 4, 3).coeffs == row == conormal("symmetric", 4, 3).coeffs
    row = (3, 6, 12, 24, 48, 68, 66, 42, 14, 0, 0, 0, 0, 0)
    assert characteristic("skew", 6, 4).coeffs == row == conormal("skew", 6, 4).coeffs


@pytest.mark.parametrize("N", [1, 3, 6])
def test_point_and_hyperplane(N):
    point = HClass(N, [0] * N + [1])
    assert cycle_transform(point).coeffs == (1,) + (0,) * (N - 1)
    # c_sm of a hyperplane is H (1+H)^N; its conormal variety is H x {pt}
    hyper = HClass.truncated(N, DPoly((0, 1)) * DPoly((1, 1)) ** N)
    assert cycle_transform(hyper).coeffs == (0,) * (N - 1) + ((-1) ** (N - 1),)


def test_transform_rejects_full_space():
    with pytest.raises(UsageError):
        cycle_transform(HClass.projective_space(3))


def test_flip():
    b = BiClass(4, (1, 2, 3, 4))
    assert flip(b).coeffs == (4, 3, 2, 1)
    assert flip(flip(b)) == b
    sym = BiClass(3, (1, 5, 1))
    assert flip(sym) == sym
    with pytest.raises(UsageError):
        BiClass(3, (1, 2))


@pytest.mark.parametrize("kind,n,k", [("skew", 6, 2), ("skew", 7, 3), ("symmetric", 3, 1),
                                       ("symmetric", 4, 1), ("symmetric", 4, 2), ("ordinary", 3, 1),
                                       ("ordinary", 4, 2), ("ordinary", 5, 1), ("skew", 5, 3)])
def test_projective_duality(kind, n, k):
    spec = RankLocusSpec(kind, n, k)
    dual = RankLocusSpec(kind, n, dual_corank(kind, n, k))
    assert polar_degrees(spec) == tuple(reversed(polar_degrees(dual)))
    sign = (-1) ** (spec.dim - dual.dim)
    assert conormal(spec) == sign * flip(conormal(dual))
    assert ged(spec) == ged(dual)


@pytest.mark.parametrize("kind,n,k", [("symmetric", 3, 1), ("symmetric", 4, 1), ("symmetric", 5, 1),
                                       ("skew", 6, 2), ("skew", 8, 2), ("skew", 5, 3), ("skew", 7, 3)])
def test_characteristic_cycle_symmetry(kind, n, k):
    ch = characteristic(kind, n, k)
    assert ch == flip(ch)


@pytest.mark.parametrize("kind", list(MatrixKind))
@pytest.mark.parametrize("n", range(2, 7))
def test_polar_degrees_nonnegative_and_end_at_degree(kind, n):
    for k in singular_coranks(kind, n):
        spec = RankLocusSpec(kind, n, k)
        pd = polar_degrees(spec)
        assert all(p >= 0 for p in pd)
        last = [p for p in pd if p][-1]
        assert last == mather(spec)[spec.codim]  # degree of the locus
        assert sum(pd) == ged_formula(mather(spec), spec.dim)


def test_ged_examples():
    assert ged("symmetric", 3, 2) == 13 == ged("symmetric", 3, 1)
    assert ged("skew", 6, 4) == 283
    # rank-one 3x3 matrices (Segre P2 x P2) and the determinant cubic
    assert ged("ordinary", 3, 2) == 39 == ged("ordinary", 3, 1)
    # smooth quadric surface in P^3: d * sum (d-1)^i = 2 * 3
    assert ged("ordinary", 2, 1) == 6


def test_polar_examples():
    assert polar_degrees("symmetric", 3, 2) == (3, 6, 4, 0, 0)
    assert polar_degrees("symmetric", 3, 1) == (0, 0, 4, 6, 3)
    assert polar_degrees("symmetric", 4, 2) == (0, 0, 10, 30, 42, 30, 10, 0, 0)


@pytest.mark.parametrize("n", range(2, 7))
def test_determinant_hypersurface_degree_and_dual(n):
    # the last nonzero polar degree is the degree, the first is the degree of the dual;
    # det has degree n and is dual to the Segre P^(n-1) x P^(n-1) of degree C(2n-2, n-1)
    segre_degree = comb(2 * n - 2, n - 1)
    det = [p for p in polar_degrees("ordinary", n, 1) if p]
    seg = [p for p in polar_degrees("ordinary", n, n - 1) if p]
    assert (det[0], det[-1]) == (segre_degree, n)
    assert (seg[0], seg[-1]) == (n, segre_degree)
