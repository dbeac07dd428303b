import pytest

from detcsm.eidv import EIDVSpec, eidv_csm, eidv_euler, pullback
from detcsm.errors import UsageError
from detcsm.exactalg import DPoly, HClass, USeries, series_inverse
from detcsm.qpoly import MatrixKind
from detcsm.sectional import chi_poly, sectional_euler
from detcsm.strata import csm_closure, csm_dense, csm_open, singular_coranks


def smooth_hypersurface(N: int, degree: int) -> HClass:
    """c_sm of a smooth degree-e hypersurface: (1+H)^(N+1) e H / (1 + e H)."""
    inv = series_inverse(USeries(N, [1, degree]))
    inv = DPoly(c[0] for c in inv.coeffs)
    return HClass.truncated(N, DPoly((1, 1)) ** (N + 1) * DPoly((0, degree)) * inv)


@pytest.mark.parametrize("kind,n,k", [("symmetric", 3, 1), ("skew", 6, 2), ("ordinary", 3, 2)])
def test_identity_pullback(kind, n, k):
    N = MatrixKind.parse(kind).ambient_dim(n)
    spec = EIDVSpec(kind, n, k, 1, N)
    assert eidv_csm(spec) == csm_closure(kind, n, k)
    assert eidv_csm(spec, "open") == csm_open(kind, n, k)
    assert pullback(csm_dense(kind, n), 1, N) == csm_dense(kind, n)


def test_veronese_hyperplane_section():
    spec = EIDVSpec("symmetric", 3, 2, 1, 4)
    assert eidv_csm(spec) == HClass(4, [0, 0, 0, 4, 2])
    assert eidv_euler(spec) == 2
    assert eidv_euler(EIDVSpec("symmetric", 3, 2, 1, 5)) == 3


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("N", [1, 2, 3])
def test_smooth_determinantal_hypersurfaces(d, N):
    # 2x2 determinant of degree-d forms: smooth of degree 2d while the
    # zero matrix is avoided (N <= 3 ordinary, N <= 2 symmetric)
    assert eidv_csm(EIDVSpec("ordinary", 2, 1, d, N)) == smooth_hypersurface(N, 2 * d)
    if N <= 2:
        assert eidv_csm(EIDVSpec("symmetric", 2, 1, d, N)) == smooth_hypersurface(N, 2 * d)


def test_quartic_k3_surface():
    # 2x2 determinant of quadrics on P^3 is a smooth quartic surface
    assert eidv_euler(EIDVSpec("ordinary", 2, 1, 2, 3)) == 24


def test_linear_determinantal_cubic_threefold():
    # det of a 3x3 matrix of linear forms on P^4: a cubic threefold with
    # nodes at the 6 points where the rank drops to one
    assert eidv_csm(EIDVSpec("ordinary", 3, 2, 1, 4)) == HClass(4, [0, 0, 0, 0, 6])
    assert eidv_euler(EIDVSpec("ordinary", 3, 1, 1, 4)) == -6 + 6


def test_veronese_partition():
    total = sum(
        (eidv_euler(EIDVSpec("symmetric", 3, k, 1, 5), "open") for k in (1, 2)),
        eidv_euler(EIDVSpec("symmetric", 3, None, 1, 5), "dense"),
    )
    assert total == 6


def _cases(max_n=5, max_d=3):
    for kind in MatrixKind:
        for n in range(2, max_n + 1):
            for d in range(1, max_d + 1):
                yield kind, n, d


@pytest.mark.parametrize("kind,n,d", list(_cases()))
def test_strata_partition_projective_space(kind, n, d):
    for N in range(1, kind.ambient_dim(n) + 1):
        total = eidv_csm(EIDVSpec(kind, n, None, d, N), "dense")
        assert total[0] == 1
        for k in singular_coranks(kind, n):
            total = total + eidv_csm(EIDVSpec(kind, n, k, d, N), "open")
        assert total == HClass.projective_space(N)
        assert all(isinstance(c, int) for c in total.coeffs)


@pytest.mark.parametrize("kind", list(MatrixKind))
@pytest.mark.parametrize("n", [3, 4, 5])
def test_linear_sections_match_sectional_euler(kind, n):
    M = kind.ambient_dim(n)
    for k in singular_coranks(kind, n):
        chi = chi_poly(kind, n, k)
        for s in range(0, 3):
            assert eidv_euler(EIDVSpec(kind, n, k, 1, M - s)) == sectional_euler(chi, s)


def test_validation():
    with pytest.raises(UsageError):
        EIDVSpec("ordinary", 3, 1, 0, 4)
    with pytest.raises(UsageError):
        EIDVSpec("ordinary", 3, 1, 1, 0)
    with pytest.raises(UsageError):
        EIDVSpec("skew", 6, 3, 1, 4)
    with pytest.raises(UsageError):
        EIDVSpec("ordinary", 3, None, 1, 4).locus
    with pytest.raises(UsageError):
        eidv_csm(EIDVSpec("ordinary", 3, 1, 1, 4), "bogus")
