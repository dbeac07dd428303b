from math import comb

import pytest

from detcsm.errors import UsageError
from detcsm.exactalg import HClass
from detcsm.golden import GROUPS, as_class
from detcsm.qpoly import (
    MatrixKind,
    clear_memo,
    memo_get,
    q_formula_I,
    q_formula_II,
    q_polynomial,
    schubert_integral,
)

GOLDEN_Q = [
    (kind, n, r, terms)
    for kind, n, table in GROUPS.values()
    for (what, r), terms in table.items()
    if what == "q"
]


@pytest.mark.parametrize("kind,n,r,terms", GOLDEN_Q, ids=[f"{k}-n{n}-r{r}" for k, n, r, _ in GOLDEN_Q])
@pytest.mark.parametrize("route", [q_formula_I, q_formula_II], ids=["formula1", "formula2"])
def test_reference_tables(route, kind, n, r, terms):
    N = MatrixKind.parse(kind).ambient_dim(n)
    assert route(kind, n, r) == as_class(N, terms)


def test_quadric_surface_oracle():
    # tau_{2,1} is P^1 x P^1 in P^3: push forward c(T) = (1+2a)(1+2b), H = a+b.
    # Encode classes on P^1 x P^1 as dicts {(i, j): coeff of a^i b^j}, a^2 = b^2 = 0.
    def mul(x, y):
        out = {}
        for (i, j), c in x.items():
            for (k, l), e in y.items():
                if i + k <= 1 and j + l <= 1:
                    out[i + k, j + l] = out.get((i + k, j + l), 0) + c * e
        return out

    cT = mul({(0, 0): 1, (1, 0): 2}, {(0, 0): 1, (0, 1): 2})
    H = {(1, 0): 1, (0, 1): 1}
    deg = lambda x: x.get((1, 1), 0)  # noqa: E731
    coeffs = [0, 0, 0, 0]
    for i in range(3):
        ci = {k: v for k, v in cT.items() if sum(k) == i}
        Hpow = {(0, 0): 1}
        for _ in range(2 - i):
            Hpow = mul(Hpow, H)
        coeffs[1 + i] = deg(mul(ci, Hpow))
    oracle = HClass(3, coeffs)
    assert oracle.coeffs == (0, 2, 4, 4)
    assert q_formula_II("ordinary", 2, 1) == oracle
    assert q_formula_I("ordinary", 2, 1) == oracle


def test_schubert_integral_edges():
    assert schubert_integral("ordinary", 2, 1, 0, -1) == 0
    assert schubert_integral("ordinary", 4, 2, 0, 5) == 0
    for kind, n, r in [("ordinary", 4, 2), ("symmetric", 4, 1), ("skew", 6, 2)]:
        assert schubert_integral(kind, n, r, 0, 0) == comb(n, r)
    with pytest.raises(UsageError):
        schubert_integral("ordinary", 3, 1, 7, 0)


@pytest.mark.parametrize("kind", list(MatrixKind))
@pytest.mark.parametrize("n", [3, 4, 5])
def test_lowest_term_is_degree_at_codimension(kind, n):
    for r in range(1, n):
        if kind is MatrixKind.SKEW and (n - r) % 2:
            continue
        q = q_polynomial(kind, n, r)
        if kind.codim(r) == 0:
            assert q[0] == 1
            continue
        assert q.codim == kind.codim(r)
        assert q[q.codim] > 0


def test_ordinary_corank_one_degree_is_n():
    # the determinant hypersurface has degree n
    for n in range(2, 7):
        assert q_polynomial("ordinary", n, 1)[1] == n


def test_random_weights_agree():
    w = (-7, 3, 11, 0, 5)
    assert q_formula_II("symmetric", 5, 2, w) == q_polynomial("symmetric", 5, 2)
    assert q_formula_I("skew", 5, 3, w) == q_polynomial("skew", 5, 3)


def test_parity_and_range_errors():
    with pytest.raises(UsageError, match="even rank"):
        q_polynomial("skew", 6, 3)
    with pytest.raises(UsageError):
        q_polynomial("ordinary", 4, 0)
    with pytest.raises(UsageError):
        q_polynomial("ordinary", 4, 4)
    with pytest.raises(UsageError):
        q_polynomial("hermitian", 4, 1)
    with pytest.raises(UsageError):
        q_polynomial("ordinary", 4, 1, method="formula3")


def test_kind_aliases_and_memo():
    clear_memo()
    a = q_polynomial("sym", 3, 1)
    assert memo_get(MatrixKind.SYMMETRIC, 3, 1) is a
    assert q_polynomial("symmetric", 3, 1, "both") == a
    assert MatrixKind.parse("skew-symmetric") is MatrixKind.SKEW
