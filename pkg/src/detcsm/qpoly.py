"""
q-polynomials: pushforwards to P(M_n) of the CSM classes of Tjurina transforms.

Two independent routes are implemented:

* ``q_formula_II`` integrates the product-form determinantal class against
  c(T G(r, n)) and removes the d^(N+1) * C(n, r) term;
* ``q_formula_I`` expands c(E (x) O(1)) on the projective bundle P(E) and
  pushes each monomial down to the Grassmannian through Segre classes of E.

``q_polynomial`` is the memoised entry point used by everything downstream.
"""

from __future__ import annotations

import threading
from enum import Enum
from functools import lru_cache
from math import comb

from .errors import ConsistencyError, UsageError
from .exactalg import DPoly, HClass, USeries, binom
from .grassmann import (
    TANGENT,
    DirectSumPower,
    Dual,
    Q,
    S,
    Sym2,
    Tensor,
    Wedge2,
    chern_series,
    default_weights,
    elementary,
    fixed_points,
    integrate,
    linear_product,
    roots_at,
)

__all__ = [
    "MatrixKind",
    "check_corank",
    "q_formula_I",
    "q_formula_II",
    "schubert_integral",
    "q_polynomial",
    "METHODS",
]

METHODS = ("formula2", "formula1", "both")


class MatrixKind(Enum):
    ORDINARY = "ordinary"
    SYMMETRIC = "symmetric"
    SKEW = "skew"

    @classmethod
    def parse(cls, name) -> "MatrixKind":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower()
        aliases = {"o": "ordinary", "ord": "ordinary", "s": "symmetric", "sym": "symmetric",
                   "a": "skew", "skew-symmetric": "skew", "antisymmetric": "skew"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise UsageError(f"unknown matrix kind {name!r}") from None

    def space_dim(self, n: int) -> int:
        """Dimension of the affine matrix space M_n."""
        if self is MatrixKind.ORDINARY:
            return n * n
        if self is MatrixKind.SYMMETRIC:
            return comb(n + 1, 2)
        return comb(n, 2)

    def ambient_dim(self, n: int) -> int:
        """N = dim P(M_n)."""
        return self.space_dim(n) - 1

    def codim(self, k: int) -> int:
        """Codimension of the corank-k locus."""
        if self is MatrixKind.ORDINARY:
            return k * k
        if self is MatrixKind.SYMMETRIC:
            return comb(k + 1, 2)
        return comb(k, 2)

    def tjurina_bundle(self, n: int):
        if self is MatrixKind.ORDINARY:
            return DirectSumPower(Dual(Q), n)
        if self is MatrixKind.SYMMETRIC:
            return Sym2(Dual(Q))
        return Wedge2(Dual(Q))

    def complement_bundles(self, n: int):
        # c(E) * c(complement) = 1 on G(r, n)
        if self is MatrixKind.ORDINARY:
            return (DirectSumPower(Dual(S), n),)
        if self is MatrixKind.SYMMETRIC:
            return (Sym2(Dual(S)), Tensor(Dual(S), Dual(Q)))
        return (Wedge2(Dual(S)), Tensor(Dual(S), Dual(Q)))

    def tjurina_rank(self, n: int, r: int) -> int:
        if self is MatrixKind.ORDINARY:
            return n * (n - r)
        if self is MatrixKind.SYMMETRIC:
            return comb(n - r + 1, 2)
        return comb(n - r, 2)


def check_corank(kind: MatrixKind, n: int, r: int) -> None:
    if n < 2:
        raise UsageError(f"matrix size must be at least 2, got {n}")
    if not 1 <= r <= n - 1:
        raise UsageError(f"corank must satisfy 1 <= r <= n-1, got r={r}, n={n}")
    if kind is MatrixKind.SKEW and (n - r) % 2:
        raise UsageError(
            f"skew-symmetric matrices have even rank: n - corank = {n - r} is odd"
        )


def _finish(kind: MatrixKind, n: int, r: int, poly: DPoly) -> HClass:
    N = kind.ambient_dim(n)
    if poly.degree is not None and poly.degree > N:
        raise ConsistencyError(f"q-polynomial has degree {poly.degree} > {N}")
    # only the odd skew corank-1 locus fills the whole space
    expected = 1 if kind.codim(r) == 0 else 0
    if poly[0] != expected:
        raise ConsistencyError(f"q-polynomial constant term {poly[0]}, expected {expected}")
    return HClass.from_poly(N, poly)


_D = DPoly.var()
_ONE_PLUS_D = DPoly((1, 1))
_ONE = DPoly.const(1)


def q_formula_II(kind, n: int, r: int, weights=None) -> HClass:
    """q-polynomial from the product-form integral over G(r, n)."""
    kind = MatrixKind.parse(kind)
    check_corank(kind, n, r)
    T = r * (n - r)
    E = kind.tjurina_bundle(n)
    rest = kind.complement_bundles(n)
    w = tuple(weights) if weights is not None else default_weights(n)

    def integrand(fp) -> USeries:
        factors = [(_ONE, x) for x in roots_at(TANGENT, fp, w)]
        factors += [(_ONE_PLUS_D, x) for x in roots_at(E, fp, w)]
        for b in rest:
            factors += [(_D, x) for x in roots_at(b, fp, w)]
        return linear_product(factors, T)

    total = integrate(n, r, integrand, w)
    total = total - DPoly.monomial(kind.space_dim(n), comb(n, r))
    return _finish(kind, n, r, total)


@lru_cache(maxsize=256)
def _segre_data(kind: MatrixKind, n: int, r: int, w: tuple):
    # per fixed point: (c(T) coefficients, e_i(E), s_m(E)) as scalars
    T = r * (n - r)
    E = kind.tjurina_bundle(n)
    data = {}
    for fp in fixed_points(n, r):
        ctan = [c[0] for c in chern_series(roots_at(TANGENT, fp, w), T)]
        rootsE = roots_at(E, fp, w)
        e = elementary(rootsE, min(len(rootsE), T))
        s = [c[0] for c in chern_series(rootsE, T, "segre")]
        data[fp] = (ctan, e, s)
    return data


def schubert_integral(kind, n: int, r: int, i: int, segre_index: int, weights=None):
    """Integral of c(T G) * c_i(E) * s_m(E) over G(r, n), E the Tjurina bundle.

    Only the top-degree piece c_(T-i-m)(T G) contributes; a negative Segre
    index or i + m > dim G gives zero.
    """
    kind = MatrixKind.parse(kind)
    check_corank(kind, n, r)
    e_rank = kind.tjurina_rank(n, r)
    if not 0 <= i <= e_rank:
        raise UsageError(f"Chern index {i} outside 0..{e_rank}")
    T = r * (n - r)
    m = segre_index
    if m < 0 or i + m > T:
        return 0
    w = tuple(weights) if weights is not None else default_weights(n)
    data = _segre_data(kind, n, r, w)

    def integrand(fp) -> USeries:
        ctan, e, s = data[fp]
        c = e[i] * s[m]
        return USeries(T, [0] * (i + m) + [x * c for x in ctan[: T + 1 - i - m]])

    val = integrate(n, r, integrand, w)
    return val[0] if val.degree is None or val.degree == 0 else val


def q_formula_I(kind, n: int, r: int, weights=None) -> HClass:
    """q-polynomial from the Segre-class expansion on P(E).

    gamma_l = sum_{p<=e} sum_{i<=p} C(e-i, p-i) int c(T G) c_i(E) s_(N-l+p-i+1-e)(E).
    """
    kind = MatrixKind.parse(kind)
    check_corank(kind, n, r)
    N = kind.ambient_dim(n)
    e = kind.tjurina_rank(n, r)
    T = r * (n - r)
    A = {}

    def integral(i, m):
        if m < 0 or i + m > T:
            return 0
        if (i, m) not in A:
            A[i, m] = schubert_integral(kind, n, r, i, m, weights)
        return A[i, m]

    gammas = []
    for l in range(N + 1):
        g = 0
        for p in range(e + 1):
            for i in range(p + 1):
                if i > T:
                    break
                coef = binom(e - i, p - i)
                if coef:
                    g += coef * integral(i, N - l + p - i + 1 - e)
        gammas.append(g)
    return _finish(kind, n, r, DPoly(gammas))


# --- memoised access ------------------------------------------------------------

_memo: dict[tuple, HClass] = {}
_memo_lock = threading.Lock()


def memo_get(kind, n: int, r: int, method: str = "formula2") -> HClass | None:
    return _memo.get((MatrixKind.parse(kind), n, r, method))


def memo_put(kind, n: int, r: int, method: str, value: HClass) -> None:
    with _memo_lock:
        _memo[MatrixKind.parse(kind), n, r, method] = value


def memo_items():
    with _memo_lock:
        return list(_memo.items())


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()


def q_polynomial(kind, n: int, r: int, method: str = "formula2") -> HClass:
    """Memoised q-polynomial with default weights.

    ``method="both"`` computes both routes and raises ConsistencyError if
    they disagree.
    """
    kind = MatrixKind.parse(kind)
    if method not in METHODS:
        raise UsageError(f"unknown method {method!r}; choose from {METHODS}")
    check_corank(kind, n, r)
    if method == "both":
        a = q_polynomial(kind, n, r, "formula2")
        b = q_polynomial(kind, n, r, "formula1")
        if a != b:
            raise ConsistencyError(f"formula I and II disagree for {kind.value} n={n} r={r}")
        return a
    hit = memo_get(kind, n, r, method)
    if hit is not None:
        return hit
    fn = q_formula_II if method == "formula2" else q_formula_I
    value = fn(kind, n, r)
    memo_put(kind, n, r, method, value)
    return value
