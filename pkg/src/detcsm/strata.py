"""
Rank stratifications and their CSM / Chern-Mather classes.

Every class here is an integer linear combination of q-polynomials of the
same matrix kind and size. The coefficient maps come from the local Euler
obstruction base changes; ``csm_coefficients`` and ``mather_coefficients``
expose them so that other modules can reuse the same combinations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UsageError
from .exactalg import HClass, binom
from .qpoly import MatrixKind, check_corank, q_polynomial

__all__ = [
    "RankLocusSpec",
    "euler_number",
    "singular_coranks",
    "dense_corank",
    "csm_coefficients",
    "mather_coefficients",
    "combine",
    "csm_open",
    "csm_dense",
    "csm_closure",
    "mather",
]


@dataclass(frozen=True)
class RankLocusSpec:
    """The projectivised corank-k locus of n x n matrices of a given kind."""

    kind: MatrixKind
    n: int
    corank: int

    def __post_init__(self):
        object.__setattr__(self, "kind", MatrixKind.parse(self.kind))
        check_corank(self.kind, self.n, self.corank)

    @property
    def ambient_dim(self) -> int:
        return self.kind.ambient_dim(self.n)

    @property
    def codim(self) -> int:
        return self.kind.codim(self.corank)

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.codim

    def __str__(self):
        return f"{self.kind.value}(n={self.n}, corank={self.corank})"


@lru_cache(maxsize=None)
def euler_number(m: int) -> int:
    """Euler (secant) number E_m: 1/cosh(x) = sum E_m x^m / m!."""
    if m < 0:
        raise UsageError("Euler numbers are indexed by m >= 0")
    if m % 2:
        return 0
    if m == 0:
        return 1
    half = m // 2
    return -sum(binom(m, 2 * j) * euler_number(2 * j) for j in range(half))


def dense_corank(kind, n: int) -> int:
    """Corank of the open dense stratum: 1 for odd skew matrices, else 0."""
    kind = MatrixKind.parse(kind)
    return 1 if kind is MatrixKind.SKEW and n % 2 else 0


def singular_coranks(kind, n: int) -> list[int]:
    """Coranks of the proper (positive-codimension) rank loci."""
    kind = MatrixKind.parse(kind)
    step = 2 if kind is MatrixKind.SKEW else 1
    start = dense_corank(kind, n) + step if kind is MatrixKind.SKEW else 1
    return list(range(start, n, step))


def _spec(spec_or_kind, n=None, corank=None) -> RankLocusSpec:
    if isinstance(spec_or_kind, RankLocusSpec):
        return spec_or_kind
    return RankLocusSpec(MatrixKind.parse(spec_or_kind), n, corank)


def csm_coefficients(spec: RankLocusSpec) -> dict[int, int]:
    """Coefficients c_r with csm(open stratum) = sum_r c_r q_(n,r)."""
    kind, n, k = spec.kind, spec.n, spec.corank
    if kind is MatrixKind.SKEW:
        # corank 2k (resp. 2k+1) stratum of 2m x 2m (resp. 2m+1) matrices
        return {
            r: binom(r, k) * euler_number(r - k)
            for r in range(k, n, 2)
        }
    return {r: (-1) ** (r - k) * binom(r, k) for r in range(k, n)}


def mather_coefficients(spec: RankLocusSpec) -> dict[int, int]:
    """Coefficients c_r with c_M(closure) = sum_r c_r q_(n,r)."""
    kind, n, k = spec.kind, spec.n, spec.corank
    out: dict[int, int] = {}

    def add(r, c):
        if c:
            out[r] = out.get(r, 0) + c

    if kind is MatrixKind.ORDINARY:
        add(k, 1)
    elif kind is MatrixKind.SYMMETRIC:
        half = k // 2
        if k % 2 == 0:
            for r in range(half, (n - 1) // 2 + 1):
                for i in range(2 * r, n):
                    add(i, binom(r, half) * (-1) ** (i - 2 * r) * binom(i, 2 * r))
        for r in range(half, (n - 2) // 2 + 1):
            for i in range(2 * r + 1, n):
                add(i, binom(r, half) * (-1) ** (i - 2 * r - 1) * binom(i, 2 * r + 1))
    else:
        par = n % 2
        kk = (k - par) // 2
        m = (n - par) // 2
        for r in range(kk, m):
            for i in range(r, m):
                add(2 * i + par, binom(r, kk) * binom(2 * i + par, 2 * r + par) * euler_number(2 * i - 2 * r))
    return dict(sorted(out.items()))


def combine(kind, n: int, coefficients: dict[int, int], method: str = "formula2") -> HClass:
    """sum_r c_r q_(n,r) as a class in P(M_n)."""
    kind = MatrixKind.parse(kind)
    total = HClass(kind.ambient_dim(n))
    for r, c in coefficients.items():
        if c:
            total = total + c * q_polynomial(kind, n, r, method)
    return total


def csm_open(spec, n=None, corank=None, method: str = "formula2") -> HClass:
    """CSM class of the open corank stratum (matrices of corank exactly k)."""
    spec = _spec(spec, n, corank)
    return combine(spec.kind, spec.n, csm_coefficients(spec), method)


def csm_dense(kind, n: int, method: str = "formula2") -> HClass:
    """CSM class of the open dense stratum, as the complement of all singular strata."""
    kind = MatrixKind.parse(kind)
    total = HClass.projective_space(kind.ambient_dim(n))
    for k in singular_coranks(kind, n):
        total = total - csm_open(RankLocusSpec(kind, n, k), method=method)
    return total


def csm_closure(spec, n=None, corank=None, method: str = "formula2") -> HClass:
    """CSM class of the closed rank locus: sum of the open strata it contains."""
    spec = _spec(spec, n, corank)
    total = HClass(spec.ambient_dim)
    for r in range(spec.corank, spec.n, 2 if spec.kind is MatrixKind.SKEW else 1):
        total = total + csm_open(RankLocusSpec(spec.kind, spec.n, r), method=method)
    return total


def mather(spec, n=None, corank=None, method: str = "formula2") -> HClass:
    """Chern-Mather class of the closed rank locus."""
    spec = _spec(spec, n, corank)
    return combine(spec.kind, spec.n, mather_coefficients(spec), method)
