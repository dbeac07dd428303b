"""
Characteristic and conormal cycle classes in P^N x P^N, polar degrees and
generic Euclidean distance degrees.

A cycle class of dimension N-1 is written sum_j c_j h1^(N+1-j) h2^j with
j = 1..N. The transform from a class sum_l beta_l H^(N-l) in P^N is

    c_j = sum_{l=j-1}^{N-1} (-1)^l beta_l C(l+1, j),

which sends c_*(phi) to Ch(phi). In particular Ch(Eu_X) = (-1)^dim X Con(X);
``conormal`` returns Ch(Eu_X), the signed row used in the reference tables,
and ``polar_degrees`` applies the sign to get the nonnegative multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, UsageError
from .exactalg import HClass, binom
from .strata import _spec, csm_closure, mather

__all__ = [
    "BiClass",
    "cycle_transform",
    "conormal",
    "characteristic",
    "flip",
    "polar_degrees",
    "ged",
    "ged_formula",
]


@dataclass(frozen=True)
class BiClass:
    """Coefficients c_1..c_N of h1^(N+1-j) h2^j in P^N x P^N."""

    ambient_dim: int
    coeffs: tuple

    def __post_init__(self):
        cs = tuple(self.coeffs)
        if len(cs) != self.ambient_dim:
            raise UsageError(f"expected {self.ambient_dim} entries, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)

    def __getitem__(self, j: int):
        """Coefficient of h1^(N+1-j) h2^j, 1-based."""
        if not 1 <= j <= self.ambient_dim:
            raise IndexError(j)
        return self.coeffs[j - 1]

    def __add__(self, other: "BiClass") -> "BiClass":
        if other.ambient_dim != self.ambient_dim:
            raise UsageError("cycle classes live in different spaces")
        return BiClass(self.ambient_dim, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return BiClass(self.ambient_dim, tuple(-a for a in self.coeffs))

    def __mul__(self, c):
        return BiClass(self.ambient_dim, tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def __str__(self):
        N = self.ambient_dim
        terms = []
        for j, c in enumerate(self.coeffs, start=1):
            if c:
                terms.append(f"{c}*h1^{N + 1 - j}*h2^{j}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def cycle_transform(cls: HClass) -> BiClass:
    """Lift a class of a proper subvariety of P^N to P^N x P^N."""
    N = cls.ambient_dim
    if cls[0] != 0:
        raise UsageError("cycle transform needs a proper subvariety (H^0 coefficient 0)")
    beta = [cls[N - l] for l in range(N + 1)]
    out = []
    for j in range(1, N + 1):
        out.append(sum((-1) ** l * beta[l] * binom(l + 1, j) for l in range(j - 1, N)))
    return BiClass(N, tuple(out))


def conormal(spec, n=None, corank=None, method: str = "formula2") -> BiClass:
    """Signed conormal row Ch(Eu_X) = (-1)^dim X Con(X)."""
    spec = _spec(spec, n, corank)
    return cycle_transform(mather(spec, method=method))


def characteristic(spec, n=None, corank=None, method: str = "formula2") -> BiClass:
    """Characteristic cycle of the closed rank locus."""
    spec = _spec(spec, n, corank)
    return cycle_transform(csm_closure(spec, method=method))


def flip(b: BiClass) -> BiClass:
    """Exchange the two hyperplane factors: c_j -> c_(N+1-j)."""
    return BiClass(b.ambient_dim, tuple(reversed(b.coeffs)))


def polar_degrees(spec, n=None, corank=None, method: str = "formula2") -> tuple[int, ...]:
    """Polar degrees P_1..P_N (nonnegative conormal multiplicities)."""
    spec = _spec(spec, n, corank)
    sign = (-1) ** spec.dim
    return tuple(sign * c for c in conormal(spec, method=method).coeffs)


def ged_formula(cls: HClass, dim: int) -> int:
    """Generic ED degree straight from the Chern-Mather coefficients.

    gED = sum_{l<=dim} sum_{i<=l} (-1)^i C(dim+1-i, dim+1-l) beta_(dim-i),
    where beta_k is the coefficient of H^(N-k).
    """
    N = cls.ambient_dim
    beta = lambda k: cls[N - k]  # noqa: E731
    return sum(
        (-1) ** i * binom(dim + 1 - i, dim + 1 - l) * beta(dim - i)
        for l in range(dim + 1)
        for i in range(l + 1)
    )


def ged(spec, n=None, corank=None, method: str = "formula2") -> int:
    """Sum of the polar degrees, checked against the closed double-sum formula."""
    spec = _spec(spec, n, corank)
    total = sum(polar_degrees(spec, method=method))
    direct = ged_formula(mather(spec, method=method), spec.dim)
    if total != direct:
        raise ConsistencyError(f"gED routes disagree for {spec}: {total} != {direct}")
    return total
