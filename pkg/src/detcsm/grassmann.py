"""
Torus fixed-point localization on the Grassmannian G(r, n).

A fixed point is an r-subset I of {1..n}. At I the tautological subbundle S
has weights t_i (i in I) and the quotient Q has weights t_j (j not in I).
Every root is evaluated as ``rho * u`` so that a single power series in u
carries all cohomological degrees at once; integration over G(r, n) is the
u^(r(n-r)) coefficient of the localization sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm, prod
from typing import Callable, Iterable, Sequence

from .errors import ConsistencyError, UsageError
from .exactalg import DPoly, USeries, norm, series_inverse

__all__ = [
    "S", "Q", "Dual", "DirectSumPower", "Tensor", "Sym2", "Wedge2",
    "TANGENT",
    "rank",
    "fixed_points",
    "default_weights",
    "roots_at",
    "linear_product",
    "chern_series",
    "elementary",
    "euler_denominator",
    "integrate",
    "MAX_N",
]

MAX_N = 12


# --- bundle expressions -------------------------------------------------------

class Bundle:
    __slots__ = ()


@dataclass(frozen=True)
class _S(Bundle):
    def __repr__(self):
        return "S"


@dataclass(frozen=True)
class _Q(Bundle):
    def __repr__(self):
        return "Q"


S = _S()
Q = _Q()


@dataclass(frozen=True)
class Dual(Bundle):
    base: Bundle


@dataclass(frozen=True)
class DirectSumPower(Bundle):
    base: Bundle
    m: int


@dataclass(frozen=True)
class Tensor(Bundle):
    left: Bundle
    right: Bundle


@dataclass(frozen=True)
class Sym2(Bundle):
    base: Bundle


@dataclass(frozen=True)
class Wedge2(Bundle):
    base: Bundle


TANGENT = Tensor(Dual(S), Q)


def rank(b: Bundle, n: int, r: int) -> int:
    """Rank of a bundle expression on G(r, n), from the constructors alone."""
    if isinstance(b, _S):
        return r
    if isinstance(b, _Q):
        return n - r
    if isinstance(b, Dual):
        return rank(b.base, n, r)
    if isinstance(b, DirectSumPower):
        if b.m < 0:
            raise UsageError(f"negative direct-sum power in {b!r}")
        return b.m * rank(b.base, n, r)
    if isinstance(b, Tensor):
        return rank(b.left, n, r) * rank(b.right, n, r)
    if isinstance(b, Sym2):
        return comb(rank(b.base, n, r) + 1, 2)
    if isinstance(b, Wedge2):
        return comb(rank(b.base, n, r), 2)
    raise UsageError(f"malformed bundle expression {b!r}")


def roots_at(b: Bundle, fp: Sequence[int], w: Sequence) -> list:
    """Torus weights (Chern roots) of ``b`` at the fixed point ``fp``.

    ``fp`` is a sorted tuple of 1-based indices; ``w`` the weight vector.
    """
    if isinstance(b, _S):
        return [w[i - 1] for i in fp]
    if isinstance(b, _Q):
        inside = set(fp)
        return [w[j - 1] for j in range(1, len(w) + 1) if j not in inside]
    if isinstance(b, Dual):
        return [-x for x in roots_at(b.base, fp, w)]
    if isinstance(b, DirectSumPower):
        if b.m < 0:
            raise UsageError(f"negative direct-sum power in {b!r}")
        return roots_at(b.base, fp, w) * b.m
    if isinstance(b, Tensor):
        right = roots_at(b.right, fp, w)
        return [x + y for x in roots_at(b.left, fp, w) for y in right]
    if isinstance(b, Sym2):
        rs = roots_at(b.base, fp, w)
        return [rs[a] + rs[c] for a in range(len(rs)) for c in range(a, len(rs))]
    if isinstance(b, Wedge2):
        rs = roots_at(b.base, fp, w)
        return [rs[a] + rs[c] for a in range(len(rs)) for c in range(a + 1, len(rs))]
    raise UsageError(f"malformed bundle expression {b!r}")


# --- fixed points and weights -------------------------------------------------

def _check_size(n: int, r: int, max_n: int | None):
    if not 0 < r < n:
        raise UsageError(f"need 0 < r < n for G(r, n), got r={r}, n={n}")
    limit = MAX_N if max_n is None else max_n
    if n > limit:
        raise UsageError(f"n={n} exceeds the supported size limit {limit}")


def fixed_points(n: int, r: int) -> Iterable[tuple[int, ...]]:
    """Coordinate r-subspaces of K^n, in lexicographic order."""
    return combinations(range(1, n + 1), r)


def default_weights(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _check_weights(w: Sequence, n: int) -> tuple:
    w = tuple(norm(x) for x in w)
    if len(w) != n:
        raise UsageError(f"expected {n} weights, got {len(w)}")
    if len(set(w)) != n:
        raise UsageError(f"weights must be pairwise distinct: {w}")
    return w


def euler_denominator(fp: Sequence[int], w: Sequence):
    """Equivariant Euler class of the tangent space S^v (x) Q at ``fp``."""
    inside = set(fp)
    out = [j for j in range(1, len(w) + 1) if j not in inside]
    return norm(prod((w[j - 1] - w[i - 1] for i in fp for j in out), start=1))


# --- series built from roots --------------------------------------------------

def linear_product(factors: Iterable[tuple[DPoly, object]], order: int) -> USeries:
    """Truncated product of linear factors ``shift + root * u``.

    ``factors`` yields ``(shift, root)`` pairs with ``shift`` a DPoly and
    ``root`` a rational number.
    """
    one = [1]
    S = [one] + [[] for _ in range(order)]
    for shift, root in factors:
        a = shift.coeffs
        for k in range(order, -1, -1):
            cur = S[k]
            if cur:
                new = [0] * (len(cur) + len(a) - 1)
                for i, x in enumerate(cur):
                    if x:
                        for j, y in enumerate(a):
                            new[i + j] += x * y
            else:
                new = []
            if k and root and S[k - 1]:
                prev = S[k - 1]
                if len(new) < len(prev):
                    new.extend([0] * (len(prev) - len(new)))
                for i, x in enumerate(prev):
                    new[i] += root * x
            S[k] = new
    return USeries(order, [DPoly(c) for c in S])


_ONE = DPoly.const(1)


def chern_series(roots: Iterable, order: int, kind: str = "total", shift: DPoly | None = None) -> USeries:
    """Chern-type series of a bundle with the given roots.

    ``kind`` is ``"total"`` (prod 1 + rho u), ``"affine"`` (prod shift + rho u)
    or ``"segre"`` (inverse of the total series).
    """
    if kind == "total":
        return linear_product(((_ONE, x) for x in roots), order)
    if kind == "affine":
        if shift is None:
            raise UsageError("affine Chern series needs a shift polynomial")
        return linear_product(((shift, x) for x in roots), order)
    if kind == "segre":
        return series_inverse(linear_product(((_ONE, x) for x in roots), order))
    raise UsageError(f"unknown Chern series kind {kind!r}")


def elementary(roots: Sequence, upto: int) -> list:
    """Elementary symmetric values e_0..e_upto of ``roots``."""
    e = [1] + [0] * upto
    for x in roots:
        for k in range(upto, 0, -1):
            e[k] += x * e[k - 1]
    return [norm(c) for c in e]


# --- integration ----------------------------------------------------------------

def integrate(
    n: int,
    r: int,
    integrand: Callable[[tuple[int, ...]], USeries],
    weights: Sequence | None = None,
    max_n: int | None = None,
) -> DPoly:
    """Integrate an inhomogeneous equivariant class over G(r, n).

    Sums ``integrand(I) / e(T_I)`` over all fixed points and returns the
    u^T coefficient, T = r(n - r). The lower coefficients of the sum are
    integrals of classes of degree below dim G(r, n) and must vanish; a
    nonzero one raises ConsistencyError.
    """
    _check_size(n, r, max_n)
    w = _check_weights(weights if weights is not None else default_weights(n), n)
    T = r * (n - r)

    terms = []
    for fp in fixed_points(n, r):
        s = integrand(fp)
        if s.order != T:
            raise UsageError(f"integrand truncated at {s.order}, expected {T}")
        terms.append((s, euler_denominator(fp, w)))

    if all(isinstance(e, int) for _, e in terms):
        L = lcm(*(abs(e) for _, e in terms))
        scale = [(s, L // e) for s, e in terms]
    else:
        L = 1
        scale = [(s, Fraction(1) / Fraction(e)) for s, e in terms]

    total = []
    for k in range(T + 1):
        acc: list = []
        for s, f in scale:
            cs = s.coeffs[k].coeffs
            if len(acc) < len(cs):
                acc.extend([0] * (len(cs) - len(acc)))
            for i, c in enumerate(cs):
                acc[i] += c * f
        total.append(acc)

    for k in range(T):
        if any(total[k]):
            raise ConsistencyError(
                f"localization sum has nonzero u^{k} coefficient on G({r},{n})"
            )
    return DPoly(Fraction(c) / L if L != 1 else c for c in total[T])
