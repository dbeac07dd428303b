"""
Sectional Euler characteristics through Aluffi's involution.

For X in P^N write c_sm(X) = sum gamma_(N-i) H^i and gamma_X(t) = sum gamma_i t^i.
The involution

    J(f)(t) = (t f(-1-t) + f(0)) / (1 + t)

exchanges gamma_X with chi_X(t) = sum_k chi(X cap L^k) (-t)^k, where L^k is a
generic codimension-k linear subspace.
"""

from __future__ import annotations

from math import comb

from .errors import ConsistencyError, UsageError
from .exactalg import DPoly, HClass, reverse_poly
from .grassmann import (
    TANGENT,
    chern_series,
    default_weights,
    integrate,
    linear_product,
    roots_at,
)
from .qpoly import MatrixKind, check_corank, q_polynomial
from .strata import _spec, csm_closure, csm_coefficients, csm_open

__all__ = [
    "involution_J",
    "gamma_of",
    "chi_poly",
    "sectional_euler",
    "gamma_via_Gamma",
    "Gamma_integral",
    "chi_via_gamma",
]

_T = DPoly.var()
_MINUS_ONE_MINUS_T = DPoly((-1, -1))
_ONE_PLUS_T = DPoly((1, 1))


def involution_J(f: DPoly) -> DPoly:
    """J(f) = (t f(-1-t) + f(0)) / (1+t); the division is checked to be exact."""
    num = _T * f(_MINUS_ONE_MINUS_T) + f[0]
    try:
        return num.exact_div(_ONE_PLUS_T)
    except ConsistencyError:
        raise ConsistencyError(f"t f(-1-t) + f(0) not divisible by 1+t for f={f!r}") from None


def gamma_of(cls: HClass) -> DPoly:
    """gamma polynomial: coefficient of t^j is the coefficient of H^(N-j)."""
    return reverse_poly(cls.to_poly(), cls.ambient_dim)


def chi_poly(spec, n=None, corank=None, which: str = "closure", method: str = "formula2") -> DPoly:
    """Sectional Euler characteristic polynomial of an open stratum or a closed locus."""
    spec = _spec(spec, n, corank)
    if which == "closure":
        cls = csm_closure(spec, method=method)
    elif which == "open":
        cls = csm_open(spec, method=method)
    else:
        raise UsageError(f"stratum must be 'open' or 'closure', got {which!r}")
    return involution_J(gamma_of(cls))


def sectional_euler(chi: DPoly, k: int):
    """chi(X cap L^k) read off the chi polynomial."""
    return (-1) ** k * chi[k]


def Gamma_integral(kind, n: int, r: int, weights=None) -> DPoly:
    """Gamma polynomial from its own localization integral.

    d Gamma(d) = int c(T G) * prod_E((1+d) + d rho) * sum_k d^k s_k(E) - C(n, r),
    evaluated without passing through the q-polynomial.
    """
    kind = MatrixKind.parse(kind)
    check_corank(kind, n, r)
    T = r * (n - r)
    E = kind.tjurina_bundle(n)
    w = tuple(weights) if weights is not None else default_weights(n)
    d = DPoly.var()

    def integrand(fp):
        rootsE = roots_at(E, fp, w)
        ctan = chern_series(roots_at(TANGENT, fp, w), T)
        twisted = linear_product(((_ONE_PLUS_T, x) for x in rootsE), T).scale_u(d)
        segre = chern_series(rootsE, T, "segre").scale_u(d)
        return ctan * twisted * segre

    total = integrate(n, r, integrand, w) - comb(n, r)
    return total.exact_div(d)


def gamma_via_Gamma(kind, n: int, r: int, method: str = "formula2") -> DPoly:
    """Gamma polynomial of q_(n,r); cross-checked against ``Gamma_integral``."""
    kind = MatrixKind.parse(kind)
    q = q_polynomial(kind, n, r, method)
    G = reverse_poly(q.to_poly(), q.ambient_dim)
    if G != Gamma_integral(kind, n, r):
        raise ConsistencyError(f"Gamma integral disagrees with reversed q for {kind.value} n={n} r={r}")
    return G


def chi_via_gamma(spec, n=None, corank=None, method: str = "formula2") -> DPoly:
    """chi polynomial of an open stratum as the base-change combination of J(Gamma)."""
    spec = _spec(spec, n, corank)
    total = DPoly()
    for r, c in csm_coefficients(spec).items():
        total = total + c * involution_J(gamma_via_Gamma(spec.kind, spec.n, r, method))
    return total
