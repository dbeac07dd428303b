"""
Homogeneous essentially isolated determinantal varieties.

A degree-d homogeneous map F: P^N -> P(M_n) transverse to the nonzero rank
strata pulls O(1) back to O(d). Transverse pullback of Segre-MacPherson
classes then gives, for any stratum X = F^-1(tau),

    c_sm(X) = (1+H)^(N+1) / (1+dH)^(dim M_n) * c_sm(tau)(dH)   mod H^(N+1).

Transversality of a concrete map is the caller's responsibility; only the
numeric data (kind, n, corank, d, N) enter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .exactalg import DPoly, HClass, USeries, series_inverse
from .qpoly import MatrixKind
from .strata import RankLocusSpec, csm_closure, csm_dense, csm_open

__all__ = ["EIDVSpec", "eidv_csm", "eidv_euler", "pullback"]


@dataclass(frozen=True)
class EIDVSpec:
    """Preimage of a rank locus under a degree-``map_degree`` map from P^``ambient_dim``.

    ``corank`` may be None when only the dense stratum is wanted.
    """

    kind: MatrixKind
    n: int
    corank: int | None
    map_degree: int
    ambient_dim: int

    def __post_init__(self):
        object.__setattr__(self, "kind", MatrixKind.parse(self.kind))
        if self.map_degree < 1:
            raise UsageError(f"map degree must be >= 1, got {self.map_degree}")
        if self.ambient_dim < 1:
            raise UsageError(f"ambient dimension must be >= 1, got {self.ambient_dim}")
        if self.corank is not None:
            RankLocusSpec(self.kind, self.n, self.corank)

    @property
    def locus(self) -> RankLocusSpec:
        if self.corank is None:
            raise UsageError("no corank given")
        return RankLocusSpec(self.kind, self.n, self.corank)


def pullback(cls: HClass, d: int, N: int) -> HClass:
    """Transverse pullback of a class on P(M_n) along a degree-d map from P^N."""
    scaled = cls.scale_H(d).to_poly()
    denom = DPoly((1, d)) ** (cls.ambient_dim + 1)
    inv = series_inverse(USeries(N, denom.coeffs))
    inv = DPoly(c[0] for c in inv.coeffs)
    return HClass.truncated(N, DPoly((1, 1)) ** (N + 1) * inv * scaled)


def eidv_csm(spec: EIDVSpec, which: str = "closure", method: str = "formula2") -> HClass:
    """CSM class in P^N of an EIDV stratum: ``open``, ``closure`` or ``dense``."""
    if which == "dense":
        tau = csm_dense(spec.kind, spec.n, method=method)
    elif which == "open":
        tau = csm_open(spec.locus, method=method)
    elif which == "closure":
        tau = csm_closure(spec.locus, method=method)
    else:
        raise UsageError(f"stratum must be 'open', 'closure' or 'dense', got {which!r}")
    return pullback(tau, spec.map_degree, spec.ambient_dim)


def eidv_euler(spec: EIDVSpec, which: str = "closure", method: str = "formula2"):
    """Euler characteristic: degree of the zero-dimensional piece."""
    return eidv_csm(spec, which, method).euler
