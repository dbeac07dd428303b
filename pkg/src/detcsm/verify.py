"""
Golden-table verification and the coefficient-pattern scanner.

``run_verify`` recomputes every stored reference row and a handful of
structural property checks, returning one ``CheckResult`` per item; nothing
here raises on a mismatch. ``scan_conjectures`` reports non-negativity and
log-concavity patterns and likewise never asserts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .cycles import characteristic, conormal, flip, ged, polar_degrees
from .errors import ConsistencyError, UsageError
from .exactalg import HClass
from .golden import GROUPS, as_class
from .qpoly import MatrixKind, q_polynomial
from .strata import RankLocusSpec, csm_dense, csm_open, dense_corank, singular_coranks

__all__ = [
    "CheckResult",
    "VERIFY_GROUPS",
    "run_verify",
    "golden_checks",
    "property_checks",
    "dual_corank",
    "log_concave",
    "scan_conjectures",
]

VERIFY_GROUPS = tuple(GROUPS) + ("properties",)


@dataclass
class CheckResult:
    group: str
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


def _diff(expected, got) -> str:
    if isinstance(expected, HClass):
        bad = [(p, e, g) for p, (e, g) in enumerate(zip(expected.coeffs, got.coeffs)) if e != g]
        return "; ".join(f"H^{p}: expected {e}, computed {g}" for p, e, g in bad)
    bad = [(j, e, g) for j, (e, g) in enumerate(zip(expected, got), start=1) if e != g]
    return "; ".join(f"j={j}: expected {e}, computed {g}" for j, e, g in bad)


def _timed(group, name, fn) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except (ConsistencyError, UsageError, ArithmeticError) as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(group, name, ok, detail, time.perf_counter() - t0)


def _golden_item(kind, n, key, expected, method):
    what, k = key
    N = MatrixKind.parse(kind).ambient_dim(n)
    if what == "q":
        got, want = q_polynomial(kind, n, k, method), as_class(N, expected)
    elif what == "csm_open":
        got, want = csm_open(kind, n, k, method=method), as_class(N, expected)
    elif what == "csm_dense":
        got, want = csm_dense(kind, n, method=method), as_class(N, expected)
    elif what == "Ch":
        got, want = characteristic(kind, n, k, method=method).coeffs, tuple(expected)
    elif what == "Con":
        got, want = conormal(kind, n, k, method=method).coeffs, tuple(expected)
    else:  # pragma: no cover - table layout is fixed
        raise KeyError(what)
    return got == want, "" if got == want else _diff(want, got)


def golden_checks(group: str, method: str = "formula2") -> list[CheckResult]:
    kind, n, table = GROUPS[group]
    out = []
    for key, expected in table.items():
        what, k = key
        name = f"{what}" if k is None else f"{what}[{k}]"
        out.append(_timed(group, name, lambda key=key, e=expected: _golden_item(kind, n, key, e, method)))
    return out


def dual_corank(kind, n: int, k: int) -> int:
    """Corank of the projectively dual rank locus."""
    kind = MatrixKind.parse(kind)
    if kind is MatrixKind.SKEW and n % 2:
        return n + 1 - k
    return n - k


def _cross_method(kind, n):
    bad = [r for r in _all_coranks(kind, n)
           if q_polynomial(kind, n, r, "formula1") != q_polynomial(kind, n, r, "formula2")]
    return not bad, f"disagree at coranks {bad}" if bad else ""


def _all_coranks(kind, n):
    kind = MatrixKind.parse(kind)
    if kind is MatrixKind.SKEW:
        return list(range(2 if n % 2 == 0 else 1, n, 2))
    return list(range(1, n))


def _strata_sum(kind, n, method):
    kind = MatrixKind.parse(kind)
    N = kind.ambient_dim(n)
    total = csm_dense(kind, n, method=method)
    for k in singular_coranks(kind, n):
        total = total + csm_open(kind, n, k, method=method)
    if total != HClass.projective_space(N):
        return False, "strata do not add up to c(P^N)"
    if dense_corank(kind, n):
        # odd skew: the dense stratum also has its own base-change formula
        direct = csm_open(kind, n, dense_corank(kind, n), method=method)
        if direct != csm_dense(kind, n, method=method):
            return False, _diff(direct, csm_dense(kind, n, method=method))
    return True, ""


def _duality(kind, n, k, method):
    spec = RankLocusSpec(kind, n, k)
    dual = RankLocusSpec(kind, n, dual_corank(kind, n, k))
    sign = (-1) ** (spec.dim - dual.dim)
    a = conormal(spec, method=method)
    b = flip(conormal(dual, method=method))
    if a != sign * b:
        return False, _diff(tuple(sign * c for c in b.coeffs), a.coeffs)
    pa, pb = polar_degrees(spec, method=method), polar_degrees(dual, method=method)
    if pa != tuple(reversed(pb)):
        return False, f"polar degrees {pa} vs reversed {tuple(reversed(pb))}"
    return True, ""


def _ch_symmetry(kind, n, k, method):
    ch = characteristic(kind, n, k, method=method)
    return ch == flip(ch), "" if ch == flip(ch) else _diff(flip(ch).coeffs, ch.coeffs)


def _ged_pair(kind, n, k, method):
    a = ged(kind, n, k, method=method)
    b = ged(kind, n, dual_corank(kind, n, k), method=method)
    return a == b, "" if a == b else f"gED {a} != dual gED {b}"


DUALITY_CASES = [("skew", 6, 2), ("skew", 7, 3), ("symmetric", 3, 1), ("symmetric", 4, 1),
                 ("symmetric", 4, 2), ("ordinary", 4, 1)]
SYMMETRY_CASES = [("symmetric", 3, 1), ("symmetric", 4, 1), ("skew", 6, 2), ("skew", 7, 3)]


def property_checks(method: str = "formula2", max_n: int = 7) -> list[CheckResult]:
    g = "properties"
    out = []
    for kind in MatrixKind:
        for n in range(2, max_n + 1):
            out.append(_timed(g, f"cross-method {kind.value} n={n}", lambda k=kind, n=n: _cross_method(k, n)))
    for kind in MatrixKind:
        for n in range(2, max_n + 1):
            out.append(_timed(g, f"strata-sum {kind.value} n={n}", lambda k=kind, n=n: _strata_sum(k, n, method)))
    for kind, n, k in DUALITY_CASES:
        out.append(_timed(g, f"duality {kind} n={n} corank {k}", lambda a=(kind, n, k): _duality(*a, method)))
        out.append(_timed(g, f"gED duality {kind} n={n} corank {k}", lambda a=(kind, n, k): _ged_pair(*a, method)))
    for kind, n, k in SYMMETRY_CASES:
        out.append(_timed(g, f"Ch symmetry {kind} n={n} corank {k}", lambda a=(kind, n, k): _ch_symmetry(*a, method)))
    return out


def run_verify(only=None, method: str = "formula2") -> list[CheckResult]:
    groups = list(only) if only else list(VERIFY_GROUPS)
    for grp in groups:
        if grp not in VERIFY_GROUPS:
            raise UsageError(f"unknown verify group {grp!r}; choose from {', '.join(VERIFY_GROUPS)}")
    results: list[CheckResult] = []
    for grp in groups:
        results.extend(property_checks(method) if grp == "properties" else golden_checks(grp, method))
    return results


# --- coefficient pattern scanner -------------------------------------------

def log_concave(seq) -> bool:
    """Log-concavity of |c_i| over the span between the first and last nonzero entry.

    An internal zero inside that span breaks log-concavity.
    """
    vals = [abs(c) for c in seq]
    nz = [i for i, c in enumerate(vals) if c]
    if not nz:
        return True
    span = vals[nz[0]: nz[-1] + 1]
    if 0 in span:
        return False
    return all(span[i] ** 2 >= span[i - 1] * span[i + 1] for i in range(1, len(span) - 1))


def _verdict(flag) -> str:
    if flag is None:
        return "n/a"
    return "holds" if flag else "fails"


def scan_conjectures(kind, n: int, method: str = "formula2") -> list[dict]:
    """One row per stratum: csm non-negativity and log-concavity of csm, Con, Ch."""
    kind = MatrixKind.parse(kind)
    if n < 2:
        raise UsageError(f"matrix size must be at least 2, got {n}")
    rows = []
    dense = csm_dense(kind, n, method=method)
    rows.append({
        "stratum": "dense",
        "corank": dense_corank(kind, n),
        "csm_nonnegative": _verdict(all(c >= 0 for c in dense.coeffs)),
        "csm_log_concave": _verdict(log_concave(dense.coeffs)),
        "Con_log_concave": "n/a",
        "Ch_log_concave": "n/a",
    })
    for k in singular_coranks(kind, n):
        cls = csm_open(kind, n, k, method=method)
        rows.append({
            "stratum": "open",
            "corank": k,
            "csm_nonnegative": _verdict(all(c >= 0 for c in cls.coeffs)),
            "csm_log_concave": _verdict(log_concave(cls.coeffs)),
            "Con_log_concave": _verdict(log_concave(conormal(kind, n, k, method=method).coeffs)),
            "Ch_log_concave": _verdict(log_concave(characteristic(kind, n, k, method=method).coeffs)),
        })
    return rows
