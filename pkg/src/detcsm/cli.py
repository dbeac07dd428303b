"""Command-line interface: ``detcsm <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 internal-consistency error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
import time

from .cache import ENV_VAR, ResultCache
from .cycles import characteristic, conormal, ged, polar_degrees
from .eidv import EIDVSpec, eidv_csm
from .errors import ConsistencyError, UsageError
from .qpoly import METHODS, MatrixKind, q_formula_I, q_formula_II, q_polynomial
from .render import FORMATS, render_rows
from .sectional import chi_poly, chi_via_gamma
from .strata import RankLocusSpec, csm_closure, csm_dense, csm_open, mather
from .verify import VERIFY_GROUPS, run_verify, scan_conjectures

__all__ = ["main", "build_parser", "run"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONSISTENCY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(sub, corank=True, corank_required=True):
    sub.add_argument("--kind", required=True, help="ordinary, symmetric or skew")
    sub.add_argument("--n", type=int, required=True, help="matrix size")
    if corank:
        sub.add_argument("--corank", type=int, required=corank_required)


def build_parser() -> argparse.ArgumentParser:
    shared = _Parser(add_help=False)
    shared.add_argument("--format", choices=FORMATS, default="plain")
    shared.add_argument("--method", choices=METHODS, default="formula2")
    shared.add_argument("--cache", metavar="PATH", default=None,
                        help=f"JSON result cache (default: ${ENV_VAR} if set, else none)")
    shared.add_argument("--no-cache", action="store_true", help="ignore any configured cache")

    p = _Parser(prog="detcsm", description=__doc__.splitlines()[0])
    sp = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help):
        return sp.add_parser(name, help=help, parents=[shared])

    s = command("q", "q-polynomial of a Tjurina transform")
    _common(s)
    s.add_argument("--weights-seed", type=int, default=None,
                   help="localize with random distinct integer weights from this seed")

    s = command("csm", "CSM class of a stratum")
    _common(s, corank_required=False)
    s.add_argument("--stratum", choices=("open", "closure", "dense"), default="closure")

    s = command("mather", "Chern-Mather class of a rank locus")
    _common(s)

    s = command("chi", "sectional Euler characteristic polynomial")
    _common(s)
    s.add_argument("--stratum", choices=("open", "closure"), default="closure")
    s.add_argument("--route", choices=("involution", "gamma"), default="involution",
                   help="gamma: combine J(Gamma) of the q-polynomials (open strata only)")

    s = command("cycles", "characteristic and conormal cycle rows")
    _common(s)

    s = command("polar", "polar degrees")
    _common(s)

    s = command("ged", "generic Euclidean distance degree")
    _common(s)

    s = command("eidv", "CSM class of a homogeneous EIDV stratum in P^N")
    _common(s, corank_required=False)
    s.add_argument("--map-degree", type=int, required=True)
    s.add_argument("--ambient-dim", type=int, required=True)
    s.add_argument("--stratum", choices=("open", "closure", "dense"), default="closure")

    s = command("verify", "recompute the reference tables and property suites")
    s.add_argument("--only", action="append", choices=VERIFY_GROUPS, default=None)

    s = command("conjectures", "scan coefficient positivity and log-concavity")
    s.add_argument("--kind", required=True)
    s.add_argument("--n", type=int, required=True)
    return p


def _random_weights(seed: int, n: int) -> tuple[int, ...]:
    return tuple(random.Random(seed).sample(range(-10 * n, 10 * n + 1), n))


def _meta(args, ambient_dim=None):
    kind = MatrixKind.parse(args.kind)
    meta = {"kind": kind.value, "n": args.n, "corank": getattr(args, "corank", None)}
    meta["ambient_dim"] = kind.ambient_dim(args.n) if ambient_dim is None else ambient_dim
    return meta


def _cmd_q(args):
    kind = MatrixKind.parse(args.kind)
    if args.weights_seed is None:
        value = q_polynomial(kind, args.n, args.corank, args.method)
    else:
        w = _random_weights(args.weights_seed, args.n)
        routes = {"formula2": [q_formula_II], "formula1": [q_formula_I],
                  "both": [q_formula_II, q_formula_I]}[args.method]
        values = {fn(kind, args.n, args.corank, w) for fn in routes}
        if len(values) != 1:
            raise ConsistencyError("formula I and II disagree under random weights")
        value = values.pop()
    return [(f"q_{{{args.n},{args.corank}}}", value)], _meta(args)


def _cmd_csm(args):
    kind = MatrixKind.parse(args.kind)
    if args.stratum == "dense":
        value = csm_dense(kind, args.n, method=args.method)
    else:
        if args.corank is None:
            raise UsageError(f"--corank is required for --stratum {args.stratum}")
        fn = csm_open if args.stratum == "open" else csm_closure
        value = fn(kind, args.n, args.corank, method=args.method)
    return [(f"csm_{args.stratum}", value)], _meta(args)


def _cmd_mather(args):
    return [("c_M", mather(args.kind, args.n, args.corank, method=args.method))], _meta(args)


def _cmd_chi(args):
    spec = RankLocusSpec(args.kind, args.n, args.corank)
    if args.route == "gamma":
        if args.stratum != "open":
            raise UsageError("the gamma route computes open strata only")
        value = chi_via_gamma(spec, method=args.method)
    else:
        value = chi_poly(spec, which=args.stratum, method=args.method)
    return [(f"chi_{args.stratum}", value)], _meta(args)


def _cmd_cycles(args):
    spec = RankLocusSpec(args.kind, args.n, args.corank)
    rows = [("Ch", characteristic(spec, method=args.method)), ("Con", conormal(spec, method=args.method))]
    return rows, _meta(args)


def _cmd_polar(args):
    return [("polar", polar_degrees(args.kind, args.n, args.corank, method=args.method))], _meta(args)


def _cmd_ged(args):
    return [("gED", ged(args.kind, args.n, args.corank, method=args.method))], _meta(args)


def _cmd_eidv(args):
    spec = EIDVSpec(args.kind, args.n, args.corank, args.map_degree, args.ambient_dim)
    if args.stratum != "dense" and args.corank is None:
        raise UsageError(f"--corank is required for --stratum {args.stratum}")
    cls = eidv_csm(spec, args.stratum, method=args.method)
    meta = _meta(args, ambient_dim=args.ambient_dim)
    meta["map_degree"] = args.map_degree
    return [("csm", cls), ("euler", cls.euler)], meta


_COMPUTE = {
    "q": _cmd_q, "csm": _cmd_csm, "mather": _cmd_mather, "chi": _cmd_chi, "cycles": _cmd_cycles,
    "polar": _cmd_polar, "ged": _cmd_ged, "eidv": _cmd_eidv,
}


def _render_verify(results, fmt, elapsed) -> str:
    if fmt == "json":
        return json.dumps([
            {"group": r.group, "item": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ], indent=2)
    lines = []
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'}  {r.group}  {r.name}"
        lines.append(line + (f"  ({r.detail})" if r.detail else ""))
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed} passed, {failed} failed in {elapsed:.1f}s")
    return "\n".join(lines)


_SCAN_COLUMNS = ("stratum", "corank", "csm_nonnegative", "csm_log_concave", "Con_log_concave", "Ch_log_concave")


def _render_scan(kind, n, rows, fmt) -> str:
    if fmt == "json":
        return json.dumps({"kind": kind.value, "n": n, "rows": rows}, indent=2)
    if fmt == "csv":
        lines = [",".join(_SCAN_COLUMNS)]
        lines += [",".join(str(r[c]) for c in _SCAN_COLUMNS) for r in rows]
        return "\n".join(lines)
    lines = [f"{kind.value} n={n}"]
    for r in rows:
        lines.append(
            f"  {r['stratum']:5s} corank {r['corank']}: csm non-negative {r['csm_nonnegative']}, "
            f"log-concave csm {r['csm_log_concave']}, Con {r['Con_log_concave']}, Ch {r['Ch_log_concave']}"
        )
    return "\n".join(lines)


def run(argv=None, out=None) -> int:
    """Parse ``argv``, execute, write the rendering to ``out``; return the exit code."""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        cache_path = None if args.no_cache else (args.cache or os.environ.get(ENV_VAR) or None)
        cache = ResultCache(cache_path) if cache_path else None
        if cache is not None:
            cache.preload()
        code = EXIT_OK
        if args.command == "verify":
            t0 = time.perf_counter()
            results = run_verify(args.only, args.method)
            text = _render_verify(results, args.format, time.perf_counter() - t0)
            code = EXIT_OK if all(r.passed for r in results) else EXIT_FAIL
        elif args.command == "conjectures":
            kind = MatrixKind.parse(args.kind)
            text = _render_scan(kind, args.n, scan_conjectures(kind, args.n, args.method), args.format)
        else:
            rows, meta = _COMPUTE[args.command](args)
            text = render_rows(rows, args.format, meta)
        if cache is not None:
            cache.absorb()
            cache.save()
    except UsageError as exc:
        print(f"detcsm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"detcsm: consistency error: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    print(text, file=out)
    return code


def main(argv=None) -> None:
    logging.basicConfig(level=logging.WARNING, format="detcsm: %(levelname)s: %(message)s")
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
