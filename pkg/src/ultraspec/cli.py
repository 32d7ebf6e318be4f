"""``ultraspec`` command line: one subcommand per invocation, JSON on stdout.

Every report is wrapped as ``{"schema_version", "command", "result",
"warnings"}`` and serialized with sorted keys, so identical arguments give
identical bytes. Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import geometry, padic, perturbation, props, spectral, vectors
from .numeric import Poly, RationalFunction, parse_rational
from .valuations import (
    INF,
    FinitePlace,
    InfinitePlace,
    PAdicContext,
    abs_p,
    ring_membership,
    valuation_to_json,
    vp_rat,
)

SCHEMA_VERSION = "1.0"

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/4" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^[-−]\d+(/\d+)?$")
        self._has_negative_number_optionals = []

    def error(self, message):  # argparse would print prose and exit 2
        raise UsageError(f"{self.prog}: {message}")


# -- argument types ----------------------------------------------------------------


def _arg(fn):
    def wrapped(text):
        try:
            return fn(text)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    wrapped.__name__ = fn.__name__
    return wrapped


@_arg
def rational_arg(text: str) -> Fraction:
    return parse_rational(text.strip())


@_arg
def prime_arg(text: str) -> PAdicContext:
    return PAdicContext(int(text))


@_arg
def rational_list_arg(text: str) -> tuple[Fraction, ...]:
    return _rational_list(text)


@_arg
def ball_arg(text: str) -> tuple[Fraction, Fraction, str]:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) == 2:
        parts.append("closed")
    if len(parts) != 3:
        raise ValueError(f"expected 'center,radius[,open|closed]', got {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1]), parts[2]


@_arg
def place_arg(text: str):
    s = text.strip()
    if s.lower() in ("inf", "infinity", "∞"):
        return InfinitePlace()
    return FinitePlace(Poly.parse(s))


@_arg
def rf_arg(text: str) -> RationalFunction:
    return RationalFunction.parse(text)


def _rational_list(text: str) -> tuple[Fraction, ...]:
    """``[1, -1/2, 3]``, a bare comma list, or JSON ``{"coords": [...]}``."""
    src = text.strip()
    if src.startswith("{"):
        obj = json.loads(src)
        if "coords" not in obj:
            raise ValueError("vector object needs a 'coords' field")
        items = obj["coords"]
    else:
        if src.startswith("["):
            if not src.endswith("]"):
                raise ValueError(f"unterminated list: {text!r}")
            src = src[1:-1]
        items = [s for s in src.split(",") if s.strip()]
    return tuple(parse_rational(str(s).strip()) for s in items)


def _read_json(path: str):
    try:
        raw = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None


# -- subcommands -------------------------------------------------------------------


def cmd_valuation(a, warnings):
    return {"valuation": valuation_to_json(vp_rat(a.p, a.x))}


def cmd_absval(a, warnings):
    v = abs_p(a.p, a.x)
    return {"abs": v.to_json(), "exponent": None if v.is_zero() else v.k}


def cmd_expand(a, warnings):
    if a.digits < 1:
        raise UsageError("--digits must be positive")
    v = vp_rat(a.p, a.x)
    shift = 0 if v is INF else min(0, v)
    approx = padic.approx_from_rational(a.p, a.x, shift + a.digits)
    return approx.to_json()


def cmd_balls(a, warnings):
    p = a.p.p
    try:
        ba = geometry.Ball.of(p, *a.a)
        bb = geometry.Ball.of(p, *a.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = {"relation": geometry.balls_relation(a.p, ba, bb).value}
    if a.point is not None:
        out["contains"] = {
            "a": geometry.ball_contains(a.p, ba, a.point),
            "b": geometry.ball_contains(a.p, bb, a.point),
        }
    return out


def cmd_funcfield(a, warnings):
    return ring_membership(a.rf, a.place).to_json()


def cmd_vectors(a, warnings):
    if len(a.x) != len(a.y):
        raise UsageError(f"--x has {len(a.x)} coordinates, --y has {len(a.y)}")
    nx, ny = vectors.norm_max(a.p, a.x), vectors.norm_max(a.p, a.y)
    ip = vectors.inner_t(a.x, a.y)
    out = {
        "norm_x": nx.to_json(),
        "norm_y": ny.to_json(),
        "inner_t": str(ip),
        "abs_inner_t": abs_p(a.p, ip).to_json(),
        "cauchy_schwarz": abs_p(a.p, ip) <= nx * ny,
    }
    if a.omega is not None:
        if len(a.omega) != len(a.x):
            raise UsageError("--omega length differs from the vectors")
        out["inner_omega"] = str(vectors.inner_omega(vectors.weights(a.omega), a.x, a.y))
    return out


def cmd_spectrum(a, warnings):
    try:
        profile = spectral.profile_from_json(_read_json(a.profile))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad profile: {exc}") from None
    probes = a.lam or []
    rep = spectral.spectrum_report(profile, probes)
    warnings.extend(rep.warnings)
    out = rep.to_json()
    out.pop("warnings")
    if a.truncate is not None:
        if a.truncate < 1:
            raise UsageError("--truncate must be positive")
        t = a.truncate
        trunc = {"t": t, "diagonal": [str(x) for x in spectral.diagonal_prefix(profile, t)], "probes": {}}
        for lam in probes:
            kern, rng = spectral.kernel_range_indices(profile, lam, t)
            trunc["probes"][str(lam)] = {
                "kernel_indices": sorted(kern),
                "range_indices": sorted(rng),
                "range_equals_kernel_perp": spectral.range_equals_kernel_perp(profile, lam, t),
            }
        out["truncation"] = trunc
    return out


def _load_pairs(path: str):
    obj = _read_json(path)
    if isinstance(obj, dict):
        obj = obj.get("pairs")
    if not isinstance(obj, list) or not obj:
        raise UsageError("pairs file must be a non-empty list of {\"u\": [...], \"v\": [...]}")
    pairs = []
    for i, item in enumerate(obj):
        try:
            if isinstance(item, dict):
                u, v = item["u"], item["v"]
            else:
                u, v = item
            pairs.append((tuple(parse_rational(str(x)) for x in u), tuple(parse_rational(str(x)) for x in v)))
        except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
            raise UsageError(f"pair {i}: {exc}") from None
    return pairs


def cmd_perturb(a, warnings):
    lam, omega = a.lam, a.omega
    pairs = _load_pairs(a.pairs)
    if omega is None:
        omega = (Fraction(1),) * len(lam)
    t = a.truncate if a.truncate is not None else len(lam)
    if t < 1 or t > len(lam):
        raise UsageError(f"--truncate must lie in [1, {len(lam)}]")
    if len(omega) < t or any(len(u) < t or len(v) < t for u, v in pairs):
        raise UsageError(f"omega and every u, v need at least {t} coordinates")
    if t < len(lam):
        warnings.append(f"truncated to the first {t} coordinates")
    try:
        pert = perturbation.FiniteRankPerturbation(
            omega[:t], tuple((u[:t], v[:t]) for u, v in pairs)
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = perturbation.spectrum_compare(lam[:t], pert)
    out = rep.to_json()
    if rep.irrational_degree:
        warnings.append(
            f"characteristic polynomial has a factor of degree {rep.irrational_degree} without rational roots"
        )
    if a.check_lambda is not None:
        out["check"] = perturbation.is_eigenvalue(rep.matrix, a.check_lambda).to_json()
    return out


def cmd_props(a, warnings):
    if a.cases < 1:
        raise UsageError("--cases must be positive")
    unknown = [n for n in a.only or [] if n not in props.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    results = props.run_all(a.seed, a.cases, a.only)
    return {
        "seed": a.seed,
        "cases": a.cases,
        "suites": [r.to_json() for r in results],
        "passed": all(r.passed for r in results),
        "total_checks": sum(r.checks for r in results),
        "total_failures": sum(r.failures for r in results),
    }


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ultraspec", description="Exact non-Archimedean valuations, balls and diagonal spectra.")
    ap.add_argument("--text", action="store_true", help="print a short human-readable summary instead of JSON")
    sub = ap.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_, desc):
        sp = sub.add_parser(name, help=help_, description=desc)
        sp.set_defaults(func=fn)
        return sp

    sp = add("valuation", cmd_valuation, "p-adic valuation of a rational",
             "Exponent of p in a rational: V_p(p^k a/b) = k. Prints \"inf\" for zero.")
    sp.add_argument("--p", type=prime_arg, required=True, help="a prime")
    sp.add_argument("--x", type=rational_arg, required=True, help="rational such as 50/7")

    sp = add("absval", cmd_absval, "p-adic absolute value",
             "Non-Archimedean absolute value |x|_p = p^(-V_p(x)) on the rationals.")
    sp.add_argument("--p", type=prime_arg, required=True)
    sp.add_argument("--x", type=rational_arg, required=True)

    sp = add("expand", cmd_expand, "truncated p-adic digit expansion",
             "Digits of x in base p, least significant first, starting at p^shift.")
    sp.add_argument("--p", type=prime_arg, required=True)
    sp.add_argument("--x", type=rational_arg, required=True)
    sp.add_argument("--digits", type=int, default=8, help="number of digits (default 8)")

    sp = add("balls", cmd_balls, "ultrametric ball relation",
             "Relation between two balls in Q with the p-adic metric: disjoint, nested or equal.")
    sp.add_argument("--p", type=prime_arg, required=True)
    sp.add_argument("--a", type=ball_arg, required=True, help="center,radius[,open|closed]")
    sp.add_argument("--b", type=ball_arg, required=True, help="center,radius[,open|closed]")
    sp.add_argument("--point", type=rational_arg, help="also report membership of this point")

    sp = add("funcfield", cmd_funcfield, "valuations on the rational function field",
             "Valuation of a rational function at a place of Q(x): an irreducible "
             "polynomial (irreducibility is assumed, not checked) or 'inf'.")
    sp.add_argument("--place", type=place_arg, required=True, help="'x-1', '[1,0,1]' or 'inf'")
    sp.add_argument("--rf", type=rf_arg, required=True, help="'[num]/[den]', coefficients lowest degree first")

    sp = add("vectors", cmd_vectors, "max norm and inner products on K^t",
             "Max norm, the bilinear form <x,y>_t, the Cauchy-Schwarz check and the weighted form.")
    sp.add_argument("--p", type=prime_arg, required=True)
    sp.add_argument("--x", type=rational_list_arg, required=True, help="'[1/2,3,0]' or '{\"coords\": [...]}'")
    sp.add_argument("--y", type=rational_list_arg, required=True)
    sp.add_argument("--omega", type=rational_list_arg, help="nonzero weights")

    sp = add("spectrum", cmd_spectrum, "spectra of diagonal operators",
             "Point, essential (proper and improper) and full spectrum of a diagonal operator "
             "given by an eigenvalue profile, with Fredholm data at each candidate.")
    sp.add_argument("--profile", required=True, help="profile JSON file, '-' for stdin")
    sp.add_argument("--lambda", dest="lam", type=rational_arg, action="append", help="probe value (repeatable)")
    sp.add_argument("--truncate", type=int, help="also check kernel/range index sets on the first t coordinates")

    sp = add("perturb", cmd_perturb, "finite-rank perturbations of diagonal operators",
             "Assemble D + sum u_k (x) v_k on a truncation, compare its rational eigenvalues with "
             "the diagonal values theta_j = lambda_j + omega_j sum u_k[j] v_k[j].")
    sp.add_argument("--lambda", dest="lam", type=rational_list_arg, required=True, help="'[1,2,3]'")
    sp.add_argument("--omega", type=rational_list_arg, help="weights, default all ones")
    sp.add_argument("--pairs", required=True, help="JSON file with [{\"u\": [...], \"v\": [...]}, ...]")
    sp.add_argument("--check-lambda", dest="check_lambda", type=rational_arg, help="test one value for eigenvalue")
    sp.add_argument("--truncate", type=int, help="use the first t coordinates")

    sp = add("props", cmd_props, "seeded property suites",
             "Run the seeded property suites (valuations, ultrametric geometry, p-adic series, "
             "inner products, diagonal spectra, perturbations) and report counts per property.")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=int, default=1000)
    sp.add_argument("--only", action="append", help="run only this suite (repeatable)")
    return ap


def _echo(ns: argparse.Namespace) -> dict:
    args = {}
    for k, v in sorted(vars(ns).items()):
        if k in ("func", "command", "text") or v is None:
            continue
        args[k] = _jsonable(v)
    return {"name": ns.command, "args": args}


def _jsonable(v):
    if isinstance(v, PAdicContext):
        return v.p
    if isinstance(v, (Fraction, Poly, RationalFunction, FinitePlace, InfinitePlace)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _summary(report: dict) -> str:
    lines = [f"ultraspec {report['command']['name']}"]
    res = report["result"]
    if report["command"]["name"] == "props":
        for s in res["suites"]:
            mark = "PASS" if s["passed"] else "FAIL"
            lines.append(f"  {mark} {s['name']:<34} {s['checks']:>8} checks  ({s['topic']})")
    else:
        for k, v in sorted(res.items()):
            lines.append(f"  {k}: {json.dumps(v, sort_keys=True, ensure_ascii=False)}")
    lines += [f"  warning: {w}" for w in report["warnings"]]
    return "\n".join(lines) + "\n"


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Parse and execute; returns (exit code, text for stdout)."""
    try:
        ns = build_parser().parse_args(argv)
        warnings: list[str] = []
        result = ns.func(ns, warnings)
    except UsageError as exc:
        return EXIT_USAGE, dumps({"error": {"kind": "usage", "message": str(exc)}})
    except (padic.ConvergenceError, ArithmeticError, ValueError, AssertionError) as exc:
        return EXIT_DOMAIN, dumps({"error": {"kind": "domain", "message": str(exc)}})
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": _echo(ns),
        "result": result,
        "warnings": warnings,
    }
    code = EXIT_OK
    if ns.command == "props" and not result["passed"]:
        code = EXIT_DOMAIN
    return code, _summary(report) if ns.text else dumps(report)


def main(argv: list[str] | None = None) -> int:
    try:
        code, out = run(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    sys.stdout.write(out)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
