"""Command-line front end: evaluate functions, verify identities, apply the
erfc-weighted transform operators.

Exit codes: 0 success (all checks pass), 1 verification or convergence
failure, 2 usage error, 3 domain error (the violated constraint is named on
stderr).  Reports go to stdout or --out; diagnostics go to stderr.
"""

import argparse
import io
import sys
from datetime import datetime, timezone

from . import __version__, identities, kernel, laplace, transforms
from .errors import ConvergenceError, DomainError, IntegrandError
from .report import Report, write_csv
from .result import EvalResult


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _domain_error(msg: str) -> int:
    print(f"domain error: {msg}", file=sys.stderr)
    return 3


def _failure(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 1


def _print_result(r: EvalResult) -> None:
    print(f"{r.value:.17g} {r.abs_err:.3g}")


def _closed(value: float) -> EvalResult:
    return EvalResult(value, 4.0 * 2.0 ** -52 * abs(value), "closed-form", 0)


_EVAL_FUNCTIONS = {
    "gamma": (("s",), lambda a: _closed(kernel.gamma_fn(a["s"]))),
    "lower_gamma": (("s", "x"), lambda a: kernel.lower_gamma(a["s"], a["x"])),
    "regularized_p": (("s", "x"), lambda a: kernel.regularized_p(a["s"], a["x"])),
    "erf": (("x",), lambda a: kernel.erf(a["x"])),
    "erfc": (("x",), lambda a: kernel.erfc(a["x"])),
    "erfcx": (("x",), lambda a: kernel.erfcx(a["x"])),
    "erfc_moment": (("r", "a"),
                    lambda a: _closed(transforms.erfc_moment(a["r"], a["a"]))),
    "erfc_linear_moment": (("mu", "a"),
                           lambda a: _closed(transforms.erfc_linear_moment(
                               a["mu"], a["a"]))),
    "gauss_singular_closed": (("a", "b"),
                              lambda a: _closed(transforms.gauss_singular_closed(
                                  a["a"], a["b"]))),
    "gauss_lorentz_closed": (("a", "b"),
                             lambda a: _closed(transforms.gauss_lorentz_closed(
                                 a["a"], a["b"]))),
}


def _parse_named_args(tokens) -> dict:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise ValueError(f"expected name=value, got {tok!r}")
        k, _, v = tok.partition("=")
        try:
            out[k.strip()] = float(v)
        except ValueError:
            raise ValueError(f"non-numeric value {v!r} for {k.strip()!r}") from None
    return out


def _cmd_eval(args) -> int:
    if args.function not in _EVAL_FUNCTIONS:
        return _usage_error(
            f"unknown function {args.function!r}; choose from "
            f"{', '.join(sorted(_EVAL_FUNCTIONS))}")
    wanted, impl = _EVAL_FUNCTIONS[args.function]
    try:
        named = _parse_named_args(args.args)
    except ValueError as exc:
        return _usage_error(str(exc))
    if set(named) != set(wanted):
        return _usage_error(
            f"function {args.function!r} takes arguments "
            f"{', '.join(wanted)}; got {', '.join(sorted(named)) or 'none'}")
    try:
        result = impl(named)
    except (DomainError, OverflowError) as exc:
        return _domain_error(str(exc))
    except (ConvergenceError, IntegrandError) as exc:
        return _failure(str(exc))
    _print_result(result)
    return 0


def _parse_grid_overrides(entries) -> dict:
    grid = {}
    for entry in entries or ():
        for chunk in entry.split():
            if "=" not in chunk:
                raise ValueError(f"grid spec must be param=v1,v2,...; got {chunk!r}")
            name, _, values = chunk.partition("=")
            try:
                grid[name.strip()] = [float(v) for v in values.split(",") if v]
            except ValueError:
                raise ValueError(f"non-numeric grid value in {chunk!r}") from None
    return grid


def _cmd_verify(args) -> int:
    all_ids = [s.id for s in identities.catalog()]
    if args.ids == ["all"]:
        ids = all_ids
    else:
        unknown = [i for i in args.ids if i not in all_ids]
        if unknown:
            return _usage_error(f"unknown identity ids: {', '.join(unknown)}")
        ids = args.ids
    try:
        grid = _parse_grid_overrides(args.grid)
    except ValueError as exc:
        return _usage_error(str(exc))

    records = []
    skipped = []
    notes = {}
    for identity_id in ids:
        spec = identities.get_identity(identity_id)
        result = identities.run_grid(spec, grid or "default",
                                     tol_rel=args.tol_rel, tol_abs=args.tol_abs)
        records.extend(result.records)
        skipped.extend(result.skipped)
        if spec.notes:
            notes[identity_id] = spec.notes

    report = Report(
        tool_version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        records=records,
        skipped=skipped,
        notes=notes,
    )
    if args.format == "json":
        text = report.to_json() + "\n"
    else:
        buf = io.StringIO()
        write_csv(report, buf)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    summary = report.summary
    print(f"{summary['pass']}/{summary['total']} passed, "
          f"{summary['fail']} failed, "
          f"{summary['skipped_out_of_domain']} skipped out of domain",
          file=sys.stderr)
    return 0 if summary["fail"] == 0 else 1


def _cmd_transform(args) -> int:
    try:
        pair = laplace.parse_pair(args.pair)
    except ValueError as exc:
        return _usage_error(str(exc))
    op = (transforms.erfc_weighted_integral if args.weighted == "plain"
          else transforms.erfc_weighted_exp_integral)
    try:
        result = op(pair, args.a, args.form)
    except (DomainError, OverflowError) as exc:
        return _domain_error(str(exc))
    except (ConvergenceError, IntegrandError) as exc:
        return _failure(str(exc))
    _print_result(result)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammerf",
        description="Evaluate gamma/erf kernels and verify the identity catalog "
                    "through independent numerical routes.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at named arguments")
    p_eval.add_argument("function", help="function name, e.g. erfc or lower_gamma")
    p_eval.add_argument("args", nargs="*",
                        help="named arguments like x=1 or s=0.5")

    p_verify = sub.add_parser("verify", help="run identity verification grids")
    p_verify.add_argument("ids", nargs="+",
                          help="identity ids (I1..I19) or 'all'")
    p_verify.add_argument("--grid", action="append", metavar="PARAM=V1,V2,...",
                          help="override one parameter's grid values "
                               "(repeatable; others keep their defaults)")
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.add_argument("--out", help="write the report to this path "
                                        "instead of stdout")
    p_verify.add_argument("--tol-rel", type=float, default=None,
                          help="override the per-identity relative tolerance")
    p_verify.add_argument("--tol-abs", type=float, default=None,
                          help="override the per-identity absolute tolerance")

    p_tr = sub.add_parser("transform",
                          help="apply an erfc-weighted reduction to a pair")
    p_tr.add_argument("--pair", required=True,
                      help="pair spec, e.g. \"power(r=-0.5)\" or \"dirac(b=1)\"")
    p_tr.add_argument("--a", type=float, required=True, help="scale a > 0")
    p_tr.add_argument("--form", choices=("theta", "s", "time"), required=True)
    p_tr.add_argument("--weighted", choices=("plain", "exp"), default="plain")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_transform(args)


if __name__ == "__main__":
    sys.exit(main())
