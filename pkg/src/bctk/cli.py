"""``bctk`` command-line front end.

Exit codes: 0 success, 2 a residual check exceeded its tolerance, 1 any error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, TextIO

from . import bicomplex as bc
from .bicomplex import Bicomplex, format_idempotent, riesz_subnorm
from .errors import BicomplexError
from .hyperbolic import fmt_real
from .parse import parse_literal
from .special import gamma_b, gamma_b_integral, mellin_check, zeta_b
from .sweeps import SCHEMA_VERSION, resolve_tolerances, verify_all
from .trig import cos_b, nth_roots, roots_of_unity, sin_b, toroid_mesh, unit_dsphere_contains

EXIT_OK, EXIT_ERROR, EXIT_RESIDUAL = 0, 1, 2
COMMANDS = ("eval", "zeta", "gamma", "roots", "unity", "toroid", "verify", "mellin")
FORMATS = ("json", "csv", "text", "obj")
VALUE_COLUMNS = ("z1_re", "z1_im", "z2_re", "z2_im")

FUNCTIONS: dict[str, Callable[[Bicomplex], Bicomplex]] = {
    "exp": bc.exp_b,
    "log": bc.log_principal,
    "sin": sin_b,
    "cos": cos_b,
    "inv": bc.invert,
    "zeta": zeta_b,
    "gamma": gamma_b,
    "conj_i": lambda w: bc.conjugate_u(w, "i"),
    "conj_j": lambda w: bc.conjugate_u(w, "j"),
    "conj_k": lambda w: bc.conjugate_u(w, "k"),
}
_APPLICATION = re.compile(r"^\s*([a-z_]+)\s*\((.*)\)\s*$", re.S)


class CliError(Exception):
    pass


@dataclass(frozen=True)
class CommandConfig:
    command: str
    format: str = "text"
    omega: str | None = None
    expression: str | None = None
    n: int | None = None
    check: bool = False
    out: str | None = None
    R: float = 2.0
    r: float = 1.0
    integral: bool = False
    tol: float | None = None
    tolerance_overrides: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise CliError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise CliError(f"unknown format {self.format!r}")
        if self.format == "obj" and self.command != "toroid":
            raise CliError("--format obj is only valid with toroid")
        if self.tol is not None and not self.tol > 0:
            raise CliError("--tol must be positive")


# ---------------------------------------------------------------------------
# rendering


def _is_real(w: Bicomplex) -> bool:
    return w.z1 == w.z2 and w.z1.imag == 0


def value_text(w: Bicomplex) -> str:
    """Real values print as a plain number, everything else in idempotent form."""
    return fmt_real(w.z1.real) if _is_real(w) else format_idempotent(w)


def value_json(w: Bicomplex) -> dict:
    return {**w.to_json(), "idempotent": format_idempotent(w), "cartesian": list(w.cartesian)}


def values_csv(values: list[Bicomplex]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(VALUE_COLUMNS)
    for w in values:
        writer.writerow([repr(w.z1.real), repr(w.z1.imag), repr(w.z2.real), repr(w.z2.imag)])
    return buf.getvalue()


def _emit(out: TextIO, cfg: CommandConfig, payload: dict, values: list[Bicomplex], text_lines: list[str]) -> None:
    if cfg.format == "json":
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, "command": cfg.command, **payload}) + "\n")
    elif cfg.format == "csv":
        out.write(values_csv(values))
    else:
        out.write("\n".join(text_lines) + "\n")


def _omega(cfg: CommandConfig) -> Bicomplex:
    if cfg.omega is None:
        raise CliError(f"{cfg.command} needs --omega")
    return parse_literal(cfg.omega)


def _tolerance(cfg: CommandConfig, key: str) -> float:
    return resolve_tolerances(cfg.tolerance_overrides, cfg.tol)[key]


# ---------------------------------------------------------------------------
# commands


def _cmd_eval(cfg: CommandConfig, out: TextIO) -> int:
    source = cfg.expression if cfg.expression is not None else cfg.omega
    if source is None:
        raise CliError("eval needs an expression such as 'exp(1+i)' or a literal")
    m = _APPLICATION.match(source)
    if m:
        name, arg = m.group(1), m.group(2)
        if name not in FUNCTIONS:
            raise CliError(f"unknown function {name!r}; choose from {', '.join(sorted(FUNCTIONS))}")
        value = FUNCTIONS[name](parse_literal(arg))
    else:
        name, value = None, parse_literal(source)
    _emit(out, cfg, {"function": name, "value": value_json(value)}, [value], [value_text(value)])
    return EXIT_OK


def _cmd_zeta(cfg: CommandConfig, out: TextIO) -> int:
    w = _omega(cfg)
    value = zeta_b(w)
    _emit(out, cfg, {"omega": value_json(w), "value": value_json(value)}, [value], [value_text(value)])
    return EXIT_OK


def _cmd_gamma(cfg: CommandConfig, out: TextIO) -> int:
    w = _omega(cfg)
    value = gamma_b_integral(w) if cfg.integral else gamma_b(w)
    payload = {"omega": value_json(w), "method": "integral" if cfg.integral else "continued", "value": value_json(value)}
    _emit(out, cfg, payload, [value], [value_text(value)])
    return EXIT_OK


def _cmd_roots(cfg: CommandConfig, out: TextIO) -> int:
    w = _omega(cfg)
    if cfg.n is None:
        raise CliError("roots needs --n")
    roots = nth_roots(w, cfg.n)
    _emit(out, cfg, {"omega": value_json(w), "n": cfg.n, "roots": [value_json(v) for v in roots]}, roots, [value_text(v) for v in roots])
    return EXIT_OK


def _product(values: list[Bicomplex]) -> Bicomplex:
    acc = bc.ONE
    for v in values:
        acc = acc * v
    return acc


def _cmd_unity(cfg: CommandConfig, out: TextIO) -> int:
    if cfg.n is None:
        raise CliError("unity needs --n")
    roots = roots_of_unity(cfg.n)
    payload: dict = {"n": cfg.n, "roots": [value_json(v) for v in roots]}
    lines = [value_text(v) for v in roots]
    code = EXIT_OK
    if cfg.check:
        tol = _tolerance(cfg, "unity")
        total = Bicomplex(sum(v.z1 for v in roots), sum(v.z2 for v in roots))
        prod = _product(roots)
        sum_res = riesz_subnorm(total) if cfg.n >= 2 else 0.0
        prod_res = riesz_subnorm(prod - 1)
        on_sphere = all(unit_dsphere_contains(v, tol) for v in roots)
        ok = sum_res < tol and prod_res < tol and on_sphere
        payload["check"] = {
            "count": len(roots),
            "sum": value_json(total),
            "product": value_json(prod),
            "sum_residual": sum_res,
            "product_residual": prod_res,
            "on_unit_sphere": on_sphere,
            "tolerance": tol,
            "passed": ok,
        }
        lines += [
            f"count {len(roots)}",
            f"sum {value_text(total)} (residual {sum_res:.3g})",
            f"product {value_text(prod)} (residual {prod_res:.3g})",
            f"on unit D-sphere: {'yes' if on_sphere else 'no'}",
        ]
        code = EXIT_OK if ok else EXIT_RESIDUAL
    _emit(out, cfg, payload, roots, lines)
    return code


def _cmd_toroid(cfg: CommandConfig, out: TextIO) -> int:
    if cfg.n is None:
        raise CliError("toroid needs --n")
    mesh = toroid_mesh(cfg.n, cfg.R, cfg.r)
    fmt = cfg.format
    if fmt == "text" and cfg.out:
        fmt = "json" if cfg.out.endswith(".json") else "obj"
    if fmt == "csv":
        raise CliError("toroid supports obj, json or text output")
    if fmt == "text":
        out.write(f"vertices {len(mesh.vertices)} edges {len(mesh.edges)} faces {len(mesh.faces)} euler {mesh.euler_characteristic}\n")
        return EXIT_OK
    body = mesh.to_obj() if fmt == "obj" else mesh.to_json() + "\n"
    if cfg.out:
        Path(cfg.out).write_text(body)
        out.write(f"wrote {cfg.out}: {len(mesh.vertices)} vertices, {len(mesh.faces)} faces\n")
    else:
        out.write(body)
    return EXIT_OK


def _cmd_verify(cfg: CommandConfig, out: TextIO) -> int:
    tols = resolve_tolerances(cfg.tolerance_overrides, cfg.tol)
    results = verify_all(tols)
    if cfg.out:
        folder = Path(cfg.out)
        folder.mkdir(parents=True, exist_ok=True)
        for name, res in results.items():
            (folder / f"{name}.csv").write_text(res.to_csv())
        (folder / "summary.json").write_text(json.dumps({"schema_version": SCHEMA_VERSION, "checks": [r.summary() for r in results.values()]}, indent=2) + "\n")
    if cfg.format == "json":
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, "command": "verify", "checks": [r.summary() for r in results.values()]}) + "\n")
    elif cfg.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(("check", "max_residual", "mean_residual", "evaluated", "excluded", "tolerance", "passed"))
        for r in results.values():
            writer.writerow((r.name, repr(r.max_residual), repr(r.mean_residual), len(r.rows), len(r.excluded), repr(r.tolerance), r.passed))
    else:
        for r in results.values():
            status = "ok" if r.passed else "FAIL"
            out.write(f"{r.name:<13} max {r.max_residual:.3e}  tol {r.tolerance:.1e}  n={len(r.rows)} excluded={len(r.excluded)}  {status}\n")
    return EXIT_OK if all(r.passed for r in results.values()) else EXIT_RESIDUAL


def _cmd_mellin(cfg: CommandConfig, out: TextIO) -> int:
    w = _omega(cfg)
    lhs, rhs, residual = mellin_check(w)
    tol = _tolerance(cfg, "mellin")
    payload = {"omega": value_json(w), "lhs": value_json(lhs), "rhs": value_json(rhs), "residual": residual, "tolerance": tol}
    lines = [f"zeta*gamma {value_text(lhs)}", f"integral   {value_text(rhs)}", f"residual   {residual:.3e}"]
    _emit(out, cfg, payload, [lhs, rhs], lines)
    return EXIT_OK if residual < tol else EXIT_RESIDUAL


_DISPATCH = {
    "eval": _cmd_eval,
    "zeta": _cmd_zeta,
    "gamma": _cmd_gamma,
    "roots": _cmd_roots,
    "unity": _cmd_unity,
    "toroid": _cmd_toroid,
    "verify": _cmd_verify,
    "mellin": _cmd_mellin,
}


def run(cfg: CommandConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return _DISPATCH[cfg.command](cfg, out)
    except (BicomplexError, CliError, ValueError, OSError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_ERROR


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 1; 2 is reserved for failed residual checks."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--tol", type=float, default=None, help="residual tolerance override (also BCTK_TOL)")

    parser = _Parser(prog="bctk", description="Bicomplex numbers, zeta and gamma functions, roots of unity.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate a literal or NAME(literal)")
    p.add_argument("expression", help=f"literal or one of {', '.join(sorted(FUNCTIONS))} applied to a literal")

    for name, helptext in (("zeta", "bicomplex zeta"), ("mellin", "check zeta*gamma against the Bose integral")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--omega", required=True)

    p = sub.add_parser("gamma", parents=[common], help="bicomplex gamma")
    p.add_argument("--omega", required=True)
    p.add_argument("--integral", action="store_true", help="use quadrature of the Euler integral")

    p = sub.add_parser("roots", parents=[common], help="all nth roots")
    p.add_argument("--omega", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("unity", parents=[common], help="bicomplex roots of unity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="check sum, product and unit-sphere membership")

    p = sub.add_parser("toroid", parents=[common], help="class-T2 toroid mesh of the roots of unity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--R", type=float, default=2.0)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--out", help="output file (.obj or .json)")

    p = sub.add_parser("verify", parents=[common], help="run the identity and bound sweeps")
    p.add_argument("--out", help="directory for per-check CSV files and summary.json")
    return parser


def config_from_args(ns: argparse.Namespace) -> CommandConfig:
    return CommandConfig(
        command=ns.command,
        format=ns.format,
        omega=getattr(ns, "omega", None),
        expression=getattr(ns, "expression", None),
        n=getattr(ns, "n", None),
        check=getattr(ns, "check", False),
        out=getattr(ns, "out", None),
        R=getattr(ns, "R", 2.0),
        r=getattr(ns, "r", 1.0),
        integral=getattr(ns, "integral", False),
        tol=ns.tol,
    )


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    return run(cfg)

