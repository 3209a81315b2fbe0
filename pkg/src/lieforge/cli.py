"""Command-line front end: ``lieforge {verify,emit,table,enumerate,diamond}``.

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 on a configuration or usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from . import analysis, constructions as cons, core, morphisms as mor, scfile
from .core import A, B, AlgebraError, Element, Named, Report, X
from .scalars import ScalarError, parse_rational

ALGEBRAS = ("Iu", "glplus", "un", "gln", "sl-Iu", "sl-glplus")
COMMANDS = ("verify", "emit", "table", "enumerate", "diamond")
EPS_KINDS = ("glplus", "sl-glplus")

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    algebra: str = "Iu"
    n: int = 3
    eps: Optional[Fraction] = None
    truncate: Optional[int] = None
    format: str = "sc-v1"
    out: Optional[str] = None
    max_enum: int = 8

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.algebra not in ALGEBRAS:
            raise ConfigError(f"unknown algebra {self.algebra!r}")
        if self.n < 1:
            raise ConfigError("--n must be at least 1")
        if self.format != "sc-v1":
            raise ConfigError(f"unsupported format {self.format!r}")
        if self.eps is not None and self.truncate is not None:
            raise ConfigError("--eps and --truncate are mutually exclusive")
        if (self.eps is not None or self.truncate is not None) and self.algebra not in EPS_KINDS:
            raise ConfigError(f"--eps/--truncate do not apply to {self.algebra}")
        if self.truncate is not None and self.truncate < 0:
            raise ConfigError("--truncate must be >= 0")
        if self.command == "table" and self.algebra != "Iu":
            raise ConfigError("table is only defined for --algebra Iu")
        if self.command == "enumerate":
            if self.algebra not in ("Iu", "glplus"):
                raise ConfigError("enumerate supports --algebra Iu or glplus")
            if self.n > self.max_enum:
                raise ConfigError(f"n = {self.n} exceeds the enumeration guard {self.max_enum}; "
                                  "raise it with --max-enum")
        return self


def build_algebra(cfg: RunConfig) -> core.LieAlgebra:
    kind, n = cfg.algebra, cfg.n
    if kind == "Iu":
        return cons.build_Iu_direct(n)
    if kind == "un":
        return cons.build_un(n)
    if kind == "gln":
        return cons.build_gln(n)
    if kind == "sl-Iu":
        return cons.sl_restrict(cons.build_Iu_direct(n))
    L = cons.build_glpluseps_direct(n)
    if cfg.eps is not None:
        L = core.specialize(L, cfg.eps)
    elif cfg.truncate is not None:
        L = core.truncate(L, cfg.truncate)
    return cons.sl_restrict(L) if kind == "sl-glplus" else L


# -- verify -------------------------------------------------------------------

Check = Tuple[str, Callable[[], Report]]


def _bool(ok: bool, witness=None) -> Report:
    return Report(ok, [] if ok else [witness])


def _family_checks(cfg: RunConfig, L: core.LieAlgebra, kind: str) -> List[Check]:
    n = cfg.n
    p, f = mor.psi(n, kind), mor.phi(n, kind)
    return [
        ("psi-automorphism", lambda: mor.is_automorphism(L, p)),
        ("psi-order", lambda: _bool(mor.power(p, n).is_identity(), "psi^n != id")),
        ("phi-antiautomorphism", lambda: mor.is_antiautomorphism(L, f)),
        ("phi-order", lambda: _bool(mor.power(f, 2).is_identity(), "phi^2 != id")),
        ("dihedral-relation", lambda: _bool(
            mor.compose(f, mor.compose(p, f)) == mor.power(p, n - 1), "phi psi phi != psi^(n-1)")),
    ]


def _iu_checks(cfg: RunConfig, L: core.LieAlgebra) -> List[Check]:
    n = cfg.n
    checks = [
        ("oracle-coadjoint", lambda: _bool(cons.coadjoint_semidirect(cons.build_un(n)).same_table(L),
                                           "coadjoint table differs")),
    ]
    checks += _family_checks(cfg, L, "Iu")
    checks.append(("psi-length", lambda: analysis.psi_preserves_length(n)))
    if n <= analysis.DEFAULT_GUARD:
        table = {}

        def sub(key):
            def run():
                if "r" not in table:
                    table["r"] = analysis.verify_layer_table(n)
                return table["r"].checks[key]
            return run

        checks += [(f"layer-table-{key}", sub(key)) for key in "abcdef"]
        checks.append(("layer-table-trace-gap", lambda: analysis.layer_trace_gap(n)))
        metric = {}

        def msub(key):
            def run():
                if "r" not in metric:
                    metric["r"] = analysis.verify_metric_layers(n)
                return metric["r"].checks[key]
            return run

        checks += [("metric-pairing", msub("pairing")), ("metric-invariance", msub("invariance"))]
    checks.append(("solvable", lambda: _bool(core.is_solvable(L), "derived series does not reach 0")))
    return checks


def _split_map(n: int):
    images = {}
    for lab in cons.family_basis(n):
        if lab.kind == "x":
            images[lab] = Element.basis(Named(f"e[{lab.i},{lab.j}]"))
        else:
            images[lab] = Element.basis(Named(f"e[{lab.i},{lab.i}]"))
    return mor.LinearMap(images)


def _glplus_symbolic_checks(cfg: RunConfig, L: core.LieAlgebra) -> List[Check]:
    n = cfg.n

    def center_check():
        Z = core.center(core.specialize(L, 1))
        missing = [i for i in range(1, n + 1) if Element({B(i): 1, A(i): -1}) not in Z]
        return Report.from_failures(missing)

    checks = [
        ("oracle-double", lambda: _bool(
            cons.manin_double(cons.build_un(n), cons.build_ln_eps(n), cons.standard_pairing(n)).same_table(L),
            "double table differs")),
        ("form-invariance", lambda: cons.form_invariance(L, cons.standard_pairing(n), max_failures=1)),
    ]
    checks += _family_checks(cfg, L, "glplus")
    checks += [
        ("specialize-0-is-Iu", lambda: _bool(core.specialize(L, 0).same_table(cons.build_Iu_direct(n)),
                                             "eps=0 table differs from Iu")),
        ("eps1-center", center_check),
        ("eps1-split-onto-gln", lambda: mor.is_homomorphism(core.specialize(L, 1), cons.build_gln(n),
                                                            _split_map(n), max_failures=1)),
    ]
    if n >= 2:
        checks.append(("not-solvable-at-eps1", lambda: _bool(not core.is_solvable(core.specialize(L, 1)),
                                                             "solvable at eps=1")))
    return checks


def _sl_checks(cfg: RunConfig, L: core.LieAlgebra) -> List[Check]:
    kind = "Iu" if cfg.algebra == "sl-Iu" else "glplus"
    parent = L.parent
    n = cfg.n
    return [
        ("closure", lambda: Report(True)),
        ("psi-restricts", lambda: mor.is_automorphism(L, mor.transport(mor.psi(n, kind), L, parent))),
        ("phi-restricts", lambda: mor.is_antiautomorphism(L, mor.transport(mor.phi(n, kind), L, parent))),
    ]


def verify_checks(cfg: RunConfig) -> List[Check]:
    try:
        L = build_algebra(cfg)
    except AlgebraError as exc:
        return [("closure", lambda: Report(False, [str(exc)]))]
    checks: List[Check] = [("jacobi", lambda: core.verify_jacobi(L, max_failures=1))]
    kind = cfg.algebra
    if kind == "Iu":
        checks += _iu_checks(cfg, L)
    elif kind == "glplus":
        if cfg.eps is None and cfg.truncate is None:
            checks += _glplus_symbolic_checks(cfg, L)
        else:
            checks += _family_checks(cfg, L, "glplus")
            if cfg.truncate is not None:
                checks.append(("solvable", lambda: _bool(core.is_solvable(L), "derived series does not reach 0")))
            elif cfg.eps == 0:
                checks.append(("equals-Iu", lambda: _bool(L.same_table(cons.build_Iu_direct(cfg.n)),
                                                          "eps=0 table differs from Iu")))
    elif kind == "un":
        checks.append(("solvable", lambda: _bool(core.is_solvable(L), "derived series does not reach 0")))
    elif kind.startswith("sl-"):
        checks += _sl_checks(cfg, L)
    return checks


def _witness(rep: Report) -> str:
    if rep.ok:
        return "PASS"
    w = rep.failures[0] if rep.failures else ""
    return f"FAIL {w}".rstrip()


def cmd_verify(cfg: RunConfig, out) -> int:
    failed = 0
    for name, run in verify_checks(cfg):
        rep = run()
        failed += not rep.ok
        print(f"{name}: {_witness(rep)}", file=out)
    print(f"summary: {'PASS' if not failed else f'FAIL ({failed} failed)'}", file=out)
    return EXIT_OK if not failed else EXIT_FAIL


# -- other commands -----------------------------------------------------------

def cmd_emit(cfg: RunConfig, out) -> int:
    text = scfile.emit(build_algebra(cfg))
    if cfg.out:
        try:
            with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise ConfigError(f"cannot write {cfg.out}: {exc.strerror}") from None
    else:
        out.write(text)
    return EXIT_OK


def table_lines(n: int) -> List[str]:
    lines = []
    for p, row in enumerate(analysis.listed_generators(n)):
        cells = [str(g) + ("" if g.is_upper else "*") for g in row]
        lines.append(f"layer {p}: " + " ".join(cells))
    return lines


def cmd_table(cfg: RunConfig, out) -> int:
    for line in table_lines(cfg.n):
        print(line, file=out)
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig, out) -> int:
    L = build_algebra(cfg)
    kind = "Iu" if cfg.algebra == "Iu" else "glplus"
    autos, antis = mor.enumerate_symmetries(L, cfg.n, guard=cfg.max_enum, kind=kind)
    closed = mor.closure_check(autos, antis, kind)
    print("autos: " + ", ".join(map(str, autos)), file=out)
    print(f"autos: {len(autos)} found", file=out)
    print("antis: " + ", ".join(map(str, antis)), file=out)
    print(f"antis: {len(antis)} found", file=out)
    print(f"group order: {len(autos) + len(antis)}, closed: {'yes' if closed else 'no'}", file=out)
    return EXIT_OK


def _map_line(name: str, m: mor.LinearMap, labels) -> str:
    return f"{name}: " + ", ".join(f"{lab} -> {m.images[lab]}" for lab in labels)


def cmd_diamond(cfg: RunConfig, out) -> int:
    D, _ = cons.diamond()
    root = D.parent.parent
    out.write(scfile.emit(D))
    reps = []
    for name, m in (("Phi", mor.phi(2)), ("Psi", mor.psi(2))):
        t = mor.transport(m, D, root)
        print(_map_line(name, t, D.basis), file=out)
        check = mor.is_antiautomorphism if m.orientation == "anti" else mor.is_automorphism
        reps.append(check(D, t))
    return EXIT_OK if all(reps) else EXIT_FAIL


COMMAND_FUNCS = {
    "verify": cmd_verify,
    "emit": cmd_emit,
    "table": cmd_table,
    "enumerate": cmd_enumerate,
    "diamond": cmd_diamond,
}


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lieforge", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--algebra", default="Iu", choices=ALGEBRAS)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--eps", help="specialize eps to a rational p/q")
    parser.add_argument("--truncate", type=int, help="reduce mod eps^(k+1)")
    parser.add_argument("--format", default="sc-v1")
    parser.add_argument("--out", help="output path (default: stdout)")
    parser.add_argument("--max-enum", type=int, default=8, help="largest n allowed for enumerate")
    return parser


def config_from_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = _parser().parse_args(argv)
    try:
        eps = parse_rational(args.eps) if args.eps is not None else None
    except (ScalarError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad --eps {args.eps!r}: {exc}") from None
    return RunConfig(args.command, args.algebra, args.n, eps, args.truncate,
                     args.format, args.out, args.max_enum).validate()


def run(cfg: RunConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    return COMMAND_FUNCS[cfg.command](cfg, out)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = config_from_args(argv)
        return run(cfg)
    except ConfigError as exc:
        print(f"lieforge: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
