"""Batch command line: compute, expand, apply operator strings, verify.

Exit codes are 0 on success, 1 when an identity or oracle check fails and 2
on usage or parse errors.  ``SUPERSCHUR_CACHE_DIR`` optionally points at an
on-disk block cache; it is the only environment variable read anywhere.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import operators, pieri as pieri_rules, verify
from .bases import SchurTable, SchurType, expand_in_schur, operator_string, render_expansion
from .superalgebra import SuperPolynomial, render
from .superpartitions import (SuperPartition, SuperPartitionError, enumerate_superpartitions,
                              parse, z_weight)

CACHE_ENV = "SUPERSCHUR_CACHE_DIR"


class BidegreeOverflow(ValueError):
    """A result falls outside the bounds requested on the command line."""


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    max_total_degree: int = 6
    max_fermionic_degree: int = 3
    schur_type: SchurType = SchurType.I
    output_format: str = "text"
    # bounds given explicitly on the command line; computing commands only
    # enforce those, verification grids fall back to the defaults above
    explicit_bounds: bool = False
    check: bool = False
    arguments: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.max_total_degree < 0 or self.max_fermionic_degree < 0:
            raise UsageError("bounds must be non-negative")


def make_table(config: RunConfig) -> SchurTable:
    directory = os.environ.get(CACHE_ENV)
    if directory:
        from .cache import DiskBackedTable
        return DiskBackedTable(directory)
    from .bases import default_table
    return default_table


# -- rendering ---------------------------------------------------------------

def _coeff(c) -> str:
    return str(Fraction(c))


def expansion_json(kind: SchurType, coeffs: dict) -> dict:
    return {"type": kind.value,
            "expansion": [{"superpartition": str(sp), **sp.to_json(), "coeff": _coeff(c)}
                          for sp, c in coeffs.items()]}


def emit(config: RunConfig, text: str, payload) -> None:
    if config.output_format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _check_bounds(config: RunConfig, f: SuperPolynomial) -> None:
    if not config.explicit_bounds:
        return
    for n, m in f.bidegrees():
        if n > config.max_total_degree or m > config.max_fermionic_degree:
            raise BidegreeOverflow(f"result has bidegree ({n},{m}), beyond "
                                   f"({config.max_total_degree},{config.max_fermionic_degree})")


def _parse_on(text: str) -> tuple[SchurType, SuperPartition]:
    kind, sep, rest = text.partition(":")
    if not sep:
        raise UsageError(f"--on expects TYPE:LAMBDA, got {text!r}")
    return SchurType.parse(kind), parse(rest)


# -- commands ----------------------------------------------------------------

def cmd_schur(config: RunConfig, table: SchurTable) -> int:
    sp = parse(config.arguments["superpartition"])
    kind = config.schur_type
    f = table.get(kind, sp)
    _check_bounds(config, f)
    status = 0
    lines = [render(f)]
    payload = {"type": kind.value, "superpartition": str(sp), "terms": f.to_json()}
    if config.check:
        ok = operators.apply_string(operator_string(kind, sp)) == f and \
            expand_in_schur(f, kind, table) == {sp: 1}
        lines.append(f"check: {'PASS' if ok else 'FAIL'}")
        payload["check"] = ok
        status = 0 if ok else 1
    emit(config, "\n".join(lines), payload)
    return status


def cmd_apply(config: RunConfig, table: SchurTable) -> int:
    chain = config.arguments["operators"]
    on = config.arguments.get("on")
    if on:
        source_kind, sp = _parse_on(on)
        f = table.get(source_kind, sp)
    else:
        source_kind, f = None, SuperPolynomial.constant(1)
    target = config.schur_type if config.arguments.get("type_given") or source_kind is None else source_kind
    result = operators.apply_string(chain, f)
    _check_bounds(config, result)
    coeffs = expand_in_schur(result, target, table, check=config.check)
    payload = expansion_json(target, coeffs)
    if config.check:
        payload["check"] = True
    emit(config, render_expansion(coeffs), payload)
    return 0


def cmd_pieri(config: RunConfig, table: SchurTable) -> int:
    rule = config.arguments["rule"]
    if rule not in pieri_rules.RULES:
        raise UsageError(f"unknown rule {rule!r}; expected one of {', '.join(pieri_rules.RULES)}")
    r = config.arguments["r"]
    sp = parse(config.arguments["superpartition"])
    if r < (1 if rule == "thetaI" else 0):
        raise UsageError(f"r={r} is out of range for {rule}")
    result = pieri_rules.apply_rule(rule, r, sp)
    lines = [render_expansion(result)]
    payload = {"rule": rule, "r": r, "superpartition": str(sp),
               "expansion": [{"superpartition": str(k), **k.to_json(), "coeff": v}
                             for k, v in result.items()]}
    if config.arguments.get("diagrams"):
        drawings = []
        for target in result:
            picture = pieri_rules.decorate(sp, target).render()
            drawings.append(picture)
            lines.append(f"\n({target})\n{picture}")
        payload["diagrams"] = drawings
    status = 0
    if config.check:
        ok = pieri_rules.check_rule(rule, r, sp)
        lines.append(f"oracle: {'PASS' if ok else 'FAIL'}")
        payload["check"] = ok
        status = 0 if ok else 1
    emit(config, "\n".join(lines), payload)
    return status


def cmd_verify(config: RunConfig, table: SchurTable) -> int:
    suite = config.arguments["suite"]
    names = verify.SUITES if suite == "all" else (suite,)
    total = config.max_total_degree if config.explicit_bounds else None
    fermionic = config.arguments.get("fermionic_max")
    reports = [verify.run_suite(name, total, fermionic) for name in names]
    lines = []
    for rep in reports:
        lines.append(f"{rep.suite}: {'PASS' if rep.passed else 'FAIL'} ({rep.seconds:.2f}s)")
        for c in rep.checks:
            tail = f"  first counterexample: {c.counterexample}" if c.counterexample else ""
            lines.append(f"  {'PASS' if c.passed else 'FAIL'} {c.name}{tail}")
    ok = all(rep.passed for rep in reports)
    emit(config, "\n".join(lines), {"passed": ok, "suites": [rep.to_json() for rep in reports]})
    return 0 if ok else 1


def cmd_conjugate(config: RunConfig, table: SchurTable) -> int:
    sp = parse(config.arguments["superpartition"])
    conj = sp.conjugate()
    emit(config, f"({conj})", {"superpartition": str(sp), "conjugate": str(conj), **conj.to_json()})
    return 0


def cmd_weight(config: RunConfig, table: SchurTable) -> int:
    sp = parse(config.arguments["superpartition"])
    z = z_weight(sp)
    emit(config, str(z), {"superpartition": str(sp), "weight": str(z)})
    return 0


def cmd_enumerate(config: RunConfig, table: SchurTable) -> int:
    n = config.arguments["total"]
    m = config.arguments.get("fermionic")
    degrees = [m] if m is not None else range(config.max_fermionic_degree + 1)
    sps = [sp for k in degrees for sp in enumerate_superpartitions(n, k)]
    emit(config, "\n".join(f"({sp})" for sp in sps),
         {"total": n, "superpartitions": [str(sp) for sp in sps]})
    return 0


COMMANDS = {"schur": cmd_schur, "apply": cmd_apply, "pieri": cmd_pieri, "verify": cmd_verify,
            "conjugate": cmd_conjugate, "weight": cmd_weight, "enumerate": cmd_enumerate}


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max", type=int, default=None, help="maximum total degree")
    common.add_argument("--fermionic-max", type=int, default=None, help="maximum fermionic degree")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--check", action="store_true", help="rerun the algebraic oracle")

    parser = argparse.ArgumentParser(prog="superschur",
                                     description="Super-Schur functions and their Bernstein modes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", parents=[common], help="power-sum expansion of a super-Schur function")
    p.add_argument("type", help="I, Istar, II or IIstar")
    p.add_argument("superpartition")

    p = sub.add_parser("apply", parents=[common], help="apply an operator string and re-expand")
    p.add_argument("operators", help='e.g. "B4^1 B3^0 B1^1", applied right to left')
    p.add_argument("--on", help='starting function as TYPE:"LAMBDA" (default: 1)')
    p.add_argument("--type", default=None, help="family used for the output expansion")

    p = sub.add_parser("pieri", parents=[common], help="combinatorial Pieri rule")
    p.add_argument("rule", help="eI, thetaI, hIstar or eIstar")
    p.add_argument("r", type=int)
    p.add_argument("superpartition")
    p.add_argument("--diagrams", action="store_true", help="draw the decorated diagrams")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITES + ("all",))

    p = sub.add_parser("conjugate", parents=[common], help="conjugate superpartition")
    p.add_argument("superpartition")

    p = sub.add_parser("weight", parents=[common], help="scalar-product weight z_Lambda")
    p.add_argument("superpartition")

    p = sub.add_parser("enumerate", parents=[common], help="list superpartitions of a bidegree")
    p.add_argument("total", type=int)
    p.add_argument("fermionic", type=int, nargs="?")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    kind_text = getattr(args, "type", None)
    config = RunConfig(
        max_total_degree=6 if args.max is None else args.max,
        max_fermionic_degree=3 if args.fermionic_max is None else args.fermionic_max,
        schur_type=SchurType.parse(kind_text) if kind_text else SchurType.I,
        output_format=args.format,
        explicit_bounds=args.max is not None or args.fermionic_max is not None,
        check=args.check,
        arguments={k: v for k, v in vars(args).items()
                   if k not in ("max", "format", "check", "command")},
    )
    config.arguments["type_given"] = kind_text is not None
    return config


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        return COMMANDS[args.command](config, make_table(config))
    except (SuperPartitionError, operators.UnknownOperator, BidegreeOverflow, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
