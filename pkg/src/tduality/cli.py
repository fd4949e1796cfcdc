"""Command-line front end with machine-readable JSON output.

Each invocation prints one JSON document {command, inputs, result,
warnings} on standard output; diagnostics go to standard error.  Exit
codes: 0 success, 2 invariant/validation failure, 3 parse error,
4 size-guard refusal of a brute-force cross-check.

Residue inputs are accepted in any integer range and normalized modulo
the relevant order at parse time; the normalized values are echoed back
under "inputs".
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence, TextIO

from .abelian import FgAbGroup
from .errors import SizeGuardError, ValidationError
from .gamma_point import (
    GammaPointPair,
    h3_generator,
    h3_total_space,
    tdualize_gamma_point,
    thom_exists,
)
from .group_cohomology import (
    Character,
    CyclicGroup,
    character_to_chern,
    cohomology_bgamma,
    cohomology_bgamma_oracle,
)
from .rep_ring_k import borel_k_of_dual, borel_k_via_mv, k_untwisted_free_quotient
from .seifert import (
    SeifertBase,
    SeifertConstruction,
    SeifertPair,
    chern_from_construction,
    cohomology_base,
    degree_sum,
    h3_total,
    tdualize_seifert,
)

PROG = "tduality"

NONCOPRIME_K_WARNING = (
    "algebraic (uncompleted) value; only the coprime case has a"
    " verified completed counterpart"
)
DEGENERATE_KERNEL_WARNING = (
    "degenerate system: the degree sum vanishes, only b = 0 is solvable; e = 0"
)


class CliParseError(Exception):
    pass


@dataclass
class ComputationResult:
    command: str
    inputs: dict
    result: dict
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ComputationResult":
        return cls(
            command=data["command"],
            inputs=data["inputs"],
            result=data["result"],
            warnings=list(data["warnings"]),
        )


def serialize(result: ComputationResult) -> str:
    return json.dumps(result.to_dict(), sort_keys=True, indent=2) + "\n"


def parse_result(text: str) -> ComputationResult:
    return ComputationResult.from_dict(json.loads(text))


def group_payload(group: FgAbGroup) -> dict:
    return {"free_rank": group.free_rank, "torsion": list(group.torsion)}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit code 3, not argparse's 2
        raise CliParseError(message)


def _comma_ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc


def _require_order(n: int) -> int:
    if n < 1:
        raise ValidationError(f"group order must be >= 1, got {n}")
    return n


def _base_from_args(ns: argparse.Namespace) -> SeifertBase:
    return SeifertBase(genus=ns.genus, cone_orders=tuple(ns.cones))


def _normalize_residues(values: Sequence[int], orders: Sequence[int], name: str) -> list[int]:
    if len(values) != len(orders):
        raise ValidationError(f"expected {len(orders)} values for --{name}, got {len(values)}")
    return [v % n for v, n in zip(values, orders)]


def _cmd_tdual_gamma_point(ns: argparse.Namespace) -> ComputationResult:
    n = _require_order(ns.n)
    q, s = ns.q % n, ns.s % n
    dual = tdualize_gamma_point(GammaPointPair(n, q, s))
    return ComputationResult(
        command="tdual gamma-point",
        inputs={"n": n, "q": q, "s": s},
        result={"n": dual.n, "q": dual.q, "s": dual.s},
    )


def _cmd_tdual_seifert(ns: argparse.Namespace) -> ComputationResult:
    base = _base_from_args(ns)
    chi = _normalize_residues(ns.chi, base.cone_orders, "chi")
    a = _normalize_residues(ns.a, base.cone_orders, "a")
    pair = SeifertPair(base=base, e=ns.e, chi=tuple(chi), f=ns.f, a=tuple(a))
    dual = tdualize_seifert(pair)
    return ComputationResult(
        command="tdual seifert",
        inputs={
            "genus": base.genus,
            "cones": list(base.cone_orders),
            "e": ns.e,
            "chi": chi,
            "f": ns.f,
            "a": a,
        },
        result={
            "genus": base.genus,
            "cones": list(base.cone_orders),
            "e": dual.e,
            "chi": list(dual.chi),
            "f": dual.f,
            "a": list(dual.a),
        },
    )


def _cmd_cohomology_bgamma(ns: argparse.Namespace) -> ComputationResult:
    group = CyclicGroup(_require_order(ns.n))
    if ns.degree < 0:
        raise ValidationError(f"degree must be >= 0, got {ns.degree}")
    value = cohomology_bgamma(group, ns.degree)
    if ns.oracle:
        recomputed = cohomology_bgamma_oracle(group, ns.degree)
        if recomputed != value:
            raise RuntimeError(
                f"bar-complex cross-check disagrees with the closed form: "
                f"{recomputed.describe()} vs {value.describe()}"
            )
    return ComputationResult(
        command="cohomology bgamma",
        inputs={"n": group.n, "degree": ns.degree, "oracle": bool(ns.oracle)},
        result={"group": group_payload(value), "oracle_checked": bool(ns.oracle)},
    )


def _cmd_cohomology_seifert_base(ns: argparse.Namespace) -> ComputationResult:
    base = _base_from_args(ns)
    if ns.degree < 0:
        raise ValidationError(f"degree must be >= 0, got {ns.degree}")
    value = cohomology_base(base, ns.degree)
    return ComputationResult(
        command="cohomology seifert-base",
        inputs={"genus": base.genus, "cones": list(base.cone_orders), "degree": ns.degree},
        result={"group": group_payload(value)},
    )


def _cmd_h3_gamma_point(ns: argparse.Namespace) -> ComputationResult:
    n = _require_order(ns.n)
    q = ns.q % n
    group = h3_total_space(n, q)
    return ComputationResult(
        command="h3 gamma-point",
        inputs={"n": n, "q": q},
        result={
            "group": group_payload(group),
            "generator": h3_generator(n, q),
            "chern_class_of_character": character_to_chern(Character(n, q)),
        },
    )


def _cmd_h3_seifert(ns: argparse.Namespace) -> ComputationResult:
    base = _base_from_args(ns)
    chi = _normalize_residues(ns.chi, base.cone_orders, "chi")
    pair = SeifertPair(base=base, e=ns.e, chi=tuple(chi), f=0, a=(0,) * base.r)
    group = h3_total(pair)
    return ComputationResult(
        command="h3 seifert",
        inputs={"genus": base.genus, "cones": list(base.cone_orders), "e": ns.e, "chi": chi},
        result={"group": group_payload(group)},
    )


def _cmd_ktheory_gamma_dual(ns: argparse.Namespace) -> ComputationResult:
    n = _require_order(ns.n)
    q = ns.q % n
    if ns.via_mv:
        k0, k1 = borel_k_via_mv(n, q)
        route = "mayer-vietoris"
    else:
        k0, k1 = borel_k_of_dual(n, q)
        route = "dual-operator"
    warnings = [] if gcd(n, q) == 1 else [NONCOPRIME_K_WARNING]
    return ComputationResult(
        command="ktheory gamma-dual",
        inputs={"n": n, "q": q, "via_mv": bool(ns.via_mv)},
        result={
            "k0": group_payload(k0),
            "k1": group_payload(k1),
            "model": "algebraic (uncompleted)",
            "route": route,
            "equals_untwisted_free_quotient": (k0, k1) == k_untwisted_free_quotient(),
        },
        warnings=warnings,
    )


def _cmd_chern_seifert(ns: argparse.Namespace) -> ComputationResult:
    base = _base_from_args(ns)
    con = SeifertConstruction(base=base, c=ns.c, phi_degrees=tuple(ns.phi))
    e, chi = chern_from_construction(con)
    warnings = [] if degree_sum(con) != 0 else [DEGENERATE_KERNEL_WARNING]
    return ComputationResult(
        command="chern seifert",
        inputs={
            "genus": base.genus,
            "cones": list(base.cone_orders),
            "c": ns.c,
            "phi": list(ns.phi),
        },
        result={"e": e, "chi": list(chi)},
        warnings=warnings,
    )


def _cmd_thom(ns: argparse.Namespace) -> ComputationResult:
    n = _require_order(ns.n)
    q0, q1 = ns.q0 % n, ns.q1 % n
    return ComputationResult(
        command="thom",
        inputs={"n": n, "q0": q0, "q1": q1},
        result={"exists": thom_exists(n, q0, q1)},
    )


def _add_base_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--genus", type=int, default=0, help="genus of the base surface")
    parser.add_argument(
        "--cones", type=_comma_ints, default=[], help="comma-separated cone orders"
    )


def build_parser() -> _Parser:
    parser = _Parser(prog=PROG, description="Exact topological T-duality calculator.")
    top = parser.add_subparsers(dest="group", required=True)

    tdual = top.add_parser("tdual", help="compute the dual of a pair")
    tdual_sub = tdual.add_subparsers(dest="target", required=True)

    gp = tdual_sub.add_parser("gamma-point", help="pair over an isotropy point")
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--q", type=int, required=True)
    gp.add_argument("--s", type=int, required=True)
    gp.set_defaults(handler=_cmd_tdual_gamma_point)

    sf = tdual_sub.add_parser("seifert", help="pair over a Seifert-fibered base")
    _add_base_flags(sf)
    sf.add_argument("--e", type=int, required=True)
    sf.add_argument("--chi", type=_comma_ints, default=[])
    sf.add_argument("--f", type=int, required=True)
    sf.add_argument("--a", type=_comma_ints, default=[])
    sf.set_defaults(handler=_cmd_tdual_seifert)

    cohomology = top.add_parser("cohomology", help="cohomology groups")
    coh_sub = cohomology.add_subparsers(dest="target", required=True)

    bg = coh_sub.add_parser("bgamma", help="classifying space of a cyclic group")
    bg.add_argument("--n", type=int, required=True)
    bg.add_argument("--degree", type=int, required=True)
    bg.add_argument("--oracle", action="store_true", help="cross-check via the bar complex")
    bg.set_defaults(handler=_cmd_cohomology_bgamma)

    sb = coh_sub.add_parser("seifert-base", help="orbifold base surface")
    _add_base_flags(sb)
    sb.add_argument("--degree", type=int, required=True)
    sb.set_defaults(handler=_cmd_cohomology_seifert_base)

    h3 = top.add_parser("h3", help="degree-3 cohomology of a total space")
    h3_sub = h3.add_subparsers(dest="target", required=True)

    h3g = h3_sub.add_parser("gamma-point")
    h3g.add_argument("--n", type=int, required=True)
    h3g.add_argument("--q", type=int, required=True)
    h3g.set_defaults(handler=_cmd_h3_gamma_point)

    h3s = h3_sub.add_parser("seifert")
    _add_base_flags(h3s)
    h3s.add_argument("--e", type=int, default=0)
    h3s.add_argument("--chi", type=_comma_ints, default=[])
    h3s.set_defaults(handler=_cmd_h3_seifert)

    ktheory = top.add_parser("ktheory", help="twisted K-groups")
    kt_sub = ktheory.add_subparsers(dest="target", required=True)

    kg = kt_sub.add_parser("gamma-dual", help="K of the dual pair over an isotropy point")
    kg.add_argument("--n", type=int, required=True)
    kg.add_argument("--q", type=int, required=True)
    kg.add_argument("--via-mv", dest="via_mv", action="store_true")
    kg.set_defaults(handler=_cmd_ktheory_gamma_dual)

    chern = top.add_parser("chern", help="Chern class from construction data")
    chern_sub = chern.add_subparsers(dest="target", required=True)

    cs = chern_sub.add_parser("seifert")
    _add_base_flags(cs)
    cs.add_argument("--c", type=int, required=True)
    cs.add_argument("--phi", type=_comma_ints, default=[])
    cs.set_defaults(handler=_cmd_chern_seifert)

    thom = top.add_parser("thom", help="existence of a Thom class")
    thom.add_argument("--n", type=int, required=True)
    thom.add_argument("--q0", type=int, required=True)
    thom.add_argument("--q1", type=int, required=True)
    thom.set_defaults(handler=_cmd_thom)

    return parser


_PARSER: Optional[_Parser] = None


def run(argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Dispatch one invocation; returns the exit code."""
    global _PARSER
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    if _PARSER is None:
        _PARSER = build_parser()
    try:
        ns = _PARSER.parse_args(list(argv))
    except CliParseError as exc:
        print(f"parse error: {exc}", file=err)
        return 3
    try:
        result = ns.handler(ns)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=err)
        return 2
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=err)
        return 4
    out.write(serialize(result))
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
