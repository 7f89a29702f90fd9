"""Command line: analyze, build, verify, solution, catalog."""
from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .brace import brace_type, kernel, socle, trivial_brace
from .constructors import (
    baer_brace,
    build_iyb_q8free,
    build_iyb_sylow_q8,
    build_nyb_class2,
    build_nyb_sylow_tower,
)
from .errors import GroupError, HypothesisFailure, TooLarge, Unsupported
from .groups import FiniteGroup, is_isomorphic, is_nilpotent, quotient_group
from .io import brace_to_dict, load_brace, load_group, solution_to_dict, write_json
from .report import RunReport
from .soluble import (
    check_sylow_class,
    fitting,
    is_q8,
    is_soluble,
    n_decomposition,
    nilpotent_residual,
    q8_free,
    sylow_classes,
    sylow_subgroup,
)
from .ybe import check_involutive, check_nondegenerate, check_ybe, permutation_group, solution_from_brace

METHODS = ("auto", "q8free", "sylowq8", "nyb-tower", "nyb-class2", "trivial", "baer")
DEFAULT_MAX_ORDER = 256


def choose_method(G: FiniteGroup) -> str:
    """Route for ``--method auto``; raises Unsupported when no theorem applies."""
    if not is_soluble(G):
        raise Unsupported("group is not soluble")
    try:
        check_sylow_class(G)
    except HypothesisFailure as exc:
        raise Unsupported(f"SylowClassTooBig: {exc}", exc) from exc
    if is_q8(sylow_subgroup(G, 2)):
        return "sylowq8"
    if q8_free(nilpotent_residual(G)):
        return "q8free"
    raise Unsupported("nilpotent residual has a Q8 section and the Sylow 2-subgroup is not Q8")


def build(G: FiniteGroup, method: str, *, seed: int = 0):
    if method == "auto":
        method = choose_method(G)
    if method == "q8free":
        return method, build_iyb_q8free(G, seed=seed)
    if method == "sylowq8":
        return method, build_iyb_sylow_q8(G, seed=seed)
    if method == "nyb-tower":
        return method, build_nyb_sylow_tower(G, seed=seed)
    if method == "nyb-class2":
        return method, build_nyb_class2(G, seed=seed)
    if method == "trivial":
        return method, trivial_brace(G)
    if method == "baer":
        return method, baer_brace(G)
    raise Unsupported(f"unknown method {method!r}")


def _check_size(G: FiniteGroup, max_order: int) -> None:
    if G.order > max_order:
        raise TooLarge(f"group order {G.order} exceeds --max-order {max_order}")


def cmd_analyze(args) -> RunReport:
    rep = RunReport("analyze", args.group)
    with rep.stage("load"):
        G = load_group(args.group)
    _check_size(G, args.max_order)
    with rep.stage("structure"):
        sol = is_soluble(G)
        rep.summary.update(order=G.order, abelian=G.is_abelian(), nilpotent=is_nilpotent(G), soluble=sol)
        if sol:
            R = nilpotent_residual(G)
            rep.summary.update(
                sylow_classes=sylow_classes(G),
                residual_order=R.order,
                fitting_order=fitting(G).order,
                residual_q8_free=q8_free(R),
            )
    if sol:
        with rep.stage("decomposition"):
            dec = n_decomposition(G)
        rep.decomposition = dec.to_dict()
        rep.summary["decomposition"] = dec.orders
        rep.certificates.extend(dec.certificates)
    return rep


def cmd_build(args) -> RunReport:
    rep = RunReport("build", args.group)
    with rep.stage("load"):
        G = load_group(args.group)
    _check_size(G, args.max_order)
    with rep.stage("build"):
        method, B = build(G, args.method, seed=args.seed)
    rep.pipeline = method
    rep.decomposition = B.meta.get("decomposition")
    rep.certificates.extend(B.meta.get("certificates", []))
    rep.add("brace-law", True, detail=f"validated on {B.order ** 3} triples")
    kind = brace_type(B)
    rep.summary.update(order=B.order, factors=B.meta.get("factors"), **{"type": kind.to_dict()})
    if args.out:
        write_json(brace_to_dict(B), args.out)
        rep.outputs.append(args.out)
    return rep


def _verify_brace(rep: RunReport, B) -> None:
    rep.add("brace-law", True, detail=f"{B.order ** 3} triples")
    kind = brace_type(B)
    K, S = kernel(B), socle(B)
    rep.summary.update(order=B.order, kernel=K.order, socle=S.order, type=kind.to_dict())
    with rep.stage("solution"):
        sol = solution_from_brace(B)
        ybe = check_ybe(sol)
        rep.add("ybe", ybe.holds, ybe.witness, f"{ybe.checked} triples")
        rep.add("nondegenerate", check_nondegenerate(sol))
        inv = check_involutive(sol)
        if kind.a_type:
            rep.add("involutive", inv)
        else:
            rep.summary["involutive"] = inv
    with rep.stage("permutation-group"):
        P, _ = permutation_group(sol)
        Q, _ = quotient_group(B.mul, K)
        rep.summary["permutation_group_order"] = P.order
        rep.add("permutation-group=B/Ker", is_isomorphic(P, Q) is not None, detail=f"|G(X,r)| = {P.order}")


def cmd_verify(args) -> RunReport:
    rep = RunReport("verify", args.brace)
    with rep.stage("load"):
        B = load_brace(args.brace)
    _verify_brace(rep, B)
    return rep


def cmd_solution(args) -> RunReport:
    rep = RunReport("solution", args.brace)
    with rep.stage("load"):
        B = load_brace(args.brace)
    _verify_brace(rep, B)
    if args.out:
        write_json(solution_to_dict(solution_from_brace(B)), args.out)
        rep.outputs.append(args.out)
    return rep


def cmd_catalog(args) -> RunReport:
    rep = RunReport("catalog", "list")
    rep.summary["names"] = catalog.names()
    rep.summary["small_group_counts"] = catalog.SMALL_GROUP_COUNTS
    return rep


def parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    p = argparse.ArgumentParser(prog="skewbrace", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="soluble structure and N-decomposition")
    a.add_argument("group")
    a.set_defaults(func=cmd_analyze)
    b = sub.add_parser("build", parents=[common], help="construct a brace")
    b.add_argument("group")
    b.add_argument("--method", choices=METHODS, default="auto")
    b.add_argument("--out")
    b.set_defaults(func=cmd_build)
    v = sub.add_parser("verify", parents=[common], help="verify a brace file")
    v.add_argument("brace")
    v.set_defaults(func=cmd_verify)
    s = sub.add_parser("solution", parents=[common], help="derive and check the YBE solution")
    s.add_argument("brace")
    s.add_argument("--out")
    s.set_defaults(func=cmd_solution)
    c = sub.add_parser("catalog", parents=[common], help="list catalog keys")
    c.add_argument("action", choices=["list"])
    c.set_defaults(func=cmd_catalog)
    return p


def run(argv=None):
    args = parser().parse_args(argv)
    try:
        rep = args.func(args)
    except GroupError as exc:
        source = getattr(args, "group", None) or getattr(args, "brace", None) or ""
        rep = RunReport(args.command, source)
        rep.error = f"{type(exc).__name__}: {exc}"
        witness = getattr(exc, "witness", None)
        rep.add(type(exc).__name__, False, witness, str(exc))
    rep.summary.setdefault("seed", args.seed)
    return rep, (0 if rep.passed else 1), args


def main(argv=None) -> int:
    rep, code, args = run(argv)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=1, default=str))
    else:
        print(rep.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
