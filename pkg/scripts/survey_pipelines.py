"""Run every construction route over the catalog and tabulate the outcome.

    python scripts/survey_pipelines.py --max-order 40 [--json out.json]
"""
from __future__ import annotations

import argparse
import time

from skewbrace import catalog
from skewbrace.brace import brace_type, kernel, socle
from skewbrace.constructors import build_iyb_q8free, build_iyb_sylow_q8, build_nyb_class2, build_nyb_sylow_tower
from skewbrace.errors import GroupError
from skewbrace.io import write_json
from skewbrace.soluble import is_soluble
from skewbrace.ybe import check_involutive, check_ybe, solution_from_brace

ROUTES = {
    "q8free": build_iyb_q8free,
    "sylowq8": build_iyb_sylow_q8,
    "nyb-tower": build_nyb_sylow_tower,
    "nyb-class2": build_nyb_class2,
}


def survey(max_order: int) -> list[dict]:
    groups = catalog.all_small_groups(min(max_order, 24))
    groups += [(n, catalog.get(n)) for n in sorted(catalog.NAMED) if catalog.get(n).order <= max_order]
    rows = []
    for name, G in groups:
        if not is_soluble(G):
            continue
        for route, build in ROUTES.items():
            row = {"group": name, "order": G.order, "route": route}
            t = time.perf_counter()
            try:
                B = build(G)
            except GroupError as exc:
                row["result"] = type(exc).__name__
            else:
                sol = solution_from_brace(B)
                row.update(
                    result="ok" if all(c.passed for c in B.meta["certificates"]) else "certificate-failed",
                    kernel=kernel(B).order,
                    socle=socle(B).order,
                    left=brace_type(B).additive_abelian,
                    ybe=check_ybe(sol).holds,
                    involutive=check_involutive(sol),
                )
            row["seconds"] = round(time.perf_counter() - t, 4)
            rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=40)
    ap.add_argument("--json")
    args = ap.parse_args()
    rows = survey(args.max_order)
    print(f"{'group':<14}{'|G|':>5}  {'route':<11}{'result':<20}{'ker':>5}{'soc':>5}  ybe  inv")
    for r in rows:
        extra = ""
        if r["result"] == "ok":
            extra = f"{r['kernel']:>5}{r['socle']:>5}  {'y' if r['ybe'] else 'n':<5}{'y' if r['involutive'] else 'n'}"
        print(f"{r['group']:<14}{r['order']:>5}  {r['route']:<11}{r['result']:<20}{extra}")
    if args.json:
        write_json(rows, args.json)


if __name__ == "__main__":
    main()
