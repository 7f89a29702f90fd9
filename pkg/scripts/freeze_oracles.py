"""Recompute the brute-force reference values stored in tests/data/oracle_values.json.

Run from the repository root:  python scripts/freeze_oracles.py
"""
from __future__ import annotations

import json
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles as O  # noqa: E402

from skewbrace import catalog  # noqa: E402
from skewbrace.constructors import q8_brace  # noqa: E402

GROUPS = ["s3", "s4", "d8", "q8", "a4", "dic12", "sl23", "s3xc3", "d8xc3", "q8xc3",
          "c7c3", "d16", "q16", "v4", "cyclic:6", "heis27", "m27"]
SYSTEM_NORMALISER_MAX = 24


def labels(G, S):
    return sorted(G.labels[x] for x in S)


def group_values(name: str) -> dict:
    G = catalog.get(name)
    t = O.table(G)
    out = {
        "order": len(t),
        "subgroups": len(O.all_subgroups(t)),
        "normal_subgroups": len(O.normal_subgroups(t)),
        "center": len(O.center(t)),
        "derived": len(O.commutator_subgroup(t, range(len(t)), range(len(t)))),
        "soluble": O.is_soluble(t),
        "nilpotency_class": O.nilpotency_class(t, range(len(t))),
        "sylow_classes": {str(p): c for p, c in O.sylow_classes(t).items()},
    }
    if out["soluble"]:
        R = O.nilpotent_residual(t)
        out.update(
            residual=len(R),
            residual_members=labels(G, R),
            fitting=len(O.fitting(t)),
            fitting_members=labels(G, O.fitting(t)),
            fitting2=len(O.fitting2(t)),
            q8_section=O.has_q8_section(t),
            residual_q8_section=O.has_q8_section(t, R),
        )
        if len(t) <= SYSTEM_NORMALISER_MAX:
            out["system_normaliser_orders"] = sorted(O.system_normaliser_orders(t))
    return out


def q8_values() -> dict:
    B = q8_brace()
    add, mul = O.table(B.add), O.table(B.mul)
    auts = O.automorphisms(mul)
    keep = [p for p in auts if all(p[add[x][y]] == add[p[x]][p[y]] for x in range(8) for y in range(8))]
    return {
        "automorphisms": len(auts),
        "preserving": len(keep),
        "kernel": labels(B.mul, O.brace_kernel(add, mul)),
        "socle": labels(B.mul, O.brace_socle(add, mul)),
        "brace_law": O.brace_law_holds(add, mul),
    }


def main() -> None:
    t0 = time.perf_counter()
    data = {"groups": {}, "automorphism_counts": {}}
    for name in GROUPS:
        data["groups"][name] = group_values(name)
        print(f"{name:10s} {time.perf_counter() - t0:6.1f}s", flush=True)
    for name in ["q8", "d8", "heis27", "m27"]:
        data["automorphism_counts"][name] = len(O.automorphisms(O.table(catalog.get(name))))
    data["q8_brace"] = q8_values()
    path = ROOT / "tests" / "data" / "oracle_values.json"
    path.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {path} in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
