import json
import sys
from itertools import permutations
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from skewbrace import catalog  # noqa: E402
from skewbrace.brace import make_skew_brace, socle  # noqa: E402
from skewbrace.errors import CompatibilityFailure  # noqa: E402
from skewbrace.groups import FiniteGroup, make_group  # noqa: E402

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def oracle_values():
    return json.loads((DATA / "oracle_values.json").read_text())


def relabel_table(G: FiniteGroup, perm) -> np.ndarray:
    """Table of G transported along i -> perm[i]."""
    p = np.asarray(perm)
    inv = np.argsort(p)
    return p[G.table[np.ix_(inv, inv)]]


def order4_braces():
    """Every brace with multiplicative group C4 and identity 0, by exhaustive relabelling."""
    C4, V4 = catalog.get("cyclic:4"), catalog.get("v4")
    found = []
    seen = set()
    for A in (C4, V4):
        for rest in permutations(range(1, 4)):
            add = relabel_table(A, (0,) + rest)
            key = add.tobytes()
            if key in seen:
                continue
            seen.add(key)
            try:
                found.append(make_skew_brace(make_group(C4.labels, add, 0), C4))
            except CompatibilityFailure:
                pass
    return found


def small_socle_brace():
    """A brace on C4 whose socle is smaller than the (abelian) group."""
    return next(B for B in order4_braces() if socle(B).order < 4)


def misaligned_pair():
    """Two order-4 groups sharing identity 0 that fail the brace law.

    Every identity-aligned pairing of C4 with C2 x C2 is a brace (Aut(C2 x C2)
    permutes the candidate labellings transitively), so the search runs over
    all aligned pairs of order 4 and returns the first failure, which pairs
    two differently labelled copies of C4.
    """
    C4, V4 = catalog.get("cyclic:4"), catalog.get("v4")
    for A in (C4, V4):
        for M in (V4, C4):
            mul = make_group(C4.labels, M.table, 0)
            for rest in permutations(range(1, 4)):
                add = make_group(C4.labels, relabel_table(A, (0,) + rest), 0)
                try:
                    make_skew_brace(add, mul)
                except CompatibilityFailure:
                    return add, mul
    raise AssertionError("no failing alignment")


def v4_brace_with_cyclic_addition():
    """A brace with multiplicative group V4 and additive group C4."""
    C4, V4 = catalog.get("cyclic:4"), catalog.get("v4")
    add = make_group(V4.labels, relabel_table(C4, (0, 1, 2, 3)), 0)
    return make_skew_brace(add, V4)
