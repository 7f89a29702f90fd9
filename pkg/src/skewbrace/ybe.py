"""Set-theoretic solutions of the Yang-Baxter equation attached to skew braces."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .brace import SkewBrace
from .groups import FiniteGroup, group_from_permutations, permutation_closure

PERMUTATION_GROUP_CAP = 10080
MAX_DEGREE = 64


@dataclass(frozen=True, eq=False)
class Solution:
    """r(x, y) = (f[x, y], g[y, x]); row f[x] is f_x and row g[y] is g_y."""

    f: np.ndarray
    g: np.ndarray
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return int(self.f.shape[0])

    def r(self, x: int, y: int) -> tuple[int, int]:
        return int(self.f[x, y]), int(self.g[y, x])

    def to_dict(self) -> dict:
        return {"n": self.n, "f": self.f.tolist(), "g": self.g.tolist()}


@dataclass
class YBEReport:
    holds: bool
    checked: int
    witness: tuple | None = None
    lhs: tuple | None = None
    rhs: tuple | None = None

    def to_dict(self) -> dict:
        return {"holds": self.holds, "checked": self.checked, "witness": self.witness,
                "lhs": self.lhs, "rhs": self.rhs}


def twist(n: int) -> Solution:
    ident = np.tile(np.arange(n), (n, 1))
    return Solution(ident, ident.copy(), {"provenance": "twist"})


def solution_from_brace(B: SkewBrace) -> Solution:
    """f_x = lambda_x and g_y(x) = u^-1 x y with u = lambda_x(y), products in (B, *)."""
    M, inv = B.mul.table, B.mul.inverses
    lam = B.lambdas
    gxy = M[inv[lam], M]  # [x, y] -> lambda_x(y)^-1 * (x y)
    return Solution(lam.copy(), np.ascontiguousarray(gxy.T), {"provenance": B.meta.get("provenance", "")})


def _r(sol: Solution, x, y):
    return sol.f[x, y], sol.g[y, x]


def check_ybe(sol: Solution) -> YBEReport:
    """Compare r12 r23 r12 with r23 r12 r23 on every triple."""
    n = sol.n
    x, y, z = (a.ravel() for a in np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij"))

    def r12(t):
        a, b = _r(sol, t[0], t[1])
        return a, b, t[2]

    def r23(t):
        b, c = _r(sol, t[1], t[2])
        return t[0], b, c

    lhs = r12(r23(r12((x, y, z))))
    rhs = r23(r12(r23((x, y, z))))
    bad = np.flatnonzero((lhs[0] != rhs[0]) | (lhs[1] != rhs[1]) | (lhs[2] != rhs[2]))
    if bad.size == 0:
        return YBEReport(True, n ** 3)
    i = bad[0]
    trip = lambda t: tuple(int(c[i]) for c in t)  # noqa: E731
    return YBEReport(False, n ** 3, trip((x, y, z)), trip(lhs), trip(rhs))


def check_involutive(sol: Solution) -> bool:
    n = sol.n
    x, y = (a.ravel() for a in np.meshgrid(np.arange(n), np.arange(n), indexing="ij"))
    u, v = _r(sol, x, y)
    xx, yy = _r(sol, u, v)
    return bool((xx == x).all() and (yy == y).all())


def check_nondegenerate(sol: Solution) -> bool:
    ref = np.arange(sol.n)
    return bool((np.sort(sol.f, axis=1) == ref).all() and (np.sort(sol.g, axis=1) == ref).all())


def permutation_group(sol: Solution, *, cap: int = PERMUTATION_GROUP_CAP) -> tuple[FiniteGroup, np.ndarray]:
    """The group generated by the f_x, with row i of the second value the permutation of element i."""
    if sol.n > MAX_DEGREE:
        raise ValueError(f"permutation closure is limited to degree {MAX_DEGREE}")
    gens = sorted({tuple(int(v) for v in row) for row in sol.f})
    elements = permutation_closure(gens, sol.n, cap=cap)
    return group_from_permutations(elements), np.asarray(elements, dtype=np.int64).reshape(len(elements), sol.n)
