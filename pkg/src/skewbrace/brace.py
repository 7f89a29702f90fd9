"""Skew left braces stored as a pair of Cayley tables on one carrier."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import CompatibilityFailure, IdentityMismatch, ValidationError
from .groups import (
    FiniteGroup,
    Subgroup,
    center,
    is_abelian,
    lower_central_series,
)

MAX_WITNESSES = 10


@dataclass(frozen=True, eq=False)
class SkewBrace:
    add: FiniteGroup
    mul: FiniteGroup
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def order(self) -> int:
        return self.add.order

    @property
    def labels(self) -> tuple[str, ...]:
        return self.mul.labels

    @property
    def identity(self) -> int:
        return self.mul.identity

    def plus(self, a: int, b: int) -> int:
        return int(self.add.table[a, b])

    def times(self, a: int, b: int) -> int:
        return int(self.mul.table[a, b])

    def neg(self, a: int) -> int:
        return int(self.add.inverses[a])

    @cached_property
    def lambdas(self) -> np.ndarray:
        """Row a is the permutation b -> -a + ab."""
        A, M = self.add.table, self.mul.table
        neg = self.add.inverses
        return A[neg[:, None], M]

    def is_left_brace(self) -> bool:
        return self.add.is_abelian()

    def __repr__(self) -> str:
        return f"SkewBrace(order={self.order})"


def first_compatibility_failure(add: FiniteGroup, mul: FiniteGroup) -> tuple[int, int, int] | None:
    A, M = add.table, mul.table
    neg = add.inverses
    for a in range(add.order):
        lhs = M[a][A]  # a(b+c)
        ab = M[a]
        rhs = A[A[ab, neg[a]][:, None], ab[None, :]]  # ab - a + ac
        diff = np.argwhere(lhs != rhs)
        if diff.size:
            b, c = diff[0]
            return a, int(b), int(c)
    return None


def make_skew_brace(add: FiniteGroup, mul: FiniteGroup, meta: dict | None = None) -> SkewBrace:
    """Validate the brace law on every triple and wrap the two tables."""
    if add.order != mul.order:
        raise ValidationError(f"carrier sizes differ: {add.order} vs {mul.order}")
    if add.identity != mul.identity:
        raise IdentityMismatch(add.identity, mul.identity)
    bad = first_compatibility_failure(add, mul)
    if bad is not None:
        raise CompatibilityFailure(*bad, labels=mul.labels)
    return SkewBrace(add, mul, dict(meta or {}))


def trivial_brace(G: FiniteGroup) -> SkewBrace:
    return SkewBrace(G, G, {"provenance": "trivial"})


def lambda_of(B: SkewBrace, a: int) -> np.ndarray:
    return B.lambdas[a]


def kernel(B: SkewBrace) -> Subgroup:
    ident = np.arange(B.order)
    ker = np.flatnonzero((B.lambdas == ident).all(axis=1))
    return Subgroup(B.mul, tuple(ker.tolist()))


def socle(B: SkewBrace) -> Subgroup:
    ker = kernel(B)
    zadd = center(B.add)
    soc = Subgroup(B.mul, tuple(x for x in ker.members if x in zadd))
    assert is_subbrace(B, soc.members), "socle is not a subbrace"
    return soc


def is_subbrace(B: SkewBrace, S: Iterable[int]) -> bool:
    s = np.asarray(sorted(set(int(x) for x in S)), dtype=np.int64)
    if s.size == 0:
        return False
    mask = np.zeros(B.order, dtype=bool)
    mask[s] = True
    if not mask[B.identity]:
        return False
    for T, inv in ((B.add.table, B.add.inverses), (B.mul.table, B.mul.inverses)):
        if not mask[T[np.ix_(s, s)]].all() or not mask[inv[s]].all():
            return False
    return True


def is_brace_automorphism(B: SkewBrace, perm) -> bool:
    p = np.asarray(perm)
    return bool(
        (p[B.add.table] == B.add.table[np.ix_(p, p)]).all()
        and (p[B.mul.table] == B.mul.table[np.ix_(p, p)]).all()
    )


@dataclass(frozen=True, eq=False)
class BraceAction:
    """``action[g]`` is the permutation of the carrier induced by actor element g."""

    actor: FiniteGroup
    brace: SkewBrace
    action: np.ndarray


@dataclass
class EquivarianceReport:
    ok: bool
    checked: int
    violations: list[dict]
    preserving: list[int]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "violations": self.violations}


def check_equivariant(act: BraceAction, *, cap: int = MAX_WITNESSES) -> EquivarianceReport:
    """Check that every actor element preserves + and *, and that g -> action[g] is a homomorphism."""
    B, A = act.brace, act.actor
    perms = np.asarray(act.action)
    violations: list[dict] = []
    preserving: list[int] = []

    def note(v: dict):
        if len(violations) < cap:
            violations.append(v)

    nbad = 0
    for g in range(A.order):
        p = perms[g]
        good = True
        for name, T in (("add", B.add.table), ("mul", B.mul.table)):
            diff = np.argwhere(p[T] != T[np.ix_(p, p)])
            if diff.size:
                good = False
                x, y = diff[0]
                note({"kind": name, "actor": int(g), "pair": [int(x), int(y)]})
        if good:
            preserving.append(g)
        else:
            nbad += 1
    # (gh).x == g.(h.x)
    for g in range(A.order):
        lhs = perms[A.table[g]]  # rows: action of g*h
        rhs = perms[g][perms]  # rows: g applied after h
        diff = np.argwhere(lhs != rhs)
        if diff.size:
            nbad += 1
            h, x = diff[0]
            note({"kind": "homomorphism", "actor": int(g), "pair": [int(h), int(x)]})
    return EquivarianceReport(nbad == 0, A.order, violations, preserving)


@dataclass(frozen=True)
class BraceType:
    additive_abelian: bool
    additive_class: int | None
    multiplicative_abelian: bool
    trivial: bool

    @property
    def a_type(self) -> bool:
        """Left brace in the classical sense: abelian additive group."""
        return self.additive_abelian

    @property
    def n_type(self) -> bool:
        return self.additive_class is not None

    def to_dict(self) -> dict:
        return {
            "additive_abelian": self.additive_abelian,
            "additive_nilpotency_class": self.additive_class,
            "multiplicative_abelian": self.multiplicative_abelian,
            "trivial": self.trivial,
            "a_type": self.a_type,
            "n_type": self.n_type,
        }


def brace_type(B: SkewBrace) -> BraceType:
    series = lower_central_series(B.add)
    cls = len(series) - 1 if series[-1].order == 1 else None
    return BraceType(
        additive_abelian=is_abelian(B.add),
        additive_class=cls,
        multiplicative_abelian=is_abelian(B.mul),
        trivial=bool((B.add.table == B.mul.table).all()),
    )


def relabel(B: SkewBrace, perm) -> SkewBrace:
    """Transport both tables along the bijection ``i -> perm[i]``."""
    p = np.asarray(perm, dtype=np.int64)
    inv = np.empty_like(p)
    inv[p] = np.arange(p.size)

    def move(G: FiniteGroup) -> FiniteGroup:
        table = p[G.table[np.ix_(inv, inv)]]
        labels = tuple(G.labels[i] for i in inv)
        return FiniteGroup(labels, table, int(p[G.identity]))

    return SkewBrace(move(B.add), move(B.mul), dict(B.meta))
