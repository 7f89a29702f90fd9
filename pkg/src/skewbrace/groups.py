"""Finite groups as dense multiplication tables.

Elements are the integers ``0..n-1``; ``table[i, j]`` is the index of
``i * j``.  Subgroups are sorted index sets living in the parent's index
space, so every computation on a subgroup can be compared element-wise with
computations on the ambient group.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
    NotNilpotent,
    NotNormal,
    TooLarge,
    ValidationError,
)

ISOMORPHISM_BOUND = 256


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    labels: tuple[str, ...]
    table: np.ndarray
    identity: int = 0

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, *xs: int) -> int:
        r = self.identity
        for x in xs:
            r = int(self.table[r, x])
        return r

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def index(self, label: str) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def inverses(self) -> np.ndarray:
        rows, cols = np.nonzero(self.table == self.identity)
        inv = np.empty(self.order, dtype=np.int64)
        inv[rows] = cols
        return inv

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        power = np.arange(n)
        k = 1
        remaining = np.ones(n, dtype=bool)
        while remaining.any():
            hit = remaining & (power == self.identity)
            orders[hit] = k
            remaining &= ~hit
            power = self.table[power, np.arange(n)]
            k += 1
        return orders

    def power(self, a: int, k: int) -> int:
        k %= int(self.element_orders[a])
        r = self.identity
        for _ in range(k):
            r = int(self.table[r, a])
        return r

    def whole(self) -> "Subgroup":
        return self._whole

    @cached_property
    def _whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, (self.identity,))

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def conjugation(self, g: int) -> np.ndarray:
        """Permutation x -> g x g^-1 of the whole group."""
        return self.table[self.table[g], self.inverses[g]]


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.order})"

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return bool(self.mask[x])

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.members, dtype=np.int64)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.members)] = True
        return m

    @cached_property
    def local_index(self) -> np.ndarray:
        """Parent index -> position in ``members`` (-1 outside)."""
        idx = np.full(self.parent.order, -1, dtype=np.int64)
        idx[self.array] = np.arange(self.order)
        return idx

    @cached_property
    def group(self) -> FiniteGroup:
        """This subgroup materialised as a group on local indices 0..m-1."""
        P = self.parent
        sub = P.table[np.ix_(self.array, self.array)]
        table = self.local_index[sub]
        labels = tuple(P.labels[i] for i in self.members)
        return FiniteGroup(labels, table, int(self.local_index[P.identity]))

    def lift(self, local: Union["Subgroup", Iterable[int]]) -> "Subgroup":
        """Map a subgroup of ``self.group`` back into the parent."""
        items = local.members if isinstance(local, Subgroup) else local
        return Subgroup(self.parent, tuple(sorted(self.members[i] for i in items)))

    def restrict(self, other: "Subgroup") -> "Subgroup":
        """``other`` (a subgroup of the parent inside self) as a subgroup of ``self.group``."""
        return Subgroup(self.group, tuple(sorted(int(self.local_index[x]) for x in other)))

    def is_subset(self, other: "Subgroup | np.ndarray") -> bool:
        mask = other.mask if isinstance(other, Subgroup) else other
        return bool(mask[self.array].all())


GroupLike = Union[FiniteGroup, Subgroup]


def as_subgroup(G: GroupLike) -> Subgroup:
    return G.whole() if isinstance(G, FiniteGroup) else G


def parent_of(G: GroupLike) -> FiniteGroup:
    return G if isinstance(G, FiniteGroup) else G.parent


def materialize(G: GroupLike) -> FiniteGroup:
    return G if isinstance(G, FiniteGroup) else G.group


@dataclass(frozen=True, eq=False)
class GroupMap:
    source: FiniteGroup
    target: FiniteGroup
    images: np.ndarray

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def is_homomorphism(self) -> bool:
        im = self.images
        return bool((im[self.source.table] == self.target.table[np.ix_(im, im)]).all())

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.images.tolist())) == self.source.order

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, tuple(np.flatnonzero(self.images == self.target.identity).tolist()))

    def image(self) -> Subgroup:
        return Subgroup(self.target, tuple(sorted(set(self.images.tolist()))))

    def compose(self, other: "GroupMap") -> "GroupMap":
        """``self`` after ``other``."""
        return GroupMap(other.source, self.target, self.images[other.images])

    def inverse(self) -> "GroupMap":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.source.order)
        return GroupMap(self.target, self.source, inv)


# --------------------------------------------------------------------------
# construction


def make_group(labels: Sequence, table, identity: int, *, check: bool = True) -> FiniteGroup:
    """Build a group from a Cayley table, checking every axiom eagerly."""
    T = np.asarray(table, dtype=np.int64)
    n = len(labels)
    if T.shape != (n, n):
        raise ValidationError(f"table has shape {T.shape}, expected {(n, n)}")
    if n == 0:
        raise ValidationError("a group needs at least one element")
    if len(set(map(str, labels))) != n:
        raise ValidationError("labels are not distinct")
    if not 0 <= identity < n:
        raise NoIdentity(identity, identity)
    if T.min() < 0 or T.max() >= n:
        raise ValidationError("table entries out of range")
    G = FiniteGroup(tuple(str(x) for x in labels), T, int(identity))
    if check:
        validate_group(G)
    return G


def validate_group(G: FiniteGroup) -> None:
    T, n, e = G.table, G.order, G.identity
    full = np.arange(n)
    srt = np.sort(T, axis=1)
    bad = np.flatnonzero((srt != full).any(axis=1))
    if bad.size:
        raise NotLatinSquare("row", int(bad[0]))
    srt = np.sort(T, axis=0)
    bad = np.flatnonzero((srt != full[:, None]).any(axis=0))
    if bad.size:
        raise NotLatinSquare("column", int(bad[0]))
    bad = np.flatnonzero((T[e] != full) | (T[:, e] != full))
    if bad.size:
        raise NoIdentity(e, int(bad[0]))
    inv = G.inverses
    bad = np.flatnonzero(T[inv, full] != e)
    if bad.size:
        raise NoInverse(int(bad[0]))
    for a in range(n):
        lhs = T[T[a]]  # [b, c] -> (ab)c
        rhs = T[a][T]  # [b, c] -> a(bc)
        diff = np.argwhere(lhs != rhs)
        if diff.size:
            b, c = diff[0]
            raise NotAssociative(a, int(b), int(c))


def group_from_function(elements: Sequence, op, labels: Sequence[str] | None = None) -> FiniteGroup:
    """Tabulate a group whose identity must be ``elements[0]``."""
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            table[i, j] = index[op(x, y)]
    if labels is None:
        labels = [str(x) for x in elements]
    return make_group(labels, table, 0)


def perm_compose(p: tuple, q: tuple) -> tuple:
    """Functional composition: apply ``q`` first, then ``p``."""
    return tuple(p[i] for i in q)


def cycle_string(perm: Sequence[int], base: int = 1) -> str:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + base)
            j = perm[j]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def permutation_closure(generators: Iterable[Sequence[int]], degree: int, *, cap: int | None = None) -> list[tuple]:
    """All products of the generators, identity first, in BFS order."""
    e = tuple(range(degree))
    gens = [tuple(g) for g in generators]
    elements, seen = [e], {e}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in gens:
            y = perm_compose(g, x)
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if cap is not None and len(elements) > cap:
                    raise TooLarge(f"permutation closure exceeds {cap} elements")
        i += 1
    return elements


def group_from_permutations(elements: Sequence[tuple], base: int = 1) -> FiniteGroup:
    index = {p: i for i, p in enumerate(elements)}
    n = len(elements)
    arr = np.asarray(elements, dtype=np.int64).reshape(n, -1)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        prods = arr[i][arr]  # p_i o p_j as rows
        for j in range(n):
            table[i, j] = index[tuple(prods[j].tolist())]
    labels = [cycle_string(p, base) for p in elements]
    return make_group(labels, table, 0)


def permutation_group(degree: int, generators: Iterable[Sequence[Sequence[int]]]) -> FiniteGroup:
    """Group generated by permutations given as lists of 1-based cycles."""
    gens = []
    for cycles in generators:
        p = list(range(degree))
        for cyc in cycles:
            for k, a in enumerate(cyc):
                b = cyc[(k + 1) % len(cyc)]
                if not (1 <= a <= degree and 1 <= b <= degree):
                    raise ValidationError(f"point {a} outside 1..{degree}")
                p[a - 1] = b - 1
        if sorted(p) != list(range(degree)):
            raise ValidationError(f"cycles {cycles} do not define a permutation")
        gens.append(tuple(p))
    return group_from_permutations(permutation_closure(gens, degree))


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    n1, n2 = G1.order, G2.order
    i1 = np.repeat(np.arange(n1), n2)
    i2 = np.tile(np.arange(n2), n1)
    table = G1.table[np.ix_(i1, i1)] * n2 + G2.table[np.ix_(i2, i2)]
    labels = [f"({G1.labels[a]},{G2.labels[b]})" for a, b in zip(i1, i2)]
    return make_group(labels, table, G1.identity * n2 + G2.identity, check=False)


# --------------------------------------------------------------------------
# subgroup primitives


def _closure_mask(T: np.ndarray, identity: int, gens: np.ndarray, start: np.ndarray | None = None) -> np.ndarray:
    n = T.shape[0]
    seen = np.zeros(n, dtype=bool) if start is None else start.copy()
    seen[identity] = True
    frontier = np.flatnonzero(seen)
    if gens.size == 0:
        return seen
    while frontier.size:
        new = np.unique(T[np.ix_(frontier, gens)])
        new = new[~seen[new]]
        seen[new] = True
        frontier = new
    return seen


def _from_mask(G: FiniteGroup, mask: np.ndarray) -> Subgroup:
    return Subgroup(G, tuple(np.flatnonzero(mask).tolist()))


def subgroup_generated(G: GroupLike, S: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``S``."""
    P = parent_of(G)
    gens = np.unique(np.asarray(list(S), dtype=np.int64))
    return _from_mask(P, _closure_mask(P.table, P.identity, gens))


def join(*subgroups: Subgroup) -> Subgroup:
    P = subgroups[0].parent
    gens = np.unique(np.concatenate([H.array for H in subgroups]))
    return _from_mask(P, _closure_mask(P.table, P.identity, gens))


def make_subgroup(G: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """Validated subgroup from an explicit member set."""
    mem = tuple(sorted(set(int(x) for x in members)))
    H = Subgroup(G, mem)
    if G.identity not in H:
        raise ValidationError("subgroup must contain the identity")
    prods = G.table[np.ix_(H.array, H.array)]
    if not H.mask[prods].all():
        raise ValidationError("member set is not closed under the group operation")
    if G.order % H.order:
        raise ValidationError("subgroup order does not divide the group order")
    return H


def intersection(*subgroups: Subgroup) -> Subgroup:
    mask = subgroups[0].mask.copy()
    for H in subgroups[1:]:
        mask &= H.mask
    return _from_mask(subgroups[0].parent, mask)


def set_product(G: GroupLike, *parts: Iterable[int]) -> np.ndarray:
    """Sorted element indices of the set product ``A1 A2 ... Ak``."""
    P = parent_of(G)
    cur = np.array([P.identity])
    for A in parts:
        arr = A.array if isinstance(A, Subgroup) else np.asarray(list(A), dtype=np.int64)
        cur = np.unique(P.table[np.ix_(cur, arr)])
    return cur


def product_subgroup(G: GroupLike, *parts: Subgroup) -> Subgroup:
    """The set product as a subgroup; raises if the product is not closed."""
    P = parent_of(G)
    return make_subgroup(P, set_product(P, *parts).tolist())


def centralizer(G: GroupLike, S: Iterable[int]) -> Subgroup:
    H = as_subgroup(G)
    T = H.parent.table
    s = np.asarray(list(S.members if isinstance(S, Subgroup) else S), dtype=np.int64)
    h = H.array
    if s.size == 0:
        return H
    ok = (T[np.ix_(h, s)] == T[np.ix_(s, h)].T).all(axis=1)
    return Subgroup(H.parent, tuple(h[ok].tolist()))


def center(G: GroupLike) -> Subgroup:
    H = as_subgroup(G)
    return centralizer(H, H.members)


def conjugate(H: Subgroup, g: int) -> Subgroup:
    """``H^g = g^-1 H g``."""
    P = H.parent
    gi = P.inverses[g]
    return Subgroup(P, tuple(sorted(P.table[P.table[gi, H.array], g].tolist())))


def normalizer(G: GroupLike, H: Subgroup) -> Subgroup:
    K = as_subgroup(G)
    P = K.parent
    g = K.array
    # (g^-1 h g) for every g in K, h in H
    conj = P.table[P.table[np.ix_(P.inverses[g], H.array)], g[:, None]]
    ok = H.mask[conj].all(axis=1)
    return Subgroup(P, tuple(g[ok].tolist()))


def is_normal(H: Subgroup, G: GroupLike) -> bool:
    K = as_subgroup(G)
    return normalizer(K, H).order == K.order


def normal_closure(G: GroupLike, S: Iterable[int]) -> Subgroup:
    K = as_subgroup(G)
    P = K.parent
    s = np.asarray(list(S), dtype=np.int64)
    if s.size == 0:
        return P.trivial()
    g = K.array
    conj = P.table[P.table[np.ix_(P.inverses[g], s)], g[:, None]]
    return subgroup_generated(P, np.unique(conj))


def core(G: GroupLike, H: Subgroup) -> Subgroup:
    """Largest normal subgroup of ``G`` contained in ``H``."""
    K = as_subgroup(G)
    P = K.parent
    mask = H.mask.copy()
    for g in K.members:
        mask &= conjugate(H, g).mask
    return _from_mask(P, mask)


def commutator(G: GroupLike, h: int, k: int) -> int:
    """``[h, k] = h^-1 k^-1 h k``."""
    P = parent_of(G)
    inv = P.inverses
    return P.product(int(inv[h]), int(inv[k]), h, k)


def commutator_subgroup(G: GroupLike, H: Subgroup, K: Subgroup) -> Subgroup:
    P = parent_of(G)
    T, inv = P.table, P.inverses
    h, k = H.array, K.array
    comm = T[T[np.ix_(inv[h], inv[k])], h[:, None]]
    comm = T[comm, k[None, :]]
    return subgroup_generated(P, np.unique(comm))


def derived_subgroup(G: GroupLike) -> Subgroup:
    H = as_subgroup(G)
    return commutator_subgroup(H.parent, H, H)


def derived_series(G: GroupLike) -> list[Subgroup]:
    series = [as_subgroup(G)]
    while True:
        nxt = derived_subgroup(series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(G: GroupLike) -> list[Subgroup]:
    H = as_subgroup(G)
    series = [H]
    while True:
        nxt = commutator_subgroup(H.parent, series[-1], H)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_nilpotent(G: GroupLike) -> bool:
    return lower_central_series(G)[-1].order == 1


def nilpotency_class(G: GroupLike) -> int:
    series = lower_central_series(G)
    if series[-1].order != 1:
        raise NotNilpotent(f"lower central series stabilises at order {series[-1].order}")
    return len(series) - 1


def is_abelian(G: GroupLike) -> bool:
    H = as_subgroup(G)
    T = H.parent.table[np.ix_(H.array, H.array)]
    return bool((T == T.T).all())


def is_cyclic(G: GroupLike) -> bool:
    H = as_subgroup(G)
    return bool((H.parent.element_orders[H.array] == H.order).any())


def element_order(G: GroupLike, x: int) -> int:
    return int(parent_of(G).element_orders[x])


# --------------------------------------------------------------------------
# quotients


def quotient_group(G: GroupLike, N: Subgroup) -> tuple[FiniteGroup, GroupMap]:
    """Coset group ``G/N`` with its canonical projection.

    For a proper subgroup ``G`` of a larger parent, the projection's source is
    ``G.group`` (local indices).
    """
    H = as_subgroup(G)
    if not N.is_subset(H) or not is_normal(N, H):
        raise NotNormal("N is not a normal subgroup of G")
    S = materialize(G)
    Nl = N if isinstance(G, FiniteGroup) else H.restrict(N)
    T = S.table
    cosets = T[:, Nl.array]  # row g: the coset gN
    reps = cosets.min(axis=1)
    uniq, coset_id = np.unique(reps, return_inverse=True)
    r = uniq
    table = coset_id[T[np.ix_(r, r)]]
    labels = [S.labels[i] for i in r]
    Q = FiniteGroup(tuple(labels), table, int(coset_id[S.identity]))
    return Q, GroupMap(S, Q, coset_id.astype(np.int64))


def preimage(proj: GroupMap, K: Subgroup) -> Subgroup:
    return _from_mask(proj.source, K.mask[proj.images])


# --------------------------------------------------------------------------
# isomorphisms


def _invariants(G: FiniteGroup) -> tuple:
    cent = _centralizer_sizes(G)
    profile = Counter(zip(G.element_orders.tolist(), cent.tolist()))
    return G.order, tuple(sorted(profile.items()))


def _centralizer_sizes(G: FiniteGroup) -> np.ndarray:
    return (G.table == G.table.T).sum(axis=1)


def generators(G: GroupLike) -> list[int]:
    """A small generating set, preferring elements of large order."""
    H = as_subgroup(G)
    P = H.parent
    order = sorted(H.members, key=lambda x: (-int(P.element_orders[x]), x))
    gens: list[int] = []
    mask = np.zeros(P.order, dtype=bool)
    mask[P.identity] = True
    for x in order:
        if mask.sum() == H.order:
            break
        if not mask[x]:
            gens.append(x)
            mask = _closure_mask(P.table, P.identity, np.asarray(gens, dtype=np.int64))
    return gens


def extend_to_homomorphism(G1: FiniteGroup, gens: Sequence[int], G2: FiniteGroup, images: Sequence[int], *, injective: bool = False) -> np.ndarray | None:
    """Extend ``gens[i] -> images[i]`` to a homomorphism on ``<gens>``.

    Returns an array over G1 (``-1`` outside ``<gens>``) or ``None`` when the
    assignment does not extend (or is not injective, if requested).
    """
    T1, T2 = G1.table, G2.table
    phi = np.full(G1.order, -1, dtype=np.int64)
    phi[G1.identity] = G2.identity
    used = {G2.identity} if injective else None
    queue = [G1.identity]
    gi = list(zip(gens, images))
    for x in queue:
        px = phi[x]
        for g, h in gi:
            y = T1[x, g]
            img = T2[px, h]
            cur = phi[y]
            if cur < 0:
                if injective:
                    if img in used:
                        return None
                    used.add(int(img))
                phi[y] = img
                queue.append(int(y))
            elif cur != img:
                return None
    return phi


def isomorphisms(G1: FiniteGroup, G2: FiniteGroup) -> Iterator[GroupMap]:
    """Every isomorphism ``G1 -> G2`` (generator-image backtracking)."""
    if _invariants(G1) != _invariants(G2):
        return
    gens = generators(G1)
    c1, c2 = _centralizer_sizes(G1), _centralizer_sizes(G2)
    o1, o2 = G1.element_orders, G2.element_orders
    cands = [
        np.flatnonzero((o2 == o1[g]) & (c2 == c1[g])).tolist() for g in gens
    ]

    def search(level: int, chosen: list[int]) -> Iterator[np.ndarray]:
        if level == len(gens):
            phi = extend_to_homomorphism(G1, gens, G2, chosen, injective=True)
            if phi is not None:
                yield phi
            return
        for h in cands[level]:
            trial = chosen + [h]
            if level + 1 < len(gens):
                if extend_to_homomorphism(G1, gens[: level + 1], G2, trial, injective=True) is None:
                    continue
            yield from search(level + 1, trial)

    if G1.order == 1:
        yield GroupMap(G1, G2, np.array([G2.identity]))
        return
    for phi in search(0, []):
        yield GroupMap(G1, G2, phi)


def is_isomorphic(G1: GroupLike, G2: GroupLike, *, max_order: int = ISOMORPHISM_BOUND) -> GroupMap | None:
    A, B = materialize(G1), materialize(G2)
    if A.order > max_order and B.order > max_order:
        raise TooLarge(f"isomorphism search capped at order {max_order}")
    if A.order != B.order:
        return None
    return next(isomorphisms(A, B), None)


def automorphisms(G: GroupLike) -> list[GroupMap]:
    A = materialize(G)
    return list(isomorphisms(A, A))


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_factors(n: int) -> list[int]:
    ps, p = [], 2
    while p * p <= n:
        if n % p == 0:
            ps.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        ps.append(n)
    return ps


def p_part(n: int, p: int) -> int:
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    return product(range(n), repeat=2)
