"""Named groups and a complete list of the groups of order at most 24.

Catalog keys:

* ``q8 d8 d16 q16 s3 s4 a4 a5 sl23 heis27 m27 dic12 ...`` (see ``NAMED``)
* ``cyclic:n``, ``dihedral:n`` (order n), ``dicyclic:n`` (order n),
  ``symmetric:n``, ``alternating:n``, ``heisenberg:p``
* ``semidirect:m:n:r`` for C_m x| C_n with the generator acting as x -> x^r
* ``small:n:i`` -- the i-th group of order n in this catalog's own ordering
  (not the GAP SmallGroups numbering)
* ``A*B`` -- direct product of any two keys, e.g. ``q8*cyclic:3``
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .errors import UnknownName
from .groups import (
    FiniteGroup,
    _invariants,
    automorphisms,
    derived_subgroup,
    center,
    direct_product,
    group_from_function,
    group_from_permutations,
    is_isomorphic,
    make_group,
    permutation_closure,
    permutation_group,
    prime_factors,
)

# number of isomorphism classes of groups of order n, n = 1..24
SMALL_GROUP_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5,
    13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5, 21: 2, 22: 2,
    23: 1, 24: 15,
}


def _power_label(sym: str, k: int) -> str:
    return "1" if k == 0 else (sym if k == 1 else f"{sym}^{k}")


def cyclic(n: int) -> FiniteGroup:
    labels = [_power_label("g", k) for k in range(n)]
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return make_group(labels, table, 0)


def semidirect_cyclic(m: int, n: int, r: int) -> FiniteGroup:
    """C_m x| C_n = <x, t | x^m, t^n, t x t^-1 = x^r>."""
    if pow(r, n, m) != 1 % m:
        raise ValueError(f"x -> x^{r} does not have order dividing {n} mod {m}")
    elems = [(i, j) for j in range(n) for i in range(m)]

    def op(u, v):
        return ((u[0] + pow(r, u[1], m) * v[0]) % m, (u[1] + v[1]) % n)

    labels = [_join(_power_label("x", i), _power_label("t", j)) for i, j in elems]
    return group_from_function(elems, op, labels)


def _join(*parts: str) -> str:
    kept = [p for p in parts if p != "1"]
    return "".join(kept) or "1"


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order n."""
    if n % 2 or n < 2:
        raise ValueError("dihedral order must be even")
    m = n // 2
    elems = [(i, j) for j in range(2) for i in range(m)]

    def op(u, v):
        return ((u[0] + (-1) ** u[1] * v[0]) % m, (u[1] + v[1]) % 2)

    labels = [_join(_power_label("r", i), _power_label("s", j)) for i, j in elems]
    return group_from_function(elems, op, labels)


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order n = 4m; generalised quaternion when n is a power of 2."""
    if n % 4:
        raise ValueError("dicyclic order must be divisible by 4")
    m = n // 4
    elems = [(i, j) for j in range(2) for i in range(2 * m)]

    def op(u, v):
        i1, j1 = u
        i2, j2 = v
        i = i1 + (i2 if j1 == 0 else -i2)
        if j1 == 1 and j2 == 1:
            i += m
        return (i % (2 * m), (j1 + j2) % 2)

    labels = [_join(_power_label("a", i), _power_label("x", j)) for i, j in elems]
    return group_from_function(elems, op, labels)


def q8_coordinates() -> list[tuple[int, int, int]]:
    """Exponent triples (x, y, z) of a^x b^y c^z, in index order."""
    return [(x, y, z) for z in range(2) for y in range(2) for x in range(2)]


def q8_label(x: int, y: int, z: int) -> str:
    return _join("a" * x, "b" * y, "c" * z)


def quaternion() -> FiniteGroup:
    """Q8 on the normal form a^x b^y c^z with c = a^2 = b^2."""
    coords = q8_coordinates()

    def op(u, v):
        x1, y1, z1 = u
        x2, y2, z2 = v
        return ((x1 + x2) % 2, (y1 + y2) % 2, (z1 + z2 + x2 * y1 + y1 * y2 + x1 * x2) % 2)

    return group_from_function(coords, op, [q8_label(*u) for u in coords])


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return cyclic(1)
    gens = [[(1, 2)]] if n == 2 else [[(1, 2)], [tuple(range(1, n + 1))]]
    return permutation_group(n, gens)


def alternating(n: int) -> FiniteGroup:
    if n <= 2:
        return cyclic(1)
    gens = [[(1, 2, k)] for k in range(3, n + 1)]
    return permutation_group(n, gens)


def heisenberg(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over F_p (order p^3)."""
    elems = [(a, b, c) for c in range(p) for b in range(p) for a in range(p)]

    def op(u, v):
        return ((u[0] + v[0]) % p, (u[1] + v[1]) % p, (u[2] + v[2] + u[0] * v[1]) % p)

    labels = [_join(_power_label("x", a), _power_label("y", b), _power_label("z", c)) for a, b, c in elems]
    return group_from_function(elems, op, labels)


def sl23() -> FiniteGroup:
    """SL(2, 3) as 2x2 matrices over F_3."""
    mats = [
        (a, b, c, d)
        for a, b, c, d in product(range(3), repeat=4)
        if (a * d - b * c) % 3 == 1
    ]
    ident = (1, 0, 0, 1)
    mats.remove(ident)
    mats.insert(0, ident)

    def op(u, v):
        a, b, c, d = u
        e, f, g, h = v
        return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)

    labels = ["[{}{};{}{}]".format(*m) for m in mats]
    return group_from_function(mats, op, labels)


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    G = cyclic(p)
    for _ in range(k - 1):
        G = direct_product(G, cyclic(p))
    return G


NAMED = {
    "trivial": lambda: cyclic(1),
    "q8": quaternion,
    "q16": lambda: dicyclic(16),
    "d8": lambda: dihedral(8),
    "d16": lambda: dihedral(16),
    "s3": lambda: symmetric(3),
    "s4": lambda: symmetric(4),
    "a4": lambda: alternating(4),
    "a5": lambda: alternating(5),
    "v4": lambda: elementary_abelian(2, 2),
    "sl23": sl23,
    "heis27": lambda: heisenberg(3),
    "heis125": lambda: heisenberg(5),
    "m27": lambda: semidirect_cyclic(9, 3, 4),
    "dic12": lambda: semidirect_cyclic(3, 4, 2),
    "c7c3": lambda: semidirect_cyclic(7, 3, 2),
    "q8xc3": lambda: direct_product(quaternion(), cyclic(3)),
    "q8xc5": lambda: direct_product(quaternion(), cyclic(5)),
    "s3xc3": lambda: direct_product(symmetric(3), cyclic(3)),
    "d8xc3": lambda: direct_product(dihedral(8), cyclic(3)),
    "c3xheis27": lambda: direct_product(cyclic(3), heisenberg(3)),
    "c3xm27": lambda: direct_product(cyclic(3), semidirect_cyclic(9, 3, 4)),
}

PARAMETRIC = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "dicyclic": dicyclic,
    "symmetric": symmetric,
    "alternating": alternating,
    "heisenberg": heisenberg,
}


@lru_cache(maxsize=None)
def get(name: str) -> FiniteGroup:
    """Build (and cache) a catalog group by key."""
    key = name.strip().lower()
    if "*" in key:
        left, right = key.split("*", 1)
        return direct_product(get(left), get(right))
    if key in NAMED:
        return NAMED[key]()
    head, _, rest = key.partition(":")
    try:
        if head in PARAMETRIC:
            return PARAMETRIC[head](int(rest))
        if head == "semidirect":
            m, n, r = (int(v) for v in rest.split(":"))
            return semidirect_cyclic(m, n, r)
        if head == "small":
            n, i = (int(v) for v in rest.split(":"))
            return small_groups(n)[i - 1]
    except (ValueError, IndexError) as exc:
        raise UnknownName(f"bad catalog key {name!r}: {exc}") from exc
    raise UnknownName(f"unknown catalog key {name!r}")


def names() -> list[str]:
    out = sorted(NAMED)
    out += [f"{k}:<n>" for k in PARAMETRIC] + ["semidirect:m:n:r", "small:n:i", "A*B"]
    return out


# --------------------------------------------------------------------------
# small groups by cyclic extension


def cyclic_extension(N: FiniteGroup, p: int, phi: np.ndarray, a: int) -> FiniteGroup:
    """Group generated by N and t with t^p = a and t x t^-1 = phi(x).

    Requires phi in Aut(N), phi(a) = a and phi^p = conjugation by a.
    Element (x, i) = x t^i has index i*|N| + x.
    """
    n = N.order
    T = N.table
    phis = [np.arange(n)]
    for _ in range(p - 1):
        phis.append(phi[phis[-1]])
    table = np.empty((n * p, n * p), dtype=np.int64)
    for i in range(p):
        for j in range(p):
            base = T[np.arange(n)[:, None], phis[i][None, :]]  # x * phi^i(y)
            if i + j >= p:
                base = T[base, a]
            table[i * n:(i + 1) * n, j * n:(j + 1) * n] = ((i + j) % p) * n + base
    labels = [f"({N.labels[x]},{i})" for i in range(p) for x in range(n)]
    return make_group(labels, table, N.identity)


def _extensions(N: FiniteGroup, p: int):
    auts = [m.images for m in automorphisms(N)]
    inner = {}
    for g in range(N.order):
        inner.setdefault(tuple(N.conjugation(g).tolist()), []).append(g)
    for phi in auts:
        phip = np.arange(N.order)
        for _ in range(p):
            phip = phi[phip]
        for a in inner.get(tuple(phip.tolist()), []):
            if phi[a] == a:
                yield cyclic_extension(N, p, phi, a)


def _fingerprint(G: FiniteGroup) -> tuple:
    return _invariants(G), derived_subgroup(G).order, center(G).order


@lru_cache(maxsize=None)
def small_groups(n: int) -> tuple[FiniteGroup, ...]:
    """One representative of every isomorphism class of order n (n <= 24).

    Every soluble group has a normal subgroup of prime index, so each group of
    order n is a cyclic extension of a group of order n/p for some prime p.
    """
    if n not in SMALL_GROUP_COUNTS:
        raise UnknownName(f"small groups are only catalogued for orders 1..24, not {n}")
    if n == 1:
        return (cyclic(1),)
    found: list[FiniteGroup] = [cyclic(n)]
    buckets: dict[tuple, list[FiniteGroup]] = {_fingerprint(found[0]): [found[0]]}
    target = SMALL_GROUP_COUNTS[n]
    for p in prime_factors(n):
        for N in small_groups(n // p):
            for G in _extensions(N, p):
                key = _fingerprint(G)
                bucket = buckets.setdefault(key, [])
                if any(is_isomorphic(G, H) for H in bucket):
                    continue
                bucket.append(G)
                found.append(G)
                if len(found) == target:
                    return tuple(found)
    return tuple(found)


def all_small_groups(max_order: int = 24) -> list[tuple[str, FiniteGroup]]:
    return [
        (f"small:{n}:{i + 1}", G)
        for n in range(1, max_order + 1)
        for i, G in enumerate(small_groups(n))
    ]
