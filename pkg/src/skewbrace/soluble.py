"""Normal and arithmetic structure of finite soluble groups.

Everything here works on subgroups in the parent's index space, so the
ambient group of an N-decomposition and its factors can be compared
element-wise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .catalog import quaternion
from .errors import NotFound, NotSoluble, SylowClassTooBig, TooLarge
from .groups import (
    FiniteGroup,
    GroupLike,
    Subgroup,
    _closure_mask,
    _from_mask,
    as_subgroup,
    centralizer,
    center,
    commutator_subgroup,
    conjugate,
    core,
    derived_series,
    derived_subgroup,
    extend_to_homomorphism,
    intersection,
    is_isomorphic,
    is_abelian,
    is_nilpotent,
    is_normal,
    is_p_power,
    join,
    lower_central_series,
    make_subgroup,
    nilpotency_class,
    normal_closure,
    normalizer,
    p_part,
    preimage,
    prime_factors,
    quotient_group,
    set_product,
    subgroup_generated,
)

Q8_FREE_BOUND = 200


def is_soluble(G: GroupLike) -> bool:
    return derived_series(G)[-1].order == 1


def p_elements(G: GroupLike, p: int) -> np.ndarray:
    H = as_subgroup(G)
    orders = H.parent.element_orders[H.array]
    ok = np.array([is_p_power(int(o), p) for o in orders], dtype=bool)
    return H.array[ok]


def p_prime_elements(G: GroupLike, p: int) -> np.ndarray:
    H = as_subgroup(G)
    orders = H.parent.element_orders[H.array]
    return H.array[orders % p != 0]


def sylow_subgroup(G: GroupLike, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown inside successive normalizers."""
    H = as_subgroup(G)
    P0 = H.parent
    target = p_part(H.order, p)
    if target == 1:
        return P0.trivial()
    elems = p_elements(H, p)
    orders = P0.element_orders[elems]
    start = int(elems[np.flatnonzero(orders == orders.max())[0]])
    P = subgroup_generated(P0, [start])
    while P.order < target:
        N = normalizer(H, P)
        cand = elems[N.mask[elems] & ~P.mask[elems]]
        if cand.size == 0:
            raise NotFound(f"no p-element normalising a non-Sylow {p}-subgroup")
        P = subgroup_generated(P0, list(P.members) + [int(cand[0])])
    return P


def sylow_subgroups(G: GroupLike) -> dict[int, Subgroup]:
    H = as_subgroup(G)
    return {p: sylow_subgroup(H, p) for p in prime_factors(H.order)}


def sylow_classes(G: GroupLike) -> dict[int, int]:
    return {p: nilpotency_class(P) for p, P in sylow_subgroups(G).items()}


def check_sylow_class(G: GroupLike, bound: int = 2) -> None:
    for p, c in sylow_classes(G).items():
        if c > bound:
            raise SylowClassTooBig(p, c)


def hall_complement(F: GroupLike, p: int, G: GroupLike | None = None) -> Subgroup:
    """A Sylow p-complement of the soluble group ``F``.

    Depth-first search over subgroups generated by p'-elements, scanned in
    index order, keeping only subgroups whose order divides ``|F|_{p'}``.
    ``G`` is the ambient group (accepted for interface symmetry; the search
    only looks inside ``F``).
    """
    H = as_subgroup(F)
    P0 = H.parent
    m = H.order // p_part(H.order, p)
    if m == H.order:
        return H
    if not is_soluble(H):
        raise NotSoluble("Hall complements are only searched for in soluble groups")
    elems = p_prime_elements(H, p)
    T, e = P0.table, P0.identity
    seen: set[bytes] = set()

    def dfs(mask: np.ndarray, gens: list[int]):
        size = int(mask.sum())
        if size == m:
            return mask
        for x in elems:
            if mask[x]:
                continue
            nxt = _closure_mask(T, e, np.asarray(gens + [x]))
            nsize = int(nxt.sum())
            if m % nsize:
                continue
            key = nxt.tobytes()
            if key in seen:
                continue
            seen.add(key)
            found = dfs(nxt, gens + [int(x)])
            if found is not None:
                return found
        return None

    start = np.zeros(P0.order, dtype=bool)
    start[e] = True
    found = dfs(start, [])
    if found is None:
        raise NotFound(f"no {p}-complement found in a soluble group of order {H.order}")
    return _from_mask(P0, found)


@dataclass(frozen=True, eq=False)
class ComplementBasis:
    group: Subgroup
    complements: dict[int, Subgroup]

    def __iter__(self):
        return iter(self.complements.values())


def complement_basis(F: GroupLike, G: GroupLike | None = None) -> ComplementBasis:
    H = as_subgroup(F)
    return ComplementBasis(H, {p: hall_complement(H, p, G) for p in prime_factors(H.order)})


def system_normalizer(G: GroupLike, basis: ComplementBasis) -> Subgroup:
    """Elements of ``G`` normalising every member of the basis."""
    D = as_subgroup(G)
    for K in basis:
        D = normalizer(D, K)
    return D


def nilpotent_residual(G: GroupLike) -> Subgroup:
    H = as_subgroup(G)
    return lower_central_series(H)[-1]


def fitting(G: GroupLike) -> Subgroup:
    H = as_subgroup(G)
    parts = [core(H, sylow_subgroup(H, p)) for p in prime_factors(H.order)]
    if not parts:
        return H.parent.trivial()
    return join(*parts)


def fitting2(G: GroupLike) -> Subgroup:
    H = as_subgroup(G)
    Q, proj = quotient_group(H, fitting(H))
    return H.lift(preimage(proj, fitting(Q)))


def is_q8(G: GroupLike) -> bool:
    H = as_subgroup(G)
    return H.order == 8 and is_isomorphic(H.group, quaternion()) is not None


def q8_free(G: GroupLike, *, max_order: int = Q8_FREE_BOUND) -> bool:
    """True iff no section H/K of G is isomorphic to Q8.

    A Q8 section of G is already a section of a Sylow 2-subgroup, and since
    Q8 is 2-generated it is a quotient of some 2-generated subgroup; both
    reductions keep the search exact.
    """
    H = as_subgroup(G)
    if H.order > max_order:
        raise TooLarge(f"Q8-section search capped at order {max_order}")
    P = sylow_subgroup(H, 2)
    if P.order < 8 or is_abelian(P):
        return True
    Q = quaternion()
    order4 = np.flatnonzero(Q.element_orders == 4)
    q_pairs = [
        (int(u), int(v)) for u in order4 for v in order4
        if v not in (u, Q.inverses[u])
    ]
    T, e = H.parent.table, H.parent.identity
    seen: set[bytes] = set()
    elems = P.array
    for x, y in combinations(elems, 2):
        mask = _closure_mask(T, e, np.asarray([x, y]))
        size = int(mask.sum())
        if size % 8:
            continue
        key = mask.tobytes()
        if key in seen:
            continue
        seen.add(key)
        for u, v in q_pairs:
            if extend_to_homomorphism(H.parent, [int(x), int(y)], Q, [u, v]) is not None:
                return False
    return True


# --------------------------------------------------------------------------
# N-decompositions


@dataclass
class Certificate:
    name: str
    passed: bool
    witness: object = None
    detail: str = ""

    def to_dict(self) -> dict:
        w = self.witness
        if isinstance(w, np.generic):
            w = w.item()
        return {"name": self.name, "passed": bool(self.passed), "witness": w, "detail": self.detail}


@dataclass(eq=False)
class NDecomposition:
    """Ordered factors A_1..A_k with tails H_i = A_{i+1}...A_k."""

    ambient: FiniteGroup
    factors: tuple[Subgroup, ...]
    certificates: list[Certificate] = field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def orders(self) -> list[int]:
        return [A.order for A in self.factors]

    def head(self, i: int) -> np.ndarray:
        """Set product A_1...A_i (1-based i)."""
        return set_product(self.ambient, *self.factors[:i])

    def tail(self, i: int) -> np.ndarray:
        """Set product H_i = A_{i+1}...A_k; H_k is trivial."""
        return set_product(self.ambient, *self.factors[i:])

    @property
    def tails(self) -> list[Subgroup]:
        return [make_subgroup(self.ambient, self.tail(i).tolist()) for i in range(1, self.k + 1)]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.certificates)

    def to_dict(self) -> dict:
        G = self.ambient
        return {
            "orders": self.orders,
            "factors": [[G.labels[x] for x in A] for A in self.factors],
            "certificates": [c.to_dict() for c in self.certificates],
        }


def _subset_witness(sub: np.ndarray, mask: np.ndarray):
    bad = sub[~mask[sub]]
    return None if bad.size == 0 else int(bad[0])


def decomposition_certificates(dec: NDecomposition) -> list[Certificate]:
    """Certificates for the three defining properties of an N-decomposition."""
    G, A = dec.ambient, dec.factors
    certs = []
    whole = dec.head(dec.k)
    certs.append(Certificate("product", whole.size == G.order, None if whole.size == G.order else int(whole.size)))
    for i, Ai in enumerate(A, 1):
        certs.append(Certificate(f"nilpotent[{i}]", is_nilpotent(Ai)))
    for i in range(dec.k):
        for j in range(i + 1, dec.k):
            N = normalizer(A[j], A[i])
            bad = None if N.order == A[j].order else int(np.setdiff1d(A[j].array, N.array)[0])
            certs.append(Certificate(f"normalised[{i + 1},{j + 1}]", bad is None, bad))
    for i in range(1, dec.k):
        meet = np.intersect1d(dec.head(i), dec.tail(i))
        derived = set_product(G, *[derived_subgroup(B) for B in A[:i]])
        mask = np.zeros(G.order, dtype=bool)
        mask[derived] = True
        w = _subset_witness(meet, mask)
        certs.append(Certificate(f"intersection[{i}]", w is None, w))
    return certs


def n_decomposition(G: GroupLike) -> NDecomposition:
    """N-decomposition by iterating Fit_2 residuals and relative system normalisers."""
    H = as_subgroup(G)
    P = H.parent
    if not is_soluble(H):
        raise NotSoluble("only soluble groups have an N-decomposition")
    if H.order != P.order:
        raise ValueError("n_decomposition works on a whole group; materialise subgroups first")
    factors: list[Subgroup] = []
    normalisers: list[Subgroup] = []
    extra: list[Certificate] = []
    cur = H
    if is_nilpotent(cur):
        factors = [P.trivial(), cur]
    else:
        while not is_nilpotent(cur):
            F2 = fitting2(cur)
            A = nilpotent_residual(F2)
            basis = complement_basis(F2, cur)
            nxt = system_normalizer(cur, basis)
            i = len(factors) + 1
            meet = intersection(A, nxt)
            w = _subset_witness(meet.array, derived_subgroup(A).mask)
            extra.append(Certificate(f"complement-meet[{i}]", w is None, w, "A_i & H_i <= A_i'"))
            factors.append(A)
            normalisers.append(nxt)
            cur = nxt
        factors.append(cur)
    dec = NDecomposition(P, tuple(factors))
    for i, D in enumerate(normalisers, 1):
        t = dec.tail(i)
        same = t.size == D.order and bool(D.mask[t].all())
        extra.append(Certificate(f"tail-is-system-normaliser[{i}]", same))
    dec.certificates = decomposition_certificates(dec) + extra
    return dec


def verify_centralizer_condition(dec: NDecomposition) -> list[Certificate]:
    """Check A_1..A_i & A_{i+1}..A_k <= C_G(A_i A_{i+1}) for i < k."""
    G = dec.ambient
    check_sylow_class(G)
    certs = []
    A = list(dec.factors) + [G.trivial()]
    for i in range(1, dec.k):
        meet = np.intersect1d(dec.head(i), dec.tail(i))
        C = centralizer(G, np.union1d(A[i - 1].array, A[i].array))
        w = _subset_witness(meet, C.mask)
        certs.append(Certificate(f"centralizer[{i}]", w is None, w))
    return certs


def minimal_normal_subgroups(G: GroupLike) -> list[Subgroup]:
    H = as_subgroup(G)
    closures = {}
    for x in H.members:
        if x == H.parent.identity:
            continue
        N = normal_closure(H, [x])
        closures[N.members] = N
    cands = list(closures.values())
    return [
        N for N in cands
        if not any(M.order < N.order and M.is_subset(N) for M in cands)
    ]


def hall_subgroup(G: GroupLike, primes: set[int]) -> Subgroup:
    """Hall pi-subgroup of a nilpotent group (product of its Sylows)."""
    H = as_subgroup(G)
    parts = [sylow_subgroup(H, p) for p in prime_factors(H.order) if p in primes]
    return join(*parts) if parts else H.parent.trivial()


def conjugate_sylow_normalised_by(N: GroupLike, p: int, H: Subgroup) -> Subgroup:
    """A Sylow p-subgroup of N normalised by H; exists when H normalises N and |H| is prime to p."""
    S = sylow_subgroup(N, p)
    for g in as_subgroup(N).members:
        C = conjugate(S, g)
        if normalizer(H, C).order == H.order:
            return C
    raise NotFound(f"no H-invariant Sylow {p}-subgroup")
