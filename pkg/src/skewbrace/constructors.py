"""Brace constructions on soluble groups.

The building blocks are

* ``q8_brace`` -- an explicit left brace on Q8 with elementary abelian
  additive group, preserved by the order-3 automorphisms of Q8;
* ``baer_brace`` -- a + b = ab[b,a]^(1/2) on a class-2 group with odd derived
  subgroup;
* ``product_brace`` -- n1h1 + n2h2 = (n1 + n2)(h1 + h2) on G = NH;
* ``chain_brace`` -- the right-to-left assembly of products over a chain of
  factors A_1 ... A_k.

The ``build_*`` pipelines wire these to the decompositions in
:mod:`skewbrace.soluble`.  Every hypothesis is checked on the instance and
every output is validated on all triples.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import product as iproduct
from operator import mul as _mul

import numpy as np

from .brace import (
    SkewBrace,
    brace_type,
    is_subbrace,
    kernel,
    make_skew_brace,
    socle,
    trivial_brace,
)
from .catalog import q8_coordinates, quaternion
from .errors import (
    ConditionFailure,
    EvenCommutator,
    HypothesisFailure,
    NoSylowTower,
    NotClassTwo,
    NotNilpotent,
    NotWellDefined,
    Sylow2NotQ8,
)
from .groups import (
    FiniteGroup,
    GroupLike,
    GroupMap,
    Subgroup,
    _closure_mask,
    automorphisms,
    center,
    centralizer,
    derived_subgroup,
    extend_to_homomorphism,
    generators,
    intersection,
    is_abelian,
    is_isomorphic,
    is_nilpotent,
    is_normal,
    join,
    lower_central_series,
    make_group,
    make_subgroup,
    materialize,
    nilpotency_class,
    normalizer,
    prime_factors,
    product_subgroup,
    quotient_group,
    set_product,
    subgroup_generated,
)
from .soluble import (
    Certificate,
    NDecomposition,
    check_sylow_class,
    conjugate_sylow_normalised_by,
    decomposition_certificates,
    hall_subgroup,
    is_q8,
    is_soluble,
    n_decomposition,
    nilpotent_residual,
    q8_free,
    sylow_subgroup,
    sylow_subgroups,
    verify_centralizer_condition,
)

FULL_EQUIVARIANCE_BOUND = 64
EXHAUSTIVE_STAR_ORDER = 30
STAR_TUPLE_CAP = 20000
STAR_SAMPLES = 2000


@dataclass(eq=False)
class FactorStructure:
    """A brace on a subgroup; brace index i is the parent element ``factor.members[i]``."""

    factor: Subgroup
    brace: SkewBrace
    provenance: str = ""

    def __post_init__(self):
        if self.brace.order != self.factor.order:
            raise ValueError("brace carrier does not match the factor")
        sub = self.factor.group.table
        if not (self.brace.mul.table == sub).all():
            raise ValueError("brace multiplication is not the factor's multiplication")

    def lift(self, local) -> np.ndarray:
        arr = local.array if isinstance(local, Subgroup) else np.asarray(local, dtype=np.int64)
        return self.factor.array[arr]

    @property
    def socle(self) -> np.ndarray:
        return self.lift(socle(self.brace))

    @property
    def kernel(self) -> np.ndarray:
        return self.lift(kernel(self.brace))

    @property
    def additive_center(self) -> np.ndarray:
        return self.lift(center(self.brace.add))

    def center_in_socle(self) -> int | None:
        """Witness of Z(A) not inside Soc(A), or None."""
        soc = np.zeros(self.factor.parent.order, dtype=bool)
        soc[self.socle] = True
        Z = center(self.factor)
        bad = Z.array[~soc[Z.array]]
        return None if bad.size == 0 else int(bad[0])

    def equivariance_witness(self, H: Subgroup, *, full: bool | None = None):
        """First (h, x, y) where conjugation by h fails to preserve the brace."""
        G = self.factor.parent
        if full is None:
            full = H.order <= FULL_EQUIVARIANCE_BOUND
        acting = H.members if full else generators(H)
        return _conjugation_witness(G, self, acting)


def _conjugation_witness(G: FiniteGroup, fs: FactorStructure, acting):
    S = fs.factor
    T, inv = G.table, G.inverses
    loc = S.local_index
    add, mul = fs.brace.add.table, fs.brace.mul.table
    for h in acting:
        img = T[T[h, S.array], inv[h]]
        if not S.mask[img].all():
            return (int(h), int(S.array[~S.mask[img]][0]), None)
        p = loc[img]
        for tab in (add, mul):
            diff = np.argwhere(p[tab] != tab[np.ix_(p, p)])
            if diff.size:
                x, y = diff[0]
                return (int(h), int(S.members[x]), int(S.members[y]))
    return None


def _mask(n: int, idx) -> np.ndarray:
    m = np.zeros(n, dtype=bool)
    m[np.asarray(idx, dtype=np.int64)] = True
    return m


def _first_outside(sub, mask) -> int | None:
    sub = np.asarray(sub, dtype=np.int64)
    bad = sub[~mask[sub]]
    return None if bad.size == 0 else int(bad[0])


def _certs(B: SkewBrace) -> list:
    return B.meta.setdefault("certificates", [])


# --------------------------------------------------------------------------
# Q8


def q8_brace() -> SkewBrace:
    """Left brace on Q8 = {a^x b^y c^z}: exponents add mod 2, product as in Q8."""
    Q = quaternion()
    coords = q8_coordinates()
    index = {u: i for i, u in enumerate(coords)}
    n = len(coords)
    add = np.empty((n, n), dtype=np.int64)
    for i, u in enumerate(coords):
        for j, v in enumerate(coords):
            add[i, j] = index[tuple((s + t) % 2 for s, t in zip(u, v))]
    A = make_group(Q.labels, add, Q.identity)
    return make_skew_brace(A, Q, {"provenance": "q8"})


Q8_AUTOMORPHISM_GENERATORS = {
    # images of (a, b), from the list of order-3 automorphisms of Q8
    "alpha1": ("b", "ab"),
    "alpha2": ("b", "abc"),
    "alpha3": ("bc", "ab"),
    "alpha4": ("bc", "abc"),
    "beta1": ("ab", "a"),
    "beta2": ("abc", "a"),
    "beta3": ("abc", "ac"),
    "beta4": ("ab", "ac"),
}


def q8_equivariant_automorphisms() -> dict[str, GroupMap]:
    """The eight order-3 automorphisms of Q8, each checked to preserve ``q8_brace``."""
    B = q8_brace()
    Q = B.mul
    a, b = Q.index("a"), Q.index("b")
    out = {}
    for name, (ia, ib) in Q8_AUTOMORPHISM_GENERATORS.items():
        phi = extend_to_homomorphism(Q, [a, b], Q, [Q.index(ia), Q.index(ib)], injective=True)
        if phi is None or (phi < 0).any():
            raise AssertionError(f"{name} does not define an automorphism of Q8")
        m = GroupMap(Q, Q, phi)
        if not (phi[B.add.table] == B.add.table[np.ix_(phi, phi)]).all():
            raise AssertionError(f"{name} does not preserve the Q8 brace addition")
        out[name] = m
    return out


# --------------------------------------------------------------------------
# Baer


def _check_class_two(G: FiniteGroup) -> None:
    series = lower_central_series(G)
    if series[-1].order != 1:
        raise NotClassTwo("group is not nilpotent")
    if len(series) - 1 > 2:
        raise NotClassTwo(f"group has nilpotency class {len(series) - 1}")


def baer_brace(G: GroupLike, *, aut_check: str = "auto") -> SkewBrace:
    """Left brace a + b = a b [b,a]^((o+1)/2) with o the order of [b,a].

    ``aut_check`` selects how equivariance under Aut(G) is certified:
    ``"all"`` enumerates Aut(G), ``"inner"`` tests conjugation by
    generators, ``"none"`` skips, ``"auto"`` enumerates when G is
    non-abelian of order at most 64 and falls back to ``"inner"`` above.
    """
    G = materialize(G)
    _check_class_two(G)
    D = derived_subgroup(G)
    if D.order % 2 == 0:
        raise EvenCommutator(D.order)
    T, inv = G.table, G.inverses
    n = G.order
    if G.is_abelian():
        B = trivial_brace(G)
        B.meta["provenance"] = "baer"
        _certs(B).append(Certificate("baer:abelian-trivial", True))
        return B
    comm = T[T[inv[:, None], inv[None, :]], np.arange(n)[:, None]]
    comm = T[comm, np.arange(n)[None, :]]  # [a,b] = a^-1 b^-1 a b
    orders = G.element_orders
    sqrt = np.empty(n, dtype=np.int64)
    for x in D.members:
        sqrt[x] = G.power(x, (int(orders[x]) + 1) // 2)
    add = T[T, sqrt[comm.T]]
    A = make_group(G.labels, add, G.identity)
    B = make_skew_brace(A, G, {"provenance": "baer"})
    certs = _certs(B)
    certs.append(Certificate("baer:additive-abelian", A.is_abelian()))
    ker = kernel(B)
    w = _first_outside(center(G).array, ker.mask)
    certs.append(Certificate("baer:center-in-kernel", w is None, w))
    mode = aut_check
    if mode == "auto":
        mode = "all" if n <= FULL_EQUIVARIANCE_BOUND else "inner"
    if mode != "none":
        if mode == "all":
            maps = [m.images for m in automorphisms(G)]
        else:
            maps = [G.conjugation(g) for g in generators(G)]
        bad = next((i for i, phi in enumerate(maps) if not (phi[add] == add[np.ix_(phi, phi)]).all()), None)
        certs.append(Certificate(f"baer:aut-equivariant[{mode}]", bad is None, bad, f"{len(maps)} maps"))
    return B


# --------------------------------------------------------------------------
# product of two braces


def product_brace(G: FiniteGroup, N: FactorStructure, H: FactorStructure) -> FactorStructure:
    """Brace on the subgroup NH with n1h1 + n2h2 = (n1 + n2)(h1 + h2).

    Hypothesis indices in ``HypothesisFailure``: 0 structural (NH a group,
    N normal in it, N & H central in N), 1 N & H inside both kernels,
    2 N & H inside both additive centres, 3 conjugation by H preserves N's
    brace.
    """
    T, inv = G.table, G.inverses
    Nf, Hf = N.factor, H.factor
    prod = set_product(G, Nf, Hf)
    closed = _mask(G.order, prod)[T[np.ix_(prod, prod)]].all()
    if not closed:
        raise HypothesisFailure(0, "NH is not a subgroup")
    carrier = Subgroup(G, tuple(prod.tolist()))
    if not is_normal(Nf, carrier):
        raise HypothesisFailure(0, "N is not normal in NH")
    D = intersection(Nf, Hf)
    w = _first_outside(D.array, center(Nf).mask)
    if w is not None:
        raise HypothesisFailure(0, "N & H is not central in N", w)
    for arr in (N.kernel, H.kernel):
        w = _first_outside(D.array, _mask(G.order, arr))
        if w is not None:
            raise HypothesisFailure(1, "N & H is not inside Ker(N) & Ker(H)", w)
    for arr in (N.additive_center, H.additive_center):
        w = _first_outside(D.array, _mask(G.order, arr))
        if w is not None:
            raise HypothesisFailure(2, "(N & H, +) is not central in (N, +) and (H, +)", w)
    w = _conjugation_witness(G, N, Hf.members if Hf.order <= FULL_EQUIVARIANCE_BOUND else generators(Hf))
    if w is not None:
        raise HypothesisFailure(3, "conjugation by H does not preserve the brace on N", w)

    m = carrier.order
    cl = carrier.local_index
    nl, hl = Nf.local_index, Hf.local_index
    pairs = T[np.ix_(Nf.array, Hf.array)].ravel()  # (n, h) in lexicographic order
    _, first = np.unique(pairs, return_index=True)
    fn = Nf.array[first // Hf.order]
    fh = Hf.array[first % Hf.order]  # canonical factorisation of carrier[i]
    # all factorisations g = (n d)(d^-1 h), d in N & H
    d = D.array
    alt_n = T[fn[:, None], d[None, :]]
    alt_h = T[inv[d][None, :], fh[:, None]]
    addN, addH = N.brace.add.table, H.brace.add.table

    def sums(n1, h1, n2, h2):
        nn = Nf.array[addN[nl[n1], nl[n2]]]
        hh = Hf.array[addH[hl[h1], hl[h2]]]
        return cl[T[nn, hh]]

    add = sums(fn[:, None], fh[:, None], fn[None, :], fh[None, :])
    for j1 in range(d.size):
        for j2 in range(d.size):
            alt = sums(alt_n[:, j1][:, None], alt_h[:, j1][:, None], alt_n[:, j2][None, :], alt_h[:, j2][None, :])
            diff = np.argwhere(alt != add)
            if diff.size:
                g1, g2 = diff[0]
                raise NotWellDefined(
                    int(carrier.members[g1]), int(carrier.members[g2]),
                    {int(add[g1, g2]), int(alt[g1, g2])},
                )
    mulG = carrier.group
    A = make_group(mulG.labels, add, mulG.identity)
    B = make_skew_brace(A, mulG, {"provenance": f"product({N.provenance},{H.provenance})"})
    out = FactorStructure(carrier, B, B.meta["provenance"])
    soc = _mask(G.order, out.socle)
    socN = N.socle
    socH = Subgroup(G, tuple(sorted(H.socle.tolist())))
    cent = centralizer(socH, Nf.members)
    conclusion = set_product(G, socN, cent.array)
    w = _first_outside(conclusion, soc)
    certs = _certs(B)
    certs.append(Certificate("product:socle-conclusion", w is None, w, "Soc(N) C_Soc(H)(N) <= Soc(NH)"))
    for name, S in (("N", Nf), ("H", Hf)):
        ok = is_subbrace(B, cl[S.array])
        certs.append(Certificate(f"product:{name}-subbrace", ok))
    return out


# --------------------------------------------------------------------------
# chain assembly


def _check_chain_conditions(dec: NDecomposition, structures: list[FactorStructure], tails: list[Subgroup]) -> list[Certificate]:
    G = dec.ambient
    A = list(dec.factors) + [G.trivial()]
    certs = []
    for i in range(1, dec.k + 1):
        Ai, Hi, fs = A[i - 1], tails[i - 1], structures[i - 1]
        N = normalizer(Hi, Ai)
        if N.order != Hi.order:
            w = int(np.setdiff1d(Hi.array, N.array)[0])
            raise ConditionFailure(i, 1, w, f"factor {i} is not normalised by H_{i}")
        certs.append(Certificate(f"chain:normalised[{i}]", True))
        w = fs.equivariance_witness(Hi)
        if w is not None:
            raise ConditionFailure(i, 2, w, f"brace on factor {i} is not H_{i}-equivariant")
        certs.append(Certificate(f"chain:equivariant[{i}]", True))
        meet = np.intersect1d(dec.head(i), dec.tail(i))
        C = centralizer(G, np.union1d(Ai.array, A[i].array))
        w = _first_outside(meet, C.mask)
        if w is not None:
            raise ConditionFailure(i, 3, w)
        certs.append(Certificate(f"chain:centralizer[{i}]", True))
        w = fs.center_in_socle()
        if w is not None:
            raise ConditionFailure(i, 4, w, f"Z(A_{i}) is not inside Soc(A_{i})")
        certs.append(Certificate(f"chain:center-in-socle[{i}]", True))
    return certs


def chain_brace(dec: NDecomposition, structures: list[FactorStructure], *, seed: int = 0) -> SkewBrace:
    """Assemble factor braces into a brace on ``dec.ambient``.

    Builds H_{k-1} = A_k first and then H_{i-1} = A_i H_i by
    :func:`product_brace`, after checking the four chain conditions on every
    factor.  Raises ``ConditionFailure(i, condition, witness)``.
    """
    G = dec.ambient
    k = dec.k
    if len(structures) != k:
        raise ValueError("one structure per factor is required")
    for A, fs in zip(dec.factors, structures):
        if fs.factor != A:
            raise ValueError("structure does not sit on its factor")
    tails = dec.tails
    certs = _check_chain_conditions(dec, structures, tails)
    cur = structures[-1]
    for i in range(k - 1, 0, -1):
        N = structures[i - 1]
        meet = intersection(N.factor, cur.factor)
        both = np.intersect1d(N.socle, cur.socle)
        w = _first_outside(meet.array, _mask(G.order, both))
        if w is not None:
            raise ConditionFailure(i, "socle", w, f"A_{i} & H_{i} is not inside Soc(A_{i}) & Soc(H_{i})")
        certs.append(Certificate(f"chain:socle-meet[{i}]", True))
        cur = product_brace(G, N, cur)
        certs.extend(_certs(cur.brace))
    if cur.factor.order != G.order:
        raise ConditionFailure(1, "product", None, "factors do not multiply to G")
    B = SkewBrace(cur.brace.add, G, {"provenance": "chain"})
    for i, A in enumerate(dec.factors, 1):
        certs.append(Certificate(f"chain:subbrace[{i}]", is_subbrace(B, A.members)))
    certs.append(property_star(B, dec, seed=seed))
    B.meta["certificates"] = certs
    B.meta["factors"] = [fs.provenance for fs in structures]
    return B


def property_star(B: SkewBrace, dec: NDecomposition, *, seed: int = 0,
                  exhaustive_order: int = EXHAUSTIVE_STAR_ORDER,
                  cap: int = STAR_TUPLE_CAP, samples: int = STAR_SAMPLES) -> Certificate:
    """Check: a_i in Z(A_i) with a_i...a_k centralising A_{i-1} for all i forces a_1...a_k in Soc.

    Exhaustive when |G| <= ``exhaustive_order`` or the tuple space is at most
    ``cap``; otherwise ``samples`` tuples drawn with ``seed``.
    """
    G = dec.ambient
    T = G.table
    Z = [center(A).array for A in dec.factors]
    cents = [np.ones(G.order, dtype=bool)] + [centralizer(G, A.members).mask for A in dec.factors[:-1]]
    soc = socle(B).mask
    total = reduce(_mul, (z.size for z in Z), 1)
    exhaustive = G.order <= exhaustive_order or total <= cap
    if exhaustive:
        tuples = iproduct(*[z.tolist() for z in Z])
    else:
        rng = np.random.default_rng(seed)
        tuples = (tuple(int(rng.choice(z)) for z in Z) for _ in range(samples))
    checked = qualifying = 0
    for tup in tuples:
        checked += 1
        suffix = G.identity
        ok = True
        for i in range(len(tup) - 1, -1, -1):
            suffix = int(T[tup[i], suffix])
            if not cents[i][suffix]:
                ok = False
                break
        if not ok:
            continue
        qualifying += 1
        if not soc[suffix]:
            return Certificate("property-star", False, list(tup), f"{suffix} not in Soc(G)")
    detail = f"{'exhaustive' if exhaustive else 'sampled'}: {checked} tuples, {qualifying} qualifying"
    return Certificate("property-star", True, None, detail)


# --------------------------------------------------------------------------
# nilpotent class two


def abelian_basis(Q: FiniteGroup) -> list[int]:
    """Elements whose cyclic subgroups give Q as an internal direct product."""
    if not Q.is_abelian():
        raise ValueError("abelian_basis needs an abelian group")
    n = Q.order
    orders = Q.element_orders
    cand = sorted(range(n), key=lambda x: (-int(orders[x]), x))
    cand = [x for x in cand if x != Q.identity]

    def dfs(gens: list[int], size: int):
        if size == n:
            return gens
        for x in cand:
            new = _closure_mask(Q.table, Q.identity, np.asarray(gens + [x]))
            if int(new.sum()) == size * int(orders[x]):
                found = dfs(gens + [x], size * int(orders[x]))
                if found is not None:
                    return found
        return None

    res = dfs([], 1)
    if res is None:
        raise AssertionError("abelian group without a cyclic decomposition")
    return res


def class2_abelian_decomposition(P: GroupLike) -> NDecomposition:
    """Abelian factors A_i = <x_i> Z(P) where the x_i Z(P) split P/Z(P) into cyclic factors."""
    P = materialize(P)
    if not is_nilpotent(P):
        raise NotNilpotent("class2_abelian_decomposition needs a nilpotent group")
    _check_class_two(P)
    Z = center(P)
    if Z.order == P.order:
        dec = NDecomposition(P, (P.whole(),))
        dec.certificates = [Certificate("abelian", True)]
        return dec
    Q, proj = quotient_group(P, Z)
    basis = abelian_basis(Q)
    lifts = [int(np.flatnonzero(proj.images == q)[0]) for q in basis]
    factors = tuple(subgroup_generated(P, [x] + list(Z.members)) for x in lifts)
    dec = NDecomposition(P, factors)
    certs = [c for c in decomposition_certificates(dec) if not c.name.startswith("intersection")]
    certs += [Certificate(f"abelian[{i}]", is_abelian(A)) for i, A in enumerate(factors, 1)]
    certs += verify_centralizer_condition(dec)
    dec.certificates = certs
    return dec


def nilpotent_class2_brace(G: GroupLike) -> SkewBrace:
    """Left brace on a nilpotent group of class at most two."""
    G = materialize(G)
    _check_class_two(G)
    if derived_subgroup(G).order % 2 == 1:
        return baer_brace(G)
    parts = [(p, P) for p, P in sylow_subgroups(G).items()]
    structures = [_sylow_part_structure(p, P) for p, P in parts]
    if len(structures) == 1:
        B = structures[0].brace
        return SkewBrace(B.add, G, dict(B.meta))
    dec = NDecomposition(G, tuple(P for _, P in parts))
    dec.certificates = decomposition_certificates(dec)
    B = chain_brace(dec, structures)
    B.meta["provenance"] = "sylow-chain"
    return B


def _sylow_part_structure(p: int, P: Subgroup) -> FactorStructure:
    Pg = P.group
    if p != 2:
        return FactorStructure(P, baer_brace(Pg), "baer")
    if is_abelian(P):
        return FactorStructure(P, trivial_brace(Pg), "trivial")
    dec = class2_abelian_decomposition(Pg)
    inner = [FactorStructure(A, trivial_brace(A.group), "trivial") for A in dec.factors]
    B = chain_brace(dec, inner)
    B.meta["provenance"] = "abelian-chain"
    return FactorStructure(P, B, "abelian-chain")


# --------------------------------------------------------------------------
# pipelines


def _require_soluble_class_two(G: FiniteGroup) -> None:
    if not is_soluble(G):
        raise HypothesisFailure("soluble", "group is not soluble")
    check_sylow_class(G)


def _finish(B: SkewBrace, route: str, dec: NDecomposition, structures, extra: list[Certificate]) -> SkewBrace:
    kind = brace_type(B)
    certs = list(extra) + list(B.meta.get("certificates", []))
    if route.startswith("iyb"):
        certs.append(Certificate("a-type", kind.a_type))
    else:
        certs.append(Certificate("n-type", kind.n_type))
    B.meta.update(
        route=route,
        decomposition=dec.to_dict(),
        factors=[fs.provenance for fs in structures],
        certificates=certs,
        brace_type=kind.to_dict(),
    )
    return B


def _q8_structure(P: Subgroup) -> FactorStructure:
    """Transport ``q8_brace`` onto a subgroup isomorphic to Q8."""
    base = q8_brace()
    iso = is_isomorphic(base.mul, P.group)
    if iso is None:
        raise Sylow2NotQ8(P.order)
    phi = iso.images
    inv = np.empty_like(phi)
    inv[phi] = np.arange(phi.size)
    add = phi[base.add.table[np.ix_(inv, inv)]]
    Pg = P.group
    B = make_skew_brace(make_group(Pg.labels, add, Pg.identity), Pg, {"provenance": "q8"})
    return FactorStructure(P, B, "q8")


def build_iyb_q8free(G: GroupLike, *, seed: int = 0) -> SkewBrace:
    """Left brace on a soluble group with class-2 Sylows and Q8-free nilpotent residual."""
    G = materialize(G)
    _require_soluble_class_two(G)
    if not q8_free(nilpotent_residual(G)):
        raise HypothesisFailure("q8-free", "the nilpotent residual has a Q8 section")
    dec = n_decomposition(G)
    extra = list(dec.certificates) + verify_centralizer_condition(dec)
    structures = []
    for i, A in enumerate(dec.factors, 1):
        if i < dec.k:
            structures.append(FactorStructure(A, baer_brace(A.group), "baer"))
        else:
            B = nilpotent_class2_brace(A.group)
            structures.append(FactorStructure(A, B, B.meta.get("provenance", "")))
    B = chain_brace(dec, structures, seed=seed)
    return _finish(B, "iyb-q8free", dec, structures, extra)


def build_iyb_sylow_q8(G: GroupLike, *, seed: int = 0) -> SkewBrace:
    """Left brace on a soluble group with class-2 Sylows and Sylow 2-subgroup Q8."""
    G = materialize(G)
    _require_soluble_class_two(G)
    P = sylow_subgroup(G, 2)
    if not is_q8(P):
        raise Sylow2NotQ8(P.order)
    dec = n_decomposition(G)
    extra = list(dec.certificates) + verify_centralizer_condition(dec)
    structures = []
    for A in dec.factors:
        P2 = sylow_subgroup(A, 2)
        if P2.order <= 4:
            structures.append(FactorStructure(A, baer_brace(A.group), "baer"))
            continue
        W = hall_subgroup(A, set(prime_factors(A.order)) - {2})
        q = _q8_structure(P2)
        w = FactorStructure(W, baer_brace(W.group), "baer")
        both = product_brace(G, q, w)
        if both.factor != A:
            raise ConditionFailure(0, "split", None, "Sylow 2 x Hall 2' does not give the factor")
        structures.append(FactorStructure(A, both.brace, "q8xbaer"))
    B = chain_brace(dec, structures, seed=seed)
    return _finish(B, "iyb-sylowq8", dec, structures, extra)


def sylow_tower(G: GroupLike) -> list[tuple[int, Subgroup]]:
    """Primes p_1..p_k with normal subgroups N_i = P_1...P_i; raises NoSylowTower."""
    G = materialize(G)
    remaining = prime_factors(G.order)
    N = G.trivial()
    tower = []
    while remaining:
        for p in remaining:
            S = sylow_subgroup(G, p)
            M = join(N, S)
            if M.order == N.order * S.order and is_normal(M, G):
                tower.append((p, M))
                remaining.remove(p)
                N = M
                break
        else:
            raise NoSylowTower()
    return tower


def build_nyb_sylow_tower(G: GroupLike, *, seed: int = 0) -> SkewBrace:
    """Skew brace of nilpotent type from trivial braces on a Sylow tower."""
    G = materialize(G)
    tower = sylow_tower(G)
    factors: list[Subgroup] = [None] * len(tower)  # type: ignore[list-item]
    H = G.trivial()
    for i in range(len(tower) - 1, -1, -1):
        p, Ni = tower[i]
        A = conjugate_sylow_normalised_by(Ni, p, H)
        factors[i] = A
        H = product_subgroup(G, A, H)
    while len(factors) < 2:
        factors = [G.trivial()] + factors
    dec = NDecomposition(G, tuple(factors))
    dec.certificates = decomposition_certificates(dec)
    structures = [FactorStructure(A, trivial_brace(A.group), "trivial") for A in factors]
    B = chain_brace(dec, structures, seed=seed)
    return _finish(B, "nyb-tower", dec, structures, list(dec.certificates))


def build_nyb_class2(G: GroupLike, *, seed: int = 0) -> SkewBrace:
    """Skew brace of nilpotent type from trivial braces on an N-decomposition."""
    G = materialize(G)
    _require_soluble_class_two(G)
    dec = n_decomposition(G)
    extra = list(dec.certificates) + verify_centralizer_condition(dec)
    structures = [FactorStructure(A, trivial_brace(A.group), "trivial") for A in dec.factors]
    B = chain_brace(dec, structures, seed=seed)
    return _finish(B, "nyb-class2", dec, structures, extra)
