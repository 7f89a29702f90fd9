import numpy as np
import pytest

import oracles as O
from conftest import small_socle_brace, v4_brace_with_cyclic_addition
from skewbrace import catalog
from skewbrace.brace import SkewBrace, brace_type, is_subbrace, kernel, make_skew_brace, socle, trivial_brace
from skewbrace.catalog import q8_coordinates
from skewbrace.constructors import (
    FactorStructure,
    baer_brace,
    build_iyb_q8free,
    build_iyb_sylow_q8,
    build_nyb_class2,
    build_nyb_sylow_tower,
    chain_brace,
    class2_abelian_decomposition,
    nilpotent_class2_brace,
    product_brace,
    q8_brace,
    q8_equivariant_automorphisms,
    sylow_tower,
)
from skewbrace.errors import (
    ConditionFailure,
    EvenCommutator,
    HypothesisFailure,
    NoSylowTower,
    NotClassTwo,
    NotNilpotent,
    Sylow2NotQ8,
    SylowClassTooBig,
)
from skewbrace.groups import Subgroup, center, is_isomorphic, make_group, subgroup_generated
from skewbrace.soluble import NDecomposition, fitting, n_decomposition, sylow_subgroup


def assert_valid(B: SkewBrace):
    """Independent triple check plus revalidation through the constructor."""
    make_skew_brace(B.add, B.mul)
    if B.order <= 24:
        assert O.brace_law_holds(O.table(B.add), O.table(B.mul))


def certificates_pass(B):
    bad = [c for c in B.meta.get("certificates", []) if not c.passed]
    assert not bad, bad


# ---------------------------------------------------------------- Q8


def test_q8_brace_identities():
    B = q8_brace()
    Q = B.mul
    assert B.times(Q.index("a"), Q.index("a")) == Q.index("c")
    assert B.times(Q.index("b"), Q.index("a")) == Q.index("abc")
    assert B.plus(Q.index("a"), Q.index("a")) == Q.identity
    assert_valid(B)
    assert B.add.is_abelian() and (B.add.element_orders <= 2).all()


def coordinate_map(fn):
    coords = q8_coordinates()
    index = {u: i for i, u in enumerate(coords)}
    return np.array([index[tuple(v % 2 for v in fn(*u))] for u in coords])


ALPHA_FORMULAS = {
    "alpha1": lambda x, y, z: (y, x + y, z),
    "alpha2": lambda x, y, z: (y, x + y, z + y),
    "alpha3": lambda x, y, z: (y, x + y, z + x),
    "alpha4": lambda x, y, z: (y, x + y, z + x + y),
}


def test_q8_automorphisms():
    B = q8_brace()
    maps = q8_equivariant_automorphisms()
    assert len(maps) == 8
    for name, fn in ALPHA_FORMULAS.items():
        alpha = maps[name].images
        assert (alpha == coordinate_map(fn)).all(), name
        beta = maps[name.replace("alpha", "beta")].images
        assert (beta == alpha[alpha]).all(), name
    for m in maps.values():
        assert m.is_homomorphism() and m.is_bijective()
        p = m.images
        assert (p[B.add.table] == B.add.table[np.ix_(p, p)]).all()
        assert (p[B.mul.table] == B.mul.table[np.ix_(p, p)]).all()
        assert (p[p[p]] == np.arange(8)).all()


def test_q8_automorphism_closure_has_order_12():
    perms = [tuple(m.images.tolist()) for m in q8_equivariant_automorphisms().values()]
    assert O.permutation_group_order(perms) == 12


# ---------------------------------------------------------------- Baer


def test_baer_abelian_is_trivial():
    G = catalog.get("cyclic:9")
    B = baer_brace(G)
    assert (B.add.table == G.table).all()


def test_baer_heisenberg():
    G = catalog.get("heis27")
    B = baer_brace(G)
    certificates_pass(B)
    assert B.add.is_abelian() and (B.add.element_orders <= 3).all()
    assert O.brace_law_holds(O.table(B.add), O.table(B.mul))
    assert set(center(G).members) <= set(kernel(B).members)


def test_baer_errors():
    with pytest.raises(EvenCommutator):
        baer_brace(catalog.get("q8"))
    with pytest.raises(NotClassTwo):
        baer_brace(catalog.get("s3"))


# ---------------------------------------------------------------- class two


def test_class2_decompositions():
    D8 = catalog.get("d8")
    assert class2_abelian_decomposition(D8).orders == [4, 4]
    assert class2_abelian_decomposition(catalog.get("heis27")).orders == [9, 9]
    assert class2_abelian_decomposition(catalog.get("cyclic:8")).orders == [8]
    Q = catalog.get("q8")
    dec = class2_abelian_decomposition(Q)
    assert dec.orders == [4, 4] and all(c.passed for c in dec.certificates)
    with pytest.raises(NotNilpotent):
        class2_abelian_decomposition(catalog.get("s3"))


def test_nilpotent_class2_brace():
    C12 = catalog.get("cyclic:12")
    assert (nilpotent_class2_brace(C12).add.table == C12.table).all()
    for name in ["d8", "q8", "q8xc3", "d8xc3", "heis27"]:
        B = nilpotent_class2_brace(catalog.get(name))
        assert_valid(B)
        assert B.add.is_abelian(), name
    with pytest.raises(NotClassTwo):
        nilpotent_class2_brace(catalog.get("d16"))


# ---------------------------------------------------------------- products


def trivial_structure(S: Subgroup) -> FactorStructure:
    return FactorStructure(S, trivial_brace(S.group), "trivial")


def test_product_of_direct_factors_is_trivial():
    G = catalog.get("cyclic:6")
    N, H = subgroup_generated(G, [2]), subgroup_generated(G, [3])
    out = product_brace(G, trivial_structure(N), trivial_structure(H))
    assert out.factor.order == 6
    assert (out.brace.add.table == G.table).all()
    certificates_pass(out.brace)


def test_product_s4_step():
    G = catalog.get("s4")
    B = build_iyb_q8free(G)
    dec = n_decomposition(G)
    V = dec.factors[0]
    assert is_subbrace(B, V.members) and B.order == 24


def test_product_hypothesis_one():
    B = small_socle_brace()
    G = B.mul
    S = FactorStructure(G.whole(), B, "fixture")
    with pytest.raises(HypothesisFailure) as err:
        product_brace(G, S, S)
    assert err.value.index == 1


def test_product_hypothesis_three():
    A4 = catalog.get("a4")
    V = fitting(A4)
    Vb = v4_brace_with_cyclic_addition()
    iso = is_isomorphic(Vb.mul, V.group)
    add = iso.images[Vb.add.table[np.ix_(np.argsort(iso.images), np.argsort(iso.images))]]
    Vs = FactorStructure(V, make_skew_brace(make_group(V.group.labels, add, V.group.identity), V.group), "fixture")
    C = sylow_subgroup(A4, 3)
    with pytest.raises(HypothesisFailure) as err:
        product_brace(A4, Vs, trivial_structure(C))
    assert err.value.index == 3
    dec = NDecomposition(A4, (V, C))
    with pytest.raises(ConditionFailure) as cerr:
        chain_brace(dec, [Vs, trivial_structure(C)])
    assert (cerr.value.i, cerr.value.condition) == (1, 2)


def test_product_structural_hypothesis():
    S3 = catalog.get("s3")
    a = S3.labels.index("(1,2)")
    b = S3.labels.index("(1,3)")
    N, H = subgroup_generated(S3, [a]), subgroup_generated(S3, [b])
    with pytest.raises(HypothesisFailure) as err:
        product_brace(S3, trivial_structure(N), trivial_structure(H))
    assert err.value.index == 0


# ---------------------------------------------------------------- chains


def test_chain_single_factor_unchanged():
    B = small_socle_brace()
    G = B.mul
    dec = NDecomposition(G, (G.whole(),))
    with pytest.raises(ConditionFailure) as err:
        chain_brace(dec, [FactorStructure(G.whole(), B, "fixture")])
    assert (err.value.i, err.value.condition) == (1, 4)
    Q = q8_brace()
    decq = NDecomposition(Q.mul, (Q.mul.whole(),))
    out = chain_brace(decq, [FactorStructure(Q.mul.whole(), Q, "q8")])
    assert (out.add.table == Q.add.table).all()


def test_chain_s4_trivial_factors():
    G = catalog.get("s4")
    dec = n_decomposition(G)
    B = chain_brace(dec, [trivial_structure(A) for A in dec.factors])
    assert B.order == 24
    assert_valid(B)
    certificates_pass(B)


def test_chain_condition_four():
    B = small_socle_brace()
    G = B.mul
    dec = NDecomposition(G, (G.trivial(), G.whole()))
    with pytest.raises(ConditionFailure) as err:
        chain_brace(dec, [trivial_structure(G.trivial()), FactorStructure(G.whole(), B, "fixture")])
    assert (err.value.i, err.value.condition) == (2, 4)


# ---------------------------------------------------------------- pipelines


@pytest.mark.parametrize("name", ["s3", "s4", "d8", "a4", "dic12", "s3xc3", "q8", "c7c3"])
def test_iyb_q8free(name):
    B = build_iyb_q8free(catalog.get(name))
    assert_valid(B)
    certificates_pass(B)
    assert brace_type(B).a_type and B.meta["route"] == "iyb-q8free"


def test_iyb_q8free_rejects():
    with pytest.raises(SylowClassTooBig):
        build_iyb_q8free(catalog.get("d16"))
    with pytest.raises(HypothesisFailure):
        build_iyb_q8free(catalog.get("sl23"))
    with pytest.raises(HypothesisFailure):
        build_iyb_q8free(catalog.get("a5"))


@pytest.mark.parametrize("name", ["sl23", "q8xc3", "q8xc5", "q8"])
def test_iyb_sylow_q8(name):
    B = build_iyb_sylow_q8(catalog.get(name))
    assert_valid(B)
    certificates_pass(B)
    assert brace_type(B).a_type
    assert "q8xbaer" in B.meta["factors"]


def test_iyb_sylow_q8_rejects_s4():
    with pytest.raises(Sylow2NotQ8):
        build_iyb_sylow_q8(catalog.get("s4"))


def test_nyb_sylow_tower():
    B = build_nyb_sylow_tower(catalog.get("s3"))
    assert_valid(B)
    assert brace_type(B).n_type
    assert B.add.is_abelian()  # C3 + C2 from the two trivial factors
    A4 = catalog.get("a4")
    assert [N.order for _, N in sylow_tower(A4)] == [4, 12]
    assert build_nyb_sylow_tower(A4).meta["decomposition"]["orders"] == [4, 3]
    for name in ["d8", "q8xc3", "heis27"]:
        G = catalog.get(name)
        assert (build_nyb_sylow_tower(G).add.table == G.table).all()
    with pytest.raises(NoSylowTower):
        build_nyb_sylow_tower(catalog.get("s4"))


@pytest.mark.parametrize("name", ["s4", "sl23", "dic12", "d8xc3"])
def test_nyb_class2(name):
    B = build_nyb_class2(catalog.get(name))
    assert_valid(B)
    certificates_pass(B)
    assert brace_type(B).n_type


def test_nyb_class2_abelian_is_trivial():
    G = catalog.get("cyclic:12")
    assert (build_nyb_class2(G).add.table == G.table).all()


def test_property_star_certificate_present():
    B = build_iyb_q8free(catalog.get("s4"))
    star = [c for c in B.meta["certificates"] if c.name == "property-star"]
    assert star and star[0].passed and star[0].detail.startswith("exhaustive")


def test_nyb_sylow_tower_trivial_group():
    B = build_nyb_sylow_tower(catalog.get("trivial"))
    assert B.order == 1 and B.meta["decomposition"]["orders"] == [1, 1]
