import numpy as np
import pytest

import oracles as O
from skewbrace import catalog
from skewbrace.errors import NotSoluble, SylowClassTooBig
from skewbrace.groups import Subgroup, derived_subgroup, is_isomorphic, is_normal
from skewbrace.soluble import (
    complement_basis,
    fitting,
    fitting2,
    hall_complement,
    is_soluble,
    n_decomposition,
    nilpotent_residual,
    q8_free,
    sylow_classes,
    sylow_subgroup,
    system_normalizer,
    verify_centralizer_condition,
)

ORACLE_GROUPS = ["s3", "s4", "d8", "q8", "a4", "dic12", "sl23", "s3xc3", "d8xc3", "q8xc3", "c7c3", "d16", "q16"]


def labels(G, S):
    return sorted(G.labels[x] for x in S)


def test_is_soluble():
    assert is_soluble(catalog.get("s4"))
    assert is_soluble(catalog.get("cyclic:10"))
    assert not is_soluble(catalog.get("a5"))


def test_sylow():
    S4 = catalog.get("s4")
    P = sylow_subgroup(S4, 2)
    assert P.order == 8 and is_isomorphic(P.group, catalog.get("d8")) is not None
    assert sylow_subgroup(S4, 5).order == 1
    S3 = catalog.get("s3")
    assert sylow_subgroup(S3, 3) == derived_subgroup(S3)


def test_hall_complements():
    S4 = catalog.get("s4")
    assert hall_complement(S4, 2).order == 3
    assert hall_complement(S4, 3).order == 8
    C12 = catalog.get("cyclic:12")
    K = hall_complement(C12, 2)
    assert K.order == 3 and is_normal(K, C12)
    with pytest.raises(NotSoluble):
        hall_complement(catalog.get("a5"), 2)


def test_complement_basis_and_system_normaliser():
    S3 = catalog.get("s3")
    basis = complement_basis(S3)
    assert basis.complements[2] == derived_subgroup(S3)
    assert basis.complements[3].order == 2
    assert system_normalizer(S3, basis).order == 2
    triv = catalog.get("trivial")
    assert complement_basis(triv).complements == {}
    S4 = catalog.get("s4")
    b4 = complement_basis(S4)
    assert {p: K.order for p, K in b4.complements.items()} == {2: 3, 3: 8}
    assert system_normalizer(S4, b4).order == 2
    D8 = catalog.get("d8")
    assert system_normalizer(D8, complement_basis(D8)).order == 8


def test_structure_matches_oracle(oracle_values):
    for name in ORACLE_GROUPS:
        G = catalog.get(name)
        vals = oracle_values["groups"][name]
        R = nilpotent_residual(G)
        assert R.order == vals["residual"] and labels(G, R) == vals["residual_members"], name
        F = fitting(G)
        assert F.order == vals["fitting"] and labels(G, F) == vals["fitting_members"], name
        assert fitting2(G).order == vals["fitting2"], name
        assert {str(p): c for p, c in sylow_classes(G).items()} == vals["sylow_classes"], name
        assert system_normalizer(G, complement_basis(G)).order in vals["system_normaliser_orders"], name
        assert q8_free(G) == (not vals["q8_section"]), name
        assert q8_free(R) == (not vals["residual_q8_section"]), name


def test_residual_and_fitting_examples():
    assert nilpotent_residual(catalog.get("s3")).order == 3
    assert nilpotent_residual(catalog.get("q8")).order == 1
    S4 = catalog.get("s4")
    assert nilpotent_residual(S4) == derived_subgroup(S4)
    assert fitting(S4).order == 4 and fitting2(S4).order == 12
    assert fitting(catalog.get("q8")).order == 8
    assert fitting(catalog.get("s3")).order == 3


def test_n_decomposition_examples():
    assert n_decomposition(catalog.get("s4")).orders == [4, 3, 2]
    assert n_decomposition(catalog.get("s3")).orders == [3, 2]
    assert n_decomposition(catalog.get("q8")).orders == [1, 8]


def test_n_decomposition_matches_brute_force():
    for name in ["s3", "s4", "a4", "dic12", "sl23", "s3xc3", "c7c3", "q8", "d8xc3"]:
        G = catalog.get(name)
        dec = n_decomposition(G)
        assert dec.ok, name
        assert O.is_n_decomposition(O.table(G), [frozenset(A.members) for A in dec.factors]), name


def test_centralizer_condition():
    dec = n_decomposition(catalog.get("s4"))
    assert all(c.passed for c in verify_centralizer_condition(dec))
    decq = n_decomposition(catalog.get("q8"))
    assert all(c.passed for c in verify_centralizer_condition(decq))
    with pytest.raises(SylowClassTooBig) as err:
        verify_centralizer_condition(n_decomposition(catalog.get("d16")))
    assert err.value.p == 2


def test_q8_free_examples():
    assert not q8_free(catalog.get("q8"))
    assert q8_free(catalog.get("s4"))
    assert not q8_free(catalog.get("sl23"))
    assert q8_free(catalog.get("d16"))
    assert not q8_free(catalog.get("q16"))


def test_decomposition_report_json():
    dec = n_decomposition(catalog.get("s4"))
    d = dec.to_dict()
    assert d["orders"] == [4, 3, 2]
    assert all(set(c) == {"name", "passed", "witness", "detail"} for c in d["certificates"])
