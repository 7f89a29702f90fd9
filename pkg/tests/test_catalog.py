import pytest

from skewbrace import catalog
from skewbrace.errors import UnknownName
from skewbrace.groups import derived_subgroup, is_isomorphic


def test_small_group_counts():
    for n, count in catalog.SMALL_GROUP_COUNTS.items():
        assert len(catalog.small_groups(n)) == count, n
    assert len(catalog.all_small_groups()) == 74


def test_small_groups_pairwise_non_isomorphic():
    for n in catalog.SMALL_GROUP_COUNTS:
        groups = catalog.small_groups(n)
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                assert is_isomorphic(groups[i], groups[j]) is None, (n, i, j)


def test_named_entries_are_valid():
    for name in catalog.NAMED:
        G = catalog.get(name)
        assert G.order >= 1


def test_q8_presentation():
    Q = catalog.get("q8")
    a, b = Q.index("a"), Q.index("b")
    e = Q.identity
    assert Q.power(a, 4) == e and Q.power(b, 4) == e
    assert Q.power(a, 2) == Q.power(b, 2)
    comm = Q.product(Q.inv(a), Q.inv(b), a, b)
    assert comm == Q.power(b, 2)


def test_keys():
    assert catalog.get("cyclic:5").order == 5
    S4 = catalog.get("s4")
    assert S4.order == 24 and derived_subgroup(S4).order == 12
    assert catalog.get("dihedral:8").order == 8
    assert catalog.get("q8*cyclic:3").order == 24
    assert catalog.get("semidirect:7:3:2").order == 21
    assert catalog.get("small:8:1").order == 8
    with pytest.raises(UnknownName):
        catalog.get("nonsense")
    with pytest.raises(UnknownName):
        catalog.get("small:30:1")


def test_named_isomorphism_types():
    assert is_isomorphic(catalog.get("q16"), catalog.get("dicyclic:16")) is not None
    assert is_isomorphic(catalog.get("heis27"), catalog.get("m27")) is None
    assert is_isomorphic(catalog.get("sl23"), catalog.get("s4")) is None
