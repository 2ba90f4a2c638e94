import pytest

from maxcyc import (
    CapExceeded,
    NotNormal,
    NotSubgroup,
    Permutation,
    center,
    conjugacy_classes,
    derived_subgroup,
    enumerate_elements,
    is_normal,
    is_simple_nonabelian_60,
    normal_closure,
    normal_subgroups,
    quotient_group,
    realize_text,
    subgroup_generated,
)
from maxcyc.core import (
    exponent,
    is_abelian,
    is_cyclic,
    is_nilpotent,
    is_p_group,
    is_solvable,
    point_stabilizer,
)

from oracles import normal_subgroup_element_sets


def cyc(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


def test_enumerate_s3():
    G = enumerate_elements(3, [cyc(3, (0, 1)), cyc(3, (0, 1, 2))])
    assert G.order == 6


def test_enumerate_dihedral_30():
    rot = cyc(15, tuple(range(15)))
    ref = Permutation(tuple((-x) % 15 for x in range(15)))
    G = enumerate_elements(15, [rot, ref])
    assert G.order == 30


def test_enumerate_trivial():
    G = enumerate_elements(4, [])
    assert G.order == 1
    assert G.identity in G


def test_enumeration_order_is_bfs():
    a = cyc(3, (0, 1, 2))
    G = enumerate_elements(3, [a])
    assert G.element_list == (G.identity, a, a * a)


def test_order_cap_is_hard():
    with pytest.raises(CapExceeded):
        enumerate_elements(5, [cyc(5, (0, 1)), cyc(5, (0, 1, 2, 3, 4))], order_cap=100)


def test_degree_cap_is_hard():
    with pytest.raises(CapExceeded):
        enumerate_elements(200, [], degree_cap=128)


def test_conjugacy_classes_s3_and_a5():
    s3 = realize_text("S(3)")
    assert sorted(len(c) for c in conjugacy_classes(s3).classes) == [1, 2, 3]
    a5 = realize_text("A(5)")
    assert sorted(len(c) for c in conjugacy_classes(a5).classes) == [1, 12, 12, 15, 20]


def test_conjugacy_classes_partition_and_divide():
    for text in ["S(4)", "D(30)", "Q(8)"]:
        G = realize_text(text)
        part = conjugacy_classes(G)
        assert sum(len(c) for c in part.classes) == G.order
        assert all(G.order % len(c) == 0 for c in part.classes)


def test_abelian_classes_are_singletons():
    G = realize_text("C(12)")
    assert all(len(c) == 1 for c in conjugacy_classes(G).classes)


def test_subgroup_generated():
    s3 = realize_text("S(3)")
    triv = subgroup_generated(s3, [s3.identity])
    assert triv.order == 1
    three = next(x for x in s3 if x.order() == 3)
    two = next(x for x in s3 if x.order() == 2)
    assert subgroup_generated(s3, [three]).order == 3
    assert subgroup_generated(s3, [three, two]).order == 6
    with pytest.raises(ValueError):
        subgroup_generated(s3, [Permutation.identity(5)])


def test_is_normal():
    d30 = realize_text("D(30)")
    c15 = subgroup_generated(d30, [next(x for x in d30 if x.order() == 15)])
    assert is_normal(d30, c15)
    s3 = realize_text("S(3)")
    c2 = subgroup_generated(s3, [next(x for x in s3 if x.order() == 2)])
    assert not is_normal(s3, c2)
    assert is_normal(s3, subgroup_generated(s3, [s3.identity]))
    with pytest.raises(NotSubgroup):
        is_normal(s3, d30)


def test_normal_closure():
    s3 = realize_text("S(3)")
    three = next(x for x in s3 if x.order() == 3)
    assert normal_closure(s3, [three]).order == 3
    assert normal_closure(s3, [s3.identity]).order == 1
    d30 = realize_text("D(30)")
    refl = next(x for x in d30 if x.order() == 2)
    assert normal_closure(d30, [refl]).order == 30


def test_quotient_basics():
    d30 = realize_text("D(30)")
    N = next(N for N in normal_subgroups(d30) if N.order == 5)
    Q, table = quotient_group(d30, N)
    assert Q.order == 6
    assert table.index == 6
    assert all(len(c) == 5 for c in table.cosets)
    assert sorted({table.point_of[x] for x in d30}) == list(range(6))
    # identity coset sits at point 0
    assert d30.identity in table.cosets[0]

    G_over_G = quotient_group(d30, d30)[0]
    assert G_over_G.order == 1

    triv = next(N for N in normal_subgroups(d30) if N.order == 1)
    full, _ = quotient_group(d30, triv)
    assert full.order == d30.order

    s3 = realize_text("S(3)")
    c2 = subgroup_generated(s3, [next(x for x in s3 if x.order() == 2)])
    with pytest.raises(NotNormal):
        quotient_group(s3, c2)


def test_quotient_order_multiplies():
    for text in ["D(30)", "Q(16)", "S(4)"]:
        G = realize_text(text)
        for N in normal_subgroups(G):
            Q, _ = quotient_group(G, N)
            assert Q.order * N.order == G.order


def test_quotient_by_trivial_preserves_order_and_eta():
    from maxcyc import eta

    for text in ["S(4)", "D(30)", "Q(16)", "Dic12"]:
        G = realize_text(text)
        triv = subgroup_generated(G, [G.identity])
        Q, _ = quotient_group(G, triv)
        assert Q.order == G.order
        assert eta(Q).eta == eta(G).eta


def test_closures_contain_their_seeds():
    G = realize_text("S(4)")
    seeds = [list(G.element_list)[5:8], [next(x for x in G if x.order() == 4)]]
    for seed in seeds:
        H = subgroup_generated(G, seed)
        assert set(seed) <= H.elements
        assert all(a * b in H.elements for a in H.elements for b in H.elements)
        K = normal_closure(G, seed)
        assert set(seed) <= K.elements
        assert is_normal(G, K)


def test_center():
    assert center(realize_text("S(3)")).order == 1
    abelian = realize_text("C(12)")
    assert center(abelian).order == 12
    assert center(realize_text("Dic12")).order == 2
    assert center(realize_text("Q(8)")).order == 2


def test_derived_subgroup():
    s3 = realize_text("S(3)")
    assert derived_subgroup(s3).order == 3
    assert derived_subgroup(realize_text("C(12)")).order == 1
    assert derived_subgroup(realize_text("A(5)")).order == 60
    assert derived_subgroup(realize_text("Dic12")).order == 3


@pytest.mark.parametrize(
    "text, orders",
    [
        ("S(3)", [1, 3, 6]),
        ("D(30)", [1, 3, 5, 15, 30]),
        ("EA(3,2)", [1, 3, 3, 3, 3, 9]),
    ],
)
def test_normal_subgroups_expected_orders(text, orders):
    G = realize_text(text)
    assert [N.order for N in normal_subgroups(G)] == orders


@pytest.mark.parametrize("text", ["S(3)", "D(30)", "EA(3,2)", "Q(8)", "S(4)", "Dic12"])
def test_normal_subgroups_match_exhaustive_oracle(text):
    G = realize_text(text)
    got = {N.elements for N in normal_subgroups(G)}
    assert got == normal_subgroup_element_sets(G)


def test_normal_subgroup_outputs_are_normal_subgroups():
    G = realize_text("S(3) x D(10)")
    for N in normal_subgroups(G):
        assert is_normal(G, N)
        assert N.elements <= G.elements


def test_is_simple_nonabelian_60():
    assert is_simple_nonabelian_60(realize_text("A(5)"))
    assert not is_simple_nonabelian_60(realize_text("C(60)"))
    assert not is_simple_nonabelian_60(realize_text("S(4)"))
    assert not is_simple_nonabelian_60(realize_text("S(5)"))  # order 120


def test_point_stabilizer():
    d10 = realize_text("D(10)")
    assert point_stabilizer(d10, 0).order == 2
    agl = realize_text("AGL1(5,4)")
    assert point_stabilizer(agl, 0).order == 4


def test_structure_predicates():
    assert is_cyclic(realize_text("C(15)"))
    assert not is_cyclic(realize_text("S(3)"))  # exponent 6 but not cyclic
    assert is_abelian(realize_text("EA(3,2)"))
    assert not is_abelian(realize_text("Q(8)"))
    assert is_p_group(realize_text("Q(16)")) == 2
    assert is_p_group(realize_text("C(12)")) is None
    assert is_nilpotent(realize_text("C(12)"))
    assert is_nilpotent(realize_text("Q(8)"))
    assert not is_nilpotent(realize_text("S(3)"))
    assert is_solvable(realize_text("S(4)"))
    assert not is_solvable(realize_text("A(5)"))
    assert exponent(realize_text("Heis(3)")) == 3
    assert exponent(realize_text("S(3)")) == 6
