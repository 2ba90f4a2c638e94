import pytest

from maxcyc import (
    ArityError,
    CapExceeded,
    NoSuchNormal,
    ParseError,
    named_normal,
    parse_spec,
    realize_text,
    render,
)
from maxcyc.constructors import (
    Cyclic,
    Dihedral,
    DirectProductSpec,
    ExplicitPerms,
    FrobeniusAGL1,
    Symmetric,
)
from maxcyc.core import center, exponent, is_abelian, is_normal, point_stabilizer
from maxcyc.cyclic import cyclic_subgroups, maximal_cyclic_subgroups
from maxcyc.perm import perm_order


# --- parsing ----------------------------------------------------------------

def test_parse_direct_product():
    spec = parse_spec("S(3) x D(10)")
    assert spec == DirectProductSpec(Symmetric(3), Dihedral(10))


def test_parse_is_whitespace_insensitive():
    assert parse_spec("S(3)xD(10)") == parse_spec("  S( 3 )  x D(10) ")


def test_parse_left_associative():
    spec = parse_spec("C(2) x C(3) x C(5)")
    assert spec == DirectProductSpec(
        DirectProductSpec(Cyclic(2), Cyclic(3)), Cyclic(5)
    )


def test_parse_agl1():
    assert parse_spec("AGL1(9,2)") == FrobeniusAGL1(9, 2)


def test_parse_explicit_perms():
    spec = parse_spec("Perm(7; (0 1 2)(3 4), (5 6))")
    assert spec == ExplicitPerms(7, (((0, 1, 2), (3, 4)), ((5, 6),)))


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse_spec("C(6")
    assert info.value.position == 3
    with pytest.raises(ParseError) as info:
        parse_spec("C(6) y D(8)")
    assert info.value.position == 5
    with pytest.raises(ParseError):
        parse_spec("")


@pytest.mark.parametrize(
    "text",
    ["D(7)", "EA(4,2)", "EA(3,0)", "Heis(2)", "Q(12)", "Q(4)", "W(6)",
     "AGL1(10,3)", "AGL1(7,4)", "AGL1(9,4)", "AGL1(130,1)", "C(0)",
     "Perm(3; (0 5))", "EA(3)", "C(2,3)"],
)
def test_bad_parameters_raise_arity_error(text):
    with pytest.raises(ArityError):
        parse_spec(text)


@pytest.mark.parametrize(
    "text",
    ["C(6)", "D(30)", "S(4)", "A(5)", "EA(3,2)", "Heis(3)", "Q(16)", "W(3)",
     "AGL1(9,2)", "Dic12", "SG72_50", "M16", "S(3) x D(10)",
     "C(2) x C(3) x C(5)", "Perm(7; (0 1 2)(3 4), (5 6))"],
)
def test_render_parse_roundtrip(text):
    spec = parse_spec(text)
    assert parse_spec(render(spec)) == spec


# --- realization ------------------------------------------------------------

@pytest.mark.parametrize(
    "text, order, degree",
    [
        ("C(1)", 1, 1),
        ("C(6)", 6, 6),
        ("D(2)", 2, 2),
        ("D(4)", 4, 4),
        ("D(6)", 6, 3),
        ("D(30)", 30, 15),
        ("S(1)", 1, 1),
        ("S(2)", 2, 2),
        ("S(4)", 24, 4),
        ("A(3)", 3, 3),
        ("A(4)", 12, 4),
        ("A(5)", 60, 5),
        ("EA(2,3)", 8, 6),
        ("EA(5,2)", 25, 10),
        ("Heis(3)", 27, 9),
        ("Heis(5)", 125, 25),
        ("Q(8)", 8, 8),
        ("Q(16)", 16, 16),
        ("W(3)", 81, 9),
        ("AGL1(5,4)", 20, 5),
        ("AGL1(9,2)", 18, 9),
        ("AGL1(2,1)", 2, 2),
        ("Dic12", 12, 7),
        ("SG72_50", 72, 9),
        ("M16", 16, 8),
        ("S(3) x D(10)", 60, 8),
    ],
)
def test_realize_orders_and_degrees(text, order, degree):
    G = realize_text(text)
    assert (G.order, G.degree) == (order, degree)


def test_realize_respects_caps():
    with pytest.raises(CapExceeded):
        realize_text("S(4)", order_cap=10)
    with pytest.raises(CapExceeded):
        realize_text("W(5)", degree_cap=20)
    assert realize_text("W(5)").order == 5 ** 6


def test_explicit_perm_realization():
    G = realize_text("Perm(5; (0 1 2 3 4), (1 4)(2 3))")
    assert G.order == 10


def test_heisenberg_has_exponent_p():
    for p in (3, 5):
        G = realize_text(f"Heis({p})")
        assert exponent(G) == p
        assert not is_abelian(G)


def test_wreath_structure():
    G = realize_text("W(3)")
    assert G.order == 3 ** 4
    assert exponent(G) == 9


def test_agl1_frobenius_property():
    # the stabilizer of 0 meets each of its distinct conjugates trivially
    for text, stab_order in [("AGL1(5,4)", 4), ("AGL1(7,3)", 3), ("AGL1(9,2)", 2)]:
        G = realize_text(text)
        H = point_stabilizer(G, 0)
        assert H.order == stab_order
        for g in G:
            if g in H.elements:
                continue
            conj = {h.conjugate_by(g) for h in H.elements}
            assert len(conj & H.elements) == 1


def test_agl1_ring_kernel_is_cyclic_of_order_9():
    G = realize_text("AGL1(9,2)")
    translations = [x for x in G if all(x.images[i] == (i + x.images[0]) % 9 for i in range(9))]
    assert len(translations) == 9
    assert max(perm_order(t) for t in translations) == 9


def test_generalized_quaternion_structure():
    q16 = realize_text("Q(16)")
    assert center(q16).order == 2
    # unique involution forces generalized-quaternion type at order 16
    assert sum(1 for x in q16 if perm_order(x) == 2) == 1


def test_m16_has_normal_maximal_cyclic_of_order_8():
    G = realize_text("M16")
    eights = [s for s in maximal_cyclic_subgroups(G) if s.order == 8]
    assert eights
    normal_eights = [
        s for s in eights
        if all(y.conjugate_by(g) in s.elements for g in G.generators for y in s.elements)
    ]
    assert normal_eights


def test_sg72_50_fingerprint():
    G = realize_text("SG72_50")
    assert (G.order, G.degree) == (72, 9)
    from maxcyc.cyclic import eta

    rep = eta(G)
    assert rep.eta == 3
    assert sorted(o for o, _ in rep.class_reps) == [4, 6, 6]


def test_elem_abelian_counts():
    G = realize_text("EA(3,2)")
    assert len(cyclic_subgroups(G)) == 5
    assert is_abelian(G)


def test_named_normal():
    d30 = realize_text("D(30)")
    N = named_normal(d30, 5, 0)
    assert N.order == 5
    assert is_normal(d30, N)
    assert named_normal(d30, 30, 0).order == d30.order
    with pytest.raises(NoSuchNormal):
        named_normal(d30, 7, 0)
    with pytest.raises(NoSuchNormal):
        named_normal(d30, 5, 1)
