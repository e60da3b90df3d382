import pytest

from filcat import (
    FilArrow,
    FilError,
    Filter,
    GroundSet,
    Label,
    Pair,
    PartialFn,
    Tag,
    compose,
    coproduct_fil,
    core_adjunction_witness,
    core_of,
    core_of_arrow,
    equalizer,
    is_e,
    is_iso,
    is_m,
    m_subobject_poset,
    mk_arrow,
    product_fil,
    pullback_cospan,
    pullback_monos,
    unit_l,
)
from filcat.monoidal import unit_filter


def ground(*names):
    return GroundSet(Label(n) for n in names)


def filt(g, *names):
    return Filter(g, g.subset(Label(n) for n in names))


S = ground("0", "1")
S3 = ground("0", "1", "2")
T = ground("x", "y")


def arrow(src, tgt, **table):
    f = PartialFn(src.ground, tgt.ground, {Label(k): Label(v) for k, v in table.items()})
    return mk_arrow(src, tgt, f)


def test_equalizer():
    F = filt(S, "0", "1")
    G = filt(T, "x", "y")
    alpha = arrow(F, G, **{"0": "x", "1": "x"})
    beta = arrow(F, G, **{"0": "x", "1": "y"})
    eq, incl = equalizer(alpha, beta)
    assert eq == filt(S, "0")
    assert compose(alpha, incl) == compose(beta, incl)

    same, incl2 = equalizer(alpha, alpha)
    assert same == F and is_iso(incl2)

    gamma = arrow(F, G, **{"0": "y", "1": "y"})
    nothing, _ = equalizer(alpha, gamma)
    assert not nothing.is_proper()

    with pytest.raises(FilError):
        equalizer(alpha, arrow(filt(S, "0"), G, **{"0": "x"}))


def test_product():
    A = filt(ground("a"), "a")
    X = filt(ground("x"), "x")
    prod, (p1, p2) = product_fil([A, X])
    assert prod.core.atoms() == (Pair(Label("a"), Label("x")),)
    assert p1.target == A and p2.target == X

    terminal, legs = product_fil([])
    assert terminal == unit_filter() and legs == []

    improper = filt(T)
    prod2, _ = product_fil([A, improper])
    assert not prod2.is_proper()

    triple, legs3 = product_fil([A, X, A])
    assert len(legs3) == 3
    assert len(triple.core) == 1


def test_pullback_monos():
    F = filt(S3, "0", "1", "2")
    m1 = m_subobject_poset(F).from_subfilter(filt(S3, "0", "1"))
    m2 = m_subobject_poset(F).from_subfilter(filt(S3, "1", "2"))
    apex, legs = pullback_monos(F, [m1, m2])
    assert apex == filt(S3, "1")
    for m, leg in zip([m1, m2], legs):
        assert compose(m, leg) == m_subobject_poset(F).from_subfilter(apex)

    single, (leg,) = pullback_monos(F, [m1])
    assert single == m1.germ.push(m1.source)

    m3 = m_subobject_poset(F).from_subfilter(filt(S3, "0"))
    m4 = m_subobject_poset(F).from_subfilter(filt(S3, "2"))
    disjoint, _ = pullback_monos(F, [m3, m4])
    assert not disjoint.is_proper()

    with pytest.raises(FilError):
        pullback_monos(F, [arrow(filt(S, "0", "1"), F, **{"0": "0", "1": "0"})])


def test_pullback_cospan():
    Tx = ground("x")
    phi = arrow(filt(S, "0", "1"), filt(Tx, "x"), **{"0": "x", "1": "x"})
    psi = arrow(filt(ground("a"), "a"), filt(Tx, "x"), a="x")
    P, p1, p2 = pullback_cospan(phi, psi)
    assert len(P.core) == 2
    assert compose(phi, p1) == compose(psi, p2)
    # pulling the epi phi back along psi lands in E again
    assert is_e(phi) and is_e(p2)

    ident = FilArrow.identity(phi.target)
    P2, q1, q2 = pullback_cospan(phi, ident)
    assert is_iso(q1)

    with pytest.raises(FilError):
        pullback_cospan(phi, arrow(filt(S, "0"), filt(T, "x"), **{"0": "x"}))


def test_coproduct():
    A = filt(ground("0"), "0")
    X = filt(ground("x"), "x")
    cop, (i1, i2) = coproduct_fil([A, X])
    assert set(cop.core.atoms()) == {Tag(0, Label("0")), Tag(1, Label("x"))}
    assert i1.source == A and i2.source == X

    single, (inj,) = coproduct_fil([A])
    assert is_iso(inj)

    both, _ = coproduct_fil([filt(S), filt(T)])
    assert not both.is_proper()


def test_cores():
    F = filt(S, "0")
    assert core_of(F) == F.core
    ident = FilArrow.identity(F)
    assert core_of_arrow(ident) == {Label("0"): Label("0")}
    collapse = arrow(filt(S, "0", "1"), filt(T, "x"), **{"0": "x", "1": "x"})
    assert core_of_arrow(collapse) == {Label("0"): Label("x"), Label("1"): Label("x")}


def test_unit_l():
    one = ground("0")
    assert unit_l(one) == filt(one, "0")
    empty = GroundSet([])
    assert not unit_l(empty).is_proper()
    assert len(unit_l(S3).core) == 3


def test_core_adjunction_witness():
    one = ground("s")
    G = filt(T, "x", "y")
    witness = core_adjunction_witness(one, G)
    homs = witness.hom_side()
    funcs = witness.function_side()
    assert len(homs) == len(funcs) == 2
    for phi in homs:
        assert witness.function_to_arrow(witness.arrow_to_function(phi)) == phi

    empty_side = core_adjunction_witness(one, filt(T))
    assert empty_side.hom_side() == [] and empty_side.function_side() == []

    nothing = GroundSet([])
    singletons = core_adjunction_witness(nothing, filt(T))
    assert len(singletons.hom_side()) == len(singletons.function_side()) == 1
