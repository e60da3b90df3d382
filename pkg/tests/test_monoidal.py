import pytest

from filcat import (
    FilArrow,
    FilError,
    Filter,
    GroundSet,
    Label,
    Pair,
    PartialFn,
    associator,
    big_f,
    box_arrow,
    box_filter,
    box_member,
    box_partial,
    is_iso,
    left_unitor,
    mk_arrow,
    right_unitor,
    small_h,
    unit_filter,
)
from filcat import oracles
from filcat.factorization import is_e


def ground(*names):
    return GroundSet(Label(n) for n in names)


def filt(g, *names):
    return Filter(g, g.subset(Label(n) for n in names))


S = ground("0", "1")
T = ground("x", "y")


def pairs(*pts):
    return [Pair(Label(a), Label(b)) for a, b in pts]


def test_box_filter_core():
    A = filt(ground("a"), "a")
    X = filt(ground("x"), "x")
    assert box_filter(A, X).core.atoms() == (Pair(Label("a"), Label("x")),)
    assert not box_filter(filt(S), filt(T, "x")).is_proper()
    assert len(box_filter(filt(S, "0", "1"), filt(T, "x", "y")).core) == 4
    # base-generation oracle agrees with the core formula
    F, G = filt(S, "0"), filt(T, "x")
    assert box_filter(F, G) == oracles.box_by_base_generation(F, G)


def test_box_member():
    F = filt(S, "0", "1")
    G = filt(T, "x")
    boxed = box_filter(F, G)
    minimal = boxed.ground.subset(pairs(("0", "x"), ("1", "x")))
    assert box_member(F, G, minimal)
    missing = boxed.ground.subset(pairs(("0", "x")))
    assert not box_member(F, G, missing)
    # per-point supersets of the core fibre stay inside
    super_box = boxed.ground.subset(pairs(("0", "x"), ("0", "y"), ("1", "x")))
    assert box_member(F, G, super_box)
    assert box_member(F, G, super_box) == boxed.contains(super_box)


def test_big_f_small_h():
    F = filt(S, "0")
    G = filt(T, "x")
    boxed = box_filter(F, G)
    minimal = boxed.ground.subset(pairs(("0", "x")))
    assert big_f(F, G, minimal) == S.subset([Label("0")])
    assert big_f(F, G, boxed.ground.full()) == S.full()
    improper = filt(T)
    assert big_f(F, improper, minimal) == S.full()

    table = small_h(F, G, minimal)
    assert set(table) == {Label("0")}
    assert table[Label("0")] == T.subset([Label("x")])
    with pytest.raises(KeyError):
        table[Label("1")]


def test_box_partial():
    ident = box_partial(PartialFn.identity(S), PartialFn.identity(T))
    assert ident == PartialFn.identity(box_filter(filt(S), filt(T)).ground)
    f = PartialFn(S, T, {Label("0"): Label("x")})
    g = PartialFn(ground("a"), ground("p"), {Label("a"): Label("p")})
    boxed = box_partial(f, g)
    assert boxed.graph == {Pair(Label("0"), Label("a")): Pair(Label("x"), Label("p"))}
    assert boxed.dd() == boxed.dom.subset([Pair(Label("0"), Label("a"))])


def test_box_arrow():
    F, G = filt(S, "0"), filt(T, "x")
    ident = box_arrow(FilArrow.identity(F), FilArrow.identity(G))
    assert ident == FilArrow.identity(box_filter(F, G))
    phi = mk_arrow(F, G, PartialFn(S, T, {Label("0"): Label("x")}))
    A, P = filt(ground("a"), "a"), filt(ground("p"), "p")
    psi = mk_arrow(A, P, PartialFn(ground("a"), ground("p"), {Label("a"): Label("p")}))
    boxed = box_arrow(phi, psi)
    assert boxed.table == {Pair(Label("0"), Label("a")): Pair(Label("x"), Label("p"))}
    # equivalent representative gives the same arrow
    phi2 = mk_arrow(F, G, PartialFn(S, T, {Label("0"): Label("x"), Label("1"): Label("y")}))
    assert box_arrow(phi2, psi) == boxed


def test_unit_and_unitors():
    u = unit_filter()
    assert [a.name for a in u.ground.atoms] == ["0"]
    assert u.core == u.ground.full()

    D = filt(S, "0", "1")
    lam = left_unitor(D)
    assert lam.table == {Pair(Label("0"), a): a for a in D.core}
    rho = right_unitor(D)
    assert rho.table == {Pair(a, Label("0")): a for a in D.core}
    assert is_iso(lam) and is_iso(rho)


def test_associator():
    A = filt(ground("a"), "a")
    B = filt(ground("b"), "b")
    C = filt(ground("c"), "c")
    alpha = associator(A, B, C)
    assert is_iso(alpha)
    nested = Pair(Label("a"), Pair(Label("b"), Label("c")))
    flipped = Pair(Pair(Label("a"), Label("b")), Label("c"))
    assert alpha.table == {nested: flipped}
