import pytest

from filcat import (
    FilArrow,
    FilError,
    Filter,
    GroundSet,
    Label,
    Pair,
    PartialFn,
    box_filter,
    compose,
    curry,
    decode_germ,
    encode_germ,
    epsilon_counit,
    eta_unit,
    hom_action_left,
    hom_action_right,
    hom_set,
    internal_hom,
    mk_arrow,
    uncurry,
)


def ground(*names):
    return GroundSet(Label(n) for n in names)


def filt(g, *names):
    return Filter(g, g.subset(Label(n) for n in names))


S = ground("0", "1")
T = ground("x", "y")


def test_internal_hom_shape():
    H = filt(S, "0", "1")
    G = filt(T, "x")
    hom = internal_hom(G, H)
    assert len(hom.filter.ground) == 4
    assert len(hom.filter.core) == 1
    # the core is the hom-set, elementwise
    assert set(hom.filter.core.atoms()) == {encode_germ(a.germ) for a in hom_set(H, G)}

    improper_h = internal_hom(G, filt(S))
    assert len(improper_h.filter.ground) == 1
    assert improper_h.filter.core == improper_h.filter.ground.full()

    improper_g = internal_hom(filt(T), H)
    assert not improper_g.filter.is_proper()


def test_size_cap():
    big = GroundSet(Label(str(i)) for i in range(8))
    H = Filter(big, big.full())
    with pytest.raises(FilError) as err:
        internal_hom(Filter(big, big.full()), H, size_cap=4096)
    assert err.value.code == "E_SIZE_CAP"


def test_hom_action_left():
    H = filt(S, "0")
    G = filt(T, "x")
    ident = hom_action_left(FilArrow.identity(G), H)
    assert ident == FilArrow.identity(internal_hom(G, H).filter)

    G2 = filt(T, "x", "y")
    collapse = mk_arrow(G2, G, PartialFn(T, T, {Label("x"): Label("x"), Label("y"): Label("x")}))
    action = hom_action_left(collapse, H)
    assert action.source == internal_hom(G2, H).filter
    assert action.target == internal_hom(G, H).filter
    for code, out in action.table.items():
        kappa = decode_germ(code, T)
        composed = {k: collapse.table[v] for k, v in kappa.table.items()}
        assert dict(out.entries) == composed


def test_hom_action_right():
    G = filt(T, "x", "y")
    H = filt(S, "0", "1")
    ident = hom_action_right(FilArrow.identity(H), G)
    assert ident == FilArrow.identity(internal_hom(G, H).filter)

    One = ground("z")
    H1 = filt(One, "z")
    rho = mk_arrow(H1, H, PartialFn(One, S, {Label("z"): Label("0")}))
    action = hom_action_right(rho, G)
    assert action.source == internal_hom(G, H).filter
    assert action.target == internal_hom(G, H1).filter
    for code, out in action.table.items():
        kappa = decode_germ(code, T)
        assert dict(out.entries) == {Label("z"): kappa.table[Label("0")]}


def test_curry_uncurry_round_trip():
    F = filt(S, "0", "1")
    H = filt(ground("w"), "w")
    G = filt(T, "x", "y")
    boxed = box_filter(F, H)
    hom = internal_hom(G, H)
    for kappa in hom_set(boxed, G):
        transposed = curry(kappa, F, H)
        assert transposed.source == F and transposed.target == hom.filter
        assert uncurry(transposed, hom) == kappa
    for rho in hom_set(F, hom.filter):
        assert curry(uncurry(rho, hom), F, H) == rho


def test_curry_constant():
    F = filt(S, "0")
    H = filt(ground("w"), "w")
    G = filt(T, "x")
    boxed = box_filter(F, H)
    table = {p: Label("x") for p in boxed.core}
    kappa = mk_arrow(boxed, G, PartialFn(boxed.ground, T, table))
    rho = curry(kappa, F, H)
    code = rho.table[Label("0")]
    assert dict(code.entries) == {Label("w"): Label("x")}


def test_unit_counit():
    F = filt(S, "0")
    H = filt(ground("w"), "w")
    eta = eta_unit(F, H)
    code = eta.table[Label("0")]
    assert dict(code.entries) == {Label("w"): Pair(Label("0"), Label("w"))}

    G = filt(T, "x", "y")
    eps = epsilon_counit(G, H)
    for pair, value in eps.table.items():
        kappa = decode_germ(pair.left, T)
        assert value == kappa.table[pair.right]

    # triangle instance: counit after boxed unit is the identity
    from filcat import box_arrow

    boxed = box_filter(F, H)
    lhs = compose(
        epsilon_counit(boxed, H),
        box_arrow(eta_unit(F, H), FilArrow.identity(H)),
    )
    assert lhs == FilArrow.identity(boxed)

    # and curry of the evaluation germ is the identity-shaped arrow
    hom = internal_hom(G, H)
    assert curry(epsilon_counit(G, H), hom.filter, H) == FilArrow.identity(hom.filter)


def test_uncurry_validates_target():
    F = filt(S, "0")
    H = filt(ground("w"), "w")
    G = filt(T, "x")
    hom = internal_hom(G, H)
    other = internal_hom(filt(T, "x", "y"), H)
    rho = hom_set(F, other.filter)[0]
    with pytest.raises(FilError):
        uncurry(rho, hom)
