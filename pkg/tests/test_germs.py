import pytest

from filcat import (
    FilArrow,
    FilError,
    Filter,
    Germ,
    GroundSet,
    Label,
    PartialFn,
    compose,
    decode_germ,
    encode_germ,
    enum_admissible_germs,
    germ_equiv,
    germ_of,
    hom_set,
    is_admissible,
    is_local,
    mk_arrow,
)
from filcat import oracles


def ground(*names):
    return GroundSet(Label(n) for n in names)


def filt(g, *names):
    return Filter(g, g.subset(Label(n) for n in names))


S = ground("0", "1")
T = ground("x", "y")
W = ground("p", "q")


def pf(dom, cod, **table):
    return PartialFn(dom, cod, {Label(k): Label(v) for k, v in table.items()})


def test_admissible():
    f = PartialFn(S, T, {Label("0"): Label("x"), Label("1"): Label("y")})
    assert is_admissible(f, filt(S, "0"))
    empty = PartialFn(S, T, {})
    assert not is_admissible(empty, filt(S, "0"))
    assert is_admissible(empty, filt(S))


def test_local():
    f = pf(S, T, **{"0": "x", "1": "y"})
    assert is_local(f, filt(S, "0"), filt(T, "x"))
    assert not is_local(f, filt(S, "0"), filt(T, "y"))
    assert is_local(f, filt(S), filt(T, "y"))
    # fast path agrees with the member-quantified definition
    assert oracles.local_quantified(f, filt(S, "0"), filt(T, "x"))


def test_germ_equiv():
    f = pf(S, T, **{"0": "x", "1": "x"})
    g = pf(S, T, **{"0": "x", "1": "y"})
    assert germ_equiv(f, g, filt(S, "0"))
    assert not germ_equiv(f, g, filt(S, "0", "1"))
    assert germ_equiv(f, f, filt(S, "0", "1"))
    assert germ_equiv(f, g, filt(S, "0")) == oracles.germ_equiv_quantified(f, g, filt(S, "0"))


def test_germ_of():
    f = pf(S, T, **{"0": "x", "1": "y"})
    germ = germ_of(f, filt(S, "0"))
    assert germ.table == {Label("0"): Label("x")}
    assert germ_of(f, filt(S)).table == {}
    g = pf(S, T, **{"0": "x"})
    assert germ_of(f, filt(S, "0")) == germ_of(g, filt(S, "0"))
    with pytest.raises(FilError) as err:
        germ_of(PartialFn(S, T, {}), filt(S, "0"))
    assert err.value.code == "E_ADMISSIBLE"


def test_mk_arrow():
    ident = mk_arrow(filt(S, "0"), filt(S, "0"), PartialFn.identity(S))
    assert ident == FilArrow.identity(filt(S, "0"))

    S3 = ground("0", "1", "2")
    f = PartialFn(S3, T, {Label("0"): Label("x"), Label("1"): Label("y"), Label("2"): Label("y")})
    arrow = mk_arrow(filt(S3, "0"), filt(T, "x"), f)
    assert arrow.table == {Label("0"): Label("x")}

    with pytest.raises(FilError) as err:
        mk_arrow(filt(S, "0"), filt(T), pf(S, T, **{"0": "x"}))
    assert err.value.code == "E_LOCALITY"
    with pytest.raises(FilError) as err:
        mk_arrow(filt(S, "0"), filt(T, "x"), PartialFn(S, T, {}))
    assert err.value.code == "E_ADMISSIBLE"


def test_compose():
    F = filt(S, "0")
    G = filt(T, "x")
    H = filt(W, "p")
    phi = mk_arrow(F, G, pf(S, T, **{"0": "x"}))
    psi = mk_arrow(G, H, pf(T, W, **{"x": "p"}))
    comp = compose(psi, phi)
    assert comp.table == {Label("0"): Label("p")}
    assert compose(phi, FilArrow.identity(F)) == phi
    assert compose(FilArrow.identity(G), phi) == phi
    with pytest.raises(FilError):
        compose(phi, psi)
    # composing arbitrary admissible representatives gives the same arrow
    phi2 = mk_arrow(F, G, pf(S, T, **{"0": "x", "1": "y"}))
    assert phi2 == phi
    # arrows into an improper target only exist from improper sources
    empty_arrow = mk_arrow(filt(S), filt(T), PartialFn(S, T, {}))
    assert compose(mk_arrow(filt(T), filt(W), PartialFn(T, W, {})), empty_arrow).table == {}


def test_push_pull_restrict():
    germ = germ_of(pf(S, T, **{"0": "x", "1": "x"}), filt(S, "0", "1"))
    assert germ.push(filt(S, "0", "1")) == filt(T, "x")
    assert germ.push(filt(S)) == filt(T)
    with pytest.raises(FilError):
        germ_of(pf(S, T, **{"0": "x"}), filt(S, "0")).push(filt(S, "0", "1"))

    germ2 = germ_of(pf(S, T, **{"0": "x"}), filt(S, "0"))
    assert germ2.pull(filt(T, "x")) == filt(S, "0")
    assert germ2.pull(filt(T)) == filt(S)
    # pull with a representative defined on more points agrees
    bigger = pf(S, T, **{"0": "x", "1": "y"})
    from filcat import meet_filters, pullback

    assert meet_filters([pullback(bigger, filt(T, "x")), filt(S, "0")]) == germ2.pull(filt(T, "x"))

    restricted = germ_of(pf(S, T, **{"0": "x", "1": "y"}), filt(S, "0", "1")).restrict(filt(S, "0"))
    assert restricted.table == {Label("0"): Label("x")}
    full = germ_of(pf(S, T, **{"0": "x", "1": "y"}), filt(S, "0", "1"))
    assert full.restrict(filt(S, "0", "1")) == full
    assert full.restrict(filt(S)).table == {}


def test_hom_set_counts():
    assert len(hom_set(filt(S, "0"), filt(T, "x", "y"))) == 2
    assert len(hom_set(filt(S), filt(T, "x"))) == 1
    assert len(hom_set(filt(S, "0"), filt(T))) == 0
    assert len(hom_set(filt(S, "0", "1"), filt(T, "x", "y"))) == 4


def test_enum_admissible_germs():
    assert len(enum_admissible_germs(filt(S, "0", "1"), T)) == 4
    assert len(enum_admissible_germs(filt(S), T)) == 1
    T3 = ground("x", "y", "z")
    assert len(enum_admissible_germs(filt(S, "0"), T3)) == 3


def test_encode_decode_round_trip():
    for germ in enum_admissible_germs(filt(S, "0", "1"), T):
        code = encode_germ(germ)
        assert decode_germ(code, T) == germ
    # same table over different domain filters encodes differently
    g1 = germ_of(pf(S, T, **{"0": "x", "1": "x"}), filt(S, "0", "1"))
    S3 = ground("0", "1", "2")
    g2 = germ_of(PartialFn(S3, T, {Label("0"): Label("x"), Label("1"): Label("x")}), filt(S3, "0", "1"))
    assert encode_germ(g1) != encode_germ(g2)


def test_germ_table_must_cover_core():
    with pytest.raises(FilError):
        Germ(filt(S, "0", "1"), T, {Label("0"): Label("x")})
