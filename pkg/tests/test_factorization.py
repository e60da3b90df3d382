import pytest

from filcat import (
    FilArrow,
    FilError,
    Filter,
    GroundSet,
    Label,
    PartialFn,
    compose,
    diagonal_fill,
    factor,
    inverse,
    is_e,
    is_epi,
    is_iso,
    is_m,
    is_monic,
    m_subobject_poset,
    mk_arrow,
)
from filcat import oracles


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


def test_is_e():
    onto = arrow(filt(S, "0", "1"), filt(T, "x", "y"), **{"0": "x", "1": "y"})
    assert is_e(onto)
    not_onto = arrow(filt(S, "0"), filt(T, "x", "y"), **{"0": "x"})
    assert not is_e(not_onto)
    empty = mk_arrow(filt(S), filt(T), PartialFn(S, T, {}))
    assert is_e(empty)


def test_is_m():
    assert is_m(arrow(filt(S, "0", "1"), filt(T, "x", "y"), **{"0": "x", "1": "y"}))
    assert not is_m(arrow(filt(S, "0", "1"), filt(T, "x"), **{"0": "x", "1": "x"}))
    assert is_m(mk_arrow(filt(S), filt(T), PartialFn(S, T, {})))


def test_factor():
    phi = arrow(filt(S3, "0", "1"), filt(T, "x", "y"), **{"0": "x", "1": "x", "2": "y"})
    pair = factor(phi)
    assert pair.mid == filt(T, "x")
    assert pair.epi_part.table == {Label("0"): Label("x"), Label("1"): Label("x")}
    assert pair.mono_part.table == {Label("x"): Label("x")}
    assert is_e(pair.epi_part) and is_m(pair.mono_part)
    assert compose(pair.mono_part, pair.epi_part) == phi

    already_m = arrow(filt(S, "0"), filt(T, "x", "y"), **{"0": "x"})
    assert is_iso(factor(already_m).epi_part)
    already_e = arrow(filt(S, "0", "1"), filt(T, "x"), **{"0": "x", "1": "x"})
    assert is_iso(factor(already_e).mono_part)


def test_epi_monic_against_brute_force():
    test_filters = oracles.test_filters_up_to(4)
    not_epi = arrow(filt(S, "0"), filt(T, "x", "y"), **{"0": "x"})
    assert not is_epi(not_epi)
    assert not oracles.brute_force_epi(not_epi, test_filters)
    not_monic = arrow(filt(S, "0", "1"), filt(T, "x"), **{"0": "x", "1": "x"})
    assert not is_monic(not_monic)
    assert not oracles.brute_force_monic(not_monic, test_filters)
    ident = FilArrow.identity(filt(S, "0", "1"))
    assert is_epi(ident) and is_monic(ident)
    assert oracles.brute_force_epi(ident, test_filters)
    assert oracles.brute_force_monic(ident, test_filters)


def test_iso():
    swap = arrow(filt(S, "0", "1"), filt(T, "x", "y"), **{"0": "y", "1": "x"})
    assert is_iso(swap)
    inv = inverse(swap)
    assert compose(inv, swap) == FilArrow.identity(swap.source)
    assert compose(swap, inv) == FilArrow.identity(swap.target)

    epi = arrow(filt(S, "0", "1"), filt(T, "x"), **{"0": "x", "1": "x"})
    assert is_iso(factor(epi).mono_part)
    assert not is_iso(epi)
    with pytest.raises(FilError):
        inverse(epi)


def test_diagonal_fill():
    phi = arrow(filt(S3, "0", "1"), filt(T, "x", "y"), **{"0": "x", "1": "x", "2": "y"})
    pair = factor(phi)
    delta = diagonal_fill(pair.epi_part, pair.epi_part, pair.mono_part, pair.mono_part)
    assert delta == FilArrow.identity(pair.mid)

    # two factorizations of the same arrow are linked by an isomorphism
    other_mid = filt(T, "x")
    eps2 = FilArrow(pair.epi_part.germ, other_mid)
    delta2 = diagonal_fill(pair.epi_part, eps2, pair.mono_part, arrow(other_mid, phi.target, x="x"))
    assert is_iso(delta2)

    with pytest.raises(FilError) as err:
        diagonal_fill(pair.mono_part, pair.mono_part, pair.mono_part, pair.mono_part)
    assert err.value.code == "E_CLASS"


def test_m_subobject_poset():
    F = filt(S, "0", "1")
    poset = m_subobject_poset(F)
    assert len(poset.representatives) == 4
    assert len(m_subobject_poset(filt(S3)).representatives) == 1
    assert len(m_subobject_poset(filt(S3, "0", "1", "2")).representatives) == 8

    # Z and its inverse are mutually inverse and monotone
    for sub in F.subfilters():
        m = poset.from_subfilter(sub)
        assert poset.to_subfilter(m) == sub
    reps = poset.representatives
    for m in reps:
        for m2 in reps:
            assert poset.leq(m, m2) == poset.to_subfilter(m).leq(poset.to_subfilter(m2))

    with pytest.raises(FilError):
        poset.to_subfilter(arrow(filt(S, "0", "1"), F, **{"0": "0", "1": "0"}))
