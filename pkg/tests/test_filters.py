import pytest

from filcat import (
    FilError,
    Filter,
    FilterBase,
    GroundSet,
    Label,
    PartialFn,
    fg,
    fg_sets,
    join_filters,
    meet_filters,
    pullback,
    pushforward,
)
from filcat import oracles


def ground(*names):
    return GroundSet(Label(n) for n in names)


S3 = ground("0", "1", "2")
S2 = ground("0", "1")
T = ground("x", "y")


def filt(g, *names):
    return Filter(g, g.subset(Label(n) for n in names))


def test_fg_intersects_base():
    # oracle: least up-closed, intersection-closed family over the base
    base = FilterBase(S3, (S3.subset([Label("0"), Label("1")]), S3.subset([Label("1"), Label("2")])))
    assert fg(base) == filt(S3, "1")
    assert fg(base) == oracles.fg_by_enumeration(base)

    assert fg(FilterBase(S3, ())) == filt(S3, "0", "1", "2")
    assert fg(FilterBase(S3, (S3.empty(),))) == filt(S3)


def test_member_is_core_containment():
    F = filt(S3, "1")
    assert F.contains(S3.subset([Label("1"), Label("2")]))
    assert not F.contains(S3.subset([Label("2")]))
    improper = filt(S3)
    assert improper.contains(S3.empty())


def test_leq_by_core_containment():
    # up-set comparison oracle fixes the expected values
    assert filt(S2, "1").leq(filt(S2, "0", "1"))
    assert oracles.leq_by_families(filt(S2, "1"), filt(S2, "0", "1"))
    F = filt(S2, "0")
    assert F.leq(F)
    assert not filt(S2, "0").leq(filt(S2, "1"))
    with pytest.raises(FilError):
        filt(S2, "0").leq(filt(T, "x"))


def test_join_meet():
    F0, F1 = filt(S2, "0"), filt(S2, "1")
    assert join_filters([F0, F1]) == filt(S2, "0", "1")
    assert meet_filters([F0, F1]) == filt(S2)
    assert join_filters([F0, F0]) == F0
    assert join_filters([F0, F1]) == oracles.join_by_families(F0, F1)
    assert meet_filters([F0, F1]) == oracles.meet_by_families(F0, F1)
    with pytest.raises(FilError):
        join_filters([])
    with pytest.raises(FilError):
        join_filters([F0, filt(T, "x")])


def test_subfilters():
    F = filt(S2, "0", "1")
    subs = F.subfilters()
    assert len(subs) == 4
    assert {tuple(s.core.atoms()) for s in subs} == {
        (),
        (Label("0"),),
        (Label("1"),),
        (Label("0"), Label("1")),
    }
    assert filt(S3).subfilters() == [filt(S3)]
    assert len(filt(S3, "0", "1", "2").subfilters()) == 8
    assert set(F.subfilters()) == oracles.subfilters_by_enumeration(F)


def test_pushforward():
    f = PartialFn(S3, T, {Label("0"): Label("x"), Label("1"): Label("x"), Label("2"): Label("y")})
    F = filt(S3, "0", "1")
    assert pushforward(f, F) == filt(T, "x")
    assert pushforward(f, F) == oracles.push_by_family(f, F)
    ident = PartialFn.identity(S3)
    assert pushforward(ident, F) == F
    assert pushforward(f, filt(S3)) == filt(T)


def test_pullback():
    f = PartialFn(S2, T, {Label("0"): Label("x"), Label("1"): Label("y")})
    G = filt(T, "x")
    assert pullback(f, G) == filt(S2, "0")
    assert pullback(f, G) == oracles.pull_by_family(f, G)
    assert pullback(f, filt(T)) == filt(S2)
    empty = PartialFn(S2, T, {})
    assert pullback(empty, filt(T, "x")) == filt(S2)


def test_empty_ground_only_improper():
    empty = GroundSet([])
    only = Filter.improper(empty)
    assert not only.is_proper()
    assert list(only.members()) == [empty.empty()]


def test_fg_sets_helper():
    assert fg_sets(S2, [S2.subset([Label("0")])]) == filt(S2, "0")
