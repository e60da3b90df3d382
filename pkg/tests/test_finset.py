import pytest
from hypothesis import given, strategies as st

from filcat import (
    FilError,
    GermCode,
    GroundSet,
    Label,
    Pair,
    PartialFn,
    Subset,
    Tag,
    product_ground,
    tagged_ground,
)


def labels(*names):
    return [Label(n) for n in names]


def ground(*names):
    return GroundSet(labels(*names))


# atom strategies: recursive over the variants
atom_strategy = st.recursive(
    st.sampled_from("abcxyz01").map(Label),
    lambda children: st.one_of(
        st.tuples(children, children).map(lambda p: Pair(*p)),
        st.tuples(st.integers(0, 3), children).map(lambda p: Tag(*p)),
    ),
    max_leaves=6,
)


@given(atom_strategy, atom_strategy)
def test_atom_order_trichotomy(a, b):
    assert (a < b) + (b < a) + (a == b) == 1


@given(atom_strategy, atom_strategy, atom_strategy)
def test_atom_order_transitive(a, b, c):
    if a < b and b < c:
        assert a < c


@given(atom_strategy)
def test_atom_order_irreflexive(a):
    assert not a < a


def test_germcode_rejects_duplicate_keys():
    a = Label("a")
    with pytest.raises(FilError):
        GermCode([(a, Label("x")), (a, Label("y"))], [a])


def test_ground_set_sorted_and_distinct():
    g = GroundSet([Label("b"), Label("a")])
    assert [a.name for a in g.atoms] == ["a", "b"]
    with pytest.raises(FilError):
        GroundSet([Label("a"), Label("a")])


def test_subset_algebra():
    S = ground("0", "1", "2")
    d = S.subset(labels("0", "1"))
    e = S.subset(labels("1", "2"))
    assert (d & e).atoms() == (Label("1"),)
    assert len(d | e) == 3
    assert (d - e).atoms() == (Label("0"),)
    assert d.complement().atoms() == (Label("2"),)
    assert S.empty() <= d <= S.full()
    with pytest.raises(FilError):
        d & ground("0", "1").full()


def test_dd_reads_graph_keys():
    S = ground("0", "1")
    T = ground("x")
    f = PartialFn(S, T, {Label("0"): Label("x")})
    assert f.dd() == S.subset([Label("0")])
    assert PartialFn(S, T, {}).dd() == S.empty()
    S3 = ground("0", "1", "2")
    total = PartialFn(S3, T, {a: Label("x") for a in S3})
    assert total.dd() == S3.full()


def test_range_is_value_set():
    S = ground("0", "1")
    T = ground("x", "y")
    f = PartialFn(S, T, {Label("0"): Label("x"), Label("1"): Label("x")})
    assert f.range() == T.subset([Label("x")])
    assert PartialFn(S, T, {}).range() == T.empty()
    g = PartialFn(S, T, {Label("0"): Label("x"), Label("1"): Label("y")})
    assert g.range() == T.full()


def test_compose_drops_points_leaving_dd():
    S = ground("0", "1")
    T = ground("x", "y")
    W = ground("p")
    f = PartialFn(S, T, {Label("0"): Label("x")})
    g = PartialFn(T, W, {Label("x"): Label("p")})
    assert g.compose(f).graph == {Label("0"): Label("p")}

    f2 = PartialFn(S, T, {Label("0"): Label("x"), Label("1"): Label("y")})
    comp = g.compose(f2)
    assert comp.graph == {Label("0"): Label("p")}
    # dd(g∘f) = f^-1(dd g), checked by direct enumeration
    assert comp.dd() == f2.preimage(g.dd())

    empty = PartialFn(S, T, {})
    assert g.compose(empty).graph == {}

    with pytest.raises(FilError):
        f.compose(g)


def test_restrict():
    S = ground("0", "1")
    T = ground("x", "y")
    f = PartialFn(S, T, {Label("0"): Label("x"), Label("1"): Label("y")})
    assert f.restrict(S.subset([Label("0")])).graph == {Label("0"): Label("x")}
    assert f.restrict(S.full()) == f
    assert f.restrict(S.empty()).graph == {}


def test_image():
    S = ground("0", "1", "2")
    T = ground("x", "y")
    f = PartialFn(S, T, {Label("0"): Label("x"), Label("1"): Label("x"), Label("2"): Label("y")})
    assert f.image(S.subset(labels("0", "2"))) == T.full()
    assert f.image(S.empty()) == T.empty()
    g = PartialFn(S, T, {Label("0"): Label("x")})
    assert g.image(S.subset([Label("1")])) == T.empty()


def test_preimage():
    S = ground("0", "1")
    T = ground("x", "y")
    f = PartialFn(S, T, {Label("0"): Label("x"), Label("1"): Label("y")})
    assert f.preimage(T.subset([Label("x")])) == S.subset([Label("0")])
    assert f.preimage(T.full()) == f.dd()
    g = PartialFn(S, T, {Label("0"): Label("x")})
    assert g.preimage(T.subset([Label("y")])) == S.empty()


@given(st.data())
def test_image_preimage_galois(data):
    S = ground("0", "1", "2")
    T = ground("x", "y")
    graph = {}
    for a in S:
        choice = data.draw(st.sampled_from(["x", "y", None]))
        if choice:
            graph[a] = Label(choice)
    f = PartialFn(S, T, graph)
    D = S.subset(data.draw(st.sets(st.sampled_from(labels("0", "1", "2")))))
    Dp = T.subset(data.draw(st.sets(st.sampled_from(labels("x", "y")))))
    lhs = f.image(D) <= Dp
    rhs = D <= f.dd().complement() | f.preimage(Dp)
    assert lhs == rhs


def test_product_and_tagged_grounds():
    S = ground("0", "1")
    T = ground("x")
    prod = product_ground(S, T)
    assert len(prod) == 2
    assert Pair(Label("0"), Label("x")) in prod
    tagged = tagged_ground((S, T))
    assert len(tagged) == 3
    assert Tag(0, Label("0")) in tagged
    assert Tag(1, Label("x")) in tagged
