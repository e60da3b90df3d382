"""The monoidal product of filters and its coherence isomorphisms.

The product F box G lives on the pair ground S x T; its members are the
subsets whose fibrewise slices are G-members over an F-member of base
points, and its core is the rectangle core(F) x core(G).  Base generation
over all member/assignment pairs is exponential and is kept in `oracles`.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import FilError
from .filters import Filter
from .finset import GroundSet, Label, Pair, PartialFn, Subset, product_ground, product_subset
from .germs import FilArrow, Germ


@lru_cache(maxsize=None)
def box_filter(left: Filter, right: Filter) -> Filter:
    """Monoidal product: filter on S x T with core = core(left) x core(right)."""
    return Filter(
        product_ground(left.ground, right.ground),
        product_subset(left.core, right.core),
    )


def big_f(left: Filter, right: Filter, X: Subset) -> Subset:
    """Base points whose slice of X is a member of the right filter."""
    ground = product_ground(left.ground, right.ground)
    if X.ground != ground:
        raise FilError("E_GROUND_MISMATCH", "slice query needs a product-ground subset")
    hits = []
    for s in left.ground:
        fibre = right.ground.subset(a.right for a in X.atoms() if a.left == s)
        if right.contains(fibre):
            hits.append(s)
    return left.ground.subset(hits)


def small_h(left: Filter, right: Filter, X: Subset) -> dict:
    """The slice assignment, defined exactly on big_f(left, right, X)."""
    base = big_f(left, right, X)
    return {
        s: right.ground.subset(a.right for a in X.atoms() if a.left == s)
        for s in base
    }


def box_member(left: Filter, right: Filter, X: Subset) -> bool:
    """Membership by the slice condition; agrees with box_filter membership."""
    return left.contains(big_f(left, right, X))


def box_partial(f: PartialFn, g: PartialFn) -> PartialFn:
    """Componentwise partial function with dd = dd(f) x dd(g)."""
    graph = {
        Pair(s, t): Pair(fs, gt)
        for s, fs in f.graph.items()
        for t, gt in g.graph.items()
    }
    return PartialFn(product_ground(f.dom, g.dom), product_ground(f.cod, g.cod), graph)


@lru_cache(maxsize=None)
def box_arrow(phi: FilArrow, psi: FilArrow) -> FilArrow:
    """Pairwise arrow between the product filters; well-defined on germs."""
    source = box_filter(phi.source, psi.source)
    target = box_filter(phi.target, psi.target)
    table = {
        Pair(s, t): Pair(phi.table[s], psi.table[t])
        for s in phi.table
        for t in psi.table
    }
    return FilArrow(Germ(source, target.ground, table), target)


@lru_cache(maxsize=None)
def unit_filter() -> Filter:
    """The unit object u: the filter {{0}} on the one-element ground {0}."""
    ground = GroundSet([Label("0")])
    return Filter(ground, ground.full())


@lru_cache(maxsize=None)
def associator(d1: Filter, d2: Filter, d3: Filter) -> FilArrow:
    """Reassociation d1 box (d2 box d3) -> (d1 box d2) box d3; an isomorphism."""
    source = box_filter(d1, box_filter(d2, d3))
    target = box_filter(box_filter(d1, d2), d3)
    table = {
        a: Pair(Pair(a.left, a.right.left), a.right.right) for a in source.core
    }
    return FilArrow(Germ(source, target.ground, table), target)


@lru_cache(maxsize=None)
def left_unitor(d: Filter) -> FilArrow:
    """u box D -> D by <0, s> -> s; an isomorphism."""
    source = box_filter(unit_filter(), d)
    table = {a: a.right for a in source.core}
    return FilArrow(Germ(source, d.ground, table), d)


@lru_cache(maxsize=None)
def right_unitor(d: Filter) -> FilArrow:
    """D box u -> D by <s, 0> -> s; an isomorphism."""
    source = box_filter(d, unit_filter())
    table = {a: a.left for a in source.core}
    return FilArrow(Germ(source, d.ground, table), d)
