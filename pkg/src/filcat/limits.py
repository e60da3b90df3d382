"""Finite limits, coproducts, and the adjunction around the core functor.

Equalizers are subfilters cut out where the two tables agree, products live
on (left-nested) pair grounds with core the rectangle of cores, coproducts
on tagged disjoint unions with core the union of injected cores.  General
cospans are pulled back as an equalizer inside the binary product, mono
families by the lattice meet of their image subfilters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct
from typing import Sequence

from .errors import FilError
from .factorization import is_m
from .filters import Filter, meet_filters
from .finset import GroundSet, Subset, Tag, tagged_ground
from .germs import FilArrow, Germ, compose, hom_set
from .monoidal import box_filter, unit_filter


def equalizer(alpha: FilArrow, beta: FilArrow) -> tuple[Filter, FilArrow]:
    """Largest subfilter on which the two tables agree, with its inclusion."""
    if alpha.source != beta.source or alpha.target != beta.target:
        raise FilError("E_NOT_PARALLEL", "equalizer needs a parallel pair")
    src = alpha.source
    agree = src.ground.subset(a for a in src.core if alpha.table[a] == beta.table[a])
    eq = Filter(src.ground, agree)
    incl = FilArrow(Germ(eq, src.ground, {a: a for a in eq.core}), src)
    return eq, incl


def product_fil(factors: Sequence[Filter]) -> tuple[Filter, list[FilArrow]]:
    """Finite product; n-ary grounds are left-nested binary pair grounds.
    The empty product is the terminal object u."""
    prod, legs = _product_cached(tuple(factors))
    return prod, list(legs)


@lru_cache(maxsize=None)
def _product_cached(factors: tuple[Filter, ...]):
    if not factors:
        return unit_filter(), ()
    if len(factors) == 1:
        return factors[0], (FilArrow.identity(factors[0]),)
    prod, legs = factors[0], [FilArrow.identity(factors[0])]
    for nxt in factors[1:]:
        prod, legs = _binary_product(prod, legs, nxt)
    return prod, tuple(legs)


def _binary_product(left: Filter, left_legs: list[FilArrow], right: Filter):
    # same ground and core as the monoidal product at this finite scale
    prod = box_filter(left, right)
    first = {a: a.left for a in prod.core}
    second = {a: a.right for a in prod.core}
    pi1 = FilArrow(Germ(prod, left.ground, first), left)
    pi2 = FilArrow(Germ(prod, right.ground, second), right)
    return prod, [compose(leg, pi1) for leg in left_legs] + [pi2]


def tuple_arrow(prod: Filter, legs: Sequence[FilArrow], cone: Sequence[FilArrow]) -> FilArrow:
    """Mediating arrow into a product, found by exhaustive search."""
    if len(cone) != len(legs):
        raise FilError("E_ARGS", "cone and product have different arities")
    apex = cone[0].source
    candidates = [
        m
        for m in hom_set(apex, prod)
        if all(compose(leg, m) == c for leg, c in zip(legs, cone))
    ]
    if len(candidates) != 1:
        raise FilError("E_UNIVERSAL", f"expected a unique tupling, found {len(candidates)}")
    return candidates[0]


def pullback_monos(target: Filter, monos: Sequence[FilArrow]) -> tuple[Filter, list[FilArrow]]:
    """Pullback of a family of M-arrows: the meet of their image subfilters."""
    images = []
    for m in monos:
        if m.target != target:
            raise FilError("E_GROUND_MISMATCH", "mono family must share the target")
        if not is_m(m):
            raise FilError("E_NOT_MONO", "pullback_monos needs arrows in M")
        images.append(m.germ.push(m.source))
    if not images:
        raise FilError("E_ARGS", "pullback of an empty mono family is not defined")
    apex = meet_filters(images)
    legs = []
    for m in monos:
        back = {v: k for k, v in m.table.items()}
        legs.append(FilArrow(Germ(apex, m.source.ground, {a: back[a] for a in apex.core}), m.source))
    return apex, legs


@lru_cache(maxsize=None)
def pullback_cospan(phi: FilArrow, psi: FilArrow) -> tuple[Filter, FilArrow, FilArrow]:
    """Pullback of a cospan, built as the equalizer inside the binary product."""
    if phi.target != psi.target:
        raise FilError("E_GROUND_MISMATCH", "cospan arrows must share the target")
    prod, (pi1, pi2) = product_fil([phi.source, psi.source])
    eq, incl = equalizer(compose(phi, pi1), compose(psi, pi2))
    return eq, compose(pi1, incl), compose(pi2, incl)


def coproduct_fil(summands: Sequence[Filter]) -> tuple[Filter, list[FilArrow]]:
    """Coproduct on the tagged disjoint union; core = union of injected cores."""
    grounds = tuple(f.ground for f in summands)
    ground = tagged_ground(grounds)
    core = ground.subset(
        Tag(i, a) for i, f in enumerate(summands) for a in f.core
    )
    cop = Filter(ground, core)
    injections = [
        FilArrow(Germ(f, ground, {a: Tag(i, a) for a in f.core}), cop)
        for i, f in enumerate(summands)
    ]
    return cop, injections


def copair_arrow(cop: Filter, injections: Sequence[FilArrow], cocone: Sequence[FilArrow]) -> FilArrow:
    """Mediating arrow out of a coproduct, found by exhaustive search."""
    if len(cocone) != len(injections):
        raise FilError("E_ARGS", "cocone and coproduct have different arities")
    apex = cocone[0].target
    candidates = [
        m
        for m in hom_set(cop, apex)
        if all(compose(m, inj) == c for inj, c in zip(injections, cocone))
    ]
    if len(candidates) != 1:
        raise FilError("E_UNIVERSAL", f"expected a unique copairing, found {len(candidates)}")
    return candidates[0]


def core_of(filt: Filter) -> Subset:
    return filt.core


def core_of_arrow(arrow: FilArrow) -> dict:
    """The arrow's table as a total function core(source) -> core(target)."""
    return dict(arrow.table)


def unit_l(ground: GroundSet) -> Filter:
    """The principal filter {S}: the value of the left adjoint at a set."""
    return Filter.top(ground)


@dataclass(frozen=True)
class CoreAdjunctionWitness:
    """Explicit bijection between arrows out of {S} and functions S -> core(G)."""

    ground: GroundSet
    target: Filter

    def arrow_to_function(self, arrow: FilArrow) -> dict:
        if arrow.source != unit_l(self.ground) or arrow.target != self.target:
            raise FilError("E_ARGS", "arrow does not belong to this hom-set")
        return dict(arrow.table)

    def function_to_arrow(self, table: dict) -> FilArrow:
        if set(table) != set(self.ground.atoms):
            raise FilError("E_ARGS", "function must be total on the ground set")
        for v in table.values():
            if v not in self.target.core:
                raise FilError("E_ARGS", "function must land in the core of the target")
        return FilArrow(Germ(unit_l(self.ground), self.target.ground, table), self.target)

    def hom_side(self) -> list[FilArrow]:
        return hom_set(unit_l(self.ground), self.target)

    def function_side(self) -> list[dict]:
        atoms = self.ground.atoms
        core = self.target.core.atoms()
        return [dict(zip(atoms, values)) for values in iproduct(core, repeat=len(atoms))]


def core_adjunction_witness(ground: GroundSet, target: Filter) -> CoreAdjunctionWitness:
    return CoreAdjunctionWitness(ground, target)
