"""Internal hom objects and the currying adjunction.

The hom object G^H is a filter on the set of germs of admissible partial
functions from H into the ground of G, each encoded as a GermCode atom; its
core is exactly the hom-set of arrows H -> G.  Currying sends an arrow out
of a box product to the arrow picking out fibrewise germs, and is a natural
bijection.  Ground sizes grow as |T|^|core H|, so construction is guarded by
a configurable cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import FilError
from .filters import Filter
from .finset import GermCode, GroundSet, Pair
from .germs import FilArrow, Germ, decode_germ, encode_germ, enum_admissible_germs
from .monoidal import box_filter

DEFAULT_SIZE_CAP = 4096


@dataclass(frozen=True)
class HomObject:
    filter: Filter
    source_h: Filter
    target_g: Filter


@lru_cache(maxsize=None)
def internal_hom(target_g: Filter, source_h: Filter, size_cap: int = DEFAULT_SIZE_CAP) -> HomObject:
    """The filter G^H on encoded germs; core = encodings of the local ones."""
    count = len(target_g.ground) ** len(source_h.core)
    if count > size_cap:
        raise FilError(
            "E_SIZE_CAP",
            f"hom object would have {count} ground atoms, above the cap {size_cap}",
        )
    germs = enum_admissible_germs(source_h, target_g.ground)
    codes = {g: encode_germ(g) for g in germs}
    ground = GroundSet(codes.values())
    core = ground.subset(
        codes[g] for g in germs if g.image_core() <= target_g.core
    )
    return HomObject(Filter(ground, core), source_h, target_g)


@lru_cache(maxsize=None)
def hom_action_left(gamma: FilArrow, source_h: Filter, size_cap: int = DEFAULT_SIZE_CAP) -> FilArrow:
    """Post-composition G^H -> G'^H induced by gamma: G -> G'."""
    dom = internal_hom(gamma.source, source_h, size_cap)
    cod = internal_hom(gamma.target, source_h, size_cap)
    table = {}
    for code in dom.filter.core:
        kappa = decode_germ(code, gamma.source.ground)
        composed = {k: gamma.table[v] for k, v in kappa.table.items()}
        table[code] = encode_germ(Germ(source_h, gamma.target.ground, composed))
    return FilArrow(Germ(dom.filter, cod.filter.ground, table), cod.filter)


@lru_cache(maxsize=None)
def hom_action_right(rho: FilArrow, target_g: Filter, size_cap: int = DEFAULT_SIZE_CAP) -> FilArrow:
    """Pre-composition G^H -> G^H' induced by rho: H' -> H (contravariant)."""
    dom = internal_hom(target_g, rho.target, size_cap)
    cod = internal_hom(target_g, rho.source, size_cap)
    table = {}
    for code in dom.filter.core:
        kappa = decode_germ(code, target_g.ground)
        composed = {k: kappa.table[v] for k, v in rho.table.items()}
        table[code] = encode_germ(Germ(rho.source, target_g.ground, composed))
    return FilArrow(Germ(dom.filter, cod.filter.ground, table), cod.filter)


def curry(kappa: FilArrow, left: Filter, right: Filter, size_cap: int = DEFAULT_SIZE_CAP) -> FilArrow:
    """Transpose an arrow (left box right) -> G into left -> G^right."""
    if kappa.source != box_filter(left, right):
        raise FilError("E_ARGS", "arrow is not out of the box product of the given filters")
    hom = internal_hom(kappa.target, right, size_cap)
    table = {}
    for s in left.core:
        fibre = {w: kappa.table[Pair(s, w)] for w in right.core}
        table[s] = encode_germ(Germ(right, kappa.target.ground, fibre))
    return FilArrow(Germ(left, hom.filter.ground, table), hom.filter)


def uncurry(rho: FilArrow, hom: HomObject) -> FilArrow:
    """Transpose an arrow left -> G^H back to (left box H) -> G."""
    if rho.target != hom.filter:
        raise FilError("E_ARGS", "arrow does not land in the given hom object")
    left = rho.source
    source = box_filter(left, hom.source_h)
    table = {}
    for pair in source.core:
        code = rho.table[pair.left]
        table[pair] = dict(code.entries)[pair.right]
    return FilArrow(Germ(source, hom.target_g.ground, table), hom.target_g)


def eta_unit(left: Filter, right: Filter, size_cap: int = DEFAULT_SIZE_CAP) -> FilArrow:
    """Adjunction unit F -> (F box H)^H: s goes to the germ of w -> <s, w>."""
    boxed = box_filter(left, right)
    hom = internal_hom(boxed, right, size_cap)
    table = {}
    for s in left.core:
        fibre = {w: Pair(s, w) for w in right.core}
        table[s] = encode_germ(Germ(right, boxed.ground, fibre))
    return FilArrow(Germ(left, hom.filter.ground, table), hom.filter)


def epsilon_counit(target_g: Filter, source_h: Filter, size_cap: int = DEFAULT_SIZE_CAP) -> FilArrow:
    """Adjunction counit G^H box H -> G: evaluate the encoded germ."""
    hom = internal_hom(target_g, source_h, size_cap)
    source = box_filter(hom.filter, source_h)
    table = {}
    for pair in source.core:
        code: GermCode = pair.left
        table[pair] = dict(code.entries)[pair.right]
    return FilArrow(Germ(source, target_g.ground, table), target_g)
