"""Paper-literal reference implementations.

Everything here recomputes a construction from its base/quantifier
definition rather than from the canonical core formulas, so the fast paths
in the other modules have an independent side to be checked against.  These
are exponential and only meant for small grounds.
"""

from __future__ import annotations

from itertools import product as iproduct

from .filters import Filter, FilterBase
from .finset import GroundSet, PartialFn, Subset
from .germs import FilArrow, Germ, compose, germ_of, hom_set, is_admissible


def family_of(filt: Filter) -> frozenset[int]:
    """The filter as an explicit family of member bit-vectors."""
    return frozenset(m.bits for m in filt.members())


def member_by_family(filt: Filter, subset: Subset) -> bool:
    return subset.bits in family_of(filt)


def leq_by_families(left: Filter, right: Filter) -> bool:
    """Reverse inclusion of the explicit families."""
    return family_of(right) <= family_of(left)


def all_filter_families(ground: GroundSet) -> list[frozenset[int]]:
    """Brute-force enumeration of up-closed, intersection-closed families
    containing the full set."""
    n = len(ground)
    full = (1 << n) - 1
    subsets = list(range(1 << n))
    supersets = {}
    for s in subsets:
        mask = 0
        for t in subsets:
            if s & ~t == 0:
                mask |= 1 << t
        supersets[s] = mask
    families = []
    for fam_bits in range(1 << len(subsets)):
        if not fam_bits >> full & 1:
            continue
        members = [s for s in subsets if fam_bits >> s & 1]
        ok = True
        for s in members:
            if fam_bits & supersets[s] != supersets[s]:
                ok = False
                break
        if ok:
            for a in members:
                for b in members:
                    if not fam_bits >> (a & b) & 1:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            families.append(frozenset(members))
    return families


def fg_by_enumeration(base: FilterBase) -> Filter:
    """Least filter containing the base, as the intersection of all
    filter families that contain it."""
    ground = base.ground
    wanted = {s.bits for s in base.sets}
    candidates = [fam for fam in all_filter_families(ground) if wanted <= fam]
    least = frozenset.intersection(*candidates)
    core_bits = (1 << len(ground)) - 1
    for bits in least:
        core_bits &= bits
    return Filter(ground, Subset(ground, core_bits))


def count_filters_by_enumeration(ground: GroundSet) -> int:
    return len(all_filter_families(ground))


def join_by_families(left: Filter, right: Filter) -> Filter:
    """Join is the intersection of the families."""
    fam = family_of(left) & family_of(right)
    ground = left.ground
    core_bits = (1 << len(ground)) - 1
    for bits in fam:
        core_bits &= bits
    return Filter(ground, Subset(ground, core_bits))


def meet_by_families(left: Filter, right: Filter) -> Filter:
    """Meet is generated by the union of the families."""
    ground = left.ground
    sets = [Subset(ground, bits) for bits in family_of(left) | family_of(right)]
    return fg_by_enumeration(FilterBase(ground, tuple(sets)))


def subfilters_by_enumeration(filt: Filter) -> set[Filter]:
    out = set()
    for fam in all_filter_families(filt.ground):
        core_bits = (1 << len(filt.ground)) - 1
        for bits in fam:
            core_bits &= bits
        cand = Filter(filt.ground, Subset(filt.ground, core_bits))
        if family_of(filt) <= fam:
            out.add(cand)
    return out


def push_by_family(f: PartialFn, filt: Filter) -> Filter:
    """Fg of the full image family."""
    ground = f.cod
    images = [f.image(m) for m in filt.members()]
    return fg_by_enumeration(FilterBase(ground, tuple(images)))


def pull_by_family(f: PartialFn, filt: Filter) -> Filter:
    """Fg of the full preimage family."""
    ground = f.dom
    preimages = [f.preimage(m) for m in filt.members()]
    return fg_by_enumeration(FilterBase(ground, tuple(preimages)))


def local_quantified(f: PartialFn, source: Filter, target: Filter) -> bool:
    """The definition verbatim: every member pulls back to a member."""
    return all(source.contains(f.preimage(m)) for m in target.members())


def germ_equiv_quantified(f: PartialFn, g: PartialFn, source: Filter) -> bool:
    """Existential over all members of the source filter."""
    for member in source.members():
        if f.dd() & member != g.dd() & member:
            continue
        overlap = f.dd() & g.dd() & member
        if all(f.graph[a] == g.graph[a] for a in overlap):
            return True
    return False


def partial_fns(dom: GroundSet, cod: GroundSet):
    """Every partial function between the two grounds."""
    options = [None] + list(cod.atoms)
    for choice in iproduct(options, repeat=len(dom)):
        graph = {a: v for a, v in zip(dom.atoms, choice) if v is not None}
        yield PartialFn(dom, cod, graph)


def admissible_fns(source: Filter, cod: GroundSet):
    for f in partial_fns(source.ground, cod):
        if is_admissible(f, source):
            yield f


def representatives_of(arrow_germ: Germ):
    """All admissible partial functions whose germ is the given one."""
    source = arrow_germ.source
    for f in admissible_fns(source, arrow_germ.target_ground):
        if germ_of(f, source) == arrow_germ:
            yield f


def box_by_base_generation(left: Filter, right: Filter) -> Filter:
    """The box product generated from all base rectangles F' box g."""
    from .finset import Pair, product_ground

    ground = product_ground(left.ground, right.ground)
    right_members = list(right.members())
    base = []
    for f_member in left.members():
        cols = f_member.atoms()
        for assignment in iproduct(right_members, repeat=len(cols)):
            rows = {s: m for s, m in zip(cols, assignment)}
            base.append(ground.subset(
                Pair(s, t) for s in cols for t in rows[s]
            ))
    core_bits = (1 << len(ground)) - 1
    for s in base:
        core_bits &= s.bits
    return Filter(ground, Subset(ground, core_bits))


def hom_base_set(source_h: Filter, target_g: Filter, member: Subset) -> set[Germ]:
    """Germs of admissible partial functions mapping some member of H into
    the given member of G (a base set of the internal hom)."""
    out = set()
    for f in admissible_fns(source_h, target_g.ground):
        if any(f.image(h) <= member for h in source_h.members()):
            out.add(germ_of(f, source_h))
    return out


def test_filters_up_to(max_size: int, prefix: str = "t") -> list[Filter]:
    """All filters on one canonical ground per size 0..max_size."""
    out = []
    for size in range(max_size + 1):
        ground = GroundSet.of_labels(f"{prefix}{i}" for i in range(size))
        for core in ground.all_subsets():
            out.append(Filter(ground, core))
    return out


def brute_force_epi(arrow: FilArrow, test_filters: list[Filter]) -> bool:
    """Right-cancellability against every parallel pair out of the target."""
    for w in test_filters:
        outs = hom_set(arrow.target, w)
        for a in outs:
            for b in outs:
                if a != b and compose(a, arrow) == compose(b, arrow):
                    return False
    return True


def brute_force_monic(arrow: FilArrow, test_filters: list[Filter]) -> bool:
    """Left-cancellability against every parallel pair into the source."""
    for w in test_filters:
        ins = hom_set(w, arrow.source)
        for a in ins:
            for b in ins:
                if a != b and compose(arrow, a) == compose(arrow, b):
                    return False
    return True
