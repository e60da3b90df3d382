"""Filters on finite ground sets.

On a finite ground every filter is principal, so a filter is canonically the
pair (ground, core) where the core is the least member; a subset belongs to
the filter exactly when it contains the core.  Constructors accept bases, as
in the classical definition, and canonicalize immediately.  The improper
filter (core empty, containing every subset) is first-class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import FilError
from .finset import GroundSet, PartialFn, Subset


class Filter:
    __slots__ = ("ground", "core", "_hash")

    def __init__(self, ground: GroundSet, core: Subset):
        if core.ground != ground:
            raise FilError("E_GROUND_MISMATCH", "core subset on wrong ground")
        self.ground = ground
        self.core = core
        self._hash = hash((ground, core.bits))

    @classmethod
    def principal(cls, core: Subset) -> "Filter":
        return cls(core.ground, core)

    @classmethod
    def top(cls, ground: GroundSet) -> "Filter":
        """The filter {S}: the least filter on S, core = S."""
        return cls(ground, ground.full())

    @classmethod
    def improper(cls, ground: GroundSet) -> "Filter":
        return cls(ground, ground.empty())

    def __eq__(self, other):
        return (
            isinstance(other, Filter)
            and self.ground == other.ground
            and self.core == other.core
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Filter(core={list(self.core.atoms())!r} on {list(self.ground.atoms)!r})"

    def is_proper(self) -> bool:
        return not self.core.is_empty()

    def contains(self, subset: Subset) -> bool:
        """Membership: X belongs to the filter iff core <= X."""
        if subset.ground != self.ground:
            raise FilError("E_GROUND_MISMATCH", "membership query on wrong ground")
        return self.core <= subset

    def members(self) -> Iterator[Subset]:
        """The filter as an explicit family: all supersets of the core."""
        free = [a for a in self.ground if a not in self.core]
        for bits in range(1 << len(free)):
            extra = [a for i, a in enumerate(free) if bits >> i & 1]
            yield self.core | self.ground.subset(extra)

    def leq(self, other: "Filter") -> bool:
        """Order by reverse family inclusion: F <= G iff core F <= core G."""
        if self.ground != other.ground:
            raise FilError("E_GROUND_MISMATCH", "filters ordered only on a common ground")
        return self.core <= other.core

    def join(self, other: "Filter") -> "Filter":
        return join_filters([self, other])

    def meet(self, other: "Filter") -> "Filter":
        return meet_filters([self, other])

    def subfilters(self) -> list["Filter"]:
        """All filters below this one: one per subset of the core."""
        out = []
        core_atoms = self.core.atoms()
        for bits in range(1 << len(core_atoms)):
            kept = [a for i, a in enumerate(core_atoms) if bits >> i & 1]
            out.append(Filter(self.ground, self.ground.subset(kept)))
        out.sort(key=lambda f: f.core.bits)
        return out


@dataclass(frozen=True)
class FilterBase:
    ground: GroundSet
    sets: tuple[Subset, ...]

    def __post_init__(self):
        for s in self.sets:
            if s.ground != self.ground:
                raise FilError("E_GROUND_MISMATCH", "base set on wrong ground")


def fg(base: FilterBase) -> Filter:
    """Least filter containing every base set (empty base generates {S})."""
    core = base.ground.full()
    for s in base.sets:
        core = core & s
    return Filter(base.ground, core)


def fg_sets(ground: GroundSet, sets: Iterable[Subset]) -> Filter:
    return fg(FilterBase(ground, tuple(sets)))


def join_filters(filters: Sequence[Filter]) -> Filter:
    """Lattice join: intersection of the families; core = union of cores."""
    if not filters:
        raise FilError("E_EMPTY_JOIN", "join of an empty family is not defined")
    ground = filters[0].ground
    core = ground.empty()
    for f in filters:
        if f.ground != ground:
            raise FilError("E_GROUND_MISMATCH", "join needs a common ground")
        core = core | f.core
    return Filter(ground, core)


def meet_filters(filters: Sequence[Filter]) -> Filter:
    """Lattice meet: generated by the union of the families; core = intersection."""
    if not filters:
        raise FilError("E_EMPTY_JOIN", "meet of an empty family is not defined")
    ground = filters[0].ground
    core = ground.full()
    for f in filters:
        if f.ground != ground:
            raise FilError("E_GROUND_MISMATCH", "meet needs a common ground")
        core = core & f.core
    return Filter(ground, core)


def pushforward(f: PartialFn, filt: Filter) -> Filter:
    """Filter generated by the images of the members; core = image of core."""
    if f.dom != filt.ground:
        raise FilError("E_GROUND_MISMATCH", "pushforward needs dom(f) = ground of filter")
    return Filter(f.cod, f.image(filt.core))


def pullback(f: PartialFn, filt: Filter) -> Filter:
    """Filter generated by the preimages of the members; core = preimage of core."""
    if f.cod != filt.ground:
        raise FilError("E_GROUND_MISMATCH", "pullback needs cod(f) = ground of filter")
    return Filter(f.dom, f.preimage(filt.core))
