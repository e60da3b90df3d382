"""Germs of admissible partial functions and the arrows they induce.

Two admissible partial functions have the same germ exactly when they agree
on a member of the domain filter; on a finite ground the core is the least
member, so germs are in bijection with total maps core -> target ground and
the canonical representative is the restriction to the core.  The
paper-literal quantified definitions live in `oracles` and cross-check the
canonical forms used here.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from itertools import product

from .errors import FilError
from .filters import Filter, meet_filters, pullback, pushforward
from .finset import GermCode, GroundSet, PartialFn, Subset


def is_admissible(f: PartialFn, source: Filter) -> bool:
    """Defined on some member of the filter, i.e. dd(f) contains the core."""
    if f.dom != source.ground:
        raise FilError("E_GROUND_MISMATCH", "admissibility needs dom(f) = ground of filter")
    return source.core <= f.dd()


def is_local(f: PartialFn, source: Filter, target: Filter) -> bool:
    """Every member of the target pulls back into the source filter.

    Single core check; the quantified form is `oracles.local_quantified`.
    """
    if f.dom != source.ground or f.cod != target.ground:
        raise FilError("E_GROUND_MISMATCH", "locality check on mismatched grounds")
    return source.core <= f.preimage(target.core)


def germ_equiv(f: PartialFn, g: PartialFn, source: Filter) -> bool:
    """Common-restriction equivalence, decided on the core (the least member)."""
    if f.dom != g.dom or f.cod != g.cod:
        raise FilError("E_GROUND_MISMATCH", "germ equivalence needs a common signature")
    if f.dom != source.ground:
        raise FilError("E_GROUND_MISMATCH", "germ equivalence on wrong ground")
    core = source.core
    if f.dd() & core != g.dd() & core:
        return False
    return all(f.graph[a] == g.graph[a] for a in f.dd() & g.dd() & core)


class Germ:
    """Equivalence class of admissible partial functions, canonically a
    total table on the core of the source filter."""

    __slots__ = ("source", "target_ground", "table", "_items", "_hash")

    def __init__(self, source: Filter, target_ground: GroundSet, table: Mapping):
        core_atoms = set(source.core.atoms())
        if set(table) != core_atoms:
            raise FilError("E_GERM", "germ table must be defined on exactly the core")
        for v in table.values():
            if v not in target_ground:
                raise FilError("E_GROUND", f"germ value {v!r} outside target ground")
        self.source = source
        self.target_ground = target_ground
        self.table = dict(table)
        self._items = tuple(sorted(self.table.items(), key=lambda kv: kv[0]._key))
        self._hash = hash((source, target_ground, self._items))

    def __eq__(self, other):
        return (
            isinstance(other, Germ)
            and self.source == other.source
            and self.target_ground == other.target_ground
            and self._items == other._items
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        table = ", ".join(f"{k!r}->{v!r}" for k, v in self._items)
        return f"Germ({{{table}}} over {self.source!r})"

    def rep(self) -> PartialFn:
        """The canonical representative: the table as a partial function."""
        return PartialFn(self.source.ground, self.target_ground, self.table)

    def image_core(self) -> Subset:
        return self.target_ground.subset(self.table.values())

    def push(self, sub: Filter) -> Filter:
        """Pushforward of a subfilter of the source, representative-free."""
        if not sub.leq(self.source):
            raise FilError("E_NOT_SUBFILTER", "can only push subfilters of the source")
        return pushforward(self.rep(), sub)

    def pull(self, target: Filter) -> Filter:
        """Pullback meet the source filter, representative-free."""
        if target.ground != self.target_ground:
            raise FilError("E_GROUND_MISMATCH", "pull needs a filter on the target ground")
        return meet_filters([pullback(self.rep(), target), self.source])

    def restrict(self, sub: Filter) -> "Germ":
        if not sub.leq(self.source):
            raise FilError("E_NOT_SUBFILTER", "can only restrict to a subfilter")
        table = {a: self.table[a] for a in sub.core}
        return Germ(sub, self.target_ground, table)


def germ_of(f: PartialFn, source: Filter) -> Germ:
    if not is_admissible(f, source):
        raise FilError("E_ADMISSIBLE", "dd(f) is not a member of the source filter")
    return Germ(source, f.cod, {a: f.graph[a] for a in source.core})


class FilArrow:
    """Germ together with a target filter and a verified locality certificate."""

    __slots__ = ("germ", "target", "_hash")

    def __init__(self, germ: Germ, target: Filter):
        if target.ground != germ.target_ground:
            raise FilError("E_GROUND_MISMATCH", "target filter on wrong ground")
        if not (germ.image_core() <= target.core):
            raise FilError(
                "E_LOCALITY",
                f"germ is not local: witness member {list(target.core.atoms())!r} "
                "of the target filter pulls back outside the source filter",
            )
        self.germ = germ
        self.target = target
        self._hash = hash((germ, target))

    @property
    def source(self) -> Filter:
        return self.germ.source

    @property
    def table(self) -> dict:
        return self.germ.table

    @classmethod
    def identity(cls, filt: Filter) -> "FilArrow":
        return cls(Germ(filt, filt.ground, {a: a for a in filt.core}), filt)

    def __eq__(self, other):
        return (
            isinstance(other, FilArrow)
            and self.germ == other.germ
            and self.target == other.target
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FilArrow({self.germ!r} -> {self.target!r})"

    def is_identity(self) -> bool:
        return self.source == self.target and all(k == v for k, v in self.table.items())


def mk_arrow(source: Filter, target: Filter, f: PartialFn) -> FilArrow:
    """Arrow from a raw partial function; checks both certificates."""
    if not is_admissible(f, source):
        raise FilError("E_ADMISSIBLE", "dd(f) is not a member of the source filter")
    if not is_local(f, source, target):
        witness = _locality_witness(f, source, target)
        raise FilError(
            "E_LOCALITY",
            f"preimage of member {witness} of the target filter is not in the source filter",
        )
    return FilArrow(germ_of(f, source), target)


def _locality_witness(f: PartialFn, source: Filter, target: Filter) -> list:
    for member in target.members():
        if not source.contains(f.preimage(member)):
            return list(member.atoms())
    return []


def compose(outer: FilArrow, inner: FilArrow) -> FilArrow:
    """outer after inner; tables compose totally thanks to the certificates."""
    if inner.target != outer.source:
        raise FilError("E_GROUND_MISMATCH", "arrows do not compose: target(inner) != source(outer)")
    table = {a: outer.table[v] for a, v in inner.table.items()}
    return FilArrow(Germ(inner.source, outer.target.ground, table), outer.target)


def hom_set(source: Filter, target: Filter) -> list[FilArrow]:
    """All arrows source -> target: total maps core(source) -> core(target)."""
    core_s = source.core.atoms()
    core_t = target.core.atoms()
    out = []
    for values in product(core_t, repeat=len(core_s)):
        germ = Germ(source, target.ground, dict(zip(core_s, values)))
        out.append(FilArrow(germ, target))
    return out


def enum_admissible_germs(source: Filter, target_ground: GroundSet) -> list[Germ]:
    """All germs of admissible partial functions into the target ground."""
    core_s = source.core.atoms()
    return [
        Germ(source, target_ground, dict(zip(core_s, values)))
        for values in product(target_ground.atoms, repeat=len(core_s))
    ]


def encode_germ(germ: Germ) -> GermCode:
    return GermCode(germ._items, germ.source.ground.atoms)


def decode_germ(code: GermCode, target_ground: GroundSet) -> Germ:
    ground = GroundSet(code.dom_ground)
    source = Filter(ground, ground.subset(k for k, _ in code.entries))
    return Germ(source, target_ground, dict(code.entries))
