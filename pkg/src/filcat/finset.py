"""Finite ground sets, bit-vector subsets, and explicit partial functions.

Atoms are structured so that product grounds (pairs), coproduct grounds
(tagged injections) and function-space grounds (encoded germ tables) are
first-class values with a total order; everything downstream relies on
grounds being canonically sorted.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import FilError


class Atom:
    """Base of the atom variants.  Compares and hashes by structural key."""

    __slots__ = ("_key", "_hash")

    def __init__(self, key):
        self._key = key
        self._hash = hash(key)

    def __eq__(self, other):
        return self is other or (isinstance(other, Atom) and self._key == other._key)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    # variant ranks lead every key, so cross-variant comparison is total
    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __gt__(self, other):
        return self._key > other._key

    def __ge__(self, other):
        return self._key >= other._key


class Label(Atom):
    """Plain named element, e.g. the points of a user-declared ground set."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = str(name)
        super().__init__((0, self.name))

    def __repr__(self):
        return f"Label({self.name!r})"


class Pair(Atom):
    """Element <left, right> of a binary product ground."""

    __slots__ = ("left", "right")

    def __init__(self, left: Atom, right: Atom):
        self.left = left
        self.right = right
        super().__init__((1, left._key, right._key))

    def __repr__(self):
        return f"Pair({self.left!r}, {self.right!r})"


class Tag(Atom):
    """Element injected into a disjoint-union ground from summand `index`."""

    __slots__ = ("index", "value")

    def __init__(self, index: int, value: Atom):
        self.index = int(index)
        self.value = value
        super().__init__((2, self.index, value._key))

    def __repr__(self):
        return f"Tag({self.index}, {self.value!r})"


class GermCode(Atom):
    """Encoded germ: a sorted table plus the domain ground as fingerprint.

    The table keys are exactly the core of the domain filter, so the pair
    (entries, dom_ground) pins down both the filter and the germ; germs over
    different domain filters can never collide as atoms.
    """

    __slots__ = ("entries", "dom_ground")

    def __init__(self, entries: Iterable[tuple[Atom, Atom]], dom_ground: Iterable[Atom]):
        entries = tuple(sorted(entries, key=lambda kv: kv[0]._key))
        keys = [k for k, _ in entries]
        if len(set(keys)) != len(keys):
            raise FilError("E_GERMCODE", "duplicate keys in germ table")
        self.entries = entries
        self.dom_ground = tuple(sorted(dom_ground, key=lambda a: a._key))
        super().__init__(
            (
                3,
                tuple((k._key, v._key) for k, v in entries),
                tuple(a._key for a in self.dom_ground),
            )
        )

    def __repr__(self):
        return f"GermCode({list(self.entries)!r}, dom={list(self.dom_ground)!r})"


class GroundSet:
    """Finite set of distinct atoms, kept in canonical sorted order."""

    __slots__ = ("atoms", "_index", "_hash")

    def __init__(self, atoms: Iterable[Atom]):
        atoms = tuple(sorted(atoms, key=lambda a: a._key))
        for a, b in zip(atoms, atoms[1:]):
            if a == b:
                raise FilError("E_GROUND", f"duplicate atom {a!r} in ground set")
        self.atoms = atoms
        self._index = {a: i for i, a in enumerate(atoms)}
        self._hash = hash(atoms)

    @classmethod
    def of_labels(cls, names: Iterable[str]) -> "GroundSet":
        return cls(Label(n) for n in names)

    def __len__(self):
        return len(self.atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    def __contains__(self, atom):
        return atom in self._index

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.atoms == other.atoms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GroundSet({list(self.atoms)!r})"

    def position(self, atom: Atom) -> int:
        try:
            return self._index[atom]
        except KeyError:
            raise FilError("E_GROUND", f"atom {atom!r} not in ground set") from None

    def subset(self, atoms: Iterable[Atom]) -> "Subset":
        bits = 0
        for a in atoms:
            bits |= 1 << self.position(a)
        return Subset(self, bits)

    def empty(self) -> "Subset":
        return Subset(self, 0)

    def full(self) -> "Subset":
        return Subset(self, (1 << len(self.atoms)) - 1)

    def all_subsets(self) -> Iterator["Subset"]:
        for bits in range(1 << len(self.atoms)):
            yield Subset(self, bits)


class Subset:
    """Subset of a ground set as a bit vector over the canonical order."""

    __slots__ = ("ground", "bits")

    def __init__(self, ground: GroundSet, bits: int):
        self.ground = ground
        self.bits = bits

    def atoms(self) -> tuple[Atom, ...]:
        return tuple(a for i, a in enumerate(self.ground.atoms) if self.bits >> i & 1)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms())

    def __contains__(self, atom):
        return atom in self.ground._index and self.bits >> self.ground.position(atom) & 1

    def __len__(self):
        return self.bits.bit_count()

    def __eq__(self, other):
        return (
            isinstance(other, Subset)
            and self.ground == other.ground
            and self.bits == other.bits
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.ground, self.bits))

    def __repr__(self):
        return f"Subset({list(self.atoms())!r})"

    def _check_same_ground(self, other: "Subset"):
        if self.ground != other.ground:
            raise FilError("E_GROUND_MISMATCH", "subsets live on different ground sets")

    def __and__(self, other: "Subset") -> "Subset":
        self._check_same_ground(other)
        return Subset(self.ground, self.bits & other.bits)

    def __or__(self, other: "Subset") -> "Subset":
        self._check_same_ground(other)
        return Subset(self.ground, self.bits | other.bits)

    def __sub__(self, other: "Subset") -> "Subset":
        self._check_same_ground(other)
        return Subset(self.ground, self.bits & ~other.bits)

    def complement(self) -> "Subset":
        return Subset(self.ground, ~self.bits & (1 << len(self.ground)) - 1)

    def __le__(self, other: "Subset") -> bool:
        self._check_same_ground(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "Subset") -> bool:
        return self <= other and self.bits != other.bits

    def is_empty(self) -> bool:
        return self.bits == 0


class PartialFn:
    """Partial function between ground sets as an explicit finite graph."""

    __slots__ = ("dom", "cod", "graph", "_items", "_hash")

    def __init__(self, dom: GroundSet, cod: GroundSet, graph: Mapping[Atom, Atom]):
        for k, v in graph.items():
            if k not in dom:
                raise FilError("E_GROUND", f"graph key {k!r} outside domain ground")
            if v not in cod:
                raise FilError("E_GROUND", f"graph value {v!r} outside codomain ground")
        self.dom = dom
        self.cod = cod
        self.graph = dict(graph)
        self._items = tuple(sorted(self.graph.items(), key=lambda kv: kv[0]._key))
        self._hash = hash((dom, cod, self._items))

    @classmethod
    def identity(cls, ground: GroundSet) -> "PartialFn":
        return cls(ground, ground, {a: a for a in ground})

    def __eq__(self, other):
        return (
            isinstance(other, PartialFn)
            and self.dom == other.dom
            and self.cod == other.cod
            and self._items == other._items
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        table = ", ".join(f"{k!r}->{v!r}" for k, v in self._items)
        return f"PartialFn({{{table}}})"

    def is_total(self) -> bool:
        return len(self.graph) == len(self.dom)

    def dd(self) -> Subset:
        """Domain of definition: the key set of the graph."""
        return self.dom.subset(self.graph)

    def range(self) -> Subset:
        """Set of values of the graph."""
        return self.cod.subset(self.graph.values())

    def compose(self, other: "PartialFn") -> "PartialFn":
        """self after other; defined where other lands in dd(self)."""
        if other.cod != self.dom:
            raise FilError("E_GROUND_MISMATCH", "composition needs cod(inner) = dom(outer)")
        graph = {
            s: self.graph[t]
            for s, t in other.graph.items()
            if t in self.graph
        }
        return PartialFn(other.dom, self.cod, graph)

    def restrict(self, region: Subset) -> "PartialFn":
        if region.ground != self.dom:
            raise FilError("E_GROUND_MISMATCH", "restriction region on wrong ground")
        graph = {k: v for k, v in self.graph.items() if k in region}
        return PartialFn(self.dom, self.cod, graph)

    def image(self, region: Subset) -> Subset:
        if region.ground != self.dom:
            raise FilError("E_GROUND_MISMATCH", "image region on wrong ground")
        return self.cod.subset(v for k, v in self.graph.items() if k in region)

    def preimage(self, region: Subset) -> Subset:
        if region.ground != self.cod:
            raise FilError("E_GROUND_MISMATCH", "preimage region on wrong ground")
        return self.dom.subset(k for k, v in self.graph.items() if v in region)


@lru_cache(maxsize=None)
def product_ground(left: GroundSet, right: GroundSet) -> GroundSet:
    """Ground set of pairs, in lexicographic (hence canonical) order."""
    return GroundSet(Pair(a, b) for a in left for b in right)


@lru_cache(maxsize=None)
def tagged_ground(parts: tuple[GroundSet, ...]) -> GroundSet:
    """Disjoint union ground; summand membership is syntactic via Tag."""
    return GroundSet(Tag(i, a) for i, part in enumerate(parts) for a in part)


def product_subset(left: Subset, right: Subset) -> Subset:
    ground = product_ground(left.ground, right.ground)
    return ground.subset(Pair(a, b) for a in left for b in right)
