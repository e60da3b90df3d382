"""The epi/mono factorization system and the lattice of mono subobjects.

An arrow is in the epi class E when it pushes its source filter onto the
whole target filter, and in the mono class M when its canonical table is
one-one on the core.  Every arrow factors through its image filter as an
E-part followed by an M-part, with unique diagonal fills between the two
classes; brute-force cancellability oracles live in `oracles`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FilError
from .filters import Filter
from .germs import FilArrow, Germ, compose, hom_set


def is_e(arrow: FilArrow) -> bool:
    """Pushforward of the source equals the target filter."""
    return arrow.germ.image_core() == arrow.target.core


def is_m(arrow: FilArrow) -> bool:
    """Some representative is one-one on its domain of definition,
    equivalently the canonical table is injective on the core."""
    values = list(arrow.table.values())
    return len(set(values)) == len(values)


def is_epi(arrow: FilArrow) -> bool:
    """Epi coincides with membership in E (checked against brute force by the laws)."""
    return is_e(arrow)


def is_monic(arrow: FilArrow) -> bool:
    """Monic coincides with membership in M (checked against brute force by the laws)."""
    return is_m(arrow)


def is_iso(arrow: FilArrow) -> bool:
    return is_e(arrow) and is_m(arrow)


def inverse(arrow: FilArrow) -> FilArrow:
    """Inverse of an isomorphism: the transposed table."""
    if not is_iso(arrow):
        raise FilError("E_NOT_ISO", "only isomorphisms have inverses")
    table = {v: k for k, v in arrow.table.items()}
    return FilArrow(Germ(arrow.target, arrow.source.ground, table), arrow.source)


@dataclass(frozen=True)
class FactorPair:
    epi_part: FilArrow
    mid: Filter
    mono_part: FilArrow


def factor(arrow: FilArrow) -> FactorPair:
    """Factor through the image filter: same table into the image, then the
    germ of the identity of the target ground over the image."""
    mid = arrow.germ.push(arrow.source)
    epi_part = FilArrow(Germ(arrow.source, mid.ground, arrow.table), mid)
    mono_part = FilArrow(Germ(mid, mid.ground, {a: a for a in mid.core}), arrow.target)
    return FactorPair(epi_part, mid, mono_part)


def diagonal_fill(
    eps: FilArrow, alpha: FilArrow, beta: FilArrow, mu: FilArrow
) -> FilArrow:
    """Unique diagonal for a commuting square beta . eps = mu . alpha with
    eps in E and mu in M; found by searching the (finite) hom-set."""
    if not is_e(eps):
        raise FilError("E_CLASS", "left leg of the square must be in E")
    if not is_m(mu):
        raise FilError("E_CLASS", "right leg of the square must be in M")
    if eps.source != alpha.source or beta.target != mu.target:
        raise FilError("E_SQUARE", "square corners do not line up")
    if compose(beta, eps) != compose(mu, alpha):
        raise FilError("E_SQUARE", "square does not commute")
    fills = [
        d
        for d in hom_set(eps.target, alpha.target)
        if compose(d, eps) == alpha and compose(mu, d) == beta
    ]
    if len(fills) != 1:
        raise FilError("E_SQUARE", f"expected a unique diagonal, found {len(fills)}")
    return fills[0]


@dataclass(frozen=True)
class MSubobjectPoset:
    """Equivalence classes of M-arrows into `target`, one canonical
    representative (the identity germ of a subfilter) per class."""

    target: Filter
    representatives: tuple[FilArrow, ...]

    def to_subfilter(self, m: FilArrow) -> Filter:
        """The class invariant: the image filter of the arrow."""
        if m.target != self.target or not is_m(m):
            raise FilError("E_NOT_MONO", "not an M-arrow into this object")
        return m.germ.push(m.source)

    def from_subfilter(self, sub: Filter) -> FilArrow:
        """Canonical representative: germ of the identity over the subfilter."""
        if not sub.leq(self.target):
            raise FilError("E_NOT_SUBFILTER", "not a subfilter of the target")
        germ = Germ(sub, self.target.ground, {a: a for a in sub.core})
        return FilArrow(germ, self.target)

    def leq(self, m: FilArrow, m_prime: FilArrow) -> bool:
        """Diagram order: some arrow dom(m) -> dom(m') commutes over the target."""
        for phi in hom_set(m.source, m_prime.source):
            if compose(m_prime, phi) == m:
                return True
        return False

    def same_class(self, m: FilArrow, m_prime: FilArrow) -> bool:
        return self.leq(m, m_prime) and self.leq(m_prime, m)


def m_subobject_poset(target: Filter) -> MSubobjectPoset:
    reps = tuple(
        MSubobjectPoset(target, ()).from_subfilter(sub) for sub in target.subfilters()
    )
    return MSubobjectPoset(target, reps)
