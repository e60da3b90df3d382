"""Exhaustive law-checking harness.

Every theorem-shaped statement in the kernel is registered here as a named
suite.  Suites sweep a small universe of ground sets and filters —
exhaustively by default, with seeded random sampling where the instance
space is super-exponential — and report the number of cases checked plus,
on failure, a witness serialized in the workspace format so it can be
replayed with `replay_witness`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from . import closedcat, factorization as fact, filters as flt, germs, limits
from . import monoidal as mon, oracles, workspace as wsp
from .errors import FilError
from .filters import Filter
from .finset import GroundSet, PartialFn, Subset
from .germs import FilArrow

SAMPLES = 60  # instances per randomized sweep component


@dataclass(frozen=True)
class Universe:
    max_ground_size: int = 2
    alphabet: tuple[str, ...] = ("a", "b")
    include_improper: bool = True

    @classmethod
    def of_size(cls, n: int, include_improper: bool = True) -> "Universe":
        return cls(n, tuple("abcdefgh"[: max(n, 0)]), include_improper)

    def summary(self) -> dict:
        return {
            "max_ground_size": self.max_ground_size,
            "alphabet": list(self.alphabet),
            "include_improper": self.include_improper,
        }


@dataclass(frozen=True)
class Witness:
    law: str
    check: str
    detail: str
    text: str  # workspace serialization of the failing instance

    def serialize(self) -> str:
        return (
            f"# law: {self.law}\n# check: {self.check}\n# detail: {self.detail}\n"
            + self.text
        )


@dataclass(frozen=True)
class LawReport:
    law: str
    universe: Universe
    cases: int
    outcome: str  # "pass" | "fail"
    witness: Witness | None = None
    seed: int | None = None

    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "universe": self.universe.summary(),
            "cases": self.cases,
            "outcome": self.outcome,
            "witness": None
            if self.witness is None
            else {
                "check": self.witness.check,
                "detail": self.witness.detail,
                "workspace": self.witness.text,
            },
            "seed": self.seed,
        }


def _fail(law: str, check: str, objects: dict, detail: str) -> Witness:
    return Witness(law, check, detail, wsp.render_workspace(wsp.from_objects(objects)))


# ------------------------------------------------------------- enumerators


@lru_cache(maxsize=None)
def grounds_of(u: Universe) -> tuple[GroundSet, ...]:
    letters = list(u.alphabet)
    out = []
    for bits in range(1 << len(letters)):
        chosen = [letters[i] for i in range(len(letters)) if bits >> i & 1]
        if len(chosen) <= u.max_ground_size:
            out.append(GroundSet.of_labels(chosen))
    out.sort(key=lambda g: (len(g), tuple(a._key for a in g.atoms)))
    return tuple(out)


def filters_on(u: Universe, ground: GroundSet) -> tuple[Filter, ...]:
    return tuple(
        Filter(ground, core)
        for core in ground.all_subsets()
        if u.include_improper or not core.is_empty()
    )


@lru_cache(maxsize=None)
def filters_of(u: Universe) -> tuple[Filter, ...]:
    return tuple(f for g in grounds_of(u) for f in filters_on(u, g))


@lru_cache(maxsize=None)
def _hom(src: Filter, tgt: Filter) -> tuple[FilArrow, ...]:
    return tuple(germs.hom_set(src, tgt))


@lru_cache(maxsize=None)
def arrows_of(u: Universe) -> tuple[FilArrow, ...]:
    out = []
    for src in filters_of(u):
        for tgt in filters_of(u):
            out.extend(_hom(src, tgt))
    return tuple(out)


@lru_cache(maxsize=None)
def arrows_by_source(u: Universe) -> dict:
    index: dict[Filter, list[FilArrow]] = {}
    for a in arrows_of(u):
        index.setdefault(a.source, []).append(a)
    return index


@lru_cache(maxsize=None)
def arrows_by_target(u: Universe) -> dict:
    index: dict[Filter, list[FilArrow]] = {}
    for a in arrows_of(u):
        index.setdefault(a.target, []).append(a)
    return index


def composable_pairs(u: Universe):
    by_source = arrows_by_source(u)
    for phi in arrows_of(u):
        for psi in by_source.get(phi.target, ()):
            yield psi, phi


def composable_triples(u: Universe):
    by_source = arrows_by_source(u)
    for phi in arrows_of(u):
        for psi in by_source.get(phi.target, ()):
            for xi in by_source.get(psi.target, ()):
                yield xi, psi, phi


def _random_extension(rng, dom: GroundSet, cod: GroundSet, required: dict) -> PartialFn:
    """Random partial function forced to contain `required` in its graph."""
    graph = dict(required)
    for a in dom:
        if a in graph:
            continue
        pick = rng.randrange(len(cod) + 1)
        if pick:
            graph[a] = cod.atoms[pick - 1]
    return PartialFn(dom, cod, graph)


# ---------------------------------------------------------------- registry
#
# Checks take a dict of named objects so a failing instance can be
# serialized and replayed; CHECKS is the replay dispatch table.

CHECKS: dict[tuple[str, str], callable] = {}
LAWS: dict[str, callable] = {}


def _check(law: str, name: str):
    def register(fn):
        CHECKS[(law, name)] = fn
        return fn

    return register


def _law(name: str):
    def register(fn):
        LAWS[name] = fn
        return fn

    return register


# ----------------------------------------------------- subset calculus


@_check("subset-calculus", "dd-of-composite")
def _chk_dd_composite(o):
    f, g = o["f"], o["g"]
    return g.compose(f).dd() == f.preimage(g.dd())


@_check("subset-calculus", "image-galois")
def _chk_image_galois(o):
    f, D, Dp = o["f"], o["D"], o["Dp"]
    return (f.image(D) <= Dp) == (D <= f.dd().complement() | f.preimage(Dp))


@_check("subset-calculus", "image-functorial")
def _chk_image_functorial(o):
    f, g, D = o["f"], o["g"], o["D"]
    return g.image(f.image(D)) == g.compose(f).image(D)


@_check("subset-calculus", "preimage-functorial")
def _chk_preimage_functorial(o):
    f, g, Dpp = o["f"], o["g"], o["Dpp"]
    return f.preimage(g.preimage(Dpp)) == g.compose(f).preimage(Dpp)


@_check("subset-calculus", "restriction-image")
def _chk_restriction_image(o):
    g, Dhat, D = o["g"], o["Dhat"], o["D"]
    f = g.restrict(Dhat)
    if not (f.image(D) <= g.image(D)):
        return False
    return not (D <= Dhat) or f.image(D) == g.image(D)


@_check("subset-calculus", "restriction-preimage")
def _chk_restriction_preimage(o):
    g, Dhat, Dp = o["g"], o["Dhat"], o["Dp"]
    return g.restrict(Dhat).preimage(Dp) <= g.preimage(Dp)


@_law("subset-calculus")
def _law_subset_calculus(u: Universe, rng):
    cases = 0
    gs = grounds_of(u)
    for S, T, W in iproduct(gs, gs, gs):
        for f in oracles.partial_fns(S, T):
            for g in oracles.partial_fns(T, W):
                cases += 1
                if not _chk_dd_composite({"f": f, "g": g}):
                    return cases, _fail(
                        "subset-calculus", "dd-of-composite", {"f": f, "g": g},
                        "dd(g∘f) differs from f^-1(dd g)")
                for D in S.all_subsets():
                    cases += 1
                    o = {"f": f, "g": g, "D": D}
                    if not _chk_image_functorial(o):
                        return cases, _fail("subset-calculus", "image-functorial", o, "image chain broke")
                for Dpp in W.all_subsets():
                    cases += 1
                    o = {"f": f, "g": g, "Dpp": Dpp}
                    if not _chk_preimage_functorial(o):
                        return cases, _fail("subset-calculus", "preimage-functorial", o, "preimage chain broke")
    for S, T in iproduct(gs, gs):
        for f in oracles.partial_fns(S, T):
            for D in S.all_subsets():
                for Dp in T.all_subsets():
                    cases += 1
                    o = {"f": f, "D": D, "Dp": Dp}
                    if not _chk_image_galois(o):
                        return cases, _fail("subset-calculus", "image-galois", o, "galois equivalence broke")
            for Dhat in S.all_subsets():
                for D in S.all_subsets():
                    cases += 1
                    o = {"g": f, "Dhat": Dhat, "D": D}
                    if not _chk_restriction_image(o):
                        return cases, _fail("subset-calculus", "restriction-image", o, "restriction image law broke")
                for Dp in T.all_subsets():
                    cases += 1
                    o = {"g": f, "Dhat": Dhat, "Dp": Dp}
                    if not _chk_restriction_preimage(o):
                        return cases, _fail("subset-calculus", "restriction-preimage", o, "restriction preimage law broke")
    # seeded samples on grounds of sizes 3 and 4
    for size_s, size_t, size_w in ((3, 3, 3), (4, 4, 4), (3, 4, 3)):
        S = GroundSet.of_labels(f"s{i}" for i in range(size_s))
        T = GroundSet.of_labels(f"t{i}" for i in range(size_t))
        W = GroundSet.of_labels(f"w{i}" for i in range(size_w))
        for _ in range(SAMPLES):
            f = _random_extension(rng, S, T, {})
            g = _random_extension(rng, T, W, {})
            D = Subset(S, rng.randrange(1 << size_s))
            Dp = Subset(T, rng.randrange(1 << size_t))
            Dpp = Subset(W, rng.randrange(1 << size_w))
            Dhat = Subset(S, rng.randrange(1 << size_s))
            for name, o in (
                ("dd-of-composite", {"f": f, "g": g}),
                ("image-galois", {"f": f, "D": D, "Dp": Dp}),
                ("image-functorial", {"f": f, "g": g, "D": D}),
                ("preimage-functorial", {"f": f, "g": g, "Dpp": Dpp}),
                ("restriction-image", {"g": f, "Dhat": Dhat, "D": D}),
                ("restriction-preimage", {"g": f, "Dhat": Dhat, "Dp": Dp}),
            ):
                cases += 1
                if not CHECKS[("subset-calculus", name)](o):
                    return cases, _fail("subset-calculus", name, o, "sampled instance broke")
    return cases, None


# ----------------------------------------------------- filter lattice


@_check("filter-lattice", "join-extensional")
def _chk_join_ext(o):
    return flt.join_filters([o["F"], o["G"]]) == oracles.join_by_families(o["F"], o["G"])


@_check("filter-lattice", "meet-extensional")
def _chk_meet_ext(o):
    return flt.meet_filters([o["F"], o["G"]]) == oracles.meet_by_families(o["F"], o["G"])


@_check("filter-lattice", "join-idempotent")
def _chk_join_idem(o):
    return o["F"].join(o["F"]) == o["F"] and o["F"].meet(o["F"]) == o["F"]


@_check("filter-lattice", "subfilters-boolean")
def _chk_subfilters(o):
    F = o["F"]
    subs = F.subfilters()
    if len(subs) != 1 << len(F.core):
        return False
    return set(subs) == oracles.subfilters_by_enumeration(F)


@_law("filter-lattice")
def _law_filter_lattice(u: Universe, rng):
    cases = 0
    for ground in grounds_of(u):
        fs = filters_on(u, ground)
        for F in fs:
            cases += 2
            if not _chk_join_idem({"F": F}):
                return cases, _fail("filter-lattice", "join-idempotent", {"F": F}, "idempotence broke")
            if not _chk_subfilters({"F": F}):
                return cases, _fail("filter-lattice", "subfilters-boolean", {"F": F}, "subfilter lattice wrong")
            for G in fs:
                cases += 2
                o = {"F": F, "G": G}
                if not _chk_join_ext(o):
                    return cases, _fail("filter-lattice", "join-extensional", o, "join disagrees with family intersection")
                if not _chk_meet_ext(o):
                    return cases, _fail("filter-lattice", "meet-extensional", o, "meet disagrees with generated filter")
    return cases, None


# ----------------------------------------------------- filter galois


@_check("filter-galois", "galois-admissible")
def _chk_filter_galois(o):
    f, F, G = o["f"], o["F"], o["G"]
    return flt.pushforward(f, F).leq(G) == F.leq(flt.pullback(f, G))


@_check("filter-galois", "hypothesis-necessary")
def _chk_galois_hypothesis(o):
    # dd(f) deliberately not in F: the equivalence must fail on this instance
    f, F, G = o["f"], o["F"], o["G"]
    if F.contains(f.dd()):
        return False
    return flt.pushforward(f, F).leq(G) != F.leq(flt.pullback(f, G))


@_check("filter-galois", "push-functorial")
def _chk_push_functorial(o):
    f, g, F = o["f"], o["g"], o["F"]
    return flt.pushforward(g, flt.pushforward(f, F)) == flt.pushforward(g.compose(f), F)


@_check("filter-galois", "pull-functorial")
def _chk_pull_functorial(o):
    f, g, H = o["f"], o["g"], o["H"]
    return flt.pullback(f, flt.pullback(g, H)) == flt.pullback(g.compose(f), H)


@_law("filter-galois")
def _law_filter_galois(u: Universe, rng):
    cases = 0
    gs = grounds_of(u)
    for S, T in iproduct(gs, gs):
        for f in oracles.partial_fns(S, T):
            for F in filters_on(u, S):
                if not germs.is_admissible(f, F):
                    continue
                for G in filters_on(u, T):
                    cases += 1
                    o = {"f": f, "F": F, "G": G}
                    if not _chk_filter_galois(o):
                        return cases, _fail("filter-galois", "galois-admissible", o, "galois equivalence broke for admissible f")
    for S, T, W in iproduct(gs, gs, gs):
        for f in oracles.partial_fns(S, T):
            for g in oracles.partial_fns(T, W):
                for F in filters_on(u, S):
                    cases += 1
                    o = {"f": f, "g": g, "F": F}
                    if not _chk_push_functorial(o):
                        return cases, _fail("filter-galois", "push-functorial", o, "pushforward chain broke")
                for H in filters_on(u, W):
                    cases += 1
                    o = {"f": f, "g": g, "H": H}
                    if not _chk_pull_functorial(o):
                        return cases, _fail("filter-galois", "pull-functorial", o, "pullback chain broke")
    # stored counterexample: the admissibility hypothesis is necessary
    S = GroundSet.of_labels(["0", "1"])
    T = GroundSet.of_labels(["x"])
    f = PartialFn(S, T, {S.atoms[0]: T.atoms[0]})
    F = Filter.top(S)
    G = Filter.top(T)
    cases += 1
    o = {"f": f, "F": F, "G": G}
    if not _chk_galois_hypothesis(o):
        return cases, _fail(
            "filter-galois", "hypothesis-necessary", o,
            "stored inadmissible instance no longer violates the equivalence")
    return cases, None


# ----------------------------------------------------- germ equivalence


@_check("germ-equivalence", "reflexive")
def _chk_equiv_reflexive(o):
    return germs.germ_equiv(o["f"], o["f"], o["F"])


@_check("germ-equivalence", "symmetric")
def _chk_equiv_symmetric(o):
    f, g, F = o["f"], o["g"], o["F"]
    return germs.germ_equiv(f, g, F) == germs.germ_equiv(g, f, F)


@_check("germ-equivalence", "transitive")
def _chk_equiv_transitive(o):
    f, g, h, F = o["f"], o["g"], o["h"], o["F"]
    if germs.germ_equiv(f, g, F) and germs.germ_equiv(g, h, F):
        return germs.germ_equiv(f, h, F)
    return True


@_check("germ-equivalence", "preserves-admissible")
def _chk_equiv_admissible(o):
    f, g, F = o["f"], o["g"], o["F"]
    if not germs.germ_equiv(f, g, F):
        return True
    return germs.is_admissible(f, F) == germs.is_admissible(g, F)


@_check("germ-equivalence", "preserves-local")
def _chk_equiv_local(o):
    f, g, F, G = o["f"], o["g"], o["F"], o["G"]
    if not germs.germ_equiv(f, g, F):
        return True
    return germs.is_local(f, F, G) == germs.is_local(g, F, G)


@_check("germ-equivalence", "common-restriction")
def _chk_common_restriction(o):
    f, g, F = o["f"], o["g"], o["F"]
    if not germs.germ_equiv(f, g, F):
        return True
    if not (germs.is_admissible(f, F) and germs.is_admissible(g, F)):
        return True
    # construct the witness member and verify its three properties
    member = f.dd() & g.dd() & _equiv_member(f, g, F)
    if not F.contains(member):
        return False
    if not (member <= f.dd() & g.dd()):
        return False
    return f.restrict(member) == g.restrict(member)


def _equiv_member(f, g, F):
    for member in F.members():
        if f.dd() & member == g.dd() & member and all(
            f.graph[a] == g.graph[a] for a in f.dd() & g.dd() & member
        ):
            return member
    raise FilError("E_GERM", "no witness member found for equivalent functions")


@_check("germ-equivalence", "composition-well-defined")
def _chk_composition_well_defined(o):
    f, f2, g, g2, F, G = o["f"], o["f2"], o["g"], o["g2"], o["F"], o["G"]
    if not (germs.germ_equiv(f, f2, F) and germs.germ_equiv(g, g2, G)):
        return True
    return germs.germ_equiv(g.compose(f), g2.compose(f2), F)


@_law("germ-equivalence")
def _law_germ_equivalence(u: Universe, rng):
    cases = 0
    gs = grounds_of(u)
    for S, T in iproduct(gs, gs):
        pfs = list(oracles.partial_fns(S, T))
        for F in filters_on(u, S):
            for f in pfs:
                cases += 1
                if not _chk_equiv_reflexive({"f": f, "F": F}):
                    return cases, _fail("germ-equivalence", "reflexive", {"f": f, "F": F}, "not reflexive")
                for g in pfs:
                    cases += 1
                    o = {"f": f, "g": g, "F": F}
                    if not _chk_equiv_symmetric(o):
                        return cases, _fail("germ-equivalence", "symmetric", o, "not symmetric")
                    if not _chk_equiv_admissible(o):
                        return cases, _fail("germ-equivalence", "preserves-admissible", o, "admissibility not a class property")
                    if not _chk_common_restriction(o):
                        return cases, _fail("germ-equivalence", "common-restriction", o, "witness member failed")
                    for G in filters_on(u, T):
                        cases += 1
                        og = {"f": f, "g": g, "F": F, "G": G}
                        if not _chk_equiv_local(og):
                            return cases, _fail("germ-equivalence", "preserves-local", og, "locality not a class property")
            # transitivity sampled: triples are cubic in the function count
            for _ in range(SAMPLES):
                f, g, h = rng.choice(pfs), rng.choice(pfs), rng.choice(pfs)
                cases += 1
                o = {"f": f, "g": g, "h": h, "F": F}
                if not _chk_equiv_transitive(o):
                    return cases, _fail("germ-equivalence", "transitive", o, "not transitive")
    # composition well-definedness, via arrow representatives; the fibre of
    # representatives over a germ is exponential in the non-core points, so
    # big fibres are sampled
    for psi, phi in composable_pairs(u):
        reps_phi = list(oracles.representatives_of(phi.germ))
        reps_psi = list(oracles.representatives_of(psi.germ))
        quads = [
            (f, f2, g, g2)
            for f, f2 in iproduct(reps_phi, reps_phi)
            for g, g2 in iproduct(reps_psi, reps_psi)
        ]
        if len(quads) > 16:
            quads = [rng.choice(quads) for _ in range(16)]
        for f, f2, g, g2 in quads:
            cases += 1
            o = {"f": f, "f2": f2, "g": g, "g2": g2,
                 "F": phi.source, "G": phi.target}
            if not _chk_composition_well_defined(o):
                return cases, _fail("germ-equivalence", "composition-well-defined", o, "composite germ depends on representatives")
    # the configuration flagged in the source: representatives with unequal
    # domains of definition outside the witness member
    S = GroundSet.of_labels(["0", "1"])
    T = GroundSet.of_labels(["x", "y"])
    W = GroundSet.of_labels(["p", "q"])
    a0, a1 = S.atoms
    x, y = T.atoms
    p, q = W.atoms
    F = Filter(S, S.subset([a0]))
    G = Filter(T, T.subset([x]))
    f = PartialFn(S, T, {a0: x})
    f2 = PartialFn(S, T, {a0: x, a1: y})
    g = PartialFn(T, W, {x: p})
    g2 = PartialFn(T, W, {x: p, y: q})
    cases += 1
    o = {"f": f, "f2": f2, "g": g, "g2": g2, "F": F, "G": G}
    if not _chk_composition_well_defined(o):
        return cases, _fail("germ-equivalence", "composition-well-defined", o, "flagged dd configuration broke")
    return cases, None


# ----------------------------------------------------- category axioms


@_check("category-axioms", "associativity")
def _chk_assoc(o):
    xi, psi, phi = o["xi"], o["psi"], o["phi"]
    return germs.compose(germs.compose(xi, psi), phi) == germs.compose(xi, germs.compose(psi, phi))


@_check("category-axioms", "left-unit")
def _chk_left_unit(o):
    phi = o["phi"]
    return germs.compose(FilArrow.identity(phi.target), phi) == phi


@_check("category-axioms", "right-unit")
def _chk_right_unit(o):
    phi = o["phi"]
    return germs.compose(phi, FilArrow.identity(phi.source)) == phi


@_law("category-axioms")
def _law_category_axioms(u: Universe, rng):
    cases = 0
    for phi in arrows_of(u):
        cases += 2
        if not _chk_left_unit({"phi": phi}):
            return cases, _fail("category-axioms", "left-unit", {"phi": phi}, "identity not a left unit")
        if not _chk_right_unit({"phi": phi}):
            return cases, _fail("category-axioms", "right-unit", {"phi": phi}, "identity not a right unit")
    for xi, psi, phi in composable_triples(u):
        cases += 1
        o = {"xi": xi, "psi": psi, "phi": phi}
        if not _chk_assoc(o):
            return cases, _fail("category-axioms", "associativity", o, "composition not associative")
    return cases, None


# ----------------------------------------------------- germ galois + restriction


@_check("germ-galois", "galois")
def _chk_germ_galois(o):
    # the germ is carried by its canonical representative f0 over F
    germ = germs.germ_of(o["f0"], o["F"])
    Fp, G = o["Fp"], o["G"]
    return germ.push(Fp).leq(G) == Fp.leq(germ.pull(G))


@_check("germ-galois", "push-representative-free")
def _chk_push_rep_free(o):
    germ = germs.germ_of(o["f0"], o["F"])
    return flt.pushforward(o["f"], o["Fp"]) == germ.push(o["Fp"])


@_check("germ-galois", "pull-representative-free")
def _chk_pull_rep_free(o):
    germ = germs.germ_of(o["f0"], o["F"])
    lhs = flt.meet_filters([flt.pullback(o["f"], o["G"]), o["F"]])
    return lhs == germ.pull(o["G"])


@_law("germ-galois")
def _law_germ_galois(u: Universe, rng):
    cases = 0
    for S in grounds_of(u):
        for T in grounds_of(u):
            for F in filters_on(u, S):
                for germ in germs.enum_admissible_germs(F, T):
                    f0 = germ.rep()
                    for Fp in F.subfilters():
                        for G in filters_on(u, T):
                            cases += 1
                            o = {"f0": f0, "F": F, "Fp": Fp, "G": G}
                            if not _chk_germ_galois(o):
                                return cases, _fail("germ-galois", "galois", o, "push/pull galois broke")
                    for f in oracles.representatives_of(germ):
                        for Fp in F.subfilters():
                            cases += 1
                            o = {"f0": f0, "F": F, "f": f, "Fp": Fp}
                            if not _chk_push_rep_free(o):
                                return cases, _fail("germ-galois", "push-representative-free", o, "push depends on representative")
                        for G in filters_on(u, T):
                            cases += 1
                            o = {"f0": f0, "F": F, "f": f, "G": G}
                            if not _chk_pull_rep_free(o):
                                return cases, _fail("germ-galois", "pull-representative-free", o, "pull depends on representative")
    return cases, None


@_check("germ-restriction", "restricts")
def _chk_germ_restrict(o):
    f, F, Fbar = o["f"], o["F"], o["Fbar"]
    return germs.germ_of(f, F).restrict(Fbar) == germs.germ_of(f, Fbar)


@_law("germ-restriction")
def _law_germ_restriction(u: Universe, rng):
    cases = 0
    for S in grounds_of(u):
        for T in grounds_of(u):
            for F in filters_on(u, S):
                for f in oracles.admissible_fns(F, T):
                    for Fbar in F.subfilters():
                        cases += 1
                        o = {"f": f, "F": F, "Fbar": Fbar}
                        if not _chk_germ_restrict(o):
                            return cases, _fail("germ-restriction", "restricts", o, "restriction identity broke")
    return cases, None


@_check("locality-characterization", "three-way")
def _chk_locality_threeway(o):
    germ = germs.germ_of(o["f0"], o["F"])
    G = o["G"]
    reps = list(oracles.representatives_of(germ))
    some = any(oracles.local_quantified(f, germ.source, G) for f in reps)
    every = all(oracles.local_quantified(f, germ.source, G) for f in reps)
    push_cond = germ.push(germ.source).leq(G)
    return some == every == push_cond


@_law("locality-characterization")
def _law_locality_characterization(u: Universe, rng):
    cases = 0
    for S in grounds_of(u):
        for T in grounds_of(u):
            for F in filters_on(u, S):
                for germ in germs.enum_admissible_germs(F, T):
                    f0 = germ.rep()
                    for G in filters_on(u, T):
                        cases += 1
                        o = {"f0": f0, "F": F, "G": G}
                        if not _chk_locality_threeway(o):
                            return cases, _fail("locality-characterization", "three-way", o, "the three locality conditions diverge")
    return cases, None


@_check("total-representative", "extends-totally")
def _chk_total_rep(o):
    phi = o["phi"]
    if not phi.target.is_proper():
        return True
    fill = phi.target.core.atoms()[0]
    table = dict(phi.table)
    for a in phi.source.ground:
        table.setdefault(a, fill)
    total = PartialFn(phi.source.ground, phi.target.ground, table)
    if not total.is_total():
        return False
    if not germs.is_local(total, phi.source, phi.target):
        return False
    return germs.germ_of(total, phi.source) == phi.germ


@_law("total-representative")
def _law_total_representative(u: Universe, rng):
    cases = 0
    for phi in arrows_of(u):
        cases += 1
        if not _chk_total_rep({"phi": phi}):
            return cases, _fail("total-representative", "extends-totally", {"phi": phi}, "no total representative")
    return cases, None


# ----------------------------------------------------- factorization


@_check("factorization", "factor-composes")
def _chk_factor_composes(o):
    phi = o["phi"]
    pair = fact.factor(phi)
    return (
        fact.is_e(pair.epi_part)
        and fact.is_m(pair.mono_part)
        and germs.compose(pair.mono_part, pair.epi_part) == phi
        and pair.mid == phi.germ.push(phi.source)
    )


@_check("factorization", "classes-closed")
def _chk_classes_closed(o):
    psi, phi = o["psi"], o["phi"]
    comp = germs.compose(psi, phi)
    if fact.is_e(psi) and fact.is_e(phi) and not fact.is_e(comp):
        return False
    if fact.is_m(psi) and fact.is_m(phi) and not fact.is_m(comp):
        return False
    return True


@_check("factorization", "identity-in-both")
def _chk_identity_in_both(o):
    ident = FilArrow.identity(o["F"])
    return fact.is_e(ident) and fact.is_m(ident)


@_check("factorization", "diagonal-unique")
def _chk_diagonal_unique(o):
    eps, alpha, beta, mu = o["eps"], o["alpha"], o["beta"], o["mu"]
    fills = [
        d
        for d in germs.hom_set(eps.target, alpha.target)
        if germs.compose(d, eps) == alpha and germs.compose(mu, d) == beta
    ]
    if len(fills) != 1:
        return False
    return fact.diagonal_fill(eps, alpha, beta, mu) == fills[0]


@_law("factorization")
def _law_factorization(u: Universe, rng):
    cases = 0
    for F in filters_of(u):
        cases += 1
        if not _chk_identity_in_both({"F": F}):
            return cases, _fail("factorization", "identity-in-both", {"F": F}, "identity not in both classes")
    for phi in arrows_of(u):
        cases += 1
        if not _chk_factor_composes({"phi": phi}):
            return cases, _fail("factorization", "factor-composes", {"phi": phi}, "factorization broke")
    for psi, phi in composable_pairs(u):
        cases += 1
        o = {"psi": psi, "phi": phi}
        if not _chk_classes_closed(o):
            return cases, _fail("factorization", "classes-closed", o, "class not closed under composition")
    by_source = arrows_by_source(u)
    for eps in arrows_of(u):
        if not fact.is_e(eps):
            continue
        for mu in arrows_of(u):
            if not fact.is_m(mu):
                continue
            for alpha in germs.hom_set(eps.source, mu.source):
                for beta in germs.hom_set(eps.target, mu.target):
                    if germs.compose(beta, eps) != germs.compose(mu, alpha):
                        continue
                    cases += 1
                    o = {"eps": eps, "alpha": alpha, "beta": beta, "mu": mu}
                    if not _chk_diagonal_unique(o):
                        return cases, _fail("factorization", "diagonal-unique", o, "diagonal fill not unique")
    return cases, None


@_check("epi-exactness", "matches-brute-force")
def _chk_epi_brute(o):
    phi = o["phi"]
    return fact.is_e(phi) == oracles.brute_force_epi(phi, oracles.test_filters_up_to(4))


@_law("epi-exactness")
def _law_epi_exactness(u: Universe, rng):
    cases = 0
    for phi in arrows_of(u):
        cases += 1
        if not _chk_epi_brute({"phi": phi}):
            return cases, _fail("epi-exactness", "matches-brute-force", {"phi": phi}, "epi and E disagree")
    return cases, None


@_check("monic-exactness", "matches-brute-force")
def _chk_monic_brute(o):
    phi = o["phi"]
    return fact.is_m(phi) == oracles.brute_force_monic(phi, oracles.test_filters_up_to(4))


@_law("monic-exactness")
def _law_monic_exactness(u: Universe, rng):
    cases = 0
    for phi in arrows_of(u):
        cases += 1
        if not _chk_monic_brute({"phi": phi}):
            return cases, _fail("monic-exactness", "matches-brute-force", {"phi": phi}, "monic and M disagree")
    return cases, None


@_check("iso-characterization", "inverse-search")
def _chk_iso_search(o):
    phi = o["phi"]
    ident_src = FilArrow.identity(phi.source)
    ident_tgt = FilArrow.identity(phi.target)
    invertible = any(
        germs.compose(psi, phi) == ident_src and germs.compose(phi, psi) == ident_tgt
        for psi in germs.hom_set(phi.target, phi.source)
    )
    if invertible != fact.is_iso(phi):
        return False
    if fact.is_iso(phi):
        inv = fact.inverse(phi)
        return (
            germs.compose(inv, phi) == ident_src
            and germs.compose(phi, inv) == ident_tgt
        )
    return True


@_law("iso-characterization")
def _law_iso_characterization(u: Universe, rng):
    cases = 0
    for phi in arrows_of(u):
        cases += 1
        if not _chk_iso_search({"phi": phi}):
            return cases, _fail("iso-characterization", "inverse-search", {"phi": phi}, "iso test disagrees with inverse search")
    return cases, None


@_check("m-subobject-lattice", "size")
def _chk_msub_size(o):
    F = o["F"]
    poset = fact.m_subobject_poset(F)
    if len(poset.representatives) != 1 << len(F.core):
        return False
    for i, m in enumerate(poset.representatives):
        for m2 in poset.representatives[i + 1 :]:
            if poset.same_class(m, m2):
                return False
    return True


@_check("m-subobject-lattice", "class-invariant")
def _chk_msub_class(o):
    F, m, m2 = o["F"], o["m"], o["m2"]
    poset = fact.m_subobject_poset(F)
    return poset.same_class(m, m2) == (poset.to_subfilter(m) == poset.to_subfilter(m2))


@_check("m-subobject-lattice", "order-iso")
def _chk_msub_order(o):
    F, m, m2 = o["F"], o["m"], o["m2"]
    poset = fact.m_subobject_poset(F)
    return poset.leq(m, m2) == poset.to_subfilter(m).leq(poset.to_subfilter(m2))


@_check("m-subobject-lattice", "mutually-inverse")
def _chk_msub_inverse(o):
    F, m = o["F"], o["m"]
    poset = fact.m_subobject_poset(F)
    image = poset.to_subfilter(m)
    if not poset.same_class(poset.from_subfilter(image), m):
        return False
    return all(
        poset.to_subfilter(poset.from_subfilter(sub)) == sub for sub in F.subfilters()
    )


@_law("m-subobject-lattice")
def _law_m_subobject_lattice(u: Universe, rng):
    cases = 0
    by_target = arrows_by_target(u)
    for F in filters_of(u):
        cases += 1
        if not _chk_msub_size({"F": F}):
            return cases, _fail("m-subobject-lattice", "size", {"F": F}, "class count wrong")
        monos = [m for m in by_target.get(F, ()) if fact.is_m(m)]
        for m in monos:
            cases += 1
            o = {"F": F, "m": m}
            if not _chk_msub_inverse(o):
                return cases, _fail("m-subobject-lattice", "mutually-inverse", o, "Z and its inverse disagree")
            for m2 in monos:
                cases += 1
                o2 = {"F": F, "m": m, "m2": m2}
                if not _chk_msub_class(o2):
                    return cases, _fail("m-subobject-lattice", "class-invariant", o2, "image filter not a class invariant")
                if not _chk_msub_order(o2):
                    return cases, _fail("m-subobject-lattice", "order-iso", o2, "diagram order disagrees with subfilter order")
    return cases, None


# ----------------------------------------------------- limits


@_check("equalizer-universal", "commutes")
def _chk_equalizer_commutes(o):
    alpha, beta = o["alpha"], o["beta"]
    eq, incl = limits.equalizer(alpha, beta)
    if germs.compose(alpha, incl) != germs.compose(beta, incl):
        return False
    if alpha == beta and eq != alpha.source:
        return False
    if not alpha.target.is_proper() and not fact.is_iso(incl):
        return False
    return True


@_check("equalizer-universal", "mediates-uniquely")
def _chk_equalizer_mediates(o):
    alpha, beta, gamma = o["alpha"], o["beta"], o["gamma"]
    if germs.compose(alpha, gamma) != germs.compose(beta, gamma):
        return True
    eq, incl = limits.equalizer(alpha, beta)
    mediators = [
        h for h in _hom(gamma.source, eq) if germs.compose(incl, h) == gamma
    ]
    return len(mediators) == 1


@_law("equalizer-universal")
def _law_equalizer_universal(u: Universe, rng):
    cases = 0
    by_source = arrows_by_source(u)
    for alpha in arrows_of(u):
        for beta in germs.hom_set(alpha.source, alpha.target):
            cases += 1
            o = {"alpha": alpha, "beta": beta}
            if not _chk_equalizer_commutes(o):
                return cases, _fail("equalizer-universal", "commutes", o, "equalizer fork broke")
            for gamma in arrows_by_target(u).get(alpha.source, ()):
                cases += 1
                og = {"alpha": alpha, "beta": beta, "gamma": gamma}
                if not _chk_equalizer_mediates(og):
                    return cases, _fail("equalizer-universal", "mediates-uniquely", og, "mediating arrow not unique")
    return cases, None


@_check("product-universal", "mediates-uniquely")
def _chk_product_mediates(o):
    factors = [o[k] for k in sorted(o) if k.startswith("X")]
    cone = [o[k] for k in sorted(o) if k.startswith("leg")]
    prod, legs = limits.product_fil(factors)
    mediators = [
        m
        for m in _hom(cone[0].source, prod)
        if all(germs.compose(p, m) == c for p, c in zip(legs, cone))
    ]
    return len(mediators) == 1


@_check("product-universal", "terminal-empty")
def _chk_product_terminal(o):
    F = o["F"]
    prod, legs = limits.product_fil([])
    return prod == mon.unit_filter() and not legs and len(germs.hom_set(F, prod)) == 1


@_law("product-universal")
def _law_product_universal(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    for F in fs:
        cases += 1
        if not _chk_product_terminal({"F": F}):
            return cases, _fail("product-universal", "terminal-empty", {"F": F}, "empty product not terminal")
    for arity in (2, 3):
        for factors in iproduct(fs, repeat=arity):
            for K in fs:
                homs = [germs.hom_set(K, f) for f in factors]
                for cone in iproduct(*homs):
                    cases += 1
                    o = {f"X{i}": f for i, f in enumerate(factors)}
                    o.update({f"leg{i}": c for i, c in enumerate(cone)})
                    if not _chk_product_mediates(o):
                        return cases, _fail("product-universal", "mediates-uniquely", o, "tupling not unique")
    return cases, None


@_check("coproduct-universal", "mediates-uniquely")
def _chk_coproduct_mediates(o):
    factors = [o[k] for k in sorted(o) if k.startswith("X")]
    cocone = [o[k] for k in sorted(o) if k.startswith("leg")]
    cop, injections = limits.coproduct_fil(factors)
    mediators = [
        m
        for m in _hom(cop, cocone[0].target)
        if all(germs.compose(m, inj) == c for inj, c in zip(injections, cocone))
    ]
    return len(mediators) == 1


@_check("coproduct-universal", "singleton-iso")
def _chk_coproduct_singleton(o):
    F = o["F"]
    cop, (inj,) = limits.coproduct_fil([F])
    return fact.is_iso(inj)


@_law("coproduct-universal")
def _law_coproduct_universal(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    for F in fs:
        cases += 1
        if not _chk_coproduct_singleton({"F": F}):
            return cases, _fail("coproduct-universal", "singleton-iso", {"F": F}, "singleton coproduct not iso")
    for factors in iproduct(fs, repeat=2):
        for X in fs:
            homs = [germs.hom_set(f, X) for f in factors]
            for cocone in iproduct(*homs):
                cases += 1
                o = {f"X{i}": f for i, f in enumerate(factors)}
                o.update({f"leg{i}": c for i, c in enumerate(cocone)})
                if not _chk_coproduct_mediates(o):
                    return cases, _fail("coproduct-universal", "mediates-uniquely", o, "copairing not unique")
    return cases, None


@_check("pullback-universal", "square-commutes")
def _chk_pullback_commutes(o):
    phi, psi = o["phi"], o["psi"]
    P, p1, p2 = limits.pullback_cospan(phi, psi)
    return germs.compose(phi, p1) == germs.compose(psi, p2)


@_check("pullback-universal", "square-and-mediator")
def _chk_pullback_square(o):
    phi, psi, a, b = o["phi"], o["psi"], o["a"], o["b"]
    if germs.compose(phi, a) != germs.compose(psi, b):
        return True
    P, p1, p2 = limits.pullback_cospan(phi, psi)
    mediators = [
        m
        for m in _hom(a.source, P)
        if germs.compose(p1, m) == a and germs.compose(p2, m) == b
    ]
    return len(mediators) == 1


@_check("pullback-universal", "monos-agree")
def _chk_pullback_monos_agree(o):
    m1, m2 = o["m1"], o["m2"]
    apex_m, legs_m = limits.pullback_monos(m1.target, [m1, m2])
    apex_c, p1, p2 = limits.pullback_cospan(m1, m2)
    for iso in germs.hom_set(apex_m, apex_c):
        if not fact.is_iso(iso):
            continue
        if germs.compose(p1, iso) == legs_m[0] and germs.compose(p2, iso) == legs_m[1]:
            return True
    return False


@_law("pullback-universal")
def _law_pullback_universal(u: Universe, rng):
    cases = 0
    by_target = arrows_by_target(u)
    for G in filters_of(u):
        into_g = by_target.get(G, ())
        for phi in into_g:
            for psi in into_g:
                cases += 1
                o = {"phi": phi, "psi": psi}
                if not _chk_pullback_commutes(o):
                    return cases, _fail("pullback-universal", "square-commutes", o, "pullback square does not commute")
                for K in filters_of(u):
                    for a in _hom(K, phi.source):
                        for b in _hom(K, psi.source):
                            cases += 1
                            o = {"phi": phi, "psi": psi, "a": a, "b": b}
                            if not _chk_pullback_square(o):
                                return cases, _fail("pullback-universal", "square-and-mediator", o, "pullback universal property broke")
        monos = [m for m in into_g if fact.is_m(m)]
        for m1 in monos:
            for m2 in monos:
                cases += 1
                o = {"m1": m1, "m2": m2}
                if not _chk_pullback_monos_agree(o):
                    return cases, _fail("pullback-universal", "monos-agree", o, "mono pullback disagrees with cospan pullback")
    return cases, None


@_check("e-stability", "pullback-leg-in-e")
def _chk_e_stability(o):
    eps, psi = o["eps"], o["psi"]
    _, _, p2 = limits.pullback_cospan(eps, psi)
    return fact.is_e(p2)


@_law("e-stability")
def _law_e_stability(u: Universe, rng):
    cases = 0
    by_target = arrows_by_target(u)
    for eps in arrows_of(u):
        if not fact.is_e(eps):
            continue
        for psi in by_target.get(eps.target, ()):
            cases += 1
            o = {"eps": eps, "psi": psi}
            if not _chk_e_stability(o):
                return cases, _fail("e-stability", "pullback-leg-in-e", o, "pulled-back epi left E")
    return cases, None


# ----------------------------------------------------- core adjunction


@_check("core-adjunction", "bijection")
def _chk_core_adj_bijection(o):
    S, G = o["S"], o["G"]
    witness = limits.core_adjunction_witness(S, G)
    homs = witness.hom_side()
    funcs = witness.function_side()
    if len(homs) != len(funcs):
        return False
    for arrow in homs:
        if witness.function_to_arrow(witness.arrow_to_function(arrow)) != arrow:
            return False
    for func in funcs:
        if witness.arrow_to_function(witness.function_to_arrow(func)) != func:
            return False
    return True


@_check("core-adjunction", "natural-in-set")
def _chk_core_adj_nat_set(o):
    t, G, phi = o["t"], o["G"], o["phi"]
    src = limits.core_adjunction_witness(t.dom, G)
    dst = limits.core_adjunction_witness(t.cod, G)
    lt = germs.mk_arrow(limits.unit_l(t.dom), limits.unit_l(t.cod), t)
    lhs = src.arrow_to_function(germs.compose(phi, lt))
    rhs = {a: dst.arrow_to_function(phi)[t.graph[a]] for a in t.dom}
    return lhs == rhs


@_check("core-adjunction", "natural-in-filter")
def _chk_core_adj_nat_filter(o):
    S, gamma, phi = o["S"], o["gamma"], o["phi"]
    src = limits.core_adjunction_witness(S, gamma.source)
    dst = limits.core_adjunction_witness(S, gamma.target)
    lhs = dst.arrow_to_function(germs.compose(gamma, phi))
    rhs = {a: gamma.table[v] for a, v in src.arrow_to_function(phi).items()}
    return lhs == rhs


@_check("core-adjunction", "triangles")
def _chk_core_adj_triangles(o):
    S, G = o["S"], o["G"]
    # counit at G: the inclusion of the core, as an arrow out of L(core G)
    core_ground = GroundSet(G.core.atoms())
    eps = FilArrow(
        germs.Germ(limits.unit_l(core_ground), G.ground, {a: a for a in core_ground}),
        G,
    )
    # core(eps) . eta_{core G} = identity on core G
    if {a: eps.table[a] for a in core_ground} != {a: a for a in core_ground}:
        return False
    # eps_{L S} . L(eta_S) = identity on L S
    ls = limits.unit_l(S)
    eps_ls = FilArrow(germs.Germ(limits.unit_l(GroundSet(ls.core.atoms())), S, {a: a for a in S}), ls)
    l_eta = FilArrow(germs.Germ(ls, S, {a: a for a in S}), limits.unit_l(GroundSet(ls.core.atoms())))
    return germs.compose(eps_ls, l_eta) == FilArrow.identity(ls)


@_law("core-adjunction")
def _law_core_adjunction(u: Universe, rng):
    cases = 0
    for S in grounds_of(u):
        for G in filters_of(u):
            cases += 1
            o = {"S": S, "G": G}
            if not _chk_core_adj_bijection(o):
                return cases, _fail("core-adjunction", "bijection", o, "hom/function bijection broke")
            cases += 1
            if not _chk_core_adj_triangles(o):
                return cases, _fail("core-adjunction", "triangles", o, "triangle identity broke")
            witness = limits.core_adjunction_witness(S, G)
            for phi in witness.hom_side():
                for Sp in grounds_of(u):
                    for t in oracles.partial_fns(Sp, S):
                        if not t.is_total():
                            continue
                        cases += 1
                        ot = {"t": t, "G": G, "phi": phi}
                        if not _chk_core_adj_nat_set(ot):
                            return cases, _fail("core-adjunction", "natural-in-set", ot, "naturality in the set broke")
                for gamma in arrows_by_source(u).get(G, ()):
                    cases += 1
                    og = {"S": S, "gamma": gamma, "phi": phi}
                    if not _chk_core_adj_nat_filter(og):
                        return cases, _fail("core-adjunction", "natural-in-filter", og, "naturality in the filter broke")
    return cases, None


# ----------------------------------------------------- monoidal product


@_check("box-base", "generated-agrees")
def _chk_box_generated(o):
    F, G = o["F"], o["G"]
    return mon.box_filter(F, G) == oracles.box_by_base_generation(F, G)


@_check("box-base", "member-slice-agrees")
def _chk_box_member(o):
    F, G, X = o["F"], o["G"], o["X"]
    return mon.box_member(F, G, X) == mon.box_filter(F, G).contains(X)


@_check("box-base", "member-s-box-form")
def _chk_box_sform(o):
    from .finset import Pair

    F, G, X = o["F"], o["G"], o["X"]
    if not mon.box_member(F, G, X):
        return True
    rebuilt = X.ground.subset(
        Pair(s, t)
        for s in F.ground
        for t in G.ground
        if Pair(s, t) in X
    )
    return rebuilt == X


@_check("box-base", "base-intersection-compatible")
def _chk_box_base_compatible(o):
    from .finset import Pair

    F, G = o["F"], o["G"]
    ground = mon.box_filter(F, G).ground
    members_g = list(G.members())
    pairs = []
    for f_member in list(F.members())[:3]:
        cols = f_member.atoms()
        for assignment in iproduct(members_g[:3], repeat=len(cols)):
            rows = dict(zip(cols, assignment))
            pairs.append((f_member, rows))
    for F1, g1 in pairs:
        for F2, g2 in pairs:
            inter_base = F1 & F2
            box1 = ground.subset(Pair(s, t) for s in F1 for t in g1[s])
            box2 = ground.subset(Pair(s, t) for s in F2 for t in g2[s])
            combined = ground.subset(
                Pair(s, t) for s in inter_base for t in (g1[s] & g2[s])
            )
            if not (combined <= box1 & box2):
                return False
            for s in inter_base:
                if not G.contains(g1[s] & g2[s]):
                    return False
    return True


@_check("box-base", "bigf-smallh-domain")
def _chk_bigf_smallh(o):
    F, G, X = o["F"], o["G"], o["X"]
    base = mon.big_f(F, G, X)
    table = mon.small_h(F, G, X)
    if set(table) != set(base.atoms()):
        return False
    return all(G.contains(v) for v in table.values())


@_law("box-base")
def _law_box_base(u: Universe, rng):
    cases = 0
    for S in grounds_of(u):
        for T in grounds_of(u):
            for F in filters_on(u, S):
                for G in filters_on(u, T):
                    cases += 2
                    o = {"F": F, "G": G}
                    if not _chk_box_generated(o):
                        return cases, _fail("box-base", "generated-agrees", o, "base generation disagrees with core formula")
                    if not _chk_box_base_compatible(o):
                        return cases, _fail("box-base", "base-intersection-compatible", o, "base sets not intersection-compatible")
                    for X in mon.box_filter(F, G).ground.all_subsets():
                        cases += 1
                        ox = {"F": F, "G": G, "X": X}
                        if not _chk_box_member(ox):
                            return cases, _fail("box-base", "member-slice-agrees", ox, "slice membership disagrees")
                        if not _chk_box_sform(ox):
                            return cases, _fail("box-base", "member-s-box-form", ox, "member not of slice form")
                        if not _chk_bigf_smallh(ox):
                            return cases, _fail("box-base", "bigf-smallh-domain", ox, "slice assignment domain wrong")
    return cases, None


@_check("monoidal-functoriality", "box-partial-functorial")
def _chk_box_partial_functor(o):
    f, f2, g, g2 = o["f"], o["f2"], o["g"], o["g2"]
    lhs = mon.box_partial(f2, g2).compose(mon.box_partial(f, g))
    rhs = mon.box_partial(f2.compose(f), g2.compose(g))
    return lhs == rhs


@_check("monoidal-functoriality", "box-arrow-functorial")
def _chk_box_arrow_functor(o):
    phi, phi2, psi, psi2 = o["phi"], o["phi2"], o["psi"], o["psi2"]
    lhs = germs.compose(mon.box_arrow(phi2, psi2), mon.box_arrow(phi, psi))
    rhs = mon.box_arrow(germs.compose(phi2, phi), germs.compose(psi2, psi))
    return lhs == rhs


@_check("monoidal-functoriality", "box-arrow-identity")
def _chk_box_arrow_identity(o):
    F, G = o["F"], o["G"]
    boxed = mon.box_filter(F, G)
    return mon.box_arrow(FilArrow.identity(F), FilArrow.identity(G)) == FilArrow.identity(boxed)


@_check("monoidal-functoriality", "germ-well-defined")
def _chk_box_germ_well_defined(o):
    f, f2, g, g2, F, G = o["f"], o["f2"], o["g"], o["g2"], o["F"], o["G"]
    if not (germs.germ_equiv(f, f2, F) and germs.germ_equiv(g, g2, G)):
        return True
    boxed = mon.box_filter(F, G)
    return germs.germ_equiv(mon.box_partial(f, g), mon.box_partial(f2, g2), boxed)


@_check("monoidal-functoriality", "gamma-strict")
def _chk_box_gamma(o):
    phi, psi = o["phi"], o["psi"]
    boxed = mon.box_filter(phi.source, psi.source)
    raw = mon.box_partial(phi.germ.rep(), psi.germ.rep())
    return germs.germ_of(raw, boxed) == mon.box_arrow(phi, psi).germ


@_law("monoidal-functoriality")
def _law_monoidal_functoriality(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    for F, G in iproduct(fs, fs):
        cases += 1
        o = {"F": F, "G": G}
        if not _chk_box_arrow_identity(o):
            return cases, _fail("monoidal-functoriality", "box-arrow-identity", o, "box of identities not identity")
    pairs = list(composable_pairs(u))
    # the pair-of-pairs space is quartic in the arrow count: exhaustive on
    # the size<=1 subuniverse, seeded samples beyond it
    small_pairs = [
        (psi, phi)
        for psi, phi in pairs
        if len(phi.source.ground) <= 1
        and len(phi.target.ground) <= 1
        and len(psi.target.ground) <= 1
    ]
    batches = [iproduct(small_pairs, small_pairs)]
    batches.append(
        (rng.choice(pairs), rng.choice(pairs)) for _ in range(SAMPLES * 25)
    )
    for batch in batches:
        for (psi2, psi), (phi2, phi) in batch:
            cases += 1
            o = {"phi": phi, "phi2": phi2, "psi": psi, "psi2": psi2}
            if not _chk_box_arrow_functor(o):
                return cases, _fail("monoidal-functoriality", "box-arrow-functorial", o, "box functor broke on composition")
    gs = grounds_of(u)
    for _ in range(SAMPLES):
        S, T, W = rng.choice(gs), rng.choice(gs), rng.choice(gs)
        S2, T2 = rng.choice(gs), rng.choice(gs)
        f = _random_extension(rng, S, T, {})
        f2 = _random_extension(rng, T, W, {})
        g = _random_extension(rng, S2, T2, {})
        g2 = _random_extension(rng, T2, rng.choice(gs), {})
        cases += 1
        o = {"f": f, "f2": f2, "g": g, "g2": g2}
        if not _chk_box_partial_functor(o):
            return cases, _fail("monoidal-functoriality", "box-partial-functorial", o, "raw box composition broke")
    for phi, psi in iproduct(arrows_of(u), repeat=2):
        cases += 1
        o = {"phi": phi, "psi": psi}
        if not _chk_box_gamma(o):
            return cases, _fail("monoidal-functoriality", "gamma-strict", o, "germ functor not strict on box")
    for phi, psi in iproduct(arrows_of(u), repeat=2):
        reps_phi = list(oracles.representatives_of(phi.germ))
        reps_psi = list(oracles.representatives_of(psi.germ))
        for _ in range(4):
            f, f2 = rng.choice(reps_phi), rng.choice(reps_phi)
            g, g2 = rng.choice(reps_psi), rng.choice(reps_psi)
            cases += 1
            o = {"f": f, "f2": f2, "g": g, "g2": g2,
                 "F": phi.source, "G": psi.source}
            if not _chk_box_germ_well_defined(o):
                return cases, _fail("monoidal-functoriality", "germ-well-defined", o, "box germ depends on representatives")
    return cases, None


@_check("monoidal-naturality", "alpha-natural")
def _chk_alpha_natural(o):
    p1, p2, p3 = o["p1"], o["p2"], o["p3"]
    lhs = germs.compose(
        mon.associator(p1.target, p2.target, p3.target),
        mon.box_arrow(p1, mon.box_arrow(p2, p3)),
    )
    rhs = germs.compose(
        mon.box_arrow(mon.box_arrow(p1, p2), p3),
        mon.associator(p1.source, p2.source, p3.source),
    )
    return lhs == rhs


@_check("monoidal-naturality", "unitors-natural")
def _chk_unitors_natural(o):
    phi = o["phi"]
    u_id = FilArrow.identity(mon.unit_filter())
    left_lhs = germs.compose(phi, mon.left_unitor(phi.source))
    left_rhs = germs.compose(mon.left_unitor(phi.target), mon.box_arrow(u_id, phi))
    right_lhs = germs.compose(phi, mon.right_unitor(phi.source))
    right_rhs = germs.compose(mon.right_unitor(phi.target), mon.box_arrow(phi, u_id))
    return left_lhs == left_rhs and right_lhs == right_rhs


@_check("monoidal-naturality", "isomorphisms")
def _chk_monoidal_isos(o):
    F, G, H = o["F"], o["G"], o["H"]
    return (
        fact.is_iso(mon.associator(F, G, H))
        and fact.is_iso(mon.left_unitor(F))
        and fact.is_iso(mon.right_unitor(F))
    )


@_law("monoidal-naturality")
def _law_monoidal_naturality(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    for F, G, H in iproduct(fs, fs, fs):
        cases += 1
        o = {"F": F, "G": G, "H": H}
        if not _chk_monoidal_isos(o):
            return cases, _fail("monoidal-naturality", "isomorphisms", o, "coherence arrow not iso")
    for phi in arrows_of(u):
        cases += 1
        if not _chk_unitors_natural({"phi": phi}):
            return cases, _fail("monoidal-naturality", "unitors-natural", {"phi": phi}, "unitor naturality broke")
    arrows = arrows_of(u)
    # exhaustive over the size<=1 subuniverse; the full triple space is cubic
    # in the arrow count, so the general case is a seeded sample
    small = [
        a
        for a in arrows
        if len(a.source.ground) <= 1 and len(a.target.ground) <= 1
    ]
    triples = [iproduct(small, small, small)]
    triples.append(
        (rng.choice(arrows), rng.choice(arrows), rng.choice(arrows))
        for _ in range(SAMPLES * 25)
    )
    for batch in triples:
        for p1, p2, p3 in batch:
            cases += 1
            o = {"p1": p1, "p2": p2, "p3": p3}
            if not _chk_alpha_natural(o):
                return cases, _fail("monoidal-naturality", "alpha-natural", o, "associator naturality broke")
    return cases, None


@_check("pentagon", "pentagon")
def _chk_pentagon(o):
    A, B, C, D = o["A"], o["B"], o["C"], o["D"]
    lhs = germs.compose(
        mon.associator(mon.box_filter(A, B), C, D),
        mon.associator(A, B, mon.box_filter(C, D)),
    )
    rhs = germs.compose(
        mon.box_arrow(mon.associator(A, B, C), FilArrow.identity(D)),
        germs.compose(
            mon.associator(A, mon.box_filter(B, C), D),
            mon.box_arrow(FilArrow.identity(A), mon.associator(B, C, D)),
        ),
    )
    return lhs == rhs


@_law("pentagon")
def _law_pentagon(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    for A, B, C, D in iproduct(fs, fs, fs, fs):
        cases += 1
        o = {"A": A, "B": B, "C": C, "D": D}
        if not _chk_pentagon(o):
            return cases, _fail("pentagon", "pentagon", o, "pentagon identity broke")
    return cases, None


@_check("triangle", "triangle")
def _chk_triangle(o):
    A, B = o["A"], o["B"]
    lhs = mon.box_arrow(FilArrow.identity(A), mon.left_unitor(B))
    rhs = germs.compose(
        mon.box_arrow(mon.right_unitor(A), FilArrow.identity(B)),
        mon.associator(A, mon.unit_filter(), B),
    )
    return lhs == rhs


@_law("triangle")
def _law_triangle(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    for A, B in iproduct(fs, fs):
        cases += 1
        o = {"A": A, "B": B}
        if not _chk_triangle(o):
            return cases, _fail("triangle", "triangle", o, "triangle identity broke")
    return cases, None


@_check("core-strict-monoidal", "arrow-core-product")
def _chk_core_strict(o):
    from .finset import Pair

    phi, psi = o["phi"], o["psi"]
    boxed = mon.box_arrow(phi, psi)
    expected = {
        Pair(a, b): Pair(va, vb)
        for a, va in phi.table.items()
        for b, vb in psi.table.items()
    }
    if limits.core_of_arrow(boxed) != expected:
        return False
    boxed_obj = mon.box_filter(phi.source, psi.source)
    from .finset import product_subset

    return boxed_obj.core == product_subset(phi.source.core, psi.source.core)


@_law("core-strict-monoidal")
def _law_core_strict_monoidal(u: Universe, rng):
    cases = 0
    for phi, psi in iproduct(arrows_of(u), repeat=2):
        cases += 1
        o = {"phi": phi, "psi": psi}
        if not _chk_core_strict(o):
            return cases, _fail("core-strict-monoidal", "arrow-core-product", o, "core not strictly monoidal")
    return cases, None


@_check("box-equals-product", "same-filter")
def _chk_box_equals_product(o):
    F, G = o["F"], o["G"]
    return mon.box_filter(F, G) == limits.product_fil([F, G])[0]


@_law("box-equals-product")
def _law_box_equals_product(u: Universe, rng):
    # implementation-level regression invariant, not a source claim
    cases = 0
    fs = filters_of(u)
    for F, G in iproduct(fs, fs):
        cases += 1
        o = {"F": F, "G": G}
        if not _chk_box_equals_product(o):
            return cases, _fail("box-equals-product", "same-filter", o, "box and product filters diverged")
    return cases, None


@_check("u-terminal", "unique-arrow-to-u")
def _chk_u_terminal(o):
    return len(germs.hom_set(o["F"], mon.unit_filter())) == 1


@_check("u-terminal", "core-bijection")
def _chk_u_core_bijection(o):
    F = o["F"]
    arrows = germs.hom_set(mon.unit_filter(), F)
    values = {next(iter(a.table.values())) for a in arrows}
    return len(arrows) == len(F.core) and values == set(F.core.atoms())


@_law("u-terminal")
def _law_u_terminal(u: Universe, rng):
    cases = 0
    for F in filters_of(u):
        cases += 2
        if not _chk_u_terminal({"F": F}):
            return cases, _fail("u-terminal", "unique-arrow-to-u", {"F": F}, "u not terminal")
        if not _chk_u_core_bijection({"F": F}):
            return cases, _fail("u-terminal", "core-bijection", {"F": F}, "hom from u not the core")
    return cases, None


# ----------------------------------------------------- internal hom / chi


@_check("fh-lemma", "slice-precompose-base")
def _chk_fh1(o):
    q, qbar, F, Fbar, H = o["q"], o["qbar"], o["F"], o["Fbar"], o["H"]
    # hypothesis: improper H with a non-total qbar falls outside the identity
    if not H.is_proper() and not qbar.is_total():
        return True
    qhat = q.compose(mon.box_partial(qbar, PartialFn.identity(H.ground)))
    lhs = mon.big_f(Fbar, H, qhat.dd())
    rhs = qbar.preimage(mon.big_f(F, H, q.dd()))
    return lhs == rhs


@_check("fh-lemma", "slice-precompose-fibre")
def _chk_fh2(o):
    q, qbar, F, Fbar, H = o["q"], o["qbar"], o["F"], o["Fbar"], o["H"]
    if not H.is_proper() and not qbar.is_total():
        return True
    qhat = q.compose(mon.box_partial(qbar, PartialFn.identity(H.ground)))
    lhs_table = mon.small_h(Fbar, H, qhat.dd())
    rhs_table = mon.small_h(F, H, q.dd())
    for s, fibre in lhs_table.items():
        if s not in qbar.graph:
            return False
        if fibre != rhs_table.get(qbar.graph[s]):
            return False
    return True


@_check("fh-lemma", "slice-postcompose-base")
def _chk_fh3(o):
    q, qtilde, F, H = o["q"], o["qtilde"], o["F"], o["H"]
    comp = qtilde.compose(q)
    return mon.big_f(F, H, comp.dd()) <= mon.big_f(F, H, q.dd())


@_check("fh-lemma", "slice-postcompose-fibre")
def _chk_fh4(o):
    q, qtilde, F, H = o["q"], o["qtilde"], o["F"], o["H"]
    comp = qtilde.compose(q)
    small_comp = mon.small_h(F, H, comp.dd())
    small_q = mon.small_h(F, H, q.dd())
    return all(fibre <= small_q[s] for s, fibre in small_comp.items())


@_law("fh-lemma")
def _law_fh_lemma(u: Universe, rng):
    from .finset import Pair

    cases = 0
    sizes = [0, 1, 2, 3]
    for _ in range(SAMPLES * 4):
        Sb = GroundSet.of_labels(f"p{i}" for i in range(rng.choice(sizes)))
        S = GroundSet.of_labels(f"s{i}" for i in range(rng.choice(sizes)))
        T = GroundSet.of_labels(f"t{i}" for i in range(rng.choice(sizes)))
        Tt = GroundSet.of_labels(f"u{i}" for i in range(rng.choice(sizes)))
        W = GroundSet.of_labels(f"w{i}" for i in range(rng.choice(sizes)))
        Fbar = Filter(Sb, Subset(Sb, rng.randrange(1 << len(Sb))))
        F = Filter(S, Subset(S, rng.randrange(1 << len(S))))
        G = Filter(T, Subset(T, rng.randrange(1 << len(T))))
        Gt = Filter(Tt, Subset(Tt, rng.randrange(1 << len(Tt))))
        H = Filter(W, Subset(W, rng.randrange(1 << len(W))))
        boxed = mon.box_filter(F, H)
        core_g = G.core.atoms()
        core_gt = Gt.core.atoms()
        # q local into G needs values on the box core; resample when impossible
        if not core_g and not boxed.core.is_empty():
            continue
        if not core_gt and G.is_proper():
            continue
        req_q = {p: rng.choice(core_g) for p in boxed.core} if core_g else {}
        q = _random_extension(rng, boxed.ground, T, req_q)
        req_qbar = {a: rng.choice(F.core.atoms()) for a in Fbar.core} if F.is_proper() else {}
        if not F.is_proper() and Fbar.is_proper():
            continue
        qbar = _random_extension(rng, Sb, S, req_qbar)
        req_qtilde = {a: rng.choice(core_gt) for a in G.core} if core_gt else {}
        qtilde = _random_extension(rng, T, Tt, req_qtilde)
        o = {"q": q, "qbar": qbar, "qtilde": qtilde, "F": F, "Fbar": Fbar, "H": H}
        for name in (
            "slice-precompose-base",
            "slice-precompose-fibre",
            "slice-postcompose-base",
            "slice-postcompose-fibre",
        ):
            cases += 1
            if not CHECKS[("fh-lemma", name)](o):
                return cases, _fail("fh-lemma", name, o, "slice lemma broke")
    return cases, None


@_check("internal-hom-base", "shape")
def _chk_hom_shape(o):
    G, H = o["G"], o["H"]
    hom = closedcat.internal_hom(G, H)
    if len(hom.filter.ground) != len(G.ground) ** len(H.core):
        return False
    expected_core = {germs.encode_germ(a.germ) for a in germs.hom_set(H, G)}
    return set(hom.filter.core.atoms()) == expected_core


@_check("internal-hom-base", "base-sets-literal")
def _chk_hom_base_literal(o):
    G, H = o["G"], o["H"]
    hom = closedcat.internal_hom(G, H)
    base_sets = []
    for member in G.members():
        literal = {
            germs.encode_germ(g) for g in oracles.hom_base_set(H, G, member)
        }
        fast = {
            code
            for code in hom.filter.ground
            if germs.decode_germ(code, G.ground).image_core() <= member
        }
        if literal != fast:
            return False
        base_sets.append(hom.filter.ground.subset(fast))
    generated = flt.fg_sets(hom.filter.ground, base_sets)
    return generated == hom.filter


@_law("internal-hom-base")
def _law_internal_hom_base(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    for G, H in iproduct(fs, fs):
        cases += 2
        o = {"G": G, "H": H}
        if not _chk_hom_shape(o):
            return cases, _fail("internal-hom-base", "shape", o, "hom object shape wrong")
        if not _chk_hom_base_literal(o):
            return cases, _fail("internal-hom-base", "base-sets-literal", o, "base sets disagree with the literal definition")
    return cases, None


@_check("hom-functoriality", "left-action")
def _chk_hom_left(o):
    gamma, gamma2, H = o["gamma"], o["gamma2"], o["H"]
    lhs = closedcat.hom_action_left(germs.compose(gamma2, gamma), H)
    rhs = germs.compose(
        closedcat.hom_action_left(gamma2, H), closedcat.hom_action_left(gamma, H)
    )
    if lhs != rhs:
        return False
    ident = FilArrow.identity(gamma.source)
    return closedcat.hom_action_left(ident, H) == FilArrow.identity(
        closedcat.internal_hom(gamma.source, H).filter
    )


@_check("hom-functoriality", "right-action")
def _chk_hom_right(o):
    rho, rho2, G = o["rho"], o["rho2"], o["G"]
    lhs = closedcat.hom_action_right(germs.compose(rho, rho2), G)
    rhs = germs.compose(
        closedcat.hom_action_right(rho2, G), closedcat.hom_action_right(rho, G)
    )
    if lhs != rhs:
        return False
    ident = FilArrow.identity(rho.target)
    return closedcat.hom_action_right(ident, G) == FilArrow.identity(
        closedcat.internal_hom(G, rho.target).filter
    )


@_check("hom-functoriality", "interchange")
def _chk_hom_interchange(o):
    gamma, rho = o["gamma"], o["rho"]
    lhs = germs.compose(
        closedcat.hom_action_left(gamma, rho.source),
        closedcat.hom_action_right(rho, gamma.source),
    )
    rhs = germs.compose(
        closedcat.hom_action_right(rho, gamma.target),
        closedcat.hom_action_left(gamma, rho.target),
    )
    return lhs == rhs


@_law("hom-functoriality")
def _law_hom_functoriality(u: Universe, rng):
    cases = 0
    pairs = list(composable_pairs(u))
    fs = filters_of(u)
    for gamma2, gamma in pairs:
        for H in fs:
            cases += 1
            o = {"gamma": gamma, "gamma2": gamma2, "H": H}
            if not _chk_hom_left(o):
                return cases, _fail("hom-functoriality", "left-action", o, "left action not functorial")
    for rho, rho2 in pairs:
        for G in fs:
            cases += 1
            o = {"rho": rho, "rho2": rho2, "G": G}
            if not _chk_hom_right(o):
                return cases, _fail("hom-functoriality", "right-action", o, "right action not functorial")
    for gamma in arrows_of(u):
        for rho in arrows_of(u):
            cases += 1
            o = {"gamma": gamma, "rho": rho}
            if not _chk_hom_interchange(o):
                return cases, _fail("hom-functoriality", "interchange", o, "actions do not commute")
    return cases, None


@_check("chi-bijection", "round-trip")
def _chk_chi_round_trip(o):
    F, G, H = o["F"], o["G"], o["H"]
    hom = closedcat.internal_hom(G, H)
    outs = germs.hom_set(mon.box_filter(F, H), G)
    ins = germs.hom_set(F, hom.filter)
    size = len(G.core) ** (len(F.core) * len(H.core))
    if not (len(outs) == len(ins) == size):
        return False
    for kappa in outs:
        if closedcat.uncurry(closedcat.curry(kappa, F, H), hom) != kappa:
            return False
    for rho in ins:
        if closedcat.curry(closedcat.uncurry(rho, hom), F, H) != rho:
            return False
    return True


@_law("chi-bijection")
def _law_chi_bijection(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    for F, G, H in iproduct(fs, fs, fs):
        cases += 1
        o = {"F": F, "G": G, "H": H}
        if not _chk_chi_round_trip(o):
            return cases, _fail("chi-bijection", "round-trip", o, "currying not a bijection")
    return cases, None


@_check("chi-naturality", "natural-in-first")
def _chk_chi_nat_first(o):
    kappa, kbar, H = o["kappa"], o["kbar"], o["H"]
    F = kbar.target
    Fbar = kbar.source
    lhs = closedcat.curry(
        germs.compose(kappa, mon.box_arrow(kbar, FilArrow.identity(H))), Fbar, H
    )
    rhs = germs.compose(closedcat.curry(kappa, F, H), kbar)
    return lhs == rhs


@_check("chi-naturality", "natural-in-second")
def _chk_chi_nat_second(o):
    kappa, ktilde, F, H = o["kappa"], o["ktilde"], o["F"], o["H"]
    lhs = closedcat.curry(germs.compose(ktilde, kappa), F, H)
    rhs = germs.compose(
        closedcat.hom_action_left(ktilde, H), closedcat.curry(kappa, F, H)
    )
    return lhs == rhs


@_law("chi-naturality")
def _law_chi_naturality(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    by_target = arrows_by_target(u)
    by_source = arrows_by_source(u)
    for F, G, H in iproduct(fs, fs, fs):
        boxed = mon.box_filter(F, H)
        for kappa in germs.hom_set(boxed, G):
            for kbar in by_target.get(F, ()):
                cases += 1
                o = {"kappa": kappa, "kbar": kbar, "H": H}
                if not _chk_chi_nat_first(o):
                    return cases, _fail("chi-naturality", "natural-in-first", o, "naturality in the first variable broke")
            for ktilde in by_source.get(G, ()):
                cases += 1
                o = {"kappa": kappa, "ktilde": ktilde, "F": F, "H": H}
                if not _chk_chi_nat_second(o):
                    return cases, _fail("chi-naturality", "natural-in-second", o, "naturality in the second variable broke")
    return cases, None


@_check("adjunction-triangles", "counit-box")
def _chk_triangle_counit(o):
    F, H = o["F"], o["H"]
    boxed = mon.box_filter(F, H)
    lhs = germs.compose(
        closedcat.epsilon_counit(boxed, H),
        mon.box_arrow(closedcat.eta_unit(F, H), FilArrow.identity(H)),
    )
    return lhs == FilArrow.identity(boxed)


@_check("adjunction-triangles", "hom-unit")
def _chk_triangle_hom(o):
    G, H = o["G"], o["H"]
    hom = closedcat.internal_hom(G, H)
    lhs = germs.compose(
        closedcat.hom_action_left(closedcat.epsilon_counit(G, H), H),
        closedcat.eta_unit(hom.filter, H),
    )
    return lhs == FilArrow.identity(hom.filter)


@_law("adjunction-triangles")
def _law_adjunction_triangles(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    for F, H in iproduct(fs, fs):
        cases += 1
        o = {"F": F, "H": H}
        if not _chk_triangle_counit(o):
            return cases, _fail("adjunction-triangles", "counit-box", o, "first triangle broke")
    for G, H in iproduct(fs, fs):
        cases += 1
        o = {"G": G, "H": H}
        if not _chk_triangle_hom(o):
            return cases, _fail("adjunction-triangles", "hom-unit", o, "second triangle broke")
    return cases, None


# ----------------------------------------------------- boundary + counting


@_check("improper-boundaries", "hom-boundaries")
def _chk_improper_hom(o):
    F, G = o["F"], o["G"]
    n = len(germs.hom_set(F, G))
    if not F.is_proper():
        return n == 1
    if not G.is_proper():
        return n == 0
    return True


@_check("improper-boundaries", "push-pull")
def _chk_improper_push_pull(o):
    phi = o["phi"]
    germ = phi.germ
    improper_src = Filter.improper(germ.source.ground)
    improper_tgt = Filter.improper(germ.target_ground)
    return (
        not germ.push(improper_src).is_proper()
        and not germ.pull(improper_tgt).is_proper()
    )


@_law("improper-boundaries")
def _law_improper_boundaries(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    for F, G in iproduct(fs, fs):
        cases += 1
        o = {"F": F, "G": G}
        if not _chk_improper_hom(o):
            return cases, _fail("improper-boundaries", "hom-boundaries", o, "hom-set boundary rule broke")
    for phi in arrows_of(u):
        cases += 1
        if not _chk_improper_push_pull({"phi": phi}):
            return cases, _fail("improper-boundaries", "push-pull", {"phi": phi}, "improper push/pull broke")
    return cases, None


@_check("hom-cardinalities", "count-formula")
def _chk_hom_count(o):
    F, G = o["F"], o["G"]
    return len(germs.hom_set(F, G)) == len(G.core) ** len(F.core)


@_law("hom-cardinalities")
def _law_hom_cardinalities(u: Universe, rng):
    cases = 0
    fs = filters_of(u)
    for F, G in iproduct(fs, fs):
        cases += 1
        o = {"F": F, "G": G}
        if not _chk_hom_count(o):
            return cases, _fail("hom-cardinalities", "count-formula", o, "hom-set cardinality wrong")
    return cases, None


@_check("filter-count", "powerset-count")
def _chk_filter_count(o):
    S = o["S"]
    canonical = 1 << len(S)
    brute = oracles.count_filters_by_enumeration(S)
    return brute == canonical


@_law("filter-count")
def _law_filter_count(u: Universe, rng):
    cases = 0
    for S in grounds_of(u):
        cases += 1
        if not _chk_filter_count({"S": S}):
            return cases, _fail("filter-count", "powerset-count", {"S": S}, "filter count not 2^n")
    return cases, None


# ----------------------------------------------------- oracle cross-check


@_check("oracle-cross-check", "member")
def _chk_oracle_member(o):
    F, X = o["F"], o["X"]
    return F.contains(X) == oracles.member_by_family(F, X)


@_check("oracle-cross-check", "leq")
def _chk_oracle_leq(o):
    F, G = o["F"], o["G"]
    return F.leq(G) == oracles.leq_by_families(F, G)


@_check("oracle-cross-check", "locality")
def _chk_oracle_locality(o):
    f, F, G = o["f"], o["F"], o["G"]
    return germs.is_local(f, F, G) == oracles.local_quantified(f, F, G)


@_check("oracle-cross-check", "germ-equiv")
def _chk_oracle_germ_equiv(o):
    f, g, F = o["f"], o["g"], o["F"]
    return germs.germ_equiv(f, g, F) == oracles.germ_equiv_quantified(f, g, F)


@_check("oracle-cross-check", "push")
def _chk_oracle_push(o):
    f, F = o["f"], o["F"]
    return flt.pushforward(f, F) == oracles.push_by_family(f, F)


@_check("oracle-cross-check", "pull")
def _chk_oracle_pull(o):
    f, G = o["f"], o["G"]
    return flt.pullback(f, G) == oracles.pull_by_family(f, G)


@_law("oracle-cross-check")
def _law_oracle_cross_check(u: Universe, rng):
    cases = 0
    gs = grounds_of(u)
    for S in gs:
        filters_s = filters_on(u, S)
        # fg against family enumeration, over every base on this ground
        all_subsets = list(S.all_subsets())
        for bits in range(1 << min(len(all_subsets), 8)):
            chosen = tuple(s for i, s in enumerate(all_subsets[:8]) if bits >> i & 1)
            base = flt.FilterBase(S, chosen)
            cases += 1
            if flt.fg(base) != oracles.fg_by_enumeration(base):
                sets = {f"B{i}": s for i, s in enumerate(chosen)}
                return cases, _fail("oracle-cross-check", "fg", sets | {"S": S}, "fg disagrees with enumeration")
        for F in filters_s:
            for X in S.all_subsets():
                cases += 1
                o = {"F": F, "X": X}
                if not _chk_oracle_member(o):
                    return cases, _fail("oracle-cross-check", "member", o, "membership paths disagree")
            for G in filters_s:
                cases += 1
                o = {"F": F, "G": G}
                if not _chk_oracle_leq(o):
                    return cases, _fail("oracle-cross-check", "leq", o, "order paths disagree")
    for S, T in iproduct(gs, gs):
        for f in oracles.partial_fns(S, T):
            for F in filters_on(u, S):
                cases += 1
                if not _chk_oracle_push({"f": f, "F": F}):
                    return cases, _fail("oracle-cross-check", "push", {"f": f, "F": F}, "pushforward paths disagree")
                for G in filters_on(u, T):
                    cases += 1
                    o = {"f": f, "F": F, "G": G}
                    if not _chk_oracle_locality(o):
                        return cases, _fail("oracle-cross-check", "locality", o, "locality paths disagree")
            for G in filters_on(u, T):
                cases += 1
                if not _chk_oracle_pull({"f": f, "G": G}):
                    return cases, _fail("oracle-cross-check", "pull", {"f": f, "G": G}, "pullback paths disagree")
        pfs = list(oracles.partial_fns(S, T))
        for F in filters_on(u, S):
            for f, g in iproduct(pfs, pfs):
                cases += 1
                o = {"f": f, "g": g, "F": F}
                if not _chk_oracle_germ_equiv(o):
                    return cases, _fail("oracle-cross-check", "germ-equiv", o, "equivalence paths disagree")
    # box membership and the internal-hom base compare on a smaller sweep:
    # their instance spaces are already exponential in the product ground
    small = Universe(min(u.max_ground_size, 2), u.alphabet[:2], u.include_improper)
    for S, T in iproduct(grounds_of(small), grounds_of(small)):
        for F in filters_on(small, S):
            for G in filters_on(small, T):
                for X in mon.box_filter(F, G).ground.all_subsets():
                    cases += 1
                    o = {"F": F, "G": G, "X": X}
                    if not CHECKS[("box-base", "member-slice-agrees")](o):
                        return cases, _fail("oracle-cross-check", "box-member", o, "box membership paths disagree")
                cases += 1
                o = {"G": G, "H": F}
                if not CHECKS[("internal-hom-base", "base-sets-literal")](o):
                    return cases, _fail("oracle-cross-check", "hom-base", o, "hom base paths disagree")
    return cases, None


CHECKS[("oracle-cross-check", "fg")] = lambda o: flt.fg(
    flt.FilterBase(o["S"], tuple(o[k] for k in sorted(o) if k.startswith("B")))
) == oracles.fg_by_enumeration(
    flt.FilterBase(o["S"], tuple(o[k] for k in sorted(o) if k.startswith("B")))
)
CHECKS[("oracle-cross-check", "box-member")] = lambda o: CHECKS[
    ("box-base", "member-slice-agrees")
](o)
CHECKS[("oracle-cross-check", "hom-base")] = lambda o: CHECKS[
    ("internal-hom-base", "base-sets-literal")
](o)


# ------------------------------------------------------------------ runner


def run_law(name: str, universe: Universe, seed: int = 0) -> LawReport:
    if name not in LAWS:
        raise FilError("E_UNKNOWN_LAW", f"no law named {name!r}")
    rng = random.Random(seed)
    cases, witness = LAWS[name](universe, rng)
    return LawReport(
        law=name,
        universe=universe,
        cases=cases,
        outcome="pass" if witness is None else "fail",
        witness=witness,
        seed=seed,
    )


def run_all(universe: Universe, seed: int = 0, names=None) -> list[LawReport]:
    chosen = sorted(LAWS) if names is None else list(names)
    return [run_law(name, universe, seed) for name in chosen]


def replay_witness(text: str) -> LawReport:
    """Re-run the failing check of a serialized witness."""
    law = check = detail = None
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("# law:"):
            law = line.split(":", 1)[1].strip()
        elif line.startswith("# check:"):
            check = line.split(":", 1)[1].strip()
        elif line.startswith("# detail:"):
            detail = line.split(":", 1)[1].strip()
    if law is None or check is None:
        raise FilError("E_SYNTAX", "witness is missing its law/check header")
    if (law, check) not in CHECKS:
        raise FilError("E_UNKNOWN_LAW", f"no check {check!r} registered for law {law!r}")
    ws = wsp.parse_workspace(text)
    objects = ws.objects()
    ok = CHECKS[(law, check)](objects)
    witness = None if ok else Witness(law, check, detail or "", wsp.render_workspace(ws))
    return LawReport(
        law=law,
        universe=Universe(),
        cases=1,
        outcome="pass" if ok else "fail",
        witness=witness,
    )
