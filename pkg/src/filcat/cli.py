"""Command line front end.

Reads a workspace file, runs one construction or the law suites, and prints
a JSON (or plain text) report.  Results that build new objects are also
rendered back in workspace syntax so they can be fed to further runs.

Exit codes: 0 success, 1 a law failed (counterexample found), 2 input
error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closedcat, factorization as fact, germs, laws, limits, monoidal as mon
from .errors import FilError
from .finset import GermCode, GroundSet, Label, Pair, Subset, Tag
from .filters import Filter
from .germs import FilArrow
from .workspace import (
    Workspace,
    from_objects,
    parse_workspace,
    render_atom,
    render_workspace,
)

SCHEMA = "filcat/1"


def atom_json(atom):
    if isinstance(atom, Label):
        return atom.name
    if isinstance(atom, Pair):
        return [atom_json(atom.left), atom_json(atom.right)]
    if isinstance(atom, Tag):
        return {"tag": atom.index, "value": atom_json(atom.value)}
    if isinstance(atom, GermCode):
        return {
            "dom": [atom_json(a) for a in atom.dom_ground],
            "map": {render_atom(k): atom_json(v) for k, v in atom.entries},
        }
    raise FilError("E_RENDER", f"unknown atom {atom!r}")


def subset_json(subset: Subset):
    return [atom_json(a) for a in subset.atoms()]


def filter_json(filt: Filter):
    return {
        "ground": [atom_json(a) for a in filt.ground.atoms],
        "core": subset_json(filt.core),
        "proper": filt.is_proper(),
    }


def arrow_json(arrow: FilArrow):
    return {
        "source": filter_json(arrow.source),
        "target": filter_json(arrow.target),
        "table": {render_atom(k): atom_json(v) for k, v in arrow.germ._items},
    }


def _resolve(ws: Workspace, kind: dict, name: str, what: str):
    if name not in kind:
        raise FilError("E_REFERENCE", f"unknown {what} {name!r}")
    return kind[name]


def _result(command: str, result: dict, certificates: dict | None = None) -> dict:
    doc = {"schema": SCHEMA, "command": command, "ok": True, "result": result}
    if certificates is not None:
        doc["certificates"] = certificates
    return doc


def _workspace_block(named: dict) -> str:
    return render_workspace(from_objects(named))


# ------------------------------------------------------------- subcommands


def cmd_compose(ws, args):
    outer = _resolve(ws, ws.arrows, args.outer, "arrow")
    inner = _resolve(ws, ws.arrows, args.inner, "arrow")
    out = germs.compose(outer, inner)
    return _result(
        "compose",
        {"arrow": arrow_json(out), "workspace": _workspace_block({"result": out})},
    )


def cmd_factor(ws, args):
    phi = _resolve(ws, ws.arrows, args.arrow, "arrow")
    pair = fact.factor(phi)
    named = {"epi": pair.epi_part, "mono": pair.mono_part, "mid": pair.mid}
    return _result(
        "factor",
        {
            "mid": filter_json(pair.mid),
            "epi": arrow_json(pair.epi_part),
            "mono": arrow_json(pair.mono_part),
            "workspace": _workspace_block(named),
        },
        certificates={
            "epi_in_E": fact.is_e(pair.epi_part),
            "mono_in_M": fact.is_m(pair.mono_part),
            "composite_equals_input": germs.compose(pair.mono_part, pair.epi_part) == phi,
        },
    )


def cmd_predicate(ws, args):
    phi = _resolve(ws, ws.arrows, args.arrow, "arrow")
    value = {"epi": fact.is_epi, "monic": fact.is_monic, "iso": fact.is_iso}[args.command](phi)
    return _result(args.command, {"arrow": args.arrow, "holds": value})


def cmd_equalizer(ws, args):
    alpha = _resolve(ws, ws.arrows, args.alpha, "arrow")
    beta = _resolve(ws, ws.arrows, args.beta, "arrow")
    eq, incl = limits.equalizer(alpha, beta)
    return _result(
        "equalizer",
        {
            "filter": filter_json(eq),
            "inclusion": arrow_json(incl),
            "workspace": _workspace_block({"equalizer": eq, "inclusion": incl}),
        },
        certificates={"fork_commutes": germs.compose(alpha, incl) == germs.compose(beta, incl)},
    )


def cmd_product(ws, args):
    factors = [_resolve(ws, ws.filters, n, "filter") for n in args.filters]
    prod, legs = limits.product_fil(factors)
    named = {"product": prod}
    named.update({f"proj{i}": leg for i, leg in enumerate(legs)})
    return _result(
        "product",
        {
            "filter": filter_json(prod),
            "projections": [arrow_json(p) for p in legs],
            "workspace": _workspace_block(named),
        },
    )


def cmd_coproduct(ws, args):
    summands = [_resolve(ws, ws.filters, n, "filter") for n in args.filters]
    cop, injections = limits.coproduct_fil(summands)
    named = {"coproduct": cop}
    named.update({f"inj{i}": inj for i, inj in enumerate(injections)})
    return _result(
        "coproduct",
        {
            "filter": filter_json(cop),
            "injections": [arrow_json(i) for i in injections],
            "workspace": _workspace_block(named),
        },
    )


def cmd_pullback(ws, args):
    arrows = [_resolve(ws, ws.arrows, n, "arrow") for n in args.arrows]
    if len(arrows) < 2:
        raise FilError("E_ARGS", "pullback needs at least two arrows")
    if all(fact.is_m(a) for a in arrows):
        apex, legs = limits.pullback_monos(arrows[0].target, arrows)
        construction = "meet-of-mono-subobjects"
    elif len(arrows) == 2:
        apex, leg1, leg2 = limits.pullback_cospan(arrows[0], arrows[1])
        legs = [leg1, leg2]
        construction = "equalizer-in-product"
    else:
        raise FilError("E_ARGS", "general pullbacks support exactly two arrows")
    named = {"pullback": apex}
    named.update({f"leg{i}": leg for i, leg in enumerate(legs)})
    return _result(
        "pullback",
        {
            "construction": construction,
            "filter": filter_json(apex),
            "legs": [arrow_json(a) for a in legs],
            "workspace": _workspace_block(named),
        },
    )


def cmd_core(ws, args):
    if args.name in ws.filters:
        filt = ws.filters[args.name]
        return _result("core", {"core": subset_json(filt.core)})
    if args.name in ws.arrows:
        arrow = ws.arrows[args.name]
        table = limits.core_of_arrow(arrow)
        return _result(
            "core",
            {"table": {render_atom(k): atom_json(v) for k, v in sorted(table.items(), key=lambda kv: kv[0]._key)}},
        )
    raise FilError("E_REFERENCE", f"unknown filter or arrow {args.name!r}")


def cmd_box(ws, args):
    left = _resolve(ws, ws.filters, args.left, "filter")
    right = _resolve(ws, ws.filters, args.right, "filter")
    boxed = mon.box_filter(left, right)
    doc = {
        "filter": filter_json(boxed),
        "workspace": _workspace_block({"box": boxed}),
    }
    if args.member is not None:
        X = _resolve(ws, ws.subsets, args.member, "subset")
        doc["member"] = mon.box_member(left, right, X)
    return _result("box", doc)


def cmd_hom(ws, args):
    target = _resolve(ws, ws.filters, args.target, "filter")
    source = _resolve(ws, ws.filters, args.source, "filter")
    hom = closedcat.internal_hom(target, source, args.size_cap)
    return _result(
        "hom",
        {
            "filter": filter_json(hom.filter),
            "ground_size": len(hom.filter.ground),
            "core_size": len(hom.filter.core),
            "workspace": _workspace_block({"hom": hom.filter}),
        },
    )


def cmd_curry(ws, args):
    kappa = _resolve(ws, ws.arrows, args.arrow, "arrow")
    left = _resolve(ws, ws.filters, args.left, "filter")
    right = _resolve(ws, ws.filters, args.right, "filter")
    out = closedcat.curry(kappa, left, right, args.size_cap)
    return _result(
        "curry",
        {"arrow": arrow_json(out), "workspace": _workspace_block({"curried": out})},
    )


def cmd_uncurry(ws, args):
    rho = _resolve(ws, ws.arrows, args.arrow, "arrow")
    target = _resolve(ws, ws.filters, args.target, "filter")
    source = _resolve(ws, ws.filters, args.source, "filter")
    hom = closedcat.internal_hom(target, source, args.size_cap)
    out = closedcat.uncurry(rho, hom)
    return _result(
        "uncurry",
        {"arrow": arrow_json(out), "workspace": _workspace_block({"uncurried": out})},
    )


def cmd_push(ws, args):
    phi = _resolve(ws, ws.arrows, args.arrow, "arrow")
    sub = _resolve(ws, ws.filters, args.filter, "filter")
    pushed = phi.germ.push(sub)
    return _result("push", {"filter": filter_json(pushed), "workspace": _workspace_block({"pushed": pushed})})


def cmd_pull(ws, args):
    phi = _resolve(ws, ws.arrows, args.arrow, "arrow")
    filt = _resolve(ws, ws.filters, args.filter, "filter")
    pulled = phi.germ.pull(filt)
    return _result("pull", {"filter": filter_json(pulled), "workspace": _workspace_block({"pulled": pulled})})


def cmd_laws(ws, args):
    universe = laws.Universe.of_size(args.max_ground, args.include_improper)
    names = [args.law] if args.law else None
    reports = laws.run_all(universe, seed=args.seed, names=names)
    ok = all(r.passed() for r in reports)
    doc = {
        "schema": SCHEMA,
        "command": "laws",
        "ok": ok,
        "reports": [r.to_json() for r in reports],
    }
    if not ok and args.witness_out:
        first = next(r for r in reports if not r.passed())
        with open(args.witness_out, "w", encoding="utf-8") as handle:
            handle.write(first.witness.serialize())
        doc["witness_file"] = args.witness_out
    return doc, 0 if ok else 1


def cmd_replay(args):
    with open(args.witness, "r", encoding="utf-8") as handle:
        text = handle.read()
    report = laws.replay_witness(text)
    doc = {
        "schema": SCHEMA,
        "command": "replay",
        "ok": report.passed(),
        "report": report.to_json(),
    }
    return doc, 0 if report.passed() else 1


# ------------------------------------------------------------------ driver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="filcat",
        description="constructions and law suites for filters and germs",
    )
    parser.add_argument("-w", "--workspace", help="workspace file to load")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--max-ground", type=int, default=2, help="law universe bound")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled suites")
    parser.add_argument(
        "--include-improper",
        type=lambda v: v.lower() not in ("false", "0", "no"),
        default=True,
        metavar="BOOL",
    )
    parser.add_argument("--size-cap", type=int, default=closedcat.DEFAULT_SIZE_CAP)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="compose two arrows (outer after inner)")
    p.add_argument("outer")
    p.add_argument("inner")
    p = sub.add_parser("factor", help="epi/mono factorization of an arrow")
    p.add_argument("arrow")
    for name in ("epi", "monic", "iso"):
        p = sub.add_parser(name, help=f"decide whether an arrow is {name}")
        p.add_argument("arrow")
    p = sub.add_parser("equalizer", help="equalizer of a parallel pair")
    p.add_argument("alpha")
    p.add_argument("beta")
    p = sub.add_parser("product", help="finite product of filters")
    p.add_argument("filters", nargs="*")
    p = sub.add_parser("coproduct", help="finite coproduct of filters")
    p.add_argument("filters", nargs="+")
    p = sub.add_parser("pullback", help="pullback of arrows with a common target")
    p.add_argument("arrows", nargs="+")
    p = sub.add_parser("core", help="core of a filter or arrow")
    p.add_argument("name")
    p = sub.add_parser("box", help="monoidal product of two filters")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--member", help="also decide membership of this subset")
    p = sub.add_parser("hom", help="internal hom object (target first)")
    p.add_argument("target")
    p.add_argument("source")
    p = sub.add_parser("curry", help="transpose an arrow out of a box product")
    p.add_argument("arrow")
    p.add_argument("left")
    p.add_argument("right")
    p = sub.add_parser("uncurry", help="transpose an arrow into a hom object")
    p.add_argument("arrow")
    p.add_argument("target")
    p.add_argument("source")
    p = sub.add_parser("push", help="push a subfilter along an arrow's germ")
    p.add_argument("arrow")
    p.add_argument("filter")
    p = sub.add_parser("pull", help="pull a filter back along an arrow's germ")
    p.add_argument("arrow")
    p.add_argument("filter")
    p = sub.add_parser("laws", help="run the law suites")
    p.add_argument("--law", help="run a single named law")
    p.add_argument("--witness-out", help="write the first failing witness here")
    p = sub.add_parser("replay", help="replay a saved witness file")
    p.add_argument("witness")
    return parser


_NEEDS_WORKSPACE = {
    "compose", "factor", "epi", "monic", "iso", "equalizer", "product",
    "coproduct", "pullback", "core", "box", "hom", "curry", "uncurry",
    "push", "pull",
}


def _emit(doc: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        _emit_text(doc)


def _emit_text(doc: dict, indent: int = 0):
    pad = "  " * indent
    if "reports" in doc:
        for report in doc["reports"]:
            print(f"{pad}{report['outcome']:4s} {report['law']} ({report['cases']} cases)")
        print(f"{pad}overall: {'pass' if doc['ok'] else 'fail'}")
        return
    for key, value in sorted(doc.items()):
        if key in ("schema",):
            continue
        if isinstance(value, dict) and "workspace" in value:
            print(f"{pad}{key}:")
            print(value["workspace"])
        else:
            print(f"{pad}{key}: {value}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "laws":
            doc, code = cmd_laws(None, args)
        elif args.command == "replay":
            doc, code = cmd_replay(args)
        else:
            if args.command in _NEEDS_WORKSPACE and not args.workspace:
                raise FilError("E_ARGS", f"{args.command} needs a workspace file (-w)")
            with open(args.workspace, "r", encoding="utf-8") as handle:
                ws = parse_workspace(handle.read())
            if args.command == "compose":
                doc = cmd_compose(ws, args)
            elif args.command == "factor":
                doc = cmd_factor(ws, args)
            elif args.command in ("epi", "monic", "iso"):
                doc = cmd_predicate(ws, args)
            elif args.command == "equalizer":
                doc = cmd_equalizer(ws, args)
            elif args.command == "product":
                doc = cmd_product(ws, args)
            elif args.command == "coproduct":
                doc = cmd_coproduct(ws, args)
            elif args.command == "pullback":
                doc = cmd_pullback(ws, args)
            elif args.command == "core":
                doc = cmd_core(ws, args)
            elif args.command == "box":
                doc = cmd_box(ws, args)
            elif args.command == "hom":
                doc = cmd_hom(ws, args)
            elif args.command == "curry":
                doc = cmd_curry(ws, args)
            elif args.command == "uncurry":
                doc = cmd_uncurry(ws, args)
            elif args.command == "push":
                doc = cmd_push(ws, args)
            elif args.command == "pull":
                doc = cmd_pull(ws, args)
            else:  # pragma: no cover - argparse restricts the choices
                raise FilError("E_ARGS", f"unknown command {args.command!r}")
            code = 0
    except FilError as exc:
        doc = {
            "schema": SCHEMA,
            "ok": False,
            "error": {"code": exc.code, "message": exc.message},
        }
        _emit(doc, args.format)
        return 3 if exc.code == "E_SIZE_CAP" else 2
    except OSError as exc:
        doc = {
            "schema": SCHEMA,
            "ok": False,
            "error": {"code": "E_IO", "message": str(exc)},
        }
        _emit(doc, args.format)
        return 2
    _emit(doc, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
