"""Line-oriented text format for ground sets, subsets, filters, partial
functions and arrows, plus the canonical renderer.

The format is deliberately small and human-writable so that every law
counterexample can be saved, read, edited, and replayed:

    set S = {0 1 2}
    set T = {x y}
    subset D of S = {0 1}
    filter F on S core {0 1}
    filter G on T base {{x} {x y}}
    pfun f : S -> T = {0:x 1:y}
    arrow phi : F -> G via f

Structured atoms are whitespace-free tokens: pairs ``(a,b)``, injections
``tag(0,a)``, encoded germs ``germ[a>x,b>y|a,b,c]`` (table entries, then the
domain ground after the bar).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import FilError
from .filters import Filter, FilterBase, fg
from .finset import Atom, GermCode, GroundSet, Label, Pair, PartialFn, Subset, Tag
from .germs import FilArrow, mk_arrow

_LABEL_RE = re.compile(r"[A-Za-z0-9_]+")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass
class Workspace:
    sets: dict[str, GroundSet] = field(default_factory=dict)
    subsets: dict[str, Subset] = field(default_factory=dict)
    filters: dict[str, Filter] = field(default_factory=dict)
    pfuns: dict[str, PartialFn] = field(default_factory=dict)
    arrows: dict[str, FilArrow] = field(default_factory=dict)

    def __eq__(self, other):
        return (
            isinstance(other, Workspace)
            and self.sets == other.sets
            and self.subsets == other.subsets
            and self.filters == other.filters
            and self.pfuns == other.pfuns
            and self.arrows == other.arrows
        )

    def objects(self) -> dict[str, object]:
        """All named objects in one mapping (names are unique per kind;
        witness workspaces keep them globally unique)."""
        merged: dict[str, object] = {}
        for kind in (self.sets, self.subsets, self.filters, self.pfuns, self.arrows):
            merged.update(kind)
        return merged


# ---------------------------------------------------------------- atoms


def parse_atom(text: str) -> Atom:
    atom, pos = _parse_atom(text, 0)
    if pos != len(text):
        raise FilError("E_SYNTAX", f"trailing characters in atom {text!r}")
    return atom


def _parse_atom(text: str, pos: int) -> tuple[Atom, int]:
    if text.startswith("tag(", pos):
        end = pos + 4
        m = re.compile(r"\d+").match(text, end)
        if not m:
            raise FilError("E_SYNTAX", f"bad tag index in {text!r}")
        index = int(m.group())
        pos = m.end()
        pos = _expect(text, pos, ",")
        value, pos = _parse_atom(text, pos)
        pos = _expect(text, pos, ")")
        return Tag(index, value), pos
    if text.startswith("germ[", pos):
        pos += 5
        entries = []
        if pos < len(text) and text[pos] not in "|":
            while True:
                key, pos = _parse_atom(text, pos)
                pos = _expect(text, pos, ">")
                value, pos = _parse_atom(text, pos)
                entries.append((key, value))
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                else:
                    break
        pos = _expect(text, pos, "|")
        ground = []
        if pos < len(text) and text[pos] != "]":
            while True:
                atom, pos = _parse_atom(text, pos)
                ground.append(atom)
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                else:
                    break
        pos = _expect(text, pos, "]")
        return GermCode(entries, ground), pos
    if text.startswith("(", pos):
        left, pos = _parse_atom(text, pos + 1)
        pos = _expect(text, pos, ",")
        right, pos = _parse_atom(text, pos)
        pos = _expect(text, pos, ")")
        return Pair(left, right), pos
    m = _LABEL_RE.match(text, pos)
    if not m:
        raise FilError("E_SYNTAX", f"expected an atom at position {pos} of {text!r}")
    return Label(m.group()), m.end()


def _expect(text: str, pos: int, char: str) -> int:
    if pos >= len(text) or text[pos] != char:
        raise FilError("E_SYNTAX", f"expected {char!r} at position {pos} of {text!r}")
    return pos + 1


def render_atom(atom: Atom) -> str:
    if isinstance(atom, Label):
        if not _LABEL_RE.fullmatch(atom.name):
            raise FilError("E_RENDER", f"label {atom.name!r} is not renderable")
        return atom.name
    if isinstance(atom, Pair):
        return f"({render_atom(atom.left)},{render_atom(atom.right)})"
    if isinstance(atom, Tag):
        return f"tag({atom.index},{render_atom(atom.value)})"
    if isinstance(atom, GermCode):
        entries = ",".join(
            f"{render_atom(k)}>{render_atom(v)}" for k, v in atom.entries
        )
        ground = ",".join(render_atom(a) for a in atom.dom_ground)
        return f"germ[{entries}|{ground}]"
    raise FilError("E_RENDER", f"unknown atom {atom!r}")


# ---------------------------------------------------------------- parsing


def _tokenize(line: str) -> list[str]:
    return line.replace("{", " { ").replace("}", " } ").split()


class _Parser:
    def __init__(self):
        self.ws = Workspace()

    def error(self, lineno: int, code: str, message: str):
        raise FilError(code, f"line {lineno}: {message}")

    def lookup(self, kind: dict, name: str, what: str, lineno: int):
        if name not in kind:
            self.error(lineno, "E_REFERENCE", f"unknown {what} {name!r}")
        return kind[name]

    def declare(self, kind: dict, name: str, value, lineno: int):
        if not _NAME_RE.fullmatch(name):
            self.error(lineno, "E_SYNTAX", f"bad name {name!r}")
        if name in kind:
            self.error(lineno, "E_DUPLICATE", f"name {name!r} declared twice")
        kind[name] = value

    def parse(self, text: str) -> Workspace:
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = _tokenize(line)
            try:
                self.statement(tokens, lineno)
            except FilError:
                raise
            except Exception as exc:  # malformed shapes become syntax errors
                self.error(lineno, "E_SYNTAX", f"cannot parse statement: {exc}")
        return self.ws

    def statement(self, tokens: list[str], lineno: int):
        head = tokens[0]
        if head == "set":
            # set NAME = { atoms }
            name, eq = tokens[1], tokens[2]
            if eq != "=" or tokens[3] != "{" or tokens[-1] != "}":
                self.error(lineno, "E_SYNTAX", "expected: set NAME = { atoms }")
            atoms = [parse_atom(t) for t in tokens[4:-1]]
            try:
                ground = GroundSet(atoms)
            except FilError as exc:
                self.error(lineno, exc.code, exc.message)
            self.declare(self.ws.sets, name, ground, lineno)
        elif head == "subset":
            # subset NAME of SET = { atoms }
            name, of, set_name, eq = tokens[1], tokens[2], tokens[3], tokens[4]
            if of != "of" or eq != "=" or tokens[5] != "{" or tokens[-1] != "}":
                self.error(lineno, "E_SYNTAX", "expected: subset NAME of SET = { atoms }")
            ground = self.lookup(self.ws.sets, set_name, "set", lineno)
            try:
                subset = ground.subset(parse_atom(t) for t in tokens[6:-1])
            except FilError as exc:
                self.error(lineno, exc.code, exc.message)
            self.declare(self.ws.subsets, name, subset, lineno)
        elif head == "filter":
            # filter NAME on SET core { atoms } | filter NAME on SET base { { .. } .. }
            name, on, set_name, mode = tokens[1], tokens[2], tokens[3], tokens[4]
            if on != "on":
                self.error(lineno, "E_SYNTAX", "expected: filter NAME on SET core|base {...}")
            ground = self.lookup(self.ws.sets, set_name, "set", lineno)
            try:
                if mode == "core":
                    if tokens[5] != "{" or tokens[-1] != "}":
                        self.error(lineno, "E_SYNTAX", "expected: core { atoms }")
                    core = ground.subset(parse_atom(t) for t in tokens[6:-1])
                    filt = Filter(ground, core)
                elif mode == "base":
                    sets = self._parse_base(ground, tokens[5:], lineno)
                    filt = fg(FilterBase(ground, tuple(sets)))
                else:
                    self.error(lineno, "E_SYNTAX", f"unknown filter mode {mode!r}")
            except FilError as exc:
                self.error(lineno, exc.code, exc.message)
            self.declare(self.ws.filters, name, filt, lineno)
        elif head == "pfun":
            # pfun NAME : DOM -> COD = { k:v ... }
            name, colon, dom_name, arrow, cod_name, eq = tokens[1:7]
            if colon != ":" or arrow != "->" or eq != "=":
                self.error(lineno, "E_SYNTAX", "expected: pfun NAME : S -> T = { k:v ... }")
            if tokens[7] != "{" or tokens[-1] != "}":
                self.error(lineno, "E_SYNTAX", "expected a graph in braces")
            dom = self.lookup(self.ws.sets, dom_name, "set", lineno)
            cod = self.lookup(self.ws.sets, cod_name, "set", lineno)
            graph = {}
            for entry in tokens[8:-1]:
                if ":" not in entry:
                    self.error(lineno, "E_SYNTAX", f"graph entry {entry!r} is not key:value")
                key_text, value_text = entry.split(":", 1)
                key, value = parse_atom(key_text), parse_atom(value_text)
                if key in graph:
                    self.error(lineno, "E_DUPLICATE", f"graph key {key_text!r} repeated")
                graph[key] = value
            try:
                pfun = PartialFn(dom, cod, graph)
            except FilError as exc:
                self.error(lineno, exc.code, exc.message)
            self.declare(self.ws.pfuns, name, pfun, lineno)
        elif head == "arrow":
            # arrow NAME : F -> G via f
            name, colon, src_name, arr, tgt_name, via, fn_name = tokens[1:8]
            if colon != ":" or arr != "->" or via != "via":
                self.error(lineno, "E_SYNTAX", "expected: arrow NAME : F -> G via f")
            source = self.lookup(self.ws.filters, src_name, "filter", lineno)
            target = self.lookup(self.ws.filters, tgt_name, "filter", lineno)
            pfun = self.lookup(self.ws.pfuns, fn_name, "pfun", lineno)
            try:
                arrow_obj = mk_arrow(source, target, pfun)
            except FilError as exc:
                self.error(lineno, exc.code, exc.message)
            self.declare(self.ws.arrows, name, arrow_obj, lineno)
        else:
            self.error(lineno, "E_SYNTAX", f"unknown statement {head!r}")

    def _parse_base(self, ground: GroundSet, tokens: list[str], lineno: int) -> list[Subset]:
        if tokens[0] != "{" or tokens[-1] != "}":
            self.error(lineno, "E_SYNTAX", "expected: base { { .. } { .. } }")
        sets, depth, current = [], 0, []
        for t in tokens[1:-1]:
            if t == "{":
                depth += 1
                current = []
            elif t == "}":
                if depth != 1:
                    self.error(lineno, "E_SYNTAX", "unbalanced braces in base")
                depth = 0
                sets.append(ground.subset(parse_atom(x) for x in current))
            else:
                if depth != 1:
                    self.error(lineno, "E_SYNTAX", "base sets must be braced")
                current.append(t)
        if depth != 0:
            self.error(lineno, "E_SYNTAX", "unbalanced braces in base")
        return sets


def parse_workspace(text: str) -> Workspace:
    return _Parser().parse(text)


# --------------------------------------------------------------- rendering


def _atoms_text(atoms) -> str:
    return " ".join(render_atom(a) for a in atoms)


def render_workspace(ws: Workspace) -> str:
    """Canonical text: one declaration per line, kinds in dependency order,
    names sorted; filters always in core form."""
    set_names = _names_for(ws.sets)
    filter_names = _names_for(ws.filters)
    pfun_names = _names_for(ws.pfuns)
    lines = []
    for name in sorted(ws.sets):
        lines.append(f"set {name} = {{{_atoms_text(ws.sets[name])}}}")
    for name in sorted(ws.subsets):
        sub = ws.subsets[name]
        lines.append(f"subset {name} of {set_names[sub.ground]} = {{{_atoms_text(sub.atoms())}}}")
    for name in sorted(ws.filters):
        filt = ws.filters[name]
        lines.append(
            f"filter {name} on {set_names[filt.ground]} core {{{_atoms_text(filt.core.atoms())}}}"
        )
    for name in sorted(ws.pfuns):
        f = ws.pfuns[name]
        entries = " ".join(
            f"{render_atom(k)}:{render_atom(v)}" for k, v in f._items
        )
        lines.append(
            f"pfun {name} : {set_names[f.dom]} -> {set_names[f.cod]} = {{{entries}}}"
        )
    for name in sorted(ws.arrows):
        arrow = ws.arrows[name]
        rep_name = pfun_names.get(arrow.germ.rep())
        if rep_name is None:
            # any declared representative of the same germ will do
            for cand_name in sorted(ws.pfuns):
                cand = ws.pfuns[cand_name]
                if (
                    cand.dom == arrow.source.ground
                    and cand.cod == arrow.target.ground
                    and arrow.source.core <= cand.dd()
                    and all(cand.graph[a] == v for a, v in arrow.table.items())
                ):
                    rep_name = cand_name
                    break
        if rep_name is None:
            raise FilError("E_RENDER", f"arrow {name!r} has no declared representative")
        lines.append(
            f"arrow {name} : {filter_names[arrow.source]} -> "
            f"{filter_names[arrow.target]} via {rep_name}"
        )
    return "\n".join(lines) + "\n"


def _names_for(kind: dict) -> dict:
    names = {}
    for name in sorted(kind):
        names.setdefault(kind[name], name)
    return names


def from_objects(named: dict[str, object]) -> Workspace:
    """Build a closed workspace around the given named objects, inventing
    names for the grounds, filters and representatives they depend on."""
    ws = Workspace()
    grounds: dict[GroundSet, str] = {}
    filters: dict[Filter, str] = {}
    pfuns: dict[PartialFn, str] = {}

    def need_ground(g: GroundSet) -> str:
        if g not in grounds:
            name = f"_S{len(grounds)}"
            grounds[g] = name
            ws.sets[name] = g
        return grounds[g]

    def need_filter(f: Filter, name: str | None = None) -> str:
        need_ground(f.ground)
        if f not in filters:
            auto = name if name is not None else f"_F{len(filters)}"
            filters[f] = auto
            ws.filters[auto] = f
        return filters[f]

    def need_pfun(p: PartialFn, name: str | None = None) -> str:
        need_ground(p.dom)
        need_ground(p.cod)
        if p not in pfuns:
            auto = name if name is not None else f"_f{len(pfuns)}"
            pfuns[p] = auto
            ws.pfuns[auto] = p
        return pfuns[p]

    def of_kind(cls):
        return [(n, named[n]) for n in sorted(named) if isinstance(named[n], cls)]

    for name, obj in of_kind(GroundSet):
        grounds.setdefault(obj, name)
        ws.sets[name] = obj
    for name, obj in of_kind(Filter):
        need_ground(obj.ground)
        filters.setdefault(obj, name)
        ws.filters[name] = obj
    for name, obj in of_kind(Subset):
        need_ground(obj.ground)
        ws.subsets[name] = obj
    for name, obj in of_kind(PartialFn):
        need_ground(obj.dom)
        need_ground(obj.cod)
        pfuns.setdefault(obj, name)
        ws.pfuns[name] = obj
    for name, obj in of_kind(FilArrow):
        need_filter(obj.source)
        need_filter(obj.target)
        need_pfun(obj.germ.rep())
        ws.arrows[name] = obj
    leftovers = [
        n
        for n in named
        if not isinstance(named[n], (GroundSet, Subset, Filter, PartialFn, FilArrow))
    ]
    if leftovers:
        raise FilError("E_RENDER", f"cannot serialize objects {leftovers!r}")
    return ws
