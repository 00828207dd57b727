"""Diagrams stored as directories: one .sset per value and a diagram.act table.

Table lines::

    value <key> <file.sset>
    act <root> <theta> <file.smap>    # bounded diagrams, theta like 0,2
    arrow <arrow> <file.smap>         # diagrams on a finite category

Every file name is relative to the directory.
"""
from __future__ import annotations

from pathlib import Path

from . import operators as ops
from .bounded import BoundedDiagram, DiagramError, validate_diagram, view_arrows
from .catalog import _namer
from .fincat import Diagram, FinCategory
from .sset import (
    SimplexRef, SimplicialMap, SimplicialSet, load_sset, map_to_text, parse_smap, to_text,
)

TABLE = "diagram.act"


def _read_table(directory: Path) -> list[list[str]]:
    path = directory / TABLE
    if not path.exists():
        raise DiagramError(f"{path} not found")
    rows = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([str(lineno)] + line.split())
    return rows


class _Loader:
    def __init__(self, directory: Path):
        self.dir = directory
        self.spaces: dict = {}

    def space(self, name: str) -> SimplicialSet:
        if name not in self.spaces:
            self.spaces[name] = load_sset(self.dir / name)
        return self.spaces[name]

    def map(self, name: str) -> SimplicialMap:
        return parse_smap((self.dir / name).read_text(), self.space)[1]


def _parse_theta(tok: str) -> tuple:
    try:
        return tuple(int(x) for x in tok.split(","))
    except ValueError:
        raise DiagramError(f"bad operator {tok!r}") from None


def load_bounded(base: SimplicialSet, directory) -> BoundedDiagram:
    """Bounded diagram over ``base``; every non-identity view arrow needs an act line."""
    d = Path(directory)
    L = _Loader(d)
    values, actions = {}, {}
    for row in _read_table(d):
        lineno, kind, args = row[0], row[1], row[2:]
        if kind == "value" and len(args) == 2:
            values[args[0]] = L.space(args[1])
        elif kind == "act" and len(args) == 3:
            actions[(args[0], _parse_theta(args[1]))] = L.map(args[2])
        else:
            raise DiagramError(f"{TABLE} line {lineno}: cannot parse")
    for r in base.roots():
        if str(r) not in values:
            raise DiagramError(f"no value for simplex {r!r}", r)
    for s, t, th in view_arrows(base):
        if (str(t), th) not in actions:
            raise DiagramError(f"no action for the arrow {s!r} -> {t!r} along {th}", t)

    def action(r, theta):
        face = base.root_face(r, theta)
        # read a degenerate face through its root
        mono = ops.compose(theta, ops.section(face.eta))
        return actions[(str(r), mono)]

    F = BoundedDiagram(base, lambda r: values[str(r)], action, tag="file")
    return validate_diagram(F)


def load_diagram(I: FinCategory, directory) -> Diagram:
    d = Path(directory)
    L = _Loader(d)
    values, maps = {}, {}
    for row in _read_table(d):
        lineno, kind, args = row[0], row[1], row[2:]
        if kind == "value" and len(args) == 2:
            values[args[0]] = L.space(args[1])
        elif kind == "arrow" and len(args) == 2:
            maps[args[0]] = L.map(args[1])
        else:
            raise DiagramError(f"{TABLE} line {lineno}: cannot parse")
    missing = [o for o in I.objects if o not in values]
    if missing:
        raise DiagramError(f"no value for objects {missing}")
    return Diagram(I, values, maps)


def _printable(X: SimplicialSet) -> tuple[SimplicialSet, dict]:
    return X.relabeled(_namer())


def _rename(f: SimplicialMap, src, dst) -> SimplicialMap:
    (A, na), (B, nb) = src, dst
    return SimplicialMap(
        A, B, {na[r]: SimplexRef(nb[y.root], y.eta) for r, y in f.assignment.items()}, check=False,
    )


def write_bounded(F: BoundedDiagram, directory) -> Path:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    A = F.base
    lines, named = [], {}
    for i, r in enumerate(A.roots()):
        named[r] = _printable(F.value(r))
        (d / f"value{i}.sset").write_text(to_text(named[r][0]))
        lines.append(f"value {r} value{i}.sset")
    index = {r: i for i, r in enumerate(A.roots())}
    for k, (s, t, th) in enumerate(view_arrows(A)):
        f = _rename(F.action(t, th), named[s], named[t])
        fname = f"act{k}.smap"
        (d / fname).write_text(map_to_text(f, f"act{k}", f"value{index[s]}.sset", f"value{index[t]}.sset"))
        lines.append(f"act {t} {','.join(map(str, th))} {fname}")
    (d / TABLE).write_text("\n".join(lines) + "\n")
    return d


def write_diagram(D: Diagram, directory) -> Path:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    I = D.category
    lines, named = [], {}
    for o in I.objects:
        named[o] = _printable(D[o])
        (d / f"{o}.sset").write_text(to_text(named[o][0]))
        lines.append(f"value {o} {o}.sset")
    for a, (s, t) in I.arrows.items():
        f = _rename(D.map(a), named[s], named[t])
        (d / f"{a}.smap").write_text(map_to_text(f, a, f"{s}.sset", f"{t}.sset"))
        lines.append(f"arrow {a} {a}.smap")
    (d / TABLE).write_text("\n".join(lines) + "\n")
    return d
