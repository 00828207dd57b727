"""Finite categories, functors between them, and space- or set-valued diagrams.

Identities are implicit: the identity of object ``o`` is the arrow
``("id", o)``.  Sets are handled as discrete (0-dimensional) spaces so that
one colimit engine serves both.
"""
from __future__ import annotations

from itertools import product as iproduct
from typing import Iterable, NamedTuple

from . import operators as ops
from .homology import induces_homology_iso
from .sset import (
    SimplexRef, SimplicialMap, SimplicialSet, colimit_space, discrete,
    identity_map, map_from_colimit,
)


class CategoryError(ValueError):
    pass


def ident(o) -> tuple:
    return ("id", o)


def is_ident(a) -> bool:
    return isinstance(a, tuple) and len(a) == 2 and a[0] == "id"


class FinCategory:
    """A finite category from objects, non-identity arrows and a composition table.

    ``arrows`` maps arrow ids to ``(src, dst)``; ``composition`` maps
    ``(g, f)`` (g after f) to the composite for every composable pair of
    non-identity arrows.
    """

    def __init__(self, objects: Iterable, arrows: dict, composition: dict | None = None, check: bool = True):
        self.objects = list(objects)
        self._objset = set(self.objects)
        self.arrows = dict(arrows)
        self._comp = dict(composition or {})
        self._hom: dict = {}
        for a, (s, t) in self.arrows.items():
            self._hom.setdefault((s, t), []).append(a)
        self._out: dict = {}
        self._in: dict = {}
        for a, (s, t) in self.arrows.items():
            self._out.setdefault(s, []).append(a)
            self._in.setdefault(t, []).append(a)
        if check:
            self.validate()

    def src(self, a):
        return a[1] if is_ident(a) else self.arrows[a][0]

    def dst(self, a):
        return a[1] if is_ident(a) else self.arrows[a][1]

    def hom(self, s, t) -> list:
        out = list(self._hom.get((s, t), []))
        if s == t:
            out.insert(0, ident(s))
        return out

    def out_arrows(self, s) -> list:
        return list(self._out.get(s, []))

    def in_arrows(self, t) -> list:
        return list(self._in.get(t, []))

    def all_arrows(self) -> list:
        return [ident(o) for o in self.objects] + list(self.arrows)

    def compose(self, g, f):
        """g o f."""
        if self.dst(f) != self.src(g):
            raise CategoryError(f"arrows {g!r} and {f!r} are not composable")
        if is_ident(f):
            return g
        if is_ident(g):
            return f
        try:
            return self._comp[(g, f)]
        except KeyError:
            raise CategoryError(f"composite of {g!r} after {f!r} is missing") from None

    def validate(self) -> "FinCategory":
        for a, (s, t) in self.arrows.items():
            if is_ident(a):
                raise CategoryError(f"arrow id {a!r} is reserved for identities")
            if s not in self._objset or t not in self._objset:
                raise CategoryError(f"arrow {a!r} has unknown endpoint")
        for (g, f), h in self._comp.items():
            if g not in self.arrows or f not in self.arrows:
                raise CategoryError(f"composition entry for unknown arrow in {g!r} o {f!r}")
            if self.arrows[f][1] != self.arrows[g][0]:
                raise CategoryError(f"composition entry {g!r} o {f!r} is not composable")
            if (self.src(h), self.dst(h)) != (self.arrows[f][0], self.arrows[g][1]):
                raise CategoryError(f"composite {h!r} of {g!r} o {f!r} has wrong endpoints")
        for f, (s, t) in self.arrows.items():
            for g in self._out.get(t, []):
                if (g, f) not in self._comp:
                    raise CategoryError(f"composite of {g!r} after {f!r} is missing")
        for f in self.arrows:
            for g in self._out.get(self.dst(f), []):
                for h in self._out.get(self.dst(g), []):
                    if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f):
                        raise CategoryError(f"composition is not associative on {h!r}, {g!r}, {f!r}")
        return self

    def is_loop_free(self) -> bool:
        """No non-identity endomorphisms and no arrows both ways between distinct objects."""
        for a, (s, t) in self.arrows.items():
            if s == t or self._hom.get((t, s)):
                return False
        return True

    def opposite(self) -> "FinCategory":
        return FinCategory(
            self.objects,
            {a: (t, s) for a, (s, t) in self.arrows.items()},
            {(f, g): h for (g, f), h in self._comp.items()},
            check=False,
        )

    def __repr__(self) -> str:
        return f"FinCategory({len(self.objects)} objects, {len(self.arrows)} arrows)"


# -- small constructors ---------------------------------------------------------

def terminal() -> FinCategory:
    return FinCategory(["*"], {})


def discrete_category(objects: Iterable) -> FinCategory:
    return FinCategory(objects, {})


def cospan() -> FinCategory:
    """0 -> 01 <- 1."""
    return FinCategory(["0", "01", "1"], {"a0": ("0", "01"), "a1": ("1", "01")})


def span() -> FinCategory:
    """0 <- 01 -> 1, the shape of a pushout."""
    return FinCategory(["01", "0", "1"], {"p0": ("01", "0"), "p1": ("01", "1")})


def linear_order(n: int) -> FinCategory:
    """0 -> 1 -> ... -> n with arrow ``i_j`` for i < j."""
    objs = [str(i) for i in range(n + 1)]
    arrows = {f"{i}_{j}": (str(i), str(j)) for i in range(n + 1) for j in range(i + 1, n + 1)}
    comp = {
        (f"{j}_{k}", f"{i}_{j}"): f"{i}_{k}"
        for i in range(n + 1) for j in range(i + 1, n + 1) for k in range(j + 1, n + 1)
    }
    return FinCategory(objs, arrows, comp)


def poset(elements: Iterable, leq) -> FinCategory:
    els = list(elements)
    arrows = {(a, b): (a, b) for a in els for b in els if a != b and leq(a, b)}
    comp = {((b, c), (a, b)): (a, c) for (a, b) in arrows for (b2, c) in arrows if b2 == b}
    return FinCategory(els, arrows, comp)


def monoid_category(elements: list, table: dict) -> FinCategory:
    """One object ``*`` with endomorphisms ``elements`` (identity excluded)."""
    arrows = {e: ("*", "*") for e in elements}
    comp = {}
    for (g, f), h in table.items():
        comp[(g, f)] = ident("*") if h is None else h
    return FinCategory(["*"], arrows, comp)


# -- functors ----------------------------------------------------------------------

class Functor:
    """Functor between finite categories, given on objects and non-identity arrows."""

    def __init__(self, source: FinCategory, target: FinCategory, on_objects: dict, on_arrows: dict, check: bool = True):
        self.source, self.target = source, target
        self.on_objects = dict(on_objects)
        self.on_arrows = dict(on_arrows)
        if check:
            self.validate()

    def obj(self, o):
        return self.on_objects[o]

    def arr(self, a):
        if is_ident(a):
            return ident(self.on_objects[a[1]])
        return self.on_arrows[a]

    def validate(self) -> "Functor":
        I, J = self.source, self.target
        for o in I.objects:
            if self.on_objects.get(o) not in J._objset:
                raise CategoryError(f"object {o!r} sent outside the target")
        for a, (s, t) in I.arrows.items():
            b = self.on_arrows.get(a)
            if b is None:
                raise CategoryError(f"arrow {a!r} is not sent anywhere")
            if (J.src(b), J.dst(b)) != (self.obj(s), self.obj(t)):
                raise CategoryError(f"arrow {a!r} sent to an arrow with wrong endpoints")
        for (g, f), h in I._comp.items():
            if J.compose(self.arr(g), self.arr(f)) != self.arr(h):
                raise CategoryError(f"composition not preserved on {g!r} o {f!r}")
        return self

    def then(self, other: "Functor") -> "Functor":
        """other o self."""
        return Functor(
            self.source, other.target,
            {o: other.obj(self.obj(o)) for o in self.source.objects},
            {a: other.arr(self.arr(a)) for a in self.source.arrows},
            check=False,
        )


def identity_functor(C: FinCategory) -> Functor:
    return Functor(C, C, {o: o for o in C.objects}, {a: a for a in C.arrows}, check=False)


def inclusion_functor(C: FinCategory, objects: Iterable) -> tuple[FinCategory, Functor]:
    """Full subcategory on ``objects`` with its inclusion."""
    keep = set(objects)
    arrows = {a: st for a, st in C.arrows.items() if st[0] in keep and st[1] in keep}
    comp = {k: h for k, h in C._comp.items() if k[0] in arrows and k[1] in arrows}
    sub = FinCategory([o for o in C.objects if o in keep], arrows, comp)
    return sub, Functor(sub, C, {o: o for o in sub.objects}, {a: a for a in arrows})


def to_terminal(C: FinCategory) -> Functor:
    T = terminal()
    return Functor(C, T, {o: "*" for o in C.objects}, {a: ident("*") for a in C.arrows})


# -- diagrams -----------------------------------------------------------------------

class Diagram:
    """A functor from a finite category to finite simplicial sets."""

    def __init__(self, category: FinCategory, values: dict, maps: dict, check: bool = True):
        self.category = category
        self.values = dict(values)
        self.maps = dict(maps)
        if check:
            self.validate()

    def __getitem__(self, o) -> SimplicialSet:
        return self.values[o]

    def map(self, a) -> SimplicialMap:
        if is_ident(a):
            return identity_map(self.values[a[1]])
        return self.maps[a]

    def validate(self) -> "Diagram":
        C = self.category
        for a, (s, t) in C.arrows.items():
            f = self.maps.get(a)
            if f is None:
                raise CategoryError(f"diagram has no map for arrow {a!r}")
            if f.domain is not self.values[s] or f.codomain is not self.values[t]:
                if f.domain != self.values[s] or f.codomain != self.values[t]:
                    raise CategoryError(f"map for {a!r} has the wrong endpoints")
        for (g, f), h in C._comp.items():
            if self.map(g).compose(self.map(f)) != self.map(h):
                raise CategoryError(f"diagram is not functorial on {g!r} o {f!r}")
        return self

    def restrict(self, u: Functor) -> "Diagram":
        """u^* of this diagram."""
        return Diagram(
            u.source,
            {o: self.values[u.obj(o)] for o in u.source.objects},
            {a: self.map(u.arr(a)) for a in u.source.arrows},
            check=False,
        )

    def as_sets(self) -> tuple[dict, dict]:
        """Read a diagram of discrete spaces back as sets and functions."""
        sets = {o: frozenset(X.roots(0)) for o, X in self.values.items()}
        funcs = {a: {v: f.assignment[v].root for v in f.domain.roots(0)} for a, f in self.maps.items()}
        return sets, funcs


def set_diagram(category: FinCategory, sets: dict, functions: dict) -> Diagram:
    values = {o: discrete(sorted(s, key=repr)) for o, s in sets.items()}
    maps = {}
    for a, (s, t) in category.arrows.items():
        fn = functions[a]
        maps[a] = SimplicialMap(values[s], values[t], {x: SimplexRef(fn[x], (0,)) for x in sets[s]})
    return Diagram(category, values, maps)


def constant_diagram(category: FinCategory, X: SimplicialSet) -> Diagram:
    idm = identity_map(X)
    return Diagram(category, {o: X for o in category.objects}, {a: idm for a in category.arrows}, check=False)


class DiagramMap:
    """Natural transformation between diagrams on the same category."""

    def __init__(self, source: Diagram, target: Diagram, components: dict, check: bool = True):
        self.source, self.target = source, target
        self.components = dict(components)
        if check:
            self.validate()

    def validate(self) -> "DiagramMap":
        C = self.source.category
        for a, (s, t) in C.arrows.items():
            lhs = self.components[t].compose(self.source.map(a))
            rhs = self.target.map(a).compose(self.components[s])
            if lhs != rhs:
                raise CategoryError(f"naturality fails on {a!r}")
        return self


def natural_transformations(F: Diagram, G: Diagram) -> list[dict]:
    """All natural transformations between set-valued diagrams (brute force)."""
    C = F.category
    sf, ff = F.as_sets()
    sg, fg = G.as_sets()
    per_obj = []
    for o in C.objects:
        dom = sorted(sf[o], key=repr)
        cod = sorted(sg[o], key=repr)
        per_obj.append([dict(zip(dom, vals)) for vals in iproduct(cod, repeat=len(dom))])
    out = []
    for choice in iproduct(*per_obj):
        comp = dict(zip(C.objects, choice))
        if all(
            comp[t][ff[a][x]] == fg[a][comp[s][x]]
            for a, (s, t) in C.arrows.items() for x in sf[s]
        ):
            out.append(comp)
    return out


# -- comma categories and left Kan extension --------------------------------------

class CommaResult(NamedTuple):
    category: FinCategory
    projection: Functor


def comma_over(u: Functor, j) -> CommaResult:
    """u | j: objects (i, m: u(i) -> j); arrows a: i -> i' with m' o u(a) = m."""
    I, J = u.source, u.target
    if j not in J._objset:
        raise CategoryError(f"unknown object {j!r}")
    objs = [(i, m) for i in I.objects for m in J.hom(u.obj(i), j)]
    arrows, comp = {}, {}
    for (i, m) in objs:
        for a in I.out_arrows(i):
            i2 = I.dst(a)
            m2_list = [m2 for m2 in J.hom(u.obj(i2), j) if J.compose(m2, u.arr(a)) == m]
            for m2 in m2_list:
                arrows[(a, (i, m))] = ((i, m), (i2, m2))
    for f, (x, y) in arrows.items():
        for g, (y2, z) in arrows.items():
            if y2 == y:
                h = I.compose(g[0], f[0])
                comp[(g, f)] = ident(x) if is_ident(h) else (h, x)
    cat = FinCategory(objs, arrows, comp, check=False)
    proj = Functor(cat, I, {o: o[0] for o in objs}, {a: a[0] for a in arrows}, check=False)
    return CommaResult(cat, proj)


class KanExtension(NamedTuple):
    diagram: Diagram
    colimits: dict  # j -> ColimitResult over the comma category
    unit: DiagramMap  # F -> u^* u_! F

    def labelled_sets(self) -> tuple[dict, dict]:
        """For set-valued input: each element named by an original element it came from."""
        names = {}
        for j, col in self.colimits.items():
            plain = [x for _, x in col.rep.values()]
            names[j] = {
                r: x if plain.count(x) == 1 else (x, obj) for r, (obj, x) in col.rep.items()
            }
        sets = {j: frozenset(names[j].values()) for j in names}
        funcs = {
            b: {names[s][v]: names[t][f.assignment[v].root] for v in f.domain.roots(0)}
            for b, f in self.diagram.maps.items()
            for s, t in [self.diagram.category.arrows[b]]
        }
        return sets, funcs


def kan_left(u: Functor, F: Diagram) -> KanExtension:
    """Left Kan extension u_! F, objectwise colim over u | j."""
    I, J = u.source, u.target
    commas = {j: comma_over(u, j) for j in J.objects}
    colims = {}
    for j, (cat, proj) in commas.items():
        colims[j] = colimit_space(
            {o: F[o[0]] for o in cat.objects},
            [(s, t, F.map(a[0])) for a, (s, t) in cat.arrows.items()],
        )
    values = {j: colims[j].space for j in J.objects}
    maps = {}
    for b, (j, j2) in J.arrows.items():
        comps = {(i, m): colims[j2].cocone[(i, J.compose(b, m))] for (i, m) in commas[j].category.objects}
        maps[b] = map_from_colimit(colims[j], comps, values[j2])
    ext = Diagram(J, values, maps, check=False)
    unit = DiagramMap(
        F, ext.restrict(u),
        {i: colims[u.obj(i)].cocone[(i, ident(u.obj(i)))] for i in I.objects},
        check=False,
    )
    return KanExtension(ext, colims, unit)


def counit(u: Functor, G: Diagram) -> DiagramMap:
    """u_! u^* G -> G."""
    ext = kan_left(u, G.restrict(u))
    comps = {}
    for j in u.target.objects:
        col = ext.colimits[j]
        legs = {(i, m): G.map(m) for (i, m) in col.cocone}
        comps[j] = map_from_colimit(col, legs, G[j])
    return DiagramMap(ext.diagram, G, comps, check=False)


# -- nerves ---------------------------------------------------------------------------

class NerveResult(NamedTuple):
    space: SimplicialSet
    loop_free: bool
    complete: bool


def normalize_string(C: FinCategory, first, arrows: tuple) -> SimplexRef:
    """Normal form of the string first <- ... given by arrows a_k: i_k -> i_{k-1}."""
    n = len(arrows)
    js = {k - 1 for k in range(1, n + 1) if is_ident(arrows[k - 1])}
    kept = tuple(a for a in arrows if not is_ident(a))
    return SimplexRef((first, kept), ops.surjection_from_set(js, n))


def string_face(C: FinCategory, first, arrows: tuple, k: int) -> SimplexRef:
    n = len(arrows)
    if k == 0:
        return normalize_string(C, C.src(arrows[0]) if n else first, arrows[1:])
    if k == n:
        return normalize_string(C, first, arrows[:-1])
    merged = C.compose(arrows[k - 1], arrows[k])
    return normalize_string(C, first, arrows[: k - 1] + (merged,) + arrows[k + 1:])


def nerve_truncated(C: FinCategory, d: int) -> NerveResult:
    """Nerve up to dimension d.  An n-simplex is (i_0; a_1..a_n), a_k: i_k -> i_{k-1}."""
    if d < 0:
        raise ValueError("depth must be non-negative")
    levels = [[(o, ()) for o in C.objects]]
    for n in range(1, d + 2):
        nxt = []
        for first, arrs in levels[-1]:
            end = C.src(arrs[-1]) if arrs else first
            for a in C.in_arrows(end):
                nxt.append((first, arrs + (a,)))
        levels.append(nxt)
    faces, dims = {}, {}
    for n in range(d + 1):
        for first, arrs in levels[n]:
            dims[(first, arrs)] = n
            faces[(first, arrs)] = tuple(string_face(C, first, arrs, k) for k in range(n + 1)) if n else ()
    space = SimplicialSet(faces, dims, check=False)
    loop_free = C.is_loop_free()
    return NerveResult(space, loop_free, loop_free and not levels[d + 1])


def longest_chain(C: FinCategory) -> int:
    """Length of the longest string of non-identity arrows (loop-free categories only)."""
    if not C.is_loop_free():
        raise CategoryError("category has loops; its nerve is infinite")
    memo: dict = {}

    def depth(o):
        if o not in memo:
            memo[o] = max((1 + depth(C.src(a)) for a in C.in_arrows(o)), default=0)
        return memo[o]

    return max((depth(o) for o in C.objects), default=0)


def nerve(C: FinCategory) -> SimplicialSet:
    res = nerve_truncated(C, longest_chain(C))
    assert res.complete
    return res.space


def nerve_map(u: Functor, source: SimplicialSet, target: SimplicialSet) -> SimplicialMap:
    assignment = {}
    for (first, arrs) in source.roots():
        assignment[(first, arrs)] = target_ref(u, first, arrs)
    return SimplicialMap(source, target, assignment, check=False)


def target_ref(u: Functor, first, arrs) -> SimplexRef:
    return normalize_string(u.target, u.obj(first), tuple(u.arr(a) for a in arrs))


def weak_equivalence_cat(u: Functor) -> str:
    """'homology-equivalent' (a proxy, not a proof), 'not', or 'inconclusive'."""
    if not (u.source.is_loop_free() and u.target.is_loop_free()):
        return "inconclusive"
    A, B = nerve(u.source), nerve(u.target)
    return "homology-equivalent" if induces_homology_iso(nerve_map(u, A, B)) else "not"


# -- text format -------------------------------------------------------------------

def _arrow_token(a) -> str:
    return f"id:{a[1]}" if is_ident(a) else str(a)


def parse_fcat(text: str) -> FinCategory:
    objects, arrows, comp = [], {}, {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        p = line.split()
        if p[0] == "object" and len(p) == 2:
            objects.append(p[1])
        elif p[0] == "arrow" and len(p) == 6 and p[2] == ":" and p[4] == "->":
            arrows[p[1]] = (p[3], p[5])
        elif p[0] == "compose" and len(p) == 5 and p[3] == "=":
            h = p[4]
            comp[(p[1], p[2])] = ident(h[3:]) if h.startswith("id:") else h
        else:
            raise CategoryError(f"line {lineno}: cannot parse {line!r}")
    return FinCategory(objects, arrows, comp)


def fcat_to_text(C: FinCategory) -> str:
    lines = [f"object {o}" for o in C.objects]
    lines += [f"arrow {a} : {s} -> {t}" for a, (s, t) in C.arrows.items()]
    lines += [f"compose {g} {f} = {_arrow_token(h)}" for (g, f), h in C._comp.items()]
    return "\n".join(lines) + "\n"


def load_fcat(path) -> FinCategory:
    with open(path) as fh:
        return parse_fcat(fh.read())
