"""Bounded diagrams over simplex categories and their homotopy theory.

A bounded diagram is stored normalized: it has a value at every nondegenerate
simplex and an action for every arrow of the nondegenerate view.  Its value
at a degenerate simplex is the value at the root, and an arbitrary arrow
x = y o theta acts by ``between(x, y, theta)``, which reads the arrow through
a section of x's degeneracy.  Boundedness is exactly the statement that this
does not depend on the section; :func:`audit_bounded` checks it.

Diagrams work over any :class:`~hocolab.sset.SimplicialBase`, so the same
code runs on finite spaces and on lazily evaluated subdivisions.
"""
from __future__ import annotations

from typing import Callable, Iterable, NamedTuple

from . import operators as ops
from .homology import induces_homology_iso
from .operators import Op
from .sset import (
    ColimitResult, SimplexRef, SimplicialBase, SimplicialMap, SimplicialSet,
    colimit_space, identity_map, map_from_colimit, nd,
    normalize_pair, pair_map, product, product_map, pullback_space, simplex_map,
    standard,
)


class NotBoundedError(ValueError):
    pass


class DiagramError(ValueError):
    def __init__(self, message: str, simplex=None):
        super().__init__(message)
        self.simplex = simplex


class BoundedDiagram:
    """Normalized bounded diagram; subclasses or callables supply values and actions."""

    tag = "table"

    def __init__(self, base: SimplicialBase, value_fn: Callable | None = None,
                 action_fn: Callable | None = None, tag: str | None = None):
        self.base = base
        self._value_fn = value_fn
        self._action_fn = action_fn
        if tag:
            self.tag = tag
        self._values: dict = {}
        self._actions: dict = {}

    # subclasses override these two
    def _value(self, root) -> SimplicialSet:
        return self._value_fn(root)

    def _action(self, root, theta: Op) -> SimplicialMap:
        return self._action_fn(root, theta)

    def value(self, root) -> SimplicialSet:
        v = self._values.get(root)
        if v is None:
            v = self._values.setdefault(root, self._value(root))
        return v

    def at(self, x: SimplexRef) -> SimplicialSet:
        return self.value(x.root)

    def action(self, root, theta: Op) -> SimplicialMap:
        """Action of the view arrow root_face(root, theta) -> root."""
        if ops.is_identity(theta) and len(theta) == self.base.dim_of(root) + 1:
            return identity_map(self.value(root))
        key = (root, theta)
        a = self._actions.get(key)
        if a is None:
            a = self._actions.setdefault(key, self._action(root, theta))
        return a

    def between(self, x: SimplexRef, y: SimplexRef, theta: Op) -> SimplicialMap:
        """Action of an arbitrary arrow x -> y with x = y o theta."""
        op = ops.compose(y.eta, ops.compose(theta, ops.section(x.eta)))
        return self.action(y.root, op)

    def __repr__(self) -> str:
        return f"BoundedDiagram({self.tag})"


def table_diagram(base: SimplicialSet, values: dict, actions: dict) -> BoundedDiagram:
    """Diagram from explicit tables; ``actions`` is keyed by (root, theta)."""
    return BoundedDiagram(base, values.__getitem__, lambda r, th: actions[(r, th)])


def constant(base: SimplicialBase, X: SimplicialSet) -> BoundedDiagram:
    idm = identity_map(X)
    return BoundedDiagram(base, lambda r: X, lambda r, th: idm, tag="constant")


class DiagramMap:
    """Natural transformation of bounded diagrams over one base."""

    def __init__(self, source: BoundedDiagram, target: BoundedDiagram, component_fn: Callable):
        self.source, self.target = source, target
        self._fn = component_fn
        self._memo: dict = {}

    def component(self, root) -> SimplicialMap:
        c = self._memo.get(root)
        if c is None:
            c = self._memo.setdefault(root, self._fn(root))
        return c

    def at(self, x: SimplexRef) -> SimplicialMap:
        return self.component(x.root)

    def then(self, other: "DiagramMap") -> "DiagramMap":
        """other o self."""
        return DiagramMap(self.source, other.target,
                          lambda r: other.component(r).compose(self.component(r)))


def identity_transformation(F: BoundedDiagram) -> DiagramMap:
    return DiagramMap(F, F, lambda r: identity_map(F.value(r)))


def empty_diagram(base: SimplicialBase) -> BoundedDiagram:
    from .sset import empty
    E = empty()
    return constant(base, E)


def from_empty(F: BoundedDiagram) -> DiagramMap:
    E = empty_diagram(F.base)
    return DiagramMap(E, F, lambda r: SimplicialMap(E.value(r), F.value(r), {}, check=False))


# -- finite-base utilities ---------------------------------------------------------

def view_arrows(A: SimplicialSet):
    """(source root, target root, theta) for all non-identity view arrows, cached per space."""
    cached = getattr(A, "_view_arrows", None)
    if cached is None:
        cached = []
        for r in A.roots():
            n = A.dim_of(r)
            for k in range(n):
                for theta in ops.injections(k, n):
                    f = A.root_face(r, theta)
                    if f.is_nondegenerate:
                        cached.append((f.root, r, theta))
        A._view_arrows = cached
    return cached


def validate_diagram(F: BoundedDiagram, audit: bool = True) -> BoundedDiagram:
    """Check endpoints and functoriality on the nondegenerate view of a finite base."""
    A = F.base
    into: dict = {}
    for s, t, th in view_arrows(A):
        into.setdefault(t, []).append((s, th))
        act = F.action(t, th)
        if act.domain != F.value(s) or act.codomain != F.value(t):
            raise DiagramError(f"action of {th} into {t!r} has the wrong endpoints", t)
    for t, arrows in into.items():
        for s, th in arrows:
            for s2, th2 in into.get(s, []):
                lhs = F.action(t, ops.compose(th, th2))
                rhs = F.action(t, th).compose(F.action(s, th2))
                if lhs != rhs:
                    raise DiagramError(f"diagram is not functorial into {t!r}", t)
    if audit:
        audit_bounded(F)
    return F


def audit_bounded(F: BoundedDiagram, extra: int = 1) -> bool:
    """Check that the section-read action is a functor on the full simplex category.

    Objects are all simplices up to ``dim + extra``; functoriality is checked
    against composition with face and degeneracy generators, which suffices.
    """
    A = F.base
    top = A.dimension + extra
    for p in range(top + 1):
        for y in A.simplices(p):
            for q in range(top + 1):
                for op1 in ops.monotone_maps(q, p):
                    x = A.apply(y, op1)
                    g1 = F.between(x, y, op1)
                    gens = [ops.face_op(q, i) for i in range(q + 1)] if q > 0 else []
                    if q + 1 <= top:
                        gens += [ops.degen_op(q, i) for i in range(q + 1)]
                    for h in gens:
                        z = A.apply(x, h)
                        if F.between(z, y, ops.compose(op1, h)) != g1.compose(F.between(z, x, h)):
                            raise NotBoundedError(
                                f"action depends on the chosen section at {y.root!r}"
                            )
    return True


def normalize_bounded(base: SimplicialSet, value_fn: Callable, action_fn: Callable, extra: int = 1) -> BoundedDiagram:
    """Normalize a raw diagram on the full simplex category.

    ``value_fn(x)`` gives the value at any simplex and ``action_fn(y, op)``
    the map value(y o op) -> value(y).  Every degeneracy must act by an
    isomorphism; values at degenerate simplices are then identified with the
    value at their root through that isomorphism.
    """
    top = base.dimension + extra
    for p in range(1, top + 1):
        for x in base.simplices(p):
            if x.is_nondegenerate:
                continue
            root = nd(x.root, base.dim_of(x.root))
            act = action_fn(root, x.eta)
            if act.domain != value_fn(x) or not act.is_iso():
                raise NotBoundedError(f"degeneracy onto {x.root!r} does not act invertibly")
    return BoundedDiagram(
        base,
        lambda r: value_fn(nd(r, base.dim_of(r))),
        lambda r, th: action_fn(nd(r, base.dim_of(r)), th),
    )


def restrict_diagram(h: SimplicialMap, G: BoundedDiagram) -> BoundedDiagram:
    """h^* G for h: S -> A, G bounded over A."""
    S = h.domain

    def value(s):
        return G.at(h.assignment[s])

    def action(s, theta):
        y = h.assignment[s]
        x = h(S.root_face(s, theta))
        return G.between(x, y, theta)

    return BoundedDiagram(S, value, action, tag="restriction")


def restrict_map(h: SimplicialMap, phi: DiagramMap, source: BoundedDiagram, target: BoundedDiagram) -> DiagramMap:
    return DiagramMap(source, target, lambda s: phi.at(h.assignment[s]))


def colim_over(F: BoundedDiagram) -> ColimitResult:
    """Colimit over the nondegenerate view of a finite base; cocone keyed by root."""
    A = F.base
    return colimit_space(
        {r: F.value(r) for r in A.roots()},
        [(s, t, F.action(t, th)) for s, t, th in view_arrows(A)],
    )


def colim_map(phi: DiagramMap, source: ColimitResult | None = None, target: ColimitResult | None = None) -> SimplicialMap:
    source = source or colim_over(phi.source)
    target = target or colim_over(phi.target)
    comps = {r: target.cocone[r].compose(phi.component(r)) for r in phi.source.base.roots()}
    return map_from_colimit(source, comps, target.space)


def colim_full(F: BoundedDiagram, extra: int = 1) -> ColimitResult:
    """Colimit over the full simplex category truncated at dim + extra (generators only)."""
    A = F.base
    top = A.dimension + extra
    objs, arrows = {}, []
    for p in range(top + 1):
        for y in A.simplices(p):
            objs[y] = F.at(y)
    for y in objs:
        p = y.dim
        for i in range(p + 1):
            if p > 0:
                x = A.apply(y, ops.face_op(p, i))
                arrows.append((x, y, F.between(x, y, ops.face_op(p, i))))
            if p + 1 <= top:
                x = A.apply(y, ops.degen_op(p, i))
                arrows.append((x, y, F.between(x, y, ops.degen_op(p, i))))
    return colimit_space(objs, arrows)


def cofinality_audit(F: BoundedDiagram, extra: int = 1) -> dict:
    """Compare the view colimit with the truncated full-category colimit."""
    small = colim_over(F)
    big = colim_full(F, extra)
    comps = {y: small.cocone[y.root] for y in big.cocone}
    cmp_map = map_from_colimit(big, comps, small.space)
    return {
        "pass": cmp_map.is_iso(),
        "view_census": list(small.space.census()),
        "full_census": list(big.space.census()),
    }


# -- latching objects ---------------------------------------------------------------

class Latching(NamedTuple):
    colim: ColimitResult  # cocone keyed by proper faces (injective ops)
    to_value: SimplicialMap  # L(sigma) -> F(sigma)


def proper_faces(n: int) -> list[Op]:
    return [th for k in range(n) for th in ops.injections(k, n)]


def latching(F: BoundedDiagram, root, with_map: bool = True) -> Latching:
    """Colimit of F over the boundary of the simplex ``root``, with its map to F(root)."""
    base = F.base
    n = base.dim_of(root)
    sigma = nd(root, n)
    faces = proper_faces(n)
    refs = {tau: base.root_face(root, tau) for tau in faces}
    objs = {tau: F.at(refs[tau]) for tau in faces}
    arrows = []
    for tau in faces:
        k = len(tau) - 1
        for i in range(k + 1 if k > 0 else 0):
            d = ops.face_op(k, i)
            sub = ops.compose(tau, d)
            arrows.append((sub, tau, F.between(refs[sub], refs[tau], d)))
    col = colimit_space(objs, arrows)
    if not with_map:
        return Latching(col, None)
    comps = {tau: F.between(refs[tau], sigma, tau) for tau in faces}
    return Latching(col, map_from_colimit(col, comps, F.value(root)))


def latching_map(phi: DiagramMap, root, LF: Latching, LG: Latching) -> SimplicialMap:
    base = phi.source.base
    comps = {
        tau: LG.colim.cocone[tau].compose(phi.at(base.root_face(root, tau)))
        for tau in LF.colim.cocone
    }
    return map_from_colimit(LF.colim, comps, LG.colim.space)


class Corner(NamedTuple):
    pushout: ColimitResult
    map: SimplicialMap  # pushout -> G(root)


def corner(phi: DiagramMap, root) -> Corner:
    """colim(F(s) <- L_F(s) -> L_G(s)) -> G(s)."""
    F, G = phi.source, phi.target
    LF, LG = latching(F, root), latching(G, root)
    lphi = latching_map(phi, root, LF, LG)
    po = colimit_space(
        {"L": LF.colim.space, "F": F.value(root), "LG": LG.colim.space},
        [("L", "F", LF.to_value), ("L", "LG", lphi)],
    )
    m = map_from_colimit(
        po, {"F": phi.component(root), "LG": LG.to_value, "L": LG.to_value.compose(lphi)},
        G.value(root),
    )
    return Corner(po, m)


def _roots(base, roots):
    if roots is not None:
        return list(roots)
    return [r for n in range(base.dimension + 1) for r in base.roots(n)]


def is_cofibration(phi: DiagramMap, roots: Iterable | None = None, acyclic: bool = False) -> tuple[bool, object]:
    """Corner-map test at every nondegenerate simplex (or the given ones)."""
    for r in _roots(phi.source.base, roots):
        c = corner(phi, r)
        if not c.map.is_mono():
            return False, r
        if acyclic and not induces_homology_iso(phi.component(r)):
            return False, r
    return True, None


def is_weq(phi: DiagramMap, roots: Iterable | None = None) -> tuple[bool, object]:
    """Objectwise homology-isomorphism proxy."""
    for r in _roots(phi.source.base, roots):
        if not induces_homology_iso(phi.component(r)):
            return False, r
    return True, None


def horn_lifting(f: SimplicialMap, max_dim: int = 2) -> tuple[bool, object]:
    """Kan fibration test for f restricted to horns of dimension <= max_dim."""
    from .sset import horn, inclusion, iter_maps
    X, Y = f.domain, f.codomain
    for n in range(1, max_dim + 1):
        D = standard(n)
        for k in range(n + 1):
            H = horn(n, k)
            inc = inclusion(H, D)
            for top in iter_maps(D, Y):
                below = top.compose(inc)
                for h in iter_maps(H, X):
                    if f.compose(h) != below:
                        continue
                    if not any(
                        g.compose(inc) == h and f.compose(g) == top for g in iter_maps(D, X)
                    ):
                        return False, (n, k)
    return True, None


def is_fibration(phi: DiagramMap, roots: Iterable | None = None, max_dim: int = 2) -> tuple[bool, object]:
    """Objectwise horn-lifting test, truncated at ``max_dim``."""
    for r in _roots(phi.source.base, roots):
        ok, _ = horn_lifting(phi.component(r), max_dim)
        if not ok:
            return False, r
    return True, None


# -- cofibrant replacement -------------------------------------------------------------

class _Cell(NamedTuple):
    latch: Latching
    cylinder: object  # ProductResult of L x Delta[1]
    glued: ColimitResult  # objects 'L1', 'cyl', 'F'
    end0: SimplicialMap  # L -> L x Delta[1] at 0
    to_target: SimplicialMap  # q at this simplex


class Replacement(BoundedDiagram):
    """Mapping-cylinder cofibrant replacement Q of a bounded diagram, built lazily."""

    tag = "cofibrant-replacement"

    def __init__(self, F: BoundedDiagram):
        super().__init__(F.base)
        self.original = F
        self._cells: dict = {}
        self.q = DiagramMap(self, F, lambda r: self.cell(r).to_target)

    def cell(self, root) -> _Cell:
        c = self._cells.get(root)
        if c is None:
            c = self._cells.setdefault(root, self._build(root))
        return c

    def _build(self, root) -> _Cell:
        F = self.original
        L = latching(self, root, with_map=False)
        Ls = L.colim.space
        FL = {
            tau: F.between(self.base.root_face(root, tau), nd(root, self.base.dim_of(root)), tau)
            .compose(self.q.at(self.base.root_face(root, tau)))
            for tau in L.colim.cocone
        }
        lam = map_from_colimit(L.colim, FL, F.value(root))
        I = standard(1)
        cyl = product(Ls, I)
        idL = identity_map(Ls)
        end0 = pair_map(cyl, idL, _const(Ls, I, (0,)))
        end1 = pair_map(cyl, idL, _const(Ls, I, (1,)))
        glued = colimit_space(
            {"L1": Ls, "cyl": cyl.space, "F": F.value(root)},
            [("L1", "cyl", end1), ("L1", "F", lam)],
        )
        q = map_from_colimit(
            glued, {"L1": lam, "cyl": lam.compose(cyl.proj_a), "F": identity_map(F.value(root))},
            F.value(root),
        )
        return _Cell(L, cyl, glued, end0, q)

    def _value(self, root) -> SimplicialSet:
        return self.cell(root).glued.space

    def _action(self, root, theta: Op) -> SimplicialMap:
        c = self.cell(root)
        return c.glued.cocone["cyl"].compose(c.end0).compose(c.latch.colim.cocone[theta])


def _const(A: SimplicialSet, B: SimplicialSet, vertex) -> SimplicialMap:
    return SimplicialMap(
        A, B, {r: SimplexRef(vertex, (0,) * (A.dim_of(r) + 1)) for r in A.roots()}, check=False
    )


def cofibrant_replacement(F: BoundedDiagram, check: bool | None = None) -> tuple[Replacement, DiagramMap]:
    """(Q, q: Q -> F).  On finite bases the cofibrancy and weak-equivalence postconditions are asserted."""
    Q = Replacement(F)
    if check is None:
        check = isinstance(F.base, SimplicialSet)
    if check:
        ok, w = is_cofibration(from_empty(Q))
        assert ok, f"replacement is not cofibrant at {w!r}"
        ok, w = is_weq(Q.q)
        assert ok, f"replacement map is not a weak equivalence at {w!r}"
    return Q, Q.q


def replace_map(phi: DiagramMap, QF: Replacement, QG: Replacement) -> DiagramMap:
    """Q(phi): QF -> QG, induced cell by cell."""
    base = phi.source.base
    out: DiagramMap

    def component(root):
        cf, cg = QF.cell(root), QG.cell(root)
        comps = {
            tau: cg.latch.colim.cocone[tau].compose(out.at(base.root_face(root, tau)))
            for tau in cf.latch.colim.cocone
        }
        lmap = map_from_colimit(cf.latch.colim, comps, cg.latch.colim.space)
        cyl_map = product_map(lmap, identity_map(standard(1)), cf.cylinder, cg.cylinder)
        return map_from_colimit(
            cf.glued,
            {
                "L1": cg.glued.cocone["L1"].compose(lmap),
                "cyl": cg.glued.cocone["cyl"].compose(cyl_map),
                "F": cg.glued.cocone["F"].compose(phi.component(root)),
            },
            cg.glued.space,
        )

    out = DiagramMap(QF, QG, component)
    return out


def ocolim(F: BoundedDiagram, audit: bool = False) -> dict:
    """colim of the cofibrant replacement; optionally audited against the full category."""
    Q, _ = cofibrant_replacement(F)
    col = colim_over(Q)
    out = {"space": col.space, "colimit": col, "replacement": Q}
    if audit:
        rep = cofinality_audit(Q)
        if not rep["pass"]:
            raise DiagramError("cofinality audit failed")
        out["audit"] = rep
    return out


# -- objectwise products ---------------------------------------------------------------

def times_constant(F: BoundedDiagram, X: SimplicialSet) -> tuple[BoundedDiagram, DiagramMap]:
    """F x cX with its projection to F."""
    prods: dict = {}

    def prod_at(r):
        if r not in prods:
            prods[r] = product(F.value(r), X)
        return prods[r]

    idX = identity_map(X)

    def action(r, th):
        s = F.base.root_face(r, th).root
        return product_map(F.action(r, th), idX, prod_at(s), prod_at(r))

    G = BoundedDiagram(F.base, lambda r: prod_at(r).space, action, tag="product")
    return G, DiagramMap(G, F, lambda r: prod_at(r).proj_a)


# -- restriction and extension -----------------------------------------------------------

class Extension(BoundedDiagram):
    """f_! F along f: A -> B, via colimits over pullbacks Delta[n] x_B A."""

    tag = "extension"

    def __init__(self, f: SimplicialMap, F: BoundedDiagram):
        super().__init__(f.codomain)
        self.f, self.original = f, F
        self._pieces: dict = {}

    def piece(self, root):
        p = self._pieces.get(root)
        if p is None:
            B = self.f.codomain
            sigma = nd(root, B.dim_of(root))
            sq = pullback_space(simplex_map(B, sigma), self.f)
            col = colim_over(restrict_diagram(sq.proj_b, self.original))
            p = self._pieces.setdefault(root, (sq, col))
        return p

    def _value(self, root):
        return self.piece(root)[1].space

    def _action(self, root, theta):
        B = self.f.codomain
        src = B.root_face(root, theta).root
        sq_s, col_s = self.piece(src)
        sq_t, col_t = self.piece(root)
        comps = {}
        for r in sq_s.space.roots():
            x, a = r
            img = normalize_pair(_reindex(x, theta), a)
            if not img.is_nondegenerate:
                raise DiagramError("extension comparison hit a degenerate simplex", root)
            comps[r] = col_t.cocone[img.root]
        return map_from_colimit(col_s, comps, col_t.space)


def _reindex(x: SimplexRef, theta: Op) -> SimplexRef:
    """Push a simplex of Delta[k] into Delta[n] along the vertex inclusion theta."""
    root = tuple(theta[v] for v in x.root)
    return SimplexRef(root, x.eta)


def transport(f: SimplicialMap, direction: str, F: BoundedDiagram) -> BoundedDiagram:
    if direction == "restrict":
        return restrict_diagram(f, F)
    if direction == "extend":
        return Extension(f, F)
    raise ValueError(f"unknown direction {direction!r}")


def extension_unit(ext: Extension) -> DiagramMap:
    """F -> f^* f_! F."""
    f, F = ext.f, ext.original
    B = f.codomain
    back = restrict_diagram(f, ext)

    def component(a):
        y = f.assignment[a]
        sq, col = ext.piece(y.root)
        n = B.dim_of(y.root)
        top = nd(tuple(range(n + 1)), n)
        x = standard(n).apply(top, y.eta)
        key = normalize_pair(x, nd(a, f.domain.dim_of(a)))
        return col.cocone[key.root]

    return DiagramMap(F, back, component)


def extension_counit(f: SimplicialMap, G: BoundedDiagram) -> DiagramMap:
    """f_! f^* G -> G."""
    ext = Extension(f, restrict_diagram(f, G))
    B = f.codomain

    def component(b):
        sq, col = ext.piece(b)
        sigma = nd(b, B.dim_of(b))
        comps = {}
        for r in sq.space.roots():
            x, a = r
            comps[r] = G.between(f(a), sigma, tuple(x.root[i] for i in x.eta))
        return map_from_colimit(col, comps, G.value(b))

    return DiagramMap(ext, G, component)


def ext_corner_check(phi: DiagramMap, X_roots: Iterable, acyclic: bool = False) -> bool:
    """Corner map colim(colim_X G <- colim_X F -> colim_A F) -> colim_A G is mono."""
    from .sset import inclusion, subspace
    F, G = phi.source, phi.target
    A = F.base
    X_roots = list(X_roots)
    for r in X_roots:
        if r not in A:
            raise DiagramError(f"{r!r} is not a simplex of the base", r)
    X = subspace(A, X_roots)
    if set(X.roots()) != set(X_roots):
        raise DiagramError("X is not a subspace")
    inc = inclusion(X, A)
    FX, GX = restrict_diagram(inc, F), restrict_diagram(inc, G)
    cFX, cGX, cFA, cGA = colim_over(FX), colim_over(GX), colim_over(F), colim_over(G)
    phiX = restrict_map(inc, phi, FX, GX)
    m_x = colim_map(phiX, cFX, cGX)
    inc_F = map_from_colimit(cFX, {r: cFA.cocone[r] for r in X.roots()}, cFA.space)
    inc_G = map_from_colimit(cGX, {r: cGA.cocone[r] for r in X.roots()}, cGA.space)
    m_a = colim_map(phi, cFA, cGA)
    po = colimit_space(
        {"FX": cFX.space, "GX": cGX.space, "FA": cFA.space},
        [("FX", "GX", m_x), ("FX", "FA", inc_F)],
    )
    cm = map_from_colimit(po, {"GX": inc_G, "FA": m_a, "FX": m_a.compose(inc_F)}, cGA.space)
    if not cm.is_mono():
        return False
    if acyclic:
        return induces_homology_iso(cm)
    return True
