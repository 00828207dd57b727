"""Bounded diagrams over subdivisions and the tensor with spaces.

Diagrams over the subdivision of a finite space A are ordinary bounded
diagrams whose base is the lazy :class:`~hocolab.simplexcat.Subdivision`;
nothing over a subdivision is materialized beyond what is evaluated.

For a space K and a chain sigma of length n, the piece P(sigma) is the fibre
of the chain projection from the subdivision of K x A over sigma.  Its
m-simplices are pairs (phi, k) with phi: [m] -> [n] monotone and k a
simplex of K in the dimension of the phi(0)-th object of sigma; the
nondegenerate ones are those with phi injective, and faces of those are
again nondegenerate.  (K x F)(sigma) is the colimit of F over P(sigma).
"""
from __future__ import annotations

from typing import Callable, Iterable, NamedTuple

from . import operators as ops
from .bounded import (
    BoundedDiagram, DiagramError, DiagramMap, Replacement, colim_over, colim_map,
    horn_lifting, is_cofibration, restrict_diagram, restrict_map,
)
from .homology import components, homology, induces_homology_iso
from .simplexcat import (
    Chain, Subdivision, chain_apply, chain_objects, truncated_chain_category,
)
from .sset import (
    ColimitResult, SimplexRef, SimplicialMap, SimplicialSet, colimit_space,
    coproduct, identity_map, iter_maps, map_from_colimit, nd, point, simplex_map,
    standard,
)


class TruncationError(RuntimeError):
    """A computation needed chains beyond the bounds it was given."""

    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report or {}


class FibrancyError(ValueError):
    pass


def subdivision(A: SimplicialSet) -> Subdivision:
    """The lazy subdivision of A, shared by every diagram over A."""
    sub = getattr(A, "_subdivision", None)
    if sub is None:
        sub = Subdivision(A)
        A._subdivision = sub
    return sub


def as_chain(sigma) -> Chain:
    if isinstance(sigma, SimplexRef):
        if not sigma.is_nondegenerate:
            raise ValueError("expected a nondegenerate chain")
        sigma = sigma.root
    return Chain(*sigma)


def chain_diagram(A: SimplicialSet, value_fn: Callable, action_fn: Callable,
                  tag: str = "table", bounds: tuple | None = None) -> BoundedDiagram:
    """A lazy diagram over the subdivision of A; ``bounds`` is (depth, cap) if limited."""
    F = BoundedDiagram(subdivision(A), value_fn, action_fn, tag=tag)
    F.bounds = bounds
    return F


def within(chain: Chain, bounds: tuple | None, base: SimplicialSet) -> bool:
    if bounds is None:
        return True
    d, m = bounds
    return len(chain.arrows) <= d and all(x.dim <= m for x in chain_objects(base, chain))


def constant_chain(A: SimplicialSet, X: SimplicialSet) -> BoundedDiagram:
    idm = identity_map(X)
    return chain_diagram(A, lambda c: X, lambda c, th: idm, tag="constant")


def replace_chain(F: BoundedDiagram) -> Replacement:
    """Cofibrant replacement over a subdivision, evaluated chain by chain."""
    Q = Replacement(F)
    Q.bounds = getattr(F, "bounds", None)
    return Q


# -- pulling back along first and last objects -----------------------------------------

class Contravariant(NamedTuple):
    """A functor on the opposite of the simplex category of ``space``.

    ``value(x)`` is the value at any simplex and ``restrict(x, op)`` the map
    value(x) -> value(x o op).
    """

    space: SimplicialSet
    value: Callable
    restrict: Callable


def discrete_levels(A: SimplicialSet, Y: SimplicialSet) -> Contravariant:
    """x |-> the set of simplices of Y in the dimension of x, as a discrete space."""
    cache: dict = {}

    def level(n):
        if n not in cache:
            ys = list(Y.simplices(n))
            cache[n] = SimplicialSet({y: () for y in ys}, {y: 0 for y in ys}, check=False)
        return cache[n]

    def restrict(x, op):
        src, dst = level(x.dim), level(len(op) - 1)
        return SimplicialMap(src, dst, {y: nd(Y.apply(y, op), 0) for y in src.roots()}, check=False)

    return Contravariant(A, lambda x: level(x.dim), restrict)


def _arrow_to_first(C, arrows: tuple, upto: int):
    """a_1 o ... o a_upto: i_upto -> i_0 in a nerve string."""
    out = None
    for a in arrows[:upto]:
        out = a if out is None else C.compose(out, a)
    return out


def epsilon_pullback(source, variant: str = "first-object") -> BoundedDiagram:
    """Pull a diagram back along the first- or last-object functor.

    ``first-object``: ``source`` is a :class:`~hocolab.fincat.Diagram` on a
    loop-free category I; the result lives on the nerve of I and sends
    (i_0; a_1..a_n) to F(i_0).
    ``last-object``: ``source`` is a :class:`Contravariant` G on a finite
    space A; the result lives on the subdivision of A and sends a chain to G
    of its last object.
    """
    if variant == "first-object":
        from .fincat import Diagram, ident, nerve
        if not isinstance(source, Diagram):
            raise TypeError("first-object pullback needs a diagram on a finite category")
        C = source.category
        N = nerve(C)

        def value(root):
            return source[root[0]]

        def action(root, theta):
            first, arrows = root
            a = _arrow_to_first(C, arrows, theta[0])
            return source.map(a if a is not None else ident(first))

        E = BoundedDiagram(N, value, action, tag="epsilon-pullback")
        E.bounds = None
        return E
    if variant == "last-object":
        if not isinstance(source, Contravariant):
            raise TypeError("last-object pullback needs a functor on the opposite simplex category")
        A = source.space

        def value(chain):
            return source.value(chain_objects(A, chain)[-1])

        def action(chain, theta):
            objs = chain_objects(A, chain)
            th = ops.identity(objs[theta[-1]].dim)
            for k in range(theta[-1] + 1, len(objs)):
                th = ops.compose(th, chain.arrows[k - 1])
            return source.restrict(objs[theta[-1]], th)

        return chain_diagram(A, value, action, tag="epsilon-pullback")
    raise ValueError(f"unknown variant {variant!r}")


# -- the tensor ------------------------------------------------------------------------------

class Piece(NamedTuple):
    space: SimplicialSet  # P(sigma)
    to_base: SimplicialMap  # P(sigma) -> subdivision, (x, k) |-> sigma o x
    colim: ColimitResult


def piece_space(K: SimplicialSet, A, chain: Chain) -> SimplicialSet:
    """The fibre P(sigma) of the chain projection from the subdivision of K x A."""
    objs = chain_objects(A, chain)
    n = len(chain.arrows)

    def arrow(a, b):
        th = ops.identity(objs[a].dim)
        for k in range(a + 1, b + 1):
            th = ops.compose(th, chain.arrows[k - 1])
        return th

    faces, dims = {}, {}
    for m in range(n + 1):
        for x in ops.injections(m, n):
            for k in K.simplices(objs[x[0]].dim):
                root = (x, k)
                dims[root] = m
                if m == 0:
                    faces[root] = ()
                    continue
                fs = [nd((x[1:], K.apply(k, arrow(x[0], x[1]))), m - 1)]
                for j in range(1, m + 1):
                    fs.append(nd((x[:j] + x[j + 1:], k), m - 1))
                faces[root] = tuple(fs)
    return SimplicialSet(faces, dims, check=False)


class Tensor(BoundedDiagram):
    """K x F over the subdivision of A, built chain by chain."""

    tag = "tensor"

    def __init__(self, K: SimplicialSet, F: BoundedDiagram):
        super().__init__(F.base)
        self.K, self.original = K, F
        self.bounds = getattr(F, "bounds", None)
        self._pieces: dict = {}

    def piece(self, chain) -> Piece:
        chain = as_chain(chain)
        p = self._pieces.get(chain)
        if p is None:
            A = self.base.base
            if not within(chain, self.bounds, A):
                raise TruncationError(f"chain {chain!r} lies outside the bounds {self.bounds}")
            P = piece_space(self.K, A, chain)
            h = SimplicialMap(P, self.base, {r: chain_apply(A, chain, r[0]) for r in P.roots()}, check=False)
            col = colim_over(restrict_diagram(h, self.original))
            p = self._pieces.setdefault(chain, Piece(P, h, col))
        return p

    def _value(self, chain):
        return self.piece(chain).colim.space

    def _action(self, chain, theta):
        face = self.base.root_face(chain, theta).root
        src, dst = self.piece(face), self.piece(chain)
        comps = {(x, k): dst.colim.cocone[(ops.compose(theta, x), k)] for (x, k) in src.space.roots()}
        return map_from_colimit(src.colim, comps, dst.colim.space)


def tensor_diagram(K: SimplicialSet, F: BoundedDiagram) -> Tensor:
    memo = F.__dict__.setdefault("_tensors", {})
    hit = memo.get(id(K))
    if hit is None or hit[0] is not K:
        hit = memo[id(K)] = (K, Tensor(K, F))
    return hit[1]


def tensor(K: SimplicialSet, F: BoundedDiagram, sigma) -> SimplicialSet:
    return tensor_diagram(K, F).value(as_chain(sigma))


def tensor_on_map(g: SimplicialMap, F: BoundedDiagram) -> DiagramMap:
    """g x F: K x F -> L x F for g: K -> L."""
    S, T = tensor_diagram(g.domain, F), tensor_diagram(g.codomain, F)

    def component(chain):
        src, dst = S.piece(chain), T.piece(chain)
        comps = {}
        for (x, k) in src.space.roots():
            comps[(x, k)] = dst.colim.cocone[(x, g(k))]
        return map_from_colimit(src.colim, comps, dst.colim.space)

    return DiagramMap(S, T, component)


def tensor_on_diagram_map(K: SimplicialSet, phi: DiagramMap) -> DiagramMap:
    """K x phi: K x F -> K x G."""
    S, T = tensor_diagram(K, phi.source), tensor_diagram(K, phi.target)

    def component(chain):
        src, dst = S.piece(chain), T.piece(chain)
        comps = {
            r: dst.colim.cocone[r].compose(phi.at(src.to_base.assignment[r]))
            for r in src.space.roots()
        }
        return map_from_colimit(src.colim, comps, dst.colim.space)

    return DiagramMap(S, T, component)


# -- structure isomorphisms ---------------------------------------------------------------------

def unit_map(F: BoundedDiagram, sigma) -> SimplicialMap:
    """Delta[0] x F(sigma) -> F(sigma)."""
    chain = as_chain(sigma)
    T = tensor_diagram(point(), F)
    p = T.piece(chain)
    n = len(chain.arrows)
    top = nd(chain, n)
    comps = {r: F.between(p.to_base.assignment[r], top, r[0]) for r in p.space.roots()}
    return map_from_colimit(p.colim, comps, F.value(chain))


def associativity_map(K: SimplicialSet, L: SimplicialSet, F: BoundedDiagram, sigma) -> SimplicialMap:
    """(K x L) x F (sigma) -> K x (L x F) (sigma), built from the two pieces."""
    from .sset import product
    chain = as_chain(sigma)
    KL = product(K, L)
    left = tensor_diagram(KL.space, F)
    inner = tensor_diagram(L, F)
    right = tensor_diagram(K, inner)
    lp, rp = left.piece(chain), right.piece(chain)
    comps = {}
    for (x, kl) in lp.space.roots():
        k, l = KL.proj_a(kl), KL.proj_b(kl)
        face = rp.to_base.assignment[(x, k)]  # sigma o x, maybe degenerate
        ip = inner.piece(face.root)
        # a degenerate sigma o x reads through its root chain, with the same first object
        key = (tuple(range(len(face.root.arrows) + 1)), l)
        comps[(x, kl)] = rp.colim.cocone[(x, k)].compose(ip.colim.cocone[key])
    return map_from_colimit(lp.colim, comps, rp.colim.space)


def coproduct_map(K1: SimplicialSet, K2: SimplicialSet, F: BoundedDiagram, sigma) -> SimplicialMap:
    """K1 x F (sigma) + K2 x F (sigma) -> (K1 + K2) x F (sigma)."""
    chain = as_chain(sigma)
    K = coproduct({1: K1, 2: K2})
    parts = {i: tensor_on_map(K.cocone[i], F).component(chain) for i in (1, 2)}
    src = coproduct({i: parts[i].domain for i in (1, 2)})
    return map_from_colimit(src, parts, parts[1].codomain)


def pull_along(f: SimplicialMap, G: BoundedDiagram) -> BoundedDiagram:
    """Restriction of a diagram over the subdivision of B along the induced map from A."""
    from .simplexcat import induced
    A = f.domain
    ind = induced(f)
    base = subdivision(A)

    def value(chain):
        return G.at(ind.on_chain(chain))

    def action(chain, theta):
        y = ind.on_chain(chain)
        x = ind.on_chain(base.root_face(chain, theta).root)
        return G.between(x, y, theta)

    return chain_diagram(A, value, action, tag="restriction")


def naturality_map(f: SimplicialMap, K: SimplicialSet, G: BoundedDiagram, sigma) -> SimplicialMap:
    """K x (f^* G)(sigma) -> (K x G)(f sigma); both are colimits over the same piece."""
    from .simplexcat import induced
    chain = as_chain(sigma)
    left = tensor_diagram(K, pull_along(f, G)).piece(chain)
    image = induced(f).on_chain(chain)
    right = tensor_diagram(K, G).piece(image.root)
    comps = {r: right.colim.cocone[r] for r in left.space.roots()}
    return map_from_colimit(left.colim, comps, right.colim.space)


def last_object_map(K: SimplicialSet, G: Contravariant, sigma) -> SimplicialMap:
    """Coproduct of G(last object) over the matching simplices of K, into K x G(sigma)."""
    chain = as_chain(sigma)
    F = epsilon_pullback(G, "last-object")
    p = tensor_diagram(K, F).piece(chain)
    A = G.space
    last = chain_objects(A, chain)[-1]
    n = len(chain.arrows)
    summands = {k: G.value(last) for k in K.simplices(last.dim)}
    src = coproduct(summands)
    comps = {k: p.colim.cocone[((n,), k)] for k in summands}
    return map_from_colimit(src, comps, p.colim.space)


def copies_map(K: SimplicialSet, F: BoundedDiagram, sigma) -> tuple[int, SimplicialMap]:
    """For a length-0 chain: the coproduct of F(sigma) over the vertices of the piece."""
    chain = as_chain(sigma)
    if chain.arrows:
        raise ValueError("copies_map needs a length-0 chain")
    p = tensor_diagram(K, F).piece(chain)
    X = F.value(chain)
    vertices = p.space.roots(0)
    src = coproduct({v: X for v in vertices})
    return len(vertices), map_from_colimit(src, {v: p.colim.cocone[v] for v in vertices}, p.colim.space)


def _h0(X: SimplicialSet) -> int:
    return homology(X).betti[0] if X.roots(0) else 0


def ex_negative(F: BoundedDiagram, sigma) -> dict:
    """Delta[1] x F at a length-0 chain: count the copies and compare H_0."""
    chain = as_chain(sigma)
    n = chain.first.dim
    count, m = copies_map(standard(1), F, chain)
    h0 = _h0(m.codomain)
    base_h0 = _h0(F.value(chain))
    return {
        "n": n,
        "copies": count,
        "expected": n + 2,
        "iso": m.is_iso(),
        "rank_h0": h0,
        "rank_h0_value": base_h0,
    }


# -- colimits over truncated chain categories ----------------------------------------------------

class ChainColimit(NamedTuple):
    colim: ColimitResult
    index: object  # ChainCategoryView
    inclusion: SimplicialMap


def chain_colimit(F: BoundedDiagram, d: int, m: int) -> ChainColimit:
    A = F.base.base
    view = truncated_chain_category(A, d, m)
    inc = SimplicialMap(view.space, F.base, {c: nd(c, len(c.arrows)) for c in view.space.roots()}, check=False)
    return ChainColimit(colim_over(restrict_diagram(inc, F)), view, inc)


def chain_colimit_map(phi: DiagramMap, src: ChainColimit, dst: ChainColimit) -> SimplicialMap:
    inc = src.inclusion
    R = restrict_map(inc, phi, restrict_diagram(inc, phi.source), restrict_diagram(inc, phi.target))
    return colim_map(R, src.colim, dst.colim)


def _homology_entry(X: SimplicialSet) -> dict:
    h = homology(X)
    return {"census": list(X.census()), "betti": list(h.betti), "torsion": [list(t) for t in h.torsion]}


def stable_below(a: dict, b: dict, d: int) -> bool:
    """Homology agrees in degrees below the depth (higher degrees see the truncation)."""
    pa = (a["betti"] + [0] * d)[:d]
    pb = (b["betti"] + [0] * d)[:d]
    ta = (a["torsion"] + [[]] * d)[:d]
    tb = (b["torsion"] + [[]] * d)[:d]
    return pa == pb and ta == tb


def colim_chains(F: BoundedDiagram, d: int, m: int, grow_cap: bool = True) -> tuple[SimplicialSet, dict]:
    """Colimit over the truncated chain category, with a stabilization report.

    The report compares with depth d + 1 and, when ``grow_cap``, cap m + 1.
    """
    if d < 0 or m < 0:
        raise ValueError("depth and cap must be non-negative")
    m2 = m + 1 if grow_cap else m
    here = chain_colimit(F, d, m).colim.space
    there = chain_colimit(F, d + 1, m2).colim.space
    a, b = _homology_entry(here), _homology_entry(there)
    report = {
        "depth": d, "cap": m, "here": a,
        "next": dict(depth=d + 1, cap=m2, **b),
        "stable_below_depth": stable_below(a, b, d),
    }
    return here, report


# -- half of SM7 ---------------------------------------------------------------------------------

def sm7_corner(f: SimplicialMap, phi: DiagramMap, chain) -> SimplicialMap:
    """colim(L x F <- K x F -> K x G)(sigma) -> L x G(sigma)."""
    chain = as_chain(chain)
    fF = tensor_on_map(f, phi.source).component(chain)
    fG = tensor_on_map(f, phi.target).component(chain)
    Kphi = tensor_on_diagram_map(f.domain, phi).component(chain)
    Lphi = tensor_on_diagram_map(f.codomain, phi).component(chain)
    po = colimit_space(
        {"KF": fF.domain, "LF": fF.codomain, "KG": Kphi.codomain},
        [("KF", "LF", fF), ("KF", "KG", Kphi)],
    )
    return map_from_colimit(po, {"LF": Lphi, "KG": fG, "KF": Lphi.compose(fF)}, Lphi.codomain)


def sm7_half_check(f: SimplicialMap, phi: DiagramMap, sample: Iterable, acyclic: bool = False) -> dict:
    if not f.is_mono():
        raise ValueError("f must be a monomorphism")
    sample = [as_chain(c) for c in sample]
    A = phi.source.base.base
    for c in sample:
        for D in (phi.source, phi.target):
            if not within(c, getattr(D, "bounds", None), A):
                raise TruncationError(f"sampled chain {c!r} lies outside the bounds")
    ok, bad = is_cofibration(phi, sample)
    if not ok:
        raise DiagramError("phi fails the cofibration test on the sample", bad)
    rows = []
    verdict = True
    for c in sample:
        cm = sm7_corner(f, phi, c)
        good = cm.is_mono() and (not acyclic or induces_homology_iso(cm))
        verdict &= good
        rows.append({"chain_length": len(c.arrows), "mono": cm.is_mono(), "pass": good})
    return {"pass": verdict, "chains": len(sample), "rows": rows}


# -- mapping spaces ------------------------------------------------------------------------------

def _face_inclusion(n: int, i: int) -> SimplicialMap:
    top = tuple(v for v in range(n + 1) if v != i)
    D = standard(n)
    return simplex_map(D, nd(top, n - 1), standard(n - 1))


def _pi0(X: SimplicialSet) -> dict:
    comp = components(X)
    reps = sorted(set(comp.values()), key=repr)
    index = {r: i for i, r in enumerate(reps)}
    return {v: index[c] for v, c in comp.items()}


class MapSpace(NamedTuple):
    levels: list  # level n: list of elements
    faces: dict  # (n, i) -> list: index in level n -> index in level n-1
    pi0: int
    kan: bool
    report: dict


def _is_contractible(A: SimplicialSet) -> bool:
    h = homology(A)
    return h.betti[0] == 1 and not any(h.betti[1:]) and not any(h.torsion)


def map_space(X: SimplicialSet, Y: SimplicialSet, A: SimplicialSet | None = None,
              bounds: tuple = (1, 1, 2), kan_certified: bool = False) -> MapSpace:
    """Truncated mapping space from the cofibrant replacement of cX into cY.

    Level n consists of the maps colim(Delta[n] x QcX) -> Y over the
    truncated chain category of A.  Discrete Y needs no fibrancy work; any
    other Y must pass horn filling up to dimension 2 and ``kan_certified``.
    """
    d, m, ell = bounds
    if d < 1:
        raise TruncationError("depth must be at least 1 for the chain category to be connected")
    A = A if A is not None else point()
    if not _is_contractible(A):
        raise ValueError("the resolving space must be contractible")
    discrete_target = Y.dimension <= 0
    if not discrete_target:
        from .sset import collapse_map
        if not kan_certified or not horn_lifting(collapse_map(Y), 2)[0]:
            raise FibrancyError("target is neither discrete nor certified Kan")
    if discrete_target:
        # maps into a discrete space only see components, and components of a
        # colimit are the colimit of components, so the 1-skeleton gives the same levels
        from .sset import subspace
        X = subspace(X, X.roots(0) + X.roots(1))
    Q = replace_chain(constant_chain(A, X))
    top = max(ell, 2)
    cols, pi0s, stab = [], [], []
    for n in range(top + 1):
        T = tensor_diagram(standard(n), Q)
        c = chain_colimit(T, d, m)
        cols.append(c)
        p = _pi0(c.colim.space)
        pi0s.append(p)
        if n <= 1:
            nxt = chain_colimit(T, d + 1, m).colim.space
            same = len(set(p.values())) == len(set(_pi0(nxt).values()))
            stab.append(same)
            if not same:
                raise TruncationError(
                    f"components of level {n} change between depth {d} and {d + 1}",
                    {"depth": d, "cap": m, "level": n},
                )
    face_cols: dict = {}
    for n in range(1, top + 1):
        for i in range(n + 1):
            g = tensor_on_map(_face_inclusion(n, i), Q)
            face_cols[(n, i)] = chain_colimit_map(g, cols[n - 1], cols[n])
    if discrete_target:
        from itertools import product as cartesian
        ys = sorted(Y.roots(0), key=repr)
        levels = [list(cartesian(ys, repeat=len(set(p.values())))) for p in pi0s]
        faces = {}
        for (n, i), cm in face_cols.items():
            # component of C_{n-1} -> component of C_n, then precompose
            comp_map = {c: pi0s[n][cm.assignment[v].root] for v, c in pi0s[n - 1].items()}
            width = len(set(pi0s[n - 1].values()))
            pos = {e: j for j, e in enumerate(levels[n - 1])}
            faces[(n, i)] = [pos[tuple(e[comp_map[c]] for c in range(width))] for e in levels[n]]
    else:
        levels = [list(iter_maps(c.colim.space, Y)) for c in cols]
        faces = {}
        for (n, i), cm in face_cols.items():
            pos = {tuple(sorted(g.assignment.items(), key=repr)): j for j, g in enumerate(levels[n - 1])}
            faces[(n, i)] = [pos[tuple(sorted(e.compose(cm).assignment.items(), key=repr))] for e in levels[n]]
    pi0 = _components_of(levels, faces)
    kan = _horn_filling(levels, faces, min(2, top))
    report = {
        "depth": d, "cap": m, "levels": ell,
        "level_sizes": [len(levels[n]) for n in range(ell + 1)],
        "pi0": pi0, "kan_up_to_2": kan, "stable_components": stab,
    }
    return MapSpace(levels[: ell + 1], {k: v for k, v in faces.items() if k[0] <= ell}, pi0, kan, report)


def _components_of(levels, faces) -> int:
    parent = list(range(len(levels[0])))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in range(len(levels[1])):
        a, b = find(faces[(1, 0)][e]), find(faces[(1, 1)][e])
        if a != b:
            parent[a] = b
    return len({find(a) for a in range(len(levels[0]))})


def _horn_filling(levels, faces, top: int) -> bool:
    """Every compatible horn in levels n-1 has a filler in level n, for n <= top."""
    from itertools import product as cartesian
    for n in range(1, top + 1):
        for k in range(n + 1):
            others = [i for i in range(n + 1) if i != k]
            filled = {tuple(faces[(n, i)][z] for i in others) for z in range(len(levels[n]))}
            for horn in cartesian(range(len(levels[n - 1])), repeat=len(others)):
                if horn in filled:
                    continue
                if _compatible(n, dict(zip(others, horn)), faces):
                    return False
    return True


def _compatible(n: int, given: dict, faces) -> bool:
    """d_i y_j = d_{j-1} y_i for i < j among the given faces of an n-simplex."""
    if n == 1:
        return True
    for i in given:
        for j in given:
            if i < j and faces[(n - 1, i)][given[j]] != faces[(n - 1, j - 1)][given[i]]:
                return False
    return True
