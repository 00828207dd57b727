"""Simplex categories of spaces and the chains of their subdivisions.

The nondegenerate view of a space has the nondegenerate simplices as objects
and, from rho to tau, the injective operators theta with tau o theta = rho.
Bounded diagrams are evaluated on this view.

A chain is a nondegenerate simplex of the subdivision: a first simplex a_0
together with non-identity operators theta_1..theta_n, where
a_k = a_{k-1} o theta_k, read as a string a_n -> ... -> a_0.  Objects of a
chain may be degenerate simplices of the base.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple

from . import operators as ops
from .operators import Op
from .sset import (
    SimplexRef, SimplicialBase, SimplicialMap, SimplicialSet, nd, pullback_space,
    simplex_map,
)


# -- nondegenerate view -------------------------------------------------------------

class SimplexCategoryView:
    """Objects: nondegenerate simplices.  Arrows rho -> tau: injective theta with tau o theta = rho."""

    def __init__(self, space: SimplicialSet):
        self.space = space
        self.objects = [r for n in range(space.dimension + 1) for r in space.roots(n)]
        self._into: dict = {}
        for r in self.objects:
            n = space.dim_of(r)
            out = []
            for k in range(n + 1):
                for theta in ops.injections(k, n):
                    f = space.root_face(r, theta)
                    if f.is_nondegenerate:
                        out.append((f.root, theta))
            self._into[r] = out

    def arrows_into(self, tau) -> list[tuple]:
        """(source root, theta) for every arrow into ``tau``."""
        return list(self._into[tau])

    def hom(self, rho, tau) -> list[Op]:
        return [theta for src, theta in self._into[tau] if src == rho]

    def arrows(self) -> Iterator[tuple]:
        """(source, target, theta) triples, identities included."""
        for t in self.objects:
            for s, theta in self._into[t]:
                yield s, t, theta

    def compose(self, outer: Op, inner: Op) -> Op:
        return ops.compose(outer, inner)

    def check_closed(self) -> bool:
        for s, t, th in self.arrows():
            for s2, th2 in self._into[s]:
                if (s2, ops.compose(th, th2)) not in set(self._into[t]):
                    return False
        return True


def nondeg_view(A: SimplicialSet) -> SimplexCategoryView:
    return SimplexCategoryView(A)


# -- chains -------------------------------------------------------------------------

class Chain(NamedTuple):
    first: SimplexRef
    arrows: tuple  # of Op

    @property
    def length(self) -> int:
        return len(self.arrows)


def chain_objects(base: SimplicialBase, chain) -> list[SimplexRef]:
    first, arrows = chain
    objs = [first]
    for th in arrows:
        objs.append(base.apply(objs[-1], th))
    return objs


def normalize_chain(first: SimplexRef, arrows: tuple) -> SimplexRef:
    """Normal form of a possibly degenerate chain: identity arrows become degeneracies."""
    n = len(arrows)
    # theta_k maps into the dimension of the previous object
    targets = [first.dim] + [len(a) - 1 for a in arrows[:-1]]
    ident = [len(a) == t + 1 and ops.is_identity(a) for a, t in zip(arrows, targets)]
    js = {k for k in range(n) if ident[k]}
    kept = tuple(a for a, i in zip(arrows, ident) if not i)
    return SimplexRef(Chain(first, kept), ops.surjection_from_set(js, n))


def chain_face(base: SimplicialBase, chain, k: int) -> SimplexRef:
    first, arrows = chain
    n = len(arrows)
    if k == 0:
        return normalize_chain(base.apply(first, arrows[0]), arrows[1:])
    if k == n:
        return normalize_chain(first, arrows[:-1])
    merged = ops.compose(arrows[k - 1], arrows[k])
    return normalize_chain(first, arrows[: k - 1] + (merged,) + arrows[k + 1:])


def chain_apply(base: SimplicialBase, chain, op: Op) -> SimplexRef:
    """Normal form of chain o op for any monotone op into [length]."""
    first, arrows = chain
    objs = chain_objects(base, chain)
    start = op[0]
    new_first = objs[start]
    new_arrows = []
    for j in range(1, len(op)):
        a, b = op[j - 1], op[j]
        th = ops.identity(objs[a].dim)
        for k in range(a + 1, b + 1):
            th = ops.compose(th, arrows[k - 1])
        new_arrows.append(th)
    return normalize_chain(new_first, tuple(new_arrows))


class Subdivision(SimplicialBase):
    """The subdivision of a base space, evaluated lazily; roots are :class:`Chain` values."""

    def __init__(self, base: SimplicialBase):
        super().__init__()
        self.base = base

    def dim_of(self, chain) -> int:
        return len(chain[1])

    def _root_face(self, chain, mono: Op) -> SimplexRef:
        return chain_apply(self.base, chain, mono)

    def objects_of(self, chain) -> list[SimplexRef]:
        return chain_objects(self.base, chain)

    def vertex_chain(self, simplex: SimplexRef) -> Chain:
        return Chain(simplex, ())


def simplices_upto(A: SimplicialBase, m: int) -> list[SimplexRef]:
    """All simplices (degenerate included) of dimension <= m of a finite space."""
    out = []
    for p in range(m + 1):
        out.extend(A.simplices(p))
    return out


def enumerate_chains(A: SimplicialBase, d: int, m: int) -> list[list[Chain]]:
    """Chains of length <= d whose objects have dimension <= m, by length."""
    levels = [[Chain(x, ()) for x in simplices_upto(A, m)]]
    last_obj = {c: c.first for c in levels[0]}
    for _ in range(d):
        nxt = []
        for c in levels[-1]:
            end = last_obj[c]
            for p in range(m + 1):
                for th in ops.monotone_maps(p, end.dim):
                    if len(th) == end.dim + 1 and ops.is_identity(th):
                        continue
                    c2 = Chain(c.first, c.arrows + (th,))
                    last_obj[c2] = A.apply(end, th)
                    nxt.append(c2)
        levels.append(nxt)
    return levels


class ChainCategoryView(NamedTuple):
    base: SimplicialSet
    depth: int
    cap: int
    levels: list  # chains by length
    space: SimplicialSet  # the finite piece of the subdivision they span
    cap_saturated: bool


def truncated_chain_category(A: SimplicialSet, d: int, m: int) -> ChainCategoryView:
    """Chains of length <= d through simplices of dimension <= m, as a finite space."""
    if d < 0 or m < 0:
        raise ValueError("depth and cap must be non-negative")
    levels = enumerate_chains(A, d, m)
    faces, dims = {}, {}
    for n, chains in enumerate(levels):
        for c in chains:
            dims[c] = n
            faces[c] = tuple(chain_face(A, c, k) for k in range(n + 1)) if n else ()
    space = SimplicialSet(faces, dims, check=False)
    saturated = sum(map(len, enumerate_chains(A, d, m + 1))) == sum(map(len, levels))
    return ChainCategoryView(A, d, m, levels, space, saturated)


# -- induced functors ------------------------------------------------------------------

class Induced:
    """The functor of simplex categories induced by a map, and its subdivision."""

    def __init__(self, f: SimplicialMap):
        self.map = f

    def on_simplex(self, x: SimplexRef) -> SimplexRef:
        return self.map(x)

    def on_view(self, target_root, theta: Op) -> tuple:
        """Image of the view arrow (root_face(target, theta) -> target).

        Returns (source root, target root, operator) in the codomain's view.  When the image
        of the target is degenerate the arrow is read through its normal form,
        which collapses it in the nondegenerate view.
        """
        A, B = self.map.domain, self.map.codomain
        tgt = self.map(nd(target_root, A.dim_of(target_root)))
        src = B.apply(tgt, theta)
        op = ops.compose(tgt.eta, ops.compose(theta, ops.section(src.eta)))
        return src.root, tgt.root, op

    def on_chain(self, chain) -> SimplexRef:
        """Entrywise image; arrows are unchanged, so nondegenerate chains stay nondegenerate."""
        first, arrows = chain
        return normalize_chain(self.map(first), arrows)

    def chain_map(self, view: ChainCategoryView, target: ChainCategoryView) -> SimplicialMap:
        return SimplicialMap(
            view.space, target.space,
            {c: self.on_chain(c) for c in view.space.roots()}, check=False,
        )


def induced(f: SimplicialMap) -> Induced:
    return Induced(f)


# -- pullbacks along simplices ----------------------------------------------------------

def over_simplex(f: SimplicialMap, sigma: SimplexRef):
    """Pullback of f along sigma: Delta[n] -> B; its simplex category is f | sigma."""
    s = simplex_map(f.codomain, sigma)
    return pullback_space(s, f)


def base_change_check(f: SimplicialMap, g: SimplicialMap, G) -> dict:
    """Compare (g1)_! (f1)^* G with f^* g_! G simplex by simplex.

    ``g: A -> D``, ``f: B -> D``, ``G`` bounded over A.  The square is the
    fibre product P = B x_D A with f1: P -> A and g1: P -> B.  Returns a
    certificate listing, per nondegenerate simplex of B, both censuses and
    whether the comparison map is an isomorphism.
    """
    from .bounded import colim_over, restrict_diagram
    from .sset import SimplicialMap as SM, map_from_colimit

    sq = pullback_space(f, g)
    g1, f1 = sq.proj_a, sq.proj_b
    B = f.domain
    rows = []
    ok = True
    for beta in B.roots():
        b = nd(beta, B.dim_of(beta))
        left_sq = over_simplex(g1, b)  # Delta[n] x_B P
        right_sq = over_simplex(g, f(b))  # Delta[n] x_D A
        left_map = f1.compose(left_sq.proj_b)
        left = colim_over(restrict_diagram(left_map, G))
        right = colim_over(restrict_diagram(right_sq.proj_b, G))
        # (phi, (b', a)) |-> (phi, a)
        comparison = {
            r: _pair_ref(r[0], f1(r[1])) for r in left_sq.space.roots()
        }
        cmp_map = SM(left_sq.space, right_sq.space, comparison)
        iso = cmp_map.is_iso()
        if iso:
            comps = {
                r: right.cocone[cmp_map.assignment[r].root] for r in left_sq.space.roots()
            }
            iso = map_from_colimit(left, comps, right.space).is_iso()
        ok &= iso
        rows.append({
            "simplex": str(beta),
            "left": list(left.space.census()),
            "right": list(right.space.census()),
            "iso": iso,
        })
    return {"pass": ok, "simplices": rows}


def _pair_ref(x: SimplexRef, y: SimplexRef) -> SimplexRef:
    from .sset import normalize_pair
    return normalize_pair(x, y)
