"""Homotopy colimits over finite loop-free categories.

The main pipeline pulls a diagram back to the simplex category of the
nerve along the first-object functor, replaces it cofibrantly and takes the
colimit.  :func:`bk_oracle` computes the same homotopy type independently, as
the diagonal of the simplicial replacement, and shares nothing with the
pipeline beyond the space data structure.
"""
from __future__ import annotations

from . import operators as ops
from .bounded import colim_over, cofibrant_replacement
from .fincat import CategoryError, Diagram, FinCategory, constant_diagram, ident, is_ident
from .homology import homology
from .simplexcat import truncated_chain_category
from .sset import (
    SimplexRef, SimplicialSet, identity_map, product, product_map,
)
from .subdiv import epsilon_pullback, stable_below, _homology_entry


class NotLoopFreeError(CategoryError):
    pass


def _require_loop_free(I: FinCategory) -> None:
    if not I.is_loop_free():
        raise NotLoopFreeError("indexing category has loops; its nerve is infinite")


def hocolim_finite(I: FinCategory, F: Diagram, check: bool = False) -> SimplicialSet:
    """colim over the nerve of I of the cofibrant replacement of the first-object pullback."""
    _require_loop_free(I)
    E = epsilon_pullback(F, "first-object")
    Q, _ = cofibrant_replacement(E, check=check)
    return colim_over(Q).space


# -- simplicial replacement oracle ---------------------------------------------------------

def bk_oracle(I: FinCategory, F: Diagram) -> SimplicialSet:
    """Diagonal of the simplicial replacement: strings i_0 <- ... <- i_n with a simplex of F(i_n)."""
    _require_loop_free(I)
    longest = _longest(I)
    top = longest + max((X.dimension for X in F.values.values()), default=-1)

    def last(first, arrows):
        return I.src(arrows[-1]) if arrows else first

    def normal(first, arrows, y) -> SimplexRef:
        """EZ normal form of a diagonal simplex (string with identities, simplex of the last value)."""
        n = len(arrows)
        js_string = {k for k in range(n) if is_ident(arrows[k])}
        js = js_string & set(_degeneracy_positions(y))
        keep = [v for v in range(n + 1) if v - 1 not in js]
        kept_arrows = tuple(arrows[v - 1] for v in keep[1:])
        X = F[last(first, arrows)]
        y0 = X.apply(y, tuple(keep))
        return SimplexRef((first, kept_arrows, y0), ops.surjection_from_set(js, n))

    def face(first, arrows, y, k) -> SimplexRef:
        n = len(arrows)
        X = F[last(first, arrows)]
        if k == 0:
            nf = I.src(arrows[0]) if n else first
            return normal(nf, arrows[1:], X.face(y, 0))
        if k == n:
            return normal(first, arrows[:-1], F.map(arrows[-1])(X.face(y, n)))
        merged = I.compose(arrows[k - 1], arrows[k])
        return normal(first, arrows[: k - 1] + (merged,) + arrows[k + 1:], X.face(y, k))

    faces, dims = {}, {}
    strings = [[(o, ()) for o in I.objects]]
    for n in range(1, top + 1):
        strings.append([
            (first, arrows + (a,))
            for first, arrows in strings[-1]
            for a in [ident(last(first, arrows))] + I.in_arrows(last(first, arrows))
        ])
    for n in range(top + 1):
        for first, arrows in strings[n]:
            X = F[last(first, arrows)]
            idents = {k for k in range(n) if is_ident(arrows[k])}
            for y in X.simplices(n):
                if idents & set(_degeneracy_positions(y)):
                    continue
                root = (first, arrows, y)
                dims[root] = n
                faces[root] = tuple(face(first, arrows, y, k) for k in range(n + 1)) if n else ()
    return SimplicialSet(faces, dims, check=False)


def _degeneracy_positions(y: SimplexRef) -> list[int]:
    """j with y = s_j(something)."""
    return [j for j in range(len(y.eta) - 1) if y.eta[j] == y.eta[j + 1]]


def _longest(I: FinCategory) -> int:
    memo: dict = {}

    def depth(o):
        if o not in memo:
            memo[o] = max((1 + depth(I.src(a)) for a in I.in_arrows(o)), default=0)
        return memo[o]

    return max((depth(o) for o in I.objects), default=0)


# -- the two left tensors ---------------------------------------------------------------------

def tensor_l_cat(I: FinCategory, X: SimplicialSet) -> SimplicialSet:
    return hocolim_finite(I, constant_diagram(I, X))


def tensor_l_space(K: SimplicialSet, X: SimplicialSet, d: int = 2, m: int | None = None) -> tuple[SimplicialSet, dict]:
    """Truncated homotopy colimit of cX over the simplex category of K.

    The constant diagram is replaced cofibrantly over the chain category of
    K truncated at (d, m), and the colimit's homology is compared with depth
    d + 1 at the same cap and with the product K x X.  Only degrees below d
    are meaningful.
    """
    from .bounded import constant as const_diagram
    m = K.dimension if m is None else m

    def at(dd, mm):
        view = truncated_chain_category(K, dd, mm)
        Q, _ = cofibrant_replacement(const_diagram(view.space, X), check=False)
        return colim_over(Q).space

    here, there = at(d, m), at(d + 1, m)
    a, b = _homology_entry(here), _homology_entry(there)
    oracle = _homology_entry(product(K, X).space)
    report = {
        "depth": d, "cap": m, "here": a,
        "next": dict(depth=d + 1, cap=m, **b),
        "stable_below_depth": stable_below(a, b, d),
        "product_oracle": oracle,
        "matches_oracle_below_depth": stable_below(a, oracle, d),
    }
    return here, report


# -- products with a constant ----------------------------------------------------------------

def times_space(F: Diagram, X: SimplicialSet, left: bool = False) -> Diagram:
    """Objectwise F x X (or X x F when ``left``)."""
    I = F.category
    idX = identity_map(X)
    prods = {o: (product(X, F[o]) if left else product(F[o], X)) for o in I.objects}
    maps = {}
    for a, (s, t) in I.arrows.items():
        f = F.map(a)
        pair = (idX, f) if left else (f, idX)
        maps[a] = product_map(*pair, prods[s], prods[t])
    return Diagram(I, {o: p.space for o, p in prods.items()}, maps, check=False)


def monoidal_center_check(I: FinCategory, F: Diagram, X: SimplicialSet) -> dict:
    """hocolim(F x cX) against hocolim(F) x X, with X on either side."""
    _require_loop_free(I)
    H = hocolim_finite(I, F)
    rows = {}
    for side in ("right", "left"):
        lhs = hocolim_finite(I, times_space(F, X, left=(side == "left")))
        rhs = product(X, H).space if side == "left" else product(H, X).space
        a, b = homology(lhs), homology(rhs)
        rows[side] = {"hocolim_of_product": a.to_dict(), "product_of_hocolim": b.to_dict(), "equal": a.same_as(b)}
    return {"pass": all(r["equal"] for r in rows.values()), "orders": rows}
