"""Finite simplicial sets in Eilenberg-Zilber normal form.

Every simplex is a :class:`SimplexRef` ``(root, eta)``: a nondegenerate root
together with a surjection ``eta: [p] -> [dim root]``, so that the simplex is
``root o eta``.  The degeneracy word ``s_{j1} ... s_{jk}`` (j1 > ... > jk) is
read off ``eta`` as the places where it repeats a value.  Degenerate simplices
are never stored.
"""
from __future__ import annotations

import random as _random
from collections import defaultdict
from typing import Callable, Hashable, Iterable, Iterator, NamedTuple

from . import operators as ops
from .operators import Op


class SimplicialSetError(ValueError):
    """Validation failure; ``simplex`` names the offending nondegenerate simplex."""

    kind = "invalid"

    def __init__(self, message: str, simplex=None):
        super().__init__(message)
        self.simplex = simplex


class DanglingFaceError(SimplicialSetError):
    kind = "dangling-face"


class DimensionMismatchError(SimplicialSetError):
    kind = "dimension-mismatch"


class DegeneracyWordError(SimplicialSetError):
    kind = "bad-degeneracy-word"


class CoherenceError(SimplicialSetError):
    kind = "face-coherence"


class SimplexRef(NamedTuple):
    root: Hashable
    eta: Op

    @property
    def dim(self) -> int:
        return len(self.eta) - 1

    @property
    def deg_word(self) -> tuple[int, ...]:
        return ops.word_of(self.eta)

    @property
    def is_nondegenerate(self) -> bool:
        return ops.is_identity(self.eta)

    @classmethod
    def from_word(cls, root, word, root_dim: int) -> "SimplexRef":
        word = tuple(word)
        if any(a <= b for a, b in zip(word, word[1:])):
            raise DegeneracyWordError(f"degeneracy word {list(word)} is not strictly decreasing", root)
        p = root_dim + len(word)
        if word and (word[0] > p - 1 or word[-1] < 0):
            raise DegeneracyWordError(f"degeneracy word {list(word)} out of range for {root!r}", root)
        return cls(root, ops.surjection_of(word, p))

    def then(self, eta: Op) -> "SimplexRef":
        """Precompose with a further surjection: root o self.eta o eta."""
        return SimplexRef(self.root, ops.compose(self.eta, eta))


def nd(root, dim: int) -> SimplexRef:
    return SimplexRef(root, ops.identity(dim))


class SimplicialBase:
    """Anything with nondegenerate roots, their dimensions and their faces.

    Subclasses supply ``dim_of`` and ``_root_face``; the normal-form calculus
    (``apply``, ``face``) is shared.  Infinite bases (subdivisions) live in
    :mod:`hocolab.simplexcat`.
    """

    def __init__(self):
        self._face_cache: dict = {}

    def dim_of(self, root) -> int:
        raise NotImplementedError

    def _root_face(self, root, mono: Op) -> SimplexRef:
        raise NotImplementedError

    def root_face(self, root, mono: Op) -> SimplexRef:
        """root o mono for an injective operator ``mono``."""
        key = (root, mono)
        hit = self._face_cache.get(key)
        if hit is None:
            if len(mono) == self.dim_of(root) + 1:
                hit = nd(root, len(mono) - 1)
            else:
                hit = self._root_face(root, mono)
            self._face_cache[key] = hit
        return hit

    def apply(self, ref: SimplexRef, op: Op) -> SimplexRef:
        """Normal form of ``ref o op``."""
        if op and max(op) > ref.dim:
            raise DimensionMismatchError(
                f"operator {op} does not land in a {ref.dim}-simplex", ref.root
            )
        mono, epi = ops.epi_mono(ops.compose(ref.eta, op))
        return self.root_face(ref.root, mono).then(epi)

    def face(self, ref: SimplexRef, i: int) -> SimplexRef:
        return self.apply(ref, ops.face_op(ref.dim, i))

    def degeneracy(self, ref: SimplexRef, i: int) -> SimplexRef:
        return self.apply(ref, ops.degen_op(ref.dim, i))

    def ref(self, root) -> SimplexRef:
        return nd(root, self.dim_of(root))


class SimplicialSet(SimplicialBase):
    """A finite simplicial set given by its nondegenerate simplices and faces.

    ``faces`` maps each root to the tuple ``(d_0 x, ..., d_n x)`` of
    :class:`SimplexRef` (empty for vertices).  Construction validates unless
    ``check=False``.
    """

    def __init__(self, faces: dict, dims: dict | None = None, check: bool = True):
        super().__init__()
        self._faces = dict(faces)
        if dims is None:
            dims = {r: max(len(f) - 1, 0) for r, f in self._faces.items()}
        self._dims = dict(dims)
        by_dim: dict[int, list] = defaultdict(list)
        for r in self._faces:
            by_dim[self._dims[r]].append(r)
        self._by_dim = [by_dim.get(n, []) for n in range(max(by_dim, default=-1) + 1)]
        if check:
            self.validate()

    # -- structure -------------------------------------------------------
    def dim_of(self, root) -> int:
        return self._dims[root]

    def __contains__(self, root) -> bool:
        return root in self._faces

    def _root_face(self, root, mono: Op) -> SimplexRef:
        n = self._dims[root]
        present = set(mono)
        i = next(k for k in range(n + 1) if k not in present)
        rest = tuple(v if v < i else v - 1 for v in mono)
        return self.apply(self._faces[root][i], rest)

    def faces_of(self, root) -> tuple[SimplexRef, ...]:
        return self._faces[root]

    @property
    def dimension(self) -> int:
        return len(self._by_dim) - 1

    def roots(self, n: int | None = None) -> list:
        if n is None:
            return list(self._faces)
        return list(self._by_dim[n]) if 0 <= n < len(self._by_dim) else []

    def census(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self._by_dim)

    def is_empty(self) -> bool:
        return not self._faces

    def simplices(self, n: int) -> Iterator[SimplexRef]:
        """All n-simplices, degenerate ones included."""
        for k in range(min(n, self.dimension) + 1):
            for eta in ops.surjections(n, k):
                for r in self._by_dim[k]:
                    yield SimplexRef(r, eta)

    def vertices(self) -> list:
        return self.roots(0)

    # -- validation ------------------------------------------------------
    def validate(self) -> "SimplicialSet":
        for r, fs in self._faces.items():
            n = self._dims[r]
            if n == 0:
                if fs:
                    raise DimensionMismatchError(f"vertex {r!r} has faces", r)
                continue
            if len(fs) != n + 1:
                raise DimensionMismatchError(
                    f"{n}-simplex {r!r} has {len(fs)} faces, expected {n + 1}", r
                )
            for f in fs:
                if f.root not in self._faces:
                    raise DanglingFaceError(f"face root {f.root!r} of {r!r} does not exist", r)
                if f.dim != n - 1:
                    raise DimensionMismatchError(f"face of {r!r} has dimension {f.dim}", r)
                if set(f.eta) != set(range(self._dims[f.root] + 1)):
                    raise DimensionMismatchError(
                        f"face {f.root!r} of {r!r} has dimension {self._dims[f.root]}, "
                        f"incompatible with its degeneracy word", r
                    )
        for n in range(2, self.dimension + 1):
            for r in self._by_dim[n]:
                fs = self._faces[r]
                for j in range(n + 1):
                    for i in range(j):
                        if self.face(fs[j], i) != self.face(fs[i], j - 1):
                            raise CoherenceError(
                                f"d_{i} d_{j} != d_{j - 1} d_{i} on {r!r}", r
                            )
        return self

    # -- comparison ------------------------------------------------------
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialSet)
            and self._dims == other._dims
            and self._faces == other._faces
        )

    def __hash__(self):
        return id(self)

    def __repr__(self) -> str:
        return f"SimplicialSet(census={self.census()})"

    def relabeled(self, namer: Callable | None = None) -> tuple["SimplicialSet", dict]:
        """Copy with new root names; returns (space, old -> new)."""
        if namer is None:
            counters: dict[int, int] = defaultdict(int)

            def namer(r, n):
                counters[n] += 1
                return f"x{n}_{counters[n] - 1}"

        names = {}
        for n in range(self.dimension + 1):
            for r in self._by_dim[n]:
                names[r] = namer(r, n)
        faces = {
            names[r]: tuple(SimplexRef(names[f.root], f.eta) for f in fs)
            for r, fs in self._faces.items()
        }
        return SimplicialSet(faces, {names[r]: d for r, d in self._dims.items()}, check=False), names


class SimplicialMap:
    """A map of simplicial sets, given on nondegenerate simplices."""

    def __init__(self, domain: SimplicialSet, codomain: SimplicialSet, assignment: dict, check: bool = True):
        self.domain = domain
        self.codomain = codomain
        self.assignment = dict(assignment)
        if check:
            self.validate()

    def __call__(self, ref: SimplexRef) -> SimplexRef:
        img = self.assignment[ref.root]
        if ops.is_identity(ref.eta):
            return img
        return img.then(ref.eta)

    def validate(self) -> "SimplicialMap":
        A, B = self.domain, self.codomain
        for r in A.roots():
            if r not in self.assignment:
                raise SimplicialSetError(f"map does not send {r!r}", r)
            img = self.assignment[r]
            if img.root not in B:
                raise DanglingFaceError(f"{r!r} sent to unknown simplex {img.root!r}", r)
            if img.dim != A.dim_of(r):
                raise DimensionMismatchError(f"{r!r} sent to a simplex of dimension {img.dim}", r)
            for i, f in enumerate(A.faces_of(r)):
                if self(f) != B.face(img, i):
                    raise CoherenceError(f"map does not commute with d_{i} on {r!r}", r)
        return self

    def compose(self, first: "SimplicialMap") -> "SimplicialMap":
        """self o first."""
        return SimplicialMap(
            first.domain, self.codomain,
            {r: self(img) for r, img in first.assignment.items()}, check=False,
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialMap) and self.assignment == other.assignment

    def __hash__(self):
        return id(self)

    def is_mono(self) -> bool:
        imgs = list(self.assignment.values())
        return all(i.is_nondegenerate for i in imgs) and len({i.root for i in imgs}) == len(imgs)

    def is_iso(self) -> bool:
        return self.is_mono() and len(self.assignment) == len(self.codomain.roots())

    def image_roots(self) -> set:
        return {i.root for i in self.assignment.values() if i.is_nondegenerate}

    def __repr__(self) -> str:
        return f"SimplicialMap({self.domain!r} -> {self.codomain!r})"


def identity_map(A: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(A, A, {r: A.ref(r) for r in A.roots()}, check=False)


def inverse_map(f: SimplicialMap) -> SimplicialMap:
    if not f.is_iso():
        raise ValueError("map is not an isomorphism")
    inv = {img.root: f.domain.ref(r) for r, img in f.assignment.items()}
    return SimplicialMap(f.codomain, f.domain, inv, check=False)


def empty() -> SimplicialSet:
    return SimplicialSet({}, {}, check=False)


def discrete(points: Iterable) -> SimplicialSet:
    pts = list(points)
    return SimplicialSet({p: () for p in pts}, {p: 0 for p in pts}, check=False)


def point() -> SimplicialSet:
    return discrete([0])


# -- generators ----------------------------------------------------------------

def _subset_faces(s: tuple) -> tuple[SimplexRef, ...]:
    if len(s) == 1:
        return ()
    return tuple(nd(s[:i] + s[i + 1:], len(s) - 2) for i in range(len(s)))


def generator(kind: str, n: int, k: int | None = None) -> SimplicialSet:
    """Standard simplex, its boundary, or the k-th horn; roots are vertex tuples."""
    from itertools import combinations

    if n < 0:
        raise ValueError("dimension must be non-negative")
    if kind == "horn" and (n < 1 or k is None or not 0 <= k <= n):
        raise ValueError(f"invalid horn arity: n={n}, k={k}")
    if kind not in ("standard", "boundary", "horn"):
        raise ValueError(f"unknown generator kind {kind!r}")
    top = tuple(range(n + 1))
    drop = set()
    if kind in ("boundary", "horn"):
        drop.add(top)
    if kind == "horn":
        drop.add(top[:k] + top[k + 1:])
    faces = {}
    for size in range(1, n + 2):
        for s in combinations(top, size):
            if s not in drop:
                faces[s] = _subset_faces(s)
    return SimplicialSet(faces, {s: len(s) - 1 for s in faces}, check=False)


def standard(n: int) -> SimplicialSet:
    return generator("standard", n)


def boundary(n: int) -> SimplicialSet:
    return generator("boundary", n)


def horn(n: int, k: int) -> SimplicialSet:
    return generator("horn", n, k)


def simplex_map(B: SimplicialSet, sigma: SimplexRef, source: SimplicialSet | None = None) -> SimplicialMap:
    """The map Delta[n] -> B classifying ``sigma`` (restricted to ``source`` if given)."""
    n = sigma.dim
    source = source if source is not None else standard(n)
    return SimplicialMap(
        source, B, {s: B.apply(sigma, tuple(s)) for s in source.roots()}, check=False
    )


def inclusion(sub: SimplicialSet, big: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(sub, big, {r: big.ref(r) for r in sub.roots()})


def subspace(A: SimplicialSet, roots: Iterable) -> SimplicialSet:
    """The smallest subspace containing ``roots``."""
    keep = set()
    stack = list(roots)
    while stack:
        r = stack.pop()
        if r in keep:
            continue
        keep.add(r)
        stack.extend(f.root for f in A.faces_of(r))
    return SimplicialSet(
        {r: A.faces_of(r) for r in A.roots() if r in keep},
        {r: A.dim_of(r) for r in A.roots() if r in keep}, check=False,
    )


# -- products and pullbacks ----------------------------------------------------

class ProductResult(NamedTuple):
    space: SimplicialSet
    proj_a: SimplicialMap
    proj_b: SimplicialMap


def normalize_pair(x: SimplexRef, y: SimplexRef) -> SimplexRef:
    """EZ normal form of the simplex (x, y) of a product."""
    common = ops.degeneracy_set(x.eta) & ops.degeneracy_set(y.eta)
    p = len(x.eta) - 1
    eps = ops.surjection_from_set(common, p)
    root = (
        SimplexRef(x.root, ops.factor_through(x.eta, eps)),
        SimplexRef(y.root, ops.factor_through(y.eta, eps)),
    )
    return SimplexRef(root, eps)


def _product_roots(A: SimplicialSet, B: SimplicialSet, keep=None) -> dict:
    dims = {}
    for a in A.roots():
        i = A.dim_of(a)
        for b in B.roots():
            j = B.dim_of(b)
            for p in range(max(i, j), i + j + 1):
                for eta in ops.surjections(p, i):
                    ja = ops.degeneracy_set(eta)
                    for zeta in ops.surjections(p, j):
                        if ja & ops.degeneracy_set(zeta):
                            continue
                        x, y = SimplexRef(a, eta), SimplexRef(b, zeta)
                        if keep is None or keep(x, y):
                            dims[(x, y)] = p
    return dims


def _pair_space(A, B, dims) -> SimplicialSet:
    faces = {}
    for root, p in dims.items():
        x, y = root
        if p == 0:
            faces[root] = ()
        else:
            faces[root] = tuple(
                normalize_pair(A.face(x, k), B.face(y, k)) for k in range(p + 1)
            )
    return SimplicialSet(faces, dims, check=False)


def _projections(P, A, B) -> tuple[SimplicialMap, SimplicialMap]:
    pa = SimplicialMap(P, A, {r: r[0] for r in P.roots()}, check=False)
    pb = SimplicialMap(P, B, {r: r[1] for r in P.roots()}, check=False)
    return pa, pb


def product(A: SimplicialSet, B: SimplicialSet) -> ProductResult:
    """Cartesian product; roots are pairs of simplices with no common degeneracy."""
    P = _pair_space(A, B, _product_roots(A, B))
    return ProductResult(P, *_projections(P, A, B))


def pullback_space(f: SimplicialMap, g: SimplicialMap) -> ProductResult:
    """Fibre product of f: A -> D and g: B -> D, as a subspace of A x B."""
    if f.codomain is not g.codomain and f.codomain != g.codomain:
        raise ValueError("pullback legs must share a codomain")
    A, B = f.domain, g.domain
    P = _pair_space(A, B, _product_roots(A, B, keep=lambda x, y: f(x) == g(y)))
    return ProductResult(P, *_projections(P, A, B))


def pair_map(into: ProductResult, f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """The map (f, g) into a product or pullback."""
    return SimplicialMap(
        f.domain, into.space,
        {r: normalize_pair(f.assignment[r], g.assignment[r]) for r in f.domain.roots()},
    )


def product_map(f: SimplicialMap, g: SimplicialMap, source: ProductResult, target: ProductResult) -> SimplicialMap:
    """f x g between chosen products."""
    return SimplicialMap(
        source.space, target.space,
        {r: normalize_pair(f(r[0]), g(r[1])) for r in source.space.roots()}, check=False,
    )


# -- colimits ------------------------------------------------------------------

class ColimitResult(NamedTuple):
    space: SimplicialSet
    cocone: dict  # object -> SimplicialMap into space
    rep: dict  # root of space -> (object, root) it was born from


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def colimit_space(objects: dict, arrows: Iterable) -> ColimitResult:
    """Colimit of a finite diagram of simplicial sets.

    ``objects`` maps names to spaces; ``arrows`` is a list of
    ``(source_name, target_name, SimplicialMap)``.  Generating arrows suffice.
    Identifications are found dimension by dimension with union-find; a class
    that meets a degenerate image becomes degenerate and takes its normal
    form from the already-finished lower dimensions.
    """
    arrows = list(arrows)
    out_by_src = defaultdict(list)
    for s, t, f in arrows:
        out_by_src[s].append((t, f))
    top = max((X.dimension for X in objects.values()), default=-1)
    ez: dict = {}
    faces, dims, rep = {}, {}, {}
    counter = 0
    for n in range(top + 1):
        nodes = [(name, r) for name, X in objects.items() for r in X.roots(n)]
        parent = {v: v for v in nodes}
        witness = {}
        for name, r in nodes:
            for t, f in out_by_src[name]:
                img = f.assignment[r]
                if ops.is_identity(img.eta):
                    a, b = _find(parent, (name, r)), _find(parent, (t, img.root))
                    if a != b:
                        parent[b] = a
                else:
                    witness[(name, r)] = ez[(t, img.root)].then(img.eta)
        classes: dict = {}
        for v in nodes:
            classes.setdefault(_find(parent, v), []).append(v)
        for members in classes.values():
            w = next((witness[m] for m in members if m in witness), None)
            if w is None:
                root = counter
                counter += 1
                name, r = members[0]
                ref = nd(root, n)
                dims[root] = n
                rep[root] = (name, r)
                faces[root] = tuple(
                    ez[(name, f.root)].then(f.eta) for f in objects[name].faces_of(r)
                )
                w = ref
            for m in members:
                ez[m] = w
    space = SimplicialSet(faces, dims, check=False)
    cocone = {
        name: SimplicialMap(X, space, {r: ez[(name, r)] for r in X.roots()}, check=False)
        for name, X in objects.items()
    }
    return ColimitResult(space, cocone, rep)


def map_from_colimit(colim: ColimitResult, components: dict, target: SimplicialSet,
                     arrows: Iterable | None = None) -> SimplicialMap:
    """The map out of a colimit induced by a cocone ``components``.

    With ``arrows`` given the cocone condition is checked first.
    """
    if arrows is not None:
        for s, t, f in arrows:
            if components[t].compose(f) != components[s]:
                raise ValueError(f"components do not form a cocone along {s!r} -> {t!r}")
    assignment = {}
    for root, (name, r) in colim.rep.items():
        assignment[root] = components[name].assignment[r]
    return SimplicialMap(colim.space, target, assignment, check=False)


def pushout(f: SimplicialMap, g: SimplicialMap) -> ColimitResult:
    """Pushout of B <- A -> C given f: A -> B, g: A -> C; objects 'A', 'B', 'C'."""
    return colimit_space(
        {"A": f.domain, "B": f.codomain, "C": g.codomain},
        [("A", "B", f), ("A", "C", g)],
    )


def coproduct(spaces: dict) -> ColimitResult:
    return colimit_space(spaces, [])


def quotient(A: SimplicialSet, sub_map: SimplicialMap) -> ColimitResult:
    """A / sub, collapsing the image of ``sub_map`` to a point."""
    S = sub_map.domain
    pt = point()
    collapse = SimplicialMap(S, pt, {r: SimplexRef(0, (0,) * (S.dim_of(r) + 1)) for r in S.roots()}, check=False)
    return colimit_space({"pt": pt, "sub": S, "A": A}, [("sub", "pt", collapse), ("sub", "A", sub_map)])


def collapse_map(A: SimplicialSet, target: SimplicialSet | None = None) -> SimplicialMap:
    target = target if target is not None else point()
    v = target.roots(0)[0]
    return SimplicialMap(A, target, {r: SimplexRef(v, (0,) * (A.dim_of(r) + 1)) for r in A.roots()}, check=False)


# -- reduced maps --------------------------------------------------------------

def reduced_by_census(f: SimplicialMap) -> tuple[bool, object]:
    for r in f.domain.roots():
        if not f.assignment[r].is_nondegenerate:
            return False, r
    return True, None


def reduced_by_lifting(f: SimplicialMap) -> tuple[bool, object]:
    """Lifting test against every square  Delta[n+1] -> A,  s_i: Delta[n+1] -> Delta[n],  Delta[n] -> B.

    A square is determined by an (n+1)-simplex x of A with f(x) in the image
    of s_i; a lift exists iff x itself is s_i of something.  Simplices above
    dim A are degeneracies of lower ones and add no new squares.
    """
    A = f.domain
    for p in range(1, A.dimension + 1):
        for x in A.simplices(p):
            fx = f(x)
            need = ops.degeneracy_set(fx.eta)
            have = ops.degeneracy_set(x.eta)
            if not need <= have:
                return False, x.root
    return True, None


def is_reduced(f: SimplicialMap) -> tuple[bool, object]:
    """Whether f preserves nondegeneracy; cross-checks both characterizations."""
    lift = reduced_by_lifting(f)
    census = reduced_by_census(f)
    if lift[0] != census[0]:
        raise AssertionError("lifting test and census disagree")
    return census


# -- enumerating maps -----------------------------------------------------------

def _candidates(f_partial: dict, A: SimplicialSet, B: SimplicialSet, r) -> list[SimplexRef]:
    n = A.dim_of(r)
    if n == 0:
        return [nd(v, 0) for v in B.roots(0)]
    want = [f_partial[fc.root].then(fc.eta) for fc in A.faces_of(r)]
    out = []
    for y in B.simplices(n):
        if all(B.face(y, i) == want[i] for i in range(n + 1)):
            out.append(y)
    return out


def iter_maps(A: SimplicialSet, B: SimplicialSet) -> Iterator[SimplicialMap]:
    order = [r for n in range(A.dimension + 1) for r in A.roots(n)]

    def go(i, partial):
        if i == len(order):
            yield SimplicialMap(A, B, dict(partial), check=False)
            return
        r = order[i]
        for y in _candidates(partial, A, B, r):
            partial[r] = y
            yield from go(i + 1, partial)
            del partial[r]

    yield from go(0, {})


def random_map(A: SimplicialSet, B: SimplicialSet, rng: _random.Random, tries: int = 200) -> SimplicialMap | None:
    """A random map found by randomized greedy search with restarts."""
    order = [r for n in range(A.dimension + 1) for r in A.roots(n)]
    for _ in range(tries):
        partial = {}
        for r in order:
            cands = _candidates(partial, A, B, r)
            if not cands:
                break
            partial[r] = rng.choice(cands)
        else:
            return SimplicialMap(A, B, partial, check=False)
    return None


# -- text format ---------------------------------------------------------------

def _format_ref(ref: SimplexRef) -> str:
    word = ref.deg_word
    if not word:
        return str(ref.root)
    return "".join(f"s{j}" for j in word) + ":" + str(ref.root)


def _parse_ref(tok: str, dims: dict, where) -> SimplexRef:
    if ":" in tok:
        word_s, root = tok.split(":", 1)
        if not word_s.startswith("s"):
            raise DegeneracyWordError(f"bad reference {tok!r}", where)
        try:
            word = tuple(int(x) for x in word_s[1:].split("s"))
        except ValueError:
            raise DegeneracyWordError(f"bad reference {tok!r}", where) from None
    else:
        root, word = tok, ()
    if root not in dims:
        raise DanglingFaceError(f"face root {root!r} of {where!r} does not exist", where)
    return SimplexRef.from_word(root, word, dims[root])


def _check_token(r) -> str:
    s = str(r)
    if not isinstance(r, str) or not s or any(c.isspace() for c in s) or any(c in s for c in ":#="):
        raise ValueError(f"root {r!r} is not a printable identifier; relabel first")
    return s


def to_text(A: SimplicialSet) -> str:
    lines = []
    for n in range(A.dimension + 1):
        for r in A.roots(n):
            lines.append(f"simplex {_check_token(r)} {n}")
    for n in range(1, A.dimension + 1):
        for r in A.roots(n):
            refs = " ".join(_format_ref(f) for f in A.faces_of(r))
            lines.append(f"faces {r} = {refs}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_sset(text: str) -> SimplicialSet:
    dims: dict = {}
    raw_faces: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "simplex" and len(parts) == 3:
            dims[parts[1]] = int(parts[2])
        elif parts[0] == "faces" and len(parts) >= 3 and parts[2] == "=":
            raw_faces[parts[1]] = parts[3:]
        else:
            raise SimplicialSetError(f"line {lineno}: cannot parse {line!r}")
    faces = {}
    for r, n in dims.items():
        toks = raw_faces.get(r, [])
        if n > 0 and r not in raw_faces:
            raise DimensionMismatchError(f"{n}-simplex {r!r} has no faces line", r)
        faces[r] = tuple(_parse_ref(t, dims, r) for t in toks)
    for r in raw_faces:
        if r not in dims:
            raise DanglingFaceError(f"faces given for undeclared simplex {r!r}", r)
    return SimplicialSet(faces, dims)


def load_sset(path) -> SimplicialSet:
    with open(path) as fh:
        return parse_sset(fh.read())


def map_to_text(f: SimplicialMap, name: str, src_file: str, dst_file: str) -> str:
    lines = [f"map {name} : {src_file} -> {dst_file}"]
    for r in f.domain.roots():
        lines.append(f"send {_check_token(r)} -> {_format_ref(f.assignment[r])}")
    return "\n".join(lines) + "\n"


def parse_smap(text: str, resolve: Callable[[str], SimplicialSet]) -> tuple[str, SimplicialMap]:
    """Parse a ``.smap`` file; ``resolve`` loads the named source/target spaces."""
    header = None
    sends = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "map" and len(parts) == 6 and parts[2] == ":" and parts[4] == "->":
            header = (parts[1], parts[3], parts[5])
        elif parts[0] == "send" and len(parts) == 4 and parts[2] == "->":
            sends[parts[1]] = parts[3]
        else:
            raise SimplicialSetError(f"line {lineno}: cannot parse {line!r}")
    if header is None:
        raise SimplicialSetError("missing 'map' header")
    name, src, dst = header
    A, B = resolve(src), resolve(dst)
    dims = {r: B.dim_of(r) for r in B.roots()}
    assignment = {r: _parse_ref(tok, dims, r) for r, tok in sends.items()}
    return name, SimplicialMap(A, B, assignment)
