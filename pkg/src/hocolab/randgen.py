"""Seeded random instances for the verification suites."""
from __future__ import annotations

import random
from itertools import combinations

from .fincat import Diagram, FinCategory
from .sset import (
    SimplicialMap, SimplicialSet, boundary, horn, inclusion, point, quotient,
    random_map, standard, subspace, _subset_faces,
)


def trial_rng(seed: int, suite: str, trial: int) -> random.Random:
    """Independent, reproducible stream per (seed, suite, trial)."""
    return random.Random(f"{seed}:{suite}:{trial}")


def random_complex(rng: random.Random, max_vertices: int = 4, max_simplices: int = 6) -> SimplicialSet:
    """A random simplicial complex, optionally with a subcomplex collapsed."""
    nv = rng.randint(1, max_vertices)
    cells = {(v,) for v in range(nv)}
    candidates = [s for size in (2, 3, 4) for s in combinations(range(nv), size)]
    rng.shuffle(candidates)
    for s in candidates:
        closure = {t for size in range(1, len(s) + 1) for t in combinations(s, size)}
        if len(cells | closure) <= max_simplices and rng.random() < 0.6:
            cells |= closure
    A = SimplicialSet({s: _subset_faces(s) for s in cells}, {s: len(s) - 1 for s in cells}, check=False)
    if A.dimension >= 1 and rng.random() < 0.3:
        e = rng.choice(A.roots(1))
        # collapse the edge, or only glue its endpoints (which makes a loop)
        sub = subspace(A, [e] if rng.random() < 0.5 else [(e[0],), (e[1],)])
        A = quotient(A, inclusion(sub, A)).space
    return A


def random_contractible(rng: random.Random) -> SimplicialSet:
    return rng.choice([point(), standard(1), standard(2), horn(2, 1), horn(3, 1)])


def random_small(rng: random.Random) -> SimplicialSet:
    return rng.choice([point(), standard(1), boundary(1), standard(2), boundary(2), horn(2, 0)])


def random_map_into(rng: random.Random, A: SimplicialSet, B: SimplicialSet) -> SimplicialMap:
    f = random_map(A, B, rng)
    if f is None:
        raise RuntimeError("no map found")
    return f


def random_path_category(rng: random.Random, max_objects: int = 4, max_arrows: int = 8) -> tuple[FinCategory, dict]:
    """Free category on a random acyclic multigraph; arrows are paths of edges.

    Returns the category and the edge path of every arrow.
    """
    while True:
        k = rng.randint(min(2, max_objects), max_objects)
        edges = []
        for i in range(k):
            for j in range(i + 1, k):
                for _ in range(rng.choice([0, 1, 1, 2])):
                    edges.append((i, j))
        paths = {}
        frontier = [((e,), edges[e][0], edges[e][1]) for e in range(len(edges))]
        while frontier:
            p, s, t = frontier.pop()
            paths[p] = (s, t)
            for e, (s2, t2) in enumerate(edges):
                if s2 == t:
                    frontier.append((p + (e,), s, t2))
        if 1 <= len(paths) <= max_arrows or k == 1:
            break
    name = {p: ".".join(f"e{e}" for e in p) for p in paths}
    arrows = {name[p]: (str(s), str(t)) for p, (s, t) in paths.items()}
    comp = {}
    for f, (s, t) in paths.items():
        for g, (s2, t2) in paths.items():
            if s2 == t:
                comp[(name[g], name[f])] = name[f + g]
    C = FinCategory([str(i) for i in range(k)], arrows, comp)
    return C, {name[p]: p for p in paths}


def random_diagram(rng: random.Random, I: FinCategory, paths: dict, max_simplices: int = 8) -> Diagram:
    """Random values on objects, random maps on edges, composites along paths."""
    values = {o: random_complex(rng, 4, max_simplices) for o in I.objects}
    edge_maps: dict = {}
    maps = {}
    for a, p in paths.items():
        f = None
        for e in p:
            if e not in edge_maps:
                s, t = I.arrows[_edge_name(e)] if _edge_name(e) in I.arrows else (None, None)
                edge_maps[e] = random_map_into(rng, values[s], values[t])
            f = edge_maps[e] if f is None else edge_maps[e].compose(f)
        maps[a] = f
    return Diagram(I, values, maps)


def _edge_name(e: int) -> str:
    return f"e{e}"


def random_poset_instance(rng: random.Random, max_objects: int = 4, max_simplices: int = 8) -> tuple[FinCategory, Diagram]:
    """A random poset with a diagram of nested subspaces of one random space."""
    from .fincat import poset
    k = rng.randint(2, max_objects)
    below = {i: {i} for i in range(k)}
    for i in range(k):
        for j in range(i + 1, k):
            if rng.random() < 0.5:
                below[j] |= below[i]
    for j in range(k):  # transitive closure
        for i in list(below[j]):
            below[j] |= below[i]
    I = poset([str(i) for i in range(k)], lambda a, b: int(a) in below[int(b)])
    A = random_complex(rng, 4, max_simplices)
    gens = {i: rng.sample(A.roots(), rng.randint(1, min(2, len(A.roots())))) for i in range(k)}
    subs = {i: subspace(A, [r for p in below[i] for r in gens[p]]) for i in range(k)}
    values = {str(i): subs[i] for i in range(k)}
    maps = {a: inclusion(subs[int(s)], subs[int(t)]) for a, (s, t) in I.arrows.items()}
    return I, Diagram(I, values, maps)


def random_instance(rng: random.Random) -> tuple[FinCategory, Diagram]:
    """A random loop-free indexing category (free or poset) with a diagram."""
    if rng.random() < 0.4:
        return random_poset_instance(rng)
    I, paths = random_path_category(rng)
    return I, random_diagram(rng, I, paths)


def random_bounded(rng: random.Random, A: SimplicialSet):
    """A random bounded diagram over A: constant, replaced, extended or multiplied."""
    from .bounded import Extension, constant, cofibrant_replacement, times_constant
    X = random_small(rng)
    kind = rng.choice(["constant", "replaced", "extended", "product"])
    if kind == "constant":
        return constant(A, X)
    if kind == "replaced":
        return cofibrant_replacement(constant(A, X), check=False)[0]
    C = random_complex(rng, 3, 4)
    if kind == "extended":
        return Extension(random_map_into(rng, C, A), constant(C, X))
    return times_constant(cofibrant_replacement(constant(A, point()), check=False)[0], X)[0]
