"""Integral homology of finite simplicial sets.

Chains are normalized: the basis in degree n is the nondegenerate
n-simplices and a degenerate face contributes nothing.  Ranks and torsion come
from a hand-written Smith normal form over Python integers: a sparse pass
removes unit pivots, a dense pass finishes whatever is left.

Homology isomorphism is used throughout as a stand-in (proxy) for weak
equivalence; it cannot see the fundamental group.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .sset import SimplicialMap, SimplicialSet


class ChainComplexError(AssertionError):
    pass


@dataclass
class ChainComplex:
    """Free chain complex; ``boundaries[n]`` is the sparse matrix of d_n: C_n -> C_{n-1}.

    A sparse matrix is a list of columns, each a dict ``row -> coefficient``.
    """

    ranks: list[int]
    boundaries: list[list[dict]]
    bases: list[list] = field(default_factory=list)

    def check(self) -> "ChainComplex":
        for n in range(2, len(self.ranks)):
            inner, outer = self.boundaries[n - 1], self.boundaries[n]
            for j, col in enumerate(outer):
                acc: dict = {}
                for k, c in col.items():
                    for i, a in inner[k].items():
                        acc[i] = acc.get(i, 0) + a * c
                if any(acc.values()):
                    raise ChainComplexError(f"boundary of boundary is nonzero in degree {n}, column {j}")
        return self


def chain_complex(A: SimplicialSet, check: bool = True) -> ChainComplex:
    ranks, bounds, bases = [], [], []
    index = []
    for n in range(A.dimension + 1):
        basis = A.roots(n)
        bases.append(basis)
        ranks.append(len(basis))
        index.append({r: i for i, r in enumerate(basis)})
    for n in range(A.dimension + 1):
        cols = []
        for r in bases[n]:
            col: dict = {}
            if n > 0:
                for i, f in enumerate(A.faces_of(r)):
                    if f.is_nondegenerate:
                        k = index[n - 1][f.root]
                        col[k] = col.get(k, 0) + (-1 if i % 2 else 1)
                col = {k: v for k, v in col.items() if v}
            cols.append(col)
        bounds.append(cols)
    cc = ChainComplex(ranks, bounds, bases)
    return cc.check() if check else cc


# -- Smith normal form ---------------------------------------------------------

def _sparse_unit_phase(cols: list[dict]) -> tuple[int, list[dict]]:
    """Eliminate unit pivots; returns (#units removed, remaining columns)."""
    cols = [dict(c) for c in cols if c]
    rows: dict = {}
    for j, c in enumerate(cols):
        for i in c:
            rows.setdefault(i, set()).add(j)
    alive = set(range(len(cols)))
    units = 0
    progress = True
    while progress:
        progress = False
        for j in sorted(alive):
            if j not in alive:
                continue
            col = cols[j]
            piv = next((i for i, v in col.items() if v in (1, -1)), None)
            if piv is None:
                continue
            u = col[piv]
            for k in list(rows.get(piv, ())):
                if k == j or k not in alive:
                    continue
                other = cols[k]
                factor = other[piv] * u
                for i, v in col.items():
                    nv = other.get(i, 0) - factor * v
                    if nv:
                        if i not in other:
                            rows.setdefault(i, set()).add(k)
                        other[i] = nv
                    else:
                        other.pop(i, None)
                        rows[i].discard(k)
                if not other:
                    alive.discard(k)
            for i in col:
                rows[i].discard(j)
            alive.discard(j)
            rows.pop(piv, None)
            # row piv is gone; strip it from any lingering column
            units += 1
            progress = True
    rest = []
    for j in sorted(alive):
        c = {i: v for i, v in cols[j].items() if i in rows and v}
        if c:
            rest.append(c)
    return units, rest


def _dense_invariants(cols: list[dict]) -> list[int]:
    if not cols:
        return []
    row_ids = sorted({i for c in cols for i in c})
    pos = {r: k for k, r in enumerate(row_ids)}
    m, n = len(row_ids), len(cols)
    M = [[0] * n for _ in range(m)]
    for j, c in enumerate(cols):
        for i, v in c.items():
            M[pos[i]][j] = v
    diag = []
    t = 0
    while t < min(m, n):
        # pivot of smallest magnitude in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = M[i][j]
                if v and (best is None or abs(v) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        M[t], M[i] = M[i], M[t]
        for row in M:
            row[t], row[j] = row[j], row[t]
        while True:
            p = M[t][t]
            changed = False
            for i in range(t + 1, m):
                q = M[i][t] // p
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                if M[i][t]:
                    changed = True
            for j in range(t + 1, n):
                q = M[t][j] // p
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                if M[t][j]:
                    changed = True
            if not changed:
                # make p divide the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                M[t] = [a + b for a, b in zip(M[t], M[bad[0]])]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            cand = [(abs(M[i][t]), i, t) for i in range(t, m) if M[i][t]]
            cand += [(abs(M[t][j]), t, j) for j in range(t, n) if M[t][j]]
            _, i, j = min(cand)
            M[t], M[i] = M[i], M[t]
            for row in M:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(M[t][t]))
        t += 1
    return diag


def smith_invariants(cols: list[dict]) -> list[int]:
    """Nonzero invariant factors of a sparse integer matrix, in divisibility order."""
    units, rest = _sparse_unit_phase(cols)
    tail = _dense_invariants(rest)
    return sorted([1] * units + tail)


def dense_to_sparse(matrix: list[list[int]]) -> list[dict]:
    if not matrix:
        return []
    return [
        {i: matrix[i][j] for i in range(len(matrix)) if matrix[i][j]}
        for j in range(len(matrix[0]))
    ]


# -- homology ------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyResult:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @property
    def euler(self) -> int:
        return sum((-1) ** n * b for n, b in enumerate(self.betti))

    def padded(self, length: int) -> "HomologyResult":
        k = length - len(self.betti)
        if k <= 0:
            return self
        return HomologyResult(self.betti + (0,) * k, self.torsion + ((),) * k)

    def same_as(self, other: "HomologyResult") -> bool:
        n = max(len(self.betti), len(other.betti))
        a, b = self.padded(n), other.padded(n)
        return a == b


def complex_homology(cc: ChainComplex) -> HomologyResult:
    top = len(cc.ranks)
    invariants = [smith_invariants(cc.boundaries[n]) if n > 0 else [] for n in range(top)]
    invariants.append([])
    betti, torsion = [], []
    for n in range(top):
        b = cc.ranks[n] - len(invariants[n]) - len(invariants[n + 1])
        betti.append(b)
        torsion.append(tuple(d for d in invariants[n + 1] if d > 1))
    res = HomologyResult(tuple(betti), tuple(torsion))
    chi = sum((-1) ** n * r for n, r in enumerate(cc.ranks))
    if chi != res.euler:
        raise ChainComplexError("Euler characteristic of chains and homology disagree")
    return res


def homology(A: SimplicialSet) -> HomologyResult:
    return complex_homology(chain_complex(A))


def components(A: SimplicialSet) -> dict:
    """Vertex -> representative vertex of its path component."""
    parent = {v: v for v in A.roots(0)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in A.roots(1):
        d0, d1 = A.faces_of(e)
        a, b = find(d0.root), find(d1.root)
        if a != b:
            parent[a] = b
    return {v: find(v) for v in parent}


def pi0_bijective(f: SimplicialMap) -> bool:
    ca, cb = components(f.domain), components(f.codomain)
    image = {}
    for v, rep in ca.items():
        image.setdefault(rep, set()).add(cb[f.assignment[v].root])
    if any(len(s) != 1 for s in image.values()):
        raise ChainComplexError("map does not respect components")
    hit = [next(iter(s)) for s in image.values()]
    return len(set(hit)) == len(hit) == len(set(cb.values()))


def mapping_cone(f: SimplicialMap) -> ChainComplex:
    """Cone of the normalized chain map; acyclic iff f is a homology isomorphism."""
    ca, cb = chain_complex(f.domain), chain_complex(f.codomain)
    idx_b = [{r: i for i, r in enumerate(basis)} for basis in cb.bases]
    top = max(len(ca.ranks), len(cb.ranks)) + 1

    def rank(cc, n):
        return cc.ranks[n] if 0 <= n < len(cc.ranks) else 0

    ranks = [rank(ca, n - 1) + rank(cb, n) for n in range(top)]
    bounds = []
    for n in range(top):
        cols = []
        if n == 0:
            bounds.append([{} for _ in range(ranks[0])])
            continue
        off = rank(ca, n - 2)  # B_{n-1} rows come after A_{n-2} rows
        for j, a in enumerate(ca.bases[n - 1] if n - 1 < len(ca.bases) else []):
            col = {}
            if n - 1 > 0:
                for i, v in ca.boundaries[n - 1][j].items():
                    col[i] = -v
            img = f.assignment[a]
            if img.is_nondegenerate:
                k = off + idx_b[n - 1][img.root]
                col[k] = col.get(k, 0) + 1
            cols.append({k: v for k, v in col.items() if v})
        for j in range(rank(cb, n)):
            cols.append({off + i: v for i, v in cb.boundaries[n][j].items()})
        bounds.append(cols)
    return ChainComplex(ranks, bounds).check()


def induces_homology_iso(f: SimplicialMap) -> bool:
    """Homology-isomorphism proxy for weak equivalence: pi_0 bijection plus acyclic cone."""
    if not pi0_bijective(f):
        return False
    cone = complex_homology(mapping_cone(f))
    return not any(cone.betti) and not any(cone.torsion)
