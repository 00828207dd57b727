"""Named example spaces and categories, the source of the shipped data files."""
from __future__ import annotations

from pathlib import Path

from .fincat import fcat_to_text, linear_order, span
from .sset import (
    SimplicialMap, SimplicialSet, boundary, horn, inclusion, nd, pushout, quotient,
    standard, to_text,
)


def circle() -> SimplicialSet:
    """Delta[1] with its endpoints glued."""
    return quotient(standard(1), inclusion(boundary(1), standard(1))).space


def quotient_d2() -> SimplicialSet:
    """Delta[2] with its boundary collapsed."""
    return quotient(standard(2), inclusion(boundary(2), standard(2))).space


def face_map(n: int, vertices: tuple) -> SimplicialMap:
    """Delta[k] -> Delta[n] onto the face spanned by ``vertices``."""
    D = standard(len(vertices) - 1)
    return SimplicialMap(D, standard(n), {r: nd(tuple(vertices[i] for i in r), len(r) - 1) for r in D.roots()})


def ex_nonhoinv() -> SimplicialSet:
    """A contractible space whose simplex category is not contractible.

    Delta[3] with the face 023 collapsed to a point receives the horn
    Lambda^3_1; gluing a fresh Delta[3] along that horn fills it back in.
    """
    D3 = standard(3)
    collapsed = quotient(D3, face_map(3, (0, 2, 3)))
    H = inclusion(horn(3, 1), D3)
    return pushout(collapsed.cocone["A"].compose(H), H).space


SPACES = {
    **{f"delta{n}": (lambda n=n: standard(n)) for n in range(4)},
    **{f"boundary{n}": (lambda n=n: boundary(n)) for n in range(1, 4)},
    "horn_3_1": lambda: horn(3, 1),
    "circle": circle,
    "sphere2": lambda: boundary(3),
    "ex_nonhoinv": ex_nonhoinv,
    "quotient_d2": quotient_d2,
}

CATEGORIES = {"span": span, "chain2": lambda: linear_order(2)}


def _namer():
    used: set = set()
    counters: dict = {}

    def name(root, n):
        if isinstance(root, tuple) and all(isinstance(v, int) and 0 <= v < 10 for v in root):
            s = "v" + "".join(map(str, root))
            if s not in used:
                used.add(s)
                return s
        counters[n] = counters.get(n, -1) + 1
        s = f"x{n}_{counters[n]}"
        used.add(s)
        return s

    return name


def printable(A: SimplicialSet) -> SimplicialSet:
    """A copy with file-safe root names (vertex tuples become v012...)."""
    return A.relabeled(_namer())[0]


def write_data(directory) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, build in SPACES.items():
        p = out / f"{name}.sset"
        p.write_text(to_text(printable(build())))
        written.append(p)
    for name, build in CATEGORIES.items():
        p = out / f"{name}.fcat"
        p.write_text(fcat_to_text(build()))
        written.append(p)
    return written
