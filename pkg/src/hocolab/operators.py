"""Monotone maps between finite ordinals [n] = {0, ..., n}.

Internally an operator [n] -> [m] is a plain tuple of length n + 1 holding
its values; the target dimension travels separately when it matters.  The
:class:`Operator` wrapper is the public face used by the API and the tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

Op = tuple  # tuple[int, ...]


class OperatorError(ValueError):
    pass


def identity(n: int) -> Op:
    return tuple(range(n + 1))


def is_identity(op: Op) -> bool:
    return all(v == i for i, v in enumerate(op))


def compose(f: Op, g: Op) -> Op:
    """f o g (apply g first)."""
    return tuple(f[i] for i in g)


def is_monotone(values, target: int) -> bool:
    return all(0 <= v <= target for v in values) and all(
        a <= b for a, b in zip(values, values[1:])
    )


@lru_cache(maxsize=None)
def epi_mono(op: Op) -> tuple[Op, Op]:
    """Factor ``op = mono o epi``; returns ``(mono, epi)``."""
    mono = tuple(sorted(set(op)))
    pos = {v: i for i, v in enumerate(mono)}
    return mono, tuple(pos[v] for v in op)


def degeneracy_set(eta: Op) -> frozenset:
    """Indices j with eta(j) == eta(j+1); these are the s_j in eta's word."""
    return frozenset(j for j in range(len(eta) - 1) if eta[j] == eta[j + 1])


def word_of(eta: Op) -> tuple[int, ...]:
    return tuple(sorted(degeneracy_set(eta), reverse=True))


def surjection_of(word, p: int) -> Op:
    """Surjection [p] -> [p - len(word)] whose degeneracy word is ``word``."""
    js = set(word)
    out, k = [0], 0
    for i in range(1, p + 1):
        if (i - 1) not in js:
            k += 1
        out.append(k)
    return tuple(out)


def surjection_from_set(js, p: int) -> Op:
    return surjection_of(tuple(js), p)


def face_op(n: int, i: int) -> Op:
    """Coface d^i: [n-1] -> [n] skipping i."""
    return tuple(j if j < i else j + 1 for j in range(n))


def degen_op(n: int, i: int) -> Op:
    """Codegeneracy s^i: [n+1] -> [n] hitting i twice."""
    return tuple(j if j <= i else j - 1 for j in range(n + 2))


def section(eta: Op) -> Op:
    """The minimal section of a surjection."""
    seen = {}
    for i, v in enumerate(eta):
        seen.setdefault(v, i)
    return tuple(seen[v] for v in range(len(seen)))


@lru_cache(maxsize=None)
def monotone_maps(n: int, m: int) -> tuple[Op, ...]:
    return tuple(combinations_with_replacement(range(m + 1), n + 1))


@lru_cache(maxsize=None)
def surjections(n: int, m: int) -> tuple[Op, ...]:
    """All surjections [n] -> [m], indexed by their degeneracy sets."""
    if m > n or m < 0:
        return ()
    return tuple(
        surjection_from_set(js, n) for js in combinations(range(n), n - m)
    )


@lru_cache(maxsize=None)
def injections(n: int, m: int) -> tuple[Op, ...]:
    return tuple(combinations(range(m + 1), n + 1))


def factor_through(f: Op, eps: Op) -> Op:
    """The unique g with g o eps == f, assuming f is constant on eps-fibres."""
    g = {}
    for i, e in enumerate(eps):
        g.setdefault(e, f[i])
    return tuple(g[k] for k in range(len(g)))


@dataclass(frozen=True)
class Operator:
    """A monotone map [source_dim] -> [target_dim]."""

    source_dim: int
    target_dim: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.source_dim + 1:
            raise OperatorError("operator needs source_dim + 1 values")
        if not is_monotone(self.values, self.target_dim):
            raise OperatorError(f"not a monotone map into [{self.target_dim}]: {self.values}")

    @classmethod
    def of(cls, values, target_dim: int) -> "Operator":
        values = tuple(values)
        return cls(len(values) - 1, target_dim, values)

    @classmethod
    def face(cls, n: int, i: int) -> "Operator":
        return cls(n - 1, n, face_op(n, i))

    @classmethod
    def degeneracy(cls, n: int, i: int) -> "Operator":
        return cls(n + 1, n, degen_op(n, i))

    def __matmul__(self, other: "Operator") -> "Operator":
        # self @ other == self o other
        if other.target_dim != self.source_dim:
            raise OperatorError("operators are not composable")
        return Operator(other.source_dim, self.target_dim, compose(self.values, other.values))

    def factor(self) -> tuple["Operator", "Operator"]:
        """(mono, epi) with self == mono @ epi."""
        mono, epi = epi_mono(self.values)
        k = len(mono) - 1
        return Operator(k, self.target_dim, mono), Operator(self.source_dim, k, epi)

    @property
    def is_identity(self) -> bool:
        return self.source_dim == self.target_dim and is_identity(self.values)

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.target_dim + 1))
