import pytest
from hypothesis import given, strategies as st

from hocolab import operators as ops
from hocolab.operators import Operator, OperatorError


def all_ops(limit=4):
    for n in range(limit + 1):
        for m in range(limit + 1):
            for op in ops.monotone_maps(n, m):
                yield n, m, op


def test_epi_mono_recomposes_and_is_unique():
    for n, m, op in all_ops():
        mono, epi = ops.epi_mono(op)
        assert ops.compose(mono, epi) == op
        k = len(mono) - 1
        # uniqueness: exactly one (injective, surjective) pair through [k] composes to op
        pairs = [(i, s) for i in ops.injections(k, m) for s in ops.surjections(n, k)
                 if ops.compose(i, s) == op]
        assert pairs == [(mono, epi)]


def test_operator_rejects_non_monotone():
    with pytest.raises(OperatorError):
        Operator(1, 1, (1, 0))
    with pytest.raises(OperatorError):
        Operator(1, 1, (0, 2))


def test_cosimplicial_identities():
    for n in range(1, 5):
        for j in range(n + 1):
            for i in range(j):
                # d^j d^i = d^i d^{j-1}
                assert ops.compose(ops.face_op(n + 1, j), ops.face_op(n, i)) == \
                    ops.compose(ops.face_op(n + 1, i), ops.face_op(n, j - 1))
        for i in range(n + 1):
            assert ops.compose(ops.degen_op(n, i), ops.face_op(n + 1, i)) == ops.identity(n)
            assert ops.compose(ops.degen_op(n, i), ops.face_op(n + 1, i + 1)) == ops.identity(n)


def test_word_and_surjection_are_inverse():
    for n in range(5):
        for m in range(n + 1):
            for s in ops.surjections(n, m):
                assert ops.surjection_of(ops.word_of(s), n) == s
                assert ops.compose(s, ops.section(s)) == ops.identity(m)


monotone = st.integers(0, 4).flatmap(
    lambda m: st.lists(st.integers(0, m), min_size=1, max_size=5).map(lambda v: (tuple(sorted(v)), m))
)


@given(monotone, st.data())
def test_composition_is_associative(fm, data):
    f, m = fm
    n = len(f) - 1
    g = tuple(sorted(data.draw(st.lists(st.integers(0, n), min_size=1, max_size=4))))
    p = len(g) - 1
    h = tuple(sorted(data.draw(st.lists(st.integers(0, p), min_size=1, max_size=4))))
    assert ops.compose(ops.compose(f, g), h) == ops.compose(f, ops.compose(g, h))
