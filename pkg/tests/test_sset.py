import random

import pytest
from hypothesis import given, strategies as st

from hocolab import operators as ops
from hocolab import randgen as R
from hocolab.catalog import circle, ex_nonhoinv, face_map, printable
from hocolab.homology import homology
from hocolab.simplexcat import induced, truncated_chain_category
from hocolab.sset import (
    CoherenceError, DanglingFaceError, DegeneracyWordError, DimensionMismatchError,
    SimplexRef, SimplicialMap, boundary, collapse_map, colimit_space, discrete,
    empty, horn, identity_map, inclusion, is_reduced, iter_maps, nd, pair_map, parse_sset,
    point, product, pullback_space, pushout, quotient, reduced_by_census, reduced_by_lifting,
    standard, to_text,
)

seeds = st.integers(0, 10_000)


# -- generators and validation -------------------------------------------------------

def test_generator_censuses():
    assert standard(2).census() == (3, 3, 1)
    assert boundary(2).census() == (3, 3)
    assert horn(2, 1).census() == (3, 2)
    assert (0, 2) not in horn(2, 1).roots(1)


def test_horn_needs_positive_dimension():
    with pytest.raises(ValueError):
        horn(0, 0)
    with pytest.raises(ValueError):
        horn(2, 3)


def test_validate_accepts_an_interval():
    X = parse_sset("simplex a 0\nsimplex b 0\nsimplex e 1\nfaces e = b a\n")
    assert X.census() == (2, 1)


def test_validate_rejects_a_dangling_face():
    with pytest.raises(DanglingFaceError):
        parse_sset("simplex e 1\nsimplex a 0\nfaces e = a z\n")


def test_validate_rejects_face_of_wrong_dimension():
    text = "simplex a 0\nsimplex f 1\nfaces f = a a\nsimplex e 1\nfaces e = f a\n"
    with pytest.raises(DimensionMismatchError) as err:
        parse_sset(text)
    assert err.value.simplex == "e"


def test_validate_rejects_increasing_degeneracy_word():
    text = "simplex a 0\nsimplex t 3\nfaces t = s0s1:a s1s0:a s1s0:a s1s0:a\n"
    with pytest.raises(DegeneracyWordError):
        parse_sset(text)


def test_validate_names_the_incoherent_simplex():
    # d0 d1 t must equal d0 d0 t; here d1 t = e (ending at b) but d0 t = f (starting at c)
    text = """simplex a 0
simplex b 0
simplex c 0
simplex e 1
simplex f 1
simplex g 1
faces e = b a
faces f = c b
faces g = c a
simplex t 2
faces t = e g f
"""
    with pytest.raises(CoherenceError) as err:
        parse_sset(text)
    assert err.value.simplex == "t"


# -- operators on simplices -------------------------------------------------------------

def rewrite_face_of_degeneracy(i: int, j: int):
    """d_i s_j by the simplicial identities: ('id',) or ('s', j', 'd', i')."""
    if i < j:
        return ("s", j - 1, "d", i)
    if i in (j, j + 1):
        return ("id",)
    return ("s", j, "d", i - 1)


def test_face_of_degenerate_vertex():
    v = nd((0,), 0)
    s0v = SimplexRef((0,), (0, 0))
    assert standard(0).face(s0v, 0) == v
    assert rewrite_face_of_degeneracy(0, 0) == ("id",)


def test_double_degeneracy_word():
    X = point()
    x = X.degeneracy(X.degeneracy(nd(0, 0), 0), 0)
    assert x.deg_word == (1, 0)


def test_face_of_degenerate_edge_follows_the_identities():
    D1 = standard(1)
    e = nd((0, 1), 1)
    s0e = D1.degeneracy(e, 0)
    assert rewrite_face_of_degeneracy(1, 0) == ("id",)
    assert D1.face(s0e, 1) == e
    assert rewrite_face_of_degeneracy(2, 0) == ("s", 0, "d", 1)
    assert D1.face(s0e, 2) == D1.degeneracy(D1.face(e, 1), 0)
    assert D1.face(s0e, 2) == SimplexRef((0,), (0, 0))


@given(seeds)
def test_normalization_is_canonical(seed):
    rng = random.Random(seed)
    A = R.random_complex(rng, 4, 8)
    p = rng.randint(0, 3)
    x = rng.choice(list(A.simplices(p)))
    q = rng.randint(0, 3)
    op1 = rng.choice(ops.monotone_maps(q, p))
    r = rng.randint(0, 3)
    op2 = rng.choice(ops.monotone_maps(r, q))
    assert A.apply(x, ops.compose(op1, op2)) == A.apply(A.apply(x, op1), op2)
    once = A.apply(x, op1)
    assert A.apply(once, ops.identity(q)) == once


# -- products ---------------------------------------------------------------------------

def shuffle_count(p: int, q: int) -> int:
    from math import comb
    return comb(p + q, p)


def test_product_censuses():
    assert product(standard(1), standard(1)).space.census() == (4, 5, 2)
    top = product(standard(1), standard(2)).space.census()[3]
    assert top == shuffle_count(1, 2) == 3


def test_product_with_a_point_is_the_space():
    A = circle()
    P = product(point(), A)
    assert P.proj_b.is_iso()


@pytest.mark.parametrize("T", [standard(1), boundary(2), horn(2, 1)], ids=["D1", "dD2", "horn21"])
def test_product_universal_property(T):
    for A, B in [(standard(1), boundary(1)), (circle(), standard(1))]:
        P = product(A, B)
        to_p = list(iter_maps(T, P.space))
        pairs = [(f, g) for f in iter_maps(T, A) for g in iter_maps(T, B)]
        assert len(to_p) == len(pairs)
        for f, g in pairs:
            h = pair_map(P, f, g)
            assert P.proj_a.compose(h) == f and P.proj_b.compose(h) == g


# -- colimits and pullbacks ---------------------------------------------------------------

def test_pushout_of_two_points_over_the_boundary():
    c = collapse_map(boundary(1))
    assert pushout(c, c).space.census() == (1,)


def test_example_space_is_validated_and_acyclic():
    A = ex_nonhoinv()
    A.validate()
    assert homology(A).betti == (1, 0, 0, 0)


def test_collapsing_a_face_of_the_three_simplex():
    q = quotient(standard(3), face_map(3, (0, 2, 3)))
    assert q.space.census() == (2, 3, 3, 1)


def test_pullback_examples():
    A = circle()
    assert pullback_space(identity_map(A), identity_map(A)).proj_a.is_iso()
    d2, d0 = face_map(2, (0, 1)), face_map(2, (1, 2))
    assert pullback_space(d2, d0).space.census() == (1,)
    e = SimplicialMap(empty(), point(), {})
    assert pullback_space(e, collapse_map(standard(1))).space.is_empty()


def test_empty_colimit_is_empty():
    assert colimit_space({}, []).space.is_empty()


@given(seeds)
def test_colimits_and_pullbacks_validate(seed):
    rng = random.Random(seed)
    A, B, D = (R.random_complex(rng, 4, 6) for _ in range(3))
    f, g = R.random_map_into(rng, A, D), R.random_map_into(rng, B, D)
    pushout_space = pushout(f, f).space
    pushout_space.validate()
    sq = pullback_space(f, g)
    sq.space.validate()
    assert sq.proj_a.compose  # maps exist
    assert all(f(sq.proj_a(x)) == g(sq.proj_b(x)) for x in map(sq.space.ref, sq.space.roots()))


# -- reduced maps ---------------------------------------------------------------------------

def test_identity_is_reduced():
    assert is_reduced(identity_map(standard(2)))[0]


def test_collapse_of_an_interval_is_not_reduced():
    ok, witness = is_reduced(collapse_map(standard(1)))
    assert not ok and witness == (0, 1)


def test_subdivision_of_a_map_is_reduced():
    f = collapse_map(standard(1))
    src = truncated_chain_category(standard(1), 2, 1)
    dst = truncated_chain_category(point(), 2, 1)
    assert is_reduced(induced(f).chain_map(src, dst))[0]


def test_lifting_agrees_with_census_on_random_maps():
    reduced = 0
    for i in range(100):
        rng = R.trial_rng(1, "sset-reduced", i)
        A, B = R.random_complex(rng, 4, 10), R.random_complex(rng, 4, 10)
        f = R.random_map_into(rng, A, B)
        a, b = reduced_by_lifting(f)[0], reduced_by_census(f)[0]
        assert a == b
        reduced += a
    assert 0 < reduced < 100


@given(seeds)
def test_pullback_of_a_reduced_map_is_reduced(seed):
    rng = random.Random(seed)
    D = R.random_complex(rng, 4, 6)
    sub = R.subspace(D, rng.sample(D.roots(), rng.randint(1, len(D.roots()))))
    f = inclusion(sub, D)
    B = R.random_complex(rng, 3, 5)
    g = R.random_map_into(rng, B, D)
    sq = pullback_space(f, g)
    assert is_reduced(sq.proj_b)[0]


# -- text format -----------------------------------------------------------------------------

@given(seeds)
def test_text_round_trip(seed):
    X = printable(R.random_complex(random.Random(seed), 4, 8))
    text = to_text(X)
    Y = parse_sset(text)
    assert Y == X and to_text(Y) == text


def test_discrete_spaces():
    X = discrete(["a", "b", "c"])
    assert X.census() == (3,)
    assert len(list(iter_maps(X, discrete([0, 1])))) == 8
