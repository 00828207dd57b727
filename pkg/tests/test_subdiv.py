import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from hocolab import randgen as R
from hocolab.bounded import DiagramMap, identity_transformation, replace_map
from hocolab.catalog import circle
from hocolab.fincat import constant_diagram, cospan, set_diagram
from hocolab.homology import homology
from hocolab.simplexcat import Chain, truncated_chain_category
from hocolab.sset import (
    SimplicialMap, boundary, collapse_map, discrete, empty, inclusion, nd, point, standard,
    subspace,
)
from hocolab.subdiv import (
    FibrancyError, TruncationError, associativity_map, chain_colimit, chain_colimit_map,
    chain_diagram, colim_chains, constant_chain, coproduct_map, discrete_levels, epsilon_pullback,
    ex_negative, last_object_map, map_space, naturality_map, replace_chain, sm7_half_check,
    stable_below, tensor, tensor_on_map, unit_map, _homology_entry,
)

seeds = st.integers(0, 10_000)


def chains(A, d=2, m=None):
    view = truncated_chain_category(A, d, A.dimension if m is None else m)
    return [c for level in view.levels for c in level]


def replaced_point(A):
    return replace_chain(constant_chain(A, point()))


# -- pulling back along first and last objects -------------------------------------------------------

def test_first_object_pullback_of_a_constant_is_constant():
    X = boundary(2)
    E = epsilon_pullback(constant_diagram(cospan(), X), "first-object")
    for r in E.base.roots():
        assert E.value(r) == X
        for k in range(E.base.dim_of(r)):
            assert E.action(r, tuple(i for i in range(E.base.dim_of(r) + 1) if i != k)).is_iso()


def test_first_object_pullback_evaluates_at_the_first_object():
    I = cospan()
    F = set_diagram(I, {"0": {"a"}, "01": {"b1", "b2"}, "1": {"c"}},
                    {"a0": {"a": "b1"}, "a1": {"c": "b2"}})
    E = epsilon_pullback(F, "first-object")
    assert E.value(("01", ("a0",))) == F["01"]
    # the face forgetting 01 lands at 0 and acts by F(a0)
    assert E.action(("01", ("a0",)), (1,)) == F.map("a0")


def test_last_object_pullback_at_a_length_zero_chain():
    A = standard(1)
    G = discrete_levels(A, boundary(1))
    E = epsilon_pullback(G, "last-object")
    e = nd((0, 1), 1)
    assert E.value(Chain(e, ())) == G.value(e)
    assert E.value(Chain(e, ())).census() == (len(list(boundary(1).simplices(1))),)


# -- structure isomorphisms of the tensor ------------------------------------------------------------

@pytest.mark.parametrize("A", [standard(1), boundary(2)], ids=["D1", "dD2"])
def test_unit_is_an_isomorphism(A):
    F = replaced_point(A)
    assert all(unit_map(F, c).is_iso() for c in chains(A))


@given(seeds)
@settings(max_examples=10)
def test_unit_on_random_spaces(seed):
    rng = random.Random(seed)
    A = R.random_complex(rng, 3, 4)
    F = replace_chain(constant_chain(A, R.random_small(rng)))
    assert all(unit_map(F, c).is_iso() for c in chains(A, 1, 1))


def test_associativity_and_coproduct():
    A = standard(1)
    G = epsilon_pullback(discrete_levels(A, standard(1)), "last-object")
    for F in (replaced_point(A), G):
        for c in chains(A):
            assert associativity_map(standard(1), boundary(1), F, c).is_iso()
            assert coproduct_map(standard(1), point(), F, c).is_iso()


def test_naturality_along_the_circle_quotient():
    from hocolab.sset import quotient
    q = quotient(standard(1), inclusion(boundary(1), standard(1)))
    f = q.cocone["A"]
    G = replaced_point(f.codomain)
    assert all(naturality_map(f, standard(1), G, c).is_iso() for c in chains(f.domain, 2, 1))


def test_last_object_formula():
    A = circle()
    G = discrete_levels(A, standard(1))
    for c in chains(A):
        m = last_object_map(standard(2), G, c)
        assert m.is_iso()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_negative_example_counts(n):
    A = standard(n)
    rep = ex_negative(replaced_point(A), Chain(nd(tuple(range(n + 1)), n), ()))
    assert rep["copies"] == rep["expected"] == n + 2
    assert rep["iso"]
    assert rep["rank_h0"] == n + 2 != rep["rank_h0_value"] == 1


def test_tensor_outside_the_bounds_is_an_error():
    A = point()
    X = point()
    F = chain_diagram(A, lambda c: X, lambda c, th: None, bounds=(0, 0))
    deep = chains(A, 1, 1)[-1]
    with pytest.raises(TruncationError):
        tensor(standard(1), F, deep)


# -- colimits over truncated chain categories ---------------------------------------------------------

def test_constant_diagram_over_a_connected_base():
    X = boundary(2)
    for d in (1, 2):
        space, rep = colim_chains(constant_chain(standard(1), X), d, 1)
        assert homology(space).same_as(homology(X))
        assert space.census() == X.census()


def test_empty_base_gives_empty_colimit():
    space, rep = colim_chains(constant_chain(empty(), point()), 1, 1)
    assert space.is_empty()


def test_interval_tensor_over_a_point_is_connected():
    F = replaced_point(point())
    T = tensor_on_map(collapse_map(standard(1)), F).source
    space, rep = colim_chains(T, 1, 1, grow_cap=False)
    assert homology(space).betti[0] == 1
    assert rep["stable_below_depth"]


def test_equivalence_in_the_tensor_variable_after_the_colimit():
    F = replaced_point(point())
    g = tensor_on_map(collapse_map(standard(1)), F)
    d, m = 2, 1
    src, dst = chain_colimit(g.source, d, m), chain_colimit(g.target, d, m)
    chain_colimit_map(g, src, dst)
    a, b = _homology_entry(src.colim.space), _homology_entry(dst.colim.space)
    assert stable_below(a, b, d)


# -- half of SM7 ------------------------------------------------------------------------------------------

def test_sm7_with_empty_source_is_cofibrancy():
    A = standard(1)
    F = replaced_point(A)
    E = replace_chain(constant_chain(A, empty()))
    phi = replace_map(DiagramMap(constant_chain(A, empty()), constant_chain(A, point()),
                                 lambda c: SimplicialMap(empty(), point(), {})), E, F)
    f = SimplicialMap(empty(), standard(1), {})
    assert sm7_half_check(f, phi, chains(A, 1, 1))["pass"]


def test_sm7_for_boundary_inclusion_and_identity():
    A = standard(1)
    F = replaced_point(A)
    rep = sm7_half_check(inclusion(boundary(1), standard(1)), identity_transformation(F), chains(A, 2, 1))
    assert rep["pass"] and rep["chains"] == len(chains(A, 2, 1))


@given(seeds)
@settings(max_examples=10)
def test_sm7_on_random_pairs(seed):
    rng = random.Random(seed)
    A = rng.choice([point(), standard(1), boundary(1)])
    L = R.random_complex(rng, 3, 5)
    K = subspace(L, rng.sample(L.roots(), rng.randint(0, len(L.roots()))))
    Y = R.random_complex(rng, 3, 4)
    X = subspace(Y, rng.sample(Y.roots(), rng.randint(1, len(Y.roots()))))
    cX, cY = constant_chain(A, X), constant_chain(A, Y)
    iota = inclusion(X, Y)
    phi = replace_map(DiagramMap(cX, cY, lambda c: iota), replace_chain(cX), replace_chain(cY))
    pool = chains(A, 2)
    sample = rng.sample(pool, min(4, len(pool)))
    assert sm7_half_check(inclusion(K, L), phi, sample)["pass"]


def test_sm7_requires_a_monomorphism():
    F = replaced_point(point())
    with pytest.raises(ValueError):
        sm7_half_check(collapse_map(boundary(1)), identity_transformation(F), [])


# -- mapping spaces --------------------------------------------------------------------------------------

@pytest.mark.parametrize("k", [1, 2, 3])
def test_maps_from_a_point_into_k_points(k):
    ms = map_space(standard(0), discrete(range(k)))
    assert ms.pi0 == k and ms.kan


def test_maps_from_two_points_into_two_points():
    ms = map_space(boundary(1), discrete("ab"))
    assert ms.pi0 == 4 and ms.kan


def test_maps_from_a_triangle_into_three_points():
    start = time.time()
    ms = map_space(standard(2), discrete("abc"))
    assert ms.pi0 == 3 and ms.kan
    assert ms.report["stable_components"] == [True, True]
    assert time.time() - start < 60


def test_uncertified_target_is_rejected():
    with pytest.raises(FibrancyError):
        map_space(point(), standard(1))


def test_depth_zero_is_insufficient():
    with pytest.raises(TruncationError):
        map_space(point(), discrete("ab"), bounds=(0, 1, 2))


def test_resolving_space_must_be_contractible():
    with pytest.raises(ValueError):
        map_space(point(), discrete("ab"), A=boundary(1))
