import random

import pytest
from hypothesis import given, settings, strategies as st

from hocolab import randgen as R
from hocolab.catalog import circle
from hocolab.fincat import (
    Diagram, FinCategory, constant_diagram, discrete_category, linear_order, monoid_category,
    span, terminal,
)
from hocolab.hocolim import (
    NotLoopFreeError, bk_oracle, hocolim_finite, monoidal_center_check, tensor_l_cat,
    tensor_l_space,
)
from hocolab.homology import homology
from hocolab.sset import boundary, collapse_map, discrete, inclusion, point, standard


def span_of(X, Y, Z, f, g):
    I = span()
    return I, Diagram(I, {"01": X, "0": Y, "1": Z}, {"p0": f, "p1": g})


def agree(I, F):
    return homology(hocolim_finite(I, F)).same_as(homology(bk_oracle(I, F)))


def test_terminal_index_gives_the_value():
    I = terminal()
    X = boundary(2)
    F = constant_diagram(I, X)
    assert homology(hocolim_finite(I, F)).same_as(homology(X))
    assert agree(I, F)


def test_span_of_points_over_two_points_is_a_circle():
    S0 = boundary(1)
    I, F = span_of(S0, point(), point(), collapse_map(S0), collapse_map(S0))
    assert homology(hocolim_finite(I, F)).betti == (1, 1)
    assert agree(I, F)


def test_span_over_two_cones_is_the_suspension():
    X = circle()
    I, F = span_of(X, point(), point(), collapse_map(X), collapse_map(X))
    h = homology(hocolim_finite(I, F))
    assert h.same_as(homology(boundary(3))) and h.betti[:3] == (1, 0, 1)
    assert agree(I, F)


def test_span_with_an_inclusion_is_the_pushout():
    S0 = boundary(1)
    I, F = span_of(S0, standard(1), point(), inclusion(S0, standard(1)), collapse_map(S0))
    assert homology(hocolim_finite(I, F)).same_as(homology(circle()))


def test_left_tensor_with_contractible_nerves():
    X = boundary(2)
    for I in (terminal(), span(), linear_order(2)):
        assert homology(tensor_l_cat(I, X)).same_as(homology(X))


def test_left_tensor_with_a_discrete_category():
    assert homology(tensor_l_cat(discrete_category(["a", "b"]), point())).betti == (2,)


def test_space_tensor_with_a_point_and_with_two_points():
    X = boundary(2)
    here, rep = tensor_l_space(point(), X, 2)
    assert homology(here).same_as(homology(X))
    assert rep["stable_below_depth"] and rep["matches_oracle_below_depth"]
    here, rep = tensor_l_space(boundary(1), boundary(1), 1)
    assert homology(here).betti[0] == 4
    assert rep["matches_oracle_below_depth"]


def test_space_tensor_with_the_circle():
    here, rep = tensor_l_space(circle(), point(), 2)
    assert homology(here).betti[:2] == (1, 1)
    assert rep["stable_below_depth"]


def test_monoidal_center_for_a_span():
    S0 = boundary(1)
    I, F = span_of(S0, point(), point(), collapse_map(S0), collapse_map(S0))
    for X in (point(), standard(1), boundary(1)):
        assert monoidal_center_check(I, F, X)["pass"]


def test_loops_are_rejected():
    M = monoid_category(["t"], {("t", "t"): None})
    with pytest.raises(NotLoopFreeError):
        hocolim_finite(M, constant_diagram(M, point()))
    with pytest.raises(NotLoopFreeError):
        bk_oracle(M, constant_diagram(M, point()))


@given(st.integers(0, 10_000))
@settings(max_examples=15)
def test_agrees_with_the_simplicial_replacement(seed):
    I, F = R.random_instance(random.Random(seed))
    assert agree(I, F)


def test_objectwise_equivalence_is_preserved():
    I = linear_order(1)
    F = Diagram(I, {"0": boundary(1), "1": standard(1)}, {"0_1": inclusion(boundary(1), standard(1))})
    G = Diagram(I, {"0": boundary(1), "1": point()}, {"0_1": collapse_map(boundary(1))})
    assert homology(hocolim_finite(I, F)).same_as(homology(hocolim_finite(I, G)))
    assert homology(hocolim_finite(I, F)).same_as(homology(point()))


def test_discrete_values_over_a_free_arrow():
    I = FinCategory(["a", "b"], {"f": ("a", "b"), "g": ("a", "b")})
    F = constant_diagram(I, point())
    assert homology(hocolim_finite(I, F)).betti == (1, 1)
    assert agree(I, F)
    F2 = constant_diagram(I, discrete("xy"))
    assert homology(hocolim_finite(I, F2)).betti == (2, 2)
