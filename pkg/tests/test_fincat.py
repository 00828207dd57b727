import random

import pytest
from hypothesis import given, strategies as st

from hocolab.fincat import (
    CategoryError, Functor, comma_over, cospan, discrete_category, fcat_to_text, ident,
    identity_functor, inclusion_functor, kan_left, linear_order, monoid_category,
    natural_transformations, nerve, nerve_truncated, parse_fcat, set_diagram, span, terminal,
    to_terminal, weak_equivalence_cat,
)
from hocolab.homology import homology

A, B, C = {"a1", "a2"}, {"b1", "b2", "b3"}, {"c1"}
A_TO_B = {"a1": "b1", "a2": "b2"}
C_TO_B = {"c1": "b3"}


def sets_of(ext):
    return ext.labelled_sets()[0]


def extend_restricted(u, F):
    return kan_left(u, F.restrict(u))


def labelled(ext):
    """The extension as a set diagram whose elements keep their original names."""
    return set_diagram(ext.diagram.category, *ext.labelled_sets())


# -- comma categories ------------------------------------------------------------------------

def test_comma_of_identity_on_terminal():
    T = terminal()
    cat, _ = comma_over(identity_functor(T), "*")
    assert len(cat.objects) == 1 and not cat.arrows


def test_comma_of_inclusion_of_one_end():
    _, g = inclusion_functor(cospan(), ["1"])
    assert len(comma_over(g, "01").category.objects) == 1
    assert comma_over(g, "0").category.objects == []


def test_comma_rejects_unknown_object():
    _, g = inclusion_functor(cospan(), ["1"])
    with pytest.raises(CategoryError):
        comma_over(g, "nowhere")


# -- the Kan-extension tables ------------------------------------------------------------------

def test_arrow_category_tables():
    I = linear_order(1)
    F = set_diagram(I, {"0": A, "1": B}, {"0_1": A_TO_B})
    _, g = inclusion_functor(I, ["1"])
    _, f = inclusion_functor(I, ["0"])
    gg = extend_restricted(g, F)
    assert sets_of(gg) == {"0": frozenset(), "1": frozenset(B)}
    ff = extend_restricted(f, F)
    assert sets_of(ff) == {"0": frozenset(A), "1": frozenset(A)}
    assert sets_of(extend_restricted(f, labelled(gg))) == {"0": frozenset(), "1": frozenset()}
    assert sets_of(extend_restricted(g, labelled(ff))) == {"0": frozenset(), "1": frozenset(A)}


def test_cospan_tables():
    I = cospan()
    F = set_diagram(I, {"0": A, "01": B, "1": C}, {"a0": A_TO_B, "a1": C_TO_B})
    _, g = inclusion_functor(I, ["1"])
    _, f = inclusion_functor(I, ["0"])
    gg = extend_restricted(g, F)
    assert sets_of(gg) == {"0": frozenset(), "01": frozenset(C), "1": frozenset(C)}
    assert gg.labelled_sets()[1]["a1"] == {"c1": "c1"}
    ff = extend_restricted(f, F)
    assert sets_of(ff) == {"0": frozenset(A), "01": frozenset(A), "1": frozenset()}
    empty = {"0": frozenset(), "01": frozenset(), "1": frozenset()}
    assert sets_of(extend_restricted(f, labelled(gg))) == empty
    assert sets_of(extend_restricted(g, labelled(ff))) == empty


# -- properties of the extension ---------------------------------------------------------------

def random_set_diagram(rng, I):
    sets = {o: {f"{o}:{k}" for k in range(rng.randint(0, 2))} for o in I.objects}
    funcs = {}
    generators = [a for a in I.arrows if not any(h == a for h in I._comp.values())]
    for a in generators:
        s, t = I.arrows[a]
        if sets[s] and not sets[t]:
            sets[t] = {f"{t}:0"}
        funcs[a] = {x: rng.choice(sorted(sets[t])) for x in sets[s]}
    for (g, f), h in sorted(I._comp.items()):
        funcs[h] = {x: funcs[g][funcs[f][x]] for x in funcs[f]}
    return set_diagram(I, sets, funcs)


CASES = [
    (cospan(), ["1"]), (cospan(), ["0", "1"]), (linear_order(2), ["0", "2"]), (span(), ["01"]),
    (linear_order(2), ["1"]),
]


@given(st.integers(0, 10_000), st.sampled_from(range(len(CASES))))
def test_extension_is_left_adjoint_to_restriction(seed, case):
    rng = random.Random(seed)
    J, objs = CASES[case]
    I, u = inclusion_functor(J, objs)
    F = random_set_diagram(rng, I)
    G = random_set_diagram(rng, J)
    ext = kan_left(u, F)
    unit = {i: {x: ext.unit.components[i].assignment[x].root for x in F[i].roots(0)} for i in I.objects}
    left = natural_transformations(ext.diagram, G)
    right = natural_transformations(F, G.restrict(u))
    images = set()
    for psi in left:
        images.add(tuple(sorted(
            (i, x, psi[u.obj(i)][unit[i][x]]) for i in I.objects for x in unit[i]
        )))
    assert len(images) == len(left) == len(right)


def test_extension_along_identity_is_the_diagram():
    I = cospan()
    F = random_set_diagram(random.Random(3), I)
    ext = kan_left(identity_functor(I), F)
    assert all(ext.unit.components[o].is_iso() for o in I.objects)


@given(st.integers(0, 10_000))
def test_extension_along_a_composite(seed):
    rng = random.Random(seed)
    J = linear_order(2)
    M, w = inclusion_functor(J, ["0", "1"])
    I, v = inclusion_functor(M, ["1"])
    F = random_set_diagram(rng, I)
    direct = kan_left(v.then(w), F).diagram
    stepwise = kan_left(w, kan_left(v, F).diagram).diagram
    assert {o: direct[o].census() for o in J.objects} == {o: stepwise[o].census() for o in J.objects}


# -- nerves --------------------------------------------------------------------------------

def test_nerve_of_the_cospan():
    res = nerve_truncated(cospan(), 2)
    assert res.space.census() == (3, 2)
    assert res.loop_free and res.complete


def test_nerve_of_a_chain_is_a_simplex():
    res = nerve_truncated(linear_order(2), 3)
    assert res.space.census() == (3, 3, 1)
    assert homology(res.space).betti == (1, 0, 0)


def test_endomorphism_breaks_loop_freeness():
    M = monoid_category(["e"], {("e", "e"): "e"})
    assert not nerve_truncated(M, 2).loop_free


@pytest.mark.parametrize("I", [cospan(), span(), linear_order(3)], ids=["cospan", "span", "chain3"])
def test_nerve_stabilizes(I):
    from hocolab.fincat import longest_chain
    d = longest_chain(I)
    assert nerve_truncated(I, d).space.census() == nerve_truncated(I, d + 1).space.census()


# -- weak equivalences ---------------------------------------------------------------------

def test_weak_equivalence_verdicts():
    assert weak_equivalence_cat(identity_functor(span())) == "homology-equivalent"
    _, top = inclusion_functor(cospan(), ["01"])
    assert weak_equivalence_cat(top) == "homology-equivalent"
    assert weak_equivalence_cat(to_terminal(discrete_category(["x", "y"]))) == "not"
    M = monoid_category(["e"], {("e", "e"): "e"})
    assert weak_equivalence_cat(identity_functor(M)) == "inconclusive"


# -- validation and text -------------------------------------------------------------------

def test_missing_composite_is_rejected():
    with pytest.raises(CategoryError):
        from hocolab.fincat import FinCategory
        FinCategory(["0", "1", "2"], {"f": ("0", "1"), "g": ("1", "2")})


def test_functor_must_preserve_endpoints():
    with pytest.raises(CategoryError):
        Functor(linear_order(1), cospan(), {"0": "0", "1": "1"}, {"0_1": "a0"})


@pytest.mark.parametrize("I", [span(), linear_order(2), monoid_category(["e"], {("e", "e"): None})],
                         ids=["span", "chain2", "group"])
def test_fcat_round_trip(I):
    J = parse_fcat(fcat_to_text(I))
    assert J.objects == I.objects and J.arrows == I.arrows and J._comp == I._comp


def test_full_nerve_needs_loop_freeness():
    with pytest.raises(CategoryError):
        nerve(monoid_category(["e"], {("e", "e"): "e"}))
    assert ident("x") != "x"
