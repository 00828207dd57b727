"""Seeded verification suites; every report records its seed."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from . import randgen as R
from .bounded import (
    DiagramMap, colim_map, cofibrant_replacement, cofinality_audit,
    from_empty, is_cofibration, is_weq, replace_map, times_constant,
)
from .homology import homology, induces_homology_iso
from .hocolim import bk_oracle, hocolim_finite, monoidal_center_check
from .simplexcat import Chain, base_change_check, truncated_chain_category
from .sset import (
    boundary, discrete, inclusion, nd, point, quotient, reduced_by_census,
    reduced_by_lifting, standard, subspace,
)
from . import subdiv as SD


def _base_change(rng):
    A, B, D = (R.random_complex(rng, 4, 6) for _ in range(3))
    g = R.random_map_into(rng, A, D)
    f = R.random_map_into(rng, B, D)
    G = R.random_bounded(rng, A)
    return base_change_check(f, g, G)["pass"]


def _invariance(rng):
    A = R.random_complex(rng, 4, 6)
    F = cofibrant_replacement(R.random_bounded(rng, A), check=False)[0]
    FK, proj = times_constant(F, R.random_contractible(rng))
    ok, _ = is_weq(proj)
    cof, _ = is_cofibration(from_empty(FK))
    if not (ok and cof):
        return False
    return induces_homology_iso(colim_map(proj))


def _oracle(rng):
    I, F = R.random_instance(rng)
    return homology(hocolim_finite(I, F)).same_as(homology(bk_oracle(I, F)))


def _reduced(rng):
    A, B = R.random_complex(rng, 4, 6), R.random_complex(rng, 4, 6)
    f = R.random_map_into(rng, A, B)
    return reduced_by_lifting(f)[0] == reduced_by_census(f)[0]


def _monoidal(rng):
    I, F = R.random_instance(rng)
    X = rng.choice([point(), standard(1), boundary(1), discrete([0, 1])])
    return monoidal_center_check(I, F, X)["pass"]


def _cofinality(rng):
    A = R.random_complex(rng, 4, 6)
    return cofinality_audit(R.random_bounded(rng, A))["pass"]


def _sm7(rng):
    A = rng.choice([point(), standard(1), boundary(1)])
    L = R.random_complex(rng, 3, 5)
    K = subspace(L, rng.sample(L.roots(), rng.randint(0, len(L.roots()))))
    Y = R.random_complex(rng, 3, 4)
    X = subspace(Y, rng.sample(Y.roots(), rng.randint(1, len(Y.roots()))))
    cX, cY = SD.constant_chain(A, X), SD.constant_chain(A, Y)
    iota = inclusion(X, Y)
    phi = replace_map(DiagramMap(cX, cY, lambda c: iota), SD.replace_chain(cX), SD.replace_chain(cY))
    view = truncated_chain_category(A, 2, max(A.dimension, 0))
    chains = [c for level in view.levels for c in level]
    sample = rng.sample(chains, min(6, len(chains)))
    return SD.sm7_half_check(inclusion(K, L), phi, sample)["pass"]


def tensor_axioms(spaces=None) -> dict:
    """Unit, associativity, coproduct and naturality on chains of depth <= 2, plus the copy count."""
    circle = quotient(standard(1), inclusion(boundary(1), standard(1))).space
    spaces = spaces or {"delta1": standard(1), "boundary2": boundary(2), "circle": circle}
    rows = {}
    ok = True
    for name, A in spaces.items():
        view = truncated_chain_category(A, 2, A.dimension)
        chains = [c for level in view.levels for c in level]
        diagrams = {
            "replaced-point": SD.replace_chain(SD.constant_chain(A, point())),
            "last-object": SD.epsilon_pullback(SD.discrete_levels(A, standard(1)), "last-object"),
        }
        for dname, F in diagrams.items():
            unit = all(SD.unit_map(F, c).is_iso() for c in chains)
            assoc = all(SD.associativity_map(standard(1), boundary(1), F, c).is_iso() for c in chains)
            copr = all(SD.coproduct_map(standard(1), point(), F, c).is_iso() for c in chains)
            rows[f"{name}/{dname}"] = {"chains": len(chains), "unit": unit, "associativity": assoc, "coproduct": copr}
            ok &= unit and assoc and copr
        G = SD.discrete_levels(A, standard(1))
        last = all(SD.last_object_map(standard(1), G, c).is_iso() for c in chains)
        rows[f"{name}/last-object-formula"] = last
        ok &= last
    q = quotient(standard(1), inclusion(boundary(1), standard(1)))
    f = q.cocone["A"]
    Gc = SD.replace_chain(SD.constant_chain(f.codomain, point()))
    chains = [c for level in truncated_chain_category(f.domain, 2, 1).levels for c in level]
    nat = all(SD.naturality_map(f, standard(1), Gc, c).is_iso() for c in chains)
    rows["naturality"] = nat
    ok &= nat
    neg = []
    for n in (1, 2, 3):
        A = standard(n)
        F = SD.replace_chain(SD.constant_chain(A, point()))
        r = SD.ex_negative(F, Chain(nd(tuple(range(n + 1)), n), ()))
        good = r["copies"] == n + 2 and r["iso"] and r["rank_h0"] == n + 2 != r["rank_h0_value"]
        neg.append(dict(r, **{"pass": good}))
        ok &= good
    rows["ex_negative"] = neg
    return {"pass": ok, "rows": rows}


SUITES = {
    "base-change": _base_change,
    "invariance": _invariance,
    "oracle-agree": _oracle,
    "reduced-equiv": _reduced,
    "monoidal": _monoidal,
    "cofinality-audit": _cofinality,
    "sm7-half": _sm7,
}
ALL_SUITES = sorted(list(SUITES) + ["tensor-axioms"])


def _run_trial(args):
    name, seed, i = args
    return bool(SUITES[name](R.trial_rng(seed, name, i)))


def threads() -> int:
    try:
        return max(1, int(os.environ.get("HOCOLAB_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(name: str, trials: int = 20, seed: int = 0) -> dict:
    if name == "tensor-axioms":
        rep = tensor_axioms()
        return {"pass": rep["pass"], "trials": 1, "seed": seed, "suite": name, "details": rep["rows"]}
    if name not in SUITES:
        raise KeyError(name)
    jobs = [(name, seed, i) for i in range(trials)]
    workers = min(threads(), max(trials, 1))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial, jobs))
    else:
        results = [_run_trial(j) for j in jobs]
    failures = [i for i, r in enumerate(results) if not r]
    return {"pass": not failures, "trials": trials, "seed": seed, "suite": name, "failures": failures}
