"""Command-line interface; every command prints one JSON report."""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .bounded import DiagramError, NotBoundedError, constant, cofinality_audit, ocolim
from .fincat import CategoryError, load_fcat
from .homology import homology
from .sset import (
    SimplicialSetError, load_sset, parse_smap, product, pullback_space, pushout,
    reduced_by_census, reduced_by_lifting, point, to_text,
)
from .subdiv import FibrancyError, TruncationError, map_space

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_TRUNCATION, EXIT_SUITE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def data_dir() -> Path:
    return Path(str(resources.files("hocolab") / "data"))


def resolve(path: str, near: Path | None = None) -> Path:
    """The path itself, else relative to ``near``, else the shipped file with that basename."""
    p = Path(path)
    if p.exists():
        return p
    if near is not None and (near / path).exists():
        return near / path
    shipped = data_dir() / p.name
    if shipped.exists():
        return shipped
    raise FileNotFoundError(f"{path} not found")


def _space(path: str):
    return load_sset(resolve(path))


def _map(path: str):
    p = resolve(path)
    return parse_smap(p.read_text(), lambda name: load_sset(resolve(name, p.parent)))[1]


def _homology(X) -> dict:
    return {"census": list(X.census()), **homology(X).to_dict()}


# -- commands ---------------------------------------------------------------------

def cmd_info(a) -> tuple[dict, int]:
    p = resolve(a.file)
    if p.suffix == ".fcat":
        C = load_fcat(p)
        loop_free = C.is_loop_free()
        return {"kind": "fcat", "objects": len(C.objects), "arrows": len(C.arrows), "loop_free": loop_free}, EXIT_OK
    if p.suffix == ".smap":
        f = _map(a.file)
        return {"kind": "smap", "domain": list(f.domain.census()), "codomain": list(f.codomain.census()),
                "mono": f.is_mono()}, EXIT_OK
    X = load_sset(p)
    return {"kind": "sset", "census": list(X.census()), "dimension": X.dimension, "valid": True}, EXIT_OK


def cmd_hom(a):
    return homology(_space(a.file)).to_dict(), EXIT_OK


def _maybe_write(X, out):
    if out:
        from .catalog import printable
        Path(out).write_text(to_text(printable(X)))


def cmd_product(a):
    X = product(_space(a.first), _space(a.second)).space
    _maybe_write(X, a.out)
    return _homology(X), EXIT_OK


def cmd_pushout(a):
    X = pushout(_map(a.first), _map(a.second)).space
    _maybe_write(X, a.out)
    return _homology(X), EXIT_OK


def cmd_pullback(a):
    X = pullback_space(_map(a.first), _map(a.second)).space
    _maybe_write(X, a.out)
    return _homology(X), EXIT_OK


def cmd_reduced(a):
    f = _map(a.map)
    by_lifting, by_census = reduced_by_lifting(f)[0], reduced_by_census(f)[0]
    rep = {"reduced": by_census, "lifting": by_lifting, "census": by_census, "agree": by_lifting == by_census}
    return rep, EXIT_OK if rep["agree"] else EXIT_VALIDATION


def cmd_ocolim(a):
    A = _space(a.file)
    if a.diagram:
        from .diagram_files import load_bounded
        F = load_bounded(A, resolve(a.diagram))
    else:
        F = constant(A, point() if a.constant == "pt" else _space(a.constant))
    res = ocolim(F)
    rep = _homology(res["space"])
    if a.audit:
        audit = cofinality_audit(res["replacement"])
        rep["audit"] = {"pass": audit["pass"]}
        if not audit["pass"]:
            return rep, EXIT_VALIDATION
    return rep, EXIT_OK


def cmd_hocolim(a):
    from .diagram_files import load_diagram
    from .hocolim import bk_oracle, hocolim_finite
    I = load_fcat(resolve(a.fcat))
    F = load_diagram(I, resolve(a.diagram))
    rep = _homology(hocolim_finite(I, F))
    if a.oracle:
        o = homology(bk_oracle(I, F))
        rep["oracle"] = o.to_dict()
        rep["agree"] = homology(hocolim_finite(I, F)).same_as(o)
        if not rep["agree"]:
            return rep, EXIT_SUITE
    return rep, EXIT_OK


def cmd_tensorl(a):
    from .hocolim import tensor_l_cat, tensor_l_space
    X = _space(a.space)
    k = resolve(a.index)
    if k.suffix == ".fcat":
        return _homology(tensor_l_cat(load_fcat(k), X)), EXIT_OK
    _, rep = tensor_l_space(load_sset(k), X, a.depth, a.cap)
    return rep, EXIT_OK if rep["stable_below_depth"] else EXIT_TRUNCATION


def cmd_map(a):
    X, Y = _space(a.source), _space(a.target)
    ms = map_space(X, Y, bounds=(a.depth, a.cap, a.levels), kan_certified=a.kan_certified)
    rep = dict(ms.report)
    if Y.dimension <= 0:
        comps = len(homology(X).betti) and homology(X).betti[0]
        rep["set_maps_pi0_to_target"] = len(Y.roots(0)) ** comps
    return rep, EXIT_OK


def cmd_verify(a):
    from .suites import ALL_SUITES, run_suite
    names = ALL_SUITES if a.suite == "all" else [a.suite]
    reports = [run_suite(n, a.trials, a.seed) for n in names]
    rep = reports[0] if len(reports) == 1 else {
        "pass": all(r["pass"] for r in reports), "trials": a.trials, "seed": a.seed,
        "suites": {r["suite"]: r for r in reports},
    }
    return rep, EXIT_OK if rep["pass"] else EXIT_SUITE


def build_parser() -> argparse.ArgumentParser:
    from .suites import ALL_SUITES
    p = _Parser(prog="hocolab", description="Homotopy colimits of finite simplicial sets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("info", help="validate a .sset/.fcat/.smap file and print its census")
    s.add_argument("file")
    s.set_defaults(run=cmd_info)
    s = sub.add_parser("hom", help="integral homology")
    s.add_argument("file")
    s.set_defaults(run=cmd_hom)
    for name, run, what in [("product", cmd_product, ".sset"), ("pushout", cmd_pushout, ".smap"),
                            ("pullback", cmd_pullback, ".smap")]:
        s = sub.add_parser(name, help=f"{name} of two {what} inputs")
        s.add_argument("first")
        s.add_argument("second")
        s.add_argument("--out", help="write the result as .sset")
        s.set_defaults(run=run)
    s = sub.add_parser("reduced", help="lifting and census verdicts for a map")
    s.add_argument("map")
    s.set_defaults(run=cmd_reduced)
    s = sub.add_parser("ocolim", help="colimit of the cofibrant replacement over a simplex category")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--constant", default="pt", help="'pt' or a .sset file")
    g.add_argument("--diagram", help="diagram directory")
    s.add_argument("--audit", action="store_true")
    s.set_defaults(run=cmd_ocolim)
    s = sub.add_parser("hocolim", help="homotopy colimit of a diagram on a finite loop-free category")
    s.add_argument("fcat")
    s.add_argument("diagram")
    s.add_argument("--oracle", action="store_true", help="compare with the simplicial replacement")
    s.set_defaults(run=cmd_hocolim)
    s = sub.add_parser("tensorl", help="hocolim of a constant diagram over a category or a simplex category")
    s.add_argument("index", help=".fcat or .sset")
    s.add_argument("space")
    s.add_argument("--depth", type=int, default=2)
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(run=cmd_tensorl)
    s = sub.add_parser("map", help="truncated mapping space")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--depth", type=int, default=1)
    s.add_argument("--cap", type=int, default=1)
    s.add_argument("--levels", type=int, default=2)
    s.add_argument("--kan-certified", action="store_true", help="assert that a non-discrete target is Kan")
    s.set_defaults(run=cmd_map)
    s = sub.add_parser("verify", help="seeded verification suite")
    s.add_argument("suite", choices=ALL_SUITES + ["all"])
    s.add_argument("--trials", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(run=cmd_verify)
    return p


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":"), default=str))


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        _emit({"error": "usage", "message": str(e)})
        return EXIT_USAGE
    try:
        report, code = args.run(args)
    except TruncationError as e:
        _emit({"error": "truncation", "message": str(e.args[0]), "report": e.args[1] if len(e.args) > 1 else None})
        return EXIT_TRUNCATION
    except (SimplicialSetError, CategoryError, DiagramError, NotBoundedError, FibrancyError,
            FileNotFoundError, ValueError) as e:
        _emit({"error": "validation", "type": type(e).__name__, "message": str(e)})
        return EXIT_VALIDATION
    _emit(report)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
