"""Command-line front end: construct, analyze, convert, verify, search.

JSON is the machine interface; CSV is a spreadsheet projection of verdicts.
All randomness is seeded and floats are printed with 12 significant digits,
so a repeated run with the same configuration produces byte-identical
output.  Wall-clock timings are therefore zeroed in reports unless
--timing is passed.

Exit codes: 0 success/verified, 1 counterexample found, 2 usage or input
error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import families, verify
from .cycles import BudgetExhausted, cycle_spectrum, effective_budget
from .graph import Graph, GraphError, graph6_decode, graph6_encode
from .spectral import ConvergenceError, summary
from .transforms import closure

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

ANALYZE_CYCLE_LIMIT = 24


# -- deterministic JSON -------------------------------------------------------


def _render(value, out: list) -> None:
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        out.append("null" if math.isnan(value) else format(value, ".12g"))
    elif isinstance(value, str):
        out.append('"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"')
    elif isinstance(value, dict):
        out.append("{")
        for i, (key, item) in enumerate(value.items()):
            if i:
                out.append(", ")
            _render(str(key), out)
            out.append(": ")
            _render(item, out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(", ")
            _render(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def stable_json(value) -> str:
    """JSON with insertion-ordered keys and 12-significant-digit floats."""
    out: list = []
    _render(value, out)
    return "".join(out)


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


# -- analyze ------------------------------------------------------------------


def _analyze_one(g: Graph, tol: float, fmax: int) -> dict:
    report: dict = {
        "graph6": graph6_encode(g),
        "n": g.n,
        "edges": g.edge_count(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "omega": g.clique_number(),
        "connected": g.is_connected(),
        "components": g.components().count,
        "cut_vertices": list(g.cut_vertices()),
    }
    if g.n <= ANALYZE_CYCLE_LIMIT:
        spectrum = cycle_spectrum(g)
        report["cycles"] = {
            "skipped": False,
            "lengths": sorted(spectrum.lengths),
            "girth": spectrum.girth,
            "circumference": spectrum.circumference,
            "ec": spectrum.ec,
            "oc": spectrum.oc,
            "weakly_pancyclic": (
                set(spectrum.lengths)
                == set(range(spectrum.girth, spectrum.circumference + 1))
                if spectrum.lengths
                else None
            ),
        }
    else:
        report["cycles"] = {"skipped": True}
    spec = summary(g, tol)
    report["spectral"] = {
        "rho": spec.rho,
        "q": spec.q,
        "hong": spec.hong,
        "hong_valid": spec.hong_valid,
        "das": spec.das,
        "tol": spec.tol,
        "iters": spec.iters,
    }
    closed = closure(g, g.n)
    report["closure"] = {
        "threshold": g.n,
        "edges_added": len(closed.added),
        "added": [list(pair) for pair in closed.added],
    }
    fmax = min(fmax, g.n - 1, families.F_SEARCH_MAX_K)
    report["f_membership"] = {
        "by_k": {str(k): families.is_subgraph_of_F(g, k).is_member for k in range(fmax + 1)},
        "max_k_searched": fmax,
    }
    table = {}
    for k in range(0, min(10, g.n - 3) + 1):
        th = families.thresholds(g.n, k)
        table[str(k)] = {
            "woodall": th.woodall,
            "refined": th.refined,
            "stability": th.stability,
            "even_cycle": float(th.even_cycle),
            "ore": th.ore,
        }
    report["thresholds"] = table
    return report


# -- verify dispatch ----------------------------------------------------------

CLAIMS = (
    "woodall",
    "refined",
    "stability",
    "spectral",
    "even-cycle",
    "kelmans",
    "hong",
    "das",
    "sun-das",
    "closure",
    "bondy",
    "ore",
    "family-cmp",
    "quarter-n",
)


def _dispatch_verify(args) -> verify.Verdict:
    claim = args.claim
    if args.k is None and args.t is not None:
        args.k = args.t
    need_nk = claim in ("woodall", "refined", "stability", "spectral", "even-cycle")
    if need_nk and (args.n is None or args.k is None):
        raise GraphError(f"claim {claim!r} needs --n and --k")
    if claim == "woodall":
        return verify.check_woodall(
            args.n, args.k, exhaustive=args.exhaustive, trials=args.trials, seed=args.seed
        )
    if claim == "refined":
        return verify.check_refined_woodall(
            args.n, args.k, exhaustive=args.exhaustive, trials=args.trials, seed=args.seed
        )
    if claim == "stability":
        return verify.check_stability(
            args.n,
            args.k,
            trials=args.trials,
            seed=args.seed,
            exhaustive=args.exhaustive,
            enforce_hypothesis=not args.ignore_hypothesis_gate,
        )
    if claim == "spectral":
        return verify.check_spectral_theorem(
            args.n, args.k, trials=args.trials, seed=args.seed
        )
    if claim == "even-cycle":
        return verify.check_even_cycle_bound(
            args.n,
            args.k,
            exhaustive=args.exhaustive or not args.sampled,
            dedup=args.dedup,
            trials=args.trials,
            seed=args.seed,
        )
    if claim == "kelmans":
        return verify.check_kelmans_monotone(trials=args.trials, seed=args.seed)
    if claim == "hong":
        return verify.check_spectral_bounds(trials=args.trials, seed=args.seed, bound="hong")
    if claim == "das":
        return verify.check_spectral_bounds(trials=args.trials, seed=args.seed, bound="das")
    if claim == "sun-das":
        return verify.check_sun_das(trials=args.trials, seed=args.seed)
    if claim == "closure":
        return verify.check_closure_circumference(n_max=args.nmax)
    if claim == "bondy":
        return verify.check_bondy_pancyclic(trials=args.trials, seed=args.seed)
    if claim == "ore":
        return verify.check_ore(n_max=args.nmax)
    if claim == "family-cmp":
        return verify.check_family_comparisons(k_max=args.kmax, n_max=args.nmax)
    if claim == "quarter-n":
        n_values = (args.n,) if args.n is not None else (16, 20, 24)
        return verify.check_quarter_n_property(
            n_values=n_values, trials=args.trials, seed=args.seed
        )
    raise GraphError(f"unknown claim {claim!r}")


def _verdict_csv(verdict: verify.Verdict, args) -> str:
    n = "" if args.n is None else args.n
    k = "" if args.k is None else args.k
    seconds = verdict.stats.seconds if args.timing else 0.0
    return (
        "claim,n,k,status,checked,seconds\n"
        f"{verdict.claim},{n},{k},{verdict.status},{verdict.stats.checked},"
        f"{format(seconds, '.12g')}"
    )


# -- input helpers ------------------------------------------------------------


def _read_graph6_lines(args) -> list:
    if getattr(args, "graph6", None):
        lines = [args.graph6]
    elif getattr(args, "infile", None):
        with open(args.infile) as fh:
            lines = [line.strip() for line in fh if line.strip()]
    else:
        lines = [line.strip() for line in sys.stdin if line.strip()]
    if not lines:
        raise GraphError("no graph6 input given")
    return [graph6_decode(line) for line in lines]


# -- argument parser ----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclespec",
        description="Construct, analyze, and verify extremal cycle/spectral claims.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a family graph as graph6")
    p_gen.add_argument("spec", help='family spec, e.g. "L:10,2", "GammaT:10,2", "T2:8"')
    p_gen.add_argument("--out", default=None)

    p_an = sub.add_parser("analyze", help="structural/spectral report for graph6 input")
    p_an.add_argument("graph6", nargs="?", default=None)
    p_an.add_argument("--in", dest="infile", default=None)
    p_an.add_argument("--tol", type=float, default=1e-10)
    p_an.add_argument("--fmax", type=int, default=4)
    p_an.add_argument("--out", default=None)

    p_ver = sub.add_parser("verify", help="run a registered claim check")
    p_ver.add_argument("claim", choices=CLAIMS)
    p_ver.add_argument("--n", type=int, default=None)
    p_ver.add_argument("--k", type=int, default=None)
    p_ver.add_argument("--t", type=int, default=None, help="alias for --k on gamma-style claims")
    p_ver.add_argument("--trials", type=int, default=10000)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--tol", type=float, default=1e-10)
    p_ver.add_argument("--exhaustive", action="store_true")
    p_ver.add_argument("--sampled", action="store_true")
    p_ver.add_argument("--dedup", action="store_true")
    p_ver.add_argument("--nmax", type=int, default=7)
    p_ver.add_argument("--kmax", type=int, default=10)
    p_ver.add_argument("--jobs", type=int, default=0, help="worker cap (sweeps run serially)")
    p_ver.add_argument("--ignore-hypothesis-gate", action="store_true")
    p_ver.add_argument("--timing", action="store_true", help="report real seconds (breaks byte-determinism)")
    p_ver.add_argument("--out", default=None)
    p_ver.add_argument("--format", choices=("json", "csv"), default="json")

    p_se = sub.add_parser("search", help="annealing search for extremal graphs")
    p_se.add_argument("--n", type=int, required=True)
    p_se.add_argument("--k", type=int, default=None)
    p_se.add_argument("--forbid", default="", help="comma-separated cycle lengths")
    p_se.add_argument("--objective", choices=("rho", "q"), default="rho")
    p_se.add_argument("--steps", type=int, default=4000)
    p_se.add_argument("--restarts", type=int, default=3)
    p_se.add_argument("--seed", type=int, default=0)
    p_se.add_argument("--out", default=None)

    p_cv = sub.add_parser("convert", help="re-encode graph6 input as graph6/json/csv")
    p_cv.add_argument("graph6", nargs="?", default=None)
    p_cv.add_argument("--in", dest="infile", default=None)
    p_cv.add_argument("--format", choices=("graph6", "json", "csv"), default="json")
    p_cv.add_argument("--out", default=None)

    return parser


# -- command implementations ---------------------------------------------------


def _cmd_gen(args) -> int:
    g = families.from_spec(args.spec)
    _emit(graph6_encode(g), args.out)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    graphs = _read_graph6_lines(args)
    reports = [_analyze_one(g, args.tol, args.fmax) for g in graphs]
    payload = reports[0] if len(reports) == 1 else reports
    _emit(stable_json(payload), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    verdict = _dispatch_verify(args)
    if args.format == "csv":
        _emit(_verdict_csv(verdict, args), args.out)
    else:
        _emit(stable_json(verdict.as_json(include_timing=args.timing)), args.out)
    if verdict.status == verify.COUNTEREXAMPLE:
        return EXIT_COUNTEREXAMPLE
    if verdict.status == verify.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_search(args) -> int:
    forbidden = ()
    if args.forbid.strip():
        try:
            forbidden = tuple(int(x) for x in args.forbid.split(","))
        except ValueError as exc:
            raise GraphError(f"bad --forbid list {args.forbid!r}") from exc
    schedule = verify.AnnealSchedule(steps=args.steps, restarts=args.restarts)
    state = verify.search_extremal(
        args.n,
        k=args.k,
        forbidden=forbidden,
        objective=args.objective,
        schedule=schedule,
        seed=args.seed,
    )
    payload = {
        "n": state.n,
        "k": state.k,
        "objective": state.objective,
        "forbidden": sorted(state.forbidden),
        "seed": state.seed,
        "schedule": {
            "steps": state.schedule.steps,
            "t_start": state.schedule.t_start,
            "t_end": state.schedule.t_end,
            "restarts": state.schedule.restarts,
        },
        "budget": effective_budget(None),
        "best": {"graph6": state.best.to_graph6(), "value": state.best_value},
        "current": {"graph6": state.current.to_graph6(), "value": state.current_value},
        "ledger": [
            {"step": entry.step, "value": entry.value, "graph6": entry.graph6}
            for entry in state.ledger
        ],
    }
    _emit(stable_json(payload), args.out)
    return EXIT_OK


def _cmd_convert(args) -> int:
    graphs = _read_graph6_lines(args)
    if args.format == "graph6":
        _emit("\n".join(graph6_encode(g) for g in graphs), args.out)
    elif args.format == "json":
        payload = [
            {"graph6": graph6_encode(g), "n": g.n, "edges": [list(e) for e in g.edges()]}
            for g in graphs
        ]
        _emit(stable_json(payload[0] if len(payload) == 1 else payload), args.out)
    else:
        lines = ["graph,u,v"]
        for i, g in enumerate(graphs):
            lines.extend(f"{i},{u},{v}" for u, v in g.edges())
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "gen": _cmd_gen,
        "analyze": _cmd_analyze,
        "verify": _cmd_verify,
        "search": _cmd_search,
        "convert": _cmd_convert,
    }[args.command]
    try:
        return handler(args)
    except (GraphError, BudgetExhausted, ConvergenceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
