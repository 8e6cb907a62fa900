"""Command-line entry point and host of the local game service.

Subcommands: solve, oracle, verify, reduce, gen, bench, serve.  Results
go to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 invalid
input (or an invalid witness under ``verify``), 2 search budget or
capacity exhausted.
"""

from __future__ import annotations

import argparse
import csv
import json
import statistics
import sys
import time
from pathlib import Path

from .core import ColoredGraph, Move, Variant, verify_solution
from .errors import (
    BudgetExceededError,
    CapacityError,
    FloodgraphError,
    InputError,
)
from .instances import InstanceDocument, emit, gen_random, parse
from .mpq import solve_interval
from .oracle import SearchBudget, Solution, solve_exact
from .recognition import interval_or_witness, split_or_witness
from .reductions import (
    VcInstance,
    vc_to_caterpillar,
    vc_to_proper_interval,
)
from .split import solve_split

_ENGINES = ("auto", "oracle", "interval", "split")


def _read_document(path: str) -> InstanceDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse(text)


def _moves_from_json(text: str) -> list[Move]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise InputError("moves file must hold a JSON array")
    moves = []
    for i, entry in enumerate(data):
        if not isinstance(entry, dict) or set(entry) != {"vertex", "color"}:
            raise InputError(f"move {i} must be an object with vertex and color")
        v, c = entry["vertex"], entry["color"]
        if not isinstance(v, int) or not isinstance(c, int):
            raise InputError(f"move {i} has a non-integer vertex or color")
        moves.append(Move(v, c))
    return moves


def _witness_json(moves) -> str:
    return json.dumps([{"vertex": m.vertex, "color": m.color} for m in moves])


def _pick_engine(graph: ColoredGraph, variant: Variant) -> str:
    # split recognition runs first: split graphs that happen to be
    # interval (e.g. stars) should get the split engine
    if variant.mode != "free":
        return "oracle"
    if split_or_witness(graph.n, graph.adj)[0]:
        return "split"
    if interval_or_witness(graph.n, graph.adj)[0]:
        return "interval"
    return "oracle"


def _run_engine(
    engine: str, graph: ColoredGraph, variant: Variant, budget: SearchBudget
) -> Solution:
    if engine == "oracle":
        return solve_exact(graph, variant, budget)
    if variant.mode != "free":
        raise InputError(
            f"the {engine} engine solves the free variant only", field="engine"
        )
    if engine == "interval":
        return solve_interval(graph)
    if engine == "split":
        return solve_split(graph, budget)
    raise InputError(f"unknown engine {engine!r}", field="engine")


def _budget_from_args(args) -> SearchBudget:
    if args.budget <= 0:
        raise InputError("budget must be positive", field="budget")
    return SearchBudget(time_limit=args.budget)


def cmd_solve(args) -> int:
    doc = _read_document(args.file)
    graph, variant = doc.to_game()
    engine = args.engine
    if engine == "auto":
        engine = _pick_engine(graph, variant)
    sol = _run_engine(engine, graph, variant, _budget_from_args(args))
    print(f"opt {sol.value}")
    print(f"engine {engine}")
    print(_witness_json(sol.moves))
    return 0


def cmd_oracle(args) -> int:
    doc = _read_document(args.file)
    graph, variant = doc.to_game()
    sol = solve_exact(graph, variant, _budget_from_args(args))
    print(f"opt {sol.value}")
    print("engine oracle")
    print(_witness_json(sol.moves))
    return 0


def cmd_verify(args) -> int:
    doc = _read_document(args.file)
    graph, variant = doc.to_game()
    try:
        moves_text = Path(args.moves).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.moves}: {exc.strerror}") from exc
    moves = _moves_from_json(moves_text)
    res = verify_solution(graph, variant, moves)
    if res.valid:
        print(f"valid length {res.length} final_color {res.final_color}")
        return 0
    if res.first_violation is not None:
        print(f"invalid at move {res.first_violation}: {res.reason}")
    else:
        print(f"invalid: {res.reason}")
    return 1


def _read_vc(path: str) -> VcInstance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise InputError("vertex cover input must be an object with n and edges")
    if not isinstance(data["n"], int):
        raise InputError("n must be an integer", field="n")
    edges = data["edges"]
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)
        for e in edges
    ):
        raise InputError("edges must be an array of [u, v] pairs", field="edges")
    return VcInstance(data["n"], tuple((e[0], e[1]) for e in edges))


def _emit_document(doc: InstanceDocument, out: str | None) -> None:
    text = emit(doc)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        print(f"wrote {out}", file=sys.stderr)


def cmd_reduce(args) -> int:
    vc = _read_vc(args.file)
    if args.target == "vc-caterpillar":
        graph, cert = vc_to_caterpillar(vc)
        intervals = None
        generator = "vc_to_caterpillar"
    else:
        rep, cert = vc_to_proper_interval(vc)
        graph = rep.to_graph()
        intervals = rep.intervals
        generator = "vc_to_proper_interval"
    meta = {"generator": generator, "certificate": cert.as_record()}
    doc = InstanceDocument.from_graph(graph, Variant.free(), intervals, meta)
    _emit_document(doc, args.out)
    print(
        f"reduction {generator}: n {graph.n} k {graph.k} offset {cert.offset}",
        file=sys.stderr,
    )
    return 0


def cmd_gen(args) -> int:
    doc = gen_random(args.kind, args.n, args.k, args.seed)
    _emit_document(doc, args.out)
    return 0


# bench suites: name -> list of (label, kind, n, k, seed)
_SUITES = {
    "quick": [
        ("path_16_3", "path", 16, 3, 11),
        ("caterpillar_16_4", "caterpillar", 16, 4, 12),
        ("interval_18_4", "interval", 18, 4, 13),
        ("proper_18_4", "proper_interval", 18, 4, 14),
        ("split_12_4", "split", 12, 4, 15),
    ],
    "scaling": [
        ("proper_50_3", "proper_interval", 50, 3, 21),
        ("proper_100_3", "proper_interval", 100, 3, 22),
        ("proper_200_3", "proper_interval", 200, 3, 23),
        ("proper_50_5", "proper_interval", 50, 5, 24),
        ("interval_100_3", "interval", 100, 3, 25),
        ("split_200_4", "split", 200, 4, 26),
    ],
}


def _bench_rows(suite: list) -> list[dict]:
    rows = []
    for label, kind, n, k, seed in suite:
        doc = gen_random(kind, n, k, seed)
        graph, variant = doc.to_game()
        engine = _pick_engine(graph, variant)
        budget = SearchBudget(time_limit=300.0)
        times = []
        sol = None
        for _ in range(3):
            t0 = time.perf_counter()
            sol = _run_engine(engine, graph, variant, budget)
            times.append(time.perf_counter() - t0)
        rows.append(
            {
                "instance": label,
                "n": n,
                "k": k,
                "engine": engine,
                "opt": sol.value,
                "time": round(statistics.median(times), 6),
            }
        )
        print(f"bench {label}: opt {sol.value} in {times[-1]:.3f}s", file=sys.stderr)
    return rows


def _bench_figure(rows: list[dict], path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax_time, ax_opt) = plt.subplots(1, 2, figsize=(11, 4.5))
    labels = [r["instance"] for r in rows]
    xs = range(len(rows))
    ax_time.bar(xs, [r["time"] for r in rows], color="#4878a8")
    ax_time.set_xticks(list(xs))
    ax_time.set_xticklabels(labels, rotation=30, ha="right", fontsize=8)
    ax_time.set_ylabel("median wall time (s)")
    ax_time.set_yscale("log")
    ax_time.set_title("solve time")
    ax_opt.bar(xs, [r["opt"] for r in rows], color="#a85448")
    ax_opt.set_xticks(list(xs))
    ax_opt.set_xticklabels(labels, rotation=30, ha="right", fontsize=8)
    ax_opt.set_ylabel("optimal moves")
    ax_opt.set_title("optimum")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def cmd_bench(args) -> int:
    if args.suite not in _SUITES:
        raise InputError(
            f"unknown suite {args.suite!r}; choose from {sorted(_SUITES)}", field="suite"
        )
    rows = _bench_rows(_SUITES[args.suite])
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    fields = ["instance", "n", "k", "engine", "opt", "time"]
    writer = csv.DictWriter(sys.stdout, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)

    csv_path = outdir / f"bench_{args.suite}.csv"
    with csv_path.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    fig_path = outdir / f"bench_{args.suite}.png"
    _bench_figure(rows, fig_path)
    print(f"wrote {csv_path} and {fig_path}", file=sys.stderr)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    frontend = args.frontend
    if frontend is None:
        candidate = Path("frontend") / "dist"
        frontend = candidate if candidate.is_dir() else None
    app = create_app(frontend_dir=frontend)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floodgraph", description="exact flooding game solvers"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument(
            "--budget",
            type=float,
            default=60.0,
            help="time limit in seconds (default 60)",
        )

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("file")
    p.add_argument("--engine", choices=_ENGINES, default="auto")
    add_budget(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="solve with the exact search, no shortcuts")
    p.add_argument("file")
    add_budget(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="replay a witness against an instance")
    p.add_argument("file")
    p.add_argument("--moves", required=True, help="JSON array of {vertex, color}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="build a flooding instance from a cover input")
    p.add_argument("target", choices=("vc-caterpillar", "vc-interval"))
    p.add_argument("file", help='JSON object {"n": ..., "edges": [[u, v], ...]}')
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("kind")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a named suite, emit CSV and figures")
    p.add_argument("--suite", required=True)
    p.add_argument("--outdir", default="bench_out")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="start the local game service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--frontend", default=None, help="static assets directory")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceededError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FloodgraphError as exc:
        fld = getattr(exc, "field", None)
        where = f" ({fld})" if fld else ""
        print(f"error{where}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
