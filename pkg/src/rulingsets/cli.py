"""Command-line interface.

Subcommands: gen (emit graph/hypergraph JSON), run (algorithm ->
certificate + experiment record), verify (graph + certificate ->
verdict), bench (sweep graphs, CSV), selftest (exhaustive small-graph
suite). Exit codes: 0 verified/ok, 1 violation, 2 usage or IO error.
The env var CONGEST_RULE_SEED supplies the default seed.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import jsonio
from .generators import generate
from .graph import Graph, Hypergraph, hyper_line_graph_with_cover, id_bits
from .harness import (
    ALGORITHMS,
    CSV_COLUMNS,
    HYPERGRAPH_ALGORITHMS,
    run_experiment,
    sweep_small_graphs,
)
from .sim import SimConfig
from .verify import verify_ruling_edge_set, verify_ruling_set


def _default_seed() -> int:
    return int(os.environ.get("CONGEST_RULE_SEED", "0"))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rulingsets")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph or hypergraph JSON file")
    gen.add_argument("--kind", required=True,
                     choices=["ring", "path", "complete", "erdos_renyi",
                              "d_regular", "random_hypergraph"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float)
    gen.add_argument("--d", type=int)
    gen.add_argument("--num-edges", type=int)
    gen.add_argument("--rank", type=int)
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--id-mode", choices=["sequential", "random"], default="sequential")
    gen.add_argument("-o", "--out", required=True)

    runp = sub.add_parser("run", help="run an algorithm and emit a certificate")
    runp.add_argument("--algo", required=True, choices=list(ALGORITHMS))
    runp.add_argument("--graph")
    runp.add_argument("--hypergraph")
    runp.add_argument("--cover", help="clique cover JSON for diversity_ruling_set")
    runp.add_argument("--alpha", type=int, default=2)
    runp.add_argument("--scale-b", type=int, default=2, dest="scale_b")
    runp.add_argument("--beta", type=int, default=2)
    runp.add_argument("--cert", help="write certificate JSON here")
    runp.add_argument("--record", help="write the experiment record JSON here")
    runp.add_argument("--transcript", help="write a JSON-lines message transcript here")
    runp.add_argument("--cap-multiplier", type=int, default=8)
    runp.add_argument("--unlimited-cap", action="store_true")

    ver = sub.add_parser("verify", help="check a certificate against a graph")
    ver.add_argument("--graph")
    ver.add_argument("--hypergraph")
    ver.add_argument("--cert", required=True)

    bench = sub.add_parser("bench", help="sweep graph families, emit CSV")
    bench.add_argument("--algo", required=True, choices=list(ALGORITHMS))
    bench.add_argument("--ring", help="comma-separated ring sizes")
    bench.add_argument("--path", help="comma-separated path sizes")
    bench.add_argument("--er", action="append", default=[],
                       help="n:p[:seed] (repeatable)")
    bench.add_argument("--dreg", action="append", default=[],
                       help="n:d[:seed] (repeatable)")
    bench.add_argument("--hyper", action="append", default=[],
                       help="n:num_edges:rank[:seed] (repeatable)")
    bench.add_argument("--id-mode", choices=["sequential", "random"], default="sequential")
    bench.add_argument("--alpha", type=int, default=2)
    bench.add_argument("--scale-b", type=int, default=2, dest="scale_b")
    bench.add_argument("--beta", type=int, default=2)
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("-o", "--out", help="CSV output path (default stdout)")

    self_p = sub.add_parser("selftest", help="exhaustive small-graph suite")
    self_p.add_argument("--max-n", type=int, default=6)
    return parser


def _load_input(args) -> tuple[Graph | Hypergraph, str]:
    if getattr(args, "graph", None):
        g = jsonio.graph_from_dict(jsonio.load_json(args.graph))
        return g, args.graph
    if getattr(args, "hypergraph", None):
        h = jsonio.hypergraph_from_dict(jsonio.load_json(args.hypergraph))
        return h, args.hypergraph
    raise ValueError("provide --graph or --hypergraph")


def _cmd_gen(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    obj = generate(args.kind, n=args.n, seed=seed, id_mode=args.id_mode,
                   p=args.p, d=args.d, num_edges=args.num_edges, rank=args.rank)
    if isinstance(obj, Hypergraph):
        jsonio.dump_json(args.out, jsonio.hypergraph_to_dict(obj))
    else:
        jsonio.dump_json(args.out, jsonio.graph_to_dict(obj))
    print(f"wrote {args.out}: {obj!r}")
    return 0


def _cmd_run(args) -> int:
    obj, path = _load_input(args)
    if args.algo in HYPERGRAPH_ALGORITHMS and not isinstance(obj, Hypergraph):
        raise ValueError(f"{args.algo} needs --hypergraph")
    if args.algo not in HYPERGRAPH_ALGORITHMS and not isinstance(obj, Graph):
        raise ValueError(f"{args.algo} needs --graph")
    cover = None
    if args.cover:
        cover = jsonio.cover_from_dict(jsonio.load_json(args.cover))
    config = SimConfig(cap_multiplier=args.cap_multiplier,
                       unlimited_cap=args.unlimited_cap,
                       record_transcript=bool(args.transcript))
    params = {"alpha": args.alpha, "B": args.scale_b, "beta": args.beta}
    record = run_experiment(path, obj, args.algo, params, config, cover=cover)
    if args.cert:
        jsonio.dump_json(args.cert, record.certificate)
    if args.record:
        jsonio.dump_json(args.record, record.as_dict())
    if args.transcript:
        jsonio.dump_transcript(args.transcript, record.report)
    print(f"{args.algo} on {path}: rounds={record.rounds_used} "
          f"max_msg_bits={record.max_message_bits} "
          f"claimed=({record.alpha_claimed},{record.beta_claimed}) "
          f"achieved=({record.achieved_alpha},{record.achieved_beta}) "
          f"verdict={'ok' if record.verdict.ok else 'VIOLATION'}")
    for violation in record.verdict.violations[:10]:
        print(f"  {violation}")
    return 0 if record.verdict.ok else 1


def _cmd_verify(args) -> int:
    obj, _ = _load_input(args)
    cert = jsonio.load_json(args.cert)
    kind = cert.get("kind")
    alpha, beta = int(cert["alpha"]), int(cert["beta"])
    if kind == "edge":
        if not isinstance(obj, Graph):
            raise ValueError("edge certificates verify against --graph")
        verdict = verify_ruling_edge_set(obj, [tuple(e) for e in cert["edges"]], alpha, beta)
    elif kind == "vertex":
        if isinstance(obj, Hypergraph):
            lg, _ = hyper_line_graph_with_cover(obj)
            verdict = verify_ruling_set(lg, cert["nodes"], alpha, beta)
        else:
            verdict = verify_ruling_set(obj, cert["nodes"], alpha, beta)
    else:
        raise ValueError(f"unknown certificate kind {kind!r}")
    if verdict.ok:
        print(f"ok: ({alpha},{beta}) holds; achieved=({verdict.achieved_alpha},"
              f"{verdict.achieved_beta})")
        return 0
    print(f"VIOLATION of ({alpha},{beta}):")
    for violation in verdict.violations[:10]:
        print(f"  {violation}")
    return 1


def _parse_spec(spec: str, fields: int, default_seed: int) -> list[int | float]:
    parts = spec.split(":")
    if len(parts) < fields:
        raise ValueError(f"bad spec {spec!r}")
    vals: list[int | float] = [float(p) if "." in p else int(p) for p in parts]
    if len(vals) == fields:
        vals.append(default_seed)
    return vals


def _cmd_bench(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    jobs: list[tuple[str, Graph | Hypergraph]] = []
    for n in (int(x) for x in (args.ring or "").split(",") if x):
        jobs.append((f"ring(n={n})", generate("ring", n=n, id_mode=args.id_mode, seed=seed)))
    for n in (int(x) for x in (args.path or "").split(",") if x):
        jobs.append((f"path(n={n})", generate("path", n=n, id_mode=args.id_mode, seed=seed)))
    for spec in args.er:
        n, p, s = _parse_spec(spec, 2, seed)
        jobs.append((f"er(n={n},p={p},seed={s})",
                     generate("erdos_renyi", n=int(n), p=float(p), seed=int(s),
                              id_mode=args.id_mode)))
    for spec in args.dreg:
        n, d, s = _parse_spec(spec, 2, seed)
        jobs.append((f"dreg(n={n},d={d},seed={s})",
                     generate("d_regular", n=int(n), d=int(d), seed=int(s),
                              id_mode=args.id_mode)))
    for spec in args.hyper:
        n, m, r, s = _parse_spec(spec, 3, seed)
        jobs.append((f"hyper(n={n},m={m},rank={r},seed={s})",
                     generate("random_hypergraph", n=int(n), num_edges=int(m),
                              rank=int(r), seed=int(s))))
    if not jobs:
        raise ValueError("no graphs requested")
    params = {"alpha": args.alpha, "B": args.scale_b, "beta": args.beta}
    rows = []
    all_ok = True
    for desc, obj in jobs:
        record = run_experiment(desc, obj, args.algo, params)
        rows.append(record.csv_row())
        all_ok &= record.verdict.ok
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(CSV_COLUMNS)
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return 0 if all_ok else 1


def _cmd_selftest(args) -> int:
    records = sweep_small_graphs(args.max_n)
    failures = [r for r in records if not r.verdict.ok]
    graphs = len({r.graph for r in records})
    print(f"selftest: {len(records)} runs on {graphs} labeled graphs "
          f"(n <= {args.max_n}, both ID modes)")
    for r in failures[:10]:
        print(f"  FAIL {r.graph} {r.algorithm} {r.params}: {r.verdict.violations[:2]}")
    print("ok" if not failures else f"{len(failures)} failures")
    return 0 if not failures else 1


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"gen": _cmd_gen, "run": _cmd_run, "verify": _cmd_verify,
                "bench": _cmd_bench, "selftest": _cmd_selftest}
    try:
        return handlers[args.command](args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
