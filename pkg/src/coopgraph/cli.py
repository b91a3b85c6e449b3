"""Command-line surface: partition, myerson, stability, threshold, sweep, dataset.

Rational parameters are passed as "p/q" strings (plain integers allowed)
so thresholds stay exact end to end. Exit status: 0 on success, 2 on
input errors, 3 when a size-gated exact enumeration refuses the input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .datasets import dataset_info, dataset_names, load_dataset
from .errors import SizeGateError
from .hedonic import (
    AlphaModel,
    Modularity,
    alpha_sweep,
    better_response,
    nash_stable,
    potential,
    potential_form,
    partition_threshold,
)
from .multigraph import Multigraph, parse_edge_list, serialize_edge_list
from .myerson import (
    component_characteristic,
    external_stability_check,
    myerson_allocation,
    myerson_nash_stable,
    myerson_payoff,
)
from .partition import (
    GREEDY_BEST,
    ROUND_ROBIN,
    SEEDED_RANDOM,
    Move,
    Partition,
    Schedule,
    run_dynamics,
)
from .reports import (
    format_rational,
    graph_digest,
    parse_rational,
    partition_from_json,
    partition_to_obj,
    sweep_to_csv,
    trace_to_obj,
)

_SCHEDULE_POLICIES = {
    "round-robin": ROUND_ROBIN,
    "random": SEEDED_RANDOM,
    "greedy": GREEDY_BEST,
}


def _resolve_graph(arg: str) -> Multigraph:
    if arg in dataset_names():
        return load_dataset(arg)
    path = Path(arg)
    if not path.exists():
        raise ValueError(
            f"graph {arg!r} is neither a dataset ({', '.join(dataset_names())}) "
            "nor an existing file"
        )
    return parse_edge_list(path.read_bytes())


def _resolve_init(arg: str, g: Multigraph) -> Partition:
    if arg == "singletons":
        return Partition.singletons(g.labels)
    if arg == "grand":
        return Partition.grand(g.labels)
    return _load_partition(arg, g)


def _load_partition(path: str, g: Multigraph) -> Partition:
    try:
        return partition_from_json(Path(path).read_text(), universe=g.labels)
    except ValueError as exc:
        raise ValueError(f"partition file {path!r}: {exc}") from exc


def _move_obj(mv: Optional[Move]) -> Optional[dict]:
    if mv is None:
        return None
    return {"node": mv.node, "from": mv.source, "to": "fresh" if mv.is_fresh else mv.target}


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _hedonic_model(args, g: Multigraph):
    if (args.alpha is None) == (not args.modularity):
        raise ValueError("choose exactly one of --alpha p/q or --modularity")
    if args.alpha is not None:
        vf = AlphaModel(parse_rational(args.alpha))
        return vf, {"kind": "alpha", "alpha": format_rational(vf.alpha)}
    beta_arg = args.beta
    if beta_arg == "degree-norm":
        beta: Optional[Fraction] = None
        beta_desc = "degree-normalized"
    elif beta_arg.startswith("uniform:"):
        beta = parse_rational(beta_arg.split(":", 1)[1])
        beta_desc = format_rational(beta)
    else:
        raise ValueError(f"--beta must be 'uniform:p/q' or 'degree-norm', got {beta_arg!r}")
    vf = Modularity(gamma=parse_rational(args.gamma), beta=beta)
    return vf, {"kind": "modularity", "gamma": format_rational(vf.gamma), "beta": beta_desc}


def _schedule(args) -> Schedule:
    return Schedule(
        policy=_SCHEDULE_POLICIES[args.schedule],
        seed=args.seed,
        max_steps=args.max_steps,
    )


def _cmd_partition_hedonic(args) -> int:
    g = _resolve_graph(args.graph)
    vf, model = _hedonic_model(args, g)
    start = _resolve_init(args.init, g)
    began = time.monotonic()
    final, trace = better_response(vf, g, start, _schedule(args))
    elapsed = time.monotonic() - began
    stable, witness = nash_stable(vf, g, final)
    pot = potential(vf, g, final)
    pot_obj = {"value": format_rational(pot.value)}
    if pot.intercept is not None:
        pot_obj["intercept"] = format_rational(pot.intercept)
        pot_obj["slope"] = format_rational(pot.slope)
    report = {
        "command": "partition-hedonic",
        "input": {"graph": args.graph, "digest": graph_digest(g), "n": g.n, "m": g.m},
        "model": model,
        "schedule": {"policy": args.schedule, "seed": args.seed, "max_steps": args.max_steps},
        "status": trace.status,
        "partition": partition_to_obj(final),
        "potential": pot_obj,
        "stability": {"nash_stable": stable, "witness": _move_obj(witness)},
        "trace": trace_to_obj(trace),
        "timing_seconds": round(elapsed, 6),
    }
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0


def _cmd_partition_myerson(args) -> int:
    g = _resolve_graph(args.graph)
    r = parse_rational(args.r)
    start = _resolve_init(args.init, g)
    began = time.monotonic()
    final, trace = run_dynamics(myerson_payoff(g, r), start, _schedule(args))
    elapsed = time.monotonic() - began
    stable, witness = myerson_nash_stable(g, final, r)
    externally_stable, entry = external_stability_check(g, final, r)
    allocation = {}
    for block in sorted(sorted(b) for b in final.blocks):
        alloc = myerson_allocation(g, frozenset(block))
        for node in block:
            allocation[node] = alloc[node].power_strings()
    report = {
        "command": "partition-myerson",
        "input": {"graph": args.graph, "digest": graph_digest(g), "n": g.n, "m": g.m},
        "model": {"kind": "myerson", "r": format_rational(r)},
        "schedule": {"policy": args.schedule, "seed": args.seed, "max_steps": args.max_steps},
        "status": trace.status,
        "partition": partition_to_obj(final),
        "allocation": allocation,
        "stability": {
            "nash_stable": stable,
            "witness": _move_obj(witness),
            "externally_stable": externally_stable,
            "external_witness": (
                None if entry is None else {"node": entry[0], "block": entry[1]}
            ),
        },
        "trace": trace_to_obj(trace),
        "timing_seconds": round(elapsed, 6),
    }
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0


def _cmd_myerson_value(args) -> int:
    g = _resolve_graph(args.graph)
    coalition = [part for part in args.coalition.split(",") if part]
    if not coalition:
        raise ValueError("--coalition must list at least one node")
    value = component_characteristic(g, coalition)
    allocation = myerson_allocation(g, coalition)
    out = {
        "graph": args.graph,
        "coalition": sorted(coalition),
        "value": {"poly": value.power_strings(), "str": str(value)},
        "allocation": {
            node: {"poly": poly.power_strings(), "str": str(poly)}
            for node, poly in sorted(allocation.items())
        },
    }
    if args.r is not None:
        r = parse_rational(args.r)
        if not 0 <= r <= 1:
            raise ValueError(f"discount r must lie in [0, 1], got {format_rational(r)}")
        out["r"] = format_rational(r)
        out["value_at_r"] = format_rational(value.evaluate(r))
        out["allocation_at_r"] = {
            node: format_rational(poly.evaluate(r))
            for node, poly in sorted(allocation.items())
        }
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return 0


def _cmd_stability(args) -> int:
    g = _resolve_graph(args.graph)
    p = _load_partition(args.partition, g)
    if args.model == "hedonic":
        if args.alpha is None:
            raise ValueError("--model hedonic needs --alpha p/q")
        if args.external:
            raise ValueError("--external applies to the myerson model only")
        vf = AlphaModel(parse_rational(args.alpha))
        stable, witness = nash_stable(vf, g, p)
        out = {
            "model": "hedonic",
            "alpha": format_rational(vf.alpha),
            "check": "nash",
            "stable": stable,
            "witness": _move_obj(witness),
        }
    else:
        if args.r is None:
            raise ValueError("--model myerson needs --r p/q")
        r = parse_rational(args.r)
        if args.external:
            stable, entry = external_stability_check(g, p, r)
            witness = None if entry is None else {"node": entry[0], "block": entry[1]}
            check = "external"
        else:
            stable, mv = myerson_nash_stable(g, p, r)
            witness = _move_obj(mv)
            check = "nash"
        out = {
            "model": "myerson",
            "r": format_rational(r),
            "check": check,
            "stable": stable,
            "witness": witness,
        }
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return 0


def _cmd_threshold(args) -> int:
    g = _resolve_graph(args.graph)
    p1 = _load_partition(args.p1, g)
    p2 = _load_partition(args.p2, g)
    cross = partition_threshold(g, p1, p2)
    if cross is None:
        if potential_form(g, p1) == potential_form(g, p2):
            sys.stderr.write("potentials are identical for every alpha\n")
        sys.stdout.write("none\n")
    else:
        sys.stdout.write(format_rational(cross) + "\n")
    return 0


def _cmd_sweep(args) -> int:
    g = _resolve_graph(args.graph)
    starts = [_load_partition(path, g) for path in args.starts]
    table = alpha_sweep(g, starts=starts or None, grid=args.grid)
    _emit(sweep_to_csv(table), args.out)
    return 0


def _cmd_dataset(args) -> int:
    if args.emit == "edgelist":
        sys.stdout.write(serialize_edge_list(load_dataset(args.name)))
    else:
        sys.stdout.write(json.dumps(dataset_info(args.name), indent=2) + "\n")
    return 0


def _add_schedule_flags(sub) -> None:
    sub.add_argument("--schedule", choices=sorted(_SCHEDULE_POLICIES), default="round-robin")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--max-steps", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coopgraph",
        description="Community detection via cooperative games, in exact rational arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_partition = sub.add_parser("partition", help="run better-response dynamics")
    engines = p_partition.add_subparsers(dest="engine", required=True)

    ph = engines.add_parser("hedonic", help="hedonic game dynamics")
    ph.add_argument("--graph", required=True)
    ph.add_argument("--alpha")
    ph.add_argument("--modularity", action="store_true")
    ph.add_argument("--gamma", default="1")
    ph.add_argument("--beta", default="uniform:1")
    ph.add_argument("--init", default="singletons")
    _add_schedule_flags(ph)
    ph.add_argument("--out")
    ph.set_defaults(func=_cmd_partition_hedonic)

    pm = engines.add_parser("myerson", help="Myerson-value dynamics")
    pm.add_argument("--graph", required=True)
    pm.add_argument("--r", required=True)
    pm.add_argument("--init", default="singletons")
    _add_schedule_flags(pm)
    pm.add_argument("--out")
    pm.set_defaults(func=_cmd_partition_myerson)

    p_myerson = sub.add_parser("myerson", help="Myerson value queries")
    msub = p_myerson.add_subparsers(dest="query", required=True)
    mv = msub.add_parser("value", help="coalition worth and allocation")
    mv.add_argument("--graph", required=True)
    mv.add_argument("--coalition", required=True)
    mv.add_argument("--r")
    mv.set_defaults(func=_cmd_myerson_value)

    st = sub.add_parser("stability", help="verify a partition")
    st.add_argument("--graph", required=True)
    st.add_argument("--partition", required=True)
    st.add_argument("--model", choices=["hedonic", "myerson"], required=True)
    st.add_argument("--alpha")
    st.add_argument("--r")
    st.add_argument("--external", action="store_true")
    st.set_defaults(func=_cmd_stability)

    th = sub.add_parser("threshold", help="exact alpha where two partitions tie")
    th.add_argument("--graph", required=True)
    th.add_argument("--p1", required=True)
    th.add_argument("--p2", required=True)
    th.set_defaults(func=_cmd_threshold)

    sw = sub.add_parser("sweep", help="alpha sweep table")
    sw.add_argument("--graph", required=True)
    sw.add_argument("--starts", nargs="*", default=[])
    sw.add_argument("--grid", type=int, default=20)
    sw.add_argument("--out")
    sw.set_defaults(func=_cmd_sweep)

    ds = sub.add_parser("dataset", help="bundled datasets")
    ds.add_argument("--name", required=True)
    ds.add_argument("--emit", choices=["edgelist", "info"], required=True)
    ds.set_defaults(func=_cmd_dataset)

    return parser


def cli_dispatch(argv) -> int:
    """Run one CLI invocation; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SizeGateError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
