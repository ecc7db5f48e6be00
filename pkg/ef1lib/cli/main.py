"""ef1lib command-line interface."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from ef1lib import __version__
from ef1lib.core import (
    Allocation,
    BudgetExhaustedError,
    Ef1Error,
    Instance,
    Move,
    MoveSet,
    TheoremViolationError,
    ef1_violations,
    is_ef1,
    replay_moves,
)
from ef1lib.distance import (
    build_item_graph,
    distance_via_cycles,
    max_cycle_partition,
)
from ef1lib.gadgets import (
    BipartiteMatchingInstance,
    GadgetConfig,
    catalog_names,
    fixture,
    gen_graph_distance_instance,
    gen_partition_instance,
    gen_pmr_instance,
    gen_threesat_dtp,
    partition_from_assignment,
    verify_fixture,
)
from ef1lib.io import (
    dumps_gadget_graph,
    load_allocation,
    load_cnf,
    load_edge_list,
    load_instance,
    load_path,
    path_to_dict,
    save_allocation,
    save_instance,
)
from ef1lib.polypaths import (
    BASE_ALGORITHMS,
    path_identical_binary,
    path_three_heavy_xt,
    path_two_binary,
    path_two_identical,
    path_xt_via_dummies,
)
from ef1lib.search import (
    SearchBudget,
    bfs_distance,
    ef1_component_connected,
    ef1_reach,
    optimal_ef1_path,
)
from ef1lib.viz import item_graph_to_dot

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

POLY_ALGORITHMS = ("two-identical", "two-binary", "iden-binary", "xt", "three-heavy")

Handler = Callable[[argparse.Namespace], int]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=("text", "json"),
        default="text",
        help="Output format.",
    )
    common.add_argument(
        "-v", "--verbose", action="store_true", help="Enable debug logging."
    )

    parser = argparse.ArgumentParser(prog="ef1lib")
    subparsers = parser.add_subparsers(dest="command", required=True)

    check_parser = subparsers.add_parser(
        "check", parents=[common], help="Check an allocation or a path for EF1."
    )
    _add_instance(check_parser)
    target = check_parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--alloc", help="Allocation JSON file to check.")
    target.add_argument("--path", help="Path JSON file to replay from --from.")
    check_parser.add_argument("--from", dest="source", help="Start of the path.")

    reach_parser = subparsers.add_parser(
        "reach", parents=[common], help="Search for an EF1 path between allocations."
    )
    _add_endpoints(reach_parser)
    _add_moves(reach_parser)
    reach_parser.add_argument(
        "--optimal",
        action="store_true",
        help="Only accept paths as short as the unrestricted distance.",
    )
    _add_budget(reach_parser)

    distance_parser = subparsers.add_parser(
        "distance", parents=[common], help="Unrestricted move distance."
    )
    _add_endpoints(distance_parser)
    _add_moves(distance_parser)
    distance_parser.add_argument(
        "--method",
        choices=("bfs", "cycles"),
        default="bfs",
        help="Breadth-first search or the item-graph cycle formula.",
    )
    _add_budget(distance_parser)

    connect_parser = subparsers.add_parser(
        "connect", parents=[common], help="Is the EF1 subgraph connected?"
    )
    _add_instance(connect_parser)
    connect_parser.add_argument(
        "--sizes",
        help="Size vector for exchange moves; omit to check every size vector.",
    )
    _add_moves(connect_parser)
    _add_budget(connect_parser)

    poly_parser = subparsers.add_parser(
        "poly", parents=[common], help="Run a constructive EF1 path algorithm."
    )
    _add_endpoints(poly_parser)
    poly_parser.add_argument("--algo", choices=POLY_ALGORITHMS, required=True)
    poly_parser.add_argument(
        "--base",
        choices=("auto", *BASE_ALGORITHMS),
        default="auto",
        help="Exchange algorithm behind --algo xt.",
    )

    gen_parser = subparsers.add_parser(
        "gen", help="Generate reduction instances and gadget graphs."
    )
    gen_sub = gen_parser.add_subparsers(dest="generator", required=True)
    pmr_parser = gen_sub.add_parser(
        "pmr", parents=[common], help="Perfect matching reconfiguration instance."
    )
    pmr_parser.add_argument("--side", type=int, required=True, help="Side size v.")
    pmr_parser.add_argument(
        "--edges", required=True, help="Edges as 'i-k' pairs, 1-based, comma-separated."
    )
    pmr_parser.add_argument("--w0", required=True, help="Partner of each p_i in W0.")
    pmr_parser.add_argument("--w", required=True, help="Partner of each p_i in W.")
    _add_out_dir(pmr_parser)
    partition_parser = gen_sub.add_parser(
        "partition", parents=[common], help="Partition instance."
    )
    partition_parser.add_argument(
        "--values", required=True, help="Comma-separated positive integers."
    )
    _add_out_dir(partition_parser)
    graphdist_parser = gen_sub.add_parser(
        "graphdist", parents=[common], help="Instance with a given item graph."
    )
    graphdist_parser.add_argument("--edges", required=True, help="Edge list file.")
    _add_out_dir(graphdist_parser)
    dtp_parser = gen_sub.add_parser(
        "dtp", parents=[common], help="Triangle partition gadget graph from 3-CNF."
    )
    dtp_parser.add_argument("--cnf", required=True, help="DIMACS CNF file.")
    dtp_parser.add_argument("--p", type=int, help="Size of each H_p copy.")
    dtp_parser.add_argument("--separation", type=int, default=10)
    dtp_parser.add_argument("--out", help="Write the edge list here.")
    dtp_parser.add_argument(
        "--assignment",
        help="Variable values as a T/F string; validates the induced partition.",
    )

    catalog_parser = subparsers.add_parser(
        "catalog", parents=[common], help="List, emit or verify catalog fixtures."
    )
    catalog_parser.add_argument("name", nargs="?", help="Fixture name.")
    catalog_parser.add_argument(
        "--verify", action="store_true", help="Run the fixture's expected checks."
    )
    catalog_parser.add_argument(
        "--agents",
        type=int,
        help="Pad the fixture with extra agents, for fixtures that extend.",
    )
    _add_out_dir(catalog_parser)
    _add_budget(catalog_parser)

    itemgraph_parser = subparsers.add_parser(
        "itemgraph", parents=[common], help="Export the item graph as DOT."
    )
    _add_endpoints(itemgraph_parser)
    itemgraph_parser.add_argument(
        "--cycles",
        action="store_true",
        help="Colour a maximum cycle partition.",
    )

    subparsers.add_parser("version", help="Print the ef1lib version.")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    if args.command == "version":
        print(__version__)
        return EXIT_OK

    handler = _HANDLERS.get(args.command)
    if handler is None:
        parser.error(f"Unknown command: {args.command}")
        return EXIT_INPUT
    try:
        return handler(args)
    except BudgetExhaustedError as exc:
        _report_error(args, f"budget exhausted: {exc}", EXIT_BUDGET)
        return EXIT_BUDGET
    except TheoremViolationError as exc:
        _report_error(args, f"construction failed: {exc}", EXIT_NEGATIVE)
        return EXIT_NEGATIVE
    except (Ef1Error, ValueError, KeyError, OSError) as exc:
        _report_error(args, f"error: {exc}", EXIT_INPUT)
        return EXIT_INPUT


def _cmd_check(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    if args.alloc is not None:
        alloc = load_allocation(inst, args.alloc)
        violations = [(i + 1, j + 1) for i, j in ef1_violations(inst, alloc)]
        ok = not violations
        _emit(
            args,
            {"ef1": ok, "violations": [list(pair) for pair in violations]},
            "EF1"
            if ok
            else "not EF1: "
            + ", ".join(f"agent {i} envies agent {j}" for i, j in violations),
        )
        return EXIT_OK if ok else EXIT_NEGATIVE

    if args.source is None:
        raise ValueError("--path needs --from")
    source = load_allocation(inst, args.source)
    moves = load_path(inst, args.path)
    states = replay_moves(inst, source, moves)
    flags = [is_ef1(inst, state) for state in states]
    lines = [
        f"step {step}: {'EF1' if flag else 'not EF1'}"
        for step, flag in enumerate(flags)
    ]
    _emit(args, {"ef1": all(flags), "steps": flags}, "\n".join(lines))
    return EXIT_OK if all(flags) else EXIT_NEGATIVE


def _cmd_reach(args: argparse.Namespace) -> int:
    inst, source, target = _load_endpoints(args)
    search = optimal_ef1_path if args.optimal else ef1_reach
    result = search(inst, source, target, MoveSet(args.moves), _budget(args))
    payload = result.to_dict(inst)
    _emit(args, payload, _describe_path(inst, result.status, result.path))
    if result.status == "budget_exhausted":
        return EXIT_BUDGET
    return EXIT_OK if result.is_found else EXIT_NEGATIVE


def _cmd_distance(args: argparse.Namespace) -> int:
    inst, source, target = _load_endpoints(args)
    moves = MoveSet(args.moves)
    if args.method == "cycles":
        if moves is not MoveSet.EXCHANGE_ONLY:
            raise ValueError("the cycle formula only covers exchange moves")
        distance: int | None = distance_via_cycles(inst, source, target, _budget(args))
    else:
        distance = bfs_distance(inst, source, target, moves, _budget(args))
    text = "unreachable" if distance is None else str(distance)
    _emit(args, {"distance": distance, "method": args.method}, text)
    return EXIT_OK if distance is not None else EXIT_NEGATIVE


def _cmd_connect(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    sizes = _int_list(args.sizes) if args.sizes else None
    report = ef1_component_connected(inst, sizes, MoveSet(args.moves), _budget(args))
    text = (
        f"{'connected' if report.connected else 'disconnected'}: "
        f"{report.states} EF1 allocations in "
        f"{len(report.component_sizes)} component(s) {list(report.component_sizes)}"
    )
    _emit(args, report.to_dict(), text)
    return EXIT_OK if report.connected else EXIT_NEGATIVE


def _cmd_poly(args: argparse.Namespace) -> int:
    inst, source, target = _load_endpoints(args)
    stats: dict[str, int] = {}
    path: Sequence[Move]
    if args.algo == "two-identical":
        path = path_two_identical(inst, source, target, stats=stats)
    elif args.algo == "two-binary":
        path = path_two_binary(inst, source, target, stats=stats)
    elif args.algo == "iden-binary":
        path = path_identical_binary(inst, source, target, stats=stats)
    elif args.algo == "xt":
        path = path_xt_via_dummies(inst, source, target, args.base, stats=stats)
    else:
        path = path_three_heavy_xt(inst, source, target, stats=stats)
    payload = path_to_dict(inst, path, stats=stats)
    _emit(args, payload, _describe_path(inst, "found", path))
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.generator == "dtp":
        return _gen_dtp(args)
    if args.generator == "pmr":
        pairs = [_int_list(edge, sep="-") for edge in args.edges.split(",")]
        matching = BipartiteMatchingInstance.build(
            args.side,
            [(i - 1, k - 1) for i, k in pairs],
            [k - 1 for k in _int_list(args.w0)],
            [k - 1 for k in _int_list(args.w)],
        )
        inst, source, target = gen_pmr_instance(matching)
    elif args.generator == "partition":
        inst, source, target = gen_partition_instance(_int_list(args.values))
    else:
        inst, source, target = gen_graph_distance_instance(load_edge_list(args.edges))
    return _write_bundle(args, inst, source, target)


def _gen_dtp(args: argparse.Namespace) -> int:
    formula = load_cnf(args.cnf)
    graph = gen_threesat_dtp(
        formula, args.p, config=GadgetConfig(separation=args.separation)
    )
    if args.out:
        Path(args.out).write_text(dumps_gadget_graph(graph), encoding="utf-8")
    summary: dict[str, Any] = {
        "p": graph.p,
        "q": graph.q,
        "r": graph.r,
        "vertices": graph.graph.number_of_nodes(),
        "edges": graph.graph.number_of_edges(),
        "joins": len(graph.joins),
    }
    if args.assignment is None:
        if not args.out and args.output == "text":
            print(dumps_gadget_graph(graph), end="")
        else:
            _emit(args, summary, json.dumps(summary, sort_keys=True))
        return EXIT_OK

    values = [_truth(ch) for ch in args.assignment.strip()]
    result = partition_from_assignment(graph, values)
    summary["partition"] = {
        "ok": result.ok,
        "triangles": len(result.triangles),
        "failed_clause": None
        if result.failed_clause is None
        else result.failed_clause + 1,
    }
    text = (
        f"valid triangle partition with {len(result.triangles)} triangles"
        if result.ok
        else f"assignment leaves clause {summary['partition']['failed_clause']} "
        "unsatisfied"
    )
    _emit(args, summary, text)
    return EXIT_OK if result.ok else EXIT_NEGATIVE


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.name is None:
        names = catalog_names()
        lines = [f"{name}: {fixture(name).description}" for name in names]
        _emit(args, {"fixtures": names}, "\n".join(lines))
        return EXIT_OK

    entry = fixture(args.name, agents=args.agents)
    if args.verify:
        outcomes = verify_fixture(args.name, _budget(args), agents=args.agents)
        passed = all(outcome.ok for outcome in outcomes)
        lines = [
            f"{'ok  ' if outcome.ok else 'FAIL'} {outcome.name}: "
            + (
                f"{_show(outcome.actual)} as expected"
                if outcome.ok
                else f"expected {_show(outcome.expected)}, "
                f"got {_show(outcome.actual)}"
            )
            for outcome in outcomes
        ]
        lines.append(
            f"all {len(outcomes)} checks passed"
            if passed
            else f"{sum(not o.ok for o in outcomes)} of {len(outcomes)} checks failed"
        )
        _emit(
            args,
            {
                "fixture": args.name,
                "agents": entry.instance.n,
                "ok": passed,
                "checks": [outcome.to_dict() for outcome in outcomes],
            },
            "\n".join(lines),
        )
        return EXIT_OK if passed else EXIT_NEGATIVE
    return _write_bundle(
        args, entry.instance, entry.source, entry.target, expect=entry.expect
    )


def _cmd_itemgraph(args: argparse.Namespace) -> int:
    inst, source, target = _load_endpoints(args)
    partition = None
    if args.cycles:
        _, partition = max_cycle_partition(build_item_graph(source, target))
    print(item_graph_to_dot(inst, source, target, partition))
    return EXIT_OK


_HANDLERS: dict[str, Handler] = {
    "check": _cmd_check,
    "reach": _cmd_reach,
    "distance": _cmd_distance,
    "connect": _cmd_connect,
    "poly": _cmd_poly,
    "gen": _cmd_gen,
    "catalog": _cmd_catalog,
    "itemgraph": _cmd_itemgraph,
}


def _add_instance(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--instance", required=True, help="Instance JSON file.")


def _add_endpoints(parser: argparse.ArgumentParser) -> None:
    _add_instance(parser)
    parser.add_argument("--from", dest="source", required=True, help="Start.")
    parser.add_argument("--to", dest="target", required=True, help="Goal.")


def _add_moves(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--moves",
        choices=[moves.value for moves in MoveSet],
        default=MoveSet.EXCHANGE_ONLY.value,
        help="Allowed move types.",
    )


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--budget", type=int, help="Maximum number of states.")


def _add_out_dir(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--out-dir", help="Write instance.json, from.json and to.json here."
    )


def _budget(args: argparse.Namespace) -> SearchBudget:
    if args.budget is None:
        return SearchBudget()
    return SearchBudget(max_states=args.budget)


def _load_endpoints(
    args: argparse.Namespace,
) -> tuple[Instance, Allocation, Allocation]:
    inst = load_instance(args.instance)
    return inst, load_allocation(inst, args.source), load_allocation(inst, args.target)


def _write_bundle(
    args: argparse.Namespace,
    inst: Instance,
    source: Allocation,
    target: Allocation,
    *,
    expect: dict[str, Any] | None = None,
) -> int:
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        save_instance(out / "instance.json", inst)
        save_allocation(out / "from.json", inst, source)
        save_allocation(out / "to.json", inst, target)
        print(f"wrote {out / 'instance.json'}, {out / 'from.json'}, {out / 'to.json'}")
        return EXIT_OK
    payload: dict[str, Any] = {
        "instance": inst.to_dict(),
        "from": source.to_dict(inst),
        "to": target.to_dict(inst),
    }
    if expect is not None:
        payload["expect"] = expect
    print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK


def _describe_path(inst: Instance, status: str, path: Sequence[Move]) -> str:
    if status != "found":
        return status.replace("_", " ")
    lines = [f"found: {len(path)} move(s)"]
    for step, move in enumerate(path, start=1):
        data = move.to_dict(inst)
        if data["kind"] == "exchange":
            lines.append(
                f"{step}. agent {data['i']} gives {data['g']} to agent {data['j']} "
                f"for {data['h']}"
            )
        else:
            lines.append(
                f"{step}. agent {data['i']} transfers {data['g']} to agent {data['j']}"
            )
    return "\n".join(lines)


def _emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _report_error(args: argparse.Namespace, message: str, code: int) -> None:
    if getattr(args, "output", "text") == "json":
        print(json.dumps({"error": message, "exit": code}, indent=2, sort_keys=True))
    else:
        print(message, file=sys.stderr)


def _int_list(text: str, *, sep: str = ",") -> list[int]:
    return [int(part) for part in text.split(sep) if part.strip()]


def _truth(ch: str) -> bool:
    if ch in "Tt1":
        return True
    if ch in "Ff0":
        return False
    raise ValueError(f"assignment characters must be T or F, got {ch!r}")


def _show(value: Any) -> str:
    return json.dumps(value, sort_keys=True) if isinstance(value, dict) else str(value)


if __name__ == "__main__":
    raise SystemExit(main())
