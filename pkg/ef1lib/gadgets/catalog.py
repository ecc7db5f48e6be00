"""Named counterexample fixtures and their machine-checkable expectations."""

from __future__ import annotations

import copy
import json
import logging
from dataclasses import dataclass, field
from functools import cache
from typing import Any

from ef1lib.core import Allocation, Instance, MoveSet, PreconditionError, is_ef1
from ef1lib.data import get_catalog_path
from ef1lib.distance import distance_via_cycles
from ef1lib.polypaths import path_three_heavy_xt
from ef1lib.search import (
    SearchBudget,
    bfs_distance,
    ef1_component_connected,
    ef1_reach,
    optimal_ef1_path,
)

logger = logging.getLogger(__name__)

# Goods each padding agent holds, per pad rule.
PAD_RULES: dict[str, int] = {
    "shared-row": 0,
    "zero-row": 0,
    "shared-row-with-good": 1,
    "unit-goods": 2,
}


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    instance: Instance
    source: Allocation
    target: Allocation
    expect: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return bool(self.expected == self.actual)

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "ok": self.ok,
        }


@cache
def _raw_fixtures() -> dict[str, dict[str, Any]]:
    path = get_catalog_path()
    if path is None:
        return {}
    payload = json.loads(path.read_text(encoding="utf-8"))
    return {entry["name"]: entry for entry in payload["fixtures"]}


def catalog_names() -> list[str]:
    return list(_raw_fixtures())


def fixture(name: str, *, agents: int | None = None) -> Fixture:
    """Load a fixture, optionally padded out to ``agents`` agents.

    Fixtures with a ``pad`` rule in the catalog extend to any larger agent
    count; the rule says what the extra agents value and hold.
    """
    raw = _raw_fixtures().get(name)
    if raw is None:
        known = ", ".join(catalog_names())
        raise PreconditionError(f"unknown fixture {name!r}; known: {known}")
    inst = Instance.from_dict(raw["instance"])
    entry = Fixture(
        name=name,
        description=raw.get("description", ""),
        instance=inst,
        source=Allocation.from_names(inst, raw["from"]),
        target=Allocation.from_names(inst, raw["to"]),
        expect=raw.get("expect", {}),
    )
    if agents is None or agents == inst.n:
        return entry
    pad = raw.get("pad")
    if pad is None:
        raise PreconditionError(f"fixture {name!r} is fixed at {inst.n} agents")
    if agents < inst.n:
        raise PreconditionError(
            f"fixture {name!r} needs at least {inst.n} agents, got {agents}"
        )
    return _padded(entry, pad, agents)


def _padded(entry: Fixture, pad: dict[str, Any], agents: int) -> Fixture:
    inst = entry.instance
    extra = agents - inst.n
    rule = pad["rule"]
    if rule not in PAD_RULES:
        raise PreconditionError(f"unknown pad rule {rule!r}")
    per_agent = PAD_RULES[rule]
    new_goods = tuple(f"g{inst.m + k + 1}" for k in range(extra * per_agent))
    value = 1 if rule == "unit-goods" else int(pad.get("value", 0))
    rows = [row + (value,) * len(new_goods) for row in inst.utilities]
    template = (0,) * inst.m if rule == "zero-row" else inst.utilities[0]
    rows += [template + (value,) * len(new_goods)] * extra
    padded = Instance(n=agents, goods=inst.goods + new_goods, utilities=tuple(rows))

    held = [
        list(range(inst.m + k * per_agent, inst.m + (k + 1) * per_agent))
        for k in range(extra)
    ]

    def extend(alloc: Allocation) -> Allocation:
        return Allocation.of([*(sorted(b) for b in alloc.bundles), *held])

    expect = copy.deepcopy(entry.expect)
    for key in pad.get("drop", []):
        section, _, label = key.partition(".")
        if label:
            expect.get(section, {}).pop(label, None)
        else:
            expect.pop(section, None)
    connected = expect.get("connected")
    if connected is not None and connected.get("sizes") is not None:
        connected["sizes"] = [*connected["sizes"], *(per_agent,) * extra]

    logger.debug("padded fixture %s to %d agents (%s)", entry.name, agents, rule)
    return Fixture(
        name=entry.name,
        description=f"{entry.description} Padded to {agents} agents.",
        instance=padded,
        source=extend(entry.source),
        target=extend(entry.target),
        expect=expect,
    )


def catalog(
    name: str, *, agents: int | None = None
) -> tuple[Instance, Allocation, Allocation, dict[str, Any]]:
    entry = fixture(name, agents=agents)
    return entry.instance, entry.source, entry.target, entry.expect


def verify_fixture(
    name: str, budget: SearchBudget | None = None, *, agents: int | None = None
) -> list[CheckOutcome]:
    """Run every expectation recorded for ``name`` and report each result."""
    entry = fixture(name, agents=agents)
    inst, source, target = entry.instance, entry.source, entry.target
    expect = entry.expect
    outcomes = [
        CheckOutcome("ef1[from]", True, is_ef1(inst, source)),
        CheckOutcome("ef1[to]", True, is_ef1(inst, target)),
    ]
    for label, verdict in expect.get("reach", {}).items():
        result = ef1_reach(inst, source, target, MoveSet(label), budget)
        outcomes.append(CheckOutcome(f"reach[{label}]", verdict, result.status))
    for label, length in expect.get("reach_length", {}).items():
        result = ef1_reach(inst, source, target, MoveSet(label), budget)
        outcomes.append(CheckOutcome(f"reach_length[{label}]", length, result.length))
    for label, verdict in expect.get("optimal", {}).items():
        result = optimal_ef1_path(inst, source, target, MoveSet(label), budget)
        outcomes.append(CheckOutcome(f"optimal[{label}]", verdict, result.status))
    for label, distance in expect.get("distance", {}).items():
        moves = MoveSet(label)
        actual = bfs_distance(inst, source, target, moves, budget)
        outcomes.append(CheckOutcome(f"distance[{label},bfs]", distance, actual))
        if moves is MoveSet.EXCHANGE_ONLY:
            actual = distance_via_cycles(inst, source, target, budget)
            outcomes.append(CheckOutcome("distance[exchange,cycles]", distance, actual))
    if "connected" in expect:
        spec = expect["connected"]
        report = ef1_component_connected(
            inst, spec.get("sizes"), MoveSet(spec["moves"]), budget
        )
        outcomes.append(
            CheckOutcome(f"connected[{spec['moves']}]", spec["value"], report.connected)
        )
    if "three_heavy" in expect:
        outcomes.extend(_three_heavy_checks(entry, expect["three_heavy"]))
    logger.debug(
        "verify_fixture %s: %d checks, %d failed",
        name,
        len(outcomes),
        sum(not outcome.ok for outcome in outcomes),
    )
    return outcomes


def _three_heavy_checks(entry: Fixture, spec: dict[str, Any]) -> list[CheckOutcome]:
    inst = entry.instance
    path = path_three_heavy_xt(inst, entry.source, entry.target)
    outcomes = [CheckOutcome("three_heavy[length]", spec["length"], len(path))]
    first = spec.get("first")
    if first is not None:
        actual = None
        if path:
            move = path[0]
            actual = {"kind": move.kind, "good": inst.goods[move.g], "to": move.j + 1}
        outcomes.append(CheckOutcome("three_heavy[first]", first, actual))
    return outcomes


__all__ = [
    "PAD_RULES",
    "CheckOutcome",
    "Fixture",
    "catalog",
    "catalog_names",
    "fixture",
    "verify_fixture",
]
