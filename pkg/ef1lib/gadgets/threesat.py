"""3SAT gadget graphs built from glued H_p copies, and their triangle partitions."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import networkx as nx

from ef1lib.core import PreconditionError, TheoremViolationError

from .hp import (
    Coord,
    GadgetConfig,
    GadgetGraph,
    Patch,
    TriangleKind,
    Vertex,
    check_gadget_graph,
    copy_triangles,
    hp_edges,
    hp_vertices,
    select_patches,
    triangle_base,
)
from .triangles import Triangle, validate_triangle_partition

logger = logging.getLogger(__name__)

JoinKind = Literal["FFF", "FF", "FT"]
Lit = tuple[int, bool]


@dataclass(frozen=True)
class Cnf3Formula:
    """Variables are 0-based; a literal is (variable, negated)."""

    q: int
    clauses: tuple[tuple[Lit, ...], ...]

    def __post_init__(self) -> None:
        if self.q < 0:
            raise ValueError("variable count must be non-negative")
        for j, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ValueError(
                    f"clause {j + 1} has {len(clause)} literals, expected 3"
                )
            for var, _ in clause:
                if not 0 <= var < self.q:
                    raise ValueError(f"clause {j + 1} uses unknown variable {var + 1}")

    @classmethod
    def from_dimacs(cls, q: int, clauses: Sequence[Sequence[int]]) -> Cnf3Formula:
        parsed = []
        for clause in clauses:
            if any(lit == 0 for lit in clause):
                raise ValueError("DIMACS literals must be non-zero")
            parsed.append(tuple((abs(lit) - 1, lit < 0) for lit in clause))
        return cls(q=q, clauses=tuple(parsed))

    def first_unsatisfied(self, assignment: Sequence[bool]) -> int | None:
        for j, clause in enumerate(self.clauses):
            if not any(assignment[var] != negated for var, negated in clause):
                return j
        return None


@dataclass(frozen=True)
class Join:
    """Patches glued into one; the first copy hosts the shared vertices."""

    kind: JoinKind
    copies: tuple[str, ...]
    patches: tuple[Patch, ...]

    @property
    def shares_center(self) -> bool:
        return self.kind != "FFF"


def variable_copy(i: int) -> str:
    return f"Y{i + 1}"


def literal_copy(j: int, k: int) -> str:
    return f"L{j + 1}.{k + 1}"


def gen_threesat_dtp(
    f: Cnf3Formula,
    p: int | None = None,
    *,
    config: GadgetConfig | None = None,
) -> GadgetGraph:
    """Glue variable and literal copies of H_p so triangle partitions encode
    satisfying assignments.

    Each clause's three literal copies meet in an F-F-F join. A positive
    literal's copy meets its variable copy in an F-F join, a negated one in an
    F-T join, with the variable copy's T-patch mapped onto an F-patch.
    """
    cfg = config or GadgetConfig()
    size = p if p is not None else cfg.default_p(len(f.clauses))
    if size < 3:
        raise PreconditionError(f"H_p needs p >= 3, got {size}")

    copies = [variable_copy(i) for i in range(f.q)]
    copies += [literal_copy(j, k) for j in range(len(f.clauses)) for k in range(3)]

    positive = [0] * f.q
    negative = [0] * f.q
    for clause in f.clauses:
        for var, negated in clause:
            if negated:
                negative[var] += 1
            else:
                positive[var] += 1

    placements: dict[tuple[int, int], list[Patch]] = {}

    def place(need_t: int, need_f: int) -> list[Patch]:
        key = (need_t, need_f)
        if key not in placements:
            placements[key] = select_patches(size, need_t, need_f, config=cfg)
        return placements[key]

    spare_t: dict[str, list[Patch]] = {}
    spare_f: dict[str, list[Patch]] = {}
    for i in range(f.q):
        patches = place(negative[i], positive[i])
        spare_t[variable_copy(i)] = [x for x in patches if x.kind == "T"]
        spare_f[variable_copy(i)] = [x for x in patches if x.kind == "F"]
    literal_patches = place(0, 2) if f.clauses else []

    joins: list[Join] = []
    for j, clause in enumerate(f.clauses):
        names = [literal_copy(j, k) for k in range(3)]
        joins.append(Join("FFF", tuple(names), (literal_patches[0],) * 3))
        for k, (var, negated) in enumerate(clause):
            host = names[k]
            guest = variable_copy(var)
            kind: JoinKind = "FT" if negated else "FF"
            guest_patch = (spare_t if negated else spare_f)[guest].pop(0)
            joins.append(Join(kind, (host, guest), (literal_patches[1], guest_patch)))

    relabel: dict[str, dict[Coord, Vertex]] = {name: {} for name in copies}
    removed: dict[str, set[tuple[Coord, Coord]]] = {name: set() for name in copies}
    for join in joins:
        host, host_patch = join.copies[0], join.patches[0]
        for copy, patch in zip(join.copies, join.patches, strict=True):
            removed[copy].update(patch.edges)
            if copy == host:
                continue
            pairs = zip(
                patch.center + patch.outer,
                host_patch.center + host_patch.outer,
                strict=True,
            )
            for own, shared in pairs:
                relabel[copy][own] = (host, shared)

    graph = nx.DiGraph()
    for name in copies:
        for v in hp_vertices(size):
            if v not in relabel[name]:
                graph.add_node((name, v), copy=name, coords=v)
    base_edges = hp_edges(size)
    for name in copies:
        moved = relabel[name]
        skip = removed[name]
        graph.add_edges_from(
            (moved.get(u, (name, u)), moved.get(v, (name, v)))
            for u, v in base_edges
            if (u, v) not in skip
        )
    for join in joins:
        host, patch = join.copies[0], join.patches[0]
        shared = patch.edges if join.shares_center else patch.exterior_edges
        graph.add_edges_from(((host, u), (host, v)) for u, v in shared)

    logger.debug(
        "3SAT gadget: p=%d, %d copies, %d joins, %d vertices, %d edges",
        size,
        len(copies),
        len(joins),
        graph.number_of_nodes(),
        graph.number_of_edges(),
    )
    gadget = GadgetGraph(
        p=size,
        graph=nx.freeze(graph),
        copies=tuple(copies),
        joins=tuple(joins),
        formula=f,
        relabel=relabel,
    )
    defects = check_gadget_graph(gadget)
    if defects:
        raise TheoremViolationError(
            f"3SAT gadget has {len(defects)} structural defect(s); first: {defects[0]}"
        )
    return gadget


@dataclass(frozen=True)
class AssignmentPartition:
    triangles: tuple[Triangle, ...] = ()
    failed_clause: int | None = None

    @property
    def ok(self) -> bool:
        return self.failed_clause is None


def copy_kinds(f: Cnf3Formula, assignment: Sequence[bool]) -> dict[str, TriangleKind]:
    """Triangle family per copy: true variables and unused literals take T."""
    kinds: dict[str, TriangleKind] = {}
    for i in range(f.q):
        kinds[variable_copy(i)] = "T" if assignment[i] else "F"
    for j, clause in enumerate(f.clauses):
        witness = next(
            k for k, (var, negated) in enumerate(clause) if assignment[var] != negated
        )
        for k in range(3):
            kinds[literal_copy(j, k)] = "F" if k == witness else "T"
    return kinds


def partition_from_assignment(
    g: GadgetGraph, assignment: Sequence[bool]
) -> AssignmentPartition:
    f = g.formula
    if f is None:
        raise PreconditionError("gadget graph was not built from a formula")
    if len(assignment) != f.q:
        raise PreconditionError(
            f"assignment has {len(assignment)} values, formula has {f.q} variables"
        )
    failed = f.first_unsatisfied(assignment)
    if failed is not None:
        logger.debug("assignment leaves clause %d unsatisfied", failed + 1)
        return AssignmentPartition(failed_clause=failed)

    kinds = copy_kinds(f, assignment)
    dropped: dict[str, set[Coord]] = {name: set() for name in g.copies}
    for join in g.joins:
        matching = [
            index
            for index, (copy, patch) in enumerate(
                zip(join.copies, join.patches, strict=True)
            )
            if kinds[copy] == patch.kind
        ]
        if len(matching) > 1:
            raise TheoremViolationError(
                f"{join.kind} join {join.copies} has several copies matching "
                "its center family"
            )
        if not matching and not join.shares_center:
            raise TheoremViolationError(f"F-F-F join {join.copies} has no F copy")
        owner = matching[0] if matching else 0
        for index, (copy, patch) in enumerate(
            zip(join.copies, join.patches, strict=True)
        ):
            if index == owner:
                if matching and not join.shares_center:
                    dropped[copy].add(patch.base)
                continue
            dropped[copy].update(_touching_bases(g.p, patch, kinds[copy]))

    triangles: list[Triangle] = []
    for name in g.copies:
        skip = dropped[name]
        triangles.extend(
            tri
            for base, tri in copy_triangles(g, name, kinds[name])
            if base not in skip
        )
    check = validate_triangle_partition(g.graph, triangles)
    if not check.ok:
        raise TheoremViolationError(f"constructed partition is invalid: {check.defect}")
    return AssignmentPartition(triangles=tuple(triangles))


def _touching_bases(p: int, patch: Patch, kind: TriangleKind) -> set[Coord]:
    return {triangle_base(p, u, v, kind) for u, v in patch.edges}


__all__ = [
    "AssignmentPartition",
    "Cnf3Formula",
    "Join",
    "JoinKind",
    "copy_kinds",
    "gen_threesat_dtp",
    "literal_copy",
    "partition_from_assignment",
    "variable_copy",
]
