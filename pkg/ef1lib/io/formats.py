"""Plain-text formats: DIMACS CNF, edge lists and gadget graph dumps."""

from __future__ import annotations

from pathlib import Path

import networkx as nx

from ef1lib.gadgets import Cnf3Formula, GadgetGraph


def loads_cnf(data: str) -> Cnf3Formula:
    """Parse DIMACS CNF: a ``p cnf q r`` header and 0-terminated clauses."""
    q: int | None = None
    declared: int | None = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for number, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("c", "%")):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {number}: malformed header {line!r}")
            q, declared = int(parts[2]), int(parts[3])
            continue
        if q is None:
            raise ValueError(f"line {number}: clause before the 'p cnf' header")
        for token in line.split():
            literal = int(token)
            if literal == 0:
                clauses.append(current)
                current = []
            else:
                current.append(literal)
    if current:
        clauses.append(current)
    if q is None:
        raise ValueError("missing 'p cnf' header")
    if declared is not None and declared != len(clauses):
        raise ValueError(f"header declares {declared} clauses, found {len(clauses)}")
    return Cnf3Formula.from_dimacs(q, clauses)


def load_cnf(path: str | Path) -> Cnf3Formula:
    return loads_cnf(Path(path).read_text(encoding="utf-8"))


def dumps_cnf(f: Cnf3Formula) -> str:
    lines = [f"p cnf {f.q} {len(f.clauses)}"]
    for clause in f.clauses:
        literals = [-(var + 1) if negated else var + 1 for var, negated in clause]
        lines.append(" ".join(str(lit) for lit in [*literals, 0]))
    return "\n".join(lines) + "\n"


def loads_edge_list(data: str) -> nx.MultiDiGraph:
    """One ``u v`` pair per line; ``#`` starts a comment."""
    graph = nx.MultiDiGraph()
    for number, raw in enumerate(data.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {number}: expected 'u v', got {raw.strip()!r}")
        graph.add_edge(*(_node(part) for part in parts))
    return graph


def load_edge_list(path: str | Path) -> nx.MultiDiGraph:
    return loads_edge_list(Path(path).read_text(encoding="utf-8"))


def dumps_gadget_graph(g: GadgetGraph) -> str:
    lines = [f"{g.p} {g.q} {g.r}"]
    for u, v in sorted(g.graph.edges()):
        lines.append(f"{_vertex(u)} -> {_vertex(v)}")
    for join in g.joins:
        patches = " ".join(
            f"{patch.kind}@{_coords(patch.base)}" for patch in join.patches
        )
        lines.append(f"#join {join.kind} {','.join(join.copies)} {patches}")
    return "\n".join(lines) + "\n"


def save_gadget_graph(path: str | Path, g: GadgetGraph) -> None:
    Path(path).write_text(dumps_gadget_graph(g), encoding="utf-8")


def _node(token: str) -> int | str:
    try:
        return int(token)
    except ValueError:
        return token


def _coords(a: tuple[int, int, int]) -> str:
    return f"({a[0]},{a[1]},{a[2]})"


def _vertex(v: tuple[str, tuple[int, int, int]]) -> str:
    return f"{v[0]} {_coords(v[1])}"


__all__ = [
    "dumps_cnf",
    "dumps_gadget_graph",
    "load_cnf",
    "load_edge_list",
    "loads_cnf",
    "loads_edge_list",
    "save_gadget_graph",
]
