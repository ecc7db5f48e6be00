"""The zero-sum triple graph H_p, its two triangle families, and patches."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Literal

import networkx as nx

from ef1lib.core import PlacementError, PreconditionError

if TYPE_CHECKING:
    from .threesat import Cnf3Formula, Join

logger = logging.getLogger(__name__)

Coord = tuple[int, int, int]
Vertex = tuple[str, Coord]
TriangleKind = Literal["T", "F"]

# Edge directions: coordinate j goes up by one and coordinate k down by one.
D1: Coord = (0, 1, -1)
D2: Coord = (-1, 0, 1)
D3: Coord = (1, -1, 0)
DIRECTIONS: tuple[Coord, Coord, Coord] = (D1, D2, D3)


@dataclass(frozen=True)
class GadgetConfig:
    separation: int = 10
    clause_scale: int = 100

    def default_p(self, clauses: int) -> int:
        return self.clause_scale * max(clauses, 1)


def shift(p: int, v: Coord, d: Coord, times: int = 1) -> Coord:
    return (
        (v[0] + times * d[0]) % p,
        (v[1] + times * d[1]) % p,
        (v[2] + times * d[2]) % p,
    )


def hp_vertices(p: int) -> list[Coord]:
    """All zero-sum triples in lexicographic order."""
    return [(a1, a2, (-a1 - a2) % p) for a1 in range(p) for a2 in range(p)]


def hp_edges(p: int) -> list[tuple[Coord, Coord]]:
    return [(v, shift(p, v, d)) for v in hp_vertices(p) for d in DIRECTIONS]


def triangle(p: int, base: Coord, kind: TriangleKind) -> tuple[Coord, Coord, Coord]:
    second = shift(p, base, D3)
    if kind == "T":
        return base, second, shift(p, second, D1)
    return base, second, shift(p, second, D2)


def triangle_base(p: int, tail: Coord, head: Coord, kind: TriangleKind) -> Coord:
    """Base vertex of the T- or F-triangle that contains the edge tail -> head."""
    if head == shift(p, tail, D3):
        return tail
    if kind == "T":
        if head == shift(p, tail, D1):
            return shift(p, tail, D3, -1)
        if head == shift(p, tail, D2):
            return head
    else:
        if head == shift(p, tail, D2):
            return shift(p, tail, D3, -1)
        if head == shift(p, tail, D1):
            return head
    raise ValueError(f"{tail} -> {head} is not an edge of H_{p}")


def hex_distance(p: int, u: Coord, v: Coord) -> int:
    """Undirected hop distance between two vertices of H_p."""
    x0 = (v[0] - u[0]) % p
    y0 = (v[1] - u[1]) % p
    best = p
    for x in (x0 - p, x0, x0 + p):
        for y in (y0 - p, y0, y0 + p):
            best = min(best, max(abs(x), abs(y), abs(x + y)))
    return best


@dataclass(frozen=True)
class Patch:
    """A center triangle plus the three opposite-kind triangles on its edges.

    ``outer[i]`` closes the neighbouring triangle on center edge i -> i+1.
    """

    kind: TriangleKind
    base: Coord
    center: tuple[Coord, Coord, Coord]
    outer: tuple[Coord, Coord, Coord]

    @property
    def vertices(self) -> tuple[Coord, ...]:
        return self.center + self.outer

    @property
    def center_edges(self) -> list[tuple[Coord, Coord]]:
        c = self.center
        return [(c[i], c[(i + 1) % 3]) for i in range(3)]

    @property
    def exterior_edges(self) -> list[tuple[Coord, Coord]]:
        c, u = self.center, self.outer
        edges: list[tuple[Coord, Coord]] = []
        for i in range(3):
            edges.append((c[(i + 1) % 3], u[i]))
            edges.append((u[i], c[i]))
        return edges

    @property
    def edges(self) -> list[tuple[Coord, Coord]]:
        return self.center_edges + self.exterior_edges

    def label(self) -> str:
        a1, a2, a3 = self.base
        return f"{self.kind}({a1},{a2},{a3})"


def make_patch(p: int, base: Coord, kind: TriangleKind) -> Patch:
    center = triangle(p, base, kind)
    opposite: TriangleKind = "F" if kind == "T" else "T"
    outer: list[Coord] = []
    for i in range(3):
        tail, head = center[i], center[(i + 1) % 3]
        corners = triangle(p, triangle_base(p, tail, head, opposite), opposite)
        outer.append(next(x for x in corners if x not in (tail, head)))
    return Patch(kind, base, center, (outer[0], outer[1], outer[2]))


def select_patches(
    p: int,
    need_t: int,
    need_f: int,
    *,
    config: GadgetConfig | None = None,
) -> list[Patch]:
    """Greedy lexicographic placement of well-separated patches.

    Every patch vertex stays at least ``separation`` hops from the origin and
    from every vertex of the other chosen patches.
    """
    cfg = config or GadgetConfig()
    if need_t < 0 or need_f < 0:
        raise ValueError("patch counts must be non-negative")
    wanted = {"T": need_t, "F": need_f}
    chosen: list[Patch] = []
    if need_t == need_f == 0:
        return chosen
    origin: Coord = (0, 0, 0)
    sep = cfg.separation
    kinds: tuple[TriangleKind, TriangleKind] = ("T", "F")
    for base in hp_vertices(p):
        if hex_distance(p, origin, base) < sep:
            continue
        for kind in kinds:
            if not wanted[kind]:
                continue
            patch = make_patch(p, base, kind)
            if _clear_of(p, patch, origin, chosen, sep):
                chosen.append(patch)
                wanted[kind] -= 1
        if not wanted["T"] and not wanted["F"]:
            logger.debug("placed %d patches on H_%d", len(chosen), p)
            return chosen
    raise PlacementError(
        f"cannot place {need_t} T- and {need_f} F-patches on H_{p} "
        f"with separation {sep}"
    )


def _clear_of(
    p: int, patch: Patch, origin: Coord, chosen: list[Patch], sep: int
) -> bool:
    if any(hex_distance(p, origin, x) < sep for x in patch.vertices):
        return False
    for other in chosen:
        gap = hex_distance(p, patch.base, other.base)
        if gap >= sep + 4:
            continue
        if gap < sep - 4:
            return False
        if any(
            hex_distance(p, x, y) < sep for x in patch.vertices for y in other.vertices
        ):
            return False
    return True


@dataclass(frozen=True, eq=False)
class GadgetGraph:
    """One or more H_p copies, possibly glued together by joins."""

    p: int
    graph: nx.DiGraph
    copies: tuple[str, ...]
    joins: tuple[Join, ...] = ()
    formula: Cnf3Formula | None = None
    relabel: Mapping[str, Mapping[Coord, Vertex]] = field(default_factory=dict)

    @property
    def q(self) -> int:
        return self.formula.q if self.formula is not None else 0

    @property
    def r(self) -> int:
        return len(self.formula.clauses) if self.formula is not None else 0

    def vertex(self, copy: str, coords: Coord) -> Vertex:
        """Label of a copy's vertex after join identifications."""
        return self.relabel.get(copy, {}).get(coords, (copy, coords))

    def patch_vertices(self) -> set[Vertex]:
        found: set[Vertex] = set()
        for join in self.joins:
            for copy, patch in zip(join.copies, join.patches, strict=True):
                found.update(self.vertex(copy, x) for x in patch.vertices)
        return found


def build_hp(p: int) -> GadgetGraph:
    if p < 3:
        raise PreconditionError(f"H_p needs p >= 3, got {p}")
    graph = nx.DiGraph()
    for v in hp_vertices(p):
        graph.add_node(("H", v), copy="H", coords=v)
    graph.add_edges_from((("H", u), ("H", v)) for u, v in hp_edges(p))
    return GadgetGraph(p=p, graph=nx.freeze(graph), copies=("H",))


def copy_triangles(
    g: GadgetGraph, copy: str, kind: TriangleKind
) -> Iterator[tuple[Coord, tuple[Vertex, Vertex, Vertex]]]:
    """Every triangle of one family in a copy, keyed by base coordinates."""
    for base in hp_vertices(g.p):
        a, b, c = triangle(g.p, base, kind)
        yield base, (g.vertex(copy, a), g.vertex(copy, b), g.vertex(copy, c))


def enumerate_tf_triangles(
    g: GadgetGraph, copy: str | None = None
) -> tuple[list[tuple[Vertex, Vertex, Vertex]], list[tuple[Vertex, Vertex, Vertex]]]:
    name = copy if copy is not None else g.copies[0]
    if name not in g.copies:
        raise KeyError(f"unknown copy '{name}'")
    return (
        [tri for _, tri in copy_triangles(g, name, "T")],
        [tri for _, tri in copy_triangles(g, name, "F")],
    )


def check_gadget_graph(g: GadgetGraph) -> list[str]:
    """Structural defects: short cycles, unbalanced or irregular vertices."""
    graph = g.graph
    defects: list[str] = []
    for u, v in graph.edges():
        if u == v:
            defects.append(f"self-loop at {u}")
        elif graph.has_edge(v, u):
            defects.append(f"2-cycle between {u} and {v}")
    touched = g.patch_vertices()
    for node in graph.nodes:
        indeg, outdeg = graph.in_degree(node), graph.out_degree(node)
        if indeg != outdeg:
            defects.append(f"{node} has indegree {indeg} and outdegree {outdeg}")
        elif node not in touched and indeg != 3:
            defects.append(f"{node} lies outside every patch but has degree {indeg}")
    return defects


__all__ = [
    "DIRECTIONS",
    "Coord",
    "GadgetConfig",
    "GadgetGraph",
    "Patch",
    "TriangleKind",
    "Vertex",
    "build_hp",
    "check_gadget_graph",
    "copy_triangles",
    "enumerate_tf_triangles",
    "hex_distance",
    "hp_edges",
    "hp_vertices",
    "make_patch",
    "select_patches",
    "shift",
    "triangle",
    "triangle_base",
]
