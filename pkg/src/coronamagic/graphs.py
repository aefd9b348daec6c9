"""Graph model and generators for corona products with null graphs.

The corona product of a base graph with the edgeless graph on m vertices
attaches m pendant leaves to every base vertex.  Everything downstream
(labelings, constructions, the exact oracle) relies on the canonical
layout fixed here: spine vertices first in base order, then leaves
grouped by owner; base edges first in base order, then pendant edges
grouped by owner.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Family(str, Enum):
    """Base-graph family of a corona product."""

    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"


_FAMILY_MIN_N = {Family.PATH: 2, Family.CYCLE: 3, Family.COMPLETE: 2}


class InvalidSpecError(ValueError):
    """Corona parameters outside the family's domain (e.g. a 2-cycle)."""


class UnsupportedSpecError(ValueError):
    """A structurally valid corona instance that no implemented result covers."""


@dataclass(frozen=True)
class CoronaSpec:
    """One corona instance: base family, base order n, and leaves per vertex m."""

    family: Family
    n: int
    m: int = 1

    def __post_init__(self) -> None:
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        minimum = _FAMILY_MIN_N[family]
        if self.n < minimum:
            raise InvalidSpecError(
                f"family {family.value!r} needs n >= {minimum}, got n={self.n}"
            )
        if self.m < 1:
            raise InvalidSpecError(f"m >= 1 required, got m={self.m}")

    @property
    def base_edge_count(self) -> int:
        if self.family is Family.PATH:
            return self.n - 1
        if self.family is Family.CYCLE:
            return self.n
        return self.n * (self.n - 1) // 2

    @property
    def vertex_count(self) -> int:
        return self.n * (1 + self.m)

    @property
    def edge_count(self) -> int:
        return self.base_edge_count + self.m * self.n

    def label(self) -> str:
        return f"{self.family.value}(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with an explicit edge order.

    ``edges[k]`` is the vertex pair (u, v) with u < v, and
    ``adjacency[v]`` lists the indices of the edges incident to v.
    Instances are immutable; build them through :meth:`from_edges`,
    which validates simplicity and derives the adjacency lists.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(
        cls, vertex_count: int, edges: Iterable[tuple[int, int]]
    ) -> "Graph":
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        normalized: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise ValueError(f"duplicate edge {pair}")
            seen.add(pair)
            normalized.append(pair)
        incidence: list[list[int]] = [[] for _ in range(vertex_count)]
        for idx, (u, v) in enumerate(normalized):
            incidence[u].append(idx)
            incidence[v].append(idx)
        return cls(
            vertex_count=vertex_count,
            edges=tuple(normalized),
            adjacency=tuple(tuple(lst) for lst in incidence),
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = []
        for e in self.adjacency[v]:
            a, b = self.edges[e]
            out.append(b if a == v else a)
        return tuple(out)

    def edge_index_map(self) -> dict[tuple[int, int], int]:
        return {pair: idx for idx, pair in enumerate(self.edges)}

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.vertex_count) if not self.adjacency[v])

    def k2_component_edges(self) -> tuple[int, ...]:
        """Indices of edges whose component is a bare K2 (both endpoints degree 1)."""
        return tuple(
            idx
            for idx, (u, v) in enumerate(self.edges)
            if self.degree(u) == 1 and self.degree(v) == 1
        )


def make_base(family: Family, n: int) -> Graph:
    """Path, cycle, or complete graph on vertices 0..n-1 in canonical edge order.

    Paths list edges (0,1), (1,2), ...; cycles append the closing edge
    (n-1, 0) last; complete graphs use lexicographic edge order.
    """
    family = Family(family)
    if n < _FAMILY_MIN_N[family]:
        raise InvalidSpecError(
            f"family {family.value!r} needs n >= {_FAMILY_MIN_N[family]}, got n={n}"
        )
    if family is Family.PATH:
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family is Family.CYCLE:
        edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
    else:
        edges = list(itertools.combinations(range(n), 2))
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class CoronaGraph:
    """A corona product together with its role annotations.

    ``spine`` holds the base-graph vertices, ``leaves[i]`` the pendant
    vertices owned by spine vertex i, and ``pendant_edges`` maps each
    leaf to the index of its unique incident edge.
    """

    spec: CoronaSpec
    graph: Graph
    spine: tuple[int, ...]
    leaves: tuple[tuple[int, ...], ...]
    pendant_edges: dict[int, int]

    @property
    def base_edge_count(self) -> int:
        return self.spec.base_edge_count

    def leaf_vertex(self, i: int, j: int) -> int:
        """Vertex index of leaf j (0-based) owned by spine vertex i."""
        return self.spec.n + i * self.spec.m + j

    def pendant_edge_index(self, i: int, j: int) -> int:
        """Edge index of the pendant edge to leaf j of spine vertex i."""
        return self.base_edge_count + i * self.spec.m + j


def corona(spec: CoronaSpec) -> CoronaGraph:
    """Corona product of the base graph with m isolated leaves per vertex.

    Layout is deterministic: leaf j of spine i is vertex n + i*m + j, and
    its pendant edge follows all base edges, grouped by owner.
    """
    base = make_base(spec.family, spec.n)
    n, m = spec.n, spec.m
    edges = list(base.edges)
    for i in range(n):
        for j in range(m):
            edges.append((i, n + i * m + j))
    graph = Graph.from_edges(n * (1 + m), edges)
    leaves = tuple(
        tuple(n + i * m + j for j in range(m)) for i in range(n)
    )
    pendant_edges = {
        n + i * m + j: spec.base_edge_count + i * m + j
        for i in range(n)
        for j in range(m)
    }
    return CoronaGraph(
        spec=spec, graph=graph, spine=tuple(range(n)),
        leaves=leaves, pendant_edges=pendant_edges,
    )


def vertex_name(spec: CoronaSpec, v: int) -> str:
    """Canonical DOT name: s<i> for spine vertices, l<i>_<j> for leaves."""
    if v < spec.n:
        return f"s{v}"
    i, j = divmod(v - spec.n, spec.m)
    return f"l{i}_{j}"


def to_dot(
    cg: CoronaGraph,
    labels: Sequence[int] | None = None,
    weights: Sequence[int] | None = None,
) -> str:
    """Render a corona graph as Graphviz DOT.

    Edge labels and per-vertex weight annotations are included when given.
    """
    spec = cg.spec
    lines = [f'graph "{spec.label()}" {{']
    for v in range(cg.graph.vertex_count):
        name = vertex_name(spec, v)
        if weights is not None:
            lines.append(f'  {name} [label="{name}\\nw={weights[v]}"];')
        else:
            lines.append(f"  {name};")
    for idx, (u, v) in enumerate(cg.graph.edges):
        left, right = vertex_name(spec, u), vertex_name(spec, v)
        if labels is not None:
            lines.append(f'  {left} -- {right} [label="{labels[idx]}"];')
        else:
            lines.append(f"  {left} -- {right};")
    lines.append("}")
    return "\n".join(lines) + "\n"
