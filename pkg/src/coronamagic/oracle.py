"""Exact computation of the local antimagic chromatic number on small graphs.

The search assigns labels to edges in a fixed order (highest endpoint
degree sum first, so spine conflicts surface early) and prunes on three
sound rules:

* adjacency: as soon as both endpoints of an edge have all their labels,
  equal weights kill the branch;
* palette: the number of distinct completed weights never decreases, and
  leaves always contribute pairwise distinct colors not exceeding |E|,
  so max(distinct completed, leaves + distinct completed weights above
  |E|) lower-bounds the final palette;
* symmetry: labelings are restricted to lexicographic leaders under a
  supplied set of graph automorphisms.  Pendant edges sharing an owner
  are interchangeable, so their labels are forced ascending; corona
  layouts additionally contribute path reflections, cycle rotations and
  reflections, and clique vertex permutations.

Only a fully exhausted search (``exhausted=True``) proves a lower bound;
running out of node budget reports an upper bound and never masquerades
as a proof.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .graphs import CoronaGraph, Family, Graph
from .labelings import EdgeLabeling


class OracleInputError(ValueError):
    """The graph admits no local antimagic labeling question (K2 part or isolated vertex)."""


class BudgetExceededError(RuntimeError):
    """An exhaustive-mode call cannot honor its budget."""


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the exact search.

    ``max_edges`` caps exhaustive mode (default 12); ``max_nodes`` caps
    assignment attempts; ``seed`` fixes the candidate order used by the
    target-palette finder.
    """

    max_edges: int = 12
    max_nodes: int | None = None
    seed: int = 0


@dataclass(frozen=True)
class ExactResult:
    """Exact value with certificate; exact only when ``exhausted`` is True."""

    chi_la: int | None
    certificate: EdgeLabeling | None
    nodes_explored: int
    exhausted: bool


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a target-palette search; ``exhausted`` distinguishes
    a proven miss from a budget miss."""

    labeling: EdgeLabeling | None
    nodes_explored: int
    exhausted: bool

    @property
    def found(self) -> bool:
        return self.labeling is not None


def _as_graph(graph: Graph | CoronaGraph) -> tuple[Graph, CoronaGraph | None]:
    if isinstance(graph, CoronaGraph):
        return graph.graph, graph
    return graph, None


def _validate_input(graph: Graph) -> None:
    isolated = graph.isolated_vertices()
    if isolated:
        raise OracleInputError(f"isolated vertices {isolated} have no weight class")
    k2 = graph.k2_component_edges()
    if k2:
        raise OracleInputError(
            f"K2 components (edge indices {k2}) admit no local antimagic labeling"
        )


def corona_automorphisms(cg: CoronaGraph) -> list[tuple[int, ...]]:
    """Non-identity vertex automorphisms of the canonical corona layout.

    Leaf permutations within an owner are omitted (the searcher breaks
    those separately); what remains are base-graph symmetries extended
    by the identity map on leaf slots.  For complete bases with n > 6
    only adjacent spine transpositions are returned to keep the list
    small; a subset of the group is always sound.
    """
    n, m = cg.spec.n, cg.spec.m
    family = cg.spec.family

    def extend(spine_perm: tuple[int, ...]) -> tuple[int, ...]:
        mapping = list(spine_perm)
        for i in range(n):
            for j in range(m):
                mapping.append(n + spine_perm[i] * m + j)
        return tuple(mapping)

    spine_perms: list[tuple[int, ...]] = []
    if family is Family.PATH:
        spine_perms.append(tuple(n - 1 - i for i in range(n)))
    elif family is Family.CYCLE:
        for k in range(1, n):
            spine_perms.append(tuple((i + k) % n for i in range(n)))
        for s in range(n):
            spine_perms.append(tuple((s - i) % n for i in range(n)))
    else:
        if n <= 6:
            identity = tuple(range(n))
            spine_perms.extend(
                p for p in itertools.permutations(range(n)) if p != identity
            )
        else:
            for i in range(n - 1):
                perm = list(range(n))
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                spine_perms.append(tuple(perm))
    identity = tuple(range(n))
    return [extend(p) for p in spine_perms if p != identity]


def _edge_permutation(graph: Graph, vperm: tuple[int, ...]) -> tuple[int, ...]:
    index_of = graph.edge_index_map()
    mapping = []
    for u, v in graph.edges:
        a, b = vperm[u], vperm[v]
        pair = (a, b) if a < b else (b, a)
        if pair not in index_of:
            raise ValueError(f"vertex map is not an automorphism: ({u},{v}) -> {pair}")
        mapping.append(index_of[pair])
    return tuple(mapping)


class _Engine:
    """Shared backtracking core for the exact, finder, and counting modes."""

    def __init__(
        self,
        graph: Graph,
        *,
        twin_breaking: bool,
        palette_pruning: bool,
        automorphisms: list[tuple[int, ...]] | None,
        max_nodes: int | None,
        candidates: list[int] | None = None,
    ):
        self.graph = graph
        edge_count = graph.edge_count
        self.edge_count = edge_count
        degsum = [
            graph.degree(u) + graph.degree(v) for (u, v) in graph.edges
        ]
        self.order = sorted(range(edge_count), key=lambda e: (-degsum[e], e))
        self.endpoints = [graph.edges[e] for e in self.order]
        self.adj_vertices = [graph.neighbors(v) for v in range(graph.vertex_count)]
        self.degrees = [graph.degree(v) for v in range(graph.vertex_count)]
        self.leaf_total = sum(1 for d in self.degrees if d == 1)
        self.max_nodes = max_nodes
        self.palette_pruning = palette_pruning
        self.candidates = candidates or list(range(1, edge_count + 1))

        # Twin chains: pendant edges of a common owner must carry
        # ascending labels in assignment order.
        self.twin_prev_edge = [-1] * edge_count  # by position
        if twin_breaking:
            last_for_owner: dict[int, int] = {}
            for pos, e in enumerate(self.order):
                u, v = graph.edges[e]
                if self.degrees[u] == 1 and self.degrees[v] == 1:
                    continue
                leaf_end = u if self.degrees[u] == 1 else (v if self.degrees[v] == 1 else None)
                if leaf_end is None:
                    continue
                owner = v if leaf_end == u else u
                if owner in last_for_owner:
                    self.twin_prev_edge[pos] = last_for_owner[owner]
                last_for_owner[owner] = e

        self.sigma_seq: list[list[int]] = []
        if automorphisms:
            for vperm in automorphisms:
                edge_perm = _edge_permutation(graph, vperm)
                self.sigma_seq.append([edge_perm[e] for e in self.order])

        self.labels = [0] * edge_count
        self.weight = [0] * graph.vertex_count
        self.remaining = list(self.degrees)
        self.used = [False] * (edge_count + 2)
        self.weight_count: dict[int, int] = {}
        self.distinct = 0
        self.distinct_over = 0
        self.nodes = 0
        self.aborted = False

    # Weight bookkeeping for a vertex that just became saturated.
    def _register(self, x: int) -> bool:
        w = self.weight[x]
        count = self.weight_count.get(w, 0)
        self.weight_count[w] = count + 1
        if count == 0:
            self.distinct += 1
            if w > self.edge_count:
                self.distinct_over += 1
        for y in self.adj_vertices[x]:
            if self.remaining[y] == 0 and y != x and self.weight[y] == w:
                return False
        return True

    def _unregister(self, x: int) -> None:
        w = self.weight[x]
        count = self.weight_count[w] - 1
        if count:
            self.weight_count[w] = count
        else:
            del self.weight_count[w]
            self.distinct -= 1
            if w > self.edge_count:
                self.distinct_over -= 1

    def _lex_ok(self) -> bool:
        labels = self.labels
        for seq in self.sigma_seq:
            for pos, e in enumerate(self.order):
                a = labels[e]
                if a == 0:
                    break
                b = labels[seq[pos]]
                if b == 0 or a < b:
                    break
                if a > b:
                    return False
        return True

    def run(self, *, prune_at, on_complete) -> None:
        """Depth-first search; ``prune_at(lb)`` and ``on_complete()`` steer it.

        ``prune_at`` sees the current palette lower bound and returns
        True to cut the branch; ``on_complete`` fires on every full
        conflict-free assignment and returns True to stop the search.
        """
        edge_count = self.edge_count
        order = self.order
        endpoints = self.endpoints
        labels = self.labels
        used = self.used
        weight = self.weight
        remaining = self.remaining
        candidates = self.candidates
        twin_prev = self.twin_prev_edge
        check_lex = bool(self.sigma_seq)
        max_nodes = self.max_nodes

        def dfs(pos: int) -> bool:
            if pos == edge_count:
                return on_complete()
            e = order[pos]
            u, v = endpoints[pos]
            prev_edge = twin_prev[pos]
            floor = labels[prev_edge] if prev_edge >= 0 else 0
            for lab in candidates:
                if used[lab] or lab <= floor:
                    continue
                if max_nodes is not None and self.nodes >= max_nodes:
                    self.aborted = True
                    return True
                self.nodes += 1
                used[lab] = True
                labels[e] = lab
                weight[u] += lab
                weight[v] += lab
                remaining[u] -= 1
                remaining[v] -= 1
                sat_u = remaining[u] == 0
                sat_v = remaining[v] == 0
                ok = True
                if sat_u:
                    ok = self._register(u)
                if sat_v:
                    ok = self._register(v) and ok
                if ok and self.palette_pruning:
                    lower = self.leaf_total + self.distinct_over
                    if self.distinct > lower:
                        lower = self.distinct
                    ok = not prune_at(lower)
                if ok and check_lex:
                    ok = self._lex_ok()
                stop = dfs(pos + 1) if ok else False
                if sat_v:
                    self._unregister(v)
                if sat_u:
                    self._unregister(u)
                remaining[u] += 1
                remaining[v] += 1
                weight[u] -= lab
                weight[v] -= lab
                labels[e] = 0
                used[lab] = False
                if stop:
                    return True
            return False

        dfs(0)


def _run_exact(
    graph: Graph,
    budget: SearchBudget,
    automorphisms: list[tuple[int, ...]] | None,
    use_symmetry: bool,
) -> ExactResult:
    engine = _Engine(
        graph,
        twin_breaking=use_symmetry,
        palette_pruning=True,
        automorphisms=automorphisms if use_symmetry else None,
        max_nodes=budget.max_nodes,
    )
    best: list = [None, None]  # palette, labels

    def prune_at(lower: int) -> bool:
        return best[0] is not None and lower >= best[0]

    def on_complete() -> bool:
        palette = engine.distinct
        if best[0] is None or palette < best[0]:
            best[0] = palette
            best[1] = tuple(engine.labels)
        return False

    engine.run(prune_at=prune_at, on_complete=on_complete)
    certificate = EdgeLabeling(best[1]) if best[1] is not None else None
    return ExactResult(
        chi_la=best[0],
        certificate=certificate,
        nodes_explored=engine.nodes,
        exhausted=not engine.aborted,
    )


def _chi_la_by_enumeration(graph: Graph, max_nodes: int | None) -> ExactResult:
    """Plain full enumeration of all label bijections (the unpruned reference)."""
    edge_count = graph.edge_count
    edges = graph.edges
    vertex_count = graph.vertex_count
    best: int | None = None
    best_labels: tuple[int, ...] | None = None
    nodes = 0
    aborted = False
    for perm in itertools.permutations(range(1, edge_count + 1)):
        if max_nodes is not None and nodes >= max_nodes:
            aborted = True
            break
        nodes += 1
        weight = [0] * vertex_count
        for idx, (u, v) in enumerate(edges):
            weight[u] += perm[idx]
            weight[v] += perm[idx]
        if any(weight[u] == weight[v] for (u, v) in edges):
            continue
        palette = len(set(weight))
        if best is None or palette < best:
            best = palette
            best_labels = perm
    certificate = EdgeLabeling(best_labels) if best_labels is not None else None
    return ExactResult(
        chi_la=best, certificate=certificate, nodes_explored=nodes, exhausted=not aborted
    )


def exact_chi_la(
    graph: Graph | CoronaGraph,
    budget: SearchBudget | None = None,
    *,
    automorphisms: list[tuple[int, ...]] | None = None,
    use_symmetry: bool = True,
    use_pruning: bool = True,
) -> ExactResult:
    """Exact local antimagic chromatic number by exhaustive search.

    Passing a corona graph turns on its layout symmetries automatically.
    ``use_pruning=False`` switches to plain enumeration of every
    bijection (the differential-testing reference; symmetry is ignored).
    ``nodes_explored`` counts label assignment attempts.
    """
    budget = budget or SearchBudget()
    plain, cg = _as_graph(graph)
    _validate_input(plain)
    if plain.edge_count > budget.max_edges:
        raise BudgetExceededError(
            f"{plain.edge_count} edges exceed the exhaustive cap "
            f"{budget.max_edges}; raise SearchBudget.max_edges to force"
        )
    if not use_pruning:
        return _chi_la_by_enumeration(plain, budget.max_nodes)
    if automorphisms is None and cg is not None and use_symmetry:
        automorphisms = corona_automorphisms(cg)
    return _run_exact(plain, budget, automorphisms, use_symmetry)


def find_labeling(
    graph: Graph | CoronaGraph,
    target_palette: int,
    budget: SearchBudget | None = None,
    *,
    automorphisms: list[tuple[int, ...]] | None = None,
    use_symmetry: bool = True,
) -> SearchOutcome:
    """First labeling (in deterministic seeded order) with at most the target palette.

    A miss with ``exhausted=True`` is a proof that no such labeling
    exists; a miss after budget exhaustion proves nothing.
    """
    budget = budget or SearchBudget()
    plain, cg = _as_graph(graph)
    _validate_input(plain)
    if automorphisms is None and cg is not None and use_symmetry:
        automorphisms = corona_automorphisms(cg)
    candidates = list(range(1, plain.edge_count + 1))
    random.Random(budget.seed).shuffle(candidates)
    engine = _Engine(
        plain,
        twin_breaking=use_symmetry,
        palette_pruning=True,
        automorphisms=automorphisms if use_symmetry else None,
        max_nodes=budget.max_nodes,
        candidates=candidates,
    )
    hit: list[tuple[int, ...] | None] = [None]

    def prune_at(lower: int) -> bool:
        return lower > target_palette

    def on_complete() -> bool:
        if engine.distinct <= target_palette:
            hit[0] = tuple(engine.labels)
            return True
        return False

    engine.run(prune_at=prune_at, on_complete=on_complete)
    labeling = EdgeLabeling(hit[0]) if hit[0] is not None else None
    return SearchOutcome(
        labeling=labeling,
        nodes_explored=engine.nodes,
        exhausted=not engine.aborted and labeling is None,
    )


def count_optimal_labelings(
    graph: Graph | CoronaGraph,
    budget: SearchBudget | None = None,
) -> int:
    """Number of label bijections achieving the exact chromatic number.

    Counts plain labelings (no symmetry quotient).  Exceeding the node
    budget raises, because a partial count is worthless.
    """
    budget = budget or SearchBudget()
    plain, _ = _as_graph(graph)
    exact = exact_chi_la(graph, budget)
    if not exact.exhausted or exact.chi_la is None:
        raise BudgetExceededError("exact value not certified within budget")
    engine = _Engine(
        plain,
        twin_breaking=False,
        palette_pruning=True,
        automorphisms=None,
        max_nodes=budget.max_nodes,
    )
    target = exact.chi_la
    total = [0]

    def prune_at(lower: int) -> bool:
        return lower > target

    def on_complete() -> bool:
        if engine.distinct <= target:
            total[0] += 1
        return False

    engine.run(prune_at=prune_at, on_complete=on_complete)
    if engine.aborted:
        raise BudgetExceededError("node budget exhausted during counting")
    return total[0]
