"""Edge labelings, vertex weights, and the local antimagic verifier.

A labeling assigns one positive integer per edge; it is valid when the
values form a bijection onto 1..|E| and the induced vertex weights
(sums of incident labels) differ across every edge.  The verifier never
rejects bad input, it reports what is wrong, so that partial search
states and user-supplied files get diagnostics instead of exceptions.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .graphs import CoronaGraph, CoronaSpec, Family, Graph, InvalidSpecError, corona


class LabelingShapeError(ValueError):
    """Labeling length does not match the graph's edge count."""


@dataclass(frozen=True)
class EdgeLabeling:
    """Edge labels in canonical edge order, intended to be a permutation of 1..|E|."""

    labels: tuple[int, ...]

    @classmethod
    def coerce(cls, values: "EdgeLabeling | Sequence[int]") -> "EdgeLabeling":
        if isinstance(values, EdgeLabeling):
            return values
        return cls(tuple(int(x) for x in values))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __getitem__(self, idx: int) -> int:
        return self.labels[idx]


@dataclass(frozen=True)
class WeightVector:
    """Per-vertex sums of incident edge labels (the induced vertex colors)."""

    weights: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, idx: int) -> int:
        return self.weights[idx]


def weights(graph: Graph, labeling: EdgeLabeling | Sequence[int]) -> WeightVector:
    """Vertex weights under a labeling.  No bijection check is performed here."""
    labeling = EdgeLabeling.coerce(labeling)
    if len(labeling) != graph.edge_count:
        raise LabelingShapeError(
            f"labeling has {len(labeling)} entries for {graph.edge_count} edges"
        )
    sums = [0] * graph.vertex_count
    for idx, (u, v) in enumerate(graph.edges):
        lab = labeling[idx]
        sums[u] += lab
        sums[v] += lab
    return WeightVector(tuple(sums))


def palette_of(weight_vector: WeightVector | Sequence[int]) -> tuple[int, ...]:
    """Sorted distinct weights.  A list rather than a set keeps reports byte-stable."""
    values = (
        weight_vector.weights
        if isinstance(weight_vector, WeightVector)
        else tuple(weight_vector)
    )
    return tuple(sorted(set(values)))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the bijection, adjacency, and palette checks.

    ``is_local_antimagic`` is False whenever the labeling is not a
    bijection, regardless of the weights.  Witness lists are ordered
    deterministically.
    """

    is_bijection: bool
    duplicate_or_missing: tuple[int, ...]
    is_local_antimagic: bool
    conflicting_pairs: tuple[tuple[int, int], ...]
    palette: tuple[int, ...]
    palette_size: int

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "is_bijection": self.is_bijection,
            "duplicate_or_missing": list(self.duplicate_or_missing),
            "is_local_antimagic": self.is_local_antimagic,
            "conflicting_pairs": [list(p) for p in self.conflicting_pairs],
            "palette": list(self.palette),
            "palette_size": self.palette_size,
        }


def verify(graph: Graph, labeling: EdgeLabeling | Sequence[int]) -> VerificationReport:
    """Decide whether a labeling is local antimagic and report its palette.

    The report is pure function output: identical inputs give an
    identical report, and all problems (duplicate labels, missing
    values, equal-weight adjacent pairs) are returned as witnesses.
    """
    labeling = EdgeLabeling.coerce(labeling)
    if len(labeling) != graph.edge_count:
        raise LabelingShapeError(
            f"labeling has {len(labeling)} entries for {graph.edge_count} edges"
        )
    edge_count = graph.edge_count
    counts = Counter(labeling.labels)
    offending: set[int] = set()
    for value, cnt in counts.items():
        if cnt > 1 or not (1 <= value <= edge_count):
            offending.add(value)
    for value in range(1, edge_count + 1):
        if value not in counts:
            offending.add(value)
    is_bijection = not offending

    weight_vector = weights(graph, labeling)
    conflicts = tuple(
        (u, v)
        for (u, v) in graph.edges
        if weight_vector[u] == weight_vector[v]
    )
    palette = palette_of(weight_vector)
    return VerificationReport(
        is_bijection=is_bijection,
        duplicate_or_missing=tuple(sorted(offending)),
        is_local_antimagic=is_bijection and not conflicts,
        conflicting_pairs=conflicts,
        palette=palette,
        palette_size=len(palette),
    )


class DocumentError(ValueError):
    """A labeling interchange document failed validation.

    ``field`` names the offending location, e.g. ``labels[3].u``.
    """

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(message if field is None else f"{field}: {message}")


def labeling_to_document(
    cg: CoronaGraph,
    labeling: EdgeLabeling | Sequence[int],
    metadata: Mapping[str, Any] | None = None,
) -> dict[str, Any]:
    """Serialize a labeling to the JSON interchange structure.

    Entries are emitted in canonical edge order; extra metadata goes
    under a separate key so verifiers can ignore it.
    """
    labeling = EdgeLabeling.coerce(labeling)
    if len(labeling) != cg.graph.edge_count:
        raise LabelingShapeError(
            f"labeling has {len(labeling)} entries for {cg.graph.edge_count} edges"
        )
    doc: dict[str, Any] = {
        "family": cg.spec.family.value,
        "n": cg.spec.n,
        "m": cg.spec.m,
        "labels": [
            {"u": u, "v": v, "label": labeling[idx]}
            for idx, (u, v) in enumerate(cg.graph.edges)
        ],
    }
    if metadata:
        doc["metadata"] = dict(metadata)
    return doc


def labeling_from_document(doc: Mapping[str, Any]) -> tuple[CoronaGraph, EdgeLabeling]:
    """Parse an interchange document back into a corona graph and labeling.

    The document must describe every edge of the canonical corona graph
    exactly once; anything else raises :class:`DocumentError` naming the
    offending field.
    """
    if not isinstance(doc, Mapping):
        raise DocumentError("document must be a JSON object")
    for key in ("family", "n", "m", "labels"):
        if key not in doc:
            raise DocumentError("missing required key", field=key)
    try:
        family = Family(str(doc["family"]))
    except ValueError:
        raise DocumentError(f"unknown family {doc['family']!r}", field="family")
    for key in ("n", "m"):
        if not isinstance(doc[key], int) or isinstance(doc[key], bool):
            raise DocumentError("must be an integer", field=key)
    try:
        spec = CoronaSpec(family, doc["n"], doc["m"])
    except InvalidSpecError as exc:
        raise DocumentError(str(exc), field="n")
    cg = corona(spec)
    index_of = cg.graph.edge_index_map()

    entries = doc["labels"]
    if not isinstance(entries, Sequence) or isinstance(entries, (str, bytes)):
        raise DocumentError("must be a list of {u, v, label} objects", field="labels")
    labels: list[int | None] = [None] * cg.graph.edge_count
    for pos, entry in enumerate(entries):
        where = f"labels[{pos}]"
        if not isinstance(entry, Mapping):
            raise DocumentError("entry must be an object", field=where)
        for key in ("u", "v", "label"):
            if key not in entry:
                raise DocumentError("missing key", field=f"{where}.{key}")
            if not isinstance(entry[key], int) or isinstance(entry[key], bool):
                raise DocumentError("must be an integer", field=f"{where}.{key}")
        u, v = entry["u"], entry["v"]
        pair = (u, v) if u < v else (v, u)
        if pair not in index_of:
            raise DocumentError(
                f"({u}, {v}) is not an edge of {spec.label()}", field=where
            )
        idx = index_of[pair]
        if labels[idx] is not None:
            raise DocumentError(f"edge ({u}, {v}) listed twice", field=where)
        labels[idx] = entry["label"]
    for idx, value in enumerate(labels):
        if value is None:
            u, v = cg.graph.edges[idx]
            raise DocumentError(f"edge ({u}, {v}) has no label", field="labels")
    return cg, EdgeLabeling(tuple(labels))  # type: ignore[arg-type]


def load_document(text: str) -> tuple[CoronaGraph, EdgeLabeling]:
    """Parse interchange JSON text; malformed JSON reports line and column."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno} column {exc.colno}")
    return labeling_from_document(doc)
