"""Weights, verification reports, palettes, and the interchange format."""

import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from coronamagic import (
    CoronaSpec,
    DocumentError,
    EdgeLabeling,
    Family,
    Graph,
    LabelingShapeError,
    construct,
    corona,
    labeling_from_document,
    labeling_to_document,
    load_document,
    palette_of,
    verify,
    weights,
)

FAMILY_MIN = {Family.PATH: 2, Family.CYCLE: 3, Family.COMPLETE: 2}


@st.composite
def spec_and_random_labeling(draw):
    family = draw(st.sampled_from(list(Family)))
    n = draw(st.integers(FAMILY_MIN[family], 7))
    m = draw(st.integers(1, 3))
    spec = CoronaSpec(family, n, m)
    seed = draw(st.integers(0, 2**31))
    labels = list(range(1, spec.edge_count + 1))
    random.Random(seed).shuffle(labels)
    return spec, labels


def test_weights_on_path8_construction():
    result = construct(CoronaSpec(Family.PATH, 8, 1))
    cg = corona(result.spec)
    w = weights(cg.graph, result.labeling)
    assert w[0] == 19
    assert w[1] == 21
    assert w[7] == 9


def test_weights_single_edge():
    g = Graph.from_edges(2, [(0, 1)])
    assert weights(g, [1]).weights == (1, 1)


def test_weights_cycle5_exceptional_vertex():
    result = construct(CoronaSpec(Family.CYCLE, 5, 1))
    cg = corona(result.spec)
    w = weights(cg.graph, result.labeling)
    assert w[4] == 10  # (3n+5)/2 at n=5


def test_weights_shape_error():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(LabelingShapeError):
        weights(g, [1, 2, 3])


def test_verify_path5_palette():
    result = construct(CoronaSpec(Family.PATH, 5, 1))
    report = verify(corona(result.spec).graph, result.labeling)
    assert report.is_local_antimagic
    assert report.palette_size == 7
    assert report.palette == (3, 6, 7, 8, 9, 12, 14)


def test_verify_flags_duplicate_labels():
    triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    report = verify(triangle, [1, 1, 2])
    assert not report.is_bijection
    assert not report.is_local_antimagic
    assert report.duplicate_or_missing == (1, 3)


def test_verify_cycle4_k2_palette_composition():
    result = construct(CoronaSpec(Family.CYCLE, 4, 2))
    cg = corona(result.spec)
    report = verify(cg.graph, result.labeling)
    leaf_labels = sorted(
        result.labeling[cg.pendant_edges[leaf]]
        for leaves in cg.leaves
        for leaf in leaves
    )
    assert report.palette == tuple(sorted(leaf_labels + [18, 26]))
    assert report.palette_size == 10


def test_verify_reports_conflicts_deterministically():
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    report = verify(path, [1, 2, 3])
    # w = (1, 3, 5, 3): only the middle pair collides.
    assert report.is_bijection
    assert not report.is_local_antimagic
    assert report.conflicting_pairs == ((1, 2),)
    assert report == verify(path, [1, 2, 3])


def test_palette_of_examples():
    assert palette_of([5, 5, 7]) == (5, 7)
    assert palette_of([]) == ()
    result = construct(CoronaSpec(Family.PATH, 3, 1))
    w = weights(corona(result.spec).graph, result.labeling)
    assert len(palette_of(w)) == 4


@given(spec_and_random_labeling())
@settings(max_examples=60)
def test_weight_sum_identity_for_random_bijections(case):
    spec, labels = case
    cg = corona(spec)
    w = weights(cg.graph, labels)
    e = cg.graph.edge_count
    assert sum(w.weights) == e * (e + 1)


@given(spec_and_random_labeling())
@settings(max_examples=40)
def test_leaf_weight_equals_pendant_label(case):
    spec, labels = case
    cg = corona(spec)
    w = weights(cg.graph, labels)
    for leaves in cg.leaves:
        for leaf in leaves:
            assert w[leaf] == labels[cg.pendant_edges[leaf]]


@given(spec_and_random_labeling())
@settings(max_examples=40)
def test_verified_palette_has_all_leaf_colors(case):
    spec, labels = case
    cg = corona(spec)
    report = verify(cg.graph, labels)
    if report.is_local_antimagic:
        assert report.palette_size >= spec.m * spec.n


def test_document_round_trip():
    result = construct(CoronaSpec(Family.CYCLE, 8, 2))
    cg = corona(result.spec)
    doc = labeling_to_document(cg, result.labeling, metadata={"note": "x"})
    assert len(doc["labels"]) == 24
    cg2, labeling2 = labeling_from_document(doc)
    assert cg2.spec == result.spec
    assert labeling2.labels == result.labeling.labels
    # JSON text round trip as well.
    cg3, labeling3 = load_document(json.dumps(doc))
    assert labeling3.labels == result.labeling.labels


def test_document_accepts_shuffled_entries_and_swapped_endpoints():
    result = construct(CoronaSpec(Family.PATH, 3, 1))
    doc = labeling_to_document(corona(result.spec), result.labeling)
    entries = doc["labels"]
    entries.reverse()
    entries[0]["u"], entries[0]["v"] = entries[0]["v"], entries[0]["u"]
    _, labeling = labeling_from_document(doc)
    assert labeling.labels == result.labeling.labels


@pytest.mark.parametrize(
    "mutate, field_hint",
    [
        (lambda d: d.pop("family"), "family"),
        (lambda d: d.update(family="star"), "family"),
        (lambda d: d.update(n="four"), "n"),
        (lambda d: d["labels"].pop(), "labels"),
        (lambda d: d["labels"].__setitem__(0, {"u": 0, "v": 9, "label": 1}), "labels[0]"),
        (lambda d: d["labels"][1].pop("label"), "labels[1].label"),
        (lambda d: d["labels"].append(dict(d["labels"][0])), "labels"),
    ],
)
def test_document_validation_errors(mutate, field_hint):
    result = construct(CoronaSpec(Family.PATH, 3, 1))
    doc = labeling_to_document(corona(result.spec), result.labeling)
    mutate(doc)
    with pytest.raises(DocumentError) as err:
        labeling_from_document(doc)
    assert field_hint.split("[")[0] in str(err.value)


def test_load_document_reports_json_position():
    with pytest.raises(DocumentError) as err:
        load_document("{not json")
    assert "line 1" in str(err.value)


def test_edge_labeling_coercion():
    lab = EdgeLabeling.coerce([3, 1, 2])
    assert lab.labels == (3, 1, 2)
    assert EdgeLabeling.coerce(lab) is lab
    assert list(lab) == [3, 1, 2]
    assert lab[0] == 3 and len(lab) == 3
