"""Every construction case: published instances, weight classes, composition."""

from fractions import Fraction

import pytest

from coronamagic import (
    ConstructionCase,
    CoronaSpec,
    Family,
    LayerCompositionError,
    LayerScheme,
    UnsupportedSpecError,
    classify,
    construct,
    construct_complete_k1,
    corona,
    layer_extension,
    verify,
    weights,
)


def spine_weights(result):
    cg = corona(result.spec)
    w = weights(cg.graph, result.labeling)
    return tuple(w[v] for v in cg.spine)


def test_path8_matches_published_labeling():
    result = construct(CoronaSpec(Family.PATH, 8, 1))
    assert result.labeling.labels[:7] == (4, 7, 3, 6, 2, 5, 1)
    assert result.labeling.labels[7:] == (15, 10, 9, 12, 11, 14, 13, 8)
    assert spine_weights(result) == (19, 21, 19, 21, 19, 21, 19, 9)
    assert result.claimed_palette_size == 10
    assert result.case is ConstructionCase.P_K1_N0MOD4


def test_cycle5_matches_published_labeling():
    result = construct(CoronaSpec(Family.CYCLE, 5, 1))
    assert result.labeling.labels[:5] == (5, 2, 4, 1, 3)
    assert result.labeling.labels[5:] == (8, 7, 10, 9, 6)
    assert spine_weights(result) == (16, 14, 16, 14, 10)
    assert result.claimed_palette_size == 7


def test_path4_two_leaves_spine_classes():
    result = construct(CoronaSpec(Family.PATH, 4, 2))
    assert spine_weights(result) == (15, 23, 15, 23)
    assert result.claimed_palette_size == 10


def test_small_stored_instances():
    assert construct(CoronaSpec(Family.PATH, 2, 1)).claimed_palette_size == 3
    assert construct(CoronaSpec(Family.PATH, 3, 1)).claimed_palette_size == 4
    assert construct(CoronaSpec(Family.CYCLE, 3, 1)).claimed_palette_size == 5
    assert construct(CoronaSpec(Family.CYCLE, 4, 1)).claimed_palette_size == 6
    assert classify(CoronaSpec(Family.CYCLE, 4, 1)) is ConstructionCase.C_K1_SMALL


def test_every_result_is_verifier_gated():
    # The gate re-runs the verifier; spot-check that results satisfy it.
    for spec in (
        CoronaSpec(Family.PATH, 13, 6),
        CoronaSpec(Family.CYCLE, 14, 7),
        CoronaSpec(Family.CYCLE, 11, 8),
        CoronaSpec(Family.COMPLETE, 7, 3),
    ):
        result = construct(spec)
        report = verify(corona(spec).graph, result.labeling)
        assert report.is_bijection and report.is_local_antimagic
        assert report.palette_size == result.claimed_palette_size
        assert spine_weights(result) == result.spine_weights_expected


def test_layer_pair_sums_are_constant_in_position():
    # Path pair starting at layer 3 adds (3n-1+i) + (5n-i) = 8n-1.
    for n in (2, 5, 12):
        for i in range(1, n + 1):
            assert (3 * n - 1 + i) + (5 * n - i) == 8 * n - 1
            assert (3 * n + i) + (5 * n + 1 - i) == 8 * n + 1


def test_layer_extension_agrees_with_construct():
    base = construct(CoronaSpec(Family.PATH, 6, 2))
    spec = CoronaSpec(Family.PATH, 6, 6)
    extended = layer_extension(base, spec, range(3, 7), LayerScheme.PATH)
    assert extended.labeling.labels == construct(spec).labeling.labels
    # Each added pair contributes a constant sum per spine vertex.
    cg = corona(spec)
    for i in range(6):
        pair = (
            extended.labeling[cg.pendant_edge_index(i, 2)]
            + extended.labeling[cg.pendant_edge_index(i, 3)]
        )
        assert pair == 8 * 6 - 1


def test_layer_extension_composition_errors():
    base = construct(CoronaSpec(Family.PATH, 6, 2))
    with pytest.raises(LayerCompositionError):
        layer_extension(base, CoronaSpec(Family.PATH, 6, 6), range(4, 7), LayerScheme.PATH)
    with pytest.raises(LayerCompositionError):
        layer_extension(base, CoronaSpec(Family.PATH, 6, 6), range(3, 7), LayerScheme.CYCLE)
    with pytest.raises(LayerCompositionError):
        layer_extension(base, CoronaSpec(Family.PATH, 6, 5), range(3, 7), LayerScheme.PATH)
    with pytest.raises(LayerCompositionError):
        layer_extension(base, CoronaSpec(Family.PATH, 8, 6), range(3, 7), LayerScheme.PATH)


def test_path4_m4_palette():
    result = construct(CoronaSpec(Family.PATH, 4, 4))
    assert result.claimed_palette_size == 18
    report = verify(corona(result.spec).graph, result.labeling)
    assert report.palette_size == 18


def test_layered_construction_restricts_to_base():
    cases = [
        (CoronaSpec(Family.PATH, 7, 8), 2),
        (CoronaSpec(Family.PATH, 5, 9), 3),
        (CoronaSpec(Family.PATH, 4, 7), 3),
        (CoronaSpec(Family.CYCLE, 6, 6), 2),
        (CoronaSpec(Family.CYCLE, 8, 5), 3),
        (CoronaSpec(Family.CYCLE, 7, 7), 1),
        (CoronaSpec(Family.CYCLE, 9, 4), 2),
    ]
    for spec, base_m in cases:
        full = construct(spec)
        base_spec = CoronaSpec(spec.family, spec.n, base_m)
        base = construct(base_spec)
        cg_full = corona(spec)
        cg_base = corona(base_spec)
        restricted = [0] * cg_base.graph.edge_count
        for e in range(spec.base_edge_count):
            restricted[e] = full.labeling[e]
        for i in range(spec.n):
            for j in range(base_m):
                restricted[cg_base.pendant_edge_index(i, j)] = full.labeling[
                    cg_full.pendant_edge_index(i, j)
                ]
        assert tuple(restricted) == base.labeling.labels, spec.label()


def halves(x: Fraction) -> int:
    assert x.denominator == 1
    return int(x)


def test_final_weight_classes_match_closed_forms():
    # Layered path classes.
    for n, m in ((6, 8), (9, 6), (7, 9), (8, 5), (2, 4), (2, 9)):
        result = construct(CoronaSpec(Family.PATH, n, m))
        got = sorted(set(result.spine_weights_expected))
        mm = m * m + 2 * m
        if m % 2 == 0:
            if n % 2 == 0:
                expect = {halves(Fraction(mm * n - m, 2)),
                          halves(Fraction((mm + 5) * n - (m + 4), 2))}
            else:
                expect = {halves(Fraction(mm * n - (m - 2), 2)),
                          halves(Fraction((mm + 5) * n - (m - 1), 2))}
        else:
            if n % 2 == 1:
                expect = {halves(Fraction((mm + 3) * n - (m + 3), 2)),
                          halves(Fraction((mm + 1) * n - (m + 3), 2))}
            else:
                expect = {halves(Fraction((mm - 1) * n - (m + 5), 2)),
                          halves(Fraction((mm + 5) * n - (m - 1), 2))}
        assert got == sorted(expect), (n, m)

    # Layered even-cycle classes.
    for n, m in ((6, 6), (8, 4), (6, 3), (10, 9)):
        result = construct(CoronaSpec(Family.CYCLE, n, m))
        got = sorted(set(result.spine_weights_expected))
        mm = m * m + 2 * m
        if m % 2 == 0:
            expect = {halves(Fraction(mm * n + (m + 2), 2)),
                      halves(Fraction((mm + 4) * n + (m + 2), 2))}
        else:
            expect = {halves(Fraction((mm - 2) * n + (m + 1), 2)),
                      halves(Fraction((mm + 6) * n + (m + 3), 2))}
        assert got == sorted(expect), (n, m)

    # Layered odd-cycle classes carry three values.
    for n, m in ((5, 3), (7, 5), (9, 9)):
        result = construct(CoronaSpec(Family.CYCLE, n, m))
        got = sorted(set(result.spine_weights_expected))
        mm = m * m + 2 * m
        expect = {
            halves(Fraction((mm + 2) * n + (m + 6), 2)),
            halves(Fraction(mm * n + (m + 4), 2)),
            halves(Fraction((mm + 2) * n + (m + 2), 2)),
        }
        assert got == sorted(expect), (n, m)
    for n, m in ((5, 4), (7, 8), (11, 10)):
        result = construct(CoronaSpec(Family.CYCLE, n, m))
        got = sorted(set(result.spine_weights_expected))
        mm = m * m + 2 * m
        expect = {
            halves(Fraction((mm + 2) * n + (m + 10), 2)),
            halves(Fraction((mm - 5) * n + (m + 11), 2)),
            halves(Fraction((mm + 2) * n + (m + 12), 2)),
        }
        assert got == sorted(expect), (n, m)


def test_exceptional_spine_weight_repeats_a_leaf_label():
    # In one-leaf path cases the exceptional spine weight coincides with a
    # pendant label (not with another spine vertex).
    for n in (8, 10, 9, 13):
        result = construct(CoronaSpec(Family.PATH, n, 1))
        cg = corona(result.spec)
        leaf_labels = {
            result.labeling[cg.pendant_edges[leaf]]
            for leaves in cg.leaves
            for leaf in leaves
        }
        spine = spine_weights(result)
        classes = {w for w in spine if spine.count(w) >= (n - 2) // 2}
        for w in set(spine) - classes:
            assert w in leaf_labels, (n, w)


def test_triangle_family():
    for m in range(2, 11):
        result = construct(CoronaSpec(Family.CYCLE, 3, m))
        assert result.case is ConstructionCase.C3_KM
        assert result.claimed_palette_size == 3 * m + 3
        assert result.claimed_is_exact
        spine = spine_weights(result)
        assert len(set(spine)) == 3
        assert min(spine) > 3 * m + 3  # spine colors exceed every label


def test_complete_k1_instances():
    assert construct_complete_k1(3).claimed_palette_size == 5
    result = construct_complete_k1(4)
    cg = corona(result.spec)
    w = weights(cg.graph, result.labeling)
    assert w[0] == 10  # 1+2+3+4, the largest edge label
    leaf_weights = [w[cg.leaf_vertex(i, 0)] for i in range(4)]
    assert w[0] in leaf_weights
    result = construct_complete_k1(5)
    w = weights(corona(result.spec).graph, result.labeling)
    assert w[0] == 15
    assert min(w[v] for v in range(1, 5)) > 15
    with pytest.raises(UnsupportedSpecError):
        construct_complete_k1(2)


def test_complete_km_claims():
    for n, m in ((3, 2), (5, 4), (8, 10)):
        result = construct(CoronaSpec(Family.COMPLETE, n, m))
        assert result.claimed_palette_size == m * n + n
        spine = spine_weights(result)
        assert len(set(spine)) == n
        assert min(spine) > result.spec.edge_count


def test_exactness_flags_for_open_odd_cycles():
    assert not construct(CoronaSpec(Family.CYCLE, 5, 3)).claimed_is_exact
    assert not construct(CoronaSpec(Family.CYCLE, 5, 5)).claimed_is_exact
    assert construct(CoronaSpec(Family.CYCLE, 5, 6)).claimed_is_exact
    assert not construct(CoronaSpec(Family.CYCLE, 7, 9)).claimed_is_exact
    assert construct(CoronaSpec(Family.CYCLE, 7, 10)).claimed_is_exact
    assert construct(CoronaSpec(Family.CYCLE, 6, 3)).claimed_is_exact


def test_errata_flags():
    assert construct(CoronaSpec(Family.CYCLE, 7, 2)).errata_applied == ("E1",)
    assert construct(CoronaSpec(Family.CYCLE, 10, 1)).errata_applied == ("E2",)
    assert construct(CoronaSpec(Family.PATH, 5, 3)).errata_applied == ("E3",)
    assert construct(CoronaSpec(Family.CYCLE, 6, 5)).errata_applied == ("E4",)
    assert construct(CoronaSpec(Family.PATH, 6, 2)).errata_applied == ("E5",)
    assert construct(CoronaSpec(Family.PATH, 5, 2)).errata_applied == ()
    assert construct(CoronaSpec(Family.CYCLE, 3, 5)).errata_applied == ("G1",)
    assert construct(CoronaSpec(Family.COMPLETE, 4, 2)).errata_applied == ("G2",)
    # Errata propagate through layering.
    assert construct(CoronaSpec(Family.CYCLE, 7, 6)).errata_applied == ("E1",)
    assert construct(CoronaSpec(Family.PATH, 8, 4)).errata_applied == ("E5",)


def test_unsupported_specs():
    with pytest.raises(UnsupportedSpecError):
        construct(CoronaSpec(Family.COMPLETE, 2, 1))
    with pytest.raises(UnsupportedSpecError):
        construct(CoronaSpec(Family.COMPLETE, 2, 5))


def test_classification_is_total_and_unique():
    for family, n_min in ((Family.PATH, 2), (Family.CYCLE, 3), (Family.COMPLETE, 3)):
        for n in range(n_min, 20):
            for m in range(1, 8):
                case = classify(CoronaSpec(family, n, m))
                assert isinstance(case, ConstructionCase)
