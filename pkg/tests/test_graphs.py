"""Graphs: blow-ups, cut distances, cut capacities, motifs, quotients."""

import itertools
import random
from fractions import Fraction

import pytest

from quotientlab import (
    CutNormalization,
    DegenerateNormalizationError,
    GraphFormatError,
    GraphicMatroid,
    Mode,
    SimpleGraph,
    blow_up,
    check_monotone,
    check_submodular,
    cut_capacity_oracle,
    cut_dist_labeled,
    cut_dist_unlabeled_upper,
    edge_coloring_quotient,
    gamma_from_kappa,
    hom_count,
    hom_density,
    kappa_from_gamma,
    pair_count,
    parse_graph,
    profile,
    quotient_point,
    rounding_partition,
    tau_oracle,
    weighted_quotient,
)
from quotientlab.graphs import format_graph
from quotientlab.metric import hausdorff


def naive_pair_count(g, s_mask, t_mask):
    total = 0
    for u, v in g.edges:
        if s_mask >> u & 1 and t_mask >> v & 1:
            total += 1
        if s_mask >> v & 1 and t_mask >> u & 1:
            total += 1
    return total


def naive_hom_count(pattern, target):
    count = 0
    for assign in itertools.product(range(target.node_count), repeat=pattern.node_count):
        if all(target.adjacency[assign[u]] >> assign[v] & 1 for u, v in pattern.edges):
            count += 1
    return count


def test_pair_count_double_counts_inside_intersection():
    k2 = SimpleGraph.complete(2)
    full = 0b11
    assert pair_count(k2, full, full) == 2
    rng = random.Random(3)
    g = SimpleGraph.make(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)])
    for _ in range(50):
        s, t = rng.randrange(64), rng.randrange(64)
        assert pair_count(g, s, t) == naive_pair_count(g, s, t)


def test_blow_up_identity():
    g = SimpleGraph.cycle(4)
    assert blow_up(g, 1).edges == g.edges


def test_blow_up_k2_gives_square():
    b = blow_up(SimpleGraph.complete(2), 2)
    assert b.node_count == 4 and b.edge_count == 4
    # complete bipartite between {0,1} and {2,3}: a 4-cycle
    assert all(d.bit_count() == 2 for d in b.adjacency)


def test_blow_up_counts_and_density():
    b = blow_up(SimpleGraph.complete(3), 2)
    assert b.node_count == 6 and b.edge_count == 12
    assert hom_density(SimpleGraph.complete(3), b) == Fraction(2, 9)


def test_cut_dist_labeled_zero_on_self():
    g = SimpleGraph.cycle(5)
    assert cut_dist_labeled(g, g) == 0


def test_cut_dist_labeled_k2_vs_empty():
    assert cut_dist_labeled(SimpleGraph.complete(2), SimpleGraph.empty(2)) == Fraction(1, 2)


def naive_cut_dist(g, h):
    n = g.node_count
    best = 0
    for s in range(1 << n):
        for t in range(1 << n):
            gap = abs(naive_pair_count(g, s, t) - naive_pair_count(h, s, t))
            best = max(best, gap)
    return Fraction(best, n * n)


def test_cut_dist_labeled_c4_vs_p4():
    c4, p4 = SimpleGraph.cycle(4), SimpleGraph.path(4)
    expected = naive_cut_dist(c4, p4)
    assert expected == Fraction(1, 8)
    assert cut_dist_labeled(c4, p4) == expected


def test_cut_dist_labeled_matches_naive_random():
    rng = random.Random(17)
    for _ in range(10):
        n = rng.randrange(2, 6)
        pairs = list(itertools.combinations(range(n), 2))
        g = SimpleGraph.make(n, [e for e in pairs if rng.random() < 0.5])
        h = SimpleGraph.make(n, [e for e in pairs if rng.random() < 0.5])
        assert cut_dist_labeled(g, h) == naive_cut_dist(g, h)


def test_cut_dist_unlabeled_zero_on_self():
    g = SimpleGraph.cycle(4)
    assert cut_dist_unlabeled_upper(g, g, t_max=1, trials=2, seed=1).value == 0


def test_cut_dist_unlabeled_k2_vs_its_blowup():
    k2 = SimpleGraph.complete(2)
    c4 = blow_up(k2, 2)
    bound = cut_dist_unlabeled_upper(k2, c4, t_max=1, trials=8, seed=0)
    assert bound.value == 0


def test_cut_dist_unlabeled_exhaustible_tiny():
    k3 = SimpleGraph.complete(3)
    e3 = SimpleGraph.empty(3)
    bound = cut_dist_unlabeled_upper(k3, e3, t_max=1, trials=4, seed=2)
    # bound at least the density gap, at most from the labeled distance
    assert bound.value == cut_dist_labeled(blow_up(k3, 3), blow_up(e3, 3))


def test_cut_capacity_values():
    k2 = cut_capacity_oracle(SimpleGraph.complete(2), CutNormalization.EDGES)
    assert k2.evaluate(0b01) == 1
    c4 = cut_capacity_oracle(SimpleGraph.cycle(4), CutNormalization.EDGES)
    assert c4.evaluate(0b0011) == Fraction(1, 2)
    assert c4.evaluate(c4.full_mask) == 0
    assert c4.evaluate(0) == 0


def test_cut_capacity_submodular_and_symmetric():
    for g in (SimpleGraph.cycle(5), SimpleGraph.complete(4), SimpleGraph.complete_bipartite(2, 3)):
        oracle = cut_capacity_oracle(g, CutNormalization.NODES_SQUARED)
        assert check_submodular(oracle) == []
        full = g.full_node_mask
        for mask in range(1 << g.node_count):
            assert oracle.evaluate(mask) == oracle.evaluate(full ^ mask)


def test_cut_capacity_degenerate_normalization():
    with pytest.raises(DegenerateNormalizationError):
        cut_capacity_oracle(SimpleGraph.empty(3), CutNormalization.EDGES)
    oracle = cut_capacity_oracle(SimpleGraph.empty(3), CutNormalization.NODES_SQUARED)
    assert oracle.evaluate(0b101) == 0


def test_hom_densities():
    k2, k3 = SimpleGraph.complete(2), SimpleGraph.complete(3)
    assert hom_count(k2, k3) == naive_hom_count(k2, k3) == 6
    assert hom_density(k2, k3) == Fraction(2, 3)
    assert hom_density(k3, k3) == Fraction(2, 9)
    assert hom_density(k3, SimpleGraph.empty(4)) == 0
    edgeless = SimpleGraph.empty(2)
    assert hom_density(edgeless, k3) == 1


def test_hom_count_matches_naive_random():
    rng = random.Random(23)
    motifs = [SimpleGraph.complete(2), SimpleGraph.path(3), SimpleGraph.cycle(4)]
    for _ in range(10):
        n = rng.randrange(2, 6)
        pairs = list(itertools.combinations(range(n), 2))
        g = SimpleGraph.make(n, [e for e in pairs if rng.random() < 0.5])
        for f in motifs:
            assert hom_count(f, g) == naive_hom_count(f, g)


def test_tau_values_k2_k3():
    oracle = tau_oracle(SimpleGraph.complete(2), SimpleGraph.complete(3))
    assert oracle.evaluate(0) == Fraction(1, 3)
    assert oracle.evaluate(oracle.full_mask) == 1
    assert check_submodular(oracle) == []
    assert check_monotone(oracle) == []


def test_tau_removing_one_edge_kills_triangles():
    oracle = tau_oracle(SimpleGraph.complete(3), SimpleGraph.complete(3))
    assert oracle.evaluate(0b001) == 1


def test_weighted_quotient_k2():
    wq = weighted_quotient(SimpleGraph.complete(2), [0b01, 0b10])
    assert wq.alpha == (Fraction(1, 2), Fraction(1, 2))
    assert wq.beta[0][1] == 1
    assert wq.gamma[0][1] == Fraction(1, 4)


def test_weighted_quotient_single_class():
    g = SimpleGraph.cycle(4)
    wq = weighted_quotient(g, [g.full_node_mask])
    assert wq.alpha == (Fraction(1),)
    assert wq.gamma[0][0] == Fraction(2 * g.edge_count, 16)


def test_weighted_quotient_bipartition_of_square():
    g = SimpleGraph.cycle(4)
    color_a = 0b0101
    wq = weighted_quotient(g, [color_a, g.full_node_mask ^ color_a])
    assert wq.beta[0][1] == 1
    assert wq.gamma[0][1] == Fraction(1, 4)


def test_weighted_quotient_empty_class_beta_zero():
    g = SimpleGraph.complete(3)
    wq = weighted_quotient(g, [g.full_node_mask, 0])
    assert wq.beta[0][1] == 0
    assert wq.beta[1][1] == 0
    assert wq.gamma[0][1] == 0


def test_weighted_quotient_rejects_non_partition():
    g = SimpleGraph.complete(3)
    with pytest.raises(ValueError):
        weighted_quotient(g, [0b011, 0b110])


def test_kappa_from_gamma_examples():
    g = SimpleGraph.complete(2)
    wq = weighted_quotient(g, [0b01, 0b10])
    point = kappa_from_gamma(wq)
    assert point.coords == (Fraction(0), Fraction(1, 4), Fraction(1, 4), Fraction(0))
    single = kappa_from_gamma(weighted_quotient(g, [g.full_node_mask]))
    assert all(c == 0 for c in single.coords)


def test_gamma_kappa_round_trip_random():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randrange(2, 7)
        pairs = list(itertools.combinations(range(n), 2))
        g = SimpleGraph.make(n, [e for e in pairs if rng.random() < 0.6])
        k = rng.randrange(2, 4)
        parts = [0] * k
        for v in range(n):
            parts[rng.randrange(k)] |= 1 << v
        wq = weighted_quotient(g, parts)
        point = kappa_from_gamma(wq)
        oracle = cut_capacity_oracle(g, CutNormalization.NODES_SQUARED)
        assert point == quotient_point(oracle, parts)
        recovered = gamma_from_kappa(point)
        for i in range(k):
            for j in range(i + 1, k):
                assert recovered[(i, j)] == wq.gamma[i][j]


def test_k3_gamma_from_kappa_example():
    g = SimpleGraph.complete(3)
    parts = [0b001, 0b110]
    point = quotient_point(cut_capacity_oracle(g, CutNormalization.NODES_SQUARED), parts)
    assert gamma_from_kappa(point)[(0, 1)] == Fraction(2, 9)


def test_quotient_gap_bounded_by_cut_distance():
    rng = random.Random(1234)
    for _ in range(25):
        n = rng.randrange(3, 8)
        pairs = list(itertools.combinations(range(n), 2))
        g1 = SimpleGraph.make(n, [e for e in pairs if rng.random() < 0.5])
        g2 = SimpleGraph.make(n, [e for e in pairs if rng.random() < 0.5])
        q1 = profile(cut_capacity_oracle(g1, CutNormalization.NODES_SQUARED), 2, Mode.PARTITION)
        q2 = profile(cut_capacity_oracle(g2, CutNormalization.NODES_SQUARED), 2, Mode.PARTITION)
        assert hausdorff(q1, q2).distance <= cut_dist_labeled(g1, g2)


def test_rounding_partition_respecting_is_fixed_point():
    base = SimpleGraph.complete(3)
    t = 2
    parts = [0b000011, 0b111100]  # blocks of node 0 vs nodes 1,2
    result = rounding_partition(base, t, parts, seed=9)
    assert result.parts == tuple(parts)
    assert result.deviation == 0


def test_rounding_partition_split_class_exact_deviation():
    base = SimpleGraph.complete(2)
    t = 3
    # split node 0's block 2/1 between the parts
    parts = [0b000011, 0b111100]
    result = rounding_partition(base, t, parts, seed=4)
    assert result.parts != tuple(parts)
    union = result.parts[0] | result.parts[1]
    assert union == blow_up(base, t).full_node_mask
    assert result.parts[0] & result.parts[1] == 0
    oracle = cut_capacity_oracle(blow_up(base, t), CutNormalization.EDGES)
    before = quotient_point(oracle, parts)
    after = quotient_point(oracle, list(result.parts))
    expected = max(abs(a - b) for a, b in zip(before.coords, after.coords))
    assert result.deviation == expected


def test_rounding_partition_mean_deviation_small():
    base = SimpleGraph.cycle(12)
    t = 2
    k = 2
    rng = random.Random(88)
    gt = blow_up(base, t)
    parts = [0, 0]
    for v in range(gt.node_count):
        parts[rng.randrange(k)] |= 1 << v
    epsilon_sq = Fraction(32 * (k + 1), base.node_count)
    deviations = [rounding_partition(base, t, parts, seed=s).deviation for s in range(40)]
    mean = sum(deviations) / len(deviations)
    # eps = sqrt(32 (k+1) / m); mean deviation stays below eps / 4
    assert float(mean) < (float(epsilon_sq) ** 0.5) / 4


def test_rounding_partition_seed_deterministic():
    base = SimpleGraph.complete(3)
    parts = [0b010101, 0b101010]
    a = rounding_partition(base, 2, parts, seed=5)
    b = rounding_partition(base, 2, parts, seed=5)
    assert a.parts == b.parts and a.deviation == b.deviation


def test_edge_coloring_tree_single_color():
    tree = SimpleGraph.path(6)
    result = edge_coloring_quotient(tree, [0] * tree.edge_count, 2)
    assert result.point.coords == (
        Fraction(0),
        Fraction(5, 6),
        Fraction(0),
        Fraction(5, 6),
    )
    assert result.component_sizes[0] == (6,) * 6
    assert result.component_sizes[1] == (1,) * 6


def test_edge_coloring_k4_perfect_matchings():
    k4 = SimpleGraph.complete(4)
    index = k4.edge_index()
    colors = [0] * 6
    colors[index[(0, 1)]] = 0
    colors[index[(2, 3)]] = 0
    colors[index[(0, 2)]] = 1
    colors[index[(1, 3)]] = 1
    colors[index[(0, 3)]] = 2
    colors[index[(1, 2)]] = 2
    result = edge_coloring_quotient(k4, colors, 3)
    for i in range(3):
        assert result.point.singleton(i) == Fraction(1, 2)
    assert result.point.coords[-1] == Fraction(3, 4)
    for c in range(3):
        assert result.component_sizes[c] == (2, 2, 2, 2)


def test_edge_coloring_matches_matroid_quotient():
    g = SimpleGraph.make(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])
    colors = [0, 1, 0, 1, 2, 2]
    result = edge_coloring_quotient(g, colors, 3)
    parts = [0, 0, 0]
    for i, c in enumerate(colors):
        parts[c] |= 1 << i
    oracle = GraphicMatroid(g).normalized_rank_oracle(denominator=5)
    assert result.point == quotient_point(oracle, parts)


def test_edge_coloring_edgeless():
    result = edge_coloring_quotient(SimpleGraph.empty(3), [], 2)
    assert all(c == 0 for c in result.point.coords)


def test_parse_and_format_round_trip():
    g = SimpleGraph.make(4, [(0, 1), (2, 3), (1, 2)])
    text = format_graph(g)
    assert parse_graph(text) == SimpleGraph(g.node_count, g.edges)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GraphFormatError) as err:
        parse_graph("2 1\n0 0\n")
    assert err.value.line == 2
    with pytest.raises(GraphFormatError):
        parse_graph("oops\n")
    with pytest.raises(GraphFormatError):
        parse_graph("3 2\n0 1\n")


def test_cut_dist_unlabeled_exhausts_small_same_size():
    # C4 and the relabeled square 0-2-1-3 align perfectly
    c4 = SimpleGraph.cycle(4)
    twisted = SimpleGraph.make(4, [(0, 2), (1, 2), (1, 3), (0, 3)])
    bound = cut_dist_unlabeled_upper(c4, twisted, t_max=1, trials=0, seed=0)
    assert bound.value == 0
    assert bound.t == 1


def test_tau_p3_motif_shape():
    oracle = tau_oracle(SimpleGraph.path(3), SimpleGraph.cycle(5))
    assert check_submodular(oracle) == []
    assert check_monotone(oracle) == []
    assert oracle.evaluate(oracle.full_mask) == 1


def test_blowup_cap_error():
    from quotientlab import BlowUpCapError

    big = SimpleGraph.complete(5)
    with pytest.raises(BlowUpCapError):
        cut_dist_unlabeled_upper(big, SimpleGraph.cycle(7), t_max=1)


def test_shifted_tau_matches_raw_up_to_base():
    from quotientlab import shifted_tau_oracle

    motif, g = SimpleGraph.complete(2), SimpleGraph.complete(3)
    raw = tau_oracle(motif, g)
    shifted = shifted_tau_oracle(motif, g)
    base = raw.evaluate(0)
    assert shifted.evaluate(0) == 0
    for mask in range(1 << g.edge_count):
        assert shifted.evaluate(mask) == raw.evaluate(mask) - base
    assert check_submodular(shifted) == []
    assert check_monotone(shifted) == []
