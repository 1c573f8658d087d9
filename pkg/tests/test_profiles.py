"""Profile enumeration: modes, strategies, composition, filters."""

from fractions import Fraction

import pytest

from quotientlab import (
    EXACT,
    FLATS,
    EnumCapError,
    GraphicMatroid,
    LinearMatroid,
    Mode,
    QuotientPoint,
    Sampled,
    SimpleGraph,
    StrategyError,
    compose,
    delta_approx_bound_check,
    derived_profile,
    limit_set_filter,
    profile,
    quotient_point,
    verify_inclusions,
)
from quotientlab.sequences import example51_oracle, gf_space_oracle


def coords_set(pset):
    return {p.coords for p in pset}


def test_k1_partition_profile_is_single_point():
    oracle = gf_space_oracle(2, 2)
    pset = profile(oracle, 1, Mode.PARTITION, EXACT)
    assert coords_set(pset) == {(Fraction(0), Fraction(1))}


def test_gf22_partition_profile_exact():
    pset = profile(gf_space_oracle(2, 2), 2, Mode.PARTITION, EXACT)
    expected = {
        (Fraction(0), Fraction(0), Fraction(1), Fraction(1)),
        (Fraction(0), Fraction(1), Fraction(0), Fraction(1)),
        (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(1)),
        (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1)),
    }
    assert coords_set(pset) == expected


def test_tree_path_points_additive():
    # forest ranks add across any edge bipartition of a tree
    pset = profile(example51_oracle(9), 2, Mode.PARTITION, EXACT)
    assert coords_set(pset) == {
        (Fraction(0), Fraction(j, 9), Fraction(8 - j, 9), Fraction(8, 9)) for j in range(9)
    }


def test_enum_cap_error_reports_iterations():
    oracle = gf_space_oracle(2, 4)
    with pytest.raises(EnumCapError) as err:
        profile(oracle, 2, Mode.ANY, EXACT)
    assert err.value.iterations == 4**16


def test_flats_strategy_needs_matroid():
    from quotientlab.setfn import oracle_from_table

    with pytest.raises(StrategyError):
        profile(oracle_from_table([0, 1, 1, 2]), 2, Mode.ANY, FLATS)


def test_flats_strategy_rejects_partition_mode():
    with pytest.raises(StrategyError):
        profile(gf_space_oracle(2, 2), 2, Mode.PARTITION, FLATS)


@pytest.mark.parametrize("mode", [Mode.ANY, Mode.DISJOINT, Mode.COVERING])
def test_flats_equals_exact_on_matroids(mode):
    oracles = [
        gf_space_oracle(2, 2),
        gf_space_oracle(2, 3),
        GraphicMatroid(SimpleGraph.complete(4)).normalized_rank_oracle(),
        GraphicMatroid(SimpleGraph.cycle(5)).normalized_rank_oracle(),
    ]
    for oracle in oracles:
        exact = profile(oracle, 2, mode, EXACT)
        flats = profile(oracle, 2, mode, FLATS)
        assert coords_set(exact) == coords_set(flats), (oracle.label, mode)


def test_sampled_subset_of_exact():
    oracle = GraphicMatroid(SimpleGraph.complete(4)).normalized_rank_oracle()
    for mode in Mode:
        exact = profile(oracle, 2, mode, EXACT)
        sampled = profile(oracle, 2, mode, Sampled(seed=42, samples=200))
        assert sampled.points <= exact.points


def test_sampled_is_seed_deterministic():
    oracle = gf_space_oracle(2, 3)
    a = profile(oracle, 2, Mode.PARTITION, Sampled(seed=7, samples=100))
    b = profile(oracle, 2, Mode.PARTITION, Sampled(seed=7, samples=100))
    assert a.points == b.points


def test_derived_profile_trivial_cases():
    zero = QuotientPoint(2, (Fraction(0),) * 4)
    derived = derived_profile(zero, 2, Mode.ANY)
    assert coords_set(derived) == {(Fraction(0),) * 4}
    point = QuotientPoint(2, (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)))
    contains = derived_profile(point, 2, Mode.PARTITION)
    assert point.coords in coords_set(contains)


def test_derived_profile_matches_direct_composition():
    oracle = GraphicMatroid(SimpleGraph.complete(3)).normalized_rank_oracle()
    inner = quotient_point(oracle, [0b001, 0b110])
    derived = derived_profile(inner, 2, Mode.ANY)
    # brute force: all pairs of subsets of the two parts
    expected = set()
    parts = [0b001, 0b110]
    for s1 in range(4):
        for s2 in range(4):
            merged = []
            for sel in (s1, s2):
                m = 0
                for i in range(2):
                    if sel >> i & 1:
                        m |= parts[i]
                merged.append(m)
            expected.add(quotient_point(oracle, merged).coords)
    assert coords_set(derived) == expected


def test_composition_identities_k4_and_gf22():
    oracles = [
        GraphicMatroid(SimpleGraph.complete(4)).normalized_rank_oracle(),
        gf_space_oracle(2, 2),
    ]
    for oracle in oracles:
        base = coords_set(profile(oracle, 2, Mode.ANY, EXACT))
        assert coords_set(compose(oracle, 2, 3, Mode.PARTITION, Mode.ANY)) == base
        assert coords_set(compose(oracle, 2, 3, Mode.ANY, Mode.ANY)) == base
        assert coords_set(compose(oracle, 2, 4, Mode.ANY, Mode.PARTITION)) == base


def test_composition_trivial_k1():
    oracle = gf_space_oracle(2, 2)
    base = coords_set(profile(oracle, 1, Mode.ANY, EXACT))
    assert coords_set(compose(oracle, 1, 1, Mode.ANY, Mode.ANY)) == base


def test_inclusion_chains_hold():
    oracles = [
        GraphicMatroid(SimpleGraph.complete(4)).normalized_rank_oracle(),
        gf_space_oracle(2, 3),
    ]
    for oracle in oracles:
        report = verify_inclusions(oracle, 2)
        assert report.all_hold
    report = verify_inclusions(gf_space_oracle(2, 2), 1)
    assert report.all_hold


def test_zero_point_in_any_but_not_partition():
    oracle = gf_space_oracle(2, 2)
    zero = QuotientPoint(2, (Fraction(0),) * 4)
    assert zero in profile(oracle, 2, Mode.ANY, EXACT).points
    assert zero not in profile(oracle, 2, Mode.PARTITION, EXACT).points


def test_quotient_of_quotient_closure():
    # partition profiles of a partition point stay inside the original profile
    oracle = gf_space_oracle(2, 2)
    q3 = profile(oracle, 3, Mode.PARTITION, EXACT)
    q2 = profile(oracle, 2, Mode.PARTITION, EXACT)
    for point in q3:
        inner = derived_profile(point, 2, Mode.PARTITION)
        assert inner.points <= q2.points


def test_delta_bound_report_gf23_vacuous_bound():
    report = delta_approx_bound_check(LinearMatroid.full_space(2, 3), 2, 4)
    assert report.precondition_met
    assert report.bound == Fraction(8, 3)
    assert report.holds


def test_delta_bound_precondition_not_met():
    report = delta_approx_bound_check(GraphicMatroid(SimpleGraph.complete(3)), 2, 1)
    assert not report.precondition_met
    assert report.bound is None
    assert report.richness_witness is not None


def test_limit_filter_k1():
    pset = profile(gf_space_oracle(2, 2), 1, Mode.PARTITION, EXACT)
    kept = limit_set_filter(pset, 2, 2, at_limit=True)
    assert all(p.coords[1] >= 1 for p in kept)
    assert len(kept) == len([p for p in pset if p.coords[1] >= 1])


def test_limit_filter_thresholds():
    for n in (2, 3):
        pset = profile(gf_space_oracle(2, n), 2, Mode.PARTITION, EXACT)
        kept = limit_set_filter(pset, 2, n)
        assert len(kept) == len(pset)
        threshold = 1 - Fraction(1, n)
        assert all(p.max_singleton() >= threshold for p in pset)


def test_limit_filter_drops_small_any_points():
    pset = profile(gf_space_oracle(2, 2), 2, Mode.ANY, EXACT)
    kept = limit_set_filter(pset, 2, 2)
    assert len(kept) < len(pset)
    assert all(p.max_singleton() >= Fraction(1, 2) for p in kept)


def test_modes_choice_tables():
    assert Mode.PARTITION.element_choices(2) == (1, 2)
    assert Mode.DISJOINT.element_choices(2) == (0, 1, 2)
    assert Mode.COVERING.element_choices(2) == (1, 2, 3)
    assert Mode.ANY.element_choices(2) == (0, 1, 2, 3)


def test_profile_set_sorted_points_deterministic():
    pset = profile(gf_space_oracle(2, 2), 2, Mode.ANY, EXACT)
    listed = pset.sorted_points()
    assert listed == sorted(listed, key=lambda p: p.coords)
    assert len(listed) == 10


def test_direct_sum_of_lines_tuple_profile_inside_plane():
    # the two blocks embed into the product space once the zeros are
    # identified; that carries tuple profiles (flats map to flats with
    # equal rank) but not partition profiles, where the identified zero
    # and the uncovered vectors break the partition structure
    from quotientlab import DirectSumMatroid

    line = LinearMatroid.full_space(2, 1)
    sum_oracle = DirectSumMatroid([line, line]).normalized_rank_oracle()
    plane_oracle = gf_space_oracle(2, 2)
    small = coords_set(profile(sum_oracle, 2, Mode.ANY, EXACT))
    large = coords_set(profile(plane_oracle, 2, Mode.ANY, EXACT))
    assert small <= large
    part_small = coords_set(profile(sum_oracle, 2, Mode.PARTITION, EXACT))
    part_large = coords_set(profile(plane_oracle, 2, Mode.PARTITION, EXACT))
    assert (Fraction(0), Fraction(1, 2), Fraction(1, 2), Fraction(1)) in part_small - part_large
