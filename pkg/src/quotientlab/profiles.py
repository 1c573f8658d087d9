"""Profile sets: the quotient vectors a setfunction induces on k parts.

Four tuple disciplines:

* PARTITION: every element in exactly one part (labeled, parts may be empty);
* DISJOINT:  every element in at most one part;
* COVERING:  every element in at least one part;
* ANY:       arbitrary k-tuples of subsets, overlaps allowed.

Three enumeration strategies:

* Exact       -- iterate all labeled assignments (choices per element
                 depend on the mode), capped by ENUM_ITERATION_CAP;
* Sampled     -- seeded uniform assignments plus a small deterministic
                 portfolio of structured tuples; always a subset of Exact;
* FlatsOnly   -- for matroid rank oracles, iterate k-tuples of flats.
                 Exact for ANY (closures do not change any value of the
                 tuple), for COVERING (filter: the flats' union must be
                 the ground set), and for DISJOINT (filter: the flats
                 admit disjoint spanning sets, decided by matroid union).
                 Invalid for PARTITION, where no flat reduction is sound.

Points are deduplicated by exact coordinate equality; no tolerances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from random import Random
from typing import Iterator, Optional, Sequence

from . import config
from .errors import EnumCapError, GroundTooLargeError, KTooLargeError, StrategyError
from .matroid import Matroid, disjoint_bases
from .metric import hausdorff
from .setfn import (
    QuotientPoint,
    SetFunctionOracle,
    SubsetMask,
    union_table,
)


class Mode(str, Enum):
    PARTITION = "partition"
    DISJOINT = "disjoint"
    COVERING = "covering"
    ANY = "any"

    def element_choices(self, k: int) -> tuple[int, ...]:
        """Per-element options, as masks over the k parts."""
        if self is Mode.PARTITION:
            return tuple(1 << i for i in range(k))
        if self is Mode.DISJOINT:
            return (0,) + tuple(1 << i for i in range(k))
        if self is Mode.COVERING:
            return tuple(range(1, 1 << k))
        return tuple(range(1 << k))


@dataclass(frozen=True)
class Exact:
    def describe(self) -> str:
        return "exact"


@dataclass(frozen=True)
class Sampled:
    seed: int
    samples: int

    def describe(self) -> str:
        return f"sampled(seed={self.seed},samples={self.samples})"


@dataclass(frozen=True)
class FlatsOnly:
    def describe(self) -> str:
        return "flats"


Strategy = Exact | Sampled | FlatsOnly

EXACT = Exact()
FLATS = FlatsOnly()


@dataclass(frozen=True)
class ProfileSet:
    """A deduplicated finite set of quotient points with its provenance."""

    k: int
    mode: Mode
    strategy: str
    source: str
    points: frozenset[QuotientPoint]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[QuotientPoint]:
        return iter(self.points)

    def __contains__(self, point: QuotientPoint) -> bool:
        return point in self.points

    def issubset(self, other: "ProfileSet") -> bool:
        return self.points <= other.points

    def sorted_points(self) -> list[QuotientPoint]:
        return sorted(self.points, key=lambda p: p.coords)


def _coords_for_parts(oracle: SetFunctionOracle, parts: Sequence[SubsetMask]) -> tuple[Fraction, ...]:
    ev = oracle.evaluate
    return tuple(ev(u) for u in union_table(parts))


def _exact_coords(oracle: SetFunctionOracle, k: int, mode: Mode) -> set[tuple[Fraction, ...]]:
    n = oracle.size
    choices = mode.element_choices(k)
    total = len(choices) ** n
    if total > config.ENUM_ITERATION_CAP:
        raise EnumCapError(total, config.ENUM_ITERATION_CAP, f"n={n}, k={k}, mode={mode.value}")
    members = [tuple(i for i in range(k) if pm >> i & 1) for pm in choices]
    ev = oracle.evaluate
    out: set[tuple[Fraction, ...]] = set()
    for assign in itertools.product(range(len(choices)), repeat=n):
        parts = [0] * k
        for e, c in enumerate(assign):
            bit = 1 << e
            for i in members[c]:
                parts[i] |= bit
        out.add(tuple(ev(u) for u in union_table(parts)))
    return out


def _flat_coords(oracle: SetFunctionOracle, k: int, mode: Mode) -> set[tuple[Fraction, ...]]:
    matroid: Optional[Matroid] = oracle.matroid
    if matroid is None:
        raise StrategyError("flats strategy needs a matroid-backed rank oracle")
    if mode is Mode.PARTITION:
        raise StrategyError(
            "flats strategy is unsound for partitions (partitions into flats need not exist)"
        )
    flats = matroid.flats()
    total = len(flats) ** k
    if total > config.ENUM_ITERATION_CAP:
        raise EnumCapError(total, config.ENUM_ITERATION_CAP, f"{len(flats)} flats, k={k}")
    full = matroid.full_mask
    ev = oracle.evaluate
    out: set[tuple[Fraction, ...]] = set()
    feasible: dict[tuple[SubsetMask, ...], bool] = {}
    for tup in itertools.product(flats, repeat=k):
        if mode is Mode.COVERING:
            union = 0
            for f in tup:
                union |= f
            if union != full:
                continue
        elif mode is Mode.DISJOINT:
            key = tuple(sorted(tup))
            ok = feasible.get(key)
            if ok is None:
                ok = disjoint_bases(matroid, key).bases is not None
                feasible[key] = ok
            if not ok:
                continue
        out.add(tuple(ev(u) for u in union_table(tup)))
    return out


def _sampled_coords(
    oracle: SetFunctionOracle, k: int, mode: Mode, seed: int, samples: int
) -> set[tuple[Fraction, ...]]:
    n = oracle.size
    rng = Random(seed)
    choices = mode.element_choices(k)
    members = [tuple(i for i in range(k) if pm >> i & 1) for pm in choices]
    ev = oracle.evaluate
    out: set[tuple[Fraction, ...]] = set()

    def add(parts: Sequence[SubsetMask]) -> None:
        out.add(tuple(ev(u) for u in union_table(parts)))

    full = oracle.full_mask
    # structured portfolio: whole ground in one part, then balanced round-robins;
    # both are partitions, hence legal in every mode
    for i in range(k):
        parts = [0] * k
        parts[i] = full
        add(parts)
    for _ in range(3):
        order = list(range(n))
        rng.shuffle(order)
        parts = [0] * k
        for pos, e in enumerate(order):
            parts[pos % k] |= 1 << e
        add(parts)
    if oracle.matroid is not None and mode is Mode.ANY:
        flats = oracle.matroid.flats()
        for _ in range(min(samples, 32)):
            add([rng.choice(flats) for _ in range(k)])
    for _ in range(samples):
        parts = [0] * k
        for e in range(n):
            c = rng.randrange(len(choices))
            bit = 1 << e
            for i in members[c]:
                parts[i] |= bit
        add(parts)
    return out


def profile(
    oracle: SetFunctionOracle,
    k: int,
    mode: Mode,
    strategy: Strategy = EXACT,
) -> ProfileSet:
    """Enumerate (or sample) the profile set of the oracle for k labeled parts."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > config.QUOTIENT_K_CAP:
        raise KTooLargeError(f"k={k} exceeds QUOTIENT_K_CAP={config.QUOTIENT_K_CAP}")
    if oracle.evaluate(0) != 0:
        raise ValueError("profiles are defined only for functions vanishing on the empty set")
    if isinstance(strategy, Exact):
        coords = _exact_coords(oracle, k, mode)
    elif isinstance(strategy, FlatsOnly):
        coords = _flat_coords(oracle, k, mode)
    elif isinstance(strategy, Sampled):
        coords = _sampled_coords(oracle, k, mode, strategy.seed, strategy.samples)
    else:  # pragma: no cover
        raise TypeError(f"unknown strategy {strategy!r}")
    points = frozenset(QuotientPoint(k, c) for c in coords)
    return ProfileSet(k, mode, strategy.describe(), oracle.label, points)


def derived_profile(
    point: QuotientPoint, k: int, mode: Mode, strategy: Strategy = EXACT
) -> ProfileSet:
    """Profile a quotient point, reinterpreted as a setfunction on its parts."""
    if point.k > config.DERIVED_GROUND_CAP:
        raise GroundTooLargeError(
            f"derived ground {point.k} exceeds DERIVED_GROUND_CAP={config.DERIVED_GROUND_CAP}"
        )
    return profile(point.as_oracle(label="derived-point"), k, mode, strategy)


def compose(
    oracle: SetFunctionOracle,
    outer_k: int,
    inner_m: int,
    outer_mode: Mode,
    inner_mode: Mode,
) -> ProfileSet:
    """Union of outer profiles taken over every point of the inner profile.

    With inner ANY tuples of length a >= k, outer PARTITION (or ANY)
    reproduces the full ANY profile for k parts; the same holds for
    inner PARTITION profiles with at least 2**k parts.
    """
    inner = profile(oracle, inner_m, inner_mode, EXACT)
    points: set[QuotientPoint] = set()
    for p in inner:
        points.update(derived_profile(p, outer_k, outer_mode).points)
    return ProfileSet(
        outer_k,
        outer_mode,
        f"composed({outer_mode.value}∘{inner_mode.value},m={inner_m})",
        oracle.label,
        frozenset(points),
    )


@dataclass(frozen=True)
class InclusionReport:
    """Point-set inclusion results for the two containment chains."""

    k: int
    source: str
    chains: tuple[tuple[str, bool], ...]
    witness: Optional[QuotientPoint]

    @property
    def all_hold(self) -> bool:
        return all(ok for _, ok in self.chains)


def verify_inclusions(oracle: SetFunctionOracle, k: int) -> InclusionReport:
    """Check partition ⊆ disjoint ⊆ any and partition ⊆ covering ⊆ any, exactly."""
    sets = {m: profile(oracle, k, m, EXACT).points for m in Mode}
    checks = [
        ("partition⊆disjoint", sets[Mode.PARTITION] <= sets[Mode.DISJOINT]),
        ("disjoint⊆any", sets[Mode.DISJOINT] <= sets[Mode.ANY]),
        ("partition⊆covering", sets[Mode.PARTITION] <= sets[Mode.COVERING]),
        ("covering⊆any", sets[Mode.COVERING] <= sets[Mode.ANY]),
    ]
    witness = None
    pairs = {
        "partition⊆disjoint": (Mode.PARTITION, Mode.DISJOINT),
        "disjoint⊆any": (Mode.DISJOINT, Mode.ANY),
        "partition⊆covering": (Mode.PARTITION, Mode.COVERING),
        "covering⊆any": (Mode.COVERING, Mode.ANY),
    }
    for name, ok in checks:
        if not ok:
            small, big = pairs[name]
            witness = min(sets[small] - sets[big], key=lambda p: p.coords)
            break
    return InclusionReport(k, oracle.label, tuple(checks), witness)


@dataclass(frozen=True)
class DeltaBoundReport:
    """Hausdorff gaps between tuple disciplines against the k*m/rank bound."""

    k: int
    m: int
    precondition_met: bool
    richness_witness: Optional[tuple[SubsetMask, SubsetMask]]
    bound: Optional[Fraction]
    any_vs_disjoint: Optional[Fraction]
    covering_vs_partition: Optional[Fraction]

    @property
    def holds(self) -> bool:
        if not self.precondition_met:
            return False
        return (
            self.any_vs_disjoint <= self.bound
            and self.covering_vs_partition <= self.bound
        )


def delta_approx_bound_check(matroid: Matroid, k: int, m: int) -> DeltaBoundReport:
    """Check d(ANY, DISJOINT) and d(COVERING, PARTITION) against k*m/rank.

    The bound is claimed only when the matroid satisfies the richness
    condition for (k, m) and m >= k; otherwise the report states that the
    precondition failed and computes nothing.
    """
    from .matroid import check_richness

    richness = check_richness(matroid, k, m)
    if not richness.holds or m < k:
        return DeltaBoundReport(k, m, False, richness.witness, None, None, None)
    oracle = matroid.normalized_rank_oracle()
    bound = Fraction(k * m, matroid.full_rank())
    p_any = profile(oracle, k, Mode.ANY, FLATS)
    p_disj = profile(oracle, k, Mode.DISJOINT, FLATS)
    p_cov = profile(oracle, k, Mode.COVERING, FLATS)
    p_part = profile(oracle, k, Mode.PARTITION, EXACT)
    d1 = hausdorff(p_any, p_disj).distance
    d2 = hausdorff(p_cov, p_part).distance
    return DeltaBoundReport(k, m, True, None, bound, d1, d2)


def limit_set_filter(
    pset: ProfileSet, q: int, n: int, at_limit: bool = False
) -> ProfileSet:
    """Points whose largest singleton value clears the full-dimension threshold.

    For the normalized rank of GF(q)^n the finite-n threshold is
    1 - log_q(k)/n, compared exactly via integer powers; at_limit=True
    uses the limiting threshold 1 instead.
    """
    k = pset.k
    kept = []
    for p in pset.points:
        mx = p.max_singleton()
        if at_limit:
            ok = mx >= 1
        else:
            # mx >= 1 - log_q(k)/n  <=>  q**(n*(1-mx)) <= k
            expo = n * (1 - mx)
            if expo <= 0:
                ok = True
            else:
                ok = q ** expo.numerator <= k ** expo.denominator
        if ok:
            kept.append(p)
    suffix = "limit" if at_limit else f"threshold(q={q},n={n})"
    return ProfileSet(
        k, pset.mode, f"{pset.strategy}|{suffix}", pset.source, frozenset(kept)
    )
