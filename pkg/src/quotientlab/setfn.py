"""Ground sets, subset masks, exact setfunction oracles, quotient vectors.

Subsets of a ground set of size n are encoded as integer bitmasks:
element i belongs to the subset iff bit i is set.  Values are
`fractions.Fraction`, so every computation downstream (deduplication,
Hausdorff distances, bound checks) is exact; floats appear only when
reports are rendered.

Quotient vectors over k labeled parts use the same index convention: the
value for a set I of part indices sits at position sum(2**i for i in I).
The serialization format relies on this convention, do not change it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Callable, Iterable, Iterator, Sequence

from . import config
from .errors import GroundTooLargeError, KTooLargeError, MaskWidthError

SubsetMask = int

ZERO = Fraction(0)


def iter_elements(mask: SubsetMask) -> Iterator[int]:
    """Yield the element indices of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> SubsetMask:
    out = 0
    for e in elements:
        out |= 1 << e
    return out


def mask_repr(mask: SubsetMask, ground: "GroundSet | None" = None) -> str:
    if ground is None:
        return "{" + ",".join(str(e) for e in iter_elements(mask)) + "}"
    return "{" + ",".join(ground.element_label(e) for e in iter_elements(mask)) + "}"


@dataclass(frozen=True)
class GroundSet:
    """A finite ground set with elements 0..size-1 and optional display labels."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("ground set size must be nonnegative")
        if self.size > config.GROUND_SIZE_CAP:
            raise GroundTooLargeError(
                f"ground set of size {self.size} exceeds GROUND_SIZE_CAP={config.GROUND_SIZE_CAP}"
            )
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError("labels, when present, must have length == size")

    @property
    def full_mask(self) -> SubsetMask:
        return (1 << self.size) - 1

    def check_mask(self, mask: SubsetMask) -> None:
        if mask < 0 or mask >> self.size:
            raise MaskWidthError(
                f"mask {bin(mask)} does not fit a ground set of size {self.size}"
            )

    def element_label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(i)

    def subsets(self) -> Iterator[SubsetMask]:
        return iter(range(1 << self.size))


class SetFunctionOracle:
    """A total, deterministic, exactly-valued function on all subsets.

    Values are cached per mask; the evaluation callable must be pure.
    Oracles are immutable after construction (the cache only memoizes)
    and safe to share.  By default the function must vanish on the empty
    set; pass require_zero_empty=False for shifted functions such as the
    motif-deletion functions, which start at a nonzero base value.
    """

    __slots__ = ("ground", "normalization", "label", "matroid", "_eval_fn", "_cache")

    def __init__(
        self,
        ground: GroundSet,
        eval_fn: Callable[[SubsetMask], Fraction],
        normalization: Fraction | int = 1,
        label: str = "",
        matroid=None,
        require_zero_empty: bool = True,
    ):
        self.ground = ground
        self.normalization = Fraction(normalization)
        self.label = label
        self.matroid = matroid
        self._eval_fn = eval_fn
        empty = Fraction(eval_fn(0))
        if require_zero_empty and empty != 0:
            raise ValueError(f"setfunction must vanish on the empty set, got {empty}")
        self._cache: dict[int, Fraction] = {0: empty}

    @property
    def size(self) -> int:
        return self.ground.size

    @property
    def full_mask(self) -> SubsetMask:
        return self.ground.full_mask

    def evaluate(self, mask: SubsetMask) -> Fraction:
        self.ground.check_mask(mask)
        cached = self._cache.get(mask)
        if cached is None:
            cached = Fraction(self._eval_fn(mask))
            self._cache[mask] = cached
        return cached

    def __repr__(self) -> str:  # pragma: no cover
        return f"SetFunctionOracle({self.label or 'anonymous'}, n={self.size})"


def oracle_from_table(values: Sequence[Fraction | int], label: str = "table") -> SetFunctionOracle:
    """Build an oracle from a dense table indexed by subset mask."""
    n = (len(values) - 1).bit_length()
    if len(values) != 1 << n:
        raise ValueError("table length must be a power of two")
    table = tuple(Fraction(v) for v in values)
    return SetFunctionOracle(GroundSet(n), lambda m: table[m], label=label)


@dataclass(frozen=True)
class QuotientPoint:
    """The vector of values a setfunction takes on unions of k labeled parts.

    coords[I] = phi(union of the parts named by the bits of I); in
    particular coords[0] = 0 and coords has length 2**k.
    """

    k: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("quotient points need at least one part")
        if len(self.coords) != 1 << self.k:
            raise ValueError("coords must have length 2**k")
        if self.coords[0] != 0:
            raise ValueError("coords[empty] must be 0")

    def singleton(self, i: int) -> Fraction:
        return self.coords[1 << i]

    def value(self, parts_mask: int) -> Fraction:
        return self.coords[parts_mask]

    def scale(self, factor: Fraction | int) -> "QuotientPoint":
        c = Fraction(factor)
        return QuotientPoint(self.k, tuple(x * c for x in self.coords))

    def max_singleton(self) -> Fraction:
        return max(self.coords[1 << i] for i in range(self.k))

    def as_oracle(self, label: str = "derived") -> SetFunctionOracle:
        """Reinterpret the point as a setfunction on ground set [k]."""
        if self.k > config.DERIVED_GROUND_CAP:
            raise GroundTooLargeError(
                f"point with k={self.k} exceeds DERIVED_GROUND_CAP={config.DERIVED_GROUND_CAP}"
            )
        coords = self.coords
        return SetFunctionOracle(GroundSet(self.k), lambda m: coords[m], label=label)


def union_table(parts: Sequence[SubsetMask]) -> list[SubsetMask]:
    """Table of unions of parts over all part-index sets, in index order."""
    k = len(parts)
    unions = [0] * (1 << k)
    for im in range(1, 1 << k):
        low = im & -im
        unions[im] = unions[im ^ low] | parts[low.bit_length() - 1]
    return unions


def quotient_point(oracle: SetFunctionOracle, parts: Sequence[SubsetMask]) -> QuotientPoint:
    """Evaluate the oracle on all unions of the given (ordered) parts.

    Parts may overlap or be empty; partition/disjointness/covering
    disciplines are the caller's business (see the profiles module).
    """
    k = len(parts)
    if k < 1:
        raise ValueError("need at least one part")
    if k > config.QUOTIENT_K_CAP:
        raise KTooLargeError(f"k={k} exceeds QUOTIENT_K_CAP={config.QUOTIENT_K_CAP}")
    for p in parts:
        oracle.ground.check_mask(p)
    if oracle.evaluate(0) != 0:
        raise ValueError("quotient vectors are defined only for functions vanishing on the empty set")
    ev = oracle.evaluate
    return QuotientPoint(k, tuple(ev(u) for u in union_table(parts)))


@dataclass(frozen=True)
class PairViolation:
    """Witness of a failed two-set inequality; slack is the (negative) margin."""

    x: SubsetMask
    y: SubsetMask
    slack: Fraction


def _require_exhaustive(oracle: SetFunctionOracle, alternative: str) -> int:
    n = oracle.size
    if n > config.EXHAUSTIVE_CHECK_CAP:
        raise GroundTooLargeError(
            f"ground size {n} exceeds EXHAUSTIVE_CHECK_CAP={config.EXHAUSTIVE_CHECK_CAP}; use {alternative}"
        )
    return n


def check_submodular(oracle: SetFunctionOracle) -> list[PairViolation]:
    """Exhaustively certify submodularity; return violating pairs if any.

    Scans the exchange form f(X+e) + f(X+f) >= f(X) + f(X+e+f) over all
    X and distinct e, f outside X, which is equivalent to the two-set
    inequality over all pairs; reported violations are genuine pairs
    (X+e, X+f) with negative slack.  Empty result means submodular.
    """
    n = _require_exhaustive(oracle, "check_submodular_sampled")
    ev = oracle.evaluate
    violations = []
    for base in range(1 << n):
        free = [i for i in range(n) if not base >> i & 1]
        fb = ev(base)
        for a, e in enumerate(free):
            xe = base | 1 << e
            fxe = ev(xe)
            for f_ in free[a + 1:]:
                xf = base | 1 << f_
                slack = fxe + ev(xf) - fb - ev(xe | 1 << f_)
                if slack < 0:
                    violations.append(PairViolation(xe, xf, slack))
    return violations


def check_monotone(oracle: SetFunctionOracle) -> list[PairViolation]:
    """Exhaustively certify monotonicity; violations are pairs X < X+e."""
    n = _require_exhaustive(oracle, "check_monotone_sampled")
    ev = oracle.evaluate
    violations = []
    for base in range(1 << n):
        fb = ev(base)
        for e in range(n):
            if base >> e & 1:
                continue
            bigger = ev(base | 1 << e)
            if bigger < fb:
                violations.append(PairViolation(base, base | 1 << e, bigger - fb))
    return violations


def check_submodular_sampled(oracle: SetFunctionOracle, seed: int, samples: int) -> list[PairViolation]:
    """Seeded random-pair submodularity probe for larger grounds."""
    rng = Random(seed)
    full = oracle.full_mask
    ev = oracle.evaluate
    violations = []
    for _ in range(samples):
        x = rng.randint(0, full)
        y = rng.randint(0, full)
        slack = ev(x) + ev(y) - ev(x & y) - ev(x | y)
        if slack < 0:
            violations.append(PairViolation(x, y, slack))
    return violations


def check_monotone_sampled(oracle: SetFunctionOracle, seed: int, samples: int) -> list[PairViolation]:
    """Seeded random-chain monotonicity probe for larger grounds."""
    rng = Random(seed)
    full = oracle.full_mask
    ev = oracle.evaluate
    violations = []
    for _ in range(samples):
        x = rng.randint(0, full)
        y = x | rng.randint(0, full)
        if ev(y) < ev(x):
            violations.append(PairViolation(x, y, ev(y) - ev(x)))
    return violations
