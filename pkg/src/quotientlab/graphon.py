"""Step graphons: symmetric piecewise-constant kernels on [0,1)^2.

A step graphon is given by breakpoints 0 = b_0 < ... < b_r = 1 and a
symmetric r x r matrix of rational values in [0,1].  Node subsets are
represented as masks over step indices; callers needing a finer subset
refine the graphon first so the subset respects step boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import config
from .errors import GraphFormatError, GroundTooLargeError
from .graphs import SimpleGraph


@dataclass(frozen=True)
class StepGraphon:
    breakpoints: tuple[Fraction, ...]
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        bp = self.breakpoints
        if len(bp) < 2 or bp[0] != 0 or bp[-1] != 1:
            raise ValueError("breakpoints must run from 0 to 1")
        if any(a >= b for a, b in zip(bp, bp[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        r = len(bp) - 1
        if len(self.values) != r or any(len(row) != r for row in self.values):
            raise ValueError("value matrix must be r x r")
        for i in range(r):
            for j in range(r):
                v = self.values[i][j]
                if not 0 <= v <= 1:
                    raise ValueError("values must lie in [0,1]")
                if v != self.values[j][i]:
                    raise ValueError("value matrix must be symmetric")

    @property
    def steps(self) -> int:
        return len(self.breakpoints) - 1

    @property
    def lengths(self) -> tuple[Fraction, ...]:
        bp = self.breakpoints
        return tuple(b - a for a, b in zip(bp, bp[1:]))

    @classmethod
    def constant(cls, p: Fraction | int) -> "StepGraphon":
        return cls((Fraction(0), Fraction(1)), ((Fraction(p),),))

    @classmethod
    def from_graph(cls, g: SimpleGraph) -> "StepGraphon":
        """Equal steps of width 1/n; value 1 on adjacent blocks, 0 otherwise."""
        n = g.node_count
        if n == 0:
            raise ValueError("graphon representation needs at least one node")
        bp = tuple(Fraction(i, n) for i in range(n + 1))
        vals = [
            [Fraction(1) if g.adjacency[i] >> j & 1 else Fraction(0) for j in range(n)]
            for i in range(n)
        ]
        return cls(bp, tuple(tuple(row) for row in vals))

    def refine(self, extra: Iterable[Fraction]) -> "StepGraphon":
        """Equivalent graphon on the breakpoint grid extended by `extra`."""
        pts = sorted(set(self.breakpoints) | {Fraction(x) for x in extra})
        if pts[0] < 0 or pts[-1] > 1:
            raise ValueError("refinement points must lie in [0,1]")
        old = self.breakpoints

        def owner(x: Fraction) -> int:
            # index of the old step containing [x, next)
            for i in range(len(old) - 1):
                if old[i] <= x < old[i + 1]:
                    return i
            return len(old) - 2

        owners = [owner(x) for x in pts[:-1]]
        vals = tuple(
            tuple(self.values[oi][oj] for oj in owners) for oi in owners
        )
        return StepGraphon(tuple(pts), vals)

    def total_weight(self) -> Fraction:
        lens = self.lengths
        return sum(
            self.values[i][j] * lens[i] * lens[j]
            for i in range(self.steps)
            for j in range(self.steps)
        )


def graphon_cut_capacity(w: StepGraphon, step_mask: int) -> Fraction:
    """Weight crossing a union of steps, divided by the total weight."""
    total = w.total_weight()
    if total == 0:
        raise ZeroDivisionError("cut capacity of a graphon needs positive total weight")
    lens = w.lengths
    crossing = Fraction(0)
    for i in range(w.steps):
        if not step_mask >> i & 1:
            continue
        for j in range(w.steps):
            if step_mask >> j & 1:
                continue
            crossing += w.values[i][j] * lens[i] * lens[j]
    return crossing / total


def graphon_cut_capacity_oracle(w: StepGraphon):
    """Cut capacity of a step graphon as a setfunction on its step indices.

    Lets the profile machinery enumerate quotient sets of the graphon;
    parts finer than the current steps require refining first.
    """
    from .setfn import GroundSet, SetFunctionOracle

    if w.total_weight() == 0:
        raise ZeroDivisionError("cut capacity of a graphon needs positive total weight")
    labels = tuple(f"[{a},{b})" for a, b in zip(w.breakpoints, w.breakpoints[1:]))
    return SetFunctionOracle(
        GroundSet(w.steps, labels),
        lambda m: graphon_cut_capacity(w, m),
        normalization=w.total_weight(),
        label=f"kappa(step-graphon r={w.steps})",
    )


def hom_density_step(
    pattern: SimpleGraph,
    w: StepGraphon,
    max_pattern_nodes: int = config.HOM_PATTERN_NODE_CAP,
    max_steps: int = config.GRAPHON_STEP_CAP,
) -> Fraction:
    """Exact motif density in a step graphon (weighted sum over step maps)."""
    if pattern.node_count > max_pattern_nodes:
        raise GroundTooLargeError(
            f"pattern has {pattern.node_count} nodes, cap {max_pattern_nodes}"
        )
    if w.steps > max_steps:
        raise GroundTooLargeError(f"graphon has {w.steps} steps, cap {max_steps}")
    lens = w.lengths
    pk = pattern.node_count
    if pk == 0:
        return Fraction(1)
    earlier = [[u for u, x in pattern.edges if x == v] for v in range(pk)]
    total = Fraction(0)
    assignment = [0] * pk

    def rec(v: int, weight: Fraction):
        nonlocal total
        if v == pk:
            total += weight
            return
        for s in range(w.steps):
            factor = lens[s]
            for u in earlier[v]:
                factor *= w.values[assignment[u]][s]
                if factor == 0:
                    break
            if factor == 0:
                continue
            assignment[v] = s
            rec(v + 1, weight * factor)

    rec(0, Fraction(1))
    return total


def parse_step_graphon(text: str) -> StepGraphon:
    """Parse: first line r, then the r breakpoints b_1..b_r, then r rows of r rationals."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError(1, "empty graphon file")
    try:
        r = int(lines[0])
    except ValueError:
        raise GraphFormatError(1, "first line must be the number of steps") from None
    if len(lines) < 2 + r:
        raise GraphFormatError(len(lines), f"expected breakpoints line and {r} value rows")
    try:
        upper = [Fraction(tok) for tok in lines[1].split()]
    except ValueError:
        raise GraphFormatError(2, "breakpoints must be rationals like 1/3") from None
    if len(upper) != r:
        raise GraphFormatError(2, f"expected {r} breakpoints")
    rows = []
    for i in range(r):
        toks = lines[2 + i].split()
        if len(toks) != r:
            raise GraphFormatError(3 + i, f"expected {r} values")
        try:
            rows.append(tuple(Fraction(tok) for tok in toks))
        except ValueError:
            raise GraphFormatError(3 + i, "values must be rationals") from None
    try:
        return StepGraphon((Fraction(0),) + tuple(upper), tuple(rows))
    except ValueError as exc:
        raise GraphFormatError(2, str(exc)) from None


def format_step_graphon(w: StepGraphon) -> str:
    lines = [str(w.steps)]
    lines.append(" ".join(str(b) for b in w.breakpoints[1:]))
    for row in w.values:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"
