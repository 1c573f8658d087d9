"""Simple graphs and the setfunctions they induce.

Covers blow-ups, labeled and unlabeled cut distances, cut-capacity
oracles under three normalizations, homomorphism densities, the
motif-deletion setfunction tau, weighted quotients with their node/edge
weight vectors, the exact translation between edge-weight matrices and
cut-capacity quotient vectors, blow-up respecting partition rounding,
and quotients of the normalized cycle-matroid rank by edge colorings.

Pair counts follow the ordered-incidence convention: e(S, T) counts an
edge once for each of its (endpoint in S, endpoint in T) orientations,
so an edge inside S ∩ T counts twice.  This makes the inner maximization
of the labeled cut distance separable per node.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Iterable, Optional, Sequence

from . import config
from .errors import (
    BlowUpCapError,
    DegenerateNormalizationError,
    GraphFormatError,
    GroundTooLargeError,
    KTooLargeError,
)
from .setfn import GroundSet, QuotientPoint, SetFunctionOracle, SubsetMask, quotient_point


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph; edges are canonical (u < v, sorted)."""

    node_count: int
    edges: tuple[tuple[int, int], ...]
    name: str = ""
    adjacency: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.node_count < 0:
            raise ValueError("node count must be nonnegative")
        seen = set()
        adj = [0] * self.node_count
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.node_count):
                raise ValueError(f"edge ({u},{v}) is not canonical for n={self.node_count}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            if prev is not None and (u, v) < prev:
                raise ValueError("edges must be sorted")
            seen.add((u, v))
            prev = (u, v)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adjacency", tuple(adj))

    @classmethod
    def make(cls, node_count: int, edges: Iterable[tuple[int, int]], name: str = "") -> "SimpleGraph":
        canon = sorted({(min(u, v), max(u, v)) for u, v in edges})
        return cls(node_count, tuple(canon), name)

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (), name=f"empty{n}")

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls.make(n, itertools.combinations(range(n), 2), name=f"K{n}")

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls.make(n, ((i, i + 1) for i in range(n - 1)), name=f"P{n}")

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        if n < 3:
            raise ValueError("cycles need at least three nodes")
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
        return cls.make(n, edges, name=f"C{n}")

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "SimpleGraph":
        edges = ((i, a + j) for i in range(a) for j in range(b))
        return cls.make(a + b, edges, name=f"K{a},{b}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_node_mask(self) -> int:
        return (1 << self.node_count) - 1

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def without_edges(self, edge_mask: SubsetMask) -> "SimpleGraph":
        kept = tuple(e for i, e in enumerate(self.edges) if not edge_mask >> i & 1)
        return SimpleGraph(self.node_count, kept)


def parse_graph(text: str, name: str = "") -> SimpleGraph:
    """Parse the edge-list format: first line "n m", then m lines "u v"."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())]
    idx = 0
    while idx < len(lines) and (not lines[idx] or lines[idx].startswith("#")):
        idx += 1
    if idx >= len(lines):
        raise GraphFormatError(1, "missing header line 'n m'")
    header = lines[idx].split()
    if len(header) != 2:
        raise GraphFormatError(idx + 1, "header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(idx + 1, "header must contain two integers") from None
    edges = []
    row = idx + 1
    found = 0
    while row < len(lines) and found < m:
        ln = lines[row]
        if ln and not ln.startswith("#"):
            pieces = ln.split()
            if len(pieces) != 2:
                raise GraphFormatError(row + 1, "edge lines must be 'u v'")
            try:
                u, v = int(pieces[0]), int(pieces[1])
            except ValueError:
                raise GraphFormatError(row + 1, "edge endpoints must be integers") from None
            if u == v:
                raise GraphFormatError(row + 1, "loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(row + 1, f"endpoint out of range 0..{n - 1}")
            edges.append((u, v))
            found += 1
        row += 1
    if found < m:
        raise GraphFormatError(len(lines), f"expected {m} edges, found {found}")
    try:
        return SimpleGraph.make(n, edges, name=name)
    except ValueError as exc:
        raise GraphFormatError(row, str(exc)) from None


def format_graph(g: SimpleGraph) -> str:
    lines = [f"{g.node_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def blow_up(g: SimpleGraph, t: int) -> SimpleGraph:
    """Replace every node u by t twins; twins of adjacent nodes are fully joined.

    New node u*t + c is the c-th twin of u, so `new // t` recovers the class.
    """
    if t < 1:
        raise ValueError("blow-up factor must be positive")
    edges = []
    for u, v in g.edges:
        for cu in range(t):
            for cv in range(t):
                edges.append((u * t + cu, v * t + cv))
    return SimpleGraph.make(g.node_count * t, edges, name=f"{g.name or 'G'}({t})")


def pair_count(g: SimpleGraph, s_mask: int, t_mask: int) -> int:
    """Ordered incidence count e(S, T); edges inside S ∩ T count twice."""
    adj = g.adjacency
    total = 0
    rest = t_mask
    while rest:
        low = rest & -rest
        total += (adj[low.bit_length() - 1] & s_mask).bit_count()
        rest ^= low
    return total


def cut_count(g: SimpleGraph, x_mask: int) -> int:
    """Number of edges with exactly one endpoint in X."""
    return pair_count(g, x_mask, g.full_node_mask & ~x_mask)


def cut_dist_labeled(g: SimpleGraph, h: SimpleGraph) -> Fraction:
    """max over S, T of |e_G(S,T) - e_H(S,T)| / n^2 on a common node set."""
    if g.node_count != h.node_count:
        raise ValueError("labeled cut distance needs a common node set")
    n = g.node_count
    if n > config.CUT_DIST_NODE_CAP:
        raise GroundTooLargeError(
            f"node count {n} exceeds CUT_DIST_NODE_CAP={config.CUT_DIST_NODE_CAP}"
        )
    if n == 0:
        return Fraction(0)
    ga, ha = g.adjacency, h.adjacency
    best = 0
    for s in range(1 << n):
        pos = neg = 0
        for w in range(n):
            d = (ga[w] & s).bit_count() - (ha[w] & s).bit_count()
            if d > 0:
                pos += d
            else:
                neg -= d
        if pos > best:
            best = pos
        if neg > best:
            best = neg
    return Fraction(best, n * n)


@dataclass(frozen=True)
class CutDistanceBound:
    """Upper bound on the blow-up/bijection infimum of the labeled distance."""

    value: Fraction
    t: int
    mapping: tuple[int, ...]
    truncated: bool


def _relabel(g: SimpleGraph, perm: Sequence[int]) -> SimpleGraph:
    return SimpleGraph.make(g.node_count, ((perm[u], perm[v]) for u, v in g.edges))


def cut_dist_unlabeled_upper(
    g: SimpleGraph,
    h: SimpleGraph,
    t_max: int = 1,
    trials: int = 8,
    seed: int = 0,
) -> CutDistanceBound:
    """Search blow-ups and bijections for a small labeled distance.

    Returns an upper bound only: candidate bijections are the identity
    plus seeded random permutations, each improved by greedy pairwise
    swaps.  For same-size graphs on at most 6 nodes all direct node
    bijections are exhausted as well (blow-ups cannot beat the best
    block-respecting alignment they induce).  One labeled-distance
    evaluation costs O(2^n * n) on the common blow-up size n, so blow-up
    pairs above BLOWUP_NODE_CAP nodes are skipped and sizes above 9 get
    a trimmed random portfolio; the result notes the truncation.  If no
    search was possible at all, raises BlowUpCapError.
    """
    if t_max < 1:
        raise ValueError("t_max must be positive")
    rng = Random(seed)
    best: Optional[tuple[Fraction, int, tuple[int, ...]]] = None
    truncated = False
    if g.node_count == h.node_count and g.node_count <= 6:
        for perm in itertools.permutations(range(h.node_count)):
            value = cut_dist_labeled(g, _relabel(h, perm))
            if best is None or value < best[0]:
                best = (value, 1, tuple(perm))
            if best[0] == 0:
                return CutDistanceBound(best[0], best[1], best[2], False)
    for t in range(1, t_max + 1):
        common = g.node_count * h.node_count * t
        if common > config.BLOWUP_NODE_CAP:
            truncated = True
            break
        gb = blow_up(g, h.node_count * t)
        hb = blow_up(h, g.node_count * t)
        n = common
        budget = trials if n <= 9 else min(trials, 2)

        def score(perm: list[int]) -> Fraction:
            return cut_dist_labeled(gb, _relabel(hb, perm))

        candidates = [list(range(n))]
        for _ in range(budget):
            perm = list(range(n))
            rng.shuffle(perm)
            candidates.append(perm)
        for perm in candidates:
            current = score(perm)
            sweeps = 0
            improved = True
            while improved and current > 0 and sweeps < 4:
                improved = False
                sweeps += 1
                for i in range(n):
                    for j in range(i + 1, n):
                        perm[i], perm[j] = perm[j], perm[i]
                        trial = score(perm)
                        if trial < current:
                            current = trial
                            improved = True
                        else:
                            perm[i], perm[j] = perm[j], perm[i]
            if best is None or current < best[0]:
                best = (current, t, tuple(perm))
            if best[0] == 0:
                break
        if best is not None and best[0] == 0:
            break
    if best is None:
        raise BlowUpCapError(
            f"blow-ups need {g.node_count * h.node_count} nodes, cap BLOWUP_NODE_CAP={config.BLOWUP_NODE_CAP}"
        )
    return CutDistanceBound(best[0], best[1], best[2], truncated)


class CutNormalization:
    """Denominator conventions for the cut capacity function."""

    EDGES = "edges"
    TWICE_EDGES = "twice-edges"
    NODES_SQUARED = "nodes-squared"

    ALL = (EDGES, TWICE_EDGES, NODES_SQUARED)

    @staticmethod
    def denominator(g: SimpleGraph, norm: str) -> int:
        if norm == CutNormalization.EDGES:
            if g.edge_count == 0:
                raise DegenerateNormalizationError("edge normalization needs at least one edge")
            return g.edge_count
        if norm == CutNormalization.TWICE_EDGES:
            if g.edge_count == 0:
                raise DegenerateNormalizationError("edge normalization needs at least one edge")
            return 2 * g.edge_count
        if norm == CutNormalization.NODES_SQUARED:
            return g.node_count * g.node_count
        raise ValueError(f"unknown normalization {norm!r}")


def cut_capacity_oracle(g: SimpleGraph, norm: str = CutNormalization.EDGES) -> SetFunctionOracle:
    """Crossing-edge count on node subsets, divided by the chosen constant.

    Symmetric (X and its complement give the same value) and submodular;
    vanishes on the empty set and on the whole node set.
    """
    denom = CutNormalization.denominator(g, norm)
    ground = GroundSet(g.node_count, tuple(str(v) for v in range(g.node_count)))
    return SetFunctionOracle(
        ground,
        lambda m: Fraction(cut_count(g, m), denom),
        normalization=denom,
        label=f"kappa({g.name or g.node_count};{norm})",
    )


def hom_count(pattern: SimpleGraph, target: SimpleGraph) -> int:
    """Number of adjacency-preserving maps V(pattern) -> V(target)."""
    pk = pattern.node_count
    if pk == 0:
        return 1
    # neighbors of vertex v among vertices already assigned (indices < v)
    earlier = [[u for u, w in pattern.edges if w == v] for v in range(pk)]
    adj = target.adjacency
    n = target.node_count
    count = 0
    assignment = [0] * pk

    def rec(v: int):
        nonlocal count
        if v == pk:
            count += 1
            return
        for cand in range(n):
            ok = True
            for u in earlier[v]:
                if not adj[assignment[u]] >> cand & 1:
                    ok = False
                    break
            if ok:
                assignment[v] = cand
                rec(v + 1)

    rec(0)
    return count


def hom_density(
    pattern: SimpleGraph,
    target: SimpleGraph,
    max_pattern_nodes: int = config.HOM_PATTERN_NODE_CAP,
    max_target_nodes: int = config.HOM_TARGET_NODE_CAP,
) -> Fraction:
    """Fraction of maps V(pattern) -> V(target) preserving adjacency."""
    if pattern.node_count > max_pattern_nodes:
        raise GroundTooLargeError(
            f"pattern has {pattern.node_count} nodes, cap {max_pattern_nodes}"
        )
    if target.node_count > max_target_nodes:
        raise GroundTooLargeError(
            f"target has {target.node_count} nodes, cap {max_target_nodes}"
        )
    if target.node_count == 0:
        raise ValueError("homomorphism density needs a nonempty target")
    return Fraction(hom_count(pattern, target), target.node_count ** pattern.node_count)


def tau_oracle(
    pattern: SimpleGraph,
    g: SimpleGraph,
    max_target_nodes: int = config.HOM_TARGET_NODE_CAP,
) -> SetFunctionOracle:
    """Density lost when all edges outside X are kept: 1 - t(F, G minus X).

    Ground set is the edge set of g.  The value on the empty set is
    1 - t(F, G), which is nonzero in general, so the usual vanishing
    convention is waived for this oracle; quotient vectors are therefore
    not defined for it, but submodularity and monotonicity checks are.
    """
    def ev(mask: SubsetMask) -> Fraction:
        sub = g.without_edges(mask)
        return 1 - hom_density(pattern, sub, max_target_nodes=max_target_nodes)

    ground = GroundSet(g.edge_count, tuple(f"{u}-{v}" for u, v in g.edges))
    return SetFunctionOracle(
        ground,
        ev,
        normalization=1,
        label=f"tau({pattern.name or 'F'};{g.name or 'G'})",
        require_zero_empty=False,
    )


def shifted_tau_oracle(
    pattern: SimpleGraph,
    g: SimpleGraph,
    max_target_nodes: int = config.HOM_TARGET_NODE_CAP,
) -> SetFunctionOracle:
    """Motif-deletion function rebased to vanish on the empty set.

    Subtracting the empty-set value t-gap keeps submodularity and
    monotonicity and makes quotient vectors well defined; the shift
    (the motif density of g) is recorded in the label.
    """
    base = hom_density(pattern, g, max_target_nodes=max_target_nodes)

    def ev(mask: SubsetMask) -> Fraction:
        sub = g.without_edges(mask)
        return base - hom_density(pattern, sub, max_target_nodes=max_target_nodes)

    ground = GroundSet(g.edge_count, tuple(f"{u}-{v}" for u, v in g.edges))
    return SetFunctionOracle(
        ground,
        ev,
        normalization=1,
        label=f"tau({pattern.name or 'F'};{g.name or 'G'}) rebased at t={base}",
    )


@dataclass(frozen=True)
class WeightedQuotient:
    """Node weights, pairwise edge densities, and raw pair fractions of a partition.

    alpha[i] = |V_i| / |V|; beta[i][j] = e(V_i, V_j) / (|V_i| |V_j|) with the
    convention 0 for empty classes; gamma[i][j] = e(V_i, V_j) / |V|^2.
    """

    k: int
    alpha: tuple[Fraction, ...]
    beta: tuple[tuple[Fraction, ...], ...]
    gamma: tuple[tuple[Fraction, ...], ...]


def weighted_quotient(g: SimpleGraph, parts: Sequence[int]) -> WeightedQuotient:
    """Weight data of the quotient of g by a labeled partition of its nodes."""
    k = len(parts)
    union = 0
    total = 0
    for p in parts:
        union |= p
        total += p.bit_count()
    if union != g.full_node_mask or total != g.node_count:
        raise ValueError("parts must form a partition of the node set")
    n = g.node_count
    sizes = [p.bit_count() for p in parts]
    alpha = tuple(Fraction(s, n) for s in sizes)
    beta = []
    gamma = []
    for i in range(k):
        brow = []
        grow = []
        for j in range(k):
            e = pair_count(g, parts[i], parts[j])
            brow.append(Fraction(e, sizes[i] * sizes[j]) if sizes[i] and sizes[j] else Fraction(0))
            grow.append(Fraction(e, n * n))
        beta.append(tuple(brow))
        gamma.append(tuple(grow))
    return WeightedQuotient(k, alpha, tuple(beta), tuple(gamma))


def kappa_from_gamma(wq: WeightedQuotient) -> QuotientPoint:
    """Cut-capacity quotient vector (nodes-squared normalization) from gamma."""
    k = wq.k
    coords = []
    for subset in range(1 << k):
        total = Fraction(0)
        for i in range(k):
            if not subset >> i & 1:
                continue
            for j in range(k):
                if subset >> j & 1:
                    continue
                total += wq.gamma[i][j]
        coords.append(total)
    return QuotientPoint(k, tuple(coords))


def gamma_from_kappa(point: QuotientPoint) -> dict[tuple[int, int], Fraction]:
    """Off-diagonal gamma entries recovered from singleton and pair cut values."""
    out = {}
    for i in range(point.k):
        for j in range(i + 1, point.k):
            out[(i, j)] = (
                point.coords[1 << i] + point.coords[1 << j] - point.coords[(1 << i) | (1 << j)]
            ) / 2
    return out


@dataclass(frozen=True)
class RoundingResult:
    parts: tuple[int, ...]
    deviation: Fraction
    point_before: QuotientPoint
    point_after: QuotientPoint


def rounding_partition(
    base: SimpleGraph,
    t: int,
    parts: Sequence[int],
    seed: int,
    norm: str = CutNormalization.EDGES,
) -> RoundingResult:
    """Round a partition of the t-fold blow-up so no twin class is split.

    Each twin class moves wholly into part i with probability
    |U_i ∩ class| / t (seeded).  The report carries the sup-norm gap
    between the cut-capacity quotient vectors before and after.
    """
    gt = blow_up(base, t)
    union = 0
    total = 0
    for p in parts:
        union |= p
        total += p.bit_count()
    if union != gt.full_node_mask or total != gt.node_count:
        raise ValueError("parts must form a partition of the blow-up node set")
    rng = Random(seed)
    k = len(parts)
    rounded = [0] * k
    for u in range(base.node_count):
        block = ((1 << t) - 1) << (u * t)
        counts = [(p & block).bit_count() for p in parts]
        threshold = rng.randrange(t)
        acc = 0
        chosen = k - 1
        for i, c in enumerate(counts):
            acc += c
            if threshold < acc:
                chosen = i
                break
        rounded[chosen] |= block
    oracle = cut_capacity_oracle(gt, norm)
    before = quotient_point(oracle, list(parts))
    after = quotient_point(oracle, rounded)
    deviation = max(abs(a - b) for a, b in zip(before.coords, after.coords))
    return RoundingResult(tuple(rounded), deviation, before, after)


@dataclass(frozen=True)
class EdgeColoringQuotient:
    """Quotient of the normalized cycle-matroid rank by color classes.

    component_sizes[c][u] is the number of nodes in the color-c component
    containing u (an isolated node counts as a component of size 1).
    """

    point: QuotientPoint
    component_sizes: tuple[tuple[int, ...], ...]


def edge_coloring_quotient(g: SimpleGraph, colors: Sequence[int], num_colors: int) -> EdgeColoringQuotient:
    """Quotient vector of rank/|V| under the partition of edges by color."""
    from .matroid import GraphicMatroid

    if num_colors < 1:
        raise ValueError("need at least one color class")
    if num_colors > config.QUOTIENT_K_CAP:
        raise KTooLargeError(
            f"{num_colors} colors exceed QUOTIENT_K_CAP={config.QUOTIENT_K_CAP}"
        )
    if len(colors) != g.edge_count:
        raise ValueError("need one color per edge")
    if any(not 0 <= c < num_colors for c in colors):
        raise ValueError("colors must lie in 0..num_colors-1")
    if g.node_count == 0:
        raise ValueError("normalization by |V| needs at least one node")
    parts = [0] * num_colors
    for i, c in enumerate(colors):
        parts[c] |= 1 << i
    matroid = GraphicMatroid(g)
    oracle = matroid.normalized_rank_oracle(denominator=g.node_count)
    point = quotient_point(oracle, parts)
    sizes = []
    for c in range(num_colors):
        parent = list(range(g.node_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, (u, v) in enumerate(g.edges):
            if colors[i] == c:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        csize: dict[int, int] = {}
        for v in range(g.node_count):
            root = find(v)
            csize[root] = csize.get(root, 0) + 1
        sizes.append(tuple(csize[find(v)] for v in range(g.node_count)))
    return EdgeColoringQuotient(point, tuple(sizes))
