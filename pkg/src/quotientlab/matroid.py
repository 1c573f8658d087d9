"""Matroid oracles: graphic, linear over GF(q), and direct sums.

Rank calls are exact and memoized per subset mask.  On top of the rank
oracle the module provides closure and flat enumeration (breadth-first
closure extension), the flat-pair richness condition, matroid union via
augmenting paths with a min-formula certificate, and the two lattice
embeddings between full linear spaces GF(q)^m -> GF(q)^n (zero padding,
which preserves ranks, and block repetition, which preserves normalized
ranks when m divides n).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import config
from .errors import (
    DivisibilityError,
    FlatExplosionError,
    GroundTooLargeError,
)
from .gfq import field, index_from_vector, vector_from_index
from .graphs import SimpleGraph
from .setfn import GroundSet, SetFunctionOracle, SubsetMask, iter_elements


class Matroid:
    """Base class: subclasses implement _rank(mask) on ground 0..size-1."""

    def __init__(self, ground: GroundSet):
        self.ground = ground
        self._rank_cache: dict[int, int] = {0: 0}
        self._closure_cache: dict[int, int] = {}

    @property
    def size(self) -> int:
        return self.ground.size

    @property
    def full_mask(self) -> SubsetMask:
        return self.ground.full_mask

    def _rank(self, mask: SubsetMask) -> int:  # pragma: no cover
        raise NotImplementedError

    def rank(self, mask: SubsetMask) -> int:
        self.ground.check_mask(mask)
        cached = self._rank_cache.get(mask)
        if cached is None:
            cached = self._rank(mask)
            self._rank_cache[mask] = cached
        return cached

    def full_rank(self) -> int:
        return self.rank(self.full_mask)

    def _closure(self, mask: SubsetMask) -> SubsetMask:
        r = self.rank(mask)
        out = mask
        rest = self.full_mask & ~mask
        for e in iter_elements(rest):
            if self.rank(mask | 1 << e) == r:
                out |= 1 << e
        return out

    def closure(self, mask: SubsetMask) -> SubsetMask:
        self.ground.check_mask(mask)
        cached = self._closure_cache.get(mask)
        if cached is None:
            cached = self._closure(mask)
            self._closure_cache[mask] = cached
        return cached

    def is_flat(self, mask: SubsetMask) -> bool:
        return self.closure(mask) == mask

    def loops(self) -> SubsetMask:
        return self.closure(0)

    def flats(self, count_cap: int | None = None) -> tuple[SubsetMask, ...]:
        """All flats, sorted, found by closing single-element extensions."""
        if self.size > config.FLAT_GROUND_CAP:
            raise GroundTooLargeError(
                f"ground size {self.size} exceeds FLAT_GROUND_CAP={config.FLAT_GROUND_CAP}"
            )
        cap = config.FLAT_COUNT_CAP if count_cap is None else count_cap
        start = self.closure(0)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for flat in frontier:
                rest = self.full_mask & ~flat
                for e in iter_elements(rest):
                    bigger = self.closure(flat | 1 << e)
                    if bigger not in seen:
                        seen.add(bigger)
                        nxt.append(bigger)
                        if len(seen) > cap:
                            raise FlatExplosionError(
                                f"more than FLAT_COUNT_CAP={cap} flats"
                            )
            frontier = nxt
        return tuple(sorted(seen))

    def flats_with_ranks(self, count_cap: int | None = None) -> tuple[tuple[SubsetMask, int], ...]:
        return tuple((f, self.rank(f)) for f in self.flats(count_cap))

    def element_label(self, i: int) -> str:
        return self.ground.element_label(i)

    def rank_oracle(self, label: str | None = None) -> SetFunctionOracle:
        return SetFunctionOracle(
            self.ground,
            lambda m: Fraction(self.rank(m)),
            normalization=1,
            label=label or f"rank({self._name()})",
            matroid=self,
        )

    def normalized_rank_oracle(
        self, denominator: int | None = None, label: str | None = None
    ) -> SetFunctionOracle:
        """Rank divided by a constant, by default the rank of the ground set."""
        denom = self.full_rank() if denominator is None else denominator
        if denom <= 0:
            raise ValueError("normalization denominator must be positive")
        return SetFunctionOracle(
            self.ground,
            lambda m: Fraction(self.rank(m), denom),
            normalization=denom,
            label=label or f"rank({self._name()})/{denom}",
            matroid=self,
        )

    def _name(self) -> str:
        return type(self).__name__


class GraphicMatroid(Matroid):
    """Cycle matroid of a simple graph; ground set = edges in canonical order."""

    def __init__(self, graph: SimpleGraph):
        self.graph = graph
        labels = tuple(f"{u}-{v}" for u, v in graph.edges)
        super().__init__(GroundSet(len(graph.edges), labels))

    def _rank(self, mask: SubsetMask) -> int:
        # number of union-find merges == |V| - #components restricted to all nodes
        parent = list(range(self.graph.node_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merges = 0
        edges = self.graph.edges
        for e in iter_elements(mask):
            u, v = edges[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                merges += 1
        return merges

    def _closure(self, mask: SubsetMask) -> SubsetMask:
        parent = list(range(self.graph.node_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        edges = self.graph.edges
        for e in iter_elements(mask):
            u, v = edges[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        out = 0
        for i, (u, v) in enumerate(edges):
            if find(u) == find(v):
                out |= 1 << i
        return out

    def _name(self) -> str:
        return f"cycle[{self.graph.name or self.graph.node_count}]"


class LinearMatroid(Matroid):
    """Column matroid of a list of vectors over GF(q)."""

    def __init__(self, q: int, columns: Sequence[tuple[int, ...]], name: str = ""):
        self.q = q
        self.field = field(q)
        cols = [tuple(c) for c in columns]
        if cols:
            dim = len(cols[0])
            if any(len(c) != dim for c in cols):
                raise ValueError("columns must share one dimension")
            if any(not 0 <= x < q for c in cols for x in c):
                raise ValueError("column entries must lie in 0..q-1")
        else:
            dim = 0
        self.dim = dim
        self.columns = tuple(cols)
        self.name = name
        labels = tuple("".join(str(x) for x in c) for c in cols)
        super().__init__(GroundSet(len(cols), labels))
        if q == 2:
            self._bits = tuple(index_from_vector(c, 2) for c in cols)
        else:
            self._bits = None

    @classmethod
    def full_space(cls, q: int, n: int) -> "LinearMatroid":
        """All q**n vectors of GF(q)^n, the zero vector included (a loop)."""
        cols = [vector_from_index(j, q, n) for j in range(q**n)]
        return cls(q, cols, name=f"gf({q})^{n}")

    def _basis_gf2(self, mask: SubsetMask) -> dict[int, int]:
        basis: dict[int, int] = {}
        for e in iter_elements(mask):
            v = self._bits[e]
            while v:
                msb = v.bit_length() - 1
                if msb in basis:
                    v ^= basis[msb]
                else:
                    basis[msb] = v
                    break
        return basis

    def _basis_general(self, mask: SubsetMask) -> list[tuple[int, list[int]]]:
        f = self.field
        pivots: list[tuple[int, list[int]]] = []
        for e in iter_elements(mask):
            v = list(self.columns[e])
            for pi, pv in pivots:
                c = v[pi]
                if c:
                    v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, pv)]
            lead = next((i for i, x in enumerate(v) if x), None)
            if lead is not None:
                scale = f.inv(v[lead])
                pivots.append((lead, [f.mul(scale, x) for x in v]))
        return pivots

    def _rank(self, mask: SubsetMask) -> int:
        if self._bits is not None:
            return len(self._basis_gf2(mask))
        return len(self._basis_general(mask))

    def _closure(self, mask: SubsetMask) -> SubsetMask:
        out = 0
        if self._bits is not None:
            basis = self._basis_gf2(mask)
            for i, v in enumerate(self._bits):
                w = v
                while w:
                    msb = w.bit_length() - 1
                    if msb not in basis:
                        break
                    w ^= basis[msb]
                if w == 0:
                    out |= 1 << i
            return out
        f = self.field
        pivots = self._basis_general(mask)
        for i, col in enumerate(self.columns):
            v = list(col)
            for pi, pv in pivots:
                c = v[pi]
                if c:
                    v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, pv)]
            if not any(v):
                out |= 1 << i
        return out

    def _name(self) -> str:
        return self.name or f"linear(q={self.q},m={self.size})"


class DirectSumMatroid(Matroid):
    """Disjoint union of matroids; ranks add across the parts."""

    def __init__(self, parts: Sequence[Matroid], name: str = ""):
        self.parts = tuple(parts)
        self.offsets = []
        labels = []
        off = 0
        for idx, part in enumerate(self.parts):
            self.offsets.append(off)
            labels.extend(f"p{idx}:{part.element_label(i)}" for i in range(part.size))
            off += part.size
        self.name = name
        super().__init__(GroundSet(off, tuple(labels)))

    def _split(self, mask: SubsetMask) -> list[SubsetMask]:
        out = []
        for part, off in zip(self.parts, self.offsets):
            out.append((mask >> off) & part.full_mask)
        return out

    def _rank(self, mask: SubsetMask) -> int:
        return sum(p.rank(m) for p, m in zip(self.parts, self._split(mask)))

    def _closure(self, mask: SubsetMask) -> SubsetMask:
        out = 0
        for part, off, sub in zip(self.parts, self.offsets, self._split(mask)):
            out |= part.closure(sub) << off
        return out

    def _name(self) -> str:
        return self.name or "⊕".join(p._name() for p in self.parts)


class Restriction(Matroid):
    """The base matroid with every element outside `support` turned into a loop."""

    def __init__(self, base: Matroid, support: SubsetMask):
        base.ground.check_mask(support)
        self.base = base
        self.support = support
        super().__init__(base.ground)

    def _rank(self, mask: SubsetMask) -> int:
        return self.base.rank(mask & self.support)


@dataclass(frozen=True)
class RichnessReport:
    """Outcome of the flat-pair density condition for parameters (k, m)."""

    k: int
    m: int
    holds: bool
    witness: Optional[tuple[SubsetMask, SubsetMask]]


def check_richness(matroid: Matroid, k: int, m: int) -> RichnessReport:
    """Check |A \\ F| >= k * (r(A) - r(F)) over all flat pairs F <= A with r(A) >= m."""
    flats = matroid.flats()
    ranks = {f: matroid.rank(f) for f in flats}
    for a in flats:
        ra = ranks[a]
        if ra < m:
            continue
        for f in flats:
            if f & ~a:
                continue
            if (a & ~f).bit_count() < k * (ra - ranks[f]):
                return RichnessReport(k, m, False, (f, a))
    return RichnessReport(k, m, True, None)


@dataclass(frozen=True)
class MatroidUnionResult:
    """Largest set partitionable into per-matroid independent parts.

    `certificate` is a set Y attaining rank == |Y| + sum_i r_i(E \\ Y),
    read off the final failed search (unreachable elements).
    """

    rank: int
    parts: tuple[SubsetMask, ...]
    certificate: SubsetMask
    certificate_value: int


def _independent(matroid: Matroid, mask: SubsetMask, size: int) -> bool:
    return matroid.rank(mask) == size


def matroid_union(matroids: Sequence[Matroid]) -> MatroidUnionResult:
    """Matroid union by breadth-first augmenting paths over element swaps."""
    if not matroids:
        raise ValueError("need at least one matroid")
    n = matroids[0].size
    if any(m.size != n for m in matroids):
        raise ValueError("matroids must share a common ground set")
    k = len(matroids)
    parts: list[set[int]] = [set() for _ in range(k)]
    part_masks = [0] * k

    def circuit_members(i: int, y: int) -> list[int]:
        # elements x of parts[i] with parts[i] + y - x independent
        base = part_masks[i] | 1 << y
        size = len(parts[i])
        out = []
        for x in parts[i]:
            if matroids[i].rank(base ^ (1 << x)) == size:
                out.append(x)
        return out

    while True:
        covered = 0
        for pm in part_masks:
            covered |= pm
        sources = [e for e in range(n) if not covered >> e & 1]
        if not sources:
            break
        parent: dict[int, tuple[int, int] | None] = {e: None for e in sources}
        queue = deque(sources)
        augmented = False
        while queue and not augmented:
            y = queue.popleft()
            for i in range(k):
                if y in parts[i]:
                    continue
                if _independent(matroids[i], part_masks[i] | 1 << y, len(parts[i]) + 1):
                    cur, place = y, i
                    while True:
                        parts[place].add(cur)
                        part_masks[place] |= 1 << cur
                        prev = parent[cur]
                        if prev is None:
                            break
                        prev_elem, prev_part = prev
                        parts[prev_part].discard(cur)
                        part_masks[prev_part] &= ~(1 << cur)
                        cur, place = prev_elem, prev_part
                    augmented = True
                    break
                for x in circuit_members(i, y):
                    if x not in parent:
                        parent[x] = (y, i)
                        queue.append(x)
        if not augmented:
            reachable = 0
            for e in parent:
                reachable |= 1 << e
            cert = matroids[0].full_mask & ~reachable
            value = cert.bit_count() + sum(
                m.rank(m.full_mask & ~cert) for m in matroids
            )
            return MatroidUnionResult(
                sum(len(p) for p in parts), tuple(part_masks), cert, value
            )
    # every element covered: Y = E is a valid optimal certificate
    cert = matroids[0].full_mask
    return MatroidUnionResult(
        sum(len(p) for p in parts), tuple(part_masks), cert, cert.bit_count()
    )


def matroid_union_rank(matroids: Sequence[Matroid]) -> int:
    return matroid_union(matroids).rank


def matroid_union_rank_brute(matroids: Sequence[Matroid]) -> tuple[int, SubsetMask]:
    """min over Y of |Y| + sum_i r_i(E \\ Y); exponential, for verification."""
    n = matroids[0].size
    if n > config.UNION_BRUTE_FORCE_CAP:
        raise GroundTooLargeError(
            f"ground size {n} exceeds UNION_BRUTE_FORCE_CAP={config.UNION_BRUTE_FORCE_CAP}"
        )
    full = matroids[0].full_mask
    best, best_y = None, 0
    for y in range(1 << n):
        value = y.bit_count() + sum(m.rank(full & ~y) for m in matroids)
        if best is None or value < best:
            best, best_y = value, y
    return best, best_y


@dataclass(frozen=True)
class DisjointBasesResult:
    bases: Optional[tuple[SubsetMask, ...]]
    certificate: Optional[SubsetMask]


def disjoint_bases(matroid: Matroid, flats: Sequence[SubsetMask]) -> DisjointBasesResult:
    """Disjoint sets B_i inside the given flats, each spanning its flat.

    Runs matroid union on the restrictions to the flats.  On failure the
    certificate Y satisfies |Y| + sum_i r(A_i \\ Y) < sum_i r(A_i).
    """
    for a in flats:
        if not matroid.is_flat(a):
            raise ValueError("disjoint_bases expects flats as input")
    restrictions = [Restriction(matroid, a) for a in flats]
    target = sum(matroid.rank(a) for a in flats)
    result = matroid_union(restrictions)
    if result.rank == target:
        return DisjointBasesResult(result.parts, None)
    return DisjointBasesResult(None, result.certificate)


def pad_embed_flat(q: int, m: int, n: int, flat: SubsetMask) -> SubsetMask:
    """Embed a flat of GF(q)^m into GF(q)^n by appending zero coordinates.

    Rank preserving; joins and meets of flats are preserved as well.
    """
    if m > n:
        raise ValueError("pad embedding needs m <= n")
    out = 0
    pad = (0,) * (n - m)
    for e in iter_elements(flat):
        vec = vector_from_index(e, q, m) + pad
        out |= 1 << index_from_vector(vec, q)
    return out


def stretch_embed_flat(q: int, m: int, n: int, flat: SubsetMask) -> SubsetMask:
    """Embed a flat A of GF(q)^m into GF(q)^n as the block subspace A x ... x A.

    Needs m | n; ranks scale by n/m, so normalized ranks are preserved.
    """
    if m <= 0 or n % m:
        raise DivisibilityError(f"stretch embedding needs m | n, got m={m}, n={n}")
    t = n // m
    members = [vector_from_index(e, q, m) for e in iter_elements(flat)]
    out = 0
    for combo in itertools.product(members, repeat=t):
        vec = tuple(x for block in combo for x in block)
        out |= 1 << index_from_vector(vec, q)
    return out
