"""Symmetric hedonic value functions, exact potentials and better response.

Two pair-value families are provided. The alpha model pays 1 - alpha for
a linked pair and -alpha otherwise (adjacency binarized), so a block's
potential is its link count minus alpha times its pair count. The
modularity family pays beta_ij (A_ij - gamma d_i d_j / 2m) with full
multiplicities, which makes potential maximization coincide with
(generalized) modularity maximization.

Everything is exact: potentials, move gains, stability thresholds and
sweep breakpoints are Fractions end to end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import SizeGateError
from .multigraph import Multigraph
from .partition import (
    Move,
    Partition,
    Schedule,
    Trace,
    canonical_form,
    enumerate_deviations,
    run_dynamics,
)

BRUTEFORCE_MAX_NODES = 10


@dataclass(frozen=True)
class AlphaModel:
    """Pair value 1 - alpha for adjacent pairs, -alpha otherwise.

    Adjacency is binarized: parallel edges count once. alpha in [0, 1]
    tunes resolution from the grand coalition toward maximal cliques.
    """

    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if not 0 <= self.alpha <= 1:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")


@dataclass(frozen=True)
class Modularity:
    """Pair value beta_ij (A_ij - gamma d_i d_j / 2m), multiplicities kept.

    beta None selects the degree-normalized weights 2m / (d_i d_j);
    otherwise beta is a uniform weight. gamma is the resolution parameter
    of generalized modularity.
    """

    gamma: Fraction = Fraction(1)
    beta: Optional[Fraction] = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.beta is not None:
            object.__setattr__(self, "beta", Fraction(self.beta))


ValueFunction = Union[AlphaModel, Modularity]


def pair_value(vf: ValueFunction, g: Multigraph, u: str, v: str) -> Fraction:
    """Symmetric value one node derives from sharing a block with another."""
    if u == v:
        raise ValueError("pair value is defined for distinct nodes only")
    mult = g.multiplicity(u, v)
    if isinstance(vf, AlphaModel):
        return 1 - vf.alpha if mult >= 1 else -vf.alpha
    if g.m == 0:
        raise ValueError("modularity value function needs at least one edge")
    du, dv = g.degree(u), g.degree(v)
    base = mult - vf.gamma * Fraction(du * dv, 2 * g.m)
    if vf.beta is None:
        if du == 0 or dv == 0:
            raise ValueError("degree-normalized weights need positive degrees")
        return Fraction(2 * g.m, du * dv) * base
    return vf.beta * base


@dataclass(frozen=True)
class Potential:
    """Exact partition potential; for the alpha model also the linear form
    value = intercept + slope * alpha."""

    value: Fraction
    intercept: Optional[Fraction] = None
    slope: Optional[Fraction] = None


def _binary_links_within(g: Multigraph, block: frozenset[str]) -> int:
    members = sorted(block)
    count = 0
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            if g.adjacent(members[a], members[b]):
                count += 1
    return count


def potential_form(g: Multigraph, p: Partition) -> tuple[int, int]:
    """Alpha-model potential as integer (intercept, slope): per block, the
    binarized link count minus alpha times the member-pair count."""
    intercept = 0
    slope = 0
    for block in p.blocks:
        q = len(block)
        intercept += _binary_links_within(g, block)
        slope -= q * (q - 1) // 2
    return intercept, slope


def potential(vf: ValueFunction, g: Multigraph, p: Partition) -> Potential:
    """Sum of pair values over unordered within-block pairs.

    The alpha model uses the closed form per block; the modularity family
    sums pair values directly."""
    if isinstance(vf, AlphaModel):
        intercept, slope = potential_form(g, p)
        return Potential(intercept + slope * vf.alpha, Fraction(intercept), Fraction(slope))
    total = Fraction(0)
    for block in p.blocks:
        members = sorted(block)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                total += pair_value(vf, g, members[a], members[b])
    return Potential(total)


def move_gain(vf: ValueFunction, g: Multigraph, p: Partition, mv: Move) -> Fraction:
    """Utility change for the moving node: value of the target block minus
    value of the current block without itself. Equals the potential
    difference of the move exactly, which is what makes better response
    terminate."""
    source = p.blocks[mv.source]
    if mv.node not in source:
        raise ValueError(f"node {mv.node!r} not in source block {mv.source}")
    gain = Fraction(0)
    if not mv.is_fresh:
        for j in p.blocks[mv.target]:
            gain += pair_value(vf, g, mv.node, j)
    for j in source:
        if j != mv.node:
            gain -= pair_value(vf, g, mv.node, j)
    return gain


def nash_stable(
    vf: ValueFunction, g: Multigraph, p: Partition
) -> tuple[bool, Optional[Move]]:
    """True when no single node strictly gains by relocating to another
    block or to a fresh one; otherwise returns one improving move."""
    for node in sorted(p.nodes):
        for mv in enumerate_deviations(p, node):
            if move_gain(vf, g, p, mv) > 0:
                return False, mv
    return True, None


def hedonic_payoff(vf: ValueFunction, g: Multigraph):
    """Deviation-gain callback for run_dynamics."""
    return lambda p, mv: move_gain(vf, g, p, mv)


def better_response(
    vf: ValueFunction, g: Multigraph, start: Partition, schedule: Schedule = Schedule()
) -> tuple[Partition, Trace]:
    """Better-response dynamics on the hedonic game.

    The potential rises strictly at every accepted move and there are
    finitely many partitions, so the run always stops Stable and the
    result passes nash_stable."""
    return run_dynamics(
        hedonic_payoff(vf, g),
        start,
        schedule,
        objective=lambda p: potential(vf, g, p).value,
    )


def partition_threshold(g: Multigraph, p1: Partition, p2: Partition) -> Optional[Fraction]:
    """Exact alpha in [0, 1] where the two partitions' alpha-model
    potentials cross; None when the linear forms are parallel or
    identical, or the crossing falls outside [0, 1]."""
    i1, s1 = potential_form(g, p1)
    i2, s2 = potential_form(g, p2)
    if s1 == s2:
        return None
    x = Fraction(i2 - i1, s1 - s2)
    return x if 0 <= x <= 1 else None


@dataclass(frozen=True)
class SweepRow:
    """One interval of the sweep: the partition whose potential dominates
    between alpha_lo and alpha_hi (endpoints closed; rows share them)."""

    alpha_lo: Fraction
    alpha_hi: Fraction
    partition: Partition
    intercept: Fraction
    slope: Fraction


@dataclass(frozen=True)
class SweepTable:
    rows: tuple[SweepRow, ...]


def alpha_sweep(
    g: Multigraph,
    candidates: Optional[Iterable[Partition]] = None,
    *,
    starts: Optional[Iterable[Partition]] = None,
    grid: int = 20,
    alpha_range: tuple = (Fraction(0), Fraction(1)),
    schedule: Schedule = Schedule(),
) -> SweepTable:
    """Exact upper envelope of alpha-model potentials over an alpha range.

    Explicit candidate partitions are enveloped directly. Otherwise
    candidates are discovered by running better_response from each start
    (default: singletons and the grand coalition) at grid+1 evenly spaced
    rational alphas, then enveloped. Breakpoints are exact rationals.
    """
    lo, hi = Fraction(alpha_range[0]), Fraction(alpha_range[1])
    if not (0 <= lo < hi <= 1):
        raise ValueError(f"alpha range must satisfy 0 <= lo < hi <= 1, got [{lo}, {hi}]")
    if candidates is not None:
        cands = list(candidates)
        if not cands:
            raise ValueError("candidate partition set is empty")
    else:
        if grid < 1:
            raise ValueError("grid must be at least 1")
        base = list(starts) if starts is not None else []
        base += [Partition.singletons(g.labels), Partition.grand(g.labels)]
        found: dict[bytes, Partition] = {}
        for j in range(grid + 1):
            a = lo + (hi - lo) * Fraction(j, grid)
            vf = AlphaModel(a)
            for s in base:
                final, _ = better_response(vf, g, s, schedule)
                found.setdefault(canonical_form(final), final)
        cands = [found[key] for key in sorted(found)]
    return SweepTable(tuple(_envelope(g, cands, lo, hi)))


def _envelope(g, candidates, lo, hi):
    # One line per distinct linear form; equal forms tie everywhere, so
    # keep the canonically smallest partition for them.
    lines: dict[tuple[int, int], Partition] = {}
    for p in candidates:
        form = potential_form(g, p)
        if form not in lines or canonical_form(p) < canonical_form(lines[form]):
            lines[form] = p
    entries = [(Fraction(i), Fraction(s), p) for (i, s), p in lines.items()]
    rows = []
    a = lo
    while True:
        winner = max(entries, key=lambda ln: (ln[0] + ln[1] * a, ln[1]))
        cut = hi
        for intercept, slope, _ in entries:
            if slope > winner[1]:
                x = (winner[0] - intercept) / (slope - winner[1])
                if a < x < cut:
                    cut = x
        rows.append(SweepRow(a, cut, winner[2], winner[0], winner[1]))
        if cut >= hi:
            break
        a = cut
    merged = [rows[0]]
    for row in rows[1:]:
        last = merged[-1]
        if row.partition == last.partition:
            merged[-1] = SweepRow(last.alpha_lo, row.alpha_hi, last.partition, last.intercept, last.slope)
        else:
            merged.append(row)
    return merged


def iter_set_partitions(items: Iterable):
    """All set partitions of the items (Bell-number many), as tuples of tuples."""
    pool = list(items)
    for blocks in _index_partitions(len(pool)):
        yield tuple(tuple(pool[i] for i in b) for b in blocks)


def _index_partitions(n: int):
    # Yields a live list of lists; consumers must copy what they keep.
    blocks: list[list[int]] = []

    def rec(i):
        if i == n:
            yield blocks
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def bruteforce_max_partition(vf: ValueFunction, g: Multigraph) -> tuple[Partition, Potential]:
    """Global potential maximizer by exhaustive set-partition enumeration.

    Refuses graphs beyond BRUTEFORCE_MAX_NODES (Bell(10) = 115975 already).
    Potential ties break toward the smallest canonical form."""
    if g.n > BRUTEFORCE_MAX_NODES:
        raise SizeGateError(
            f"brute force is gated at {BRUTEFORCE_MAX_NODES} nodes, got {g.n}"
        )
    labels = g.labels
    n = g.n
    # Integer-scaled pair values keep the enumeration in int arithmetic.
    values = [[Fraction(0)] * n for _ in range(n)]
    denom = 1
    for i in range(n):
        for j in range(i + 1, n):
            q = pair_value(vf, g, labels[i], labels[j])
            values[i][j] = q
            denom = math.lcm(denom, q.denominator)
    scaled = [[int(values[i][j] * denom) for j in range(n)] for i in range(n)]

    best_score = None
    best_blocks: Optional[list[list[int]]] = None
    best_key: Optional[bytes] = None
    for blocks in _index_partitions(n):
        score = 0
        for b in blocks:
            # Block member indices are ascending, so (b[x], b[y]) hits the
            # upper triangle.
            for x in range(len(b)):
                row = scaled[b[x]]
                for y in range(x + 1, len(b)):
                    score += row[b[y]]
        if best_score is None or score > best_score:
            best_score = score
            best_blocks = [list(b) for b in blocks]
            best_key = None
        elif score == best_score:
            key = _canonical_key(labels, blocks)
            if best_key is None:
                best_key = _canonical_key(labels, best_blocks)
            if key < best_key:
                best_blocks = [list(b) for b in blocks]
                best_key = key
    part = Partition([labels[i] for i in b] for b in best_blocks)
    return part, potential(vf, g, part)


def _canonical_key(labels, blocks) -> bytes:
    return canonical_form(Partition([labels[i] for i in b] for b in blocks))
