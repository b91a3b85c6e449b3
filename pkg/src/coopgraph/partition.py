"""Partitions of a node set and single-node better-response machinery.

The dynamics runner is generic: it is parameterized by a payoff callback
returning an exact deviation gain, accepts a move only on strictly
positive gain, and reports how it stopped (Stable, CycleDetected or
CapReached). Payoffs backed by a potential always stop Stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .errors import PartitionError

ROUND_ROBIN = "round-robin"
SEEDED_RANDOM = "random"
GREEDY_BEST = "greedy"
_POLICIES = (ROUND_ROBIN, SEEDED_RANDOM, GREEDY_BEST)

STABLE = "Stable"
CAP_REACHED = "CapReached"
CYCLE_DETECTED = "CycleDetected"


@dataclass(frozen=True)
class Move:
    """Relocation of one node from blocks[source] to blocks[target].

    target None means "open a fresh block"."""

    node: str
    source: int
    target: Optional[int]

    def __post_init__(self):
        if self.target == self.source:
            raise PartitionError("move target equals source")

    @property
    def is_fresh(self) -> bool:
        return self.target is None


class Partition:
    """Disjoint nonempty blocks covering a node set."""

    __slots__ = ("_blocks", "_block_of")

    def __init__(self, blocks: Iterable[Iterable[str]], universe: Optional[Iterable[str]] = None):
        blks = tuple(frozenset(b) for b in blocks)
        block_of: dict[str, int] = {}
        for k, block in enumerate(blks):
            if not block:
                raise PartitionError("blocks must be nonempty")
            for node in block:
                if node in block_of:
                    raise PartitionError(f"node in two blocks: {node!r}")
                block_of[node] = k
        if universe is not None:
            missing = set(universe) - block_of.keys()
            extra = block_of.keys() - set(universe)
            if missing:
                raise PartitionError(f"blocks do not cover: {sorted(missing)}")
            if extra:
                raise PartitionError(f"blocks contain unknown nodes: {sorted(extra)}")
        self._blocks = blks
        self._block_of = block_of

    @classmethod
    def singletons(cls, nodes: Iterable[str]) -> "Partition":
        return cls([{u} for u in nodes])

    @classmethod
    def grand(cls, nodes: Iterable[str]) -> "Partition":
        return cls([set(nodes)])

    @property
    def blocks(self) -> tuple[frozenset[str], ...]:
        return self._blocks

    @property
    def nodes(self) -> frozenset[str]:
        return frozenset(self._block_of)

    def block_of(self, node: str) -> int:
        try:
            return self._block_of[node]
        except KeyError:
            raise PartitionError(f"node not in partition: {node!r}") from None

    def __len__(self) -> int:
        return len(self._blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return frozenset(self._blocks) == frozenset(other._blocks)

    def __hash__(self) -> int:
        return hash(frozenset(self._blocks))

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(sorted(b)) + "}" for b in self._blocks)
        return f"Partition({inner})"


def canonical_form(p: Partition) -> bytes:
    """Canonical byte encoding: members sorted within blocks, blocks sorted
    by least member. Two partitions are equal iff their encodings are."""
    blocks = sorted(sorted(b) for b in p.blocks)
    return "|".join(",".join(b) for b in blocks).encode("utf-8")


def apply_move(p: Partition, mv: Move) -> Partition:
    """Apply a single-node move. The vacated block is dropped when it
    empties; a fresh block is appended at the end."""
    blocks = [set(b) for b in p.blocks]
    if not (0 <= mv.source < len(blocks)) or mv.node not in blocks[mv.source]:
        raise PartitionError(f"node {mv.node!r} not in source block {mv.source}")
    if mv.target is not None and not (0 <= mv.target < len(blocks)):
        raise PartitionError(f"no such target block: {mv.target}")
    blocks[mv.source].discard(mv.node)
    if mv.is_fresh:
        blocks.append({mv.node})
    else:
        blocks[mv.target].add(mv.node)
    return Partition(b for b in blocks if b)


def enumerate_deviations(p: Partition, node: str) -> list[Move]:
    """Every deviation available to the node: each other existing block in
    index order, then a fresh block unless the node is already alone."""
    src = p.block_of(node)
    moves = [Move(node, src, k) for k in range(len(p.blocks)) if k != src]
    if len(p.blocks[src]) > 1:
        moves.append(Move(node, src, None))
    return moves


@dataclass(frozen=True)
class Schedule:
    """Deviation scheduling policy for run_dynamics.

    Policies: round-robin (nodes in label order, first improving move),
    random (per-pass node order drawn from the seed), greedy (best gain
    over all node-move pairs each step). max_steps None lets the runner
    default to 1000 * n accepted moves.
    """

    policy: str = ROUND_ROBIN
    seed: int = 0
    max_steps: Optional[int] = None

    def __post_init__(self):
        if self.policy not in _POLICIES:
            raise ValueError(f"unknown policy {self.policy!r}; expected one of {_POLICIES}")


@dataclass(frozen=True)
class TraceStep:
    move: Move
    gain: Fraction
    objective_after: Optional[Fraction]


@dataclass(frozen=True)
class Trace:
    """Accepted moves of a dynamics run plus how the run stopped."""

    steps: tuple[TraceStep, ...]
    status: str


PayoffFn = Callable[[Partition, Move], Fraction]


def run_dynamics(
    payoff: PayoffFn,
    start: Partition,
    schedule: Schedule = Schedule(),
    objective: Optional[Callable[[Partition], Fraction]] = None,
) -> tuple[Partition, Trace]:
    """Apply strictly improving single-node deviations until none is left.

    payoff(partition, move) must return an exact comparable gain; a move
    is accepted only when the gain is strictly positive, so ties keep the
    current coalition. When an objective callback is supplied its value
    after each accepted move is recorded in the trace.

    Stops Stable when no node has an improving deviation, CycleDetected
    when a previously seen partition reappears (possible only for payoffs
    without a potential), or CapReached after max_steps accepted moves.
    """
    if schedule.max_steps is not None and schedule.max_steps <= 0:
        raise PartitionError("max_steps must be positive")
    nodes = sorted(start.nodes)
    cap = schedule.max_steps if schedule.max_steps is not None else 1000 * max(len(nodes), 1)
    rng = random.Random(schedule.seed)
    seen = {canonical_form(start)}
    steps: list[TraceStep] = []
    p = start

    def accept(mv: Move, gain: Fraction) -> Optional[str]:
        nonlocal p
        p = apply_move(p, mv)
        after = objective(p) if objective is not None else None
        steps.append(TraceStep(mv, gain, after))
        key = canonical_form(p)
        if key in seen:
            return CYCLE_DETECTED
        seen.add(key)
        if len(steps) >= cap:
            return CAP_REACHED
        return None

    if schedule.policy == GREEDY_BEST:
        while True:
            best = None
            for node in nodes:
                for mv in enumerate_deviations(p, node):
                    gain = payoff(p, mv)
                    if gain > 0 and (best is None or gain > best[1]):
                        best = (mv, gain)
            if best is None:
                return p, Trace(tuple(steps), STABLE)
            stop = accept(*best)
            if stop is not None:
                return p, Trace(tuple(steps), stop)

    while True:
        order = nodes if schedule.policy == ROUND_ROBIN else rng.sample(nodes, len(nodes))
        moved = False
        for node in order:
            for mv in enumerate_deviations(p, node):
                gain = payoff(p, mv)
                if gain > 0:
                    moved = True
                    stop = accept(mv, gain)
                    if stop is not None:
                        return p, Trace(tuple(steps), stop)
                    break
        if not moved:
            return p, Trace(tuple(steps), STABLE)
