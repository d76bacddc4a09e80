"""Belief states: weighted program samples drawn from a version space.

Random draws follow the DAG structure: at a choice point, draws are spread
evenly over the alternatives (uniform over syntactic classes rather than over
the program set), which keeps rare program shapes represented. Top-ranked
programs are merged in and every survivor gets a probability proportional to
its position from the bottom of the rank order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .dsl import Program, canonical, rank_key
from .learner import EmptySpaceError, VersionSpace, top_k

PROB_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SamplingSpec:
    """How many top-ranked and random programs form the belief."""

    top: int = 3
    random: int = 7
    seed: int = 17

    def __post_init__(self):
        if self.top < 0 or self.random < 0:
            raise ValueError("sample counts must be nonnegative")
        if self.top + self.random < 1:
            raise ValueError("at least one program must be sampled")


@dataclass(frozen=True)
class BeliefState:
    """Deduplicated programs with rank-order probabilities, best first."""

    entries: tuple[tuple[Program, float], ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("belief must contain at least one program")
        total = 0.0
        prev = None
        keys = set()
        for program, prob in self.entries:
            if prob <= 0:
                raise ValueError("belief probabilities must be positive")
            if prev is not None and prob > prev + PROB_TOLERANCE:
                raise ValueError("belief probabilities must be non-increasing")
            key = canonical(program)
            if key in keys:
                raise ValueError("belief programs must be distinct")
            keys.add(key)
            prev = prob
            total += prob
        if abs(total - 1.0) > PROB_TOLERANCE:
            raise ValueError(f"belief probabilities sum to {total}, not 1")

    @property
    def programs(self) -> tuple[Program, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def best(self) -> Program:
        return self.entries[0][0]


def _allocate(k: int, classes: int, rng: random.Random) -> list[int]:
    """Split k draw slots evenly over classes; leftover slots go to a random subset."""
    counts = [k // classes] * classes
    for i in rng.sample(range(classes), k % classes):
        counts[i] += 1
    return counts


def random_k(vs: VersionSpace, k: int, seed: int) -> list[Program]:
    """k structured random draws (duplicates possible), deterministic per seed.

    At a node the k draws are allocated evenly across outgoing edges; within
    an edge, atom picks are allocated evenly across the atom alternatives and
    zipped with k recursive draws from the child. Every draw is a denoted
    program, hence consistent with all examples behind the space.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if vs.is_empty:
        raise EmptySpaceError("cannot sample from an empty version space")
    rng = random.Random(seed)
    memo: dict[int, list[tuple]] = {}

    def draw(node: int) -> list[tuple]:
        if node == vs.final:
            return [()] * k
        if node in memo:
            return memo[node]
        pools = []
        for edge in vs.nodes[node]:
            counts = _allocate(k, len(edge.atoms), rng)
            atom_picks = []
            for atom, c in zip(edge.atoms, counts):
                atom_picks.extend([atom] * c)
            rng.shuffle(atom_picks)
            suffixes = draw(edge.child)
            pools.append([(atom_picks[i],) + suffixes[i] for i in range(k)])
        if len(pools) == 1:
            result = list(pools[0])
        else:
            result = []
            for pool, c in zip(pools, _allocate(k, len(pools), rng)):
                result.extend(pool[rng.randrange(k)] for _ in range(c))
        rng.shuffle(result)
        memo[node] = result
        return result

    return [Program(pieces) for pieces in draw(vs.root)]


def sample(vs: VersionSpace, spec: SamplingSpec) -> BeliefState:
    """Belief over top-k plus random-k draws with linear rank-order weights.

    With m survivors the program at rank position j (1-based) gets weight
    (m - j + 1) / (m (m + 1) / 2), so better-ranked programs are always at
    least as probable.
    """
    if vs.is_empty:
        raise EmptySpaceError("cannot sample from an empty version space")
    chosen: dict[str, Program] = {}
    if spec.top:
        for program in top_k(vs, spec.top):
            chosen.setdefault(canonical(program), program)
    if spec.random:
        for program in random_k(vs, spec.random, spec.seed):
            chosen.setdefault(canonical(program), program)
    programs = sorted(chosen.values(), key=rank_key)
    m = len(programs)
    denom = m * (m + 1) / 2
    entries = tuple((p, (m - j) / denom) for j, p in enumerate(programs))
    return BeliefState(entries)


__all__ = ["BeliefState", "SamplingSpec", "random_k", "sample"]
