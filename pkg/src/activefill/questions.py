"""Identification games over finite hypothesis spaces.

An unknown artifact is drawn from a finite hypothesis set; a fixed battery of
questions has a known answer per hypothesis. This module provides entropy
bookkeeping, the greedy max-information question policy, full plan trees, and
an exponential-search oracle for the optimum plan on tiny instances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Mapping, Optional, Sequence

TERMINATION_TOLERANCE = 1e-9
PRIOR_TOLERANCE = 1e-9
BRUTE_FORCE_LIMIT = 13  # covers threshold-search instances up to n = 12


class InvalidDistributionError(ValueError):
    pass


class UnknownQuestionError(KeyError):
    pass


class ContradictoryBeliefError(ValueError):
    """Conditioning removed all probability mass; not a valid belief."""


class SizeLimitError(ValueError):
    pass


class NonTerminationError(RuntimeError):
    pass


def entropy(dist: Sequence[float]) -> float:
    """Shannon entropy in bits; 0*log(0) taken as 0."""
    total = 0.0
    acc = 0.0
    for p in dist:
        if p < 0:
            raise InvalidDistributionError(f"negative probability {p}")
        total += p
        if p > 0:
            acc -= p * math.log2(p)
    if abs(total - 1.0) > PRIOR_TOLERANCE:
        raise InvalidDistributionError(f"probabilities sum to {total}, not 1")
    return max(acc, 0.0)


@dataclass(frozen=True, eq=False)
class QuestionInstance:
    """Hypotheses, questions, answers and the total answer map between them."""

    hypotheses: tuple[Hashable, ...]
    questions: tuple[Hashable, ...]
    answers: tuple[Hashable, ...]
    answer_of: Mapping[tuple[Hashable, Hashable], Hashable]
    prior: tuple[float, ...]

    def __post_init__(self):
        if not self.hypotheses or not self.questions or not self.answers:
            raise ValueError("hypotheses, questions and answers must be nonempty")
        if len(self.prior) != len(self.hypotheses):
            raise ValueError("prior length must match hypothesis count")
        entropy(self.prior)  # validates nonnegativity and normalization
        answer_set = set(self.answers)
        for h in self.hypotheses:
            for q in self.questions:
                if (h, q) not in self.answer_of:
                    raise ValueError(f"answer_of missing entry for {(h, q)!r}")
                if self.answer_of[(h, q)] not in answer_set:
                    raise ValueError(f"answer_of maps {(h, q)!r} outside the answer set")

    def question_index(self, q) -> int:
        try:
            return self.questions.index(q)
        except ValueError:
            raise UnknownQuestionError(q) from None


@dataclass(frozen=True)
class Belief:
    """Probability over hypotheses, aligned with QuestionInstance.hypotheses."""

    weights: tuple[float, ...]

    def __post_init__(self):
        entropy(self.weights)


def initial_belief(inst: QuestionInstance) -> Belief:
    return Belief(inst.prior)


def condition(inst: QuestionInstance, belief: Belief, q, a) -> Belief:
    """Posterior after observing answer a to question q."""
    inst.question_index(q)
    kept = [w if inst.answer_of[(h, q)] == a else 0.0
            for h, w in zip(inst.hypotheses, belief.weights)]
    mass = sum(kept)
    if mass <= 0.0:
        raise ContradictoryBeliefError(f"answer {a!r} to {q!r} has zero probability")
    return Belief(tuple(w / mass for w in kept))


def answer_distribution(inst: QuestionInstance, belief: Belief, q) -> tuple[float, ...]:
    """Probability of each answer to q under the belief, in inst.answers order."""
    inst.question_index(q)
    acc = {a: 0.0 for a in inst.answers}
    for h, w in zip(inst.hypotheses, belief.weights):
        acc[inst.answer_of[(h, q)]] += w
    return tuple(acc[a] for a in inst.answers)


def conditional_entropy(inst: QuestionInstance, belief: Belief, q) -> float:
    """Expected remaining entropy about the hypothesis after asking q.

    Computed directly from the per-answer posteriors, so the chain-rule
    identity against answer_distribution is a genuine cross-check.
    """
    dist = answer_distribution(inst, belief, q)
    acc = 0.0
    for a, pr in zip(inst.answers, dist):
        if pr <= 0.0:
            continue
        posterior = [w / pr if inst.answer_of[(h, q)] == a else 0.0
                     for h, w in zip(inst.hypotheses, belief.weights)]
        acc += pr * entropy(posterior)
    return acc


def greedy_next_question(inst: QuestionInstance, belief: Belief):
    """Question whose answer distribution has maximum entropy, or None when
    no question carries information (every entropy below the tolerance).

    Ties resolve to the lowest question index for reproducibility.
    """
    best_q = None
    best_h = -1.0
    for q in inst.questions:
        h = entropy(answer_distribution(inst, belief, q))
        if h > best_h:
            best_q, best_h = q, h
    if best_h < TERMINATION_TOLERANCE:
        return None
    return best_q


@dataclass(frozen=True)
class PlanNode:
    """Decision-tree node: a question with one child per feasible answer,
    or a terminal leaf (question is None)."""

    question: Optional[Hashable]
    children: Mapping[Hashable, "PlanNode"]
    belief: Belief

    @property
    def is_terminal(self) -> bool:
        return self.question is None

    @property
    def depth(self) -> int:
        if self.is_terminal:
            return 0
        return 1 + max(child.depth for child in self.children.values())

    def leaves(self):
        if self.is_terminal:
            yield self
            return
        for child in self.children.values():
            yield from child.leaves()


def build_greedy_plan(inst: QuestionInstance) -> PlanNode:
    """Expand the greedy policy into a full plan tree.

    On solvable instances every leaf belief is a point mass. The safety bound
    |questions| * |hypotheses| guards against a non-terminating policy, which
    would indicate a bug rather than a legal outcome.
    """
    bound = len(inst.questions) * len(inst.hypotheses)

    def expand(belief: Belief, depth: int) -> PlanNode:
        if depth > bound:
            raise NonTerminationError("greedy plan exceeded the depth safety bound")
        q = greedy_next_question(inst, belief)
        if q is None:
            return PlanNode(None, {}, belief)
        children = {}
        for a, pr in zip(inst.answers, answer_distribution(inst, belief, q)):
            if pr > 0.0:
                children[a] = expand(condition(inst, belief, q, a), depth + 1)
        return PlanNode(q, children, belief)

    return expand(initial_belief(inst), 0)


def brute_force_optimal_depth(inst: QuestionInstance) -> Optional[int]:
    """Exact minimax number of questions needed to pin down the hypothesis.

    Exponential search over surviving-hypothesis sets; None when some pair of
    hypotheses cannot be separated by any question sequence. Restricted to
    instances with at most 12 hypotheses and 12 questions.
    """
    candidates = tuple(i for i, w in enumerate(inst.prior) if w > 0.0)
    n_questions = len(inst.questions)
    if len(candidates) > BRUTE_FORCE_LIMIT or n_questions > BRUTE_FORCE_LIMIT:
        raise SizeLimitError("instance too large for exhaustive planning")
    answer = [[inst.answer_of[(h, q)] for q in inst.questions] for h in inst.hypotheses]

    @lru_cache(maxsize=None)
    def solve(state: frozenset) -> Optional[int]:
        if len(state) <= 1:
            return 0
        best = None
        for qi in range(n_questions):
            groups: dict = {}
            for hi in state:
                groups.setdefault(answer[hi][qi], []).append(hi)
            if len(groups) <= 1:
                continue
            worst = 0
            for members in groups.values():
                d = solve(frozenset(members))
                if d is None:
                    worst = None
                    break
                worst = max(worst, d)
            if worst is None:
                continue
            if best is None or worst + 1 < best:
                best = worst + 1
        return best

    return solve(frozenset(candidates))


def binary_search_instance(n: int, prior: Optional[Sequence[float]] = None) -> QuestionInstance:
    """Locate an insertion point in {0..n} by threshold questions.

    Question i asks whether the unknown position is <= i; with a uniform
    prior the greedy plan reproduces binary search.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    hypotheses = tuple(range(n + 1))
    questions = tuple(range(n + 1))
    answer_of = {(h, q): h <= q for h in hypotheses for q in questions}
    if prior is None:
        prior = tuple(1.0 / (n + 1) for _ in hypotheses)
    else:
        prior = tuple(prior)
    return QuestionInstance(hypotheses, questions, (True, False), answer_of, prior)
