"""The interactive synthesis loop.

A session keeps the answered examples, a belief over consistent programs, and
the input currently offered to the oracle. Each answer relearns the version
space, resamples the belief, and picks the next query: the unanswered input
whose predicted-output distribution has maximum entropy. Failed evaluations
count as pairwise-distinct outcomes, so inputs that break every candidate
program look maximally uncertain instead of settled.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Sequence

from . import clustering
from .dsl import Program, describe, evaluate
from .learner import ContradictionError, learn
from .questions import entropy
from .sampling import BeliefState, SamplingSpec, sample

INPUT_SAMPLING_MODES = ("random", "input", "output", "io")


class Status(str, Enum):
    RUNNING = "running"
    CONVERGED = "converged"
    FAILED = "failed"


class StaleInputError(ValueError):
    """The submitted input is not the one currently queried."""


class ExhaustedInputsError(RuntimeError):
    """Every dataset input has already been answered."""


class SessionNotRunningError(RuntimeError):
    pass


@dataclass(frozen=True)
class ActiveConfig:
    top: int = 3
    random: int = 7
    seed: int = 17
    input_sampling: str = "output"
    candidates: int = 100
    epsilon: float = 1e-9
    max_iterations: int = 32
    top_distinguish: int = 5
    output_witnesses: int = 1

    def __post_init__(self):
        if self.input_sampling not in INPUT_SAMPLING_MODES:
            raise ValueError(f"input_sampling must be one of {INPUT_SAMPLING_MODES}")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if self.top_distinguish < 2:
            raise ValueError("top_distinguish must be at least 2")
        if self.candidates < 1:
            raise ValueError("candidates must be positive")
        if not 1 <= self.output_witnesses <= 3:
            raise ValueError("output_witnesses must be between 1 and 3")
        SamplingSpec(self.top, self.random, self.seed)  # validates counts


@dataclass(frozen=True)
class SessionState:
    """Immutable snapshot of a session; submit() returns the successor state."""

    inputs: tuple[str, ...]
    config: ActiveConfig
    examples: tuple[tuple[str, str], ...] = ()
    belief: Optional[BeliefState] = None
    p_best: Optional[Program] = None
    pending: Optional[str] = None
    iteration: int = 0
    status: Status = Status.RUNNING
    failure: Optional[str] = None
    transcript: tuple[dict, ...] = ()


def new_session(inputs: Sequence[str], config: ActiveConfig = ActiveConfig(),
                seed_example: Optional[tuple[str, str]] = None) -> SessionState:
    """Start a session over a dataset column.

    Without a seed example the first query is the first row, mirroring a user
    who labels the top of the column to get things going.
    """
    deduped: list[str] = []
    seen = set()
    for s in inputs:
        if s not in seen:
            seen.add(s)
            deduped.append(s)
    if not deduped:
        raise ValueError("dataset must contain at least one input")
    state = SessionState(inputs=tuple(deduped), config=config, pending=deduped[0])
    if seed_example is not None:
        state = submit(state, seed_example[0], seed_example[1], forced=True)
    return state


def output_distribution(belief: BeliefState, text: str) -> dict:
    """Probability of each predicted output on one input.

    Keys are ("value", s) for successful outputs and ("null", i) per failing
    program, making failures pairwise distinct.
    """
    dist: dict = {}
    for idx, (program, prob) in enumerate(belief.entries):
        value = evaluate(program, text)
        key = ("null", idx) if value is None else ("value", value)
        dist[key] = dist.get(key, 0.0) + prob
    return dist


def input_entropy(belief: BeliefState, text: str) -> float:
    """Uncertainty (bits) about the output on one input under the belief."""
    return entropy(list(output_distribution(belief, text).values()))


def row_entropy(probs: Sequence[float], outputs: Sequence[Optional[str]]) -> float:
    """Entropy of an explicit outputs row (None = failure, pairwise distinct)."""
    dist: dict = {}
    for idx, (prob, value) in enumerate(zip(probs, outputs)):
        key = ("null", idx) if value is None else ("value", value)
        dist[key] = dist.get(key, 0.0) + prob
    return entropy(list(dist.values()))


def distinguished_pairs(outputs: Sequence[Optional[str]]) -> set[tuple[int, int]]:
    """Index pairs told apart by this input; any failure differs from everything."""
    pairs = set()
    for i in range(len(outputs)):
        for j in range(i + 1, len(outputs)):
            if outputs[i] is None or outputs[j] is None or outputs[i] != outputs[j]:
                pairs.add((i, j))
    return pairs


def _candidate_pool(state: SessionState, pool: list[str]) -> list[str]:
    config = state.config
    n = config.candidates
    seed = config.seed + 104729 * (len(state.examples) + 1)
    mode = config.input_sampling
    if mode == "random":
        if len(pool) <= n:
            return pool
        rng = random.Random(seed)
        picked = sorted(rng.sample(range(len(pool)), n))
        return [pool[i] for i in picked]
    if mode == "input":
        part = clustering.partition(pool)
    else:
        witnesses = [p for p, _ in state.belief.entries[:config.output_witnesses]]
        if mode == "output":
            part = clustering.output_partition(pool, witnesses)
        else:
            part = clustering.io_partition(pool, witnesses)
    return clustering.diverse_sample(part, n, seed)


def select_query(state: SessionState) -> Optional[str]:
    """The unanswered input with maximum output entropy, or None at convergence.

    Convergence fires when every candidate's entropy is below epsilon, or the
    chosen input fails to tell apart any pair among the top-ranked programs.
    """
    if state.status is not Status.RUNNING:
        raise SessionNotRunningError(f"session is {state.status.value}")
    answered = {text for text, _ in state.examples}
    pool = [s for s in state.inputs if s not in answered]
    if not pool:
        raise ExhaustedInputsError("every input has been answered")
    if state.belief is None:
        return state.pending or pool[0]
    candidates = _candidate_pool(state, pool)
    best = None
    best_h = -1.0
    for text in candidates:
        h = input_entropy(state.belief, text)
        if h > best_h:
            best, best_h = text, h
    if best_h < state.config.epsilon:
        return None
    t = min(state.config.top_distinguish, len(state.belief.entries))
    top_outputs = [evaluate(p, best) for p, _ in state.belief.entries[:t]]
    if not distinguished_pairs(top_outputs):
        return None
    return best


def submit(state: SessionState, text: str, output: str, forced: bool = False) -> SessionState:
    """Record the oracle's answer for an input and advance the session.

    The input must be the currently queried one unless forced. Forced entries
    are how a supervisor injects a counterexample the learner missed; they may
    re-open a converged session, but never a failed one.
    """
    if state.status is Status.FAILED or (state.status is not Status.RUNNING and not forced):
        raise SessionNotRunningError(f"session is {state.status.value}")
    if not forced and text != state.pending:
        raise StaleInputError(f"expected answer for {state.pending!r}, got {text!r}")
    if text not in state.inputs:
        raise StaleInputError(f"{text!r} is not in the dataset")
    if any(text == answered for answered, _ in state.examples):
        raise StaleInputError(f"{text!r} was already answered")

    examples = state.examples + ((text, output),)
    iteration = len(examples) - 1
    try:
        space = learn(examples)
    except ContradictionError as exc:  # unreachable via the guards above
        return replace(state, examples=examples, iteration=iteration, pending=None,
                       status=Status.FAILED, failure=str(exc))
    if space.is_empty:
        record = _record(iteration, text, output, None, None, 0)
        return replace(state, examples=examples, iteration=iteration, pending=None,
                       status=Status.FAILED,
                       failure="no program in the grammar matches all examples",
                       transcript=state.transcript + (record,))
    spec = SamplingSpec(state.config.top, state.config.random,
                        state.config.seed + 7919 * len(examples))
    belief = sample(space, spec)
    working = replace(state, examples=examples, iteration=iteration, belief=belief,
                      p_best=belief.best, pending=None, status=Status.RUNNING)
    try:
        nxt = select_query(working)
    except ExhaustedInputsError:
        nxt = None
    record = _record(iteration, text, output, nxt,
                     None if nxt is None else input_entropy(belief, nxt),
                     len(belief.entries))
    if nxt is None:
        return replace(working, status=Status.CONVERGED, pending=None,
                       transcript=state.transcript + (record,))
    return replace(working, pending=nxt, transcript=state.transcript + (record,))


def accept(state: SessionState) -> SessionState:
    """User accepts the current best program; the session stops querying."""
    return replace(state, status=Status.CONVERGED, pending=None)


def _record(iteration, asked, answer, nxt, nxt_entropy, belief_size) -> dict:
    return {
        "iteration": iteration,
        "input": asked,
        "answer": answer,
        "next_query": nxt,
        "next_entropy": nxt_entropy,
        "belief_size": belief_size,
    }


def transcript_json(state: SessionState) -> dict:
    """JSON-ready session transcript for reports and the browser UI."""
    return {
        "status": state.status.value,
        "iteration": state.iteration,
        "examples": [{"input": i, "output": o} for i, o in state.examples],
        "program": None if state.p_best is None else describe(state.p_best),
        "iterations": list(state.transcript),
        "failure": state.failure,
    }
