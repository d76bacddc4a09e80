"""Benchmark harness: simulated-oracle scenarios and aggregate reports.

A scenario replays a user who knows the intended transformation. The learner
runs inside an outer loop that only stops once the best program matches the
oracle on every row; premature convergences are counted as false negatives
and repaired by injecting the first mismatching row, queries whose answer the
best program already predicted are counted as false positives.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .dsl import evaluate
from .engine import ActiveConfig, SessionState, Status, new_session, submit
from .learner import learn, top_k

PS_CHOICES = ("baseline", "topk", "topk-randomk")
IS_CHOICES = ("random", "input", "output", "io")
ITERATION_BUCKETS = (1, 2, 3, 4, 32)


class NotApplicableError(RuntimeError):
    """Asked for a mismatching input when the program is already correct."""


@dataclass(frozen=True)
class Scenario:
    name: str
    inputs: tuple[str, ...]
    truth: dict[str, str]

    def __post_init__(self):
        if not self.inputs:
            raise ValueError("scenario needs at least one input")
        if len(set(self.inputs)) != len(self.inputs):
            raise ValueError("scenario inputs must be distinct")
        missing = [s for s in self.inputs if s not in self.truth]
        if missing:
            raise ValueError(f"truth missing for {missing[:3]!r}")

    @classmethod
    def from_json(cls, data: dict) -> "Scenario":
        inputs = tuple(data["inputs"])
        outputs = list(data["outputs"])
        if len(inputs) != len(outputs):
            raise ValueError("inputs and outputs must have equal length")
        return cls(data["name"], inputs, dict(zip(inputs, outputs)))

    def to_json(self) -> dict:
        return {"name": self.name, "inputs": list(self.inputs),
                "outputs": [self.truth[s] for s in self.inputs]}


@dataclass
class Metrics:
    iterations: int = 0
    false_positives: int = 0
    false_negatives: int = 0
    converged: bool = False
    timed_out: bool = False
    failure: Optional[str] = None
    per_iteration_millis: list[float] = field(default_factory=list)


@dataclass(frozen=True)
class VariantConfig:
    ps: str = "topk-randomk"
    input_sampling: str = "random"
    k: int = 3
    r: int = 7
    candidates: int = 100
    seed: int = 17
    timeout_seconds: float = 60.0
    max_iterations: int = 32
    top_distinguish: int = 5

    def __post_init__(self):
        if self.ps not in PS_CHOICES:
            raise ValueError(f"ps must be one of {PS_CHOICES}")
        if self.input_sampling not in IS_CHOICES:
            raise ValueError(f"input_sampling must be one of {IS_CHOICES}")

    @property
    def label(self) -> str:
        if self.ps == "baseline":
            return "baseline"
        return f"{self.ps}/{self.input_sampling}"


def next_mismatch(program, inputs: Sequence[str], truth: dict) -> Optional[str]:
    for text in inputs:
        if evaluate(program, text) != truth[text]:
            return text
    return None


def baseline_next_input(state: SessionState, truth: dict) -> str:
    """First dataset row where the current best program misses the intent."""
    if state.p_best is None:
        return state.inputs[0]
    found = next_mismatch(state.p_best, state.inputs, truth)
    if found is None:
        raise NotApplicableError("the best program already matches every row")
    return found


def _run_baseline(scenario: Scenario, variant: VariantConfig) -> Metrics:
    metrics = Metrics()
    deadline = time.monotonic() + variant.timeout_seconds
    examples = [(scenario.inputs[0], scenario.truth[scenario.inputs[0]])]
    while True:
        started = time.monotonic()
        space = learn(examples)
        if space.is_empty:
            metrics.failure = "task not expressible in the grammar"
            return metrics
        program = top_k(space, 1)[0]
        metrics.per_iteration_millis.append((time.monotonic() - started) * 1000.0)
        mismatch = next_mismatch(program, scenario.inputs, scenario.truth)
        if mismatch is None:
            metrics.converged = True
            return metrics
        if time.monotonic() > deadline:
            metrics.timed_out = True
            return metrics
        if metrics.iterations >= variant.max_iterations:
            return metrics
        examples.append((mismatch, scenario.truth[mismatch]))
        metrics.iterations += 1
        metrics.false_negatives += 1


def _run_active(scenario: Scenario, variant: VariantConfig) -> Metrics:
    metrics = Metrics()
    deadline = time.monotonic() + variant.timeout_seconds
    config = ActiveConfig(
        top=variant.k,
        random=variant.r if variant.ps == "topk-randomk" else 0,
        seed=variant.seed,
        input_sampling=variant.input_sampling,
        candidates=variant.candidates,
        max_iterations=variant.max_iterations,
        top_distinguish=variant.top_distinguish,
    )
    started = time.monotonic()
    state = new_session(scenario.inputs, config,
                        seed_example=(scenario.inputs[0], scenario.truth[scenario.inputs[0]]))
    metrics.per_iteration_millis.append((time.monotonic() - started) * 1000.0)
    while True:
        metrics.iterations = state.iteration
        if state.status is Status.FAILED:
            metrics.failure = state.failure
            return metrics
        if state.status is Status.CONVERGED:
            mismatch = next_mismatch(state.p_best, scenario.inputs, scenario.truth)
            if mismatch is None:
                metrics.converged = True
                return metrics
            if time.monotonic() > deadline:
                metrics.timed_out = True
                return metrics
            if state.iteration >= variant.max_iterations:
                return metrics
            metrics.false_negatives += 1
            state = _timed_submit(state, mismatch, scenario.truth[mismatch], metrics, forced=True)
            continue
        if time.monotonic() > deadline:
            metrics.timed_out = True
            return metrics
        if state.iteration >= variant.max_iterations:
            return metrics
        query = state.pending
        if evaluate(state.p_best, query) == scenario.truth[query]:
            metrics.false_positives += 1
        state = _timed_submit(state, query, scenario.truth[query], metrics)


def _timed_submit(state, text, output, metrics, forced=False):
    started = time.monotonic()
    state = submit(state, text, output, forced=forced)
    metrics.per_iteration_millis.append((time.monotonic() - started) * 1000.0)
    return state


def run_scenario(scenario: Scenario, variant: VariantConfig) -> Metrics:
    """Play one scenario against the simulated oracle and collect the counters."""
    if variant.ps == "baseline":
        metrics = _run_baseline(scenario, variant)
    else:
        metrics = _run_active(scenario, variant)
    if metrics.timed_out:
        metrics.converged = False
    return metrics


@dataclass
class Report:
    rows: list[dict]

    def to_csv(self) -> str:
        buf = io.StringIO()
        fields = ["variant", "solved_le1", "solved_le2", "solved_le3", "solved_le4",
                  "solved_le32", "fp", "fn", "timeouts"]
        writer = csv.DictWriter(buf, fieldnames=fields)
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: row[k] for k in fields})
        return buf.getvalue()

    def format_table(self) -> str:
        headers = ["variant", "<=1", "<=2", "<=3", "<=4", "<=32", "FP", "FN", "timeouts"]
        keys = ["variant", "solved_le1", "solved_le2", "solved_le3", "solved_le4",
                "solved_le32", "fp", "fn", "timeouts"]
        table = [headers] + [[str(row[k]) for k in keys] for row in self.rows]
        widths = [max(len(line[i]) for line in table) for i in range(len(headers))]
        lines = []
        for i, line in enumerate(table):
            lines.append("  ".join(cell.ljust(widths[j]) for j, cell in enumerate(line)))
            if i == 0:
                lines.append("  ".join("-" * w for w in widths))
        return "\n".join(lines)


def run_suite(scenarios: Sequence[Scenario], variants: Sequence[VariantConfig]) -> Report:
    """Run every scenario under every variant and aggregate per-variant counters."""
    rows = []
    for variant in variants:
        results = [run_scenario(s, variant) for s in scenarios]
        row = {"variant": variant.label,
               "fp": sum(m.false_positives for m in results),
               "fn": sum(m.false_negatives for m in results),
               "timeouts": sum(1 for m in results if m.timed_out)}
        for limit in ITERATION_BUCKETS:
            row[f"solved_le{limit}"] = sum(
                1 for m in results if m.converged and m.iterations <= limit)
        row["per_iteration_millis"] = [ms for m in results for ms in m.per_iteration_millis]
        rows.append(row)
    return Report(rows)


def load_suite(directory) -> tuple[list[Scenario], list[str]]:
    """Scenario files from a directory; malformed files are reported, not fatal."""
    scenarios = []
    errors = []
    for path in sorted(Path(directory).glob("*.json")):
        try:
            scenarios.append(Scenario.from_json(json.loads(path.read_text())))
        except Exception as exc:
            errors.append(f"{path.name}: {exc}")
    return scenarios, errors


def bundled_suite() -> list[Scenario]:
    """The scenario collection shipped with the package."""
    scenarios = []
    root = resources.files("activefill").joinpath("suite")
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            scenarios.append(Scenario.from_json(json.loads(entry.read_text())))
    return scenarios
