"""Grouping strings by shape to pick diverse candidate inputs.

A string's pattern collapses runs of same-class characters into symbols:
digit runs merge regardless of width (so "8" and "12" share a shape), short
letter runs keep their text (so "in" and "cm" separate), long runs keep only
their class, and punctuation stays literal. Partitions over these patterns
drive stratified candidate sampling.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .dsl import Program, evaluate

logger = logging.getLogger(__name__)

MAX_CLUSTERS = 64
SHORT_RUN = 4  # letter/whitespace runs up to this length keep detail


@dataclass(frozen=True)
class Pattern:
    """Shape abstraction of a string: a tuple of (class, detail) symbols."""

    symbols: tuple[tuple[str, str], ...]


NULL_PATTERN = Pattern((("null", ""),))


def _char_class(ch: str) -> str:
    if "0" <= ch <= "9":
        return "digits"
    if "a" <= ch <= "z":
        return "lower"
    if "A" <= ch <= "Z":
        return "upper"
    if ch.isspace():
        return "space"
    return "lit"


def abstract(s: str) -> Pattern:
    """Deterministic shape of a string; equal strings always share a pattern."""
    symbols: list[tuple[str, str]] = []
    i = 0
    while i < len(s):
        cls = _char_class(s[i])
        if cls == "lit":
            symbols.append(("lit", s[i]))
            i += 1
            continue
        j = i
        while j < len(s) and _char_class(s[j]) == cls:
            j += 1
        run = s[i:j]
        if cls == "digits":
            detail = ""
        elif cls == "space":
            detail = str(len(run)) if len(run) <= SHORT_RUN else "long"
        else:
            detail = run.lower() if len(run) <= SHORT_RUN else "long"
        symbols.append((cls, detail))
        i = j
    return Pattern(tuple(symbols))


@dataclass(frozen=True)
class Partition:
    """Disjoint clusters covering the dataset, indexed 1..m in first-seen order."""

    items: tuple[str, ...]
    cluster_of: dict[str, int]
    clusters: tuple[tuple[str, ...], ...]

    @property
    def m(self) -> int:
        return len(self.clusters)


def _partition_by(dataset: Sequence[str], key: Callable, max_clusters: int) -> Partition:
    if not dataset:
        raise ValueError("dataset must be nonempty")
    index_of: dict = {}
    members: list[list[str]] = []
    overflow: Optional[int] = None
    for s in dataset:
        k = key(s)
        if k in index_of:
            idx = index_of[k]
        elif len(members) < max_clusters - 1:
            idx = len(members)
            index_of[k] = idx
            members.append([])
        else:
            # cap reached: every further shape shares one catch-all bucket
            if overflow is None:
                overflow = len(members)
                members.append([])
            else:
                logger.warning("cluster cap %d exceeded; shape merged into catch-all", max_clusters)
            idx = overflow
            index_of[k] = idx
        members[idx].append(s)
    cluster_of = {}
    for idx, group in enumerate(members):
        for s in group:
            cluster_of.setdefault(s, idx + 1)
    return Partition(tuple(dataset), cluster_of, tuple(tuple(g) for g in members))


def partition(dataset: Sequence[str], max_clusters: int = MAX_CLUSTERS) -> Partition:
    """Group strings whose patterns are equal; cluster order is first occurrence."""
    return _partition_by(dataset, abstract, max_clusters)


def output_partition(inputs: Sequence[str], witnesses: Sequence[Program],
                     max_clusters: int = MAX_CLUSTERS) -> Partition:
    """Group inputs by the shapes of the outputs the witness programs produce.

    A failed evaluation contributes a dedicated null shape, so inputs the
    witnesses cannot handle cluster together rather than vanishing.
    """
    if not witnesses:
        raise ValueError("at least one witness program is required")

    def key(s: str):
        shapes = []
        for program in witnesses:
            value = evaluate(program, s)
            shapes.append(NULL_PATTERN if value is None else abstract(value))
        return tuple(shapes)

    return _partition_by(inputs, key, max_clusters)


def io_partition(inputs: Sequence[str], witnesses: Sequence[Program],
                 max_clusters: int = MAX_CLUSTERS) -> Partition:
    """Intersection of input-shape and output-shape grouping."""
    if not witnesses:
        raise ValueError("at least one witness program is required")

    def key(s: str):
        shapes = tuple(NULL_PATTERN if (v := evaluate(p, s)) is None else abstract(v)
                       for p in witnesses)
        return (abstract(s), shapes)

    return _partition_by(inputs, key, max_clusters)


def diverse_sample(part: Partition, n: int, seed: int) -> list[str]:
    """At least n inputs, ceil(n * |cluster| / |dataset|) from each cluster.

    Every cluster contributes at least one member; draws within a cluster are
    uniform without replacement; the result keeps dataset order and is
    deterministic for a fixed seed.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    total = len(part.items)
    picked: list[str] = []
    for members in part.clusters:
        take = min(len(members), math.ceil(n * len(members) / total))
        picked.extend(rng.sample(list(members), take))
    order = {s: i for i, s in enumerate(part.items)}
    return sorted(picked, key=lambda s: order[s])
