"""Version spaces: every bounded-grammar program consistent with the examples.

The space for one example is a DAG over output positions; an edge (i, j)
carries the full set of atoms that produce output[i:j] on the input. Spaces
for several examples are intersected into a product DAG whose edges keep the
shared atoms, so a path from root to sink spells out a program satisfying
every example. Counting, ranked extraction and structured random draws all
work on the DAG without materializing programs.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .dsl import (
    MAX_ABS_INDEX,
    MAX_OCCURRENCE,
    _ALNUM_CHARS,
    START,
    END,
    AbsPos,
    Atom,
    ConstStr,
    Program,
    SubStr,
    Token,
    TokPos,
    atom_key,
    atom_score,
    token_matches,
)


class ContradictionError(ValueError):
    """Same input appears with two different outputs."""


class EmptySpaceError(ValueError):
    """No program in the bounded grammar satisfies all examples."""


@dataclass(frozen=True)
class Edge:
    atoms: tuple[Atom, ...]        # sorted by atom_key for determinism
    atom_set: frozenset
    child: int


@dataclass
class VersionSpace:
    """DAG of consistent programs; immutable after construction."""

    nodes: dict[int, tuple[Edge, ...]]
    root: Optional[int]
    final: Optional[int]
    examples: tuple[tuple[str, str], ...]
    _counts: dict = field(default_factory=dict, repr=False)

    @property
    def is_empty(self) -> bool:
        return self.root is None


def position_descriptors(text: str) -> dict[int, tuple]:
    """All bounded position expressions resolving to each offset of text."""
    out: dict[int, list] = {off: [] for off in range(len(text) + 1)}
    n = len(text)
    for off in range(n + 1):
        if off <= MAX_ABS_INDEX:
            out[off].append(AbsPos(off))
        neg = off - n - 1
        if -neg <= MAX_ABS_INDEX:
            out[off].append(AbsPos(neg))
    tokens = [(t, None) for t in Token if t is not Token.LITERAL]
    tokens += [(Token.LITERAL, c) for c in sorted({c for c in text if c not in _ALNUM_CHARS})]
    for token, char in tokens:
        matches = token_matches(text, token, char)
        total = len(matches)
        for mi, (s, e) in enumerate(matches):
            occs = []
            if mi + 1 <= MAX_OCCURRENCE:
                occs.append(mi + 1)
            if total - mi <= MAX_OCCURRENCE:
                occs.append(mi - total)
            for occ in occs:
                out[s].append(TokPos(token, occ, START, char))
                out[e].append(TokPos(token, occ, END, char))
    return {off: tuple(ps) for off, ps in out.items()}


def _occurrences(hay: str, needle: str) -> list[tuple[int, int]]:
    spans = []
    start = 0
    while True:
        i = hay.find(needle, start)
        if i < 0:
            return spans
        spans.append((i, i + len(needle)))
        start = i + 1


def _single_space(text_in: str, text_out: str) -> VersionSpace:
    n = len(text_out)
    example = ((text_in, text_out),)
    if n == 0:
        return VersionSpace({}, None, None, example)
    descs = position_descriptors(text_in)
    nodes: dict[int, tuple[Edge, ...]] = {n: ()}
    for i in range(n):
        edges = []
        for j in range(i + 1, n + 1):
            chunk = text_out[i:j]
            atoms: set = {ConstStr(chunk)}
            for (s, e) in _occurrences(text_in, chunk):
                for ps in descs[s]:
                    for pe in descs[e]:
                        atoms.add(SubStr(ps, pe))
            ordered = tuple(sorted(atoms, key=atom_key))
            edges.append(Edge(ordered, frozenset(atoms), j))
        nodes[i] = tuple(edges)
    return VersionSpace(nodes, 0, n, example)


def _prune(nodes: dict[int, tuple[Edge, ...]], root: int, final: int):
    """Drop nodes that cannot reach the sink, then edges into dropped nodes."""
    reaches = {final}
    changed = True
    while changed:
        changed = False
        for node, edges in nodes.items():
            if node in reaches:
                continue
            if any(e.child in reaches for e in edges):
                reaches.add(node)
                changed = True
    if root not in reaches:
        return None
    pruned = {}
    for node in reaches:
        pruned[node] = tuple(e for e in nodes[node] if e.child in reaches)
    return pruned


def _intersect(a: VersionSpace, b: VersionSpace) -> VersionSpace:
    examples = a.examples + b.examples
    if a.is_empty or b.is_empty:
        return VersionSpace({}, None, None, examples)
    key_to_id = {(a.root, b.root): 0}
    nodes: dict[int, tuple[Edge, ...]] = {}
    queue = deque([(a.root, b.root)])
    while queue:
        ka, kb = queue.popleft()
        nid = key_to_id[(ka, kb)]
        if nid in nodes:
            continue
        edges = []
        for ea in a.nodes[ka]:
            for eb in b.nodes[kb]:
                shared = ea.atom_set & eb.atom_set
                if not shared:
                    continue
                child_key = (ea.child, eb.child)
                if child_key not in key_to_id:
                    key_to_id[child_key] = len(key_to_id)
                    queue.append(child_key)
                ordered = tuple(sorted(shared, key=atom_key))
                edges.append(Edge(ordered, shared, key_to_id[child_key]))
        nodes[nid] = tuple(edges)
    final_key = (a.final, b.final)
    if final_key not in key_to_id:
        return VersionSpace({}, None, None, examples)
    final = key_to_id[final_key]
    nodes.setdefault(final, ())
    pruned = _prune(nodes, 0, final)
    if pruned is None:
        return VersionSpace({}, None, None, examples)
    return VersionSpace(pruned, 0, final, examples)


def learn(examples) -> VersionSpace:
    """Version space of all bounded-grammar programs mapping every input to
    its output. The space is empty (not an error) when the grammar cannot
    express the examples; repeating an input with a different output is a
    contradiction and raises.
    """
    examples = list(examples)
    if not examples:
        raise ValueError("at least one example is required")
    seen: dict[str, str] = {}
    unique = []
    for text_in, text_out in examples:
        if text_in in seen:
            if seen[text_in] != text_out:
                raise ContradictionError(
                    f"input {text_in!r} maps to both {seen[text_in]!r} and {text_out!r}")
            continue
        seen[text_in] = text_out
        unique.append((text_in, text_out))
    space = _single_space(*unique[0])
    for pair in unique[1:]:
        if space.is_empty:
            break
        space = _intersect(space, _single_space(*pair))
    return VersionSpace(space.nodes, space.root, space.final, tuple(unique))


def count_programs(vs: VersionSpace) -> int:
    """Exact number of denoted programs (dynamic programming, exact integers)."""
    if vs.is_empty:
        return 0

    def count(node: int) -> int:
        if node == vs.final:
            return 1
        if node in vs._counts:
            return vs._counts[node]
        total = sum(len(e.atoms) * count(e.child) for e in vs.nodes[node])
        vs._counts[node] = total
        return total

    return count(vs.root)


def all_programs(vs: VersionSpace) -> Iterator[Program]:
    """Enumerate every denoted program; intended for tiny spaces and tests."""
    if vs.is_empty:
        return

    def walk(node: int, prefix: tuple):
        if node == vs.final:
            yield Program(prefix)
            return
        for edge in vs.nodes[node]:
            for atom in edge.atoms:
                yield from walk(edge.child, prefix + (atom,))

    yield from walk(vs.root, ())


class _SuffixStream:
    """Lazy best-first enumeration of suffix programs from one DAG node.

    Entries are (score, key_tuple, pieces) ordered by score descending then
    canonical key ascending; the frontier heap expands one grid cell per pop,
    which keeps extraction O(k log k) per node without materializing spaces.
    """

    def __init__(self, emitted):
        self.emitted = emitted
        self.heap = []


def top_k(vs: VersionSpace, k: int) -> list[Program]:
    """The k best-ranked denoted programs, best first; fewer if the space is smaller."""
    if k < 1:
        raise ValueError("k must be positive")
    if vs.is_empty:
        return []

    ranked_edges: dict[int, list] = {}
    streams: dict[int, _SuffixStream] = {}

    def edges_of(node: int):
        if node not in ranked_edges:
            prepared = []
            for edge in vs.nodes[node]:
                atoms = sorted(edge.atoms, key=lambda a: (-atom_score(a), atom_key(a)))
                prepared.append((atoms, edge.child))
            ranked_edges[node] = prepared
        return ranked_edges[node]

    def get(node: int, rank: int):
        if node == vs.final:
            return (0.0, (), ()) if rank == 0 else None
        if node not in streams:
            stream = _SuffixStream([])
            streams[node] = stream
            for ei, (atoms, child) in enumerate(edges_of(node)):
                suffix = get(child, 0)
                if suffix is None or not atoms:
                    continue
                _push(stream, node, ei, 0, 0, suffix)
        stream = streams[node]
        while len(stream.emitted) <= rank and stream.heap:
            neg_score, keys, ei, ai, sr, pieces = heapq.heappop(stream.heap)
            stream.emitted.append((-neg_score, keys, pieces))
            atoms, child = edges_of(node)[ei]
            if sr == 0 and ai + 1 < len(atoms):
                _push(stream, node, ei, ai + 1, 0, get(child, 0))
            nxt = get(child, sr + 1)
            if nxt is not None:
                _push(stream, node, ei, ai, sr + 1, nxt)
        return stream.emitted[rank] if rank < len(stream.emitted) else None

    def _push(stream, node, ei, ai, sr, suffix):
        atoms, _child = edges_of(node)[ei]
        atom = atoms[ai]
        score = atom_score(atom) + suffix[0]
        keys = (atom_key(atom),) + suffix[1]
        pieces = (atom,) + suffix[2]
        heapq.heappush(stream.heap, (-score, keys, ei, ai, sr, pieces))

    results = []
    for rank in range(k):
        entry = get(vs.root, rank)
        if entry is None:
            break
        results.append(Program(entry[2]))
    return results
