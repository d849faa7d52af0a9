"""Deterministic Muller to Buchi translation for maximal-loop tables.

When every loop entry of a Muller table is a whole SCC, the language is
Buchi-recognizable with at most |S| + |S|^2 states: each table SCC gets a
stack of sweep layers that advance only when the run visits the block's
states in a fixed order, so the top layer recurs exactly when the run visits
the whole block infinitely often.  Layer 0 tracks the original automaton.

Tables with non-maximal loop entries are rejected; entries that are not
loops at all cannot change the language and are dropped with a diagnostic.
"""

from __future__ import annotations

from array import array
from bisect import bisect_right
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Iterator, Literal

from .automaton import BuchiSet, DetAutomaton, MullerTable
from .errors import PreconditionViolated
from .loops import SccAnalysis, analyze, is_loop

# Above this many (state, symbol) table cells the construction switches to
# the vectorized path.
VECTORIZE_THRESHOLD = 1 << 16


@dataclass(frozen=True)
class MaximalLoopReport:
    """Outcome of the maximal-loop precondition check.

    `blocks` are the accepted entries (loops that equal an SCC), ordered by
    smallest member; `non_loops` are inert entries that would be dropped.
    """

    ok: bool
    blocks: tuple[frozenset[int], ...]
    non_maximal: tuple[frozenset[int], ...]
    non_loops: tuple[frozenset[int], ...]

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        parts = []
        if self.non_maximal:
            sets = " ".join(
                "{" + ",".join(map(str, sorted(z))) + "}" for z in self.non_maximal
            )
            parts.append(f"non-maximal loop entries: {sets}")
        if self.non_loops:
            sets = " ".join(
                "{" + ",".join(map(str, sorted(z))) + "}" for z in self.non_loops
            )
            parts.append(f"dropped non-loop entries: {sets}")
        return "; ".join(parts) if parts else "all loop entries are maximal"


def check_maximal_loops(
    a: DetAutomaton, t: MullerTable, analysis: SccAnalysis | None = None
) -> MaximalLoopReport:
    """True iff every table entry that is a loop equals an SCC of the
    automaton (set equality)."""
    if analysis is None:
        analysis = analyze(a)
    t.validate_for(a.n_states)
    blocks: list[frozenset[int]] = []
    non_maximal: list[frozenset[int]] = []
    non_loops: list[frozenset[int]] = []
    for entry in t.entries:
        if not is_loop(a, entry, analysis):
            non_loops.append(entry)
        elif analysis.scc_id_of_set(entry) is not None:
            blocks.append(entry)
        else:
            non_maximal.append(entry)
    key = lambda z: tuple(sorted(z))
    return MaximalLoopReport(
        ok=not non_maximal,
        blocks=tuple(sorted(blocks, key=min)),
        non_maximal=tuple(sorted(non_maximal, key=key)),
        non_loops=tuple(sorted(non_loops, key=key)),
    )


def buchi_state_bound(
    a: DetAutomaton, t: MullerTable, analysis: SccAnalysis | None = None
) -> int:
    """Exact unpruned state count of the translation: |S| plus the squared
    size of every maximal loop entry."""
    if analysis is None:
        analysis = analyze(a)
    total = a.n_states
    for entry in t.entries:
        if is_loop(a, entry, analysis) and analysis.scc_id_of_set(entry) is not None:
            total += len(entry) ** 2
    return total


class LayeredOrigins(Mapping):
    """Read-only map from output state to its (base state, layer) pair,
    computed on demand so that large translations stay cheap."""

    def __init__(self, kept: Sequence[int], n: int, orderings: list[list[int]], offsets: list[int]):
        self._kept = kept
        self._n = n
        self._orderings = orderings
        self._offsets = offsets

    def __getitem__(self, new_idx: int) -> tuple[int, int]:
        idx = self._kept[new_idx]
        if idx < self._n:
            return (idx, 0)
        bi = bisect_right(self._offsets, idx) - 1
        members = self._orderings[bi]
        k = len(members)
        rel = idx - self._offsets[bi]
        return (members[rel % k], rel // k + 1)

    def __len__(self) -> int:
        return len(self._kept)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self._kept)))


@dataclass(frozen=True)
class BuchiTranslation:
    """Result of the layered translation.

    `origin` maps each state of the output automaton to its (base state,
    layer) pair in the layered construction; `unpruned_state_count` is the
    exact state count before unreachable layers are removed.
    """

    automaton: DetAutomaton
    accepting: BuchiSet
    origin: Mapping[int, tuple[int, int]] = field(compare=False, hash=False)
    unpruned_state_count: int = 0
    blocks: tuple[frozenset[int], ...] = ()


def _layered_delta_python(
    a: DetAutomaton,
    orderings: list[list[int]],
    offsets: list[int],
    block_of: list[int],
    rank0: list[int],
    first_of: list[int],
    total: int,
) -> list[int]:
    n = a.n_states
    r = len(a.alphabet)
    delta = a.delta
    flat = [0] * (total * r)
    for s in range(n):
        for x in range(r):
            t = delta[s * r + x]
            f = first_of[t]
            flat[s * r + x] = f if f >= 0 else t
    for bi, members in enumerate(orderings):
        k = len(members)
        off = offsets[bi]
        for j in range(1, k + 1):
            row = off + (j - 1) * k
            for p, z in enumerate(members):
                idx = row + p
                for x in range(r):
                    t = delta[z * r + x]
                    if block_of[t] != bi or j == k:
                        out = t
                    elif rank0[t] == j:
                        out = off + j * k + j
                    else:
                        out = row + rank0[t]
                    flat[idx * r + x] = out
    return flat


def _layered_delta_numpy(
    a: DetAutomaton,
    orderings: list[list[int]],
    offsets: list[int],
    block_of: list[int],
    rank0: list[int],
    first_of: list[int],
    total: int,
):
    import numpy as np

    n = a.n_states
    r = len(a.alphabet)
    delta2d = np.asarray(a.delta, dtype=np.int64).reshape(n, r)
    block_np = np.asarray(block_of, dtype=np.int64)
    rank_np = np.asarray(rank0, dtype=np.int64)
    first_np = np.asarray(first_of, dtype=np.int64)

    flat = np.empty((total, r), dtype=np.int64)
    tgt = delta2d
    flat[:n] = np.where(first_np[tgt] >= 0, first_np[tgt], tgt)
    for bi, members in enumerate(orderings):
        k = len(members)
        off = offsets[bi]
        member_targets = delta2d[np.asarray(members, dtype=np.int64)]
        in_block = block_np[member_targets] == bi
        ranks = rank_np[member_targets]
        for j in range(1, k + 1):
            row = off + (j - 1) * k
            if j == k:
                out = member_targets
            else:
                promote = in_block & (ranks == j)
                keep = in_block & ~promote
                out = np.where(
                    promote, off + j * k + j, np.where(keep, row + ranks, member_targets)
                )
            flat[row : row + k] = out
    return flat


def _prune_python(flat: list[int], r: int, total: int, initial: int):
    seen = bytearray(total)
    seen[initial] = 1
    frontier = [initial]
    while frontier:
        s = frontier.pop()
        base = s * r
        for x in range(r):
            t = flat[base + x]
            if not seen[t]:
                seen[t] = 1
                frontier.append(t)
    kept = [s for s in range(total) if seen[s]]
    renumber = [-1] * total
    for new, old in enumerate(kept):
        renumber[old] = new
    new_flat = [renumber[flat[old * r + x]] for old in kept for x in range(r)]
    return new_flat, kept


def _prune_numpy(flat2d, initial: int):
    """Reachability over the layered table, frontier-vectorized."""
    import numpy as np

    total, r = flat2d.shape
    visited = np.zeros(total, dtype=bool)
    visited[initial] = True
    frontier = np.array([initial], dtype=np.int64)
    while frontier.size:
        nxt = flat2d[frontier].ravel()
        nxt = nxt[~visited[nxt]]
        if nxt.size > 1:
            nxt = np.unique(nxt)
        visited[nxt] = True
        frontier = nxt
    kept_np = np.flatnonzero(visited)
    renumber = np.full(total, -1, dtype=np.int64)
    renumber[kept_np] = np.arange(kept_np.size, dtype=np.int64)
    new_flat = renumber[flat2d[kept_np]]
    kept = array("q")
    kept.frombytes(kept_np.astype(np.int64, copy=False).tobytes())
    return new_flat, kept


def muller_to_buchi_maximal(
    a: DetAutomaton,
    t: MullerTable,
    analysis: SccAnalysis | None = None,
    *,
    prune: bool = True,
    block_order: Literal["ascending", "descending"] = "ascending",
    vectorized: bool | None = None,
) -> BuchiTranslation:
    """Translate a maximal-loop Muller automaton into an equivalent
    deterministic Buchi automaton.

    States: every original state at layer 0, plus a (state, layer) grid per
    table block.  From layer 0 the run enters layer 1 when it hits the first
    state of a block; inside a block, reaching the next state in the fixed
    order advances the layer, leaving the block or completing the top layer
    resets to layer 0, everything else keeps the layer.  Accepting states are
    the top-layer corners, which recur iff the run sweeps a whole block
    forever.  The block order is ascending state index by default; the
    accepted language does not depend on it.
    """
    if analysis is None:
        analysis = analyze(a)
    report = check_maximal_loops(a, t, analysis)
    if not report.ok:
        raise PreconditionViolated(report.describe())

    n = a.n_states
    r = len(a.alphabet)
    orderings = [
        sorted(block, reverse=(block_order == "descending")) for block in report.blocks
    ]
    offsets: list[int] = []
    total = n
    for members in orderings:
        offsets.append(total)
        total += len(members) ** 2

    block_of = [-1] * n
    rank0 = [-1] * n
    first_of = [-1] * n
    for bi, members in enumerate(orderings):
        for p, z in enumerate(members):
            block_of[z] = bi
            rank0[z] = p
        first_of[members[0]] = offsets[bi]

    use_numpy = vectorized
    if use_numpy is None:
        use_numpy = total * r >= VECTORIZE_THRESHOLD
    if use_numpy:
        try:
            import numpy  # noqa: F401
        except ImportError:
            use_numpy = False

    accepting_unpruned = [
        offsets[bi] + (len(m) - 1) * len(m) + (len(m) - 1)
        for bi, m in enumerate(orderings)
    ]

    flat_table: object
    kept: Sequence[int]
    if use_numpy:
        flat2d = _layered_delta_numpy(
            a, orderings, offsets, block_of, rank0, first_of, total
        )
        if prune:
            flat_table, kept = _prune_numpy(flat2d, a.initial)
        else:
            flat_table, kept = flat2d, range(total)
    else:
        flat = _layered_delta_python(
            a, orderings, offsets, block_of, rank0, first_of, total
        )
        if prune:
            flat_table, kept = _prune_python(flat, r, total, a.initial)
        else:
            flat_table, kept = flat, range(total)

    if prune:
        # kept is ascending, so renumbering of the few special states is a
        # binary search instead of a full index map.
        def new_index(old: int) -> int | None:
            i = bisect_right(kept, old) - 1
            return i if i >= 0 and kept[i] == old else None

        initial_new = new_index(a.initial)
        assert initial_new is not None
        accept_new = frozenset(
            i for i in map(new_index, accepting_unpruned) if i is not None
        )
    else:
        initial_new = a.initial
        accept_new = frozenset(accepting_unpruned)
    automaton = DetAutomaton(
        alphabet=a.alphabet,
        n_states=len(kept),
        initial=initial_new,
        delta=flat_table,
    )
    return BuchiTranslation(
        automaton=automaton,
        accepting=BuchiSet(accept_new),
        origin=LayeredOrigins(kept, n, orderings, offsets),
        unpruned_state_count=total,
        blocks=report.blocks,
    )
