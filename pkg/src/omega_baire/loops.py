"""Graph substrate: SCC decomposition, loops, and loop-completing words.

A loop is a nonempty state set reachable from the initial state whose induced
subgraph (transitions with both endpoints inside the set) is strongly
connected, where a singleton additionally needs a self-transition.  Loops are
exactly the Inf sets of runs; SCCs are the maximal loops plus the trivial
one-state components, and terminal SCCs absorb every continuation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .automaton import DetAutomaton, LassoWord, MullerTable, inf_from_state, inf_set
from .errors import BadLoop, BadStateIndex, SizeGuard

DEFAULT_ENUMERATION_BUDGET = 1 << 20


@dataclass(frozen=True)
class SccAnalysis:
    """SCC partition of an automaton plus the derived condensation data.

    SCC ids are assigned by ascending smallest member state, so the analysis
    of a given automaton is reproducible.  `terminal` holds the ids with no
    outgoing condensation edge; every transition from a state of a terminal
    SCC stays inside it.
    """

    scc_of: tuple[int, ...]
    sccs: tuple[frozenset[int], ...]
    condensation_edges: frozenset[tuple[int, int]]
    terminal: frozenset[int]
    reachable: frozenset[int]

    @property
    def terminal_sccs(self) -> tuple[frozenset[int], ...]:
        return tuple(self.sccs[i] for i in sorted(self.terminal))

    def scc_id_of_set(self, z: Iterable[int]) -> int | None:
        """Id of the SCC equal (as a set) to `z`, or None."""
        zs = frozenset(z)
        if not zs:
            return None
        i = self.scc_of[min(zs)]
        return i if self.sccs[i] == zs else None

    def is_terminal_set(self, z: Iterable[int]) -> bool:
        i = self.scc_id_of_set(z)
        return i is not None and i in self.terminal


def _reachable_states(a: DetAutomaton) -> frozenset[int]:
    r = len(a.alphabet)
    delta = a.delta
    seen = {a.initial}
    frontier = deque([a.initial])
    while frontier:
        s = frontier.popleft()
        base = s * r
        for x in range(r):
            t = delta[base + x]
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return frozenset(seen)


def analyze(a: DetAutomaton) -> SccAnalysis:
    """SCCs, condensation edges, terminal SCCs, and reachability, in O(n*|X|).

    Tarjan's algorithm, iterative so that long chains do not overflow the
    interpreter stack.
    """
    n = a.n_states
    r = len(a.alphabet)
    delta = a.delta

    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            frame = work[-1]
            v, xi = frame
            if xi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            pushed = False
            base = v * r
            while xi < r:
                w = delta[base + xi]
                xi += 1
                if index[w] == -1:
                    frame[1] = xi
                    work.append([w, 0])
                    pushed = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if pushed:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))

    comps.sort(key=min)
    scc_of = [0] * n
    for i, comp in enumerate(comps):
        for s in comp:
            scc_of[s] = i

    edges: set[tuple[int, int]] = set()
    for s in range(n):
        si = scc_of[s]
        base = s * r
        for x in range(r):
            ti = scc_of[delta[base + x]]
            if ti != si:
                edges.add((si, ti))

    with_out = {e[0] for e in edges}
    terminal = frozenset(i for i in range(len(comps)) if i not in with_out)
    return SccAnalysis(
        scc_of=tuple(scc_of),
        sccs=tuple(comps),
        condensation_edges=frozenset(edges),
        terminal=terminal,
        reachable=_reachable_states(a),
    )


def _induced_strongly_connected(a: DetAutomaton, zs: frozenset[int]) -> bool:
    """Strong connectivity of the subgraph induced by `zs`; singletons need a
    self-transition."""
    r = len(a.alphabet)
    delta = a.delta
    if len(zs) == 1:
        (s,) = zs
        base = s * r
        return any(delta[base + x] == s for x in range(r))

    fwd: dict[int, set[int]] = {s: set() for s in zs}
    rev: dict[int, set[int]] = {s: set() for s in zs}
    for s in zs:
        base = s * r
        for x in range(r):
            t = delta[base + x]
            if t in fwd:
                fwd[s].add(t)
                rev[t].add(s)

    start = next(iter(zs))
    for adj in (fwd, rev):
        seen = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for t in adj[u]:
                if t not in seen:
                    seen.add(t)
                    frontier.append(t)
        if len(seen) != len(zs):
            return False
    return True


def is_loop(
    a: DetAutomaton, z: Iterable[int], analysis: SccAnalysis | None = None
) -> bool:
    """Whether `z` is realizable as the Inf set of some run.

    True iff `z` is nonempty, reachable from the initial state, and carries a
    closed walk inside `z` visiting all of `z`.
    """
    zs = frozenset(z)
    for s in zs:
        if not 0 <= s < a.n_states:
            raise BadStateIndex(f"state {s} out of range")
    if not zs:
        return False
    reachable = analysis.reachable if analysis is not None else _reachable_states(a)
    if zs.isdisjoint(reachable):
        return False
    return _induced_strongly_connected(a, zs)


def _iter_scc_loops(
    a: DetAutomaton, scc: frozenset[int], max_size: int | None
) -> Iterator[frozenset[int]]:
    """Loops inside one reachable SCC, in ascending bitmask order."""
    members = sorted(scc)
    k = len(members)
    for mask in range(1, 1 << k):
        subset = frozenset(members[i] for i in range(k) if mask >> i & 1)
        if max_size is not None and len(subset) > max_size:
            continue
        if _induced_strongly_connected(a, subset):
            yield subset


def iter_loops(
    a: DetAutomaton,
    max_size: int | None = None,
    *,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    analysis: SccAnalysis | None = None,
) -> Iterator[frozenset[int]]:
    """Lazily yield all loops; loops live inside single SCCs, so only subsets
    of reachable SCCs are examined.  Raises SizeGuard when the total subset
    count would exceed `budget`."""
    if analysis is None:
        analysis = analyze(a)
    candidates = [c for c in analysis.sccs if not c.isdisjoint(analysis.reachable)]
    cost = sum(1 << len(c) for c in candidates)
    if cost > budget:
        raise SizeGuard(
            f"loop enumeration needs {cost} subset checks, budget is {budget}"
        )
    for scc in candidates:
        yield from _iter_scc_loops(a, scc, max_size)


def enumerate_loops(
    a: DetAutomaton,
    max_size: int | None = None,
    *,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    analysis: SccAnalysis | None = None,
) -> list[frozenset[int]]:
    """All loops, sorted canonically (ascending state-set bitmask)."""
    loops = list(iter_loops(a, max_size, budget=budget, analysis=analysis))
    loops.sort(key=lambda z: sum(1 << s for s in z))
    return loops


def loop_completing_words(
    a: DetAutomaton, s: int, z: Iterable[int], len_bound: int
) -> list[tuple[str, ...]]:
    """All minimal words that return to `s` while sweeping exactly `z`.

    A word qualifies when reading it from `s` ends at `s`, visits exactly the
    states of `z`, and no nonempty proper prefix already did both.  The
    result is prefix-free and listed in lexicographic symbol order.
    """
    zs = frozenset(z)
    if s not in zs or not is_loop(a, zs):
        raise BadLoop(f"state {s} and set {sorted(zs)} do not form a loop")
    r = len(a.alphabet)
    delta = a.delta
    out: list[tuple[str, ...]] = []

    def extend(state: int, sweep: frozenset[int], word: tuple[str, ...]) -> None:
        for x in range(r):
            t = delta[state * r + x]
            if t not in zs:
                continue
            new_word = word + (a.alphabet[x],)
            new_sweep = sweep | {t}
            if t == s and new_sweep == zs:
                out.append(new_word)
            elif len(new_word) < len_bound:
                extend(t, new_sweep, new_word)

    if len_bound >= 1:
        extend(s, frozenset({s}), ())
    return out


def words_to_state(a: DetAutomaton, s: int, len_bound: int) -> list[tuple[str, ...]]:
    """All words of length <= len_bound leading from the initial state to `s`,
    in shortlex order."""
    out: list[tuple[str, ...]] = []
    frontier: list[tuple[int, tuple[str, ...]]] = [(a.initial, ())]
    if a.initial == s:
        out.append(())
    for _ in range(len_bound):
        nxt: list[tuple[int, tuple[str, ...]]] = []
        for state, word in frontier:
            for x, tok in enumerate(a.alphabet):
                t = a.delta[state * len(a.alphabet) + x]
                w = word + (tok,)
                if t == s:
                    out.append(w)
                nxt.append((t, w))
        frontier = nxt
    return out


@dataclass(frozen=True)
class LassoDecomposition:
    """Witness that a lasso word lies in one prefix-then-cycle component of
    the accepted language: after `prefix_len` symbols the run sits at `state`
    inside `loop` and never leaves it."""

    state: int
    loop: frozenset[int]
    prefix_len: int


def decompose_lasso(
    a: DetAutomaton, t: MullerTable, w: LassoWord
) -> LassoDecomposition | None:
    """Decompose an accepted lasso into its entry word and absorbed loop.

    Returns the Inf set `Z` (a table entry), the first state from which the
    run stays inside `Z` forever, and the minimal split position; or None
    when the lasso is rejected.
    """
    z = inf_set(a, w)
    if z not in t.entries:
        return None
    horizon = len(w.prefix) + (a.n_states + 1) * len(w.period)
    states = [a.initial]
    s = a.initial
    for i in range(horizon):
        s = a.delta[s * len(a.alphabet) + a.symbol_index[w.symbol_at(i)]]
        states.append(s)
    last_bad = -1
    for i, st in enumerate(states):
        if st not in z:
            last_bad = i
    p = last_bad + 1
    return LassoDecomposition(state=states[p], loop=z, prefix_len=p)


def lassos_cover_loops(a: DetAutomaton, bound: int) -> set[frozenset[int]]:
    """Inf sets of all lassos with |prefix|, |period| <= bound.

    Membership of a lasso depends on the prefix only through the state it
    reaches, so prefixes are collapsed to the states reachable within
    `bound` steps.
    """
    r = len(a.alphabet)
    reachable_in_bound = {a.initial}
    frontier = {a.initial}
    for _ in range(bound):
        nxt = set()
        for s in frontier:
            for x in range(r):
                nxt.add(a.delta[s * r + x])
        frontier = nxt - reachable_in_bound
        reachable_in_bound |= nxt
        if not frontier:
            break

    starts = sorted(reachable_in_bound)
    seen: set[frozenset[int]] = set()
    periods: list[tuple[int, ...]] = [()]
    for _ in range(bound):
        periods = [v + (x,) for v in periods for x in range(r)]
        for v in periods:
            for s in starts:
                seen.add(inf_from_state(a, s, v))
    return seen
