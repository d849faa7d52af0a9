"""Core data model for deterministic omega-automata.

A `DetAutomaton` is a complete deterministic transition structure over a
finite alphabet; acceptance is attached separately as either a `MullerTable`
(accept iff the Inf set of the run is a table entry) or a `BuchiSet` (accept
iff the Inf set meets the accepting states).  Infinite inputs are represented
by `LassoWord` values, the ultimately periodic words u * v^omega that are the
only finitely presentable omega-words.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import BadStateIndex, UnknownSymbol

Word = Sequence[str]

# Tables at least this long are range-checked through numpy when available.
_NUMPY_VALIDATE_THRESHOLD = 1 << 16


def _as_word(symbols: Iterable[str] | str) -> tuple[str, ...]:
    """Normalize a word given as a string or iterable of symbol tokens."""
    return tuple(symbols)


def _as_delta(values) -> array:
    """Normalize a transition table to a compact int64 array without copying
    element by element when the source is already binary."""
    if isinstance(values, array) and values.typecode == "q":
        return values
    cls = type(values)
    if cls.__module__ == "numpy" and cls.__name__ == "ndarray":
        out = array("q")
        out.frombytes(values.astype("int64", copy=False).tobytes())
        return out
    return array("q", values)


def _delta_bounds(delta: array) -> tuple[int, int]:
    if len(delta) >= _NUMPY_VALIDATE_THRESHOLD:
        try:
            import numpy as np

            view = np.frombuffer(delta, dtype=np.int64)
            return int(view.min()), int(view.max())
        except ImportError:
            pass
    return min(delta), max(delta)


@dataclass(frozen=True)
class DetAutomaton:
    """Complete deterministic automaton: alphabet, states 0..n-1, initial
    state, and a total transition table.

    `delta` is stored flat in row-major order: the successor of state `s`
    under the symbol with index `x` sits at `delta[s * len(alphabet) + x]`.
    Any integer sequence may be passed in; it is normalized to a compact
    array.  Instances are immutable after construction and safe to share
    across threads.
    """

    alphabet: tuple[str, ...]
    n_states: int
    initial: int
    delta: Sequence[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", _as_delta(self.delta))
        if len(self.alphabet) < 1:
            raise ValueError("alphabet must contain at least one symbol")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet symbols must be distinct")
        for tok in self.alphabet:
            if not tok or any(c.isspace() for c in tok) or set(tok) & set("#{},:"):
                raise ValueError(f"invalid symbol token {tok!r}")
        if self.n_states < 1:
            raise ValueError("automaton needs at least one state")
        if not 0 <= self.initial < self.n_states:
            raise BadStateIndex(f"initial state {self.initial} out of range")
        if len(self.delta) != self.n_states * len(self.alphabet):
            raise ValueError(
                f"transition table has {len(self.delta)} entries, "
                f"expected {self.n_states * len(self.alphabet)}"
            )
        lo, hi = _delta_bounds(self.delta)
        if lo < 0 or hi >= self.n_states:
            raise BadStateIndex("transition target out of range")

    def __hash__(self):
        return hash((self.alphabet, self.n_states, self.initial, self.delta.tobytes()))

    @cached_property
    def symbol_index(self) -> dict[str, int]:
        return {tok: i for i, tok in enumerate(self.alphabet)}

    @property
    def states(self) -> range:
        return range(self.n_states)

    def target(self, state: int, symbol_idx: int) -> int:
        """Successor by symbol index (no token lookup)."""
        return self.delta[state * len(self.alphabet) + symbol_idx]

    def successors(self, state: int) -> tuple[int, ...]:
        r = len(self.alphabet)
        return self.delta[state * r : (state + 1) * r]

    @classmethod
    def from_table(
        cls, alphabet: Sequence[str], transitions: dict[tuple[int, str], int], initial: int = 0
    ) -> "DetAutomaton":
        """Build from a {(state, symbol): target} dict covering all pairs."""
        n = max(s for s, _ in transitions) + 1
        alphabet = tuple(alphabet)
        flat = []
        for s in range(n):
            for tok in alphabet:
                if (s, tok) not in transitions:
                    raise ValueError(f"missing transition for ({s}, {tok!r})")
                flat.append(transitions[s, tok])
        return cls(alphabet=alphabet, n_states=n, initial=initial, delta=tuple(flat))


@dataclass(frozen=True)
class MullerTable:
    """A set of state sets; a run is accepted iff its Inf set is an entry.

    Entries may include sets that no run can realize; those are semantically
    inert and are kept verbatim.
    """

    entries: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(
            self, "entries", frozenset(frozenset(e) for e in self.entries)
        )

    @classmethod
    def of(cls, *entries: Iterable[int]) -> "MullerTable":
        return cls(frozenset(frozenset(e) for e in entries))

    def validate_for(self, n_states: int) -> None:
        for entry in self.entries:
            for s in entry:
                if not 0 <= s < n_states:
                    raise BadStateIndex(f"table entry state {s} out of range")

    def __contains__(self, state_set) -> bool:
        return frozenset(state_set) in self.entries

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class BuchiSet:
    """Accepting state set; a run is accepted iff its Inf set meets it."""

    accepting: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))

    @classmethod
    def of(cls, *states: int) -> "BuchiSet":
        return cls(frozenset(states))

    def validate_for(self, n_states: int) -> None:
        for s in self.accepting:
            if not 0 <= s < n_states:
                raise BadStateIndex(f"accepting state {s} out of range")


@dataclass(frozen=True)
class LassoWord:
    """Ultimately periodic omega-word prefix * period^omega.

    The period must be nonempty; the prefix may be empty.  Either part may be
    given as a plain string when all symbols are single characters.
    """

    prefix: tuple[str, ...]
    period: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", _as_word(self.prefix))
        object.__setattr__(self, "period", _as_word(self.period))
        if not self.period:
            raise ValueError("lasso period must be nonempty")

    def symbol_at(self, position: int) -> str:
        """Symbol of the unrolled omega-word at a 0-based position."""
        if position < len(self.prefix):
            return self.prefix[position]
        return self.period[(position - len(self.prefix)) % len(self.period)]

    def head(self, length: int) -> tuple[str, ...]:
        """First `length` symbols of the unrolled word."""
        return tuple(self.symbol_at(i) for i in range(length))


def step(a: DetAutomaton, state: int, symbol: str) -> int:
    """One transition; raises on an invalid state or unknown symbol."""
    if not 0 <= state < a.n_states:
        raise BadStateIndex(f"state {state} out of range")
    try:
        x = a.symbol_index[symbol]
    except KeyError:
        raise UnknownSymbol(f"symbol {symbol!r} not in alphabet") from None
    return a.delta[state * len(a.alphabet) + x]


def run(a: DetAutomaton, state: int, word: Word | str) -> int:
    """Extended transition function: state reached from `state` on `word`."""
    delta = a.delta
    idx = a.symbol_index
    r = len(a.alphabet)
    s = state
    if not 0 <= s < a.n_states:
        raise BadStateIndex(f"state {state} out of range")
    for tok in word:
        try:
            s = delta[s * r + idx[tok]]
        except KeyError:
            raise UnknownSymbol(f"symbol {tok!r} not in alphabet") from None
    return s


def inf_from_state(a: DetAutomaton, state: int, period_indices: Sequence[int]) -> frozenset[int]:
    """Inf set of the run that starts at `state` and reads the period (given
    as symbol indices) forever.  Iterates the period map until the anchor
    state repeats (at most n_states + 1 iterations by pigeonhole); the result
    is every state visited while reading one period from each anchor on the
    repeating cycle."""
    delta = a.delta
    r = len(a.alphabet)
    seen: dict[int, int] = {}
    anchors: list[int] = []
    s = state
    while s not in seen:
        seen[s] = len(anchors)
        anchors.append(s)
        for x in period_indices:
            s = delta[s * r + x]
    cycle = anchors[seen[s] :]

    visited: set[int] = set()
    for c in cycle:
        t = c
        for x in period_indices:
            t = delta[t * r + x]
            visited.add(t)
    return frozenset(visited)


def inf_set(a: DetAutomaton, w: LassoWord) -> frozenset[int]:
    """States visited infinitely often on the run over prefix * period^omega.

    The result is always a nonempty loop of the automaton.
    """
    s = run(a, a.initial, w.prefix)
    try:
        period_idx = [a.symbol_index[tok] for tok in w.period]
    except KeyError as e:
        raise UnknownSymbol(f"symbol {e.args[0]!r} not in alphabet") from None
    return inf_from_state(a, s, period_idx)


def accepts_muller(a: DetAutomaton, t: MullerTable, w: LassoWord) -> bool:
    """Muller acceptance: the Inf set of the run is a table entry."""
    return inf_set(a, w) in t.entries


def accepts_buchi(a: DetAutomaton, b: BuchiSet, w: LassoWord) -> bool:
    """Buchi acceptance: the Inf set of the run meets the accepting set."""
    return not inf_set(a, w).isdisjoint(b.accepting)
