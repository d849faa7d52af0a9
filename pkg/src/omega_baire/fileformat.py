"""Line-oriented text format for automata.

Grammar (UTF-8, `#` starts a comment that runs to end of line, tokens are
whitespace-separated)::

    alphabet a b          # one or more distinct symbol tokens
    states 2              # number of states, indices 0..n-1
    initial 0
    acc-type muller       # or: buchi
    trans 0 a 0           # exactly one line per (state, symbol) pair
    trans 0 b 1
    trans 1 a 0
    trans 1 b 1
    accept {0}            # muller: one {i,j,...} group per table entry
                          # buchi: bare state list on a single accept line

Serialization is canonical: header lines in the order above, transitions
sorted by (state, symbol index), Muller entries one per `accept` line sorted
lexicographically by their sorted member list, and a single `accept` line for
Buchi sets.  Optional state-origin annotations are emitted as trailing
comment lines and are ignored when parsing.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .automaton import BuchiSet, DetAutomaton, LassoWord, MullerTable
from .errors import (
    BadHeader,
    BadStateIndex,
    DuplicateTransition,
    MissingTransition,
    UnknownSymbol,
)

_HEADER_KEYS = ("alphabet", "states", "initial", "acc-type")


def _parse_int(token: str, what: str, line: int, exc=BadHeader) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise exc(f"{what} must be an integer, got {token!r}", line) from None


def _parse_groups(payload: str, line: int) -> list[frozenset[int]]:
    """Parse `{i,j,...}` groups from a Muller accept-line payload."""
    groups: list[frozenset[int]] = []
    pos = 0
    text = payload
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "{":
            raise BadHeader(f"expected '{{' in accept group, got {text[pos]!r}", line)
        end = text.find("}", pos)
        if end < 0:
            raise BadHeader("unterminated accept group", line)
        body = text[pos + 1 : end].strip()
        members: set[int] = set()
        if body:
            for piece in body.split(","):
                piece = piece.strip()
                if not piece:
                    raise BadHeader("empty member in accept group", line)
                members.add(_parse_int(piece, "accept group member", line, BadStateIndex))
        groups.append(frozenset(members))
        pos = end + 1
    return groups


def parse_automaton(text: str | bytes) -> tuple[DetAutomaton, MullerTable | BuchiSet]:
    """Parse an automaton file into its transition structure and acceptance.

    Every error names the offending line; completeness of the transition
    table is enforced (no implicit sink completion).
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    alphabet: tuple[str, ...] | None = None
    n_states: int | None = None
    initial: int | None = None
    acc_type: str | None = None
    trans: dict[tuple[int, int], int] = {}
    muller_entries: list[frozenset[int]] = []
    buchi_states: set[int] = set()
    header_lines: dict[str, int] = {}
    symbol_index: dict[str, int] = {}

    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        key = tokens[0]

        if key in _HEADER_KEYS:
            if key in header_lines:
                raise BadHeader(f"duplicate {key} line (first on line {header_lines[key]})", lineno)
            header_lines[key] = lineno
            if key == "alphabet":
                if len(tokens) < 2:
                    raise BadHeader("alphabet needs at least one symbol", lineno)
                if len(set(tokens[1:])) != len(tokens) - 1:
                    raise BadHeader("alphabet symbols must be distinct", lineno)
                alphabet = tuple(tokens[1:])
                symbol_index = {tok: i for i, tok in enumerate(alphabet)}
            elif key == "states":
                if len(tokens) != 2:
                    raise BadHeader("states line takes exactly one count", lineno)
                n_states = _parse_int(tokens[1], "state count", lineno)
                if n_states < 1:
                    raise BadHeader("state count must be at least 1", lineno)
            elif key == "initial":
                if len(tokens) != 2:
                    raise BadHeader("initial line takes exactly one state", lineno)
                initial = _parse_int(tokens[1], "initial state", lineno, BadStateIndex)
            else:
                if len(tokens) != 2 or tokens[1] not in ("muller", "buchi"):
                    raise BadHeader("acc-type must be 'muller' or 'buchi'", lineno)
                acc_type = tokens[1]
            continue

        if key == "trans":
            missing = [k for k in _HEADER_KEYS if k not in header_lines]
            if missing:
                raise BadHeader(f"trans before header line(s): {', '.join(missing)}", lineno)
            assert alphabet is not None and n_states is not None
            if len(tokens) != 4:
                raise BadHeader("trans line needs: trans <src> <symbol> <dst>", lineno)
            src = _parse_int(tokens[1], "source state", lineno, BadStateIndex)
            dst = _parse_int(tokens[3], "target state", lineno, BadStateIndex)
            if not 0 <= src < n_states:
                raise BadStateIndex(f"source state {src} out of range", lineno)
            if not 0 <= dst < n_states:
                raise BadStateIndex(f"target state {dst} out of range", lineno)
            if tokens[2] not in symbol_index:
                raise UnknownSymbol(f"symbol {tokens[2]!r} not in alphabet", lineno)
            pair = (src, symbol_index[tokens[2]])
            if pair in trans:
                raise DuplicateTransition(
                    f"transition for state {src} on {tokens[2]!r} already defined", lineno
                )
            trans[pair] = dst
            continue

        if key == "accept":
            missing = [k for k in _HEADER_KEYS if k not in header_lines]
            if missing:
                raise BadHeader(f"accept before header line(s): {', '.join(missing)}", lineno)
            assert n_states is not None and acc_type is not None
            if acc_type == "muller":
                payload = line.split(None, 1)[1] if len(tokens) > 1 else ""
                for group in _parse_groups(payload, lineno):
                    for s in group:
                        if not 0 <= s < n_states:
                            raise BadStateIndex(f"accept state {s} out of range", lineno)
                    muller_entries.append(group)
            else:
                for tok in tokens[1:]:
                    s = _parse_int(tok, "accept state", lineno, BadStateIndex)
                    if not 0 <= s < n_states:
                        raise BadStateIndex(f"accept state {s} out of range", lineno)
                    buchi_states.add(s)
            continue

        raise BadHeader(f"unknown keyword {key!r}", lineno)

    eof = lineno + 1
    missing_headers = [k for k in _HEADER_KEYS if k not in header_lines]
    if missing_headers:
        raise BadHeader(f"missing header line(s): {', '.join(missing_headers)}", eof)
    assert alphabet is not None and n_states is not None and initial is not None

    if not 0 <= initial < n_states:
        raise BadStateIndex(
            f"initial state {initial} out of range", header_lines["initial"]
        )
    for s in range(n_states):
        for x, tok in enumerate(alphabet):
            if (s, x) not in trans:
                raise MissingTransition(
                    f"no transition for state {s} on symbol {tok!r}", eof
                )

    flat = tuple(trans[s, x] for s in range(n_states) for x in range(len(alphabet)))
    automaton = DetAutomaton(
        alphabet=alphabet, n_states=n_states, initial=initial, delta=flat
    )
    if acc_type == "muller":
        return automaton, MullerTable(frozenset(muller_entries))
    return automaton, BuchiSet(frozenset(buchi_states))


def _render_origin(value) -> str:
    if isinstance(value, frozenset | set):
        return f"merged scc {min(value)}" if value else "merged scc {}"
    if isinstance(value, tuple):
        base, layer = value
        return f"layered ({base}, {layer})"
    return f"from state {value}"


def serialize_automaton(
    a: DetAutomaton,
    acc: MullerTable | BuchiSet,
    origins: Mapping[int, object] | None = None,
) -> str:
    """Render in canonical form; `origins` become trailing comment lines."""
    acc.validate_for(a.n_states)
    lines = [
        f"alphabet {' '.join(a.alphabet)}",
        f"states {a.n_states}",
        f"initial {a.initial}",
        f"acc-type {'muller' if isinstance(acc, MullerTable) else 'buchi'}",
    ]
    r = len(a.alphabet)
    for s in range(a.n_states):
        row = a.delta[s * r : (s + 1) * r]
        for x, tok in enumerate(a.alphabet):
            lines.append(f"trans {s} {tok} {row[x]}")
    if isinstance(acc, MullerTable):
        for entry in sorted(acc.entries, key=lambda e: tuple(sorted(e))):
            lines.append("accept {" + ",".join(str(s) for s in sorted(entry)) + "}")
    else:
        lines.append(("accept " + " ".join(str(s) for s in sorted(acc.accepting))).rstrip())
    if origins:
        for idx in sorted(origins):
            lines.append(f"# state {idx}: {_render_origin(origins[idx])}")
    return "\n".join(lines) + "\n"


def format_word(word: Sequence[str], alphabet: Sequence[str]) -> str:
    """Render a word: symbols concatenated when every alphabet token is a
    single character, comma-separated otherwise."""
    if all(len(tok) == 1 for tok in alphabet):
        return "".join(word)
    return ",".join(word)


def format_lasso(w: LassoWord, alphabet: Sequence[str]) -> str:
    """Render a lasso as `prefix:period`."""
    return f"{format_word(w.prefix, alphabet)}:{format_word(w.period, alphabet)}"


def parse_lasso_text(text: str, alphabet: Sequence[str]) -> LassoWord:
    """Parse `prefix:period`; single-character symbols may be concatenated,
    multi-character symbols are comma-separated.  The period must be
    nonempty and every symbol must be in the alphabet."""
    if text.count(":") != 1:
        raise ValueError(f"lasso must be written prefix:period, got {text!r}")
    raw_u, raw_v = text.split(":")
    single = all(len(tok) == 1 for tok in alphabet)

    def side(raw: str) -> tuple[str, ...]:
        if not raw:
            return ()
        if "," in raw:
            tokens = tuple(raw.split(","))
        elif single:
            tokens = tuple(raw)
        else:
            tokens = (raw,)
        for tok in tokens:
            if tok not in alphabet:
                raise ValueError(f"symbol {tok!r} not in alphabet")
        return tokens

    prefix, period = side(raw_u), side(raw_v)
    if not period:
        raise ValueError("lasso period must be nonempty")
    return LassoWord(prefix, period)
