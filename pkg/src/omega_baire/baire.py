"""Topological witnesses for regular omega-languages.

Given a Muller automaton, this module constructs in polynomial time an open
regular set E (by merging each terminal SCC into one absorbing state) and a
regular meagre superset F' of the symmetric difference F delta E.  F' is only
ever held as the complement of the terminal-SCC Muller automaton; no
operation expands the exponential complement table.  The module also hosts
the loop-density and meagreness classifiers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .automaton import BuchiSet, DetAutomaton, MullerTable
from .errors import BadLoop, SizeGuard
from .loops import (
    DEFAULT_ENUMERATION_BUDGET,
    SccAnalysis,
    _iter_scc_loops,
    analyze,
    is_loop,
)

StateOrigin = Mapping[int, "int | frozenset[int]"]


class TriState(enum.Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "not-decided"


class LoopDensity(enum.Enum):
    DENSE = "dense"
    NOWHERE_DENSE = "nowhere-dense"


@dataclass(frozen=True)
class TopoClass:
    """Classifier verdicts; UNDECIDED means the implemented criteria do not
    settle the query."""

    open_flag: TriState = TriState.UNDECIDED
    meagre_flag: TriState = TriState.UNDECIDED
    dense_flag: TriState = TriState.UNDECIDED
    nowhere_dense_flag: TriState = TriState.UNDECIDED


@dataclass(frozen=True)
class OpenWitness:
    """Quotient automaton with terminal SCCs merged to absorbing states.

    `origin` maps every new state to the original state it copies or to the
    terminal SCC it merges.
    """

    automaton: DetAutomaton
    table: MullerTable
    origin: dict[int, int | frozenset[int]] = field(hash=False)


@dataclass(frozen=True)
class WeakBuchiWitness:
    """The open witness under Buchi acceptance; weak by construction (every
    loop is inside the accepting set or disjoint from it)."""

    automaton: DetAutomaton
    accepting: BuchiSet
    origin: dict[int, int | frozenset[int]] = field(hash=False)


def build_open_witness(
    a: DetAutomaton, t: MullerTable, analysis: SccAnalysis | None = None
) -> OpenWitness:
    """Merge each terminal SCC into one absorbing state; keep the initial
    state as a distinct copy when it lies inside a terminal SCC.

    The table of the result holds one singleton {merged state} for every
    input entry that equals (as a set) a terminal SCC.  When no entry does,
    the automaton is still produced with an empty table.
    """
    if analysis is None:
        analysis = analyze(a)
    t.validate_for(a.n_states)
    r = len(a.alphabet)
    term_ids = sorted(analysis.terminal)
    in_term = [-1] * a.n_states
    for rank, tid in enumerate(term_ids):
        for s in analysis.sccs[tid]:
            in_term[s] = rank

    new_of_old: dict[int, int] = {}
    origin: dict[int, int | frozenset[int]] = {}
    for s in range(a.n_states):
        if in_term[s] < 0:
            new_of_old[s] = len(new_of_old)
            origin[new_of_old[s]] = s
    if in_term[a.initial] >= 0:
        init_new = len(origin)
        origin[init_new] = a.initial
    else:
        init_new = new_of_old[a.initial]
    merged_of_rank = []
    for tid in term_ids:
        idx = len(origin)
        merged_of_rank.append(idx)
        origin[idx] = analysis.sccs[tid]

    def image(old_target: int) -> int:
        rank = in_term[old_target]
        return merged_of_rank[rank] if rank >= 0 else new_of_old[old_target]

    n_new = len(origin)
    flat = [0] * (n_new * r)
    for new, orig in origin.items():
        if isinstance(orig, frozenset):
            for x in range(r):
                flat[new * r + x] = new
        else:
            for x in range(r):
                flat[new * r + x] = image(a.delta[orig * r + x])

    term_set_rank = {analysis.sccs[tid]: rank for rank, tid in enumerate(term_ids)}
    new_entries = [
        frozenset({merged_of_rank[term_set_rank[entry]]})
        for entry in t.entries
        if entry in term_set_rank
    ]
    quotient = DetAutomaton(
        alphabet=a.alphabet, n_states=n_new, initial=init_new, delta=tuple(flat)
    )
    return OpenWitness(
        automaton=quotient, table=MullerTable(frozenset(new_entries)), origin=origin
    )


def build_meagre_complement(
    a: DetAutomaton, analysis: SccAnalysis | None = None
) -> tuple[DetAutomaton, MullerTable]:
    """The automaton unchanged with its terminal SCCs as the table.

    The complement of this language is the meagre superset used by the open
    witness; it is represented only through this pair and never expanded
    into an explicit complement table.
    """
    if analysis is None:
        analysis = analyze(a)
    return a, MullerTable(frozenset(analysis.terminal_sccs))


def build_weak_buchi_open(
    a: DetAutomaton, t: MullerTable, analysis: SccAnalysis | None = None
) -> WeakBuchiWitness:
    """Open witness under Buchi acceptance: same automaton, accepting set =
    the merged states of table entries that are terminal SCCs."""
    witness = build_open_witness(a, t, analysis)
    accepting = frozenset(next(iter(e)) for e in witness.table.entries)
    return WeakBuchiWitness(
        automaton=witness.automaton,
        accepting=BuchiSet(accepting),
        origin=witness.origin,
    )


@dataclass(frozen=True)
class BaireWitness:
    """The full witness bundle for one Muller automaton.

    The open language E is `open_muller` (equivalently `open_buchi`); the
    meagre superset F' of the symmetric difference is the complement of
    `meagre_complement_muller` (equivalently of `meagre_complement_buchi`)
    and is never materialized directly.
    """

    open_muller: tuple[DetAutomaton, MullerTable]
    meagre_complement_muller: tuple[DetAutomaton, MullerTable]
    open_buchi: tuple[DetAutomaton, BuchiSet]
    meagre_complement_buchi: tuple[DetAutomaton, BuchiSet]
    state_origin: Mapping[int, "int | frozenset[int]"] = field(compare=False, hash=False)
    meagre_buchi_origin: Mapping[int, tuple[int, int]] = field(compare=False, hash=False)
    meagre_buchi_unpruned: int = 0


def build_baire_witness(
    a: DetAutomaton,
    t: MullerTable,
    analysis: SccAnalysis | None = None,
    *,
    prune: bool = True,
) -> BaireWitness:
    """Assemble all four witness automata for (a, t)."""
    from .to_buchi import muller_to_buchi_maximal

    if analysis is None:
        analysis = analyze(a)
    open_w = build_open_witness(a, t, analysis)
    a2, t2 = build_meagre_complement(a, analysis)
    weak = build_weak_buchi_open(a, t, analysis)
    translation = muller_to_buchi_maximal(a2, t2, analysis, prune=prune)
    return BaireWitness(
        open_muller=(open_w.automaton, open_w.table),
        meagre_complement_muller=(a2, t2),
        open_buchi=(weak.automaton, weak.accepting),
        meagre_complement_buchi=(translation.automaton, translation.accepting),
        state_origin=open_w.origin,
        meagre_buchi_origin=translation.origin,
        meagre_buchi_unpruned=translation.unpruned_state_count,
    )


def classify_meagre(
    a: DetAutomaton, t: MullerTable, analysis: SccAnalysis | None = None
) -> TopoClass:
    """Meagre iff no table entry is a reachable terminal SCC.

    A terminal SCC entry is a loop exactly when it is reachable, so the
    entry-wise check needs no loop enumeration.
    """
    if analysis is None:
        analysis = analyze(a)
    for entry in t.entries:
        tid = analysis.scc_id_of_set(entry)
        if (
            tid is not None
            and tid in analysis.terminal
            and not entry.isdisjoint(analysis.reachable)
        ):
            return TopoClass(meagre_flag=TriState.NO)
    return TopoClass(meagre_flag=TriState.YES)


def classify_openness(
    a: DetAutomaton,
    t: MullerTable,
    analysis: SccAnalysis | None = None,
    *,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> TopoClass:
    """Open = YES when the loop entries are exactly all loops inside some set
    of terminal SCCs (the shape of languages `reach this terminal SCC`);
    otherwise UNDECIDED.  Deciding openness beyond this shape is out of
    scope."""
    if analysis is None:
        analysis = analyze(a)
    loop_entries = {e for e in t.entries if is_loop(a, e, analysis)}
    if not loop_entries:
        return TopoClass(open_flag=TriState.YES)

    required: set[int] = set()
    for entry in loop_entries:
        tid = analysis.scc_of[min(entry)]
        if not entry <= analysis.sccs[tid]:
            return TopoClass(open_flag=TriState.UNDECIDED)
        if tid not in analysis.terminal:
            return TopoClass(open_flag=TriState.UNDECIDED)
        required.add(tid)

    cost = sum(1 << len(analysis.sccs[tid]) for tid in required)
    if cost > budget:
        raise SizeGuard(
            f"openness check needs {cost} subset checks, budget is {budget}"
        )
    for tid in required:
        for z in _iter_scc_loops(a, analysis.sccs[tid], None):
            if z not in loop_entries:
                return TopoClass(open_flag=TriState.UNDECIDED)
    return TopoClass(open_flag=TriState.YES)


def classify_loop_density(
    a: DetAutomaton, s: int, z, analysis: SccAnalysis | None = None
) -> LoopDensity:
    """Density dichotomy for the omega-language of repeated loop sweeps from
    `s`: dense in the whole space iff the loop is a terminal SCC, nowhere
    dense otherwise."""
    if analysis is None:
        analysis = analyze(a)
    zs = frozenset(z)
    if s not in zs or not is_loop(a, zs, analysis):
        raise BadLoop(f"state {s} and set {sorted(zs)} do not form a loop")
    if analysis.is_terminal_set(zs):
        return LoopDensity.DENSE
    return LoopDensity.NOWHERE_DENSE
