"""Command-line interface.

Verdicts and reports go to standard output, diagnostics to standard error.
Exit codes are a stable contract: 0 success or verdict, 2 parse error,
3 budget exceeded, 4 precondition violated, 5 alphabet mismatch.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from pathlib import Path

from .automaton import BuchiSet, DetAutomaton, MullerTable
from .baire import build_meagre_complement, build_open_witness, build_weak_buchi_open
from .errors import (
    AlphabetMismatch,
    FormatError,
    PreconditionViolated,
    SizeGuard,
)
from .fileformat import (
    format_lasso,
    parse_automaton,
    parse_lasso_text,
    serialize_automaton,
)
from .loops import analyze, enumerate_loops, is_loop
from .oracle import (
    RandomSpec,
    accepts,
    language_subset_oracle,
    random_instance,
    verify_baire_witness,
)
from .to_buchi import check_maximal_loops, muller_to_buchi_maximal

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_PRECONDITION = 4
EXIT_ALPHABET = 5


def _load(path: str) -> tuple[DetAutomaton, MullerTable | BuchiSet]:
    return parse_automaton(Path(path).read_bytes())


def _load_muller(path: str) -> tuple[DetAutomaton, MullerTable]:
    a, acc = _load(path)
    if not isinstance(acc, MullerTable):
        raise PreconditionViolated(f"{path}: expected a Muller automaton")
    return a, acc


def _fmt_set(z) -> str:
    return "{" + ",".join(str(s) for s in sorted(z)) + "}"


def cmd_analyze(args) -> int:
    a, acc = _load(args.file)
    analysis = analyze(a)
    print(f"alphabet: {' '.join(a.alphabet)}")
    print(f"states: {a.n_states}  initial: {a.initial}")
    print(f"reachable: {len(analysis.reachable)}")
    for i, scc in enumerate(analysis.sccs):
        mark = " terminal" if i in analysis.terminal else ""
        print(f"scc {i}: {_fmt_set(scc)}{mark}")
    edges = " ".join(f"{u}->{v}" for u, v in sorted(analysis.condensation_edges))
    print(f"condensation edges: {edges if edges else '(none)'}")
    if isinstance(acc, MullerTable):
        for entry in sorted(acc.entries, key=lambda e: tuple(sorted(e))):
            loop = is_loop(a, entry, analysis)
            sid = analysis.scc_id_of_set(entry)
            terminal = sid is not None and sid in analysis.terminal
            print(
                f"entry {_fmt_set(entry)}: loop={'yes' if loop else 'no'}"
                f" scc={'yes' if sid is not None else 'no'}"
                f" terminal={'yes' if terminal else 'no'}"
            )
    else:
        print(f"buchi accepting: {_fmt_set(acc.accepting)}")
    if args.enumerate_loops:
        loops = enumerate_loops(a, budget=args.loop_budget, analysis=analysis)
        print(f"loops ({len(loops)}): {' '.join(_fmt_set(z) for z in loops)}")
    if args.dot:
        Path(args.dot).write_text(_condensation_dot(analysis), encoding="utf-8")
        print(f"wrote condensation graph to {args.dot}", file=sys.stderr)
    return EXIT_OK


def _condensation_dot(analysis) -> str:
    lines = ["digraph condensation {"]
    for i, scc in enumerate(analysis.sccs):
        shape = "doublecircle" if i in analysis.terminal else "circle"
        lines.append(f'  n{i} [label="{_fmt_set(scc)}", shape={shape}];')
    for u, v in sorted(analysis.condensation_edges):
        lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_baire(args) -> int:
    a, t = _load_muller(args.file)
    analysis = analyze(a)
    open_w = build_open_witness(a, t, analysis)
    a2, t2 = build_meagre_complement(a, analysis)

    Path(args.out_open).write_text(
        serialize_automaton(open_w.automaton, open_w.table, open_w.origin),
        encoding="utf-8",
    )
    Path(args.out_meagre_complement).write_text(
        serialize_automaton(a2, t2), encoding="utf-8"
    )

    open_reachable = _reachable_of(open_w.automaton)
    reachable_accepting = any(
        next(iter(e)) in open_reachable for e in open_w.table.entries
    )
    print(f"input: {a.n_states} states, {len(t.entries)} table entries")
    print(
        f"open witness: {open_w.automaton.n_states} states, "
        f"{len(open_w.table.entries)} table entries -> {args.out_open}"
    )
    print(
        f"meagre complement: {a2.n_states} states, "
        f"{len(t2.entries)} table entries -> {args.out_meagre_complement}"
    )
    print(f"E nonempty: {'true' if reachable_accepting else 'false'}")
    print(
        "note: the meagre set F' is the complement of the language of the"
        " meagre-complement automaton"
    )

    if args.buchi:
        weak = build_weak_buchi_open(a, t, analysis)
        translation = muller_to_buchi_maximal(
            a, t2, analysis, prune=not args.no_prune
        )
        out_b1 = args.out_buchi_open or args.out_open + ".buchi"
        out_b2 = (
            args.out_buchi_meagre_complement
            or args.out_meagre_complement + ".buchi"
        )
        Path(out_b1).write_text(
            serialize_automaton(weak.automaton, weak.accepting, weak.origin),
            encoding="utf-8",
        )
        Path(out_b2).write_text(
            serialize_automaton(
                translation.automaton, translation.accepting, translation.origin
            ),
            encoding="utf-8",
        )
        print(
            f"buchi open witness: {weak.automaton.n_states} states, "
            f"{len(weak.accepting.accepting)} accepting -> {out_b1}"
        )
        print(
            f"buchi meagre complement: {translation.automaton.n_states} states "
            f"(unpruned {translation.unpruned_state_count}) -> {out_b2}"
        )
    return EXIT_OK


def _reachable_of(a: DetAutomaton) -> frozenset[int]:
    return analyze(a).reachable


def cmd_to_buchi(args) -> int:
    a, t = _load_muller(args.file)
    report = check_maximal_loops(a, t)
    if not report.ok:
        print(report.describe(), file=sys.stderr)
        return EXIT_PRECONDITION
    if report.non_loops:
        print(report.describe(), file=sys.stderr)
    translation = muller_to_buchi_maximal(a, t, prune=not args.no_prune)
    Path(args.out).write_text(
        serialize_automaton(
            translation.automaton, translation.accepting, translation.origin
        ),
        encoding="utf-8",
    )
    print(
        f"buchi automaton: {translation.automaton.n_states} states "
        f"(unpruned {translation.unpruned_state_count}), "
        f"{len(translation.accepting.accepting)} accepting -> {args.out}"
    )
    return EXIT_OK


def cmd_check(args) -> int:
    if args.mode == "member":
        a, acc = _load(args.file)
        try:
            w = parse_lasso_text(args.word, a.alphabet)
        except ValueError as e:
            print(str(e), file=sys.stderr)
            return EXIT_PARSE
        print("true" if accepts(a, acc, w) else "false")
        return EXIT_OK

    aA, accA = _load(args.file)
    aB, accB = _load(args.other)
    verdict = language_subset_oracle(
        aA,
        accA,
        aB,
        accB,
        product_budget=args.product_budget,
        loop_budget=args.loop_budget,
    )
    print("true" if verdict.holds else "false")
    if verdict.counterexample is not None:
        print(f"witness {format_lasso(verdict.counterexample, aA.alphabet)}")
    return EXIT_OK


def cmd_selftest(args) -> int:
    failures = 0
    timings: list[float] = []
    master = random.Random(args.seed)
    for trial in range(args.trials):
        n = master.randint(2, max(2, args.states))
        entries = master.randint(0, args.entries)
        seed = master.randrange(2**32)
        spec = RandomSpec(
            n_states=n,
            alphabet_size=args.alphabet,
            table_entry_count=min(entries, 2**n if n < 16 else entries),
            seed=seed,
        )
        a, t = random_instance(spec)
        start = time.perf_counter()
        report = verify_baire_witness(
            a,
            t,
            lasso_bound=args.lasso_bound,
            loop_budget=args.loop_budget,
            product_budget=args.product_budget,
            skip_over_budget=True,
        )
        timings.append(time.perf_counter() - start)
        status = "pass" if report.ok else "fail"
        if not report.ok:
            failures += 1
        print(f"trial {trial} n={n} entries={len(t.entries)} seed={seed} {status}")
        if not report.ok:
            print(report.render())
    print(f"selftest trials={args.trials} failures={failures}")

    if timings:
        ms = sorted(x * 1000 for x in timings)
        p50 = statistics.median(ms)
        p90 = ms[min(len(ms) - 1, int(0.9 * len(ms)))]
        print(
            f"timing ms per trial: p50={p50:.2f} p90={p90:.2f} max={ms[-1]:.2f}",
            file=sys.stderr,
        )
    return EXIT_OK if failures == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omega-baire",
        description=(
            "Analyze deterministic omega-automata and construct open and"
            " meagre witnesses for their languages."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="SCC and table-entry report for a file")
    p.add_argument("file")
    p.add_argument("--enumerate-loops", action="store_true")
    p.add_argument("--loop-budget", type=int, default=1 << 20)
    p.add_argument("--dot", metavar="PATH", help="write condensation graph as DOT")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser(
        "baire", help="construct the open witness and the meagre complement"
    )
    p.add_argument("file")
    p.add_argument("--out-open", required=True)
    p.add_argument("--out-meagre-complement", required=True)
    p.add_argument("--buchi", action="store_true", help="also write Buchi forms")
    p.add_argument("--out-buchi-open")
    p.add_argument("--out-buchi-meagre-complement")
    p.add_argument("--no-prune", action="store_true")
    p.set_defaults(func=cmd_baire)

    p = sub.add_parser(
        "to-buchi", help="translate a maximal-loop Muller automaton to Buchi"
    )
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.add_argument("--no-prune", action="store_true")
    p.set_defaults(func=cmd_to_buchi)

    p = sub.add_parser("check", help="membership and language inclusion")
    mode = p.add_subparsers(dest="mode", required=True)
    member = mode.add_parser("member", help="is the lasso accepted?")
    member.add_argument("file")
    member.add_argument("--word", required=True, metavar="U:V")
    subset = mode.add_parser("subset", help="is L(first) included in L(second)?")
    subset.add_argument("file")
    subset.add_argument("other")
    subset.add_argument("--product-budget", type=int, default=4096)
    subset.add_argument("--loop-budget", type=int, default=1 << 20)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("selftest", help="verify random instances end to end")
    p.add_argument("--states", type=int, default=5)
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--entries", type=int, default=4)
    p.add_argument("--lasso-bound", type=int, default=8)
    p.add_argument("--loop-budget", type=int, default=1 << 20)
    p.add_argument("--product-budget", type=int, default=4096)
    p.set_defaults(func=cmd_selftest)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as e:
        print(str(e), file=sys.stderr)
        return EXIT_PARSE
    except SizeGuard as e:
        print(str(e), file=sys.stderr)
        return EXIT_BUDGET
    except PreconditionViolated as e:
        print(str(e), file=sys.stderr)
        return EXIT_PRECONDITION
    except AlphabetMismatch as e:
        print(str(e), file=sys.stderr)
        return EXIT_ALPHABET
    except OSError as e:
        print(str(e), file=sys.stderr)
        return EXIT_PARSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
