import itertools
import random

import pytest

from omega_baire import (
    BadLoop,
    DetAutomaton,
    LassoWord,
    MullerTable,
    SizeGuard,
    accepts_muller,
    analyze,
    decompose_lasso,
    enumerate_loops,
    inf_set,
    is_loop,
    loop_completing_words,
    run,
    words_to_state,
)
from omega_baire.loops import lassos_cover_loops
from conftest import (
    brute_is_loop,
    brute_loop_completing,
    random_automaton,
    random_lasso,
    random_table,
)


def single_state_automaton() -> DetAutomaton:
    return DetAutomaton(alphabet=("a", "b"), n_states=1, initial=0, delta=(0, 0))


class TestAnalyze:
    def test_ex1(self, ex1):
        an = analyze(ex1)
        assert [set(s) for s in an.sccs] == [{0, 1}]
        assert an.terminal == {0}
        assert an.condensation_edges == frozenset()
        assert an.reachable == {0, 1}

    def test_ex2(self, ex2):
        an = analyze(ex2)
        assert [set(s) for s in an.sccs] == [{0}, {1}, {2}]
        assert an.terminal == {1, 2}
        assert an.condensation_edges == {(0, 1), (0, 2)}

    def test_single_state(self):
        an = analyze(single_state_automaton())
        assert [set(s) for s in an.sccs] == [{0}]
        assert an.terminal == {0}

    def test_ids_ordered_by_smallest_member(self):
        rng = random.Random(17)
        for _ in range(50):
            a = random_automaton(rng, rng.randint(2, 9))
            an = analyze(a)
            assert [min(s) for s in an.sccs] == sorted(min(s) for s in an.sccs)

    def test_invariants_random(self):
        rng = random.Random(23)
        for _ in range(150):
            a = random_automaton(rng, rng.randint(1, 9), rng.randint(1, 3))
            an = analyze(a)
            # partition
            assert sorted(s for scc in an.sccs for s in scc) == list(range(a.n_states))
            assert all(an.sccs[an.scc_of[s]] >= {s} for s in range(a.n_states))
            # irreflexive, acyclic via topological reasoning: ids follow min
            assert all(u != v for u, v in an.condensation_edges)
            # terminal iff no outgoing edge
            outgoing = {u for u, _ in an.condensation_edges}
            for i in range(len(an.sccs)):
                assert (i in an.terminal) == (i not in outgoing)
            # Property 1.2: terminal SCCs absorb every symbol
            r = len(a.alphabet)
            for i in an.terminal:
                for z in an.sccs[i]:
                    for x in range(r):
                        assert a.delta[z * r + x] in an.sccs[i]

    def test_condensation_acyclic(self):
        rng = random.Random(29)
        for _ in range(60):
            a = random_automaton(rng, rng.randint(1, 8))
            an = analyze(a)
            edges = an.condensation_edges
            # Kahn peel: acyclic iff everything peels
            ids = set(range(len(an.sccs)))
            while ids:
                sinks = {i for i in ids if not any(u == i and v in ids for u, v in edges)}
                assert sinks, "cycle in condensation graph"
                ids -= sinks

    def test_property_1_1_intermediate_states_stay(self):
        # Walks that start and end inside an SCC never leave it.
        rng = random.Random(31)
        for _ in range(25):
            a = random_automaton(rng, rng.randint(1, 6))
            an = analyze(a)
            words = [
                w
                for length in range(1, 7)
                for w in itertools.product(a.alphabet, repeat=length)
            ]
            for scc in an.sccs:
                for z in scc:
                    for w in words:
                        if run(a, z, w) in scc:
                            cur = z
                            for tok in w:
                                cur = run(a, cur, (tok,))
                                assert cur in scc


class TestIsLoop:
    def test_examples(self, ex1, ex2):
        assert is_loop(ex1, {0})
        assert not is_loop(ex2, {0})
        assert not is_loop(ex1, set())

    def test_unreachable_set_is_not_a_loop(self):
        # State 1 loops on itself but nothing reaches it.
        a = DetAutomaton(alphabet=("a",), n_states=2, initial=0, delta=(0, 1))
        assert not is_loop(a, {1})

    def test_out_of_range_raises(self, ex1):
        from omega_baire import BadStateIndex

        with pytest.raises(BadStateIndex):
            is_loop(ex1, {5})

    def test_matches_literal_definition(self):
        rng = random.Random(37)
        for _ in range(40):
            n = rng.randint(1, 6)
            a = random_automaton(rng, n, rng.randint(1, 2))
            for mask in range(1 << n):
                z = frozenset(s for s in range(n) if mask >> s & 1)
                assert is_loop(a, z) == brute_is_loop(a, z), (a, sorted(z))


class TestEnumerateLoops:
    def test_examples(self, ex1, ex2):
        assert enumerate_loops(ex1) == [{0}, {1}, {0, 1}]
        assert enumerate_loops(ex2) == [{1}, {2}]
        assert enumerate_loops(single_state_automaton()) == [{0}]

    def test_max_size(self, ex1):
        assert enumerate_loops(ex1, max_size=1) == [{0}, {1}]

    def test_size_guard(self, ex1):
        with pytest.raises(SizeGuard):
            enumerate_loops(ex1, budget=2)

    def test_matches_brute_force(self):
        rng = random.Random(41)
        for _ in range(30):
            n = rng.randint(1, 8)
            a = random_automaton(rng, n)
            expected = [
                frozenset(s for s in range(n) if mask >> s & 1)
                for mask in range(1, 1 << n)
                if brute_is_loop(a, frozenset(s for s in range(n) if mask >> s & 1))
            ]
            assert set(enumerate_loops(a)) == set(expected)

    def test_every_loop_inside_exactly_one_scc(self):
        rng = random.Random(43)
        for _ in range(30):
            a = random_automaton(rng, rng.randint(1, 10))
            an = analyze(a)
            for z in enumerate_loops(a):
                containers = [scc for scc in an.sccs if z <= scc]
                assert len(containers) == 1

    def test_equals_inf_image_over_bounded_lassos(self):
        # The loops are exactly the Inf sets of lassos with both parts
        # bounded by twice the state count.
        rng = random.Random(47)
        for _ in range(12):
            n = rng.randint(1, 5)
            a = random_automaton(rng, n)
            assert set(enumerate_loops(a)) == lassos_cover_loops(a, 2 * n)

    def test_inf_image_matches_direct_enumeration_tiny(self):
        # Validate the prefix-collapsing shortcut against literal lassos.
        rng = random.Random(53)
        for _ in range(6):
            n = rng.randint(1, 3)
            a = random_automaton(rng, n)
            bound = 2 * n
            words = [
                w
                for length in range(bound + 1)
                for w in itertools.product(a.alphabet, repeat=length)
            ]
            direct = {
                inf_set(a, LassoWord(u, v)) for u in words for v in words if v
            }
            assert lassos_cover_loops(a, bound) == direct


class TestLoopCompletingWords:
    def test_examples(self, ex1):
        assert loop_completing_words(ex1, 0, {0}, 1) == [("a",)]
        assert loop_completing_words(ex1, 0, {0, 1}, 2) == [("b", "a")]
        assert loop_completing_words(ex1, 0, {0}, 3) == [("a",)]

    def test_bad_loop(self, ex2):
        with pytest.raises(BadLoop):
            loop_completing_words(ex2, 0, {0}, 2)
        with pytest.raises(BadLoop):
            loop_completing_words(ex2, 2, {1}, 2)

    def test_prefix_free(self):
        rng = random.Random(59)
        for _ in range(40):
            a = random_automaton(rng, rng.randint(1, 5))
            for z in enumerate_loops(a):
                s = min(z)
                words = loop_completing_words(a, s, z, 6)
                for w1 in words:
                    for w2 in words:
                        if w1 != w2:
                            assert w2[: len(w1)] != w1

    def test_matches_literal_filter(self):
        rng = random.Random(61)
        for _ in range(25):
            a = random_automaton(rng, rng.randint(1, 5))
            for z in enumerate_loops(a):
                for s in sorted(z):
                    got = sorted(loop_completing_words(a, s, z, 5))
                    expected = sorted(brute_loop_completing(a, s, z, 5))
                    assert got == expected

    def test_prefix_law(self):
        # Prefixes of infinite concatenations are exactly the words whose
        # every prefix keeps the run inside the loop.
        rng = random.Random(67)
        bound = 5
        for _ in range(20):
            a = random_automaton(rng, rng.randint(1, 4))
            for z in enumerate_loops(a):
                for s in sorted(z):
                    stays = set()
                    frontier = {(): s}
                    for _ in range(bound):
                        nxt = {}
                        for w, cur in frontier.items():
                            for x, tok in enumerate(a.alphabet):
                                t = a.delta[cur * len(a.alphabet) + x]
                                if t in z:
                                    nxt[w + (tok,)] = t
                                    stays.add(w + (tok,))
                        frontier = nxt
                    # every concatenation prefix stays inside the loop
                    vs = loop_completing_words(a, s, z, bound)
                    for v1 in vs:
                        for v2 in vs:
                            cat = (v1 + v2)[:bound]
                            for cut in range(1, len(cat) + 1):
                                assert cat[:cut] in stays
                    # every staying word extends to a full sweep back to s
                    for w in stays:
                        end = run(a, s, w)
                        seen = {s}
                        cur = s
                        for tok in w:
                            cur = run(a, cur, (tok,))
                            seen.add(cur)
                        # a covering closed walk exists within the loop
                        assert brute_is_loop(a, z)
                        assert end in z and seen <= z


class TestWordsToState:
    def test_examples(self, ex1, ex2):
        assert words_to_state(ex1, 0, 1) == [(), ("a",)]
        assert words_to_state(ex2, 1, 1) == [("a",)]
        assert words_to_state(ex2, 0, 2) == [()]

    def test_shortlex_sorted(self, ex1):
        words = words_to_state(ex1, 1, 3)
        keys = [(len(w), w) for w in words]
        assert keys == sorted(keys)

    def test_all_words_reach_state(self):
        rng = random.Random(71)
        for _ in range(30):
            a = random_automaton(rng, rng.randint(1, 5))
            s = rng.randrange(a.n_states)
            for w in words_to_state(a, s, 4):
                assert run(a, a.initial, w) == s


class TestDecomposeLasso:
    def test_examples(self, ex1, ex2):
        d = decompose_lasso(ex1, MullerTable.of({0}), LassoWord("ba", "a"))
        assert (d.state, d.loop, d.prefix_len) == (0, {0}, 2)
        assert decompose_lasso(ex1, MullerTable.of({0}), LassoWord("", "b")) is None
        d = decompose_lasso(ex2, MullerTable.of({1}), LassoWord("a", "a"))
        assert (d.state, d.loop, d.prefix_len) == (1, {1}, 1)

    def test_equivalence_with_acceptance(self):
        # Ten thousand random lassos: witness exists iff accepted.
        rng = random.Random(73)
        checked = 0
        for _ in range(120):
            a = random_automaton(rng, rng.randint(1, 6))
            t = random_table(rng, a.n_states)
            for _ in range(90):
                w = random_lasso(rng, a.alphabet, 4, 4)
                d = decompose_lasso(a, t, w)
                accepted = accepts_muller(a, t, w)
                assert (d is not None) == accepted
                checked += 1
                if d is not None:
                    # the split position certifies membership
                    assert d.loop == inf_set(a, w)
                    assert d.loop in t.entries
                    assert run(a, a.initial, w.head(d.prefix_len)) == d.state
                    assert d.state in d.loop
                    horizon = d.prefix_len + (a.n_states + 2) * len(w.period)
                    cur = d.state
                    for i in range(d.prefix_len, horizon):
                        cur = run(a, cur, (w.symbol_at(i),))
                        assert cur in d.loop
                    # minimality: position before the split leaves the loop
                    if d.prefix_len > 0:
                        prev = run(a, a.initial, w.head(d.prefix_len - 1))
                        assert prev not in d.loop
        assert checked >= 10_000
