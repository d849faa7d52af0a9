import pytest

from omega_baire import BuchiSet, MullerTable, parse_automaton
from omega_baire.cli import run as cli_run

EX1_TEXT = """\
alphabet a b
states 2
initial 0
acc-type muller
trans 0 a 0
trans 0 b 1
trans 1 a 0
trans 1 b 1
accept {0}
"""

EX2_TEXT = """\
alphabet a b
states 3
initial 0
acc-type muller
trans 0 a 1
trans 0 b 2
trans 1 a 1
trans 1 b 1
trans 2 a 2
trans 2 b 2
accept {1}
"""

EX3_TEXT = """\
alphabet a b
states 2
initial 0
acc-type muller
trans 0 a 1
trans 0 b 0
trans 1 a 0
trans 1 b 1
accept {0,1}
"""


@pytest.fixture
def ex1_file(tmp_path):
    p = tmp_path / "ex1.aut"
    p.write_text(EX1_TEXT)
    return p


@pytest.fixture
def ex2_file(tmp_path):
    p = tmp_path / "ex2.aut"
    p.write_text(EX2_TEXT)
    return p


@pytest.fixture
def ex3_file(tmp_path):
    p = tmp_path / "ex3.aut"
    p.write_text(EX3_TEXT)
    return p


class TestAnalyze:
    def test_ex2_report(self, ex2_file, capsys):
        assert cli_run(["analyze", str(ex2_file)]) == 0
        out = capsys.readouterr().out
        assert "scc 0: {0}" in out
        assert "scc 1: {1} terminal" in out
        assert "scc 2: {2} terminal" in out
        assert "entry {1}: loop=yes scc=yes terminal=yes" in out

    def test_enumerate_loops(self, ex1_file, capsys):
        assert cli_run(["analyze", str(ex1_file), "--enumerate-loops"]) == 0
        out = capsys.readouterr().out
        assert "loops (3): {0} {1} {0,1}" in out

    def test_parse_error_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.aut"
        bad.write_text(EX1_TEXT.replace("trans 1 b 1\n", ""))
        assert cli_run(["analyze", str(bad)]) == 2
        err = capsys.readouterr().err
        assert "line" in err

    def test_missing_file_exit_2(self, tmp_path):
        assert cli_run(["analyze", str(tmp_path / "nope.aut")]) == 2

    def test_budget_exit_3(self, ex1_file):
        assert cli_run(["analyze", str(ex1_file), "--enumerate-loops", "--loop-budget", "1"]) == 3

    def test_dot_export(self, ex2_file, tmp_path, capsys):
        dot = tmp_path / "c.dot"
        assert cli_run(["analyze", str(ex2_file), "--dot", str(dot)]) == 0
        text = dot.read_text()
        assert text.startswith("digraph")
        assert "n0 -> n1" in text


class TestBaire:
    def test_writes_parseable_files(self, ex2_file, tmp_path, capsys):
        out_open = tmp_path / "open.aut"
        out_meagre = tmp_path / "meagre.aut"
        code = cli_run(
            [
                "baire",
                str(ex2_file),
                "--out-open",
                str(out_open),
                "--out-meagre-complement",
                str(out_meagre),
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "E nonempty: true" in out
        assert "complement" in out
        a1, t1 = parse_automaton(out_open.read_text())
        assert isinstance(t1, MullerTable) and len(t1.entries) == 1
        a2, t2 = parse_automaton(out_meagre.read_text())
        assert t2.entries == frozenset({frozenset({1}), frozenset({2})})

    def test_empty_open_language(self, ex1_file, tmp_path, capsys):
        code = cli_run(
            [
                "baire",
                str(ex1_file),
                "--out-open",
                str(tmp_path / "o.aut"),
                "--out-meagre-complement",
                str(tmp_path / "m.aut"),
            ]
        )
        assert code == 0
        assert "E nonempty: false" in capsys.readouterr().out

    def test_buchi_outputs(self, ex1_file, tmp_path, capsys):
        code = cli_run(
            [
                "baire",
                str(ex1_file),
                "--out-open",
                str(tmp_path / "o.aut"),
                "--out-meagre-complement",
                str(tmp_path / "m.aut"),
                "--buchi",
            ]
        )
        assert code == 0
        b1, acc1 = parse_automaton((tmp_path / "o.aut.buchi").read_text())
        assert isinstance(acc1, BuchiSet)
        assert acc1.accepting == frozenset()
        b2, acc2 = parse_automaton((tmp_path / "m.aut.buchi").read_text())
        assert isinstance(acc2, BuchiSet)

    def test_buchi_on_ex3_states(self, ex3_file, tmp_path, capsys):
        code = cli_run(
            [
                "baire",
                str(ex3_file),
                "--out-open",
                str(tmp_path / "o.aut"),
                "--out-meagre-complement",
                str(tmp_path / "m.aut"),
                "--buchi",
                "--no-prune",
            ]
        )
        assert code == 0
        assert "unpruned 6" in capsys.readouterr().out


class TestToBuchi:
    def test_ex3_no_prune_six_states(self, ex3_file, tmp_path, capsys):
        out = tmp_path / "b.aut"
        assert cli_run(["to-buchi", str(ex3_file), "--out", str(out), "--no-prune"]) == 0
        b, acc = parse_automaton(out.read_text())
        assert b.n_states == 6
        assert isinstance(acc, BuchiSet)
        assert "layered" in out.read_text()

    def test_non_maximal_exit_4(self, ex1_file, tmp_path, capsys):
        code = cli_run(["to-buchi", str(ex1_file), "--out", str(tmp_path / "b.aut")])
        assert code == 4
        assert "{0}" in capsys.readouterr().err

    def test_buchi_input_exit_4(self, tmp_path):
        src = tmp_path / "b-in.aut"
        src.write_text(
            EX1_TEXT.replace("acc-type muller", "acc-type buchi").replace(
                "accept {0}", "accept 0"
            )
        )
        assert cli_run(["to-buchi", str(src), "--out", str(tmp_path / "o.aut")]) == 4
        assert (
            cli_run(
                [
                    "baire",
                    str(src),
                    "--out-open",
                    str(tmp_path / "e.aut"),
                    "--out-meagre-complement",
                    str(tmp_path / "m.aut"),
                ]
            )
            == 4
        )

    def test_empty_table_copy(self, tmp_path, capsys):
        src = tmp_path / "e.aut"
        src.write_text(EX1_TEXT.replace("accept {0}\n", ""))
        out = tmp_path / "b.aut"
        assert cli_run(["to-buchi", str(src), "--out", str(out)]) == 0
        b, acc = parse_automaton(out.read_text())
        assert b.n_states == 2
        assert acc.accepting == frozenset()


class TestCheck:
    def test_member_true(self, ex1_file, capsys):
        assert cli_run(["check", "member", str(ex1_file), "--word", ":a"]) == 0
        assert capsys.readouterr().out.strip() == "true"

    def test_member_false(self, ex1_file, capsys):
        assert cli_run(["check", "member", str(ex1_file), "--word", "a:b"]) == 0
        assert capsys.readouterr().out.strip() == "false"

    def test_member_empty_period_exit_2(self, ex1_file):
        assert cli_run(["check", "member", str(ex1_file), "--word", "a:"]) == 2

    def test_member_unknown_symbol_exit_2(self, ex1_file):
        assert cli_run(["check", "member", str(ex1_file), "--word", ":c"]) == 2

    def test_subset_true(self, ex2_file, tmp_path, capsys):
        other = tmp_path / "b.aut"
        other.write_text(
            EX2_TEXT.replace("acc-type muller", "acc-type buchi").replace(
                "accept {1}", "accept 1"
            )
        )
        assert cli_run(["check", "subset", str(ex2_file), str(other)]) == 0
        assert capsys.readouterr().out.strip() == "true"

    def test_subset_false_with_witness(self, ex1_file, tmp_path, capsys):
        bigger = tmp_path / "big.aut"
        bigger.write_text(EX1_TEXT.replace("accept {0}", "accept {0,1}"))
        assert cli_run(["check", "subset", str(bigger), str(ex1_file)]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "false"
        assert out[1].startswith("witness ")
        assert ":" in out[1]

    def test_alphabet_mismatch_exit_5(self, ex1_file, tmp_path):
        other = tmp_path / "c.aut"
        other.write_text(
            "alphabet a c\nstates 1\ninitial 0\nacc-type muller\n"
            "trans 0 a 0\ntrans 0 c 0\naccept {0}\n"
        )
        assert cli_run(["check", "subset", str(ex1_file), str(other)]) == 5


class TestSelftest:
    def test_small_run_passes(self, capsys):
        code = cli_run(["selftest", "--states", "5", "--trials", "25", "--seed", "7"])
        assert code == 0
        out = capsys.readouterr().out
        assert "selftest trials=25 failures=0" in out

    def test_reports_byte_identical(self, capsys):
        cli_run(["selftest", "--states", "4", "--trials", "10", "--seed", "3"])
        first = capsys.readouterr().out
        cli_run(["selftest", "--states", "4", "--trials", "10", "--seed", "3"])
        second = capsys.readouterr().out
        assert first == second

    def test_timing_goes_to_stderr(self, capsys):
        cli_run(["selftest", "--states", "3", "--trials", "5", "--seed", "1"])
        captured = capsys.readouterr()
        assert "timing" in captured.err
        assert "timing" not in captured.out

    def test_large_states_completes_with_skipped_oracles(self, capsys):
        # constructions run at any size; exhaustive checks skip over budget
        code = cli_run(["selftest", "--states", "600", "--trials", "2", "--seed", "5"])
        assert code == 0
        assert "failures=0" in capsys.readouterr().out


class TestRoundTripOfWrittenFiles:
    def test_all_written_files_reparse(self, ex2_file, tmp_path):
        cli_run(
            [
                "baire",
                str(ex2_file),
                "--out-open",
                str(tmp_path / "o.aut"),
                "--out-meagre-complement",
                str(tmp_path / "m.aut"),
                "--buchi",
            ]
        )
        from omega_baire import serialize_automaton

        for name in ("o.aut", "m.aut", "o.aut.buchi", "m.aut.buchi"):
            text = (tmp_path / name).read_text()
            a, acc = parse_automaton(text)
            again = serialize_automaton(a, acc)
            b, acc2 = parse_automaton(again)
            assert (b, acc2) == (a, acc)
