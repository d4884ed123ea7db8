from __future__ import annotations

import json

from tightbounds.cli import main
from tightbounds.conjectures import conjecture_from_dict, write_on_the_wall
from tightbounds.table import load_table

from test_conjectures import EXPECTED_DALMATIAN_2, EXPECTED_RUN_21
from test_table import TABLE1_CSV_HEADER


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConjectureCommand:
    def test_figure1_reproduces_the_published_21_lines(self, capsys):
        code, out, _ = run_cli(
            capsys, "conjecture", "--dataset", "figure1",
            "--targets", "independence_number,matching_number",
        )
        assert code == 0
        assert out.splitlines() == EXPECTED_RUN_21

    def test_output_is_stable_across_runs(self, capsys):
        args = (
            "conjecture", "--dataset", "figure1",
            "--targets", "independence_number,matching_number",
        )
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_upper_only_without_dalmatian_is_the_18_set(self, capsys):
        code, out, _ = run_cli(
            capsys, "conjecture", "--dataset", "figure1",
            "--targets", "independence_number",
            "--direction", "upper", "--no-dalmatian",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 18
        bodies = {line.split(". ", 1)[1] for line in lines}
        expected_bodies = {line.split(". ", 1)[1] for line in EXPECTED_DALMATIAN_2}
        assert expected_bodies <= bodies

    def test_unknown_dataset_exits_2(self, capsys):
        code, _, err = run_cli(
            capsys, "conjecture", "--dataset", "nonsense", "--targets", "n"
        )
        assert code == 2
        assert "dataset not found" in err

    def test_unknown_target_exits_2(self, capsys):
        code, _, err = run_cli(
            capsys, "conjecture", "--dataset", "figure1", "--targets", "girth"
        )
        assert code == 2
        assert "unknown invariant" in err

    def test_json_round_trips(self, capsys, fig1_table):
        code, out, _ = run_cli(
            capsys, "conjecture", "--dataset", "figure1",
            "--targets", "independence_number,matching_number", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        parsed = [conjecture_from_dict(d) for d in payload["conjectures"]]
        run = write_on_the_wall(fig1_table, ["independence_number", "matching_number"])
        assert [c.signature() for c in parsed] == [c.signature() for c in run.conjectures]
        assert [c.sharp_set for c in parsed] == [c.sharp_set for c in run.conjectures]

    def test_custom_hypotheses_and_limit(self, capsys):
        code, out, _ = run_cli(
            capsys, "conjecture", "--dataset", "figure1",
            "--targets", "independence_number",
            "--hypotheses", "connected;connected,bipartite", "--limit", "3",
        )
        assert code == 0
        assert len(out.strip().splitlines()) == 3

    def test_equalities_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "conjecture", "--dataset", "figure1",
            "--targets", "independence_number,matching_number", "--equalities",
        )
        assert code == 0
        assert (
            "If G is connected and bipartite, then independence_number(G) = "
            "n_minus_matching_number(G)." in out
        )


class TestTableCommand:
    def test_figure1_table_is_the_golden_csv(self, capsys, fig1_table):
        from tightbounds.table import table_to_csv

        code, out, _ = run_cli(capsys, "table", "--dataset", "figure1")
        assert code == 0
        assert out == table_to_csv(fig1_table)
        assert out.splitlines()[0] == TABLE1_CSV_HEADER
        assert len(out.strip().splitlines()) == 10

    def test_integer_range_table(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--dataset", "integers:1..3")
        assert code == 0
        assert len(out.strip().splitlines()) == 4

    def test_bad_range_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "table", "--dataset", "integers:9..2")
        assert code == 2
        assert "empty range" in err


class TestRefuteCommand:
    def test_bipartite_scenario(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("TIGHTBOUNDS_DATA_DIR", str(tmp_path))
        code, out, _ = run_cli(
            capsys, "refute", "--dataset", "figure1-bipartite",
            "--form",
            "If G is connected, then independence_number(G) >= n_minus_matching_number(G)",
            "--max-n", "6",
        )
        assert code == 0
        assert "counterexample: ce-1 on 3 vertices" in out
        saved = next(tmp_path.glob("*.csv"))
        table = load_table(saved)
        assert table.row_count == 6
        assert "ce-1" in table.ids

    def test_no_counterexample_reports_none(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("TIGHTBOUNDS_DATA_DIR", str(tmp_path))
        code, out, _ = run_cli(
            capsys, "refute", "--dataset", "figure1",
            "--form",
            "If G is connected, then independence_number(G) <= n_minus_minimum_degree(G)",
            "--max-n", "5",
        )
        assert code == 0
        assert "none found up to n=5" in out

    def test_malformed_form_exits_2(self, capsys):
        code, _, err = run_cli(
            capsys, "refute", "--dataset", "figure1", "--form", "garbage",
        )
        assert code == 2
        assert "grammar" in err


class TestUsage:
    def test_missing_subcommand_exits_2(self, capsys):
        assert main([]) == 2

    def test_missing_required_flag_exits_2(self, capsys):
        assert main(["conjecture", "--targets", "n"]) == 2
