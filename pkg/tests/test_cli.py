import json

import click
import pytest
from click.testing import CliRunner

from conftest import BUILTINS
from main import EXIT_ERROR, EXIT_FALSE, EXIT_OK, cli

SIDE = "sqrt(6/5*(1+(1+sqrt(5))/2))"


@pytest.fixture
def runner():
    return CliRunner()


def commands(group: click.Group, prefix=()):
    for name, command in group.commands.items():
        path = prefix + (name,)
        yield path, command
        if isinstance(command, click.Group):
            yield from commands(command, path)


class TestVerify:
    def test_six_step_square(self, runner):
        result = runner.invoke(cli, ["verify", "builtin:chu-phi", "--endpoints", "M", "H",
                                     "--target", SIDE])
        assert result.exit_code == EXIT_OK
        assert "verified: true" in result.output

    def test_false(self, runner):
        result = runner.invoke(cli, ["verify", "builtin:dixon-phi", "--endpoints", "F", "K",
                                     "--target", f"{SIDE}+1"])
        assert result.exit_code == EXIT_FALSE
        assert "verified: false" in result.output

    def test_checks(self, runner):
        result = runner.invoke(cli, ["verify", "builtin:chu9-right", "--checks"])
        assert result.exit_code == EXIT_OK
        assert "PU: true" in result.output

    def test_unknown_endpoint(self, runner):
        result = runner.invoke(cli, ["verify", "builtin:chu-phi", "--endpoints", "M", "Zed",
                                     "--target", "1"])
        assert result.exit_code == EXIT_ERROR
        assert "error: execution:" in result.output

    def test_missing_target(self, runner):
        result = runner.invoke(cli, ["verify", "builtin:chu-phi", "--endpoints", "M", "H"])
        assert result.exit_code == EXIT_ERROR
        assert result.output.startswith("error: usage: --endpoints and --target are required")
        assert "Usage:" not in result.output


class TestApprox:
    def test_nine_place_value(self, runner):
        result = runner.invoke(cli, ["approx", "chu9-value", "--digits", "10"])
        assert result.exit_code == EXIT_OK
        assert result.output == "3.1415926538\n"

    def test_pi_truncated(self, runner):
        result = runner.invoke(cli, ["approx", "pi", "--digits", "10", "--truncate"])
        assert result.output == "3.1415926535\n"

    def test_unknown(self, runner):
        result = runner.invoke(cli, ["approx", "tau"])
        assert result.exit_code == EXIT_ERROR
        assert "error: catalog: unknown approximant `tau`" in result.output


class TestError:
    def test_dixon(self, runner):
        result = runner.invoke(cli, ["error", "dixon-phi-value", "--ratio-digits", "6",
                                     "--parts-per", "6"])
        assert result.exit_code == EXIT_OK
        assert "ratio_to_pi: 1.000015" in result.output
        assert "places_correct: 3" in result.output
        assert "parts_off: 15 per 10^6" in result.output

    def test_nine_place_ratio(self, runner):
        result = runner.invoke(cli, ["error", "chu9-value"])
        assert "ratio_to_pi: 1.000000000068" in result.output
        assert "places_correct: 9" in result.output

    def test_nine_place_ratio_rounded(self, runner):
        result = runner.invoke(cli, ["error", "chu9-value", "--round"])
        assert "ratio_to_pi: 1.000000000069" in result.output
        assert "truncated: false" in result.output

    def test_target_json(self, runner):
        result = runner.invoke(cli, ["error", "--target", "355/113", "--ratio-digits", "6", "--json"])
        assert result.exit_code == EXIT_OK
        assert json.loads(result.output)["places_correct"] == 6

    def test_needs_one_source(self, runner):
        result = runner.invoke(cli, ["error"])
        assert result.exit_code == EXIT_ERROR
        assert "error: usage: give exactly one of NAME or --target" in result.output

    def test_nonpositive_target(self, runner):
        result = runner.invoke(cli, ["error", "--target", "1-1"])
        assert result.exit_code == EXIT_ERROR
        assert "error: analysis:" in result.output


class TestRun:
    def test_builtin(self, runner):
        result = runner.invoke(cli, ["run", "builtin:chu-phi", "--digits", "4"])
        assert result.exit_code == EXIT_OK
        assert "point D = (-2.2361, 0.0000)" in result.output

    def test_unknown_point(self, runner, tmp_path):
        path = tmp_path / "bad.construct"
        path.write_text("point A = (0, 0)\nline l = through A B\n", encoding="utf-8")
        result = runner.invoke(cli, ["run", str(path)])
        assert result.exit_code == EXIT_ERROR
        assert "error: parse: line 2, column 20: unknown name `B`" in result.output

    def test_execution_error(self, runner, tmp_path):
        path = tmp_path / "tie.construct"
        path.write_text("point O = (0, 0)\npoint B = (1, 0)\nline x = through O B\n"
                        "circle c = center O through B\npoint P = intersect x c near O\n",
                        encoding="utf-8")
        result = runner.invoke(cli, ["run", str(path)])
        assert result.exit_code == EXIT_ERROR
        assert "error: execution: step P:" in result.output

    def test_trace_reparses(self, runner):
        result = runner.invoke(cli, ["run", "builtin:dixon-phi", "--elaborate", "--trace"])
        assert result.exit_code == EXIT_OK
        assert result.output.startswith("# dixon-phi-trace")
        assert "__aux0" in result.output

    @pytest.mark.parametrize("text", ["point A = (², 0)\n", "point A = (0, 0)\nlen a = ³\n"])
    def test_non_ascii_digit(self, runner, tmp_path, text):
        path = tmp_path / "digits.construct"
        path.write_text(text, encoding="utf-8")
        for command in (["run", str(path)],
                        ["verify", str(path), "--endpoints", "A", "A", "--target", "0"]):
            result = runner.invoke(cli, command)
            assert result.exit_code == EXIT_ERROR
            assert "error: parse: line " in result.output
            assert "unexpected character" in result.output

    @pytest.mark.parametrize("name", BUILTINS)
    def test_deterministic(self, runner, name):
        first = runner.invoke(cli, ["run", f"builtin:{name}"])
        second = runner.invoke(cli, ["run", f"builtin:{name}"])
        assert first.exit_code == EXIT_OK
        assert first.output == second.output

    def test_unknown_option(self, runner):
        result = runner.invoke(cli, ["run", "builtin:chu-phi", "--bogus"])
        assert result.exit_code == EXIT_ERROR
        assert result.output.startswith("error: usage: ")
        assert "--bogus" in result.output


class TestMetrics:
    def test_json(self, runner):
        result = runner.invoke(cli, ["metrics", "builtin:chu-phi", "--json"])
        assert result.exit_code == EXIT_OK
        report = json.loads(result.output)
        assert report["type"] == "metrics"
        assert report["macro_steps"] > 0

    def test_warn_above(self, runner):
        result = runner.invoke(cli, ["metrics", "builtin:chu-phi", "--warn-above", "1/2"])
        assert "warnings: max_length" in result.output

    def test_bad_rational(self, runner):
        result = runner.invoke(cli, ["metrics", "builtin:chu-phi", "--warn-above", "abc"])
        assert result.exit_code == EXIT_ERROR
        assert result.output.startswith("error: usage: ")
        assert "not a rational number" in result.output


class TestReplay:
    def test_text(self, runner):
        result = runner.invoke(cli, ["replay", "builtin:chu-phi", "--surface"])
        assert result.exit_code == EXIT_OK
        assert "within_tolerance: true" in result.output


class TestRender:
    def test_out_file(self, runner, tmp_path):
        out = tmp_path / "square.svg"
        result = runner.invoke(cli, ["render", "builtin:chu-phi", "--out", str(out)])
        assert result.exit_code == EXIT_OK
        assert "<svg" in out.read_text(encoding="utf-8")

    def test_stdout_matches_file(self, runner, tmp_path):
        out = tmp_path / "d.svg"
        runner.invoke(cli, ["render", "builtin:dixon-phi", "--out", str(out), "--no-labels"])
        result = runner.invoke(cli, ["render", "builtin:dixon-phi", "--no-labels"])
        assert result.output == out.read_text(encoding="utf-8") + "\n"

    def test_unwritable_out(self, runner, tmp_path):
        out = tmp_path / "missing" / "square.svg"
        result = runner.invoke(cli, ["render", "builtin:chu-phi", "--out", str(out)])
        assert result.exit_code == EXIT_ERROR
        assert "error: render: cannot write" in result.output
        assert not out.exists()

    @pytest.mark.parametrize("name", BUILTINS)
    def test_stdout_deterministic(self, runner, name):
        first = runner.invoke(cli, ["render", f"builtin:{name}"])
        second = runner.invoke(cli, ["render", f"builtin:{name}"])
        assert first.exit_code == EXIT_OK
        assert first.output == second.output

    def test_unknown_highlight(self, runner):
        result = runner.invoke(cli, ["render", "builtin:chu-phi", "--circle", "nope"])
        assert result.exit_code == EXIT_ERROR
        assert "error: render:" in result.output


class TestCatalog:
    def test_list(self, runner):
        result = runner.invoke(cli, ["catalog", "list"])
        assert result.exit_code == EXIT_OK
        for name in ("builtin:dixon-phi", "builtin:chu9-full", "chu9-value"):
            assert name in result.output

    def test_show(self, runner):
        result = runner.invoke(cli, ["catalog", "show", "chu-phi"])
        assert "point H = intersect mh nb opposite C of ab" in result.output

    def test_show_unknown(self, runner):
        result = runner.invoke(cli, ["catalog", "show", "nope"])
        assert result.exit_code == EXIT_ERROR
        assert "error: catalog: unknown builtin `nope`" in result.output


class TestHelp:
    def test_every_flag_documented(self, runner):
        for path, command in commands(cli):
            result = runner.invoke(cli, list(path) + ["--help"])
            assert result.exit_code == EXIT_OK, path
            for param in command.params:
                if isinstance(param, click.Option):
                    assert param.help, (path, param.name)
                    for opt in param.opts:
                        assert opt in result.output, (path, opt)

    def test_group_flags(self, runner):
        result = runner.invoke(cli, ["--help"])
        assert "--log-level" in result.output
        for name in ("run", "verify", "approx", "error", "metrics", "replay", "render",
                     "catalog", "config"):
            assert name in result.output

    def test_config(self, runner):
        result = runner.invoke(cli, ["config"])
        assert "coordinate_precision: 12" in result.output
