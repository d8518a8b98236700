"""Tests for the mpalg command line.

These tests verify that the CLI correctly:
- Parses lambda, JSON arguments and @file references
- Emits the documented JSON for every subcommand
- Maps kernel errors to exit code 2 and failed checks to exit code 1
"""

import csv
import io
import json

import pytest
from click.testing import CliRunner

from mpalg.cli import cli
from mpalg.core import schur_weyl as sw
from mpalg.models.diagram import MPDiagramModel, parse_mp_diagram, parse_mp_element
from mpalg.models.tableau import TableauModel


def run(*args):
    return CliRunner().invoke(cli, list(args))


def run_json(*args):
    result = run(*args, "--format", "json")
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


class TestGroup:
    """Tests for the top-level group."""

    def test_version(self):
        """--version prints the program name and version."""
        result = run("--version")
        assert result.exit_code == 0
        assert result.output.strip() == "mpalg 0.1.0"

    def test_help_lists_commands(self):
        """Every subcommand is listed."""
        result = run("--help")
        assert result.exit_code == 0
        for name in ("basis", "mul", "structure-poly", "duality-check", "rsk", "verify"):
            assert name in result.output

    def test_config_sets_default_format(self, tmp_path):
        """output.format from --config applies when --format is omitted."""
        config_file = tmp_path / "mpalg.toml"
        config_file.write_text('[output]\nformat = "json"\ncolor = false\n')
        result = run("--config", str(config_file), "lambda-set", "--k", "1", "--n", "3")
        assert result.exit_code == 0
        assert json.loads(result.output)["partitions"] == [[3], [2, 1]]

    def test_discovered_config(self, tmp_path, monkeypatch):
        """A local mpalg.toml is picked up."""
        (tmp_path / "mpalg.toml").write_text('[output]\nformat = "json"\n')
        monkeypatch.chdir(tmp_path)
        result = run("lambda-set", "--k", "0", "--n", "2")
        assert json.loads(result.output)["partitions"] == [[2]]

    def test_bad_config(self, tmp_path):
        """Malformed config exits 2."""
        config_file = tmp_path / "bad.toml"
        config_file.write_text("[output\n")
        result = run("--config", str(config_file), "lambda-set", "--k", "1", "--n", "2")
        assert result.exit_code == 2
        assert "Error" in result.output

    def test_missing_config(self, tmp_path):
        """A named config file must exist."""
        result = run("--config", str(tmp_path / "none.toml"), "lambda-set", "--k", "1", "--n", "2")
        assert result.exit_code == 2


class TestBasis:
    """Tests for the basis command."""

    def test_count(self):
        """MP_(2) has 9 diagrams."""
        data = run_json("basis", "--lambda", "2")
        assert data["lambda"] == [2]
        assert data["count"] == 9
        assert len(data["diagrams"]) == 9

    def test_filters(self):
        """--max-rank and --balanced restrict the list."""
        assert run_json("basis", "--lambda", "2", "--max-rank", "1")["count"] == 1
        balanced = run_json("basis", "--lambda", "2", "--balanced")["diagrams"]
        assert all(sum(i) == sum(j) for d in balanced for i, j in d["edges"])

    def test_zero_lambda(self):
        """lambda 0 has the single empty diagram."""
        assert run_json("basis", "--lambda", "0")["count"] == 1

    def test_bad_lambda(self):
        """Non-integer lambda is a usage error."""
        result = run("basis", "--lambda", "2,x")
        assert result.exit_code == 2

    def test_text_output(self):
        """The default text format renders a table."""
        result = run("basis", "--lambda", "1")
        assert result.exit_code == 0
        assert "Basis of MP_(1)" in result.output

    def test_enumeration_cap(self, tmp_path):
        """limits.max_enumeration bounds the listed basis."""
        config_file = tmp_path / "mpalg.toml"
        config_file.write_text("[limits]\nmax_enumeration = 8\n")
        result = run("--config", str(config_file), "basis", "--lambda", "2")
        assert result.exit_code == 2
        assert "cap" in result.output


class TestMul:
    """Tests for the mul command."""

    def test_gamma_squared(self, gamma1_json, gamma1_squared):
        """The k = 2 product."""
        result = run("mul", "--a", gamma1_json, "--b", gamma1_json, "--format", "json")
        assert result.exit_code == 0, result.output
        assert parse_mp_element(result.output) == gamma1_squared
        coeffs = [t["coeff"] for t in json.loads(result.output)["terms"]]
        assert sorted(coeffs) == sorted([["4"], ["-2", "1"], ["-4", "2"]])

    def test_second_factor_on_top(self):
        """--b is stacked on top of --a, as the help text says."""
        lower = '{"lambda": [2], "edges": [[[0], [1]], [[2], [1]]]}'
        upper = '{"lambda": [2], "edges": [[[1], [0]], [[1], [2]]]}'
        result = run("mul", "--a", lower, "--b", upper, "--format", "json")
        assert result.exit_code == 0, result.output
        assert set(parse_mp_element(result.output).terms) == {
            parse_mp_diagram('{"lambda": [2], "edges": [[[1], [1]], [[1], [1]]]}'),
            parse_mp_diagram('{"lambda": [2], "edges": [[[0], [1]], [[1], [0]], [[1], [1]]]}'),
        }
        assert "second placed on top" in cli.commands["mul"].help
        helps = {p.name: p.help for p in cli.commands["structure-poly"].params}
        assert "on top" in helps["g2_json"] and "below" in helps["g1_json"]

    def test_file_argument(self, tmp_path, gamma1_json, gamma1_squared):
        """@path reads JSON from a file."""
        path = tmp_path / "g.json"
        path.write_text(gamma1_json)
        result = run("mul", "--a", f"@{path}", "--b", f"@{path}", "--format", "json")
        assert parse_mp_element(result.output) == gamma1_squared

    def test_missing_file(self, tmp_path, gamma1_json):
        """An unreadable @file exits 2."""
        result = run("mul", "--a", f"@{tmp_path / 'none.json'}", "--b", gamma1_json)
        assert result.exit_code == 2
        assert "Error:" in result.output

    def test_malformed_json(self, gamma1_json):
        """Invalid JSON exits 2 with a diagnostic."""
        result = run("mul", "--a", '{"lambda": [2], "edges": [', "--b", gamma1_json)
        assert result.exit_code == 2
        assert "Error:" in result.output

    def test_weight_violation(self, gamma1_json):
        """Edges that do not sum to lambda exit 2."""
        result = run("mul", "--a", '{"lambda": [2], "edges": [[[1], [1]]]}', "--b", gamma1_json)
        assert result.exit_code == 2

    def test_lambda_mismatch(self, gamma1_json):
        """--lambda must agree with the JSON."""
        result = run("mul", "--lambda", "1,1", "--a", gamma1_json, "--b", gamma1_json)
        assert result.exit_code == 2

    def test_partition_algebra(self):
        """Two split diagrams in P_1 give xi times the split diagram."""
        split = '{"k": 1, "blocks": [[1], [-1]]}'
        data = run_json("mul", "--algebra", "pa", "--a", split, "--b", split)
        assert data["basis"] == "diagram"
        [term] = data["terms"]
        assert sorted(term["blocks"]) == [[-1], [1]]
        assert term["coeff"] == ["0", "1"]

    def test_text_output(self, gamma1_json):
        """Text output shows coefficients in xi."""
        result = run("mul", "--a", gamma1_json, "--b", gamma1_json, "--format", "text")
        assert result.exit_code == 0
        assert "ξ - 2" in result.output


class TestStructurePoly:
    """Tests for the structure-poly command."""

    def test_gamma(self, gamma1_json):
        """xi - 2, evaluated at 5."""
        data = run_json("structure-poly", "--g1", gamma1_json, "--g2", gamma1_json, "--g", gamma1_json, "--n", "5")
        assert data == {"coeffs": ["-2", "1"], "n": 5, "value": "3"}

    def test_absent_target(self, gamma1_json):
        """A diagram outside the product has the zero polynomial."""
        target = '{"lambda": [2], "edges": [[[2], [2]]]}'
        data = run_json("structure-poly", "--g1", gamma1_json, "--g2", gamma1_json, "--g", target)
        assert data == {"coeffs": []}


class TestEmbedAndIdempotent:
    """Tests for embed and idempotent."""

    def test_embed_orbit(self, gamma1_json):
        """The image lives in the orbit basis of P_2."""
        data = run_json("embed", "--a", gamma1_json)
        assert data["k"] == 2
        assert data["basis"] == "orbit"
        assert data["terms"]

    def test_embed_diagram_basis(self, gamma1_json):
        """--basis diagram converts the image."""
        assert run_json("embed", "--a", gamma1_json, "--basis", "diagram")["basis"] == "diagram"

    def test_idempotent_check(self):
        """e is idempotent and fixed by the involution."""
        data = run_json("idempotent", "--lambda", "2", "--check")
        assert data["idempotent"] is True
        assert data["involution_fixed"] is True
        assert data["size"] == 3


class TestPhi:
    """Tests for the phi command."""

    def test_json(self, gamma1_json):
        """Dimension and labels of F[M(3, (2))]."""
        data = run_json("phi", "--a", gamma1_json, "--n", "3")
        assert data["dim"] == 6
        assert data["basis"][0] == "0,0,2"
        assert len(data["entries"]) == 6

    def test_kernel(self, gamma1_json):
        """Rank above n maps to the zero matrix."""
        data = run_json("phi", "--a", gamma1_json, "--n", "2")
        assert all(c == "0" for row in data["entries"] for c in row)

    def test_dense_csv(self, gamma1_json):
        """--dense-csv writes a labelled grid."""
        result = run("phi", "--a", gamma1_json, "--n", "2", "--dense-csv")
        assert result.exit_code == 0
        rows = list(csv.reader(io.StringIO(result.output)))
        assert rows[0] == ["", "0,2", "1,1", "2,0"]
        assert len(rows) == 4
        assert all(c == "0" for row in rows[1:] for c in row[1:])

    def test_cap(self, tmp_path, gamma1_json):
        """limits.max_matrix_dim is enforced."""
        config_file = tmp_path / "mpalg.toml"
        config_file.write_text("[limits]\nmax_matrix_dim = 4\n")
        result = run("--config", str(config_file), "phi", "--a", gamma1_json, "--n", "3")
        assert result.exit_code == 2
        assert "cap" in result.output


class TestDualityCheck:
    """Tests for the duality-check command."""

    def test_sweep(self):
        """Every triple of rank <= 3 agrees at n = 3."""
        data = run_json("duality-check", "--lambda", "2", "--n", "3")
        assert data["mismatches"] == []
        assert data["compared"] == sw.basis_rank_at_most((2,), 3) ** 3

    def test_single_triple(self, gamma1_json):
        """One triple at n = 4."""
        data = run_json(
            "duality-check", "--lambda", "2", "--n", "4", "--g1", gamma1_json, "--g2", gamma1_json, "--g", gamma1_json
        )
        assert data["compared"] == 1

    def test_partial_triple(self, gamma1_json):
        """--g1, --g2 and --g go together."""
        result = run("duality-check", "--lambda", "2", "--n", "3", "--g1", gamma1_json)
        assert result.exit_code == 2

    def test_rank_above_n(self, gamma1_json):
        """A triple that does not fit is an oracle error."""
        result = run(
            "duality-check", "--lambda", "2", "--n", "2", "--g1", gamma1_json, "--g2", gamma1_json, "--g", gamma1_json
        )
        assert result.exit_code == 2


class TestCentralizer:
    """Tests for the centralizer-dim command."""

    def test_values(self):
        """Orbit count and rank-bounded diagrams agree."""
        data = run_json("centralizer-dim", "--lambda", "2", "--n", "4")
        assert data["orbits"] == 9
        assert data["diagrams_rank_at_most_n"] == 9

    def test_commutant(self):
        """--commutant solves for the full commutant."""
        data = run_json("centralizer-dim", "--lambda", "1", "--n", "3", "--commutant")
        assert data["orbits"] == data["commutant"] == 2


class TestMultiplicities:
    """Tests for a-coeff, lambda-set and r-coeff."""

    def test_a_coeff_single(self):
        """a((4,1), (2)) = 2."""
        data = run_json("a-coeff", "--lambda", "2", "--nu", "4,1")
        assert data["rows"] == [{"nu": [4, 1], "dim": 4, "ssmt": 2}]

    def test_a_coeff_table(self):
        """Both methods over every partition of 5; weighted total 15."""
        data = run_json("a-coeff", "--lambda", "2", "--n", "5", "--as-table", "--method", "both")
        assert data["weighted_total"] == 15
        assert all(r["ssmt"] == r["plethysm"] for r in data["rows"])

    def test_a_coeff_csv(self):
        """CSV has one row per partition."""
        result = run("a-coeff", "--lambda", "2", "--n", "3", "--as-table", "--format", "csv")
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "nu,dim,ssmt"
        assert len(result.output.strip().splitlines()) == 4

    def test_a_coeff_needs_shape(self):
        """Either --nu or --n is required."""
        assert run("a-coeff", "--lambda", "2").exit_code == 2

    def test_lambda_set(self):
        """Partitions of 5 with b <= 2."""
        data = run_json("lambda-set", "--k", "2", "--n", "5")
        assert data == {"k": 2, "n": 5, "partitions": [[5], [4, 1], [3, 2]]}

    def test_r_coeff(self):
        """r for lambda = (1,1) at n = 5, with the character oracle."""
        data = run_json("r-coeff", "--lambda", "1,1", "--n", "5", "--oracle")
        rows = {tuple(r["nu"]): r for r in data["rows"]}
        assert rows[(5,)]["r"] == 0
        assert rows[(4, 1)]["r"] == 1
        assert all(r["r"] == r["oracle"] for r in data["rows"])

    def test_r_coeff_wrong_size(self):
        """--nu must partition n."""
        assert run("r-coeff", "--lambda", "1,1", "--n", "5", "--nu", "2,1").exit_code == 2

    def test_r_coeff_not_partition(self):
        """lambda must weakly decrease."""
        assert run("r-coeff", "--lambda", "1,2", "--n", "3").exit_code == 2


class TestRsk:
    """Tests for the rsk command."""

    def test_forward(self, rsk_221):
        """The lambda = (2,2,1) example."""
        d, t, s = rsk_221
        partition = json.dumps(MPDiagramModel.from_diagram(d).model_dump(by_alias=True))
        data = run_json("rsk", "--partition", partition, "--n", "6", "--symmetry")
        assert data["T"] == TableauModel.from_tableau(t).model_dump()
        assert data["S"] == TableauModel.from_tableau(s).model_dump()
        assert data["lambda"] == [2, 2, 1]
        assert data["symmetry"]["ok"] is True

    def test_invert(self, rsk_221):
        """--invert recovers the diagram."""
        d, t, s = rsk_221
        pair = json.dumps(
            {
                "T": TableauModel.from_tableau(t).model_dump(),
                "S": TableauModel.from_tableau(s).model_dump(),
                "lambda": [2, 2, 1],
            }
        )
        result = run("rsk", "--invert", "--pair", pair, "--format", "json")
        assert result.exit_code == 0, result.output
        assert parse_mp_diagram(result.output) == d

    def test_invert_shape_mismatch(self):
        """Incompatible tableaux exit 2."""
        pair = json.dumps(
            {"T": {"shape": [2], "rows": [[[], [1, 1]]]}, "S": {"shape": [1, 1], "rows": [[[]], [[1, 1]]]}}
        )
        result = run("rsk", "--invert", "--pair", pair)
        assert result.exit_code == 2
        assert "Error:" in result.output

    def test_forward_needs_n(self, gamma1_json):
        """Forward RSK requires --n."""
        assert run("rsk", "--partition", gamma1_json).exit_code == 2

    def test_rank_above_n(self, gamma1_json):
        """The diagram must fit in n columns."""
        assert run("rsk", "--partition", gamma1_json, "--n", "2").exit_code == 2


class TestVerify:
    """Tests for the verify command."""

    def test_examples_tiny(self):
        """The worked examples pass."""
        data = run_json("verify", "--suite", "examples", "--max-size", "tiny")
        assert data["summary"]["failed"] == 0
        assert data["size"] == "tiny"
        assert [r["name"] for r in data["results"]] == ["k2-product", "k5-diagram-product", "integral-operator", "rsk-221"]

    def test_seed_recorded(self):
        """--seed is echoed in the report."""
        assert run_json("verify", "--suite", "examples", "--max-size", "tiny", "--seed", "99")["seed"] == 99

    def test_unknown_suite(self):
        """Unknown suites exit 2."""
        result = run("verify", "--suite", "nope")
        assert result.exit_code == 2
        assert "unknown suite" in result.output

    def test_list(self):
        """--list shows every built-in suite."""
        result = run("verify", "--list")
        assert result.exit_code == 0
        for name in ("examples", "oracle", "rsk"):
            assert name in result.output

    def test_report_file(self, tmp_path):
        """--report writes TOML for a .toml path."""
        path = tmp_path / "report.toml"
        result = run("verify", "--suite", "examples", "--max-size", "tiny", "--report", str(path))
        assert result.exit_code == 0
        assert "summary" in path.read_text()

    @pytest.mark.slow
    @pytest.mark.integration
    def test_all_tiny(self):
        """Every suite passes its tiny sweep."""
        result = run("verify", "--max-size", "tiny", "--samples", "3", "--threads", "2")
        assert result.exit_code == 0, result.output
