import json

import pytest

from facnum.cli import GroupSpec, main
from facnum.errors import ParseError
from facnum.groups import dihedral8


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGroupSpec:
    @pytest.mark.parametrize("text", [
        "abelian:p=2,type=1,2",
        "named:D8",
        "named:E:p=3",
        "named:Cyclic:p=2:n=3",
        "table:/tmp/x.tbl",
    ])
    def test_canonical_round_trip(self, text):
        spec = GroupSpec.parse(text)
        assert spec.canonical() == text
        assert GroupSpec.parse(spec.canonical()).canonical() == text

    def test_build(self):
        assert GroupSpec.parse("abelian:p=2,type=1,2").build().order == 8
        assert GroupSpec.parse("named:Q8").build().label == "Q8"

    @pytest.mark.parametrize("bad", [
        "abelian:type=1,2",
        "abelian:p=2",
        "named:",
        "table:",
        "wat:1",
        "abelian:p=x,type=1",
    ])
    def test_parse_errors(self, bad):
        with pytest.raises(ParseError):
            GroupSpec.parse(bad)


class TestFormulaCommand:
    def test_elementary_value(self, capsys):
        code, out, _ = run(capsys, "formula", "elementary", "--n", "3", "--p", "2")
        assert code == 0 and "129" in out

    def test_elementary_poly(self, capsys):
        code, out, _ = run(capsys, "formula", "elementary", "--n", "2", "--poly")
        assert code == 0 and "p^2 + 3p + 5" in out

    def test_ep3_rejects_p2_with_diagnostic(self, capsys):
        code, out, err = run(capsys, "formula", "Ep3", "--p", "2")
        assert code == 2 and "odd" in err

    def test_json_format_keeps_strings(self, capsys):
        code, out, _ = run(capsys, "formula", "elementary", "--n", "4", "--p", "3",
                           "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["value"] == "24033"

    def test_missing_param(self, capsys):
        code, _, err = run(capsys, "formula", "rank2", "--p", "2")
        assert code == 2 and "a1" in err

    def test_cyclic(self, capsys):
        code, out, _ = run(capsys, "formula", "cyclic", "--n", "3")
        assert code == 0 and "7" in out

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "formula", "Mp3", "--p", "5", "--format", "csv")
        assert code == 0 and "107" in out


class TestF2Command:
    def test_q8(self, capsys):
        code, out, _ = run(capsys, "f2", "named:Q8")
        assert code == 0
        assert "F2 = 17" in out and "|L| = 6" in out

    def test_verify_z2xz4(self, capsys):
        code, out, _ = run(capsys, "f2", "abelian:p=2,type=1,2", "--verify")
        assert code == 0
        assert "F2 = 29" in out
        assert "verify eq1: pass" in out
        assert "verify eq2_quotient: pass" in out
        assert "verify hall: pass" in out

    def test_list_heisenberg(self, capsys):
        code, out, _ = run(capsys, "f2", "named:E:p=3", "--list", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert len(doc["pairs"]) == 121
        assert doc["f2"] == "121" and doc["lattice_size"] == "19"

    def test_table_spec(self, capsys, tmp_path):
        path = tmp_path / "d8.tbl"
        path.write_text(dihedral8().to_table_text())
        code, out, _ = run(capsys, "f2", f"table:{path}")
        assert code == 0 and "F2 = 41" in out

    def test_verify_non_prime_power_skips_hall(self, capsys, tmp_path):
        text = "6\n" + "\n".join(
            " ".join(str((i + j) % 6) for j in range(6)) for i in range(6)
        ) + "\n"
        path = tmp_path / "z6.tbl"
        path.write_text(text)
        code, out, _ = run(capsys, "f2", f"table:{path}", "--verify")
        assert code == 0 and "hall: skipped" in out

    def test_invalid_spec_exit_2(self, capsys):
        code, _, err = run(capsys, "f2", "abelian:p=4,type=1")
        assert code == 2 and "prime" in err

    def test_resource_cap_exit_3(self, capsys):
        code, _, err = run(capsys, "f2", "named:D8", "--max-subgroups", "3")
        assert code == 3 and "cap" in err

    def test_order_cap_exit_3(self, capsys):
        code, _, err = run(capsys, "f2", "named:Elem:p=2:n=13")
        assert code == 3


class TestSdCommand:
    def test_d8(self, capsys):
        code, out, _ = run(capsys, "sd", "named:D8")
        assert code == 0
        assert "92/100" in out and "23/25" in out

    def test_abelian_is_one(self, capsys):
        code, out, _ = run(capsys, "sd", "abelian:p=3,type=1,1", "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["sd"] == "1/1"

    def test_q8(self, capsys):
        code, out, _ = run(capsys, "sd", "named:Q8", "--format", "json")
        assert json.loads(out)["sd"] == "1/1"


class TestExploreCommand:
    def test_theorem5_verified(self, capsys):
        code, out, _ = run(capsys, "explore", "theorem5", "--p", "2", "--n", "3")
        assert code == 0 and "verified" in out

    def test_openproblem_both_verdicts(self, capsys):
        code, out, _ = run(capsys, "explore", "openproblem", "--p", "2", "--n", "4",
                           "--format", "json")
        doc = json.loads(out)
        assert code == 0  # monotone under at least one convention
        assert doc["verdicts"]["nonincreasing_lex"]["monotone"] is True
        assert doc["verdicts"]["nondecreasing_lex"]["monotone"] is False

    def test_conjecture6_with_tables(self, capsys, tmp_path):
        path = tmp_path / "d8.tbl"
        path.write_text(dihedral8().to_table_text())
        code, out, _ = run(capsys, "explore", "conjecture6", "--p", "2", "--n", "3",
                           "--tables", str(path))
        assert code == 0 and "verified" in out

    def test_conjecture6_coverage_note(self, capsys):
        code, out, _ = run(capsys, "explore", "conjecture6", "--p", "2", "--n", "4",
                           "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["coverage_complete"] is False

    def test_wrong_order_table_exit_2(self, capsys, tmp_path):
        path = tmp_path / "d8.tbl"
        path.write_text(dihedral8().to_table_text())
        code, _, err = run(capsys, "explore", "conjecture6", "--p", "2", "--n", "4",
                           "--tables", str(path))
        assert code == 2 and "d8.tbl" in err


class TestOutputContracts:
    def test_json_deterministic(self, capsys):
        _, out1, _ = run(capsys, "f2", "named:D8", "--format", "json")
        _, out2, _ = run(capsys, "f2", "named:D8", "--format", "json")
        assert out1 == out2

    def test_exit_codes_disjoint(self, capsys):
        ok, _, _ = run(capsys, "formula", "cyclic", "--n", "1")
        bad_input, _, _ = run(capsys, "formula", "Ep3", "--p", "2")
        resource, _, _ = run(capsys, "f2", "named:D8", "--max-subgroups", "2")
        assert (ok, bad_input, resource) == (0, 2, 3)

    def test_argparse_error_exit_2(self, capsys):
        code, _, _ = run(capsys, "formula", "nosuchfamily")
        assert code == 2

    def test_help_exit_0(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0 and "facnum" in out
