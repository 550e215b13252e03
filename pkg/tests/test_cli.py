import json

import pytest

from rackq import cli
from rackq import tables as tb


@pytest.fixture
def rack_file(tmp_path):
    def write(name, table):
        path = tmp_path / name
        path.write_text(tb.format_rack(table))
        return str(path)

    return write


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_validate_dihedral(rack_file, capsys):
    path = rack_file("d3.rack", tb.dihedral(3))
    code, doc = run(capsys, "validate", path)
    assert code == 0
    assert doc["status"] == "ok"
    assert doc["payload"] == {
        "order": 3,
        "idempotent": True,
        "right_invertible": True,
        "right_self_distributive": True,
        "is_rack": True,
        "is_quandle": True,
        "exponent": 2,
    }


def test_validate_trivial2(rack_file, capsys):
    code, doc = run(capsys, "validate", rack_file("t2.rack", tb.trivial(2)))
    assert code == 0
    assert doc["payload"]["is_quandle"] and doc["payload"]["exponent"] == 1


def test_validate_axiom_failure_is_still_ok_status(rack_file, capsys):
    not_rack = tb.Table(((0, 1), (1, 0)))
    code, doc = run(capsys, "validate", rack_file("x.rack", not_rack))
    assert code == 0
    assert doc["payload"]["right_invertible"] is True
    assert doc["payload"]["right_self_distributive"] is False
    assert "exponent" not in doc["payload"]


def test_validate_out_of_range_entry(tmp_path, capsys):
    path = tmp_path / "bad.rack"
    path.write_text("3\n0 2 1\n2 7 0\n1 0 2\n")
    code, doc = run(capsys, "validate", str(path))
    assert code == 2
    assert doc["status"] == "error"
    assert doc["payload"] == {}
    assert any("entry out of range" in d for d in doc["diagnostics"])


def test_validate_missing_file(capsys):
    code, doc = run(capsys, "validate", "/no/such/file.rack")
    assert code == 2 and doc["status"] == "error"


def test_inverse(rack_file, capsys):
    table = tb.constant_action((1, 2, 0))
    code, doc = run(capsys, "inverse", rack_file("c3.rack", table))
    assert code == 0
    assert doc["payload"]["table"] == [[2, 2, 2], [0, 0, 0], [1, 1, 1]]


def test_enumerate(capsys):
    code, doc = run(capsys, "enumerate", "3", "--quandles", "--up-to-iso")
    assert code == 0
    assert doc["payload"]["count"] == 3
    assert len(doc["payload"]["tables"]) == 3


def test_enumerate_order_too_big(capsys):
    code, doc = run(capsys, "enumerate", "7")
    assert code == 2 and doc["status"] == "error"


def test_congruences_census(rack_file, capsys):
    code, doc = run(capsys, "congruences", rack_file("d3.rack", tb.dihedral(3)))
    assert code == 0
    classes = [entry["class"] for entry in doc["payload"]["congruences"]]
    assert sorted(classes) == ["Both", "Both", "Neither", "Neither", "Neither"]
    assert doc["payload"]["count"] == 5


def test_congruences_single_partition(rack_file, capsys):
    path = rack_file("d4.rack", tb.dihedral(4))
    code, doc = run(capsys, "congruences", path, "--partition", "0,2|1,3")
    assert code == 0
    assert doc["payload"]["class"] == "Both"
    assert doc["payload"]["partition"] == [[0, 2], [1, 3]]


def test_congruences_never_report_half_tags_on_finite_racks(rack_file, capsys):
    for t in tb.enumerate_racks(3, up_to_iso=True):
        code, doc = run(capsys, "congruences", rack_file("r.rack", t))
        assert code == 0
        assert all(
            entry["class"] in ("Both", "Neither")
            for entry in doc["payload"]["congruences"]
        )


def test_congruences_bad_partition_literal(rack_file, capsys):
    path = rack_file("d4.rack", tb.dihedral(4))
    code, doc = run(capsys, "congruences", path, "--partition", "0;1")
    assert code == 2 and doc["status"] == "error"


def test_quotient(rack_file, capsys):
    path = rack_file("d4.rack", tb.dihedral(4))
    code, doc = run(capsys, "quotient", path, "--partition", "0,2|1,3")
    assert code == 0
    assert doc["payload"]["table"] == [[0, 0], [1, 1]]
    assert doc["payload"]["is_quandle"] is True


def test_quotient_of_non_congruence_names_the_class(rack_file, capsys):
    path = rack_file("d3.rack", tb.dihedral(3))
    code, doc = run(capsys, "quotient", path, "--partition", "0,1|2")
    assert code == 2
    assert any("Neither" in d for d in doc["diagnostics"])


def test_subrack(rack_file, capsys):
    path = rack_file("d3.rack", tb.dihedral(3))
    assert run(capsys, "subrack", path, "--subset", "0")[1]["payload"]["is_subrack"] is True
    assert run(capsys, "subrack", path, "--subset", "0,1")[1]["payload"]["is_subrack"] is False


def test_hom_and_iso_check(rack_file, capsys):
    d4 = rack_file("d4.rack", tb.dihedral(4))
    t2 = rack_file("t2.rack", tb.trivial(2))
    code, doc = run(capsys, "hom-check", d4, t2, "--map", "0,1,0,1")
    assert code == 0 and doc["payload"]["is_homomorphism"] is True

    code, doc = run(capsys, "iso-check", d4, t2, "--map", "0,1,0,1")
    assert code == 0
    assert doc["payload"]["first_isomorphism"] is True
    assert doc["payload"]["kernel_blocks"] == [[0, 2], [1, 3]]
    assert doc["payload"]["kernel_class"] == "Both"

    code, doc = run(capsys, "iso-check", d4, d4, "--map", "0,0,1,0")
    assert code == 2 and doc["status"] == "error"


def test_classify_tau_cases(capsys):
    for tau, case in (("-1", 1), ("1/2", 2), ("2", 3), ("2/3", 4)):
        code, doc = run(capsys, "classify-tau", tau, "--samples", "50")
        assert code == 0
        assert doc["payload"]["case"] == case


def test_classify_tau_accepts_negative_fractions(capsys):
    code, doc = run(capsys, "classify-tau", "-1/2", "--samples", "20")
    assert code == 0
    assert doc["payload"]["case"] == 2 and doc["payload"]["tau"] == "-1/2"


def test_classify_tau_witness_details(capsys):
    code, doc = run(capsys, "classify-tau", "2/3", "--samples", "100")
    assert code == 0
    by_role = {w["role"]: w for w in doc["payload"]["witnesses"]}
    assert by_role["denominator"]["status"] == "RightOnly"
    assert by_role["denominator"]["descriptor"] == "1:3"
    assert by_role["denominator"]["half_witness"] == {"inverse": ["0", "0", "1", "0"]}
    assert by_role["denominator"]["sampled_checks"] == {"primary": True}
    assert by_role["numerator"]["status"] == "LeftOnly"
    assert by_role["combined"]["status"] == "Both"


def test_classify_tau_single_subgroup(capsys):
    code, doc = run(capsys, "classify-tau", "2/3", "--subgroup", "1:3", "--samples", "100")
    assert code == 0
    assert doc["payload"]["status"] == "RightOnly"
    assert doc["payload"]["half_witness"] == {"inverse": ["0", "0", "1", "0"]}
    assert doc["payload"]["sampled_checks"] == {"primary": True}


def test_classify_tau_rejects_trivial_and_zero(capsys):
    code, doc = run(capsys, "classify-tau", "1")
    assert code == 2
    assert any("trivial weighted average quandle" in d for d in doc["diagnostics"])
    code, doc = run(capsys, "classify-tau", "0")
    assert code == 2


@pytest.mark.parametrize("name", ["b_ell", "b_quandle", "b0", "alexander"])
def test_demos_pass(name, capsys):
    code, doc = run(capsys, "demo", name, "--samples", "200")
    assert code == 0
    assert doc["status"] == "ok"
    assert doc["payload"]["checks"]
    assert all(check["passed"] for check in doc["payload"]["checks"])


def test_demo_unknown_name():
    with pytest.raises(SystemExit) as info:
        cli.main(["demo", "nope"])
    assert info.value.code == 2


def test_output_is_stable_across_runs(capsys):
    cli.main(["classify-tau", "2/3", "--samples", "20"])
    first = capsys.readouterr().out
    cli.main(["classify-tau", "2/3", "--samples", "20"])
    second = capsys.readouterr().out
    assert first == second


def test_pretty_output(rack_file, capsys):
    path = rack_file("d3.rack", tb.dihedral(3))
    code = cli.main(["validate", path, "--pretty"])
    out = capsys.readouterr().out
    assert code == 0 and out.startswith("{\n")
