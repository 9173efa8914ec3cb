import json
import pathlib

import pytest

from brauerkit import fixtures as F
from brauerkit.canonical import isomorphic
from brauerkit.cli import main
from brauerkit.formats import dumps, from_dict, loads

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    status = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return status, out, err


def test_validate_ok(capsys):
    status, out, _ = run(capsys, "validate", DATA / "three_digons.json")
    assert status == 0 and json.loads(out)["valid"]


def test_validate_mult_one_loop(capsys):
    status, out, err = run(capsys, "validate", DATA / "bad_loop.json")
    assert status == 1
    assert "condition (3)" in err
    assert not json.loads(out)["valid"]


def test_malformed_json_reports_position(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"vertices": [1,\n  2,,]}')
    status, out, err = run(capsys, "validate", p)
    assert status == 1 and out == ""
    assert "line 2" in err and "column" in err


def test_missing_file(capsys, tmp_path):
    status, _, err = run(capsys, "cartan", tmp_path / "nope.json")
    assert status == 1 and "error" in err


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as e:
        main(["mutate", str(DATA / "three_digons.json")])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["no-such-command"])
    assert e.value.code == 2


def test_wrong_kind(capsys):
    status, _, err = run(capsys, "flip", DATA / "three_digons.json", "--edge", 1)
    assert status == 1 and "Brauer graph" in err


@pytest.mark.parametrize("name", sorted(F.MUTATION_EXAMPLES))
def test_mutate_matches_expected(capsys, name):
    src, i, dst = F.MUTATION_EXAMPLES[name]
    status, out, err = run(capsys, "mutate", DATA / f"{name}.json", "--vertex", i)
    assert status == 0 and err.startswith("case:")
    assert isomorphic(loads(out), dst())


@pytest.mark.parametrize("name", sorted(F.FLIP_EXAMPLES))
def test_flip_matches_expected(capsys, name):
    src, e, dst = F.FLIP_EXAMPLES[name]
    status, out, _ = run(capsys, "flip", DATA / f"{name}.json", "--edge", e)
    assert status == 0
    assert isomorphic(loads(out), dst())


def test_left_undoes_right(capsys, tmp_path):
    status, out, _ = run(capsys, "mutate", DATA / "looped_square.json", "--vertex", 1)
    p = tmp_path / "m.json"
    p.write_text(out)
    status, out, _ = run(capsys, "mutate", p, "--vertex", 1, "--left")
    assert status == 0 and isomorphic(loads(out), F.looped_square())


def test_unknown_vertex(capsys):
    status, _, err = run(capsys, "mutate", DATA / "three_digons.json", "--vertex", 42)
    assert status == 1 and "unknown vertex" in err


def test_round_trip_bg_sb_bg(capsys, tmp_path):
    status, out, _ = run(capsys, "to-sb", DATA / "triangle.json")
    assert status == 0
    p = tmp_path / "sb.json"
    p.write_text(out)
    status, out, _ = run(capsys, "to-bg", p)
    assert status == 0 and isomorphic(loads(out), F.triangle_graph())


def test_output_is_byte_stable(capsys):
    outs = {run(capsys, "to-bg", DATA / "looped_square.json")[1] for _ in range(3)}
    assert len(outs) == 1
    (text,) = outs
    assert dumps(from_dict(json.loads(text))) == text


def test_cartan(capsys):
    status, out, _ = run(capsys, "cartan", DATA / "looped_square.json")
    assert status == 0
    assert json.loads(out)["cartan"] == [[8, 4, 4], [4, 3, 2], [4, 2, 3]]


def test_basis_dims_sum_to_cartan_trace_total(capsys):
    status, out, _ = run(capsys, "basis", DATA / "three_digons.json")
    d = json.loads(out)
    assert status == 0
    assert sum(b["dim"] for b in d["basis"]) == d["total_dim"]


def test_verify_ok(capsys):
    status, out, err = run(capsys, "verify", DATA / "three_digons.json", "--vertex", 1)
    assert status == 0
    assert "OK: Cartan and Ext identities hold" in err
    d = json.loads(out)
    assert d["cartan_ok"] and d["ext_ok"]


def test_check_compat(capsys):
    status, out, _ = run(capsys, "check-compat", DATA / "digon_with_pendants.json", "--edge", 1)
    d = json.loads(out)
    assert status == 0 and d["compatible"] and d["flip_case"] == "iii"


def test_reduce(capsys):
    status, out, _ = run(capsys, "reduce", DATA / "two_triangles.json")
    d = json.loads(out)
    assert status == 0
    for entry in d["log"]:
        assert set(entry) == {"step", "vertex", "case-tag", "tracked-cycle"}
    nf = from_dict(d["normal_form"])
    assert len(nf.cycles) <= 2


def test_fingerprint_agrees_across_views(capsys):
    a = json.loads(run(capsys, "fingerprint", DATA / "triangle.json")[1])
    b = json.loads(run(capsys, "fingerprint", DATA / "triangle_expected.json")[1])
    assert a == b


def test_search(capsys):
    status, out, _ = run(capsys, "search", DATA / "triangle.json",
                         DATA / "triangle_expected.json", "--depth", 2)
    d = json.loads(out)
    assert status == 0 and d["found"] and len(d["steps"]) <= 2


def test_export_dot(capsys):
    status, out, _ = run(capsys, "export-dot", DATA / "looped_square.json")
    assert status == 0 and out.startswith("digraph") and out.rstrip().endswith("}")
    status, out, _ = run(capsys, "export-dot", DATA / "triangle.json")
    assert status == 0 and out.startswith("graph") and "--" in out
