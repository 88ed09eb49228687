import io
import json

import pytest

from ceviangeo.cli import main, parse_document

DOC = json.dumps({
    "triangle": [["0", "0"], ["1", "0"], ["0", "1"]],
    "point": {"bary": ["1", "2", "3"]},
})


def run_cli(argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_derive_includes_isotomcomplement(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(DOC)
    code, out, err = run_cli(["derive", "--input", str(path)])
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["Q"]["bary"] == ["5", "8", "9"]
    assert doc["Q_prime"]["bary"] == ["5", "4", "3"]
    assert doc["flags"] == []


def test_derive_centroid(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(json.dumps({
        "triangle": [["0", "0"], ["1", "0"], ["0", "1"]],
        "point": {"bary": ["1", "1", "1"]},
    }))
    code, out, _ = run_cli(["derive", "--input", str(path)])
    assert code == 0
    doc = json.loads(out)
    assert doc["Q"]["bary"] == ["1", "1", "1"]


def test_derive_cartesian_point_input(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(json.dumps({
        "triangle": [["0", "0"], ["1", "0"], ["0", "1"]],
        "point": {"cart": ["1/3", "1/3"]},
    }))
    code, out, _ = run_cli(["derive", "--input", str(path)])
    assert code == 0
    assert json.loads(out)["P"]["bary"] == ["1", "1", "1"]


def test_derive_rejects_sideline_point(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(json.dumps({
        "triangle": [["0", "0"], ["1", "0"], ["0", "1"]],
        "point": {"bary": ["0", "1", "2"]},
    }))
    code, out, err = run_cli(["derive", "--input", str(path)])
    assert code == 2 and out == ""
    assert "ON_SIDELINE" in err


def test_derive_rejects_malformed_document(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text('{"triangle": [[0, 0], [1, 0]]}')
    code, _, err = run_cli(["derive", "--input", str(path)])
    assert code == 2
    assert "triangle" in err


def test_derive_output_is_deterministic(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(DOC)
    _, first, _ = run_cli(["derive", "--input", str(path)])
    _, second, _ = run_cli(["derive", "--input", str(path)])
    assert first == second


def test_derive_emits_exact_rational_strings(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(DOC)
    _, out, _ = run_cli(["derive", "--input", str(path)])
    doc = json.loads(out)
    assert doc["D"][1]["cart"] == ["2/5", "3/5"]
    assert doc["P"]["cart"] == ["1/3", "1/2"]


def test_check_generic_passes():
    code, out, _ = run_cli(["check", "--seed", "7", "--n", "10", "--stratum", "generic"])
    assert code == 0
    assert "0 FAIL" in out.splitlines()[-1]


def test_check_id_filter_restricts_lines():
    code, out, _ = run_cli(["check", "--seed", "7", "--n", "5",
                            "--stratum", "on-steiner", "--ids", "T3_13"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1].startswith("summary:")
    assert all(l.startswith("T3_13 PASS") for l in lines[:-1])


def test_check_unknown_id_is_usage_error():
    code, out, err = run_cli(["check", "--ids", "NOPE"])
    assert code == 2 and out == ""
    assert "NOPE" in err


def test_check_unknown_stratum_is_usage_error():
    code, _, _ = run_cli(["check", "--stratum", "bogus"])
    assert code == 2


def test_missing_subcommand_is_usage_error():
    code, _, _ = run_cli([])
    assert code == 2


def test_figure_half_turn_labels(tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text(DOC)
    out_path = tmp_path / "fig.svg"
    code, _, err = run_cli(["figure", "--input", str(doc),
                            "--figure", "half_turn", "--out", str(out_path)])
    assert code == 0, err
    svg = out_path.read_text()
    assert svg.startswith("<?xml")
    assert 'version="1.1"' in svg
    for label in ("N₁", "A₀", "A₀′"):
        assert f">{label}</text>" in svg


def test_figure_collinearity_pencils(tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text(DOC)
    code, out, _ = run_cli(["figure", "--input", str(doc),
                            "--figure", "collinearity", "--out", "-"])
    assert code == 0
    for label in ("A₀", "A₅", "D₂", "X"):
        assert f">{label}</text>" in out


def test_figure_requires_ordinary_points(tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text(json.dumps({
        "triangle": [["0", "0"], ["1", "0"], ["0", "1"]],
        "point": {"bary": ["2", "3", "-5"]},
    }))
    code, _, err = run_cli(["figure", "--input", str(doc),
                            "--figure", "half_turn", "--out", "-"])
    assert code == 2
    assert "ordinary" in err


def test_figure_unknown_id(tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text(DOC)
    code, _, err = run_cli(["figure", "--input", str(doc),
                            "--figure", "nope", "--out", "-"])
    assert code == 2
    assert "unknown figure" in err


def test_figure_deterministic(tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text(DOC)
    _, first, _ = run_cli(["figure", "--input", str(doc),
                           "--figure", "trace_circle", "--out", "-"])
    _, second, _ = run_cli(["figure", "--input", str(doc),
                            "--figure", "trace_circle", "--out", "-"])
    assert first == second and first.startswith("<?xml")


def test_parse_document_round_trip():
    triangle, p = parse_document(DOC)
    assert p.to_xy() == (pytest.approx(1 / 3), pytest.approx(1 / 2))


def test_parse_document_rejects_bad_point():
    with pytest.raises(ValueError):
        parse_document(json.dumps({
            "triangle": [["0", "0"], ["1", "0"], ["0", "1"]],
            "point": {"bary": ["1", "2"]},
        }))
    with pytest.raises(ValueError):
        parse_document(json.dumps({
            "triangle": [["0", "0"], ["1", "0"], ["0", "1"]],
            "point": {"cart": ["1", "2"], "bary": ["1", "1", "1"]},
        }))
