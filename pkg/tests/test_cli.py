"""End-to-end tests of the command-line interface (in-process)."""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET

import pytest

from polytri import cli, verify
from polytri.verify import Check, RunReport


def invoke(argv):
    """Run the CLI in-process, normalizing argparse's SystemExit."""
    try:
        return cli.run(argv)
    except SystemExit as exc:
        return exc.code


# -- enumerate ------------------------------------------------------------------


def test_enumerate_square(capsys):
    assert invoke(["enumerate", "--n", "4"]) == 0
    assert capsys.readouterr().out == "4:0-2\n4:1-3\n"


def test_enumerate_count_only(capsys):
    assert invoke(["enumerate", "--n", "6", "--count-only"]) == 0
    assert capsys.readouterr().out == "14\n"


def test_enumerate_ear_filtered_count(capsys):
    assert invoke(["enumerate", "--n", "6", "--ears", "3", "--count-only"]) == 0
    assert capsys.readouterr().out == "2\n"


def test_enumerate_ear_filtered_listing(capsys):
    assert invoke(["enumerate", "--n", "6", "--ears", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert sorted(lines) == ["6:0-2,0-4,2-4", "6:1-3,1-5,3-5"]


def test_enumerate_count_only_scales_past_listing_cap(capsys):
    assert invoke(["enumerate", "--n", "20", "--count-only"]) == 0
    assert capsys.readouterr().out == "477638700\n"


def test_enumerate_listing_capped(capsys):
    assert invoke(["enumerate", "--n", "15"]) == 1
    assert "3 <= n <= 14" in capsys.readouterr().err


def test_enumerate_json(capsys):
    assert invoke(["enumerate", "--n", "4", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"n": 4, "ears": None, "triangulations": ["4:0-2", "4:1-3"]}


def test_enumerate_triangle_has_empty_diagonal_list(capsys):
    assert invoke(["enumerate", "--n", "3"]) == 0
    assert capsys.readouterr().out == "3:\n"


# -- symmetry -------------------------------------------------------------------


def test_symmetry_range_both_methods(capsys):
    assert invoke(["symmetry", "--n", "6..8", "--ears", "2", "--method", "both"]) == 0
    assert capsys.readouterr().out == "6 2 2\n7 3 3\n8 6 6\n"


def test_symmetry_single_value_is_bare(capsys):
    assert invoke(["symmetry", "--n", "6", "--ears", "all"]) == 0
    assert capsys.readouterr().out == "3\n"


def test_symmetry_three_ears_nonagon(capsys):
    assert invoke(["symmetry", "--n", "9", "--ears", "3"]) == 0
    assert capsys.readouterr().out == "14\n"


def test_symmetry_csv(capsys):
    assert invoke(["symmetry", "--n", "6..7", "--ears", "2", "--method", "both",
                   "--format", "csv"]) == 0
    assert capsys.readouterr().out == "n,closed,orbit\n6,2,2\n7,3,3\n"


def test_symmetry_json_round_trips(capsys):
    assert invoke(["symmetry", "--n", "5..7", "--ears", "2", "--method", "closed",
                   "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows == [
        {"n": 5, "ears": "2", "closed": 1},
        {"n": 6, "ears": "2", "closed": 2},
        {"n": 7, "ears": "2", "closed": 3},
    ]


def test_symmetry_closed_form_outside_domain(capsys):
    assert invoke(["symmetry", "--n", "4..5", "--ears", "2", "--method", "closed"]) == 1
    captured = capsys.readouterr()
    assert "n=4" in captured.err
    assert captured.out == "5 1\n"  # surviving row keeps its n column


def test_symmetry_no_closed_form_for_all_ears(capsys):
    assert invoke(["symmetry", "--n", "6", "--ears", "all", "--method", "closed"]) == 1
    assert "closed forms exist only" in capsys.readouterr().err


def test_symmetry_orbit_infeasible_beyond_ceiling(capsys):
    assert invoke(["symmetry", "--n", "15", "--ears", "2"]) == 1
    assert "n <= 14" in capsys.readouterr().err


def test_symmetry_mismatch_exits_two(capsys, monkeypatch):
    monkeypatch.setattr(cli.counting, "symmetry_classes_orbit",
                        lambda n, ears=None: 999)
    assert invoke(["symmetry", "--n", "6", "--ears", "2", "--method", "both"]) == 2
    captured = capsys.readouterr()
    assert "MISMATCH" in captured.err
    assert captured.out == "6 2 999\n"


# -- disjoint -------------------------------------------------------------------


def test_disjoint_arrow_both(capsys):
    assert invoke(["disjoint", "--arrow", "--n", "6", "--method", "both"]) == 0
    assert capsys.readouterr().out == "5 5\n"


def test_disjoint_three_ear_type_prints_erratum_note(capsys):
    assert invoke(["disjoint", "--type", "1,1,2", "--n", "7", "--method", "both"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "11 11"
    assert out[1].startswith("note:")
    assert "evaluates to 5" in out[1]


def test_disjoint_inline_brute(capsys):
    assert invoke(["disjoint", "--t", "6:0-2,2-4,0-4", "--method", "brute"]) == 0
    assert capsys.readouterr().out == "4\n"


def test_disjoint_snake_matches_catalan(capsys):
    assert invoke(["disjoint", "--snake", "--n", "11", "--method", "both"]) == 0
    assert capsys.readouterr().out == "1430 1430\n"


def test_disjoint_formula_rejects_four_ears(capsys):
    four_eared = "8:0-2,0-4,0-6,2-4,4-6"
    assert invoke(["disjoint", "--t", four_eared, "--method", "formula"]) == 1
    assert "4-eared" in capsys.readouterr().err


def test_disjoint_requires_exactly_one_shape(capsys):
    assert invoke(["disjoint", "--arrow", "--snake", "--n", "6"]) == 1
    assert invoke(["disjoint"]) == 1


def test_disjoint_shape_flags_need_n(capsys):
    assert invoke(["disjoint", "--arrow"]) == 1
    assert "requires --n" in capsys.readouterr().err


def test_disjoint_json(capsys):
    assert invoke(["disjoint", "--type", "1,1,1", "--n", "6", "--method", "both",
                   "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["brute"] == payload["formula"] == 4
    assert payload["shape"] == "type"
    assert payload["note"].startswith("note:")


def test_disjoint_mismatch_exits_two(capsys, monkeypatch):
    monkeypatch.setattr(cli.disjoint, "count_disjoint", lambda t: 0)
    assert invoke(["disjoint", "--arrow", "--n", "6", "--method", "both"]) == 2
    assert "MISMATCH" in capsys.readouterr().err


def test_disjoint_bad_inline_text(capsys):
    assert invoke(["disjoint", "--t", "6:0-2"]) == 1
    assert invoke(["disjoint", "--t", "oops"]) == 1


# -- verify ---------------------------------------------------------------------


def test_verify_small_run(capsys):
    assert invoke(["verify", "--max-n", "6"]) == 0
    out = capsys.readouterr().out
    assert "ERRATUM  three-ear-published-variant" in out
    assert "0 fail" in out.splitlines()[-1]


def test_verify_single_suite(capsys):
    assert invoke(["verify", "--suite", "parallel", "--max-n", "8"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("PASS  snake-residue-diagonals")


def test_verify_json(capsys):
    assert invoke(["verify", "--suite", "core", "--max-n", "6", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["counts"]["FAIL"] == 0


def test_verify_deterministic_across_thread_counts(capsys, monkeypatch):
    monkeypatch.setenv(verify.THREADS_ENV, "1")
    invoke(["verify", "--max-n", "7"])
    first = capsys.readouterr().out
    monkeypatch.setenv(verify.THREADS_ENV, "4")
    invoke(["verify", "--max-n", "7"])
    assert capsys.readouterr().out == first


def test_verify_fail_exits_two(capsys, monkeypatch):
    report = RunReport(("core",), 5, (Check("FAIL", "demo", "5", "-", "1", "2"),), 0.0)
    monkeypatch.setattr(cli.verify, "run_suites", lambda suites, max_n: report)
    assert invoke(["verify"]) == 2
    assert "FAIL  demo" in capsys.readouterr().out


def test_verify_timing_goes_to_stderr(capsys):
    assert invoke(["verify", "--suite", "parallel", "--max-n", "6", "--timing"]) == 0
    captured = capsys.readouterr()
    assert "wall-time" not in captured.out
    assert "wall-time" in captured.err


def test_verify_rejects_tiny_max_n(capsys):
    assert invoke(["verify", "--max-n", "2"]) == 1


# -- svg ------------------------------------------------------------------------


def test_svg_stdout_is_well_formed(capsys):
    assert invoke(["svg", "--arrow", "--n", "8"]) == 0
    root = ET.fromstring(capsys.readouterr().out)
    assert root.tag.endswith("svg")


def test_svg_writes_file(tmp_path, capsys):
    out = tmp_path / "snake11.svg"
    assert invoke(["svg", "--snake", "--n", "11", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    root = ET.parse(out).getroot()
    ns = "{http://www.w3.org/2000/svg}"
    labels = [el.text for el in root.iter(f"{ns}text")]
    assert labels == [str(i) for i in range(11)]
    assert len(root.findall(f"{ns}line")) == 8  # n-3 diagonals


def test_svg_highlight_shades_internal_triangle(capsys):
    assert invoke(["svg", "--t", "6:0-2,2-4,0-4", "--highlight", "internal"]) == 0
    out = capsys.readouterr().out
    root = ET.fromstring(out)
    ns = "{http://www.w3.org/2000/svg}"
    fills = [el.get("fill") for el in root.iter(f"{ns}polygon")]
    assert fills.count("#9fc5e8") == 1  # the single internal triangle


def test_svg_deterministic(capsys):
    invoke(["svg", "--snake", "--n", "9"])
    first = capsys.readouterr().out
    invoke(["svg", "--snake", "--n", "9"])
    assert capsys.readouterr().out == first


def test_svg_unwritable_path(capsys):
    rc = invoke(["svg", "--arrow", "--n", "6", "--out", "/no-such-dir/x.svg"])
    assert rc == 1
    assert "cannot write" in capsys.readouterr().err


def test_svg_triangle_with_highlight(capsys):
    assert invoke(["svg", "--t", "3:", "--highlight", "both"]) == 0
    ET.fromstring(capsys.readouterr().out)


def test_svg_bad_highlight_flag(capsys):
    assert invoke(["svg", "--arrow", "--n", "6", "--highlight", "wings"]) == 1


# -- sequence -------------------------------------------------------------------


def test_sequence_sym2(capsys):
    assert invoke(["sequence", "--what", "sym2", "--n", "5..10"]) == 0
    assert capsys.readouterr().out == "1\n2\n3\n6\n10\n20\n"


def test_sequence_disj2(capsys):
    assert invoke(["sequence", "--what", "disj2", "--n", "4..9"]) == 0
    assert capsys.readouterr().out == "1\n2\n5\n14\n42\n132\n"


def test_sequence_catalan(capsys):
    assert invoke(["sequence", "--what", "catalan", "--n", "0..6"]) == 0
    assert capsys.readouterr().out == "1\n1\n2\n5\n14\n42\n132\n"


def test_sequence_hurtado_noy_with_k(capsys):
    assert invoke(["sequence", "--what", "hurtado-noy:2", "--n", "4..8"]) == 0
    assert capsys.readouterr().out == "2\n5\n12\n28\n64\n"


def test_sequence_oeis_format(capsys):
    assert invoke(["sequence", "--what", "catalan", "--n", "0..3", "--format", "oeis"]) == 0
    assert capsys.readouterr().out == "0 1\n1 1\n2 2\n3 5\n"


def test_sequence_json(capsys):
    assert invoke(["sequence", "--what", "classes-compositions", "--n", "2..5",
                   "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["what"] == "classes-compositions"
    assert [r["value"] for r in payload["rows"]] == [1, 2, 3, 6]


def test_sequence_domain_errors_per_row(capsys):
    assert invoke(["sequence", "--what", "sym3", "--n", "5..7"]) == 1
    captured = capsys.readouterr()
    assert "n=5" in captured.err
    assert captured.out == "1\n1\n"


def test_sequence_unknown_what(capsys):
    assert invoke(["sequence", "--what", "primes", "--n", "1..3"]) == 1
    assert "unknown sequence" in capsys.readouterr().err


# -- shared plumbing ------------------------------------------------------------


def test_bad_range_rejected(capsys):
    assert invoke(["symmetry", "--n", "8..5"]) == 1
    assert invoke(["symmetry", "--n", "a..b"]) == 1


def test_unknown_flag_exits_one(capsys):
    assert invoke(["enumerate", "--n", "4", "--bogus"]) == 1


def test_missing_subcommand_exits_one(capsys):
    assert invoke([]) == 1


def test_unknown_subcommand_exits_one(capsys):
    assert invoke(["frobnicate"]) == 1


def test_help_exits_zero(capsys):
    assert invoke(["--help"]) == 0
