import json

from homfilt import records as rec
from homfilt.cli import fixture_path, run_for_test


def fx(name):
    return str(fixture_path(name))


def test_cohomology_on_the_cone_fixture():
    code, out = run_for_test(["cohomology", fx("cone_identity.json")])
    assert code == 0
    assert "H^-1: dim 0" in out and "H^0: dim 0" in out


def test_classify_map_on_the_shift_fixture():
    code, out = run_for_test(["classify-map", fx("filtration_shift.json")])
    assert code == 0
    assert "mono: yes" in out
    assert "strict mono: no" in out
    assert "fibration: no" in out
    assert "weak equivalence: no" in out


def test_check_lift_finds_the_bundled_lift():
    code, out = run_for_test(["check-lift", fx("lift_square.json")])
    assert code == 0
    assert "lift found" in out


def test_factor_reports_both_middles():
    code, out = run_for_test(["factor", fx("rank_one_map.json")])
    assert code == 0
    assert "coimage: dim 1" in out and "image: dim 1" in out


def test_resolve_commands():
    code, out = run_for_test(["resolve-ce", fx("heisenberg3.json"), "--weight-bound", "3"])
    assert code == 0 and "exact in weights 1..3" in out
    code, out = run_for_test(["resolve-koszul", fx("koszul_rank2.json"), "--degree-bound", "4"])
    assert code == 0 and "augmentation" in out


def test_pbw_and_lie_check():
    code, out = run_for_test(["pbw", fx("sl2.json"), "--pbw-bound", "4"])
    assert code == 0 and "dim gr = 15 == dim Sym = 15" in out
    code, out = run_for_test(["lie-check", fx("sl2.json")])
    assert code == 0 and "axioms hold" in out


def test_crit_matches_the_documented_line():
    code, out = run_for_test(["crit", fx("crit_x3.txt"), "--degree-bound", "6"])
    assert code == 0
    assert "dim H0 = 2 (stabilized)" in out
    assert "H-1 = 0" in out
    code, out = run_for_test(["crit", fx("crit_x3_plus_y3.txt"), "--degree-bound", "6"])
    assert code == 0 and "dim H0 = 4 (stabilized)" in out


def test_derived_quotient_commands():
    code, out = run_for_test(["derived-quotient", fx("derived_quotient_translation.json")])
    assert code == 0 and "H^0" in out
    code, out = run_for_test(["derived-quotient", fx("derived_quotient_euler.json")])
    assert code == 0


def test_negative_control_broken_jacobi():
    code, out = run_for_test(["lie-check", fx("broken_jacobi.json")])
    assert code == 1
    assert "Jacobi" in out
    assert "(" in out   # the witnessing triple is named


def test_negative_control_broken_d_squared():
    code, out = run_for_test(["cohomology", fx("broken_d_squared.json")])
    assert code == 2
    assert "square" in out and "degree 0" in out


def test_negative_control_noncommuting_square():
    code, out = run_for_test(["check-lift", fx("noncommuting_square.json")])
    assert code == 2
    assert "commute" in out and "degree" in out


def test_missing_file_and_bad_json():
    code, out = run_for_test(["cohomology", "/nonexistent/file.json"])
    assert code == 2 and "cannot read" in out
    code, out = run_for_test(["pbw", fx("crit_x3.txt")])
    assert code == 2 and "JSON" in out


def test_machine_reports_are_json_and_deterministic():
    args = ["cohomology", fx("cone_identity.json"), "--format", "machine"]
    code1, out1 = run_for_test(args)
    code2, out2 = run_for_test(args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["command"] == "cohomology"
    assert doc["pass"] is True
    assert len(doc["input_digest"]) == 64
    # emitted cohomology objects re-parse under the input grammar
    for v in doc["results"]["cohomology"].values():
        rec.filt_object_from_record(v)


def test_machine_lift_re_parses():
    code, out = run_for_test(["check-lift", fx("lift_square.json"), "--format", "machine"])
    assert code == 0
    doc = json.loads(out)
    lift = rec.chain_map_from_record(doc["results"]["lift"])
    assert lift.components


def test_crit_machine_output_is_deterministic():
    code1, out1 = run_for_test(["crit", fx("crit_x3.txt"), "--format", "machine",
                                "--degree-bound", "4"])
    code2, out2 = run_for_test(["crit", fx("crit_x3.txt"), "--format", "machine",
                                "--degree-bound", "4"])
    assert code1 == code2 == 0 and out1 == out2
    doc = json.loads(out1)
    assert doc["options"]["degree_bound"] == 4


def test_selftest_runs_green_and_seed_override_is_deterministic():
    code1, out1 = run_for_test(["selftest", "--seed", "7", "--format", "machine"])
    code2, out2 = run_for_test(["selftest", "--seed", "7", "--format", "machine"])
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["results"]["seed"] == 7
    assert all(s["pass"] for s in doc["results"]["suites"])
    assert len(doc["results"]["suites"]) == 12
