import json
import subprocess
import sys

import pytest

from nihoapn import reports
from nihoapn.cli import main
from nihoapn.closed_forms import verify_theorems
from nihoapn.survey import survey_niho


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- serialization --

def test_prediction_roundtrip():
    r = verify_theorems(3, 2)
    d = json.loads(reports.dumps(reports.prediction_to_dict(r)))
    assert reports.prediction_from_dict(d) == r


def test_survey_roundtrip():
    r = survey_niho(3, shifts=True)
    d = json.loads(reports.dumps(reports.survey_to_dict(r)))
    assert d["schema_version"] == reports.SCHEMA_VERSION
    assert reports.survey_from_dict(d) == r


def test_survey_csv_columns():
    lines = reports.survey_csv(survey_niho(2)).splitlines()
    assert lines[0] == "s,d,delta,locally_apn,in_theorem_orbit"
    assert lines[2] == "2,7,4,1,1"


def test_spectra_are_sorted_pairs():
    d = reports.ds_to_dict(verify_theorems(2, 1).actual_ds)
    assert d["omega"] == [[0, 9], [2, 6], [4, 1]]


# -- spectrum --

def test_spectrum_niho_mode(capsys):
    code, out, _ = run(capsys, "spectrum", "--m", "3", "--k", "2")
    rep = json.loads(out)
    assert code == 0
    assert rep["prediction"]["match_ds"] and rep["prediction"]["match_bs"]
    assert rep["niho"]["s"] == 2 and rep["permutation"] is False


def test_spectrum_raw_mode(capsys):
    code, out, _ = run(capsys, "spectrum", "--n", "4", "--d", "7")
    rep = json.loads(out)
    assert code == 0
    assert rep["diff_spectrum"]["delta"] == 4
    assert rep["boom_spectrum"]["beta"] == 6
    assert rep["locally_apn"] is True


def test_boomerang_alias(capsys):
    _, a, _ = run(capsys, "boomerang", "--n", "4", "--d", "7")
    _, b, _ = run(capsys, "spectrum", "--n", "4", "--d", "7")
    assert a == b


@pytest.mark.parametrize("argv", [
    ["spectrum", "--n", "4", "--d", "0"],
    ["spectrum", "--m", "3", "--k", "1"],
    ["spectrum", "--n", "4"],
    ["spectrum", "--n", "4", "--d", "7", "--m", "2"],
    ["spectrum", "--n", "4", "--d", "7", "--modulus", "11"],
    ["spectrum", "--n", "4", "--d", "7", "--jobs", "0"],
])
def test_spectrum_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in json.loads(err.strip().splitlines()[-1])


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--format", "xml"])
    assert exc.value.code == 2
    assert json.loads(capsys.readouterr().err)["error"]["type"] == "usage"


def test_spectrum_formats(capsys):
    _, csv_out, _ = run(capsys, "spectrum", "--n", "4", "--d", "7", "--format", "csv")
    assert csv_out.splitlines()[0] == "table,value,count"
    assert "bct,6,2" in csv_out
    _, table, _ = run(capsys, "spectrum", "--m", "2", "--k", "1", "--format", "table")
    assert "delta = 4, beta = 6" in table and "match_bs = True" in table


def test_spectrum_custom_modulus(capsys):
    code, out, _ = run(capsys, "spectrum", "--m", "3", "--k", "2", "--modulus", "49")
    rep = json.loads(out)
    assert code == 0 and rep["field"]["modulus"] == "0x49"


def test_spectrum_jobs_invariant(capsys):
    _, a, _ = run(capsys, "spectrum", "--m", "4", "--k", "1")
    _, b, _ = run(capsys, "spectrum", "--m", "4", "--k", "1", "--jobs", "3")
    assert a == b


# -- survey --

def test_survey_m2(capsys):
    code, out, err = run(capsys, "survey", "--m", "2")
    assert code == 0
    assert json.loads(out)["covered"] is True
    assert "covered = true" in err


def test_survey_m4(capsys):
    code, out, _ = run(capsys, "survey", "--m", "4")
    assert code == 0 and json.loads(out)["covered"] is True


def test_survey_range_error(capsys):
    code, _, err = run(capsys, "survey", "--m", "11")
    assert code == 2
    assert json.loads(err)["error"]["type"] == "SurveyError"


def test_survey_writes_files(tmp_path, capsys):
    out = tmp_path / "s3"
    code, _, _ = run(capsys, "survey", "--m", "3", "--out", str(out))
    assert code == 0
    rep = json.loads((tmp_path / "s3.json").read_text())
    assert rep["covered"] is True and "timing" not in rep
    assert (tmp_path / "s3.csv").read_text().startswith("s,d,delta")
    man = json.loads((tmp_path / "s3.manifest.json").read_text())
    assert man["field_moduli_used"] == {"6": "0x43"}
    assert man["wall_clock"] >= 0
    assert man["command_line"].startswith("nihoapn survey")


def test_survey_range_of_m(tmp_path, capsys):
    code, _, _ = run(capsys, "survey", "--m", "2", "--max-m", "3", "--out", str(tmp_path / "r"))
    assert code == 0
    assert (tmp_path / "r_m2.json").exists() and (tmp_path / "r_m3.csv").exists()


def test_reports_byte_identical(tmp_path, capsys):
    for tag, jobs in (("a", "1"), ("b", "2")):
        run(capsys, "survey", "--m", "4", "--jobs", jobs, "--out", str(tmp_path / tag))
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


# -- lemmas --

def test_lemmas_only_lemma4(capsys):
    code, out, _ = run(capsys, "lemmas", "--only", "lemma4", "--samples", "3")
    rep = json.loads(out)
    assert code == 0
    assert [(r["name"], r["passed"], r["failed"]) for r in rep["results"]] == [("lemma4", 3, 0)]


def test_lemmas_zero_samples_warns(capsys):
    code, out, err = run(capsys, "lemmas", "--samples", "0", "--only", "lemma4", "--only", "lemma5")
    assert code == 0
    assert json.loads(out)["vacuous"] is True
    assert "warning" in err


def test_lemmas_default_run(capsys):
    code, out, _ = run(capsys, "lemmas", "--seed", "1", "--samples", "10000")
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    names = {r["name"] for r in rep["results"]}
    assert {"lemma1", "lemma2", "lemma3", "lemma4", "lemma5"} <= names
    assert {"phi(m=4,k=1)", "phi(m=4,k=3)"} <= names


def test_lemmas_phi_and_table(capsys):
    code, out, _ = run(capsys, "lemmas", "--only", "phi", "--fields", "4,6", "--format", "table")
    assert code == 0
    assert "phi(m=3,k=2)" in out


def test_lemmas_bad_selector(capsys):
    code, _, _ = run(capsys, "lemmas", "--only", "lemma9")
    assert code == 2


def test_lemmas_seed_reproducible(tmp_path, capsys):
    for tag in "ab":
        run(capsys, "lemmas", "--samples", "200", "--fields", "6", "--out", str(tmp_path / tag))
    assert (tmp_path / "a").read_bytes() == (tmp_path / "b").read_bytes()
    assert json.loads((tmp_path / "a.manifest.json").read_text())["seed"] == 1


# -- verify / remark4 --

def test_verify_grid(capsys):
    code, out, _ = run(capsys, "verify", "--max-m", "4", "--jobs", "2")
    rep = json.loads(out)
    assert code == 0 and rep["all_match"]
    assert {(c["params"]["m"], c["params"]["k"]) for c in rep["cases"]} >= {(2, 1), (3, 2), (4, 1), (4, 3)}


def test_verify_single_csv(capsys):
    code, out, _ = run(capsys, "verify", "--m", "5", "--k", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "5,2,20,621,True,True"


def test_remark4_cmd(capsys):
    code, out, _ = run(capsys, "remark4", "--max-m", "6")
    rep = json.loads(out)
    assert code == 0 and rep["none_locally_apn"]
    assert [4, 2] in [[i["m"], i["k"]] for i in rep["instances"]]


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "nihoapn.cli", "spectrum", "--n", "4", "--d", "7", "--format", "table"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "delta = 4, beta = 6" in proc.stdout
