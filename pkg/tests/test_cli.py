"""End-to-end command line checks: exit codes, envelopes, determinism."""

import csv
import io
import json
import subprocess
import sys

import pytest

from strongorient.bounds import failure_bound
from strongorient.cli import main
from strongorient.exposure import catalan


def run_cli(capsys, argv):
    rc = main(argv)
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def run_json(capsys, argv):
    rc, out, err = run_cli(capsys, argv)
    assert rc == 0, err
    return json.loads(out)


def test_no_subcommand_is_usage_error(capsys):
    assert main([]) == 2


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == 2


def test_bad_seed_is_usage_error(capsys):
    assert main(["census", "--gen", "complete:3", "--seed", "-1"]) == 2
    assert main(["census", "--gen", "complete:3", "--seed", str(1 << 64)]) == 2


def test_census_envelope(capsys):
    doc = run_json(capsys, ["census", "--gen", "complete:3"])
    assert doc["schema_version"] == "1.0.0"
    assert doc["subcommand"] == "census"
    assert doc["seed"] == 0
    rep = doc["report"]
    assert rep["total"] == 8
    assert rep["strong"] == 2
    assert rep["sink_free"] == 2
    assert rep["eulerian"] == 2
    prov = doc["graph_provenance"]
    assert prov["source"] == "genspec"
    assert prov["family"] == "complete"
    assert prov["n"] == 3 and prov["m"] == 3
    assert len(prov["sha256"]) == 64


def test_cheeger_values_through_cli(capsys):
    doc = run_json(capsys, ["cheeger", "--gen", "complete:4"])
    rep = doc["report"]
    assert (rep["phi_num"], rep["phi_den"]) == (2, 3)
    assert rep["argmin_members"] == [0, 1]
    doc = run_json(capsys, ["cheeger", "--gen", "cycle:4"])
    assert (doc["report"]["phi_num"], doc["report"]["phi_den"]) == (1, 2)


def test_spectrum_c4(capsys):
    doc = run_json(capsys, ["spectrum", "--gen", "cycle:4"])
    eig = doc["report"]["eigenvalues"]
    assert eig == pytest.approx([0.0, 1.0, 1.0, 2.0], abs=1e-8)


def test_generate_then_census_roundtrip(capsys, tmp_path):
    rc, out, _ = run_cli(capsys, ["generate", "--gen", "cycle:4", "--seed", "5"])
    assert rc == 0
    assert out.startswith("# cycle:4 seed=5\n")
    path = tmp_path / "c4.graph"
    path.write_text(out)
    doc = run_json(capsys, ["census", "--graph", str(path)])
    assert doc["report"]["strong"] == 2
    prov = doc["graph_provenance"]
    assert prov["source"] == "file"
    assert prov["path"].endswith("c4.graph")
    assert len(prov["sha256"]) == 64


def test_generate_seed_changes_er_output(capsys):
    rc, out1, _ = run_cli(capsys, ["generate", "--gen", "er:12,0.5", "--seed", "1"])
    rc2, out2, _ = run_cli(capsys, ["generate", "--gen", "er:12,0.5", "--seed", "2"])
    assert rc == rc2 == 0
    assert out1 != out2


def test_same_argv_byte_identical(capsys):
    argv = ["orient-mc", "--gen", "regular:12,3", "--trials", "500", "--seed", "9"]
    _, out1, _ = run_cli(capsys, argv)
    _, out2, _ = run_cli(capsys, argv)
    assert out1 == out2


@pytest.mark.parametrize(
    "argv",
    [
        ["orient-mc", "--gen", "regular:12,3", "--trials", "2000", "--seed", "4"],
        ["census", "--gen", "complete:5"],
        ["sinks", "--gen", "cycle:6", "--trials", "1500", "--seed", "2"],
    ],
)
def test_threads_do_not_change_bytes(capsys, argv):
    _, out1, _ = run_cli(capsys, argv + ["--threads", "1"])
    _, out8, _ = run_cli(capsys, argv + ["--threads", "8"])
    assert out1 == out8


def test_out_flag_writes_same_bytes(capsys, tmp_path):
    argv = ["census", "--gen", "complete:4"]
    _, out, _ = run_cli(capsys, argv)
    target = tmp_path / "census.json"
    rc, silent, _ = run_cli(capsys, argv + ["--out", str(target)])
    assert rc == 0
    assert silent == ""
    assert target.read_text() == out


def test_output_ends_with_newline(capsys):
    _, out, _ = run_cli(capsys, ["exposure", "--k", "5"])
    assert out.endswith("\n")


def test_csv_only_for_tabular_subcommands(capsys):
    rc, _, err = run_cli(capsys, ["census", "--gen", "complete:3", "--format", "csv"])
    assert rc == 2
    doc = json.loads(err)
    assert doc["subcommand"] == "census"
    assert "csv" in doc["error"]


def test_bounds_table_csv_parses(capsys):
    rc, out, _ = run_cli(
        capsys,
        ["bounds-table", "--n", "64", "--delta", "6", "--format", "csv"],
    )
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["section", "k", "bound"]
    sections = {r[0] for r in rows[1:]}
    assert sections == {"regime1", "regime2", "regime1_sum", "regime2_sum", "total"}
    total = [float(r[2]) for r in rows[1:] if r[0] == "total"]
    parts = [float(r[2]) for r in rows[1:] if r[0].endswith("_sum")]
    assert total[0] == pytest.approx(sum(parts))


def test_bounds_table_json(capsys):
    # delta >= (1+alpha) log2 n per the theorem, so the total obeys the
    # closed-form bound
    doc = run_json(capsys, ["bounds-table", "--n", "1024", "--delta", "22"])
    assert doc["graph_provenance"] is None
    rep = doc["report"]
    assert rep["n"] == 1024 and rep["delta"] == 22
    assert rep["total"] == pytest.approx(rep["regime1_sum"] + rep["regime2_sum"])
    assert rep["total"] <= failure_bound(1024, 1.0) + 1e-12


def test_exposure_count_large_k(capsys):
    doc = run_json(capsys, ["exposure", "--k", "20", "--count"])
    assert doc["report"]["count"] == catalan(19)


def test_exposure_list(capsys):
    doc = run_json(capsys, ["exposure", "--k", "4", "--list"])
    rep = doc["report"]
    assert rep["count"] == 5
    assert len(rep["sequences"]) == 5
    assert all(sum(s["pi"]) == 3 for s in rep["sequences"])


def test_exposure_list_csv(capsys):
    rc, out, _ = run_cli(capsys, ["exposure", "--k", "4", "--list", "--format", "csv"])
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "pi", "leaves", "ones"]
    assert len(rows) == 6


def test_exposure_lemma(capsys):
    doc = run_json(capsys, ["exposure", "--k", "7", "--lemma"])
    checks = doc["report"]["checks"]
    assert len(checks) == catalan(6)
    assert all(c["ok1"] and c["ok2"] for c in checks)


def test_exposure_list_beyond_guard(capsys):
    rc, _, err = run_cli(capsys, ["exposure", "--k", "20", "--list"])
    assert rc == 1
    assert "use --count" in json.loads(err)["error"]


def test_theorem_check_exact_route(capsys):
    doc = run_json(capsys, ["theorem-check", "--gen", "complete:16"])
    rep = doc["report"]
    assert rep["spectral_route"] is False
    assert rep["n"] == 16
    # K16: degree hypothesis holds, Cheeger hypothesis fails at this size
    assert rep["degree_ok"] is True
    assert rep["cheeger_ok"] is False
    assert rep["phi"] == pytest.approx(8 / 15)
    assert rep["cheeger_threshold"] == pytest.approx(2.05)
    assert {"failure_bound", "caveat", "delta"} <= rep.keys()


def test_theorem_check_spectral_route(capsys):
    doc = run_json(
        capsys,
        ["theorem-check", "--gen", "regular:16,4", "--route", "spectral", "--seed", "2"],
    )
    assert doc["report"]["spectral_route"] is True


def test_sieve_sandwich_on_matching_shape(capsys):
    doc = run_json(capsys, ["sieve", "--gen", "regular:16,4", "--k", "2", "--seed", "1"])
    rep = doc["report"]
    assert rep["s_k_num"] == 11 and rep["s_k_den"] == 32
    assert rep["upper"] == pytest.approx(120 / 256)
    assert rep["lower"] is not None


def test_sieve_term_on_other_shapes(capsys):
    doc = run_json(capsys, ["sieve", "--gen", "cycle:6", "--k", "2"])
    rep = doc["report"]
    assert rep["upper"] is None and rep["lower"] is None
    assert rep["s_k_den"] != 0


def test_example1_smoke(capsys):
    doc = run_json(capsys, ["example1", "--t", "3", "--trials", "150", "--seed", "6"])
    rep = doc["report"]
    assert rep["n"] == 8 and rep["trials"] == 150
    assert len(rep["blocks"]) == 2
    prov = doc["graph_provenance"]
    assert prov["source"] == "resampled_genspec"
    assert prov["spec"] == "regular:8,3"


def test_guard_errors_exit_1(capsys):
    rc, _, err = run_cli(capsys, ["cheeger", "--gen", "complete:30"])
    assert rc == 1
    assert "exceeds exact-Cheeger guard (24)" in json.loads(err)["error"]
    rc, _, err = run_cli(capsys, ["census", "--gen", "complete:8"])
    assert rc == 1  # m = 28 over the census guard


def test_malformed_genspec_exit_2(capsys):
    rc, _, err = run_cli(capsys, ["census", "--gen", "complete"])
    assert rc == 2
    doc = json.loads(err)
    assert doc["schema_version"] == "1.0.0"
    rc, _, _ = run_cli(capsys, ["census", "--gen", "nosuch:4"])
    assert rc == 2
    rc, _, _ = run_cli(capsys, ["census", "--gen", "cycle:three"])
    assert rc == 2


def test_missing_graph_file_exit_1(capsys):
    rc, _, err = run_cli(capsys, ["census", "--graph", "/nonexistent/g.txt"])
    assert rc == 1
    assert json.loads(err)["subcommand"] == "census"


def test_error_output_is_single_line(capsys):
    rc, _, err = run_cli(capsys, ["cheeger", "--gen", "complete:30"])
    assert rc == 1
    assert err.count("\n") == 1 and err.endswith("\n")


def test_generator_guard_exit_1(capsys):
    rc, _, err = run_cli(capsys, ["census", "--gen", "regular:5,3"])
    assert rc == 1
    assert "must be even" in json.loads(err)["error"]


def test_module_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "strongorient", "census", "--gen", "complete:3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["report"]["strong"] == 2
