import json
import math
import subprocess
import sys

from click.testing import CliRunner

from maxdiv.cli import cli

runner = CliRunner()


def invoke(*args, env=None):
    return runner.invoke(cli, list(args), env=env)


def test_fairness_csv_contract():
    res = invoke("fairness", "--grid", "128")
    assert res.exit_code == 0
    lines = res.stdout.splitlines()
    assert lines[0] == "x,alpha1,alpha2,alpha3,sd,mad,min_piece"
    assert len(lines) == 129


def test_fairness_summary_contents():
    res = invoke("fairness", "--grid", "16")
    assert res.exit_code == 0
    summary = res.stderr
    pi_third = f"{math.pi / 3:.10f}"
    pi_sixth = f"{math.pi / 6:.10f}"
    assert f"sd_min: x_star={pi_third}" in summary
    assert f"alpha2={pi_sixth}" in summary
    assert f"alpha1={0.0:.10f}" in summary
    assert "mad_global: x_star=0.9697640209" in summary
    assert "mad_local: x_star=0.4506092598" in summary
    assert "maximin:" in summary


def test_fairness_json_schema():
    res = invoke("fairness", "--grid", "8", "--format", "json")
    assert res.exit_code == 0
    payload = json.loads(res.stdout)
    assert set(payload) == {"params", "results", "warnings", "summary"}
    assert len(payload["results"]) == 8
    assert list(payload["results"][0]) == [
        "x", "alpha1", "alpha2", "alpha3", "sd", "mad", "min_piece",
    ]
    assert payload["summary"]["sd_min"]["at_boundary"] is True
    assert payload["summary"]["mad_global"]["x_star"] == 0.9697640209
    assert payload["warnings"] == []


def test_moments_exact_anchor():
    res = invoke("moments", "--n", "2", "--p", "0.5", "--dim", "2", "--method", "exact")
    assert res.exit_code == 0
    header, row = res.stdout.splitlines()
    fields = dict(zip(header.split(","), row.split(",")))
    assert fields["mean"] == "2.2500000000"
    assert fields["variance"] == "1.1875000000"
    assert fields["second_moment"] == "6.2500000000"
    assert fields["method"] == "exact_enumeration"


def test_moments_all_cuts_succeed():
    res = invoke("moments", "--n", "3", "--p", "1")
    assert res.exit_code == 0
    row = res.stdout.splitlines()[1].split(",")
    header = res.stdout.splitlines()[0].split(",")
    fields = dict(zip(header, row))
    assert fields["mean"] == "7.0000000000"
    assert fields["variance"] == "0.0000000000"


def test_moments_exact_and_closed_agree_on_stdout():
    args = ("--n", "20", "--p", "0.3", "--dim", "3")
    exact = invoke("moments", *args, "--method", "exact").stdout.splitlines()[1].split(",")
    closed = invoke("moments", *args, "--method", "closed").stdout.splitlines()[1].split(",")
    # identical printed numbers everywhere except the method tag
    for idx, name in enumerate("n,p,dim,method,mean,variance,second_moment,window_center,window_scale".split(",")):
        if name == "method":
            continue
        assert exact[idx] == closed[idx], name


def test_moments_closed_rejects_high_dimension():
    res = invoke("moments", "--n", "5", "--p", "0.5", "--dim", "4", "--method", "closed")
    assert res.exit_code != 0
    assert "d in {2, 3}" in res.stderr


def test_moments_asymptotic_omits_second_moment():
    res = invoke("moments", "--n", "100", "--p", "0.5", "--method", "asymptotic")
    assert res.exit_code == 0
    fields = dict(zip(*[line.split(",") for line in res.stdout.splitlines()]))
    assert fields["second_moment"] == ""
    assert fields["method"] == "asymptotic"


def test_clt_margin_matches_formula():
    res = invoke("clt", "--n", "1000", "--p", "0.25", "--samples", "10", "--seed", "3")
    assert res.exit_code == 0
    header, row = [line.split(",") for line in res.stdout.splitlines()]
    fields = dict(zip(header, row))
    margin = 0.25 * 0.75 ** (1 / 3) * 1000 ** (1 / 9)
    assert fields["margin"] == f"{margin:.10f}"
    assert fields["in_clt_regime"] == "false"


def test_clt_byte_identical_runs():
    args = ("clt", "--n", "500", "--p", "0.5", "--samples", "2000", "--seed", "9")
    assert invoke(*args).stdout == invoke(*args).stdout


def test_clt_rejects_degenerate_p():
    res = invoke("clt", "--n", "100", "--p", "1.0", "--samples", "10")
    assert res.exit_code != 0
    assert "degenerate" in res.stderr


def test_oracle_three_chords():
    res = invoke("oracle", "--n", "3", "--seeds", "0,1,2")
    assert res.exit_code == 0
    rows = [line.split(",") for line in res.stdout.splitlines()[1:]]
    assert all(row[2] == "7" and row[3] == "7" and row[4] == "pass" for row in rows)


def test_oracle_single_chord():
    res = invoke("oracle", "--n", "1", "--seeds", "5")
    assert res.exit_code == 0
    assert res.stdout.splitlines()[1] == "1,5,2,2,pass"


def test_oracle_seven_chords_twenty_seeds():
    seeds = ",".join(str(s) for s in range(20))
    res = invoke("oracle", "--n", "7", "--seeds", seeds)
    assert res.exit_code == 0
    rows = [line.split(",") for line in res.stdout.splitlines()[1:]]
    assert len(rows) == 20
    assert all(row[3] == "29" and row[4] == "pass" for row in rows)


def test_oracle_rejects_big_n():
    res = invoke("oracle", "--n", "11")
    assert res.exit_code != 0


def test_oracle_rejects_bad_seeds():
    res = invoke("oracle", "--n", "3", "--seeds", "1,zebra")
    assert res.exit_code != 0
    assert "comma-separated" in res.stderr


def test_out_writes_file(tmp_path):
    target = tmp_path / "table.csv"
    res = invoke("fairness", "--grid", "4", "--out", str(target))
    assert res.exit_code == 0
    lines = target.read_text().splitlines()
    assert lines[0] == "x,alpha1,alpha2,alpha3,sd,mad,min_piece"
    assert len(lines) == 5


def test_out_failure_is_diagnosed(tmp_path):
    res = invoke("moments", "--n", "2", "--p", "0.5", "--out", str(tmp_path / "no" / "dir.csv"))
    assert res.exit_code != 0
    assert "cannot write" in res.stderr


def test_precision_flag():
    res = invoke("moments", "--n", "2", "--p", "0.5", "--precision", "3")
    assert ",2.250,1.188,6.250," in res.stdout.splitlines()[1]


def test_unknown_flag_fails_fast():
    res = invoke("fairness", "--no-such-flag")
    assert res.exit_code != 0
    assert "no-such-flag" in res.stderr or "Usage" in res.stderr


def test_thread_cap_does_not_change_output():
    args = ("clt", "--n", "200", "--p", "0.5", "--samples", "1000", "--seed", "4")
    single = invoke(*args, env={"MAXDIV_THREADS": "1"})
    quad = invoke(*args, env={"MAXDIV_THREADS": "4"})
    assert single.stdout == quad.stdout
    assert single.exit_code == quad.exit_code == 0


def test_thread_cap_validated():
    res = invoke("fairness", "--grid", "4", env={"MAXDIV_THREADS": "0"})
    assert res.exit_code != 0
    res = invoke("fairness", "--grid", "4", env={"MAXDIV_THREADS": "many"})
    assert res.exit_code != 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "maxdiv", "oracle", "--n", "2", "--seeds", "0"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "2,0,4,4,pass"
