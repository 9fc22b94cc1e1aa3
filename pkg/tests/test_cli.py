import json

import pytest

from picard_lpoly import cli, lifting, pipeline
from picard_lpoly.curve import PrimeClass
from picard_lpoly.records import PrimeRecord

L7_C1 = ["1", "5", "21", "70", "147", "245", "343"]


def run_cli(*args):
    return cli.main(list(args))


def test_compute_records_jsonl(tmp_path, cached_oracle, c1):
    out = tmp_path / "c1.jsonl"
    assert run_cli(
        "compute", "--curve", "0,1,1", "--min-prime", "5", "--max-prime", "100",
        "--out", str(out),
    ) == 0
    lines = out.read_text().splitlines()
    recs = [PrimeRecord.from_json_line(line) for line in lines]
    assert [r.p for r in recs] == [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                   47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
    by_p = {r.p: r for r in recs}
    assert by_p[5].klass is PrimeClass.INERT and by_p[5].lpoly is not None
    assert by_p[7].klass is PrimeClass.SPLIT_NON_ORDINARY and by_p[7].lpoly is None
    assert by_p[13].method == "naive"  # split ordinary below 53
    assert by_p[61].method == "cm_lift_split"
    for rec in recs:
        if rec.lpoly is not None:
            assert rec.lpoly.coeffs == cached_oracle(c1, rec.p).coeffs


def test_compute_naive_fallback_covers_nonordinary(tmp_path):
    out = tmp_path / "c1f.jsonl"
    assert run_cli(
        "compute", "--curve", "0,1,1", "--min-prime", "5", "--max-prime", "10",
        "--naive-fallback", "7", "--out", str(out),
    ) == 0
    recs = [PrimeRecord.from_json_line(s) for s in out.read_text().splitlines()]
    rec7 = [r for r in recs if r.p == 7][0]
    assert rec7.method == "naive"
    assert rec7.lpoly.as_strings() == L7_C1


def test_compute_bad_prime_record(tmp_path):
    out = tmp_path / "bad.jsonl"
    assert run_cli(
        "compute", "--curve", "0,1,1", "--min-prime", "229", "--max-prime", "229",
        "--out", str(out),
    ) == 0
    recs = [PrimeRecord.from_json_line(s) for s in out.read_text().splitlines()]
    assert len(recs) == 1
    assert recs[0].klass is PrimeClass.BAD and recs[0].lpoly is None
    assert recs[0].method == "skipped_bad"


def test_compute_csv_round_trip(tmp_path):
    out = tmp_path / "c1.csv"
    assert run_cli(
        "compute", "--curve", "0,1,1", "--min-prime", "5", "--max-prime", "60",
        "--format", "csv", "--out", str(out),
    ) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "p,class,method,a0,a1,a2,a3,a4,a5,a6"
    row = dict(zip(lines[0].split(","), lines[1].split(",")))
    assert row["p"] == "5" and row["class"] == "inert"
    assert row["a6"] == "125"


def test_jsonl_round_trip_large_coefficients(tmp_path):
    # a6 = p^3 far beyond 2^64 must survive serialization exactly
    out = tmp_path / "big.jsonl"
    p = 2971  # split ordinary for C1
    assert run_cli(
        "compute", "--curve", "0,1,1", "--min-prime", str(p), "--max-prime", str(p),
        "--out", str(out),
    ) == 0
    rec = PrimeRecord.from_json_line(out.read_text().splitlines()[0])
    assert rec.lpoly.coeffs[6] == p**3
    assert rec.to_json_line() == out.read_text().splitlines()[0]


def test_determinism_across_worker_counts(tmp_path):
    outs = []
    for jobs in ("1", "3"):
        path = tmp_path / f"jobs{jobs}.jsonl"
        assert run_cli(
            "compute", "--curve", "0,1,1", "--min-prime", "5", "--max-prime", "400",
            "--jobs", jobs, "--out", str(path),
        ) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_lpoly_single_prime(capsys):
    assert run_cli("lpoly", "--curve", "0,1,1", "--prime", "61") == 0
    obj = json.loads(capsys.readouterr().out.strip())
    assert obj["p"] == 61 and obj["method"] == "cm_lift_split"
    assert obj["L"][1] == "-12"


def test_psi_output(capsys):
    assert run_cli("psi", "--curve", "0,0,1") == 0
    got = json.loads(capsys.readouterr().out.strip())
    assert got == [0, -432, 0, 0, 0, 1080, 0, 0, 0, 1]


def test_stats_output(capsys):
    assert run_cli("stats", "--curve", "0,1,1", "--min-prime", "5",
                   "--max-prime", "100") == 0
    obj = json.loads(capsys.readouterr().out.strip())
    assert obj["counts"]["inert"] + obj["counts"]["split_ordinary"] + obj[
        "counts"
    ]["split_non_ordinary"] + obj["counts"]["bad"] == 23
    assert obj["split_non_ordinary_primes"] == [7, 73]
    assert obj["ordinary_fraction"] == "9/11"


def test_stats_deterministic_across_jobs(capsys):
    lines = []
    for jobs in ("1", "2"):
        assert run_cli("stats", "--curve", "0,1,1", "--min-prime", "5",
                       "--max-prime", "100", "--jobs", jobs) == 0
        lines.append(capsys.readouterr().out)
    assert lines[0] == lines[1]


def test_verify_ok_small_range(capsys):
    assert run_cli("verify", "--curve", "0,1,1", "--min-prime", "5",
                   "--max-prime", "120") == 0


def test_verify_detects_corrupted_lift(monkeypatch, capsys):
    real = lifting.inert_t_mod_2

    def flipped(curve, p):
        return 1 - real(curve, p)

    monkeypatch.setattr(lifting, "inert_t_mod_2", flipped)
    assert run_cli("verify", "--curve", "0,1,1", "--min-prime", "5",
                   "--max-prime", "30") == 1
    err = capsys.readouterr().err
    assert "FAIL" in err


def test_usage_errors_exit_2():
    assert run_cli("compute", "--curve", "0,0,0", "--min-prime", "5",
                   "--max-prime", "10") == 2  # disc 0
    assert run_cli("compute", "--curve", "0,1,1", "--min-prime", "3",
                   "--max-prime", "10") == 2  # range below 5
    assert run_cli("compute", "--curve", "0,1,1", "--min-prime", "50",
                   "--max-prime", "10") == 2  # inverted range
    assert run_cli("verify", "--curve", "0,1,1", "--min-prime", "5",
                   "--max-prime", "20000") == 2  # beyond the verify cap
    assert run_cli("lpoly", "--curve", "1,2", "--prime", "7") == 2  # bad curve arg


def test_records_validate_method_lpoly_pairing(c1):
    from picard_lpoly.lpoly import LPolynomial

    with pytest.raises(ValueError):
        PrimeRecord(7, PrimeClass.BAD, "skipped_bad",
                    LPolynomial(7, (1, 5, 21, 70, 147, 245, 343)))
    with pytest.raises(ValueError):
        PrimeRecord(7, PrimeClass.SPLIT_ORDINARY, "naive", None)
