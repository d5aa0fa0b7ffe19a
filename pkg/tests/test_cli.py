import json
import struct

import pytest

from gameofprimes.cli import main


def invoke(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def jsonl(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_simulate_text(capsys):
    code, out, _ = invoke(capsys, "simulate", "--dim", "3", "--days", "5")
    assert code == 0
    assert "*v* = excited" in out
    day1 = out.split("Day 1")[1].split("Day 2")[0]
    assert "*6* *5* *4*" in day1
    assert out.count("Day ") == 6


def test_simulate_json(capsys):
    code, out, _ = invoke(capsys, "simulate", "--dim", "5", "--start", "51", "--days", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["manifest"]["command"] == "simulate"
    assert doc["manifest"]["params"] == {"dim": 5, "start": 51, "step": 1, "days": 3}
    assert doc["results"][1] == {"day": 1, "excited_values": [69], "count": 1}


def test_simulate_single_cell(capsys):
    code, out, _ = invoke(capsys, "simulate", "--dim", "1", "--days", "0", "--format", "jsonl")
    recs = jsonl(out)
    assert code == 0 and len(recs) == 1
    assert recs[0]["count"] == 0 and recs[0]["manifest"]["params"]["dim"] == 1


def test_simulate_plot(capsys, tmp_path):
    png = tmp_path / "trace.png"
    code, _, _ = invoke(capsys, "simulate", "--dim", "3", "--days", "5", "--plot", str(png))
    assert code == 0 and png.read_bytes()[:4] == b"\x89PNG"


@pytest.mark.parametrize(
    "args",
    [
        ("simulate", "--dim", "0"),
        ("simulate", "--days", "3"),
        ("simulate", "--dim", "3", "--days", "-1"),
        ("cycle", "--dim", "3", "--max-days", "0"),
        ("quad", "--dims", "x..y"),
        ("quad", "--dim", "5", "--dims", "5..7"),
        ("nosuchcommand",),
        ("verify", "--theorem", "9.9", "--dim", "3"),
    ],
)
def test_usage_errors_exit_1(capsys, args):
    assert invoke(capsys, *args)[0] == 1


@pytest.mark.parametrize("dim, lam", [(3, 2), (9, 120), (2, 0)])
def test_cycle(capsys, dim, lam):
    code, out, _ = invoke(capsys, "cycle", "--dim", str(dim))
    assert code == 0 and f"period_lambda={lam}" in out


def test_cycle_budget(capsys):
    code, out, _ = invoke(capsys, "cycle", "--dim", "12", "--max-days", "100", "--format", "json")
    assert code == 2
    assert json.loads(out)["results"][0] == {"dim": 12, "status": "budget_exceeded", "days_explored": 100}


def test_cycle_text_and_json_agree(capsys):
    _, text, _ = invoke(capsys, "cycle", "--dim", "6")
    _, js, _ = invoke(capsys, "cycle", "--dim", "6", "--format", "json")
    rec = json.loads(js)["results"][0]
    assert f"tail_mu={rec['tail_mu']}" in text and f"period_lambda={rec['period_lambda']}" in text


def test_table(capsys, tmp_path):
    png = tmp_path / "t.png"
    code, out, _ = invoke(capsys, "table", "--dims", "1..10", "--format", "json", "--plot", str(png))
    rows = json.loads(out)["results"]
    assert code == 0
    assert [r["dim"] for r in rows] == list(range(1, 11))
    assert [r["period_lambda"] for r in rows] == [0, 0, 2, 4, 12, 44, 8, 16, 120, 8]
    assert all(r["match"] for r in rows)
    assert png.exists()


def test_table_single_and_budget(capsys):
    code, out, _ = invoke(capsys, "table", "--dims", "1..1", "--jobs", "1", "--format", "jsonl")
    assert code == 0 and jsonl(out)[0]["period_lambda"] == 0
    code, out, _ = invoke(capsys, "table", "--dims", "3,12", "--max-days", "50", "--jobs", "2", "--format", "jsonl")
    rows = jsonl(out)
    assert code == 2
    assert [r["status"] for r in rows] == ["ok", "budget_exceeded"]


def test_quad(capsys):
    code, out, _ = invoke(capsys, "quad", "--dims", "5..13", "--mode", "arithmetic", "--format", "json")
    xs = {r["dim"]: r["x"] for r in json.loads(out)["results"]}
    assert xs == {5: 12, 6: None, 7: 12, 8: None, 9: None, 10: None, 11: 18, 12: None, 13: 18}
    code, out, _ = invoke(capsys, "quad", "--dim", "5", "--mode", "grid")
    assert code == 0 and out.split() == ["5", "8"]
    code, out, _ = invoke(capsys, "quad", "--dim", "3", "--mode", "grid")
    assert out.split() == ["3", "—"]


def test_equiv(capsys):
    code, out, _ = invoke(capsys, "equiv", "--dim", "5", "--start", "51", "--bound", "300", "--format", "json")
    rec = json.loads(out)["results"][0]
    assert rec["starts"] == [261]
    assert rec["gaps"] == [3, 6, 2, 6, 4, 2]
    code, out, _ = invoke(capsys, "equiv", "--dim", "5", "--start", "51", "--bound", "51")
    assert "(none)" in out


@pytest.mark.parametrize(
    "args, code, status",
    [
        (("--theorem", "4.3", "--dim", "3", "--horizon", "50"), 0, "holds"),
        (("--theorem", "4.2", "--dim", "5"), 0, "holds"),
        (("--theorem", "4.1", "--dim", "2"), 0, "vacuous"),
        (("--theorem", "4.4.1", "--dim", "4"), 3, "failed"),
    ],
)
def test_verify(capsys, args, code, status):
    got, out, _ = invoke(capsys, "verify", *args, "--format", "json")
    assert got == code
    assert json.loads(out)["results"][0]["status"] == status


def test_verify_budget(capsys):
    assert invoke(capsys, "verify", "--theorem", "4.1", "--dim", "12", "--max-days", "10")[0] == 2


def test_music(capsys, tmp_path):
    code, out, _ = invoke(capsys, "music", "--dim", "3", "--days", "5")
    assert code == 0
    assert [line.split(" : ")[2].split()[0] for line in out.splitlines()] == ["Fa", "Ti", "La", "Re", "La"]
    wav = tmp_path / "out.wav"
    code, _, _ = invoke(capsys, "music", "--dim", "3", "--days", "5", "--wav", str(wav), "--plot", str(tmp_path / "n.png"))
    data = wav.read_bytes()
    assert code == 0
    assert struct.unpack("<I", data[40:44])[0] == 5 * 22050 * 2


def test_music_silent(capsys):
    code, out, _ = invoke(capsys, "music", "--dim", "2", "--days", "3", "--format", "json")
    assert [r["note"] for r in json.loads(out)["results"]] == ["Do", "Do", "Do"]


def test_music_io_error(capsys, tmp_path):
    code, _, err = invoke(capsys, "music", "--dim", "3", "--wav", str(tmp_path / "missing" / "x.wav"))
    assert code == 4 and "cannot write" in err


def test_claim_and_census(capsys):
    code, out, _ = invoke(capsys, "claim", "--p-max", "500", "--format", "json")
    assert code == 0 and json.loads(out)["results"][0]["failures"] == []
    code, out, _ = invoke(capsys, "census")
    assert "32 of 49 odd dimensions" in out
