import os
import subprocess

import pytest

BIN = os.environ.get("SRTK_BIN")

pytestmark = pytest.mark.skipif(not BIN, reason="SRTK_BIN not set")

DEMO_TABLE = """\
token\tio\tioe1\tioe2\tiob1\tiob2\tiobe\tiobes\tfrobes
The\tO\tO\tO\tO\tO\tO\tO\tO
T\tI-protein\tI-protein\tI-protein\tI-protein\tB-protein\tB-protein\tB-protein\tB-protein
Cell\tI-protein\tI-protein\tI-protein\tI-protein\tI-protein\tI-protein\tI-protein\tF-protein
surface\tI-protein\tI-protein\tI-protein\tI-protein\tI-protein\tI-protein\tI-protein\tR-protein
molecule\tI-protein\tE-protein\tE-protein\tI-protein\tI-protein\tE-protein\tE-protein\tE-protein
CD28\tI-protein\tI-protein\tE-protein\tB-protein\tB-protein\tB-protein\tS-protein\tS-protein
binds\tO\tO\tO\tO\tO\tO\tO\tO
To\tO\tO\tO\tO\tO\tO\tO\tO
ligands\tO\tO\tO\tO\tO\tO\tO\tO
On\tO\tO\tO\tO\tO\tO\tO\tO
accessory\tI-cell_type\tI-cell_type\tI-cell_type\tI-cell_type\tB-cell_type\tB-cell_type\tB-cell_type\tB-cell_type
cells\tI-cell_type\tI-cell_type\tE-cell_type\tI-cell_type\tI-cell_type\tE-cell_type\tE-cell_type\tE-cell_type
And\tO\tO\tO\tO\tO\tO\tO\tO
APCs\tI-cell_type\tI-cell_type\tE-cell_type\tI-cell_type\tB-cell_type\tB-cell_type\tS-cell_type\tS-cell_type
,\tO\tO\tO\tO\tO\tO\tO\tO
"""


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr or proc.stdout
    return proc


def test_demo_table():
    assert run("demo-table1").stdout == DEMO_TABLE


def test_unknown_subcommand_exits_2():
    run("frobnicate", expect=2)


def test_missing_file_exits_1():
    proc = subprocess.run(
        [BIN, "stats", "--scheme", "iob2", "--in", "/no/such/file"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert "error:" in proc.stderr


def test_convert_round_trip(tmp_path):
    src = tmp_path / "src.conll"
    mid = tmp_path / "mid.conll"
    back = tmp_path / "back.conll"
    run("gen", "--out", str(src), "--sentences", "50", "--seed", "5")
    run("convert", "--from", "iob2", "--to", "frobes", "--in", str(src), "--out", str(mid))
    run("convert", "--from", "frobes", "--to", "iob2", "--in", str(mid), "--out", str(back))
    assert src.read_bytes() == back.read_bytes()
    assert src.read_bytes() != mid.read_bytes()


def test_validate(tmp_path):
    good = tmp_path / "good.conll"
    good.write_text("a B-x\nb I-x\n\n")
    assert run("validate", "--scheme", "iob2", "--in", str(good)).stdout == ""

    bad = tmp_path / "bad.conll"
    bad.write_text("a O\nb F-x\nc O\n\n")
    proc = run("validate", "--scheme", "frobes", "--in", str(bad), expect=1)
    assert "token 1" in proc.stdout


def test_stats(tmp_path):
    f = tmp_path / "c.conll"
    f.write_text("a B-x\nb I-x\nc O\n\nd B-y\n\n")
    out = run("stats", "--scheme", "iob2", "--in", str(f)).stdout
    assert "n=1\t1\t50.00" in out
    assert "n=2\t1\t50.00" in out
    assert "total\t2" in out


def test_train_tag_eval_pipeline(tmp_path):
    train = tmp_path / "train.conll"
    test = tmp_path / "test.conll"
    model = tmp_path / "model.txt"
    pred = tmp_path / "pred.conll"

    run("gen", "--out", str(train), "--sentences", "250", "--seed", "5")
    run("gen", "--out", str(test), "--sentences", "60", "--seed", "6")
    run(
        "train", "--scheme", "iob2", "--train", str(train),
        "--model", str(model), "--epochs", "3", "--seed", "1",
    )
    assert model.read_text().startswith("srtk-model v1 iob2\n")

    run("tag", "--model", str(model), "--in", str(test), "--out", str(pred), "--threads", "2")
    pred_lines = [l for l in pred.read_text().splitlines() if l]
    test_lines = [l for l in test.read_text().splitlines() if l]
    assert len(pred_lines) == len(test_lines)

    out = run(
        "eval", "--gold", str(test), "--pred", str(pred),
        "--scheme", "iob2", "--tsv", "--by-length",
    ).stdout
    f1_row = next(l for l in out.splitlines() if l.startswith("overall\tf1\t"))
    assert float(f1_row.split("\t")[3]) > 60.0


def test_ensemble(tmp_path):
    p1 = tmp_path / "p1.conll"
    p2 = tmp_path / "p2.conll"
    p3 = tmp_path / "p3.conll"
    voted = tmp_path / "voted.conll"
    p1.write_text("a B-x\nb I-x\nc O\n\n")
    p2.write_text("a B-x\nb I-x\nc O\n\n")
    p3.write_text("a O\nb O\nc S-y\n\n")

    run(
        "ensemble",
        "--pred", f"{p1}:iob2", "--pred", f"{p2}:iob2", "--pred", f"{p3}:iobes",
        "--out", str(voted),
    )
    assert voted.read_text() == "a B-x\nb I-x\nc O\n\n"

    run(
        "ensemble",
        "--pred", f"{p1}:iob2", "--pred", f"{p2}:iob2", "--pred", f"{p3}:iobes",
        "--out", str(voted), "--threshold", "1",
    )
    assert voted.read_text() == "a B-x\nb I-x\nc B-y\n\n"
