from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from feynwitt.cli import run
from feynwitt.generators import parse_builtin

from conftest import CORPUS


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(list(argv), out, err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_verify_bouquet():
    code, out, _ = call("verify", "--builtin", "bouquet:3", "--max-n", "12")
    assert code == 0
    assert "Feynman identity" in out and "overall: PASS" in out


def test_counts_with_oracle():
    code, out, _ = call("counts", "--builtin", "cycle:4", "--max-n", "8", "--oracle")
    assert code == 0
    lines = [line.split("\t") for line in out.strip().splitlines()]
    header = lines[0]
    row4 = dict(zip(header, lines[4]))
    assert row4["N"] == "4" and row4["θ+"] == "2"


@pytest.mark.parametrize("argv", [
    ("zeta", "--which", "kw", "--max-n", "-1", "--builtin", "k4"),
    ("counts", "--builtin", "nosuch"),
    ("counts",),
    ("verify", "--graph", "/nonexistent.json"),
    ("witt", "--rank", "2", "--max-n", "0"),
    ("bogus",),
    ("counts", "--builtin", "k4", "--tolerance", "0"),
])
def test_usage_errors(argv):
    code, _, _ = call(*argv)
    assert code == 2


def test_env_tolerance(monkeypatch):
    monkeypatch.setenv("FW_TOLERANCE", "nope")
    assert call("counts", "--builtin", "k4")[0] == 2
    monkeypatch.setenv("FW_TOLERANCE", "1e-9")
    assert call("counts", "--builtin", "k4")[0] == 0


def test_crossing_graph_rejected_unless_asked(tmp_path):
    doc = {
        "vertices": [{"id": i, "x": x, "y": y} for i, (x, y) in enumerate([(0, 0), (1, 0), (1, 1), (0, 1)])],
        "edges": [{"id": i, "from": a, "to": b} for i, (a, b) in
                  enumerate([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])],
    }
    path = tmp_path / "x.json"
    path.write_text(json.dumps(doc))
    assert call("euler", "--graph", str(path))[0] == 2
    code, out, _ = call("euler", "--graph", str(path), "--no-validate")
    assert code == 0 and out.startswith("k\ta(k)")


@pytest.mark.parametrize("name", CORPUS)
def test_generate_verify_round_trip(name):
    code, doc, _ = call("generate", name)
    assert code == 0
    code, out, _ = call("verify", "--graph", "-", "--max-n", "8", stdin=doc)
    assert code == 0, out
    assert json.loads(doc) == parse_builtin(name).to_dict()


@pytest.mark.parametrize("cmd", [
    ("info",), ("matrices",), ("counts",), ("euler",), ("zeta",), ("verify",), ("lie-dims",),
])
def test_json_is_stable(cmd):
    argv = [*cmd, "--builtin", "k4", "--format", "json"]
    if cmd[0] not in ("info", "euler"):
        argv += ["--max-n", "6"]
    first = call(*argv)
    second = call(*argv)
    assert first[0] == 0
    assert first[1] == second[1]
    payload = json.loads(first[1])

    def no_raw_ints(x):
        if isinstance(x, dict):
            return all(no_raw_ints(v) for v in x.values())
        if isinstance(x, list):
            return all(no_raw_ints(v) for v in x)
        return isinstance(x, (str, bool))

    assert no_raw_ints(payload)


def test_lie_dims_table():
    code, out, _ = call("lie-dims", "--builtin", "triangle", "--max-n", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t") == ["n", "t", "t′", "t0", "t1", "dimL0", "dimL1", "θ−", "θ+", "match", "envelopingDim"]
    assert lines[3].split("\t") == ["3", "2", "-2", "0", "2", "0", "2", "0", "2", "✓", "-2"]


def test_witt_table():
    code, out, _ = call("witt", "--rank", "2", "--max-n", "3")
    assert code == 0
    assert out.splitlines()[1:] == ["1\t2", "2\t1", "3\t2"]


def test_zeta_tsv():
    code, out, _ = call("zeta", "--builtin", "bouquet:1", "--which", "kw", "--max-n", "3")
    assert code == 0
    assert out.splitlines()[-4:] == ["0\t1", "1\t-2", "2\t3", "3\t-4"]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "feynwitt.cli", "witt", "--rank", "3", "--max-n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[-1] == "2\t3"
