import os
import pathlib
import shutil
import subprocess

import pytest

_ROOT = pathlib.Path(__file__).resolve().parents[2]
BIN = os.environ.get("CCJAC_BIN") or shutil.which("ccjac") or str(_ROOT / "build" / "ccjac")

pytestmark = pytest.mark.skipif(not os.path.exists(BIN) and not shutil.which(BIN),
                                reason="ccjac binary not built")


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def test_in_a_structured():
    r = run("in-a", "--domain", "int", "2+3*y", "1+y", "--format", "structured")
    assert r.returncode == 1
    assert "coefficients: [1/3, 1/3]\n" in r.stdout
    assert "clearing_denominator: 3\n" in r.stdout


def test_usage_error():
    r = run("jac", "x+", "y")
    assert r.returncode == 2
    assert "SyntaxError" in r.stderr


def test_golden():
    r = run("verify-paper-examples", "--format", "structured")
    assert r.returncode == 0
    assert "failed: 0\n" in r.stdout
