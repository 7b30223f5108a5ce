import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from colored_partitions.colors import color
from colored_partitions.parts import parse_part

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"
GOLDEN = FIXTURES / "golden"


def P(text: str, n: int) -> tuple:
    """'5[b] 3[d] 2[a]' -> tuple of parts."""
    return tuple(parse_part(t, n) for t in text.split())


def fixture_parts(name: str):
    from colored_partitions.io import parts_from_json
    return parts_from_json(json.loads((FIXTURES / f"{name}.json").read_text()))


def run_cli(*args, cwd=None):
    """Run the CLI in a subprocess; returns CompletedProcess with text output."""
    env = dict(os.environ)
    return subprocess.run([sys.executable, "-m", "colored_partitions.cli", *map(str, args)],
                          capture_output=True, text=True, cwd=cwd or ROOT, env=env)


@pytest.fixture(scope="session")
def cd():
    return color(3, 4)


@pytest.fixture(scope="session")
def e_sweep():
    """Every partition in E with n <= 5 and size <= 16, with n attached.

    Shared by the bridge and forest property checks."""
    from colored_partitions.partitions import enumerate_upto
    out = []
    for n in (2, 3, 4, 5):
        out.extend((nu, n) for nu in enumerate_upto(n, 16, "E"))
    return out


@pytest.fixture(scope="session")
def mined_five(cd):
    """Optimal forbidden patterns for five colors without ->cd-> moves."""
    from colored_partitions.patterns import mine_optimal
    return mine_optimal(5, 6, 16, pivot=cd)


# -- acceptance verdicts ---------------------------------------------------------

VERDICTS: dict = {}


def record_verdict(key: str, ok: bool, detail: str = "") -> bool:
    VERDICTS[key] = (ok, detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(VERDICTS, key=lambda k: (int(k.rstrip("abc")), k)):
        ok, detail = VERDICTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
