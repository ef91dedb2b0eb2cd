import re
import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def tex_to_rendering(tex: str) -> str:
    """``I_{12}+I_8-I_4`` -> ``I12+I8-I4``."""
    return re.sub(r"I_\{?(\w+)\}?", r"I\1", tex.strip())


def load_golden():
    rows = {}
    for line in (FIXTURES / "exceptional_chi.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        n, tex = line.split("\t")
        rows[int(n)] = tex_to_rendering(tex)
    return rows


@pytest.fixture(scope="session")
def golden():
    return load_golden()


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[n])
