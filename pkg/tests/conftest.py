import json
import pathlib
import random
import sys

import pytest

from cosovereign.exactmath import QQ, rational_functions, scalar

QQq = rational_functions("q")
SEED = 20240611


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_rational(rng, QQ_field=QQ, span=9):
    num = rng.randint(-span, span)
    den = rng.randint(1, span)
    return scalar(QQ_field, num) / den


def random_qq_poly_scalar(rng, max_deg=2, span=4, allow_zero=True):
    """Random element of Q(q) as a ratio of small polynomials."""
    q = QQq.gen()
    while True:
        num = sum((scalar(QQq, rng.randint(-span, span)) * q ** k for k in range(rng.randint(0, max_deg) + 1)),
                  QQq.zero())
        den = sum((scalar(QQq, rng.randint(-span, span)) * q ** k for k in range(rng.randint(0, max_deg) + 1)),
                  QQq.zero())
        if not den:
            continue
        value = num / den
        if allow_zero or value:
            return value


GOLDEN = pathlib.Path(__file__).parent / "golden"


def golden_expected() -> dict[str, int]:
    return json.loads((GOLDEN / "expected.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def golden_reports():
    """Suite reports for every valid golden file, computed once per session."""
    from cosovereign import cli, serialize
    out = {}
    for name, code in golden_expected().items():
        if code == cli.EXIT_INPUT:
            continue
        wb = serialize.load((GOLDEN / f"{name}.json").read_text(encoding="utf-8"))
        out[name] = cli.run_suite(wb)
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
