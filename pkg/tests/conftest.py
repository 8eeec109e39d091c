from __future__ import annotations

import random

import pytest

from skewcert.planarity import available_kernels

KERNELS = available_kernels()

_acceptance_lines: list[str] = []


@pytest.fixture(params=sorted(KERNELS))
def kernel(request):
    return KERNELS[request.param]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(12345)


@pytest.fixture
def record_criterion():
    """Collect one summary line per acceptance criterion."""

    def record(number: int, label: str, passed: bool, detail: str) -> None:
        verdict = "PASS" if passed else "FAIL"
        line = f"criterion {number:>2} {verdict}  {label}: {detail}"
        _acceptance_lines.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)

