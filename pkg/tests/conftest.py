from __future__ import annotations

import random

import pytest
from hypothesis import settings

settings.register_profile("repro", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("repro")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240607, help="seed for randomized property tests")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
