from __future__ import annotations

from functools import lru_cache

import pytest

from icindex import Digraph, ICStructure, IndexCode, build_code, ic_structure, load_fixture

FIXTURE_NAMES = ("g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8")

# Ninth reference graph (the g1 variant where vertex 11 carries the inner
# exit and 12->13 is a bare chain link); used for the recovered-combination
# oracle checks.
VARIANT_ARCS = [
    (1, 3), (1, 7), (1, 14),
    (2, 1), (2, 3), (2, 6), (2, 10),
    (3, 1), (3, 2), (3, 6), (3, 11),
    (4, 1), (4, 7), (4, 8),
    (5, 1), (5, 2), (5, 3), (5, 4), (5, 6),
    (6, 1), (6, 2), (6, 3), (6, 13),
    (7, 2), (7, 6),
    (8, 3), (8, 5),
    (9, 10),
    (10, 11),
    (11, 4), (11, 12),
    (12, 13),
    (13, 5), (13, 9),
    (14, 9),
]


@lru_cache(maxsize=None)
def graph(name: str) -> tuple[Digraph, int]:
    return load_fixture(name)


@lru_cache(maxsize=None)
def structure(name: str) -> ICStructure:
    g, k = graph(name)
    return ic_structure(g, k)


@lru_cache(maxsize=None)
def code(name: str) -> IndexCode:
    return build_code(structure(name))


def two_clique() -> Digraph:
    return Digraph(2, [(1, 2), (2, 1)])


def variant_graph() -> tuple[Digraph, int]:
    return Digraph(14, VARIANT_ARCS), 6


@pytest.fixture(params=FIXTURE_NAMES)
def fixture_name(request) -> str:
    return request.param


# ---------------------------------------------------------------------------
# Acceptance summary: one PASS/FAIL line per criterion after the run.

_acceptance: list[tuple[str, bool]] = []


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    if report.when == "call" and "test_acceptance.py" in item.nodeid:
        _acceptance.append((item.name, report.passed))
    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, passed in sorted(_acceptance):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}")
