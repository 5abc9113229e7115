"""Bundled reference graphs g1..g8 used by the golden tests and the docs."""

from __future__ import annotations

from importlib import resources

from .digraph import Digraph
from .fileio import parse_graph

FIXTURE_NAMES = ("g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8")


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}")
    return (
        resources.files("icindex").joinpath("fixtures", f"{name}.icg").read_text()
    )


def load_fixture(name: str) -> tuple[Digraph, int]:
    return parse_graph(fixture_text(name))
