"""Cancellation counters and the decodability verdict they determine.

For an inner vertex i, a relay message at depth >= 2 in i's tree survives
the combined symbol unless an odd number of tree relays feed it, and a
relay outside the tree must be fed by no tree relay at all.  The two
verdicts together predict whether the per-tree combinations decode every
message.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import GraphError, has_cycle_within
from .structure import ICStructure


class DomainError(GraphError):
    """Counter queried outside its legal (i, j) domain."""


@dataclass(frozen=True)
class ConditionReport:
    a_table: dict[tuple[int, int], int]
    b_table: dict[tuple[int, int], int]
    c1_holds: bool
    c2_holds: bool
    c1_violations: tuple[tuple[int, int, int], ...]
    c2_violations: tuple[tuple[int, int], ...]
    noninner_cycle_free: bool


def _feeders(ic: ICStructure, i: int, j: int) -> int:
    # Arcs (v, j) of the whole graph with v among i's tree relays.
    return len(ic.g.in_neighborhood(j) & ic.v_ni_of[i])


def count_a(ic: ICStructure, i: int, j: int) -> int:
    """Tree relays of i feeding j, for j a depth->=2 relay of i's tree."""
    if not ic.is_inner(i):
        raise GraphError(f"vertex {i} is not inner (1..{ic.k})")
    tree = ic.trees[i]
    if j not in ic.v_ni_of[i] or tree.depth_of.get(j, 0) < 2:
        raise DomainError(f"vertex {j} is not a depth->=2 relay of tree {i}")
    return _feeders(ic, i, j)


def count_b(ic: ICStructure, i: int, j: int) -> int:
    """Tree relays of i feeding j, for j a vertex outside i's tree."""
    if not ic.is_inner(i):
        raise GraphError(f"vertex {i} is not inner (1..{ic.k})")
    if ic.trees[i].contains(j):
        raise DomainError(f"vertex {j} belongs to tree {i}")
    if not (1 <= j <= ic.g.n):
        raise GraphError(f"vertex {j} out of range 1..{ic.g.n}")
    return _feeders(ic, i, j)


def a_domain(ic: ICStructure, i: int) -> tuple[int, ...]:
    tree = ic.trees[i]
    return tuple(sorted(j for j in ic.v_ni_of[i] if tree.depth_of[j] >= 2))


def b_domain(ic: ICStructure, i: int) -> tuple[int, ...]:
    outside = sorted(set(ic.g.vertices) - ic.trees[i].vertices)
    # Every tree reaches all inner vertices, so only relays can be outside.
    assert all(v > ic.k for v in outside)
    return tuple(outside)


def check_conditions(ic: ICStructure) -> ConditionReport:
    """Full counter tables with verdicts; empty domains hold vacuously."""
    a_table: dict[tuple[int, int], int] = {}
    b_table: dict[tuple[int, int], int] = {}
    c1_violations: list[tuple[int, int, int]] = []
    c2_violations: list[tuple[int, int]] = []
    for i in range(1, ic.k + 1):
        for j in a_domain(ic, i):
            a = _feeders(ic, i, j)
            a_table[(i, j)] = a
            if a % 2 == 0:
                c1_violations.append((i, j, a))
        for j in b_domain(ic, i):
            b = _feeders(ic, i, j)
            b_table[(i, j)] = b
            if b != 0:
                c2_violations.append((i, j))
    return ConditionReport(
        a_table=a_table,
        b_table=b_table,
        c1_holds=not c1_violations,
        c2_holds=not c2_violations,
        c1_violations=tuple(c1_violations),
        c2_violations=tuple(c2_violations),
        noninner_cycle_free=not has_cycle_within(ic.g, ic.non_inner),
    )


def theorem1_predict(report: ConditionReport) -> bool:
    """Both verdicts hold exactly when every per-tree combination decodes."""
    return report.c1_holds and report.c2_holds
