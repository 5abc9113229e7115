"""Per-user decoding of the constructed code from side information.

Relay messages come straight from their own symbol.  An inner message i is
attacked with the combined symbol Z_i: WI XORed with every relay symbol of
i's tree.  The combination succeeds exactly when the surviving support is i
plus messages the user already holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .construction import IndexCode, WI_LABEL, symbol_label
from .digraph import Digraph, GraphError
from .structure import ICStructure


@dataclass(frozen=True)
class DecodeOutcome:
    vertex: int
    combination: tuple[str, ...]
    residual_support: frozenset[int]
    decodable: bool
    blocking: frozenset[int]


@dataclass(frozen=True)
class DecodeReport:
    outcomes: tuple[DecodeOutcome, ...]

    @property
    def all_decodable(self) -> bool:
        return all(o.decodable for o in self.outcomes)

    def outcome(self, vertex: int) -> DecodeOutcome:
        return self.outcomes[vertex - 1]


def _judge(g: Digraph, vertex: int, combination: tuple[str, ...], residual: frozenset[int]) -> DecodeOutcome:
    blocking = residual - ({vertex} | g.out_neighborhood(vertex))
    decodable = vertex in residual and not blocking
    return DecodeOutcome(vertex, combination, residual, decodable, blocking)


def z_of(ic: ICStructure, code: IndexCode, i: int) -> DecodeOutcome:
    """Outcome of the combined symbol for inner vertex i."""
    if not ic.is_inner(i):
        raise GraphError(f"vertex {i} is not inner (1..{ic.k})")
    combination = (WI_LABEL,) + tuple(symbol_label(q) for q in sorted(ic.v_ni_of[i]))
    residual: frozenset[int] = frozenset()
    for label in combination:
        residual ^= code.symbol(label).support
    return _judge(ic.g, i, combination, residual)


def decode_all(ic: ICStructure, code: IndexCode) -> DecodeReport:
    """One outcome per vertex; relay vertices decode from their own symbol."""
    outcomes = []
    for v in ic.g.vertices:
        if ic.is_inner(v):
            outcomes.append(z_of(ic, code, v))
        else:
            label = symbol_label(v)
            outcomes.append(_judge(ic.g, v, (label,), code.symbol(label).support))
    return DecodeReport(tuple(outcomes))


def side_information_from_messages(
    g: Digraph, messages: Sequence[int]
) -> dict[int, dict[int, int]]:
    """What each user may read: the message bits of its out-neighborhood."""
    return {
        v: {u: messages[u - 1] & 1 for u in g.out_neighborhood(v)} for v in g.vertices
    }


def recover_messages(
    ic: ICStructure,
    code: IndexCode,
    transmissions: Sequence[int],
    side_information: Mapping[int, Mapping[int, int]],
) -> list[int | None]:
    """Concrete decode of every message from transmissions plus side information.

    Entry v-1 is None when the combined symbol for v does not resolve, i.e.
    its residual needs a message the user does not hold.
    """
    by_label = {s.label: idx for idx, s in enumerate(code.symbols)}
    report = decode_all(ic, code)
    recovered: list[int | None] = []
    for v in ic.g.vertices:
        outcome = report.outcome(v)
        if not outcome.decodable:
            recovered.append(None)
            continue
        value = 0
        for label in outcome.combination:
            value ^= transmissions[by_label[label]] & 1
        known = side_information[v]
        for u in outcome.residual_support - {v}:
            value ^= known[u]
        recovered.append(value)
    return recovered
