"""Exhaustive and rank-based tests for linear decodability of a message.

Independent of the per-tree combinations: a message is linearly decodable
when SOME subset of the transmitted symbols XORs to that message plus a
subset of the user's side information.  The exhaustive sweep visits all
2^m symbol subsets in ascending bitmask order (WI is bit 0, then the relay
symbols by ascending vertex); the rank method answers the same question by
GF(2) elimination and the two are cross-checked.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import IO, Iterator

from . import gf2
from .construction import IndexCode, symbol_as_bitvector
from .digraph import Digraph

SIZE_CAP_DEFAULT = 24


class SizeLimitError(RuntimeError):
    """Exhaustive sweep refused: too many symbols for 2^m enumeration."""


@dataclass(frozen=True)
class OracleOutcome:
    vertex: int
    decodable: bool
    witness: tuple[str, ...] | None
    witness_residual: frozenset[int] | None
    combinations_checked: int


def _masks(code: IndexCode, n: int) -> list[int]:
    return [symbol_as_bitvector(s, n) for s in code.symbols]


def _mask_to_support(mask: int) -> frozenset[int]:
    return frozenset(v + 1 for v in range(mask.bit_length()) if mask >> v & 1)


def _labels_for(code: IndexCode, subset: int) -> tuple[str, ...]:
    return tuple(
        code.symbols[b].label for b in range(code.length) if subset >> b & 1
    )


def enumerate_decodability(
    code: IndexCode, g: Digraph, i: int, cap: int = SIZE_CAP_DEFAULT
) -> OracleOutcome:
    """Sweep all symbol subsets in ascending bitmask order; first witness wins."""
    m = code.length
    if m > cap:
        raise SizeLimitError(f"{m} symbols exceed the {cap}-symbol enumeration cap")
    masks = _masks(code, g.n)
    target_bit = 1 << (i - 1)
    allowed = target_bit
    for u in g.out_neighborhood(i):
        allowed |= 1 << (u - 1)
    residual = 0
    total = 1 << m
    for subset in range(1, total):
        # Incremental update: subset ^ (subset - 1) flags exactly the
        # symbols whose membership changed from the previous subset.
        changed = subset ^ (subset - 1)
        b = 0
        while changed:
            if changed & 1:
                residual ^= masks[b]
            changed >>= 1
            b += 1
        if residual & target_bit and not residual & ~allowed:
            return OracleOutcome(
                vertex=i,
                decodable=True,
                witness=_labels_for(code, subset),
                witness_residual=_mask_to_support(residual),
                combinations_checked=subset + 1,
            )
    return OracleOutcome(
        vertex=i,
        decodable=False,
        witness=None,
        witness_residual=None,
        combinations_checked=total,
    )


def _rank_solve(code: IndexCode, g: Digraph, i: int) -> tuple[str, ...] | None:
    """Witness symbol labels from elimination, or None when undecodable."""
    masks = _masks(code, g.n)
    side = [1 << (u - 1) for u in sorted(g.out_neighborhood(i))]
    combo = gf2.solve_in_span(masks + side, 1 << (i - 1))
    if combo is None:
        return None
    return _labels_for(code, combo & ((1 << code.length) - 1))


def rank_decodability(code: IndexCode, g: Digraph, i: int) -> bool:
    """True iff the unit vector of i lies in span(symbols) + span(side info)."""
    return _rank_solve(code, g, i) is not None


def _residual_of(code: IndexCode, labels: tuple[str, ...]) -> frozenset[int]:
    residual: frozenset[int] = frozenset()
    for label in labels:
        residual ^= code.symbol(label).support
    return residual


def oracle_report(
    code: IndexCode, g: Digraph, cap: int = SIZE_CAP_DEFAULT
) -> tuple[OracleOutcome, ...]:
    """Per-vertex linear decodability; enumeration when feasible, else rank only.

    When both methods run their verdicts are asserted to agree.
    """
    outcomes = []
    for v in g.vertices:
        rank_witness = _rank_solve(code, g, v)
        try:
            outcome = enumerate_decodability(code, g, v, cap=cap)
        except SizeLimitError:
            if rank_witness is None:
                outcome = OracleOutcome(v, False, None, None, 0)
            else:
                outcome = OracleOutcome(
                    v, True, rank_witness, _residual_of(code, rank_witness), 0
                )
        else:
            assert outcome.decodable == (rank_witness is not None), (
                f"method disagreement at vertex {v}"
            )
        outcomes.append(outcome)
    return tuple(outcomes)


def full_table(
    code: IndexCode, g: Digraph, i: int, cap: int = SIZE_CAP_DEFAULT
) -> Iterator[tuple[int, int, tuple[str, ...], frozenset[int], str, frozenset[int]]]:
    """All 2^m rows for one target: (row, mask, labels, residual, verdict, blocking).

    Row r (1-based) holds subset bitmask r-1; verdicts are `decodes`,
    `target-absent` (message missing from the sum) or `blocked`.
    """
    m = code.length
    if m > cap:
        raise SizeLimitError(f"{m} symbols exceed the {cap}-symbol enumeration cap")
    masks = _masks(code, g.n)
    target_bit = 1 << (i - 1)
    allowed = target_bit
    for u in g.out_neighborhood(i):
        allowed |= 1 << (u - 1)
    residual = 0
    for subset in range(1 << m):
        if subset:
            changed = subset ^ (subset - 1)
            b = 0
            while changed:
                if changed & 1:
                    residual ^= masks[b]
                changed >>= 1
                b += 1
        if not residual & target_bit:
            verdict, blocking = "target-absent", frozenset()
        elif residual & ~allowed:
            verdict = "blocked"
            blocking = _mask_to_support(residual & ~allowed)
        else:
            verdict, blocking = "decodes", frozenset()
        yield (
            subset + 1,
            subset,
            _labels_for(code, subset),
            _mask_to_support(residual),
            verdict,
            blocking,
        )


def write_full_table_csv(
    out: IO[str], code: IndexCode, g: Digraph, i: int, cap: int = SIZE_CAP_DEFAULT
) -> int:
    """Dump the full table as CSV; returns the number of data rows."""
    writer = csv.writer(out)
    writer.writerow(["row", "mask", "labels", "residual", "verdict", "blocking"])
    count = 0
    for row, mask, labels, residual, verdict, blocking in full_table(code, g, i, cap):
        writer.writerow(
            [
                row,
                mask,
                " ".join(labels),
                " ".join(str(v) for v in sorted(residual)),
                verdict,
                " ".join(str(v) for v in sorted(blocking)),
            ]
        )
        count += 1
    return count
