"""GF(2) linear algebra on int bitsets (bit i = coordinate i)."""

from __future__ import annotations

from typing import Sequence


def solve_in_span(vectors: Sequence[int], target: int) -> int | None:
    """Express target as a XOR of some of the vectors, if possible.

    Returns a combination bitmask (bit k set = vectors[k] used) or None when
    target is outside the span.  Elimination pivots on the highest set bit
    and tracks, per basis row, which input vectors were folded into it.
    """
    pivots: dict[int, tuple[int, int]] = {}

    def reduce(vec: int, combo: int) -> tuple[int, int]:
        while vec:
            top = vec.bit_length() - 1
            if top not in pivots:
                break
            pv, pc = pivots[top]
            vec ^= pv
            combo ^= pc
        return vec, combo

    for idx, v in enumerate(vectors):
        vec, combo = reduce(v, 1 << idx)
        if vec:
            pivots[vec.bit_length() - 1] = (vec, combo)
    vec, combo = reduce(target, 0)
    return combo if vec == 0 else None


def in_span(vectors: Sequence[int], target: int) -> bool:
    """True iff target lies in the GF(2) span of the vectors."""
    return solve_in_span(vectors, target) is not None
