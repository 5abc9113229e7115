from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from icindex.gf2 import in_span, solve_in_span


def xor_selected(vectors, combo):
    acc = 0
    for idx, v in enumerate(vectors):
        if combo >> idx & 1:
            acc ^= v
    return acc


def test_simple_membership():
    vectors = [0b011, 0b110]
    assert in_span(vectors, 0b101)
    assert not in_span(vectors, 0b001)


def test_combo_reconstructs_target():
    vectors = [0b0011, 0b0110, 0b1100]
    combo = solve_in_span(vectors, 0b1010)
    assert combo is not None
    assert xor_selected(vectors, combo) == 0b1010


def test_zero_target_uses_empty_combination():
    assert solve_in_span([0b1, 0b10], 0) == 0


def test_dependent_rows_are_harmless():
    vectors = [0b11, 0b11, 0b01]
    combo = solve_in_span(vectors, 0b10)
    assert combo is not None
    assert xor_selected(vectors, combo) == 0b10


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(min_value=0, max_value=2**12 - 1), max_size=10),
    st.integers(min_value=0, max_value=2**10 - 1),
)
def test_solution_always_checks_out(vectors, subset_mask):
    # build a target guaranteed to be in the span, then solve for it
    target = xor_selected(vectors, subset_mask)
    combo = solve_in_span(vectors, target)
    assert combo is not None
    assert xor_selected(vectors, combo) == target


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(min_value=0, max_value=2**8 - 1), max_size=6),
    st.integers(min_value=0, max_value=2**8 - 1),
)
def test_membership_matches_exhaustion(vectors, target):
    expected = any(
        xor_selected(vectors, combo) == target for combo in range(1 << len(vectors))
    )
    assert in_span(vectors, target) == expected
