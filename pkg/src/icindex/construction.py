"""Broadcast symbol construction: one XOR over the inner set, one per relay vertex."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digraph import GraphError
from .structure import ICStructure

WI_LABEL = "WI"


@dataclass(frozen=True)
class CodeSymbol:
    """One transmission: the GF(2) support of the messages XORed into it."""

    label: str
    support: frozenset[int]

    def __post_init__(self) -> None:
        if not self.support:
            raise GraphError(f"symbol {self.label} has empty support")

    def __str__(self) -> str:
        terms = " + ".join(f"x{v}" for v in sorted(self.support))
        return f"{self.label} = {terms}"


def symbol_label(vertex: int) -> str:
    return f"W{vertex}"


@dataclass(frozen=True)
class IndexCode:
    """Ordered symbol list: the inner XOR first, then one symbol per relay vertex."""

    symbols: tuple[CodeSymbol, ...]

    @property
    def length(self) -> int:
        return len(self.symbols)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.symbols)

    def symbol(self, label: str) -> CodeSymbol:
        for s in self.symbols:
            if s.label == label:
                return s
        raise KeyError(label)


def build_code(ic: ICStructure) -> IndexCode:
    """Emit WI = XOR of inner messages, then Wj = xj XOR its out-neighborhood."""
    symbols = [CodeSymbol(WI_LABEL, ic.inner)]
    for j in sorted(ic.non_inner):
        symbols.append(
            CodeSymbol(symbol_label(j), frozenset({j}) | ic.g.out_neighborhood(j))
        )
    return IndexCode(tuple(symbols))


def symbol_as_bitvector(sym: CodeSymbol, n: int) -> int:
    """Support as an integer bitset; bit v-1 is set iff vertex v is in the support."""
    bits = 0
    for v in sym.support:
        if not (1 <= v <= n):
            raise GraphError(f"support vertex {v} out of range 1..{n}")
        bits |= 1 << (v - 1)
    return bits


def bitvector_to_string(bits: int, n: int) -> str:
    """Render a bitset as a left-to-right vertex string, vertex 1 first."""
    return "".join("1" if bits >> (v - 1) & 1 else "0" for v in range(1, n + 1))


def encode_messages(code: IndexCode, messages: Sequence[int]) -> list[int]:
    """Concrete transmission bits for a full message assignment (messages[v-1] in {0,1})."""
    out = []
    for sym in code.symbols:
        acc = 0
        for v in sym.support:
            acc ^= messages[v - 1] & 1
        out.append(acc)
    return out
