"""The .icg edge-list format: `n <N> k <K>` header, `e <u> <v>` arc lines."""

from __future__ import annotations

from typing import Sequence

from .digraph import Digraph


class ParseError(ValueError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


def parse_graph(text: str) -> tuple[Digraph, int]:
    """Parse a graph file; comments start with '#', blank lines are ignored."""
    n = k = None
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "n":
            if n is not None:
                raise ParseError(line_no, "duplicate header line")
            if len(fields) != 4 or fields[2] != "k":
                raise ParseError(line_no, "header must be 'n <N> k <K>'")
            try:
                n, k = int(fields[1]), int(fields[3])
            except ValueError:
                raise ParseError(line_no, "header counts must be integers") from None
            if n < 1:
                raise ParseError(line_no, f"vertex count must be >= 1, got {n}")
            if not (1 <= k <= n):
                raise ParseError(line_no, f"inner count {k} out of range 1..{n}")
        elif fields[0] == "e":
            if n is None:
                raise ParseError(line_no, "arc line before header")
            if len(fields) != 3:
                raise ParseError(line_no, "arc line must be 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(line_no, "arc endpoints must be integers") from None
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ParseError(line_no, f"arc ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ParseError(line_no, f"self-loop ({u}, {v})")
            if (u, v) in seen:
                raise ParseError(line_no, f"duplicate arc ({u}, {v})")
            seen.add((u, v))
            arcs.append((u, v))
        else:
            raise ParseError(line_no, f"unknown line type {fields[0]!r}")
    if n is None or k is None:
        raise ParseError(0, "missing header line")
    return Digraph(n, arcs), k


def serialize_graph(g: Digraph, k: int, comments: Sequence[str] = ()) -> str:
    """Deterministic text form: comments, header, then arcs in sorted order."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {g.n} k {k}")
    lines.extend(f"e {u} {v}" for u, v in g.sorted_arcs())
    return "\n".join(lines) + "\n"


def relabel_inner(g: Digraph, inner: Sequence[int]) -> tuple[Digraph, int]:
    """Permute vertex labels so the given inner vertices become 1..K.

    Inner vertices keep their relative order; the remaining vertices fill
    K+1..n in ascending order of their old labels.  Use this to bring a
    graph whose inner set is an arbitrary vertex list into the file-format
    convention.
    """
    inner_list = list(inner)
    if len(set(inner_list)) != len(inner_list):
        raise ValueError("inner vertices must be distinct")
    for v in inner_list:
        if not (1 <= v <= g.n):
            raise ValueError(f"inner vertex {v} out of range 1..{g.n}")
    rest = [v for v in g.vertices if v not in set(inner_list)]
    mapping = {old: new for new, old in enumerate(inner_list + rest, start=1)}
    return Digraph(g.n, ((mapping[u], mapping[v]) for u, v in g.arcs)), len(inner_list)
