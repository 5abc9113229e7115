"""Directed graphs on vertices 1..n and the queries used for IC-structure analysis."""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph, out-of-range vertex, or violated query precondition."""


class Digraph:
    """Immutable simple directed graph on vertices 1..n.

    Self-loops are rejected at construction time, so every directed cycle
    has at least two vertices.  Adjacency is stored sorted in both
    directions; all queries iterate deterministically.
    """

    __slots__ = ("n", "_arcs", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        arc_set: set[tuple[int, int]] = set()
        for arc in arcs:
            u, v = arc
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise GraphError(f"arc ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise GraphError(f"self-loop ({u}, {v}) not allowed")
            arc_set.add((u, v))
        out: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        inc: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for u, v in sorted(arc_set):
            out[u].append(v)
            inc[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_arcs", frozenset(arc_set))
        object.__setattr__(self, "_out", {v: tuple(ws) for v, ws in out.items()})
        object.__setattr__(self, "_in", {v: tuple(sorted(ws)) for v, ws in inc.items()})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Digraph is immutable")

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        return self._arcs

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self._arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs

    def _check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.n):
            raise GraphError(f"vertex {v} out of range 1..{self.n}")

    def out_neighborhood(self, v: int) -> frozenset[int]:
        """Vertices reachable from v by a single arc."""
        self._check_vertex(v)
        return frozenset(self._out[v])

    def in_neighborhood(self, v: int) -> frozenset[int]:
        """Vertices with an arc into v."""
        self._check_vertex(v)
        return frozenset(self._in[v])

    def out_sorted(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._out[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._arcs == other._arcs

    def __hash__(self) -> int:
        return hash((self.n, self._arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self._arcs)})"


def simple_paths_avoiding(
    g: Digraph,
    source: int,
    target: int,
    forbidden_interior: Iterable[int],
    limit: int | None = None,
) -> list[tuple[int, ...]]:
    """All simple paths source -> target whose interior avoids the given vertices.

    Paths are returned in lexicographic order of their vertex sequences.
    `limit` stops the search after that many paths have been found, which is
    enough for uniqueness checks (limit=2).
    """
    g._check_vertex(source)
    g._check_vertex(target)
    forbidden = frozenset(forbidden_interior)
    if source == target:
        raise GraphError("source and target must differ")
    if source in forbidden or target in forbidden:
        raise GraphError("endpoints may not be forbidden")

    results: list[tuple[int, ...]] = []
    path = [source]
    on_path = {source}
    # Stack of iterators, one per path position; ascending neighbor order
    # makes the output lexicographic.
    stack: list[Iterator[int]] = [iter(g.out_sorted(source))]
    while stack:
        try:
            nxt = next(stack[-1])
        except StopIteration:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if nxt == target:
            results.append(tuple(path) + (target,))
            if limit is not None and len(results) >= limit:
                break
            continue
        if nxt in on_path or nxt in forbidden:
            continue
        path.append(nxt)
        on_path.add(nxt)
        stack.append(iter(g.out_sorted(nxt)))
    return results


def _induced_sccs(g: Digraph, subset: frozenset[int]) -> list[list[int]]:
    """Strongly connected components of the subgraph induced on subset (iterative Tarjan)."""
    index: dict[int, int] = {}
    lowlink: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0

    for root in sorted(subset):
        if root in index:
            continue
        work: list[tuple[int, Iterator[int]]] = []
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work.append((root, iter(g.out_sorted(root))))
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in subset:
                    continue
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.out_sorted(w))))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
    return sccs


def has_cycle_within(g: Digraph, subset: Iterable[int]) -> bool:
    """True iff the subgraph induced on subset contains a directed cycle.

    Because self-loops are excluded by construction, a cycle exists exactly
    when some strongly connected component of the induced subgraph has two
    or more vertices.
    """
    sub = frozenset(subset)
    for v in sub:
        g._check_vertex(v)
    return any(len(c) >= 2 for c in _induced_sccs(g, sub))


def find_cycle_through_exactly_one(
    g: Digraph, marked: Iterable[int]
) -> tuple[int, ...] | None:
    """A directed cycle containing exactly one marked vertex, or None.

    For each marked m (ascending), searches for a path from an unmarked
    out-neighbor of m back to m through unmarked vertices only.  The
    returned cycle starts at the marked vertex.
    """
    marked_set = frozenset(marked)
    for v in marked_set:
        g._check_vertex(v)
    for m in sorted(marked_set):
        starts = [u for u in g.out_sorted(m) if u not in marked_set]
        if not starts:
            continue
        parent: dict[int, int | None] = {u: None for u in starts}
        frontier = list(starts)
        while frontier:
            nxt_frontier: list[int] = []
            for u in frontier:
                if g.has_arc(u, m):
                    cycle = [u]
                    p = parent[u]
                    while p is not None:
                        cycle.append(p)
                        p = parent[p]
                    cycle.append(m)
                    cycle.reverse()
                    return tuple(cycle)
                for w in g.out_sorted(u):
                    if w in marked_set or w in parent:
                        continue
                    parent[w] = u
                    nxt_frontier.append(w)
            frontier = nxt_frontier
    return None


def cycles_through_exactly_one(g: Digraph, marked: Iterable[int]) -> bool:
    """True iff some directed cycle contains exactly one vertex of `marked`."""
    return find_cycle_through_exactly_one(g, marked) is not None
