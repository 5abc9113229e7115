"""Recognition of interlinked-cycle structures and their per-root relay trees.

A graph with a distinguished inner set {1..K} qualifies when (1) no directed
cycle contains exactly one inner vertex, (2) every ordered pair of distinct
inner vertices is joined by exactly one path with no inner interior vertex,
and (3) the union of the K trees obtained by merging those paths is the
whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import (
    Digraph,
    GraphError,
    find_cycle_through_exactly_one,
    simple_paths_avoiding,
)


class MissingIPathError(GraphError):
    """No inner-free path exists from the tree root to another inner vertex."""

    def __init__(self, source: int, target: int):
        super().__init__(f"no inner-free path from {source} to {target}")
        self.source = source
        self.target = target


class NotATreeError(GraphError):
    """Two merged paths disagree on the parent of a shared vertex."""

    def __init__(self, root: int, vertex: int, parent_a: int, parent_b: int):
        super().__init__(
            f"paths from {root} give vertex {vertex} two parents ({parent_a}, {parent_b})"
        )
        self.root = root
        self.vertex = vertex


@dataclass(frozen=True, eq=False)
class RootedTree:
    """Union of the unique inner-free paths from one inner vertex to all others.

    Non-root inner vertices are always leaves; every non-inner tree vertex
    lies strictly inside some root-to-leaf path.
    """

    root: int
    parent_of: dict[int, int]
    depth_of: dict[int, int]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.depth_of)

    def arcs(self) -> frozenset[tuple[int, int]]:
        return frozenset((p, c) for c, p in self.parent_of.items())

    def contains(self, v: int) -> bool:
        return v in self.depth_of

    def children_of(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(c for c, p in self.parent_of.items() if p == v))

    def depth1(self) -> frozenset[int]:
        """Children of the root (its out-neighborhood within the tree)."""
        return frozenset(c for c, p in self.parent_of.items() if p == self.root)


# Validation findings; a graph qualifies iff none are reported.
@dataclass(frozen=True)
class ICycleFound:
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class IPathMissing:
    source: int
    target: int


@dataclass(frozen=True)
class IPathDuplicated:
    source: int
    target: int
    path_a: tuple[int, ...]
    path_b: tuple[int, ...]


@dataclass(frozen=True)
class UncoveredArc:
    tail: int
    head: int


@dataclass(frozen=True)
class UncoveredVertex:
    vertex: int


Violation = ICycleFound | IPathMissing | IPathDuplicated | UncoveredArc | UncoveredVertex


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def is_ic(self) -> bool:
        return not self.violations


class NotICStructureError(GraphError):
    def __init__(self, report: ValidationReport):
        kinds = sorted({type(v).__name__ for v in report.violations})
        super().__init__(f"not an IC structure: {', '.join(kinds)}")
        self.report = report


class ICStructure:
    """A validated graph together with its inner count, trees and relay sets."""

    __slots__ = ("g", "k", "trees", "v_ni_of")

    def __init__(self, g: Digraph, k: int, trees: dict[int, RootedTree]):
        self.g = g
        self.k = k
        self.trees = trees
        self.v_ni_of = {
            i: frozenset(v for v in t.vertices if v > k) for i, t in trees.items()
        }

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def inner(self) -> frozenset[int]:
        return frozenset(range(1, self.k + 1))

    @property
    def non_inner(self) -> frozenset[int]:
        return frozenset(range(self.k + 1, self.g.n + 1))

    def is_inner(self, v: int) -> bool:
        return 1 <= v <= self.k

    def __repr__(self) -> str:
        return f"ICStructure(n={self.g.n}, k={self.k})"


def build_rooted_tree(g: Digraph, inner: frozenset[int], root: int) -> RootedTree:
    """Merge the unique inner-free paths from root to every other inner vertex.

    Shared path prefixes merge into shared branches.  Raises
    MissingIPathError when some inner vertex is unreachable and
    NotATreeError when merged paths conflict, which can only happen if the
    uniqueness condition fails.
    """
    if root not in inner:
        raise GraphError(f"root {root} is not an inner vertex")
    parent: dict[int, int] = {}
    for target in sorted(inner - {root}):
        paths = simple_paths_avoiding(g, root, target, inner - {root, target}, limit=2)
        if not paths:
            raise MissingIPathError(root, target)
        for path in paths:
            for p, c in zip(path, path[1:]):
                if c in parent and parent[c] != p:
                    raise NotATreeError(root, c, parent[c], p)
                parent[c] = p
    depth: dict[int, int] = {root: 0}
    pending = sorted(parent)
    while pending:
        remaining = []
        for v in pending:
            p = parent[v]
            if p in depth:
                depth[v] = depth[p] + 1
            else:
                remaining.append(v)
        if len(remaining) == len(pending):
            # Unreachable-from-root remainder: only possible with conflicting paths.
            v = remaining[0]
            raise NotATreeError(root, v, parent[v], parent[v])
        pending = remaining
    return RootedTree(root=root, parent_of=parent, depth_of=depth)


def _validate(g: Digraph, k: int) -> tuple[ValidationReport, dict[int, RootedTree] | None]:
    if not (1 <= k <= g.n):
        raise GraphError(f"inner count {k} out of range 1..{g.n}")
    inner = frozenset(range(1, k + 1))
    violations: list[Violation] = []

    cycle = find_cycle_through_exactly_one(g, inner)
    if cycle is not None:
        violations.append(ICycleFound(cycle))

    pairs_ok = True
    for i in sorted(inner):
        for j in sorted(inner):
            if i == j:
                continue
            paths = simple_paths_avoiding(g, i, j, inner - {i, j}, limit=2)
            if not paths:
                violations.append(IPathMissing(i, j))
                pairs_ok = False
            elif len(paths) > 1:
                violations.append(IPathDuplicated(i, j, paths[0], paths[1]))
                pairs_ok = False

    trees: dict[int, RootedTree] | None = None
    if pairs_ok:
        trees = {i: build_rooted_tree(g, inner, i) for i in sorted(inner)}
        covered_arcs: set[tuple[int, int]] = set()
        covered_vertices: set[int] = set()
        for t in trees.values():
            covered_arcs |= t.arcs()
            covered_vertices |= t.vertices
        for u, v in sorted(g.arcs - covered_arcs):
            violations.append(UncoveredArc(u, v))
        for v in sorted(set(g.vertices) - covered_vertices):
            violations.append(UncoveredVertex(v))
    if violations:
        trees = None
    return ValidationReport(tuple(violations)), trees


def validate(g: Digraph, k: int) -> ValidationReport:
    """Check the three defining conditions; all violations are reported as data.

    The tree-union condition is only meaningful once every inner pair has
    exactly one connecting path, so it is skipped when pair checks fail.
    """
    report, _ = _validate(g, k)
    return report


def ic_structure(g: Digraph, k: int) -> ICStructure:
    """Validate and assemble the structure; raises NotICStructureError on failure."""
    report, trees = _validate(g, k)
    if not report.is_ic or trees is None:
        raise NotICStructureError(report)
    return ICStructure(g, k, trees)
