"""Generators for the graph families the shift posets are built over.

Free trees come from the Beyer-Hedetniemi successor algorithm on canonical
level sequences of rooted trees, deduplicated up to isomorphism.  The
anchored unicyclic family on n vertices consists of a k-cycle with a rooted
tree glued to one cycle vertex, one member per rooted tree shape, so its
size is the number of rooted trees on n - k + 1 vertices.  The bipartite
corpus enumerates all connected bipartite graphs on up to a handful of
vertices, one representative per isomorphism class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations

from .canon import canonical_form
from .errors import CapacityError, DomainError
from .graphs import Graph, is_bipartite

TREE_CAP = 12
GLUED_TREE_CAP = 9
BIPARTITE_CAP = 7


def rooted_level_sequences(n: int):
    """Canonical level sequences of rooted trees on n vertices, root level 1."""
    if n < 1:
        raise DomainError("need at least one vertex")
    levels = list(range(1, n + 1))
    while True:
        yield tuple(levels)
        p = max((i for i in range(n) if levels[i] > 2), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]


def tree_from_levels(levels: tuple[int, ...]) -> Graph:
    """Tree on len(levels) vertices; vertex i+1 sits at depth levels[i]."""
    latest = {1: 1}
    edges = []
    for i, level in enumerate(levels[1:], start=2):
        edges.append((latest[level - 1], i))
        latest[level] = i
    return Graph(len(levels), edges)


@cache
def free_trees(n: int) -> tuple[Graph, ...]:
    """One tree per isomorphism class, in first-encountered order."""
    if n > TREE_CAP:
        raise CapacityError(f"tree enumeration capped at {TREE_CAP} vertices")
    seen = {}
    for levels in rooted_level_sequences(n):
        t = tree_from_levels(levels)
        key = canonical_form(t)
        if key not in seen:
            seen[key] = t
    return tuple(seen.values())


@dataclass(frozen=True)
class FamilySpec:
    """A named family: all trees on n vertices, or the anchored unicyclic set."""

    kind: str
    n: int
    cycle_len: int | None = None

    def __post_init__(self):
        if self.kind not in ("trees", "unicyclic"):
            raise DomainError(f"unknown family kind {self.kind!r}")
        if self.kind == "trees":
            if self.cycle_len is not None:
                raise DomainError("tree families take no cycle length")
            if self.n < 1:
                raise DomainError("need at least one vertex")
        else:
            if self.cycle_len is None or self.cycle_len < 3:
                raise DomainError("unicyclic families need a cycle length of at least 3")
            if self.n <= self.cycle_len:
                raise DomainError("unicyclic families need more vertices than the cycle")


def _glue_tree(k: int, levels: tuple[int, ...]) -> Graph:
    """Cycle 1..k with the rooted tree hung from vertex 1."""
    n = k + len(levels) - 1
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]

    def relabel(j: int) -> int:
        return 1 if j == 1 else k + j - 1

    latest = {1: 1}
    for i, level in enumerate(levels[1:], start=2):
        edges.append((relabel(latest[level - 1]), relabel(i)))
        latest[level] = i
    return Graph(n, edges)


@cache
def unicyclic_family(n: int, cycle_len: int) -> tuple[Graph, ...]:
    """Anchored unicyclic graphs: k-cycle plus a rooted tree at vertex 1."""
    FamilySpec("unicyclic", n, cycle_len)
    t = n - cycle_len + 1
    if t > GLUED_TREE_CAP:
        raise CapacityError(f"glued trees capped at {GLUED_TREE_CAP} vertices, got {t}")
    return tuple(_glue_tree(cycle_len, levels) for levels in rooted_level_sequences(t))


def family_members(spec: FamilySpec) -> tuple[Graph, ...]:
    if spec.kind == "trees":
        return free_trees(spec.n)
    return unicyclic_family(spec.n, spec.cycle_len)


def star_form(n: int, cycle_len: int) -> Graph:
    """The family member with every off-cycle vertex pendant at the anchor."""
    FamilySpec("unicyclic", n, cycle_len)
    k = cycle_len
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    edges += [(1, v) for v in range(k + 1, n + 1)]
    return Graph(n, edges)


def path_form(n: int, cycle_len: int) -> Graph:
    """The family member whose off-cycle vertices form a path at the anchor."""
    FamilySpec("unicyclic", n, cycle_len)
    k = cycle_len
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    chain = [1] + list(range(k + 1, n + 1))
    edges += list(zip(chain, chain[1:]))
    return Graph(n, edges)


@cache
def connected_bipartite_graphs(n: int) -> tuple[Graph, ...]:
    """Connected bipartite graphs on n vertices, one per isomorphism class."""
    if n > BIPARTITE_CAP:
        raise CapacityError(f"bipartite corpus capped at {BIPARTITE_CAP} vertices")
    if n == 1:
        return (Graph(1),)
    pairs = list(combinations(range(1, n + 1), 2))
    found = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        g = Graph(n, edges)
        if not g.is_connected() or not is_bipartite(g)[0]:
            continue
        key = canonical_form(g)
        if key not in found:
            found[key] = g
    graphs = sorted(found.values(), key=lambda g: (g.num_edges, canonical_form(g)))
    return tuple(graphs)
