"""Immutable simple graphs, standard generators, products, and prism structures.

Vertices are always 0..n-1.  Product vertices (u, v) are flattened row-major
to u + |V(G)|*v, so the prism over G keeps G's labels in the low half and the
mirror copy in the high half.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Edge = tuple[int, int]

PRODUCT_VERTEX_CAP = 64
TOWER_VERTEX_CAP = 4096


class BudgetExceeded(RuntimeError):
    """A bounded search exhausted its node budget before reaching a verdict."""


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with a frozen, normalized edge set."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            if not (isinstance(e, tuple) and len(e) == 2):
                raise ValueError(f"malformed edge {e!r}")
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(normalize_edge(u, v) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and normalize_edge(u, v) in self.edges

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    queue.append(y)
        return count == self.n

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise ValueError("graph JSON needs 'n' and 'edges' keys")
        n = data["n"]
        edges = data["edges"]
        if not isinstance(n, int) or not isinstance(edges, list):
            raise ValueError("graph JSON: 'n' must be int, 'edges' a list")
        parsed = []
        for e in edges:
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
                raise ValueError(f"graph JSON: malformed edge entry {e!r}")
            parsed.append((e[0], e[1]))
        return cls.from_edges(n, parsed)


# ---------------------------------------------------------------------------
# standard generators
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0 joined to 1..n-1."""
    if n < 1:
        raise ValueError("a star needs at least 1 vertex")
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides need at least 1 vertex")
    return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def hypercube_graph(d: int) -> Graph:
    """d-cube on 0..2^d-1; vertices adjacent iff they differ in one bit."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    n = 1 << d
    return Graph.from_edges(
        n, ((u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b))
    )


_FAMILIES = {
    "complete": (complete_graph, 1),
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "star": (star_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
    "hypercube": (hypercube_graph, 1),
}


def standard_graph(family: str, *params: int) -> Graph:
    """Dispatch a generator by family name; used by the CLI."""
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}")
    fn, arity = _FAMILIES[family]
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# ---------------------------------------------------------------------------
# products and prisms
# ---------------------------------------------------------------------------

def _check_product_size(g: Graph, h: Graph, max_vertices: int) -> int:
    n = g.n * h.n
    if n > max_vertices:
        raise ValueError(
            f"product on {n} vertices exceeds the cap of {max_vertices}; "
            "raise max_vertices to override"
        )
    return n


def cartesian_product(g: Graph, h: Graph, max_vertices: int = PRODUCT_VERTEX_CAP) -> Graph:
    """Cartesian product; (u,v)~(u',v') iff one coordinate is equal and the
    other moves along an edge.  Vertex (u, v) becomes u + g.n * v."""
    n = _check_product_size(g, h, max_vertices)
    edges = []
    for v in range(h.n):
        off = g.n * v
        for (a, b) in g.edges:
            edges.append((a + off, b + off))
    for (c, d) in h.edges:
        for u in range(g.n):
            edges.append((u + g.n * c, u + g.n * d))
    return Graph.from_edges(n, edges)


def strong_product(g: Graph, h: Graph, max_vertices: int = PRODUCT_VERTEX_CAP) -> Graph:
    """Strong product: the Cartesian edges plus the diagonal edges where both
    coordinates move along edges simultaneously."""
    base = cartesian_product(g, h, max_vertices)
    edges = set(base.edges)
    for (a, b) in g.edges:
        for (c, d) in h.edges:
            edges.add(normalize_edge(a + g.n * c, b + g.n * d))
            edges.add(normalize_edge(a + g.n * d, b + g.n * c))
    return Graph(base.n, frozenset(edges))


@dataclass(frozen=True)
class PrismStructure:
    """A host graph seen as two identically-labeled layers joined by the
    vertical perfect matching (v, v + base_n).

    Layer 0 is vertices 0..base_n-1, layer 1 the rest; cross-layer edges must
    be exactly the verticals and the two layers must carry mirrored edges.
    """

    host: Graph
    base_n: int

    def __post_init__(self) -> None:
        b = self.base_n
        if b < 1 or self.host.n != 2 * b:
            raise ValueError("host order must be exactly twice the base order")
        low, high, cross = set(), set(), set()
        for (u, v) in self.host.edges:
            if v < b:
                low.add((u, v))
            elif u >= b:
                high.add((u - b, v - b))
            else:
                cross.add((u, v))
        if cross != {(v, v + b) for v in range(b)}:
            raise ValueError("cross-layer edges must be exactly the vertical matching")
        if low != high:
            raise ValueError("the two layers must carry identical edge sets")

    def layer_of(self, v: int) -> int:
        if not 0 <= v < self.host.n:
            raise ValueError(f"vertex {v} out of range")
        return 0 if v < self.base_n else 1

    @property
    def vertical_edges(self) -> tuple[Edge, ...]:
        return tuple((v, v + self.base_n) for v in range(self.base_n))

    def layer_graph(self, layer: int) -> Graph:
        """The induced graph of one layer, relabeled to 0..base_n-1."""
        if layer not in (0, 1):
            raise ValueError("layer must be 0 or 1")
        off = layer * self.base_n
        b = self.base_n
        edges = [
            (u - off, v - off)
            for (u, v) in self.host.edges
            if off <= u < off + b and off <= v < off + b
        ]
        return Graph.from_edges(b, edges)


def prism(g: Graph) -> PrismStructure:
    """The prism over g: the Cartesian product with a single edge."""
    if g.n < 1:
        raise ValueError("prism needs at least one vertex")
    host = cartesian_product(g, complete_graph(2), max_vertices=2 * g.n)
    return PrismStructure(host, g.n)


@dataclass(frozen=True)
class PrismTower:
    """k-fold iterated prism over a base graph.

    top has base.n * 2^k vertices; vertex b + base.n * w encodes base vertex b
    and the k prism-level bits of w, so the last (highest) bit splits the top
    into a prism over the (k-1)-fold tower.
    """

    base: Graph
    k: int
    top: Graph

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("tower height must be nonnegative")
        if self.top.n != self.base.n * (1 << self.k):
            raise ValueError("top order must be base order times 2^k")
        if self.k == 0:
            if self.top != self.base:
                raise ValueError("a height-0 tower must have top equal to its base")
        else:
            PrismStructure(self.top, self.top.n // 2)  # validates the last split

    def split(self) -> tuple[PrismStructure, "PrismTower"]:
        """The last-bit prism structure of top and the tower one level down."""
        if self.k == 0:
            raise ValueError("a height-0 tower has no prism split")
        half = self.top.n // 2
        structure = PrismStructure(self.top, half)
        return structure, PrismTower(self.base, self.k - 1, structure.layer_graph(0))


def prism_power(g: Graph, k: int, max_vertices: int = TOWER_VERTEX_CAP) -> PrismTower:
    """Iterate the prism k times over g."""
    if k < 0:
        raise ValueError("tower height must be nonnegative")
    if g.n < 1:
        raise ValueError("tower base needs at least one vertex")
    final_n = g.n * (1 << k)
    if final_n > max_vertices:
        raise ValueError(
            f"tower top on {final_n} vertices exceeds the cap of {max_vertices}; "
            "raise max_vertices to override"
        )
    top = g
    for _ in range(k):
        top = prism(top).host
    return PrismTower(g, k, top)


# ---------------------------------------------------------------------------
# traceability
# ---------------------------------------------------------------------------

def find_hamiltonian_path(g: Graph, max_nodes: int | None = None) -> list[int] | None:
    """Deterministic backtracking search for a Hamiltonian path.

    Prunes branches from which some unvisited vertex is unreachable.  Raises
    BudgetExceeded once more than max_nodes search nodes have been expanded.
    """
    n = g.n
    if n == 0:
        return None
    if n == 1:
        return [0]
    if not g.is_connected():
        return None
    adj = g.adjacency
    degree_one = [v for v in range(n) if len(adj[v]) == 1]
    if len(degree_one) > 2:
        return None
    if degree_one:
        starts = degree_one
    else:
        starts = sorted(range(n), key=lambda v: (len(adj[v]), v))
    visited = [False] * n
    nodes = [0]

    def reachable_all(cur: int) -> bool:
        # every unvisited vertex must still be reachable from the path head
        seen = {cur}
        stack = [cur]
        found = 0
        remaining = n - sum(visited)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen and not visited[y]:
                    seen.add(y)
                    found += 1
                    stack.append(y)
        return found == remaining

    def dfs(cur: int, path: list[int]) -> list[int] | None:
        if len(path) == n:
            return path
        nodes[0] += 1
        if max_nodes is not None and nodes[0] > max_nodes:
            raise BudgetExceeded(f"hamiltonian path search exceeded {max_nodes} nodes")
        if not reachable_all(cur):
            return None
        cands = [w for w in adj[cur] if not visited[w]]
        cands.sort(key=lambda w: (sum(1 for z in adj[w] if not visited[z]), w))
        for w in cands:
            visited[w] = True
            path.append(w)
            out = dfs(w, path)
            if out is not None:
                return out
            path.pop()
            visited[w] = False
        return None

    for s in starts:
        visited = [False] * n
        visited[s] = True
        out = dfs(s, [s])
        if out is not None:
            return out
    return None


def is_traceable(g: Graph, max_nodes: int | None = None) -> bool:
    """Whether g has a Hamiltonian path."""
    return find_hamiltonian_path(g, max_nodes=max_nodes) is not None
