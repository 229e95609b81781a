"""Shared test utilities: networkx bridges, small-graph censuses, and
independent oracles used to cross-check package results."""

from __future__ import annotations

import itertools
import random

import networkx as nx

from prismph import (
    Graph,
    Pairing,
    enumerate_perfect_matchings,
    is_hamiltonian_extension,
)


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


def from_networkx(G: nx.Graph) -> Graph:
    nodes = sorted(G.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in G.edges()])


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(to_networkx(a), to_networkx(b))


def connected_atlas(max_n: int) -> list[Graph]:
    """All connected graphs with 1 <= n <= max_n (max_n <= 7), canonical labels."""
    out = []
    for G in nx.graph_atlas_g():
        if 1 <= G.number_of_nodes() <= max_n and nx.is_connected(G):
            out.append(from_networkx(G))
    return out


def cubic_census(n: int) -> list[Graph]:
    """All connected 3-regular graphs on n vertices, one per isomorphism class.

    Backtracking over candidate neighborhoods with vertex 0 pinned to
    {1, 2, 3}; every cubic graph is isomorphic to one of that form, so the
    pinning only cuts labeled duplicates.  Classes are deduplicated with a
    full isomorphism check.
    """
    if n % 2 or n < 4:
        return []
    found: list[Graph] = []

    def complete(adj: list[set[int]]) -> None:
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
        if g.is_connected() and not any(are_isomorphic(g, h) for h in found):
            found.append(g)

    def search(v: int, adj: list[set[int]]) -> None:
        if v == n:
            complete(adj)
            return
        need = 3 - len(adj[v])
        if need == 0:
            search(v + 1, adj)
            return
        candidates = [u for u in range(v + 1, n) if len(adj[u]) < 3]
        if len(candidates) < need:
            return
        for chosen in itertools.combinations(candidates, need):
            for u in chosen:
                adj[v].add(u)
                adj[u].add(v)
            if all(len(adj[u]) <= 3 for u in chosen):
                search(v + 1, adj)
            for u in chosen:
                adj[v].discard(u)
                adj[u].discard(v)

    start: list[set[int]] = [set() for _ in range(n)]
    for u in (1, 2, 3):
        start[0].add(u)
        start[u].add(0)
    search(1, start)
    return found


def exhaustive_min_leaf(g: Graph) -> int:
    """Minimum leaf count over every spanning tree, via full enumeration."""
    best = g.n
    for tree in nx.SpanningTreeIterator(to_networkx(g)):
        leaves = sum(1 for v in tree.nodes() if tree.degree(v) == 1)
        best = min(best, leaves)
        if best == 2:
            break
    return best


def extends_by_matching_enumeration(g: Graph, p: Pairing) -> bool:
    """Independent extension check: scan every perfect matching of g."""
    return any(is_hamiltonian_extension(p, m) for m in enumerate_perfect_matchings(g))


def spider_graph() -> Graph:
    """Three legs of length two glued at a center: 7 vertices, ml = 3."""
    return Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)
