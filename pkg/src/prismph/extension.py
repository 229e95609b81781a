"""Constructive extension of prism pairings to Hamiltonian cycles.

Pairings of a prism split into pairs inside the low layer, pairs inside the
high layer, and cross pairs with one endpoint in each.  With no cross pairs,
an extension of the low layer is mirrored into the high layer and the two are
spliced together through vertical edges, one splice per cycle of the
high-pairs/mirror union.  With cross pairs, the low layer is completed to a
full pairing, its extension cycle is cut at the completion pairs, and the cut
structure induces the pairing the high layer must extend.  Towers recurse on
their last prism bit down to a base-graph oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

from .graphs import Edge, Graph, PrismStructure, PrismTower, normalize_edge
from .matchings import (
    Pairing,
    PerfectMatching,
    find_extension_bruteforce,
    is_hamiltonian_extension,
    union_cycle_decomposition,
)

ExtensionOracle = Callable[[Pairing], PerfectMatching]


class BaseNotExtendable(RuntimeError):
    """Certificate that the base graph rejects one of its pairings."""

    def __init__(self, graph: Graph, pairing: Pairing):
        super().__init__(
            f"no matching extension for pairing {pairing.pairs} "
            f"of the {graph.n}-vertex base graph"
        )
        self.graph = graph
        self.pairing = pairing


@dataclass(frozen=True)
class PairingPartition:
    """A prism pairing's pairs split by how they meet the two layers.

    All pairs are in host labels; cross pairs have their low endpoint first.
    """

    base_n: int
    low: tuple[Edge, ...]
    high: tuple[Edge, ...]
    cross: tuple[Edge, ...]


def partition_pairing(p: Pairing, s: PrismStructure) -> PairingPartition:
    """Split a pairing of the prism host by layer membership."""
    if p.n != s.host.n:
        raise ValueError("pairing order must equal prism host order")
    low, high, cross = [], [], []
    for (u, v) in p.pairs:
        layers = s.layer_of(u) + s.layer_of(v)
        (low, cross, high)[layers].append((u, v))
    return PairingPartition(s.base_n, tuple(low), tuple(high), tuple(cross))


@dataclass(frozen=True)
class ExtensionTrace:
    """Record of the choices made at one recursion level.

    branch is "base" (oracle call), "no_cross", or "cross".  For no_cross,
    splices lists (low edge, mirrored high edge) pairs removed in favor of
    their verticals.  For cross, completion_pairs close the low layer into a
    full pairing and induced_pairs (host labels) are forced on the high layer.
    children holds the traces of recursive sub-extensions in call order.
    """

    level: int
    branch: str
    splices: tuple[tuple[Edge, Edge], ...] = ()
    completion_pairs: tuple[Edge, ...] = ()
    induced_pairs: tuple[Edge, ...] = ()
    children: tuple["ExtensionTrace", ...] = ()

    def accent_edges(self) -> tuple[Edge, ...]:
        """The level's decoration edges (for DOT rendering)."""
        if self.branch == "no_cross":
            return tuple(e for pair in self.splices for e in pair)
        return tuple(self.completion_pairs) + tuple(self.induced_pairs)

    def to_json_dict(self) -> dict:
        return {
            "level": self.level,
            "branch": self.branch,
            "splices": [[list(a), list(b)] for (a, b) in self.splices],
            "completion_pairs": [list(e) for e in self.completion_pairs],
            "induced_pairs": [list(e) for e in self.induced_pairs],
            "children": [c.to_json_dict() for c in self.children],
        }


def _shift_up(pairs: tuple[Edge, ...], offset: int) -> tuple[Edge, ...]:
    return tuple((u + offset, v + offset) for (u, v) in pairs)


def _shift_down(pairs: tuple[Edge, ...], offset: int) -> tuple[Edge, ...]:
    return tuple((u - offset, v - offset) for (u, v) in pairs)


def _checked_oracle_call(oracle: ExtensionOracle, pairing: Pairing) -> PerfectMatching:
    matching = oracle(pairing)
    if matching.n != pairing.n or not is_hamiltonian_extension(pairing, matching):
        raise ValueError("oracle returned a matching that does not extend its pairing")
    return matching


def extend_no_cross(
    part: PairingPartition, s: PrismStructure, oracle: ExtensionOracle
) -> tuple[PerfectMatching, ExtensionTrace]:
    """Extend a prism pairing with no cross pairs.

    The oracle extends the low-layer pairs; the matching is mirrored above,
    and each cycle of the high-pairs/mirror union donates its smallest
    mirrored edge, replaced by the two verticals that splice the cycle into
    the low-layer Hamiltonian cycle.
    """
    if part.cross:
        raise ValueError("pairing has cross pairs; use extend_cross")
    b = part.base_n
    low_pairing = Pairing(b, part.low)
    m_low = _checked_oracle_call(oracle, low_pairing)
    mirror = Pairing(b, m_low.pairs)
    high_as_base = Pairing(b, _shift_down(part.high, b))
    decomp = union_cycle_decomposition(high_as_base, mirror)
    removed = set()
    splices = []
    verticals = []
    for i in range(len(decomp.cycles)):
        e = min(decomp.cycle_edges(i, 1))  # smallest mirrored-matching edge
        removed.add(e)
        splices.append((e, (e[0] + b, e[1] + b)))
        verticals.extend([(e[0], e[0] + b), (e[1], e[1] + b)])
    kept = [e for e in m_low.pairs if e not in removed]
    pairs = tuple(kept) + _shift_up(tuple(kept), b) + tuple(verticals)
    matching = PerfectMatching(s.host.n, pairs, s.host)
    trace = ExtensionTrace(level=1, branch="no_cross", splices=tuple(splices))
    return matching, trace


def extend_cross(
    part: PairingPartition, s: PrismStructure, oracle: ExtensionOracle
) -> tuple[PerfectMatching, ExtensionTrace]:
    """Extend a prism pairing with cross pairs.

    The low endpoints of the cross pairs are paired ascending-consecutively
    into completion pairs; the oracle extends low pairs plus completions into
    a Hamiltonian cycle of the low layer's complete graph.  Cutting that cycle
    at the completion pairs leaves paths whose endpoints, routed through their
    cross partners, induce the extra pairs the high layer must carry; a second
    oracle call extends the high layer, and the two matchings together extend
    the whole pairing.
    """
    if not part.cross:
        raise ValueError("pairing has no cross pairs; use extend_no_cross")
    if len(part.cross) % 2:
        raise ValueError("cross pair count must be even (layers of even order)")
    b = part.base_n
    to_high = {u: v for (u, v) in part.cross}
    low_ends = sorted(to_high)
    completion = tuple(
        (low_ends[i], low_ends[i + 1]) for i in range(0, len(low_ends), 2)
    )
    low_pairing = Pairing(b, part.low + completion)
    m_low = _checked_oracle_call(oracle, low_pairing)
    cycle = union_cycle_decomposition(low_pairing, Pairing(b, m_low.pairs)).cycles[0]
    size = len(cycle)
    comp_set = set(completion)
    cuts = [
        i for i in range(0, size, 2)
        if normalize_edge(cycle[i], cycle[(i + 1) % size]) in comp_set
    ]
    induced = []
    for pos, i in enumerate(cuts):
        j = cuts[(pos + 1) % len(cuts)]
        path_start = cycle[(i + 1) % size]
        path_end = cycle[j]
        induced.append(normalize_edge(to_high[path_start], to_high[path_end]))
    high_pairing = Pairing(b, _shift_down(part.high + tuple(induced), b))
    m_high = _checked_oracle_call(oracle, high_pairing)
    pairs = m_low.pairs + _shift_up(m_high.pairs, b)
    matching = PerfectMatching(s.host.n, pairs, s.host)
    trace = ExtensionTrace(
        level=1,
        branch="cross",
        completion_pairs=completion,
        induced_pairs=tuple(sorted(induced)),
    )
    return matching, trace


class MemoizedBaseOracle:
    """Brute-force extension oracle with a per-pairing cache.

    Failures are cached too and re-raise BaseNotExtendable.  Safe for use
    from multiple threads: cache entries for a key are only ever written with
    identical values, so a lost race merely recomputes.
    """

    def __init__(self, graph: Graph, max_nodes: int | None = None):
        if graph.n % 2:
            raise ValueError("pairings need an even vertex count")
        self.graph = graph
        self.max_nodes = max_nodes
        self.cache: dict[Pairing, PerfectMatching | None] = {}

    def __call__(self, pairing: Pairing) -> PerfectMatching:
        if pairing in self.cache:
            found = self.cache[pairing]
        else:
            found = find_extension_bruteforce(self.graph, pairing, self.max_nodes)
            self.cache[pairing] = found
        if found is None:
            raise BaseNotExtendable(self.graph, pairing)
        return found


def memoized_base_oracle(graph: Graph, max_nodes: int | None = None) -> MemoizedBaseOracle:
    return MemoizedBaseOracle(graph, max_nodes)


def extend(
    p: Pairing, tower: PrismTower, base_oracle: ExtensionOracle
) -> tuple[PerfectMatching, ExtensionTrace]:
    """Extend a pairing of a tower's top, recursing on the last prism bit.

    Height-0 towers delegate to the base oracle.  BaseNotExtendable from the
    oracle propagates with the stuck base pairing.  Identical inputs yield
    identical matchings and traces.
    """
    if p.n != tower.top.n:
        raise ValueError("pairing order must equal tower top order")
    if tower.k == 0:
        matching = _checked_oracle_call(base_oracle, p)
        return matching, ExtensionTrace(level=0, branch="base")
    structure, sub = tower.split()
    child_traces: list[ExtensionTrace] = []

    def sub_oracle(pairing: Pairing) -> PerfectMatching:
        matching, trace = extend(pairing, sub, base_oracle)
        child_traces.append(trace)
        return matching

    part = partition_pairing(p, structure)
    if part.cross:
        matching, trace = extend_cross(part, structure, sub_oracle)
    else:
        matching, trace = extend_no_cross(part, structure, sub_oracle)
    trace = replace(trace, level=tower.k, children=tuple(child_traces))
    assert is_hamiltonian_extension(p, matching)
    return matching, trace
