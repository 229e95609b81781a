"""Pairings, perfect matchings, and the pairing-Hamiltonian property.

A pairing is a perfect matching of the complete graph on a graph's vertices;
a graph has the pairing-Hamiltonian (PH) property when every pairing extends
by a perfect matching of the graph itself to a Hamiltonian cycle of the
complete graph.  Pairings enumerate in canonical order: always pair the
smallest unpaired vertex next, partners ascending.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional

from .graphs import BudgetExceeded, Edge, Graph, normalize_edge


def double_factorial(k: int) -> int:
    if k < -1:
        raise ValueError("double factorial needs k >= -1")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def pairing_count(n: int) -> int:
    """Number of pairings of n vertices: (n-1)!! for even n."""
    if n < 0 or n % 2:
        raise ValueError("pairings need an even, nonnegative vertex count")
    return double_factorial(n - 1)


@dataclass(frozen=True)
class Pairing:
    """Perfect matching of K_n, stored canonically (each pair ascending,
    pairs sorted lexicographically)."""

    n: int
    pairs: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n % 2:
            raise ValueError("a pairing needs an even, nonnegative vertex count")
        norm = tuple(sorted(normalize_edge(u, v) for (u, v) in self.pairs))
        object.__setattr__(self, "pairs", norm)
        seen = set()
        for (u, v) in norm:
            if not 0 <= u < v < self.n:
                raise ValueError(f"pair ({u}, {v}) out of range for n={self.n}")
            if u in seen or v in seen:
                raise ValueError(f"vertex paired twice in {norm}")
            seen.add(u)
            seen.add(v)
        if len(seen) != self.n:
            raise ValueError("pairs do not cover every vertex")

    @cached_property
    def partner(self) -> tuple[int, ...]:
        out = [0] * self.n
        for (u, v) in self.pairs:
            out[u] = v
            out[v] = u
        return tuple(out)

    def partner_of(self, v: int) -> int:
        return self.partner[v]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Pairing":
        if not isinstance(data, dict) or "n" not in data or "pairs" not in data:
            raise ValueError("pairing JSON needs 'n' and 'pairs' keys")
        pairs = data["pairs"]
        if not isinstance(pairs, list):
            raise ValueError("pairing JSON: 'pairs' must be a list")
        parsed = []
        for p in pairs:
            if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p)):
                raise ValueError(f"pairing JSON: malformed pair entry {p!r}")
            parsed.append((p[0], p[1]))
        return cls(data["n"], tuple(parsed))


@dataclass(frozen=True)
class PerfectMatching(Pairing):
    """A pairing whose pairs are all edges of a host graph."""

    host: Graph

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.host.n != self.n:
            raise ValueError("matching order must equal host order")
        for e in self.pairs:
            if e not in self.host.edges:
                raise ValueError(f"pair {e} is not an edge of the host graph")


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_pairings(n: int, start: int = 0) -> Iterator[Pairing]:
    """Yield all pairings of 0..n-1 in canonical order, starting at the given
    canonical index (so streams are restartable)."""
    total = pairing_count(n)
    if not 0 <= start <= total:
        raise ValueError(f"start index {start} outside 0..{total}")

    def rec(avail: tuple[int, ...], offset: int) -> Iterator[tuple[Edge, ...]]:
        if not avail:
            yield ()
            return
        u, rest = avail[0], avail[1:]
        block = double_factorial(len(avail) - 3)
        first, offset = divmod(offset, block)
        for j in range(first, len(rest)):
            v = rest[j]
            sub = rest[:j] + rest[j + 1:]
            for tail in rec(sub, offset):
                yield ((u, v),) + tail
            offset = 0

    if start == total:
        return
    for pairs in rec(tuple(range(n)), start):
        yield Pairing(n, pairs)


def pairing_at_index(n: int, index: int) -> Pairing:
    """The pairing at a canonical index, without enumerating predecessors."""
    total = pairing_count(n)
    if not 0 <= index < total:
        raise ValueError(f"index {index} outside 0..{total - 1}")
    return next(enumerate_pairings(n, index))


def random_pairing(n: int, rng: random.Random) -> Pairing:
    """Uniform random pairing drawn from the given rng."""
    verts = list(range(n))
    rng.shuffle(verts)
    return Pairing(n, tuple((verts[i], verts[i + 1]) for i in range(0, n, 2)))


def enumerate_perfect_matchings(g: Graph) -> Iterator[PerfectMatching]:
    """Yield all perfect matchings of g, smallest-unmatched-vertex first."""
    if g.n % 2:
        return

    def rec(avail: frozenset[int]) -> Iterator[tuple[Edge, ...]]:
        if not avail:
            yield ()
            return
        u = min(avail)
        for v in g.adjacency[u]:
            if v > u and v in avail:
                for tail in rec(avail - {u, v}):
                    yield ((u, v),) + tail

    for pairs in rec(frozenset(range(g.n))):
        yield PerfectMatching(g.n, pairs, g)


# ---------------------------------------------------------------------------
# unions of pairings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleDecomposition:
    """The union of two pairings as alternating cycles.

    Each cycle starts at its smallest vertex, its first edge comes from the
    first pairing, and edge sources alternate around the cycle (edge i joins
    cycle[i] to cycle[i+1] and comes from the first pairing iff i is even).
    A pair present in both pairings appears as an explicit 2-cycle.  Cycles
    are ordered by smallest vertex.
    """

    n: int
    cycles: tuple[tuple[int, ...], ...]

    @property
    def two_cycle_count(self) -> int:
        return sum(1 for c in self.cycles if len(c) == 2)

    @property
    def is_single_hamiltonian(self) -> bool:
        return len(self.cycles) == 1 and len(self.cycles[0]) == self.n and self.n >= 2

    def cycle_edges(self, i: int, source: int) -> tuple[Edge, ...]:
        """Edges of cycle i contributed by pairing 0 (first) or 1 (second)."""
        if source not in (0, 1):
            raise ValueError("source must be 0 or 1")
        c = self.cycles[i]
        return tuple(
            normalize_edge(c[j], c[(j + 1) % len(c)]) for j in range(source, len(c), 2)
        )


def union_cycle_decomposition(a: Pairing, b: Pairing) -> CycleDecomposition:
    """Decompose the union multigraph of two pairings into alternating cycles."""
    if a.n != b.n:
        raise ValueError("pairings must cover the same vertex count")
    pa, pb = a.partner, b.partner
    visited = [False] * a.n
    cycles = []
    for s in range(a.n):
        if visited[s]:
            continue
        seq = [s]
        visited[s] = True
        cur, take_first = s, True
        while True:
            nxt = pa[cur] if take_first else pb[cur]
            take_first = not take_first
            if nxt == s:
                break
            seq.append(nxt)
            visited[nxt] = True
            cur = nxt
        cycles.append(tuple(seq))
    return CycleDecomposition(a.n, tuple(cycles))


def is_hamiltonian_extension(p: Pairing, n_matching: Pairing) -> bool:
    """Whether the union of pairing and matching is one Hamiltonian cycle of
    the complete graph (which forces the two to be disjoint)."""
    if p.n != n_matching.n:
        raise ValueError("pairing and matching must cover the same vertex count")
    if set(p.pairs) & set(n_matching.pairs):
        return False
    return union_cycle_decomposition(p, n_matching).is_single_hamiltonian


# ---------------------------------------------------------------------------
# brute-force extension search
# ---------------------------------------------------------------------------

def find_extension_bruteforce(
    g: Graph, p: Pairing, max_nodes: int | None = None
) -> Optional[PerfectMatching]:
    """Exhaustive search for a matching extension of a pairing.

    Grows an alternating closed walk from vertex 0: follow the pairing edge,
    then branch over graph edges to unvisited vertices in ascending order,
    closing back to 0 at full length.  The first complete walk gives the
    matching, so the result is deterministic.  Returns None when no extension
    exists; raises BudgetExceeded after max_nodes branch expansions.
    """
    if g.n != p.n:
        raise ValueError("graph and pairing must have the same vertex count")
    if g.n < 2:
        return None
    partner = p.partner
    adj = g.adjacency
    n = g.n
    visited = [False] * n
    chosen: list[Edge] = []
    nodes = [0]

    def walk(v: int, count: int) -> bool:
        u = partner[v]
        if visited[u]:
            return False
        visited[u] = True
        if count + 2 == n:
            if g.has_edge(u, 0):
                chosen.append(normalize_edge(u, 0))
                return True
            visited[u] = False
            return False
        ok = False
        for w in adj[u]:
            if visited[w]:
                continue
            nodes[0] += 1
            if max_nodes is not None and nodes[0] > max_nodes:
                visited[u] = False
                raise BudgetExceeded(f"extension search exceeded {max_nodes} nodes")
            visited[w] = True
            chosen.append(normalize_edge(u, w))
            if walk(w, count + 2):
                ok = True
                break
            chosen.pop()
            visited[w] = False
        if not ok:
            visited[u] = False
        return ok

    visited[0] = True
    if not walk(0, 0):
        return None
    out = PerfectMatching(n, tuple(chosen), g)
    assert is_hamiltonian_extension(p, out)
    return out


# ---------------------------------------------------------------------------
# PH verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchBudget:
    """Limits for verify_ph: pairings examined and search nodes per pairing."""

    max_pairings: int | None = None
    max_nodes_per_pairing: int | None = None


@dataclass(frozen=True)
class PHVerdict:
    """Outcome of a PH check.

    is_ph is None when the budget ran out before a decision; witness is the
    first failing pairing in canonical order when is_ph is False.
    """

    is_ph: bool | None
    witness: Pairing | None
    pairings_checked: int
    extensions_found: int

    @property
    def status(self) -> str:
        if self.is_ph is None:
            return "budget_exceeded"
        return "ph" if self.is_ph else "not_ph"

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "is_ph": self.is_ph,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "pairings_checked": self.pairings_checked,
            "extensions_found": self.extensions_found,
        }


def _scan_range(args: tuple[Graph, int, int, int | None]) -> tuple[str, int, tuple[Edge, ...] | None]:
    """Check pairings lo..hi-1; report the first failure or truncation."""
    g, lo, hi, node_budget = args
    for idx, p in zip(range(lo, hi), enumerate_pairings(g.n, lo)):
        try:
            found = find_extension_bruteforce(g, p, max_nodes=node_budget)
        except BudgetExceeded:
            return ("budget", idx, p.pairs)
        if found is None:
            return ("fail", idx, p.pairs)
    return ("done", hi, None)


def verify_ph(g: Graph, budget: SearchBudget | None = None, workers: int = 1) -> PHVerdict:
    """Decide the pairing-Hamiltonian property by exhausting pairings in
    canonical order.

    Only even orders >= 4 are in the property's domain; anything else raises
    ValueError.  The witness is the canonically first failing pairing, and the
    stats are derived from its index, so results are identical for any worker
    count.  An exhausted budget yields is_ph None, distinct from False.
    """
    if g.n < 4 or g.n % 2:
        raise ValueError("the PH-property is defined for even orders >= 4")
    budget = budget or SearchBudget()
    total = pairing_count(g.n)
    limit = total if budget.max_pairings is None else min(total, budget.max_pairings)
    node_budget = budget.max_nodes_per_pairing

    if workers <= 1 or limit <= 1:
        results = [_scan_range((g, 0, limit, node_budget))]
    else:
        step = (limit + workers - 1) // workers
        blocks = [(g, lo, min(lo + step, limit), node_budget) for lo in range(0, limit, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_range, blocks))

    events = sorted(r for r in results if r[0] != "done")
    first_fail = next((r for r in events if r[0] == "fail"), None)
    first_budget = next((r for r in events if r[0] == "budget"), None)
    if first_fail and (not first_budget or first_fail[1] < first_budget[1]):
        idx = first_fail[1]
        return PHVerdict(False, Pairing(g.n, first_fail[2]), idx + 1, idx)
    if first_budget:
        idx = first_budget[1]
        return PHVerdict(None, None, idx + 1, idx)
    if limit < total:
        return PHVerdict(None, None, limit, limit)
    return PHVerdict(True, None, total, total)
