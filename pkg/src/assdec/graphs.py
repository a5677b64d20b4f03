"""Simple graphs, edge ideals, chordality and seeded instance generators."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .complex import SimplicialComplex
from .errors import InvalidIdealError, InvalidInputError, ResourceLimitError
from .ideal import MonomialIdeal

MAX_CLIQUE_VERTICES = 24


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        for v in verts:
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise InvalidInputError(f"graph vertices must be positive integers, got {v!r}")
        vset = set(verts)
        edges = set()
        for e in self.edges:
            e = tuple(e)
            if len(e) != 2 or e[0] == e[1]:
                raise InvalidInputError(f"edge {list(e)} is not a 2-subset")
            if not set(e) <= vset:
                raise InvalidInputError(f"edge {list(e)} uses a vertex outside {list(verts)}")
            edges.add(tuple(sorted(e)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    @cached_property
    def adj(self) -> dict:
        out = {v: set() for v in self.vertices}
        for a, b in self.edges:
            out[a].add(b)
            out[b].add(a)
        return {v: frozenset(ns) for v, ns in out.items()}

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset:
        return self.adj[v] | {v}

    def remove(self, vertices) -> "Graph":
        drop = set(vertices)
        return Graph(
            tuple(v for v in self.vertices if v not in drop),
            tuple(e for e in self.edges if not drop & set(e)),
        )

    def complement(self) -> "Graph":
        vs = self.vertices
        return Graph(vs, tuple((a, b) for i, a in enumerate(vs) for b in vs[i + 1:] if b not in self.adj[a]))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data) -> "Graph":
        if not isinstance(data, dict) or "edges" not in data:
            raise InvalidInputError("graph: expected an object with field 'edges'")
        edges = data["edges"]
        if not isinstance(edges, list):
            raise InvalidInputError("graph: 'edges' must be a list of pairs")
        vertices = data.get("vertices")
        if vertices is None:
            vertices = sorted({v for e in edges for v in e})
        return cls(tuple(vertices), tuple(tuple(e) for e in edges))


# ---------------------------------------------------------------------------
# ideals and complexes

def edge_ideal(G: Graph, n: Optional[int] = None) -> MonomialIdeal:
    if not G.edges:
        raise InvalidIdealError("an edgeless graph has the zero edge ideal")
    n = max(G.vertices) if n is None else n
    gens = []
    for a, b in G.edges:
        m = [0] * n
        m[a - 1] = m[b - 1] = 1
        gens.append(tuple(m))
    return MonomialIdeal(n, tuple(gens))


def maximal_cliques(G: Graph) -> list[tuple]:
    """Bron-Kerbosch with Tomita pivoting."""
    if len(G.vertices) > MAX_CLIQUE_VERTICES:
        raise ResourceLimitError(f"clique enumeration is capped at {MAX_CLIQUE_VERTICES} vertices")
    adj = G.adj
    out: list[tuple] = []

    def expand(r: set, p: set, x: set):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(p & adj[u]))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(G.vertices), set())
    return sorted(out)


def clique_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex(G.vertices, tuple(maximal_cliques(G)))


def independence_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex(G.vertices, tuple(maximal_cliques(G.complement())))


# ---------------------------------------------------------------------------
# chordality

def maximum_cardinality_search(G: Graph) -> list[int]:
    """Visit order of MCS; its reverse is a perfect elimination order iff G is chordal."""
    weight = {v: 0 for v in G.vertices}
    order: list[int] = []
    while weight:
        v = max(sorted(weight), key=lambda u: weight[u])
        order.append(v)
        del weight[v]
        for u in G.adj[v]:
            if u in weight:
                weight[u] += 1
    return order


def is_perfect_elimination_order(G: Graph, order: list[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in G.adj[v] if pos[u] > pos[v]]
        for i, a in enumerate(later):
            for b in later[i + 1:]:
                if b not in G.adj[a]:
                    return False
    return True


def _shortest_path(G: Graph, src: int, dst: int, allowed: set) -> Optional[list[int]]:
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for w in sorted(G.adj[u]):
            if w in allowed and w not in prev:
                prev[w] = u
                queue.append(w)
    return None


def chordless_cycle(G: Graph) -> Optional[list[int]]:
    """A chordless cycle of length >= 4, or None if G is chordal.

    Looks for a vertex v with non-adjacent neighbours a, b joined by a path
    avoiding the rest of N[v]; a shortest such path closes a chordless cycle.
    """
    for v in G.vertices:
        nbrs = sorted(G.adj[v])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if b in G.adj[a]:
                    continue
                allowed = (set(G.vertices) - G.closed_neighborhood(v)) | {a, b}
                path = _shortest_path(G, a, b, allowed)
                if path is not None:
                    return [v] + path
    return None


def is_chordal(G: Graph) -> tuple[bool, list[int]]:
    """``(True, perfect elimination order)`` or ``(False, chordless cycle)``."""
    peo = maximum_cardinality_search(G)[::-1]
    if is_perfect_elimination_order(G, peo):
        return True, peo
    cycle = chordless_cycle(G)
    assert cycle is not None, "MCS rejected a graph with no chordless cycle"
    return False, cycle


def is_chordless_cycle(G: Graph, cycle: list[int]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = j == i + 1 or (i == 0 and j == k - 1)
            if (cycle[j] in G.adj[cycle[i]]) != adjacent:
                return False
    return True


def is_star(G: Graph) -> bool:
    """Some vertex is adjacent to every other vertex and there are no other edges."""
    if len(G.vertices) < 2:
        return False
    for c in G.vertices:
        if len(G.adj[c]) == len(G.vertices) - 1 and len(G.edges) == len(G.vertices) - 1:
            return True
    return False


def is_forest(G: Graph) -> bool:
    parent = {v: v for v in G.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in G.edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


# ---------------------------------------------------------------------------
# generators

def star(leaves: int) -> Graph:
    """Center 1 with leaves 2..leaves+1."""
    if leaves < 1:
        raise InvalidInputError("a star needs at least one leaf")
    return Graph(tuple(range(1, leaves + 2)), tuple((1, v) for v in range(2, leaves + 2)))


def path(n: int) -> Graph:
    if n < 2:
        raise InvalidInputError("a path needs at least two vertices")
    return Graph(tuple(range(1, n + 1)), tuple((v, v + 1) for v in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError("a cycle needs at least three vertices")
    return Graph(tuple(range(1, n + 1)), tuple((v, v % n + 1) for v in range(1, n + 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidInputError("a complete graph needs at least one vertex")
    return Graph(tuple(range(1, n + 1)), tuple((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)))


def random_forest(n: int, seed: int, p_attach: float = 0.8) -> Graph:
    if n < 1:
        raise InvalidInputError("a forest needs at least one vertex")
    rng = random.Random(seed)
    edges = [(rng.randrange(1, v), v) for v in range(2, n + 1) if rng.random() < p_attach]
    return Graph(tuple(range(1, n + 1)), tuple(edges))


def random_chordal(n: int, seed: int) -> Graph:
    """Connected chordal graph grown by attaching each new vertex to a clique.

    Every added vertex is simplicial at the time it is added, so the reverse
    insertion order is a perfect elimination order.
    """
    if n < 2:
        raise InvalidInputError("random_chordal needs at least two vertices")
    rng = random.Random(seed)
    adj: dict[int, set] = {1: set()}
    edges = []
    for v in range(2, n + 1):
        u = rng.randrange(1, v)
        clique = [u]
        others = sorted(adj[u])
        rng.shuffle(others)
        for w in others:
            if rng.random() < 0.5 and all(w in adj[c] for c in clique):
                clique.append(w)
        adj[v] = set(clique)
        for c in clique:
            adj[c].add(v)
            edges.append((c, v))
    return Graph(tuple(range(1, n + 1)), tuple(edges))


GENERATORS = {
    "star": lambda size, seed: star(size),
    "path": lambda size, seed: path(size),
    "cycle": lambda size, seed: cycle(size),
    "complete": lambda size, seed: complete(size),
    "random_chordal": random_chordal,
    "random_forest": random_forest,
}


def generate(kind: str, size: int, seed: int = 0) -> Graph:
    """Dispatch by name; ``size`` is the leaf count for stars, else the vertex count."""
    try:
        make = GENERATORS[kind]
    except KeyError:
        raise InvalidInputError(f"unknown graph kind {kind!r}; choose from {sorted(GENERATORS)}")
    return make(size, seed)
