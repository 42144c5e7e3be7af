"""Graph representation, named-family generators, distances, and power graphs.

Vertices are dense integers 0..n-1.  Graphs are simple, undirected, and
required to be connected at construction time: the bound machinery assumes a
single Perron eigenvalue, which only holds for connected graphs.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from .errors import (
    DisconnectedGraphError,
    IndexOutOfRangeError,
    InvalidParametersError,
    SelfLoopError,
    SizeLimitError,
    UnknownGraphError,
)

JOHNSON_VERTEX_LIMIT = 10_000


@dataclass(frozen=True)
class Graph:
    """Connected simple undirected graph.

    ``edges`` is the canonical edge array: shape (m, 2), u < v in every row,
    rows sorted lexicographically.  Derived structures (degrees, sparse
    adjacency, distances) are memoized in ``_cache``; the graph itself is
    immutable, so cached values never go stale.
    """

    n: int
    edges: np.ndarray
    name: str = "graph"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> np.ndarray:
        if "degrees" not in self._cache:
            deg = np.zeros(self.n, dtype=np.int64)
            if self.m:
                np.add.at(deg, self.edges[:, 0], 1)
                np.add.at(deg, self.edges[:, 1], 1)
            self._cache["degrees"] = deg
        return self._cache["degrees"]

    def adjacency_csr(self) -> sp.csr_matrix:
        """Sparse 0/1 adjacency with int64 entries."""
        if "csr" not in self._cache:
            if self.m:
                u, v = self.edges[:, 0], self.edges[:, 1]
                rows = np.concatenate([u, v])
                cols = np.concatenate([v, u])
            else:
                rows = cols = np.empty(0, dtype=np.int64)
            data = np.ones(len(rows), dtype=np.int64)
            self._cache["csr"] = sp.csr_matrix(
                (data, (rows, cols)), shape=(self.n, self.n)
            )
        return self._cache["csr"]

    def adjacency_dense(self) -> np.ndarray:
        """Dense float adjacency matrix (for the eigensolver)."""
        if "dense" not in self._cache:
            self._cache["dense"] = self.adjacency_csr().toarray().astype(np.float64)
        return self._cache["dense"]

    def edge_set(self) -> set[tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edges}

    def __repr__(self) -> str:  # keep the cache out of reprs
        return f"Graph(name={self.name!r}, n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DistanceInfo:
    """All-pairs hop distances and the derived diameter."""

    dist: np.ndarray
    diameter: int


def from_edge_list(
    edges, n: int, name: str = "graph", allow_disconnected: bool = False
) -> Graph:
    """Build a graph from an iterable of vertex pairs.

    Duplicate and reversed pairs are collapsed.  Raises on self-loops,
    out-of-range indices, and (unless ``allow_disconnected``) graphs that are
    not connected.
    """
    if n < 1:
        raise InvalidParametersError(f"vertex count must be >= 1, got {n}")
    canon = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRangeError(f"edge ({u},{v}) outside [0,{n})")
        canon.add((u, v) if u < v else (v, u))
    arr = np.array(sorted(canon), dtype=np.int64).reshape(len(canon), 2)
    g = Graph(n=n, edges=arr, name=name)
    if not allow_disconnected and not _is_connected(g):
        raise DisconnectedGraphError(f"graph {name!r} is not connected")
    return g


def _is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    if g.m == 0:
        return False
    ncomp, _ = csgraph.connected_components(g.adjacency_csr(), directed=False)
    return ncomp == 1


def distances(g: Graph) -> DistanceInfo:
    """All-pairs BFS distances (connectivity is enforced at construction)."""
    if "distances" not in g._cache:
        d = csgraph.shortest_path(
            g.adjacency_csr(), method="auto", directed=False, unweighted=True
        )
        dist = d.astype(np.int32)
        g._cache["distances"] = DistanceInfo(dist=dist, diameter=int(dist.max()))
    return g._cache["distances"]


def power_graph(g: Graph, k: int) -> Graph:
    """Graph with an edge uv whenever 1 <= dist(u,v) <= k."""
    if k < 1:
        raise InvalidParametersError("power exponent must be >= 1")
    if k == 1:
        return g
    dist = distances(g).dist
    iu, iv = np.triu_indices(g.n, k=1)
    keep = dist[iu, iv] <= k
    pairs = np.stack([iu[keep], iv[keep]], axis=1)
    return Graph(n=g.n, edges=pairs.astype(np.int64), name=f"{g.name}^{k}")


def is_regular(g: Graph) -> int | None:
    """Common degree if the graph is regular, else None."""
    deg = g.degrees
    if g.n == 0:
        return None
    first = int(deg[0])
    return first if bool(np.all(deg == first)) else None


# ---------------------------------------------------------------------------
# generators

def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParametersError(f"cycle needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return from_edge_list(edges, n, name=f"cycle-{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParametersError(f"complete graph needs n >= 1, got {n}")
    edges = list(itertools.combinations(range(n), 2))
    return from_edge_list(edges, n, name=f"complete-{n}")


def generalized_petersen(n: int, j: int) -> Graph:
    """GP(n, j): outer n-cycle, inner star polygon with step j, plus spokes."""
    if n < 3 or not (1 <= j < n / 2):
        raise InvalidParametersError(f"GP({n},{j}) requires n >= 3 and 1 <= j < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))        # outer cycle
        edges.append((i, n + i))              # spoke
        edges.append((n + i, n + (i + j) % n))  # inner step-j cycle
    return from_edge_list(edges, 2 * n, name=f"gp-{n}-{j}")


def johnson(v: int, s: int) -> Graph:
    """Johnson graph J(v, s): s-subsets of [v], adjacent iff they share s-1 elements."""
    if not (1 <= s <= v):
        raise InvalidParametersError(f"J({v},{s}) requires 1 <= s <= v")
    nverts = math.comb(v, s)
    if nverts > JOHNSON_VERTEX_LIMIT:
        raise SizeLimitError(
            f"J({v},{s}) has {nverts} vertices (limit {JOHNSON_VERTEX_LIMIT})"
        )
    subsets = list(itertools.combinations(range(v), s))
    rank = {sub: i for i, sub in enumerate(subsets)}
    edges = []
    full = set(range(v))
    for i, sub in enumerate(subsets):
        inside = set(sub)
        outside = full - inside
        for a in sub:
            rest = inside - {a}
            for b in outside:
                jdx = rank[tuple(sorted(rest | {b}))]
                if jdx > i:
                    edges.append((i, jdx))
    return from_edge_list(edges, nverts, name=f"johnson-{v}-{s}")


def bipartite_minus_matching(k: int) -> Graph:
    """K_{k+1,k+1} minus a perfect matching: k-regular, bipartite, antipodal, D=3."""
    if k < 2:
        raise InvalidParametersError(f"bipartite_minus_matching requires k >= 2, got {k}")
    left = range(k + 1)
    edges = [(i, k + 1 + j) for i in left for j in left if i != j]
    return from_edge_list(edges, 2 * (k + 1), name=f"bdm-{k}")


def _lcf(shifts: list[int], repeats: int, name: str) -> Graph:
    """Cubic Hamiltonian graph from an LCF pattern."""
    n = len(shifts) * repeats
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges.append((i, (i + shifts[i % len(shifts)]) % n))
    return from_edge_list(edges, n, name=name)


def _icosahedron() -> Graph:
    # apex 0, upper ring 1..5, lower ring 6..10, apex 11
    edges = [(0, i) for i in range(1, 6)]
    edges += [(11, i) for i in range(6, 11)]
    edges += [(i, 1 + (i % 5)) for i in range(1, 6)]           # upper 5-cycle
    edges += [(i, 6 + ((i - 5) % 5)) for i in range(6, 11)]    # lower 5-cycle
    edges += [(1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9), (4, 9), (4, 10), (5, 10), (5, 6)]
    return from_edge_list(edges, 12, name="icosahedron")


_CATALOG = {
    "petersen": lambda: _renamed(generalized_petersen(5, 2), "petersen"),
    "heawood": lambda: _lcf([5, -5], 7, "heawood"),
    "pappus": lambda: _lcf([5, 7, -7, 7, -7, -5], 3, "pappus"),
    "desargues": lambda: _renamed(generalized_petersen(10, 3), "desargues"),
    "moebius-kantor": lambda: _renamed(generalized_petersen(8, 3), "moebius-kantor"),
    "nauru": lambda: _renamed(generalized_petersen(12, 5), "nauru"),
    "dodecahedron": lambda: _renamed(generalized_petersen(10, 2), "dodecahedron"),
    "hexahedron": lambda: _renamed(generalized_petersen(4, 1), "hexahedron"),
    "icosahedron": _icosahedron,
    "hexagon": lambda: _renamed(cycle(6), "hexagon"),
}

_ALIASES = {
    "cube": "hexahedron",
    "q3": "hexahedron",
    "mobius-kantor": "moebius-kantor",
    "c6": "hexagon",
}


def _renamed(g: Graph, name: str) -> Graph:
    return Graph(n=g.n, edges=g.edges, name=name)


def catalog_names() -> list[str]:
    return sorted(_CATALOG)


def named(name: str) -> Graph:
    """Look up a graph in the built-in catalog (case/underscore insensitive)."""
    key = name.strip().lower().replace("_", "-").replace(" ", "-")
    key = _ALIASES.get(key, key)
    if key not in _CATALOG:
        raise UnknownGraphError(
            f"unknown graph {name!r}; available: {', '.join(catalog_names())}"
        )
    return _CATALOG[key]()


# ---------------------------------------------------------------------------
# text format: first line "n m", then one "u v" line per edge; '#' comments

def to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{int(u)} {int(v)}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_text(text: str, name: str = "graph") -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise InvalidParametersError("empty graph file")
    head = rows[0].split()
    if len(head) != 2:
        raise InvalidParametersError(f"header must be 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise InvalidParametersError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InvalidParametersError(f"bad edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(edges, n, name=name)


def save(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(to_text(g))


def load(path) -> Graph:
    with open(path) as fh:
        return from_text(fh.read(), name=str(path))
