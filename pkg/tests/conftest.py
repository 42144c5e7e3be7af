"""Shared test helpers: independent oracles and deterministic corpora."""
from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

import kindep as kd

NAMED_GRAPHS = [
    "petersen", "heawood", "pappus", "desargues", "moebius-kantor",
    "nauru", "dodecahedron", "hexahedron", "icosahedron", "hexagon",
]


def floyd_warshall(g: kd.Graph) -> np.ndarray:
    """Independent all-pairs shortest path oracle."""
    n = g.n
    INF = 10**6
    dist = np.full((n, n), INF, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    for u, v in g.edges:
        dist[u, v] = dist[v, u] = 1
    for k in range(n):
        dist = np.minimum(dist, dist[:, k : k + 1] + dist[k : k + 1, :])
    return dist


def girth(g: kd.Graph) -> int:
    """Shortest cycle length by BFS from every vertex."""
    from collections import deque

    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[int(u)].append(int(v))
        adj[int(v)].append(int(u))
    best = 10**9
    for root in range(g.n):
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, depth[u] + depth[w] + 1)
        if best == 3:
            return 3
    return best


def random_connected_graph(rng: random.Random, n: int, extra_p: float = 0.3) -> kd.Graph:
    """Random spanning tree plus extra edges: always connected, deterministic."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        u, v = order[i], order[j]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_p:
                edges.add((u, v))
    return kd.from_edge_list(edges, n, name=f"rand-{n}")


def exhaustive_alpha_k(g: kd.Graph, k: int) -> int:
    """Exact alpha_k by subset enumeration over bitmasks (n <= ~16)."""
    gk = kd.power_graph(g, k)
    adj = [0] * g.n
    for u, v in gk.edges:
        adj[int(u)] |= 1 << int(v)
        adj[int(v)] |= 1 << int(u)
    best = 0
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size <= best:
            continue
        rest = mask
        ok = True
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if adj[v] & mask:
                ok = False
                break
        if ok:
            best = size
    return best


def alternating_by_enumeration(thetas: np.ndarray, k: int) -> float:
    """Independent LP oracle: enumerate basic solutions in the monomial basis.

    Every vertex of {p : |p(theta_i)| <= 1} activates k+1 constraints, i.e.
    interpolates +-1 on k+1 of the nodes; try all node subsets and sign
    patterns and keep the feasible maximum of p(theta_0).
    """
    theta0 = float(thetas[0])
    tail = np.asarray(thetas[1:], dtype=np.float64)
    best = -np.inf
    for subset in itertools.combinations(range(len(tail)), k + 1):
        nodes = tail[list(subset)]
        V = np.vander(nodes, k + 1, increasing=True)
        for signs in itertools.product((1.0, -1.0), repeat=k + 1):
            try:
                coef = np.linalg.solve(V, np.array(signs))
            except np.linalg.LinAlgError:
                continue
            vals = np.polynomial.polynomial.polyval(tail, coef)
            if np.max(np.abs(vals)) <= 1.0 + 1e-7:
                best = max(best, float(np.polynomial.polynomial.polyval(theta0, coef)))
    return best


@pytest.fixture(scope="session")
def named_corpus():
    out = {}
    for name in NAMED_GRAPHS:
        g = kd.named(name)
        out[name] = (g, kd.eigendecompose(g))
    return out
