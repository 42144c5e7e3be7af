"""Exact ground truth for alpha_k and the diameter.

alpha_k(G) equals the independence number of the k-th power graph, computed
here by a bitset branch-and-bound with greedy clique-cover pruning.  Exact as
long as the node budget is not exhausted; otherwise the best set found so far
is returned flagged inexact.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParametersError
from .graphs import Graph, distances, power_graph

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class ExactResult:
    alpha_k: int
    witness: tuple[int, ...]
    nodes_explored: int
    exact: bool


class _Search:
    def __init__(self, adj: list[int], budget: int):
        self.adj = adj
        self.n = len(adj)
        self.budget = budget
        self.nodes = 0
        self.best = 0
        self.best_set = 0
        self.exhausted = False

    def clique_cover_bound(self, cand: int) -> int:
        """Greedy clique cover of the candidate subgraph; #cliques >= MIS size."""
        cliques: list[int] = []
        rest = cand
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            vbit = 1 << v
            for i, cl in enumerate(cliques):
                if cl & ~self.adj[v] == 0:  # v adjacent to every clique member
                    cliques[i] = cl | vbit
                    break
            else:
                cliques.append(vbit)
        return len(cliques)

    def run(self, cand: int, chosen: int, size: int) -> None:
        if self.exhausted:
            return
        self.nodes += 1
        if self.nodes > self.budget:
            self.exhausted = True
            return
        if size > self.best:
            self.best = size
            self.best_set = chosen
        if cand == 0:
            return
        if size + self.clique_cover_bound(cand) <= self.best:
            return
        # branch on the candidate of highest degree within the candidate set
        v, vdeg = -1, -1
        rest = cand
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            deg = (self.adj[u] & cand).bit_count()
            if deg > vdeg:
                v, vdeg = u, deg
        vbit = 1 << v
        self.run(cand & ~(self.adj[v] | vbit), chosen | vbit, size + 1)
        self.run(cand & ~vbit, chosen, size)


def maximum_independent_set(adj: list[int], budget: int = DEFAULT_BUDGET) -> tuple[int, tuple[int, ...], int, bool]:
    """MIS of a graph given as bitmask adjacency; returns (size, set, nodes, exact)."""
    search = _Search(adj, budget)
    search.run((1 << len(adj)) - 1, 0, 0)
    members = tuple(i for i in range(len(adj)) if search.best_set >> i & 1)
    return search.best, members, search.nodes, not search.exhausted


def exact_alpha_k(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Exact alpha_k by branch-and-bound on the k-th power graph."""
    if k < 1:
        raise InvalidParametersError(f"k must be >= 1, got {k}")
    gk = power_graph(g, k)
    adj = [0] * g.n
    for u, v in gk.edges:
        adj[int(u)] |= 1 << int(v)
        adj[int(v)] |= 1 << int(u)
    size, members, nodes, exact = maximum_independent_set(adj, budget)
    dist = distances(g).dist
    for a in members:
        for b in members:
            if a < b and dist[a][b] <= k:
                raise AssertionError(
                    f"witness vertices {a},{b} at distance {dist[a][b]} <= {k}"
                )
    return ExactResult(alpha_k=size, witness=members, nodes_explored=nodes, exact=exact)


def exact_diameter(g: Graph) -> int:
    """Maximum BFS eccentricity."""
    return distances(g).diameter
