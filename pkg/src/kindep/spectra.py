"""Adjacency spectra and polynomial-of-adjacency diagonal statistics.

The bound formulas consume four scalars derived from a polynomial p and a
graph G: the extreme diagonal entries W(p), w(p) of p(A), and the extreme
values Lambda(p), lambda(p) of p over the nontrivial eigenvalues (all but one
copy of the Perron root).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InvalidSpectrumError, SizeLimitError
from .graphs import Graph

# entries of A^k are bounded by max_degree^k; keep them inside int64
_INT64_SAFE_BITS = 62


@dataclass(frozen=True)
class Spectrum:
    """Adjacency eigenvalues of a connected graph.

    ``values`` is the full multiset sorted descending (length n); ``thetas``
    and ``mults`` give the distinct eigenvalues theta_0 > ... > theta_d with
    multiplicities.  Connectedness guarantees m_0 = 1, which the constructor
    path enforces.
    """

    thetas: np.ndarray
    mults: np.ndarray
    values: np.ndarray

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def d(self) -> int:
        return len(self.thetas) - 1

    @property
    def theta0(self) -> float:
        return float(self.thetas[0])

    @property
    def theta_min(self) -> float:
        return float(self.thetas[-1])

    def distinct(self) -> list[tuple[float, int]]:
        return [(float(t), int(m)) for t, m in zip(self.thetas, self.mults)]

    def format(self) -> str:
        """Render as a `theta^mult` list, e.g. ``49^1 35^13 ...``."""
        parts = []
        for t, m in self.distinct():
            ts = f"{t:.6g}"
            parts.append(ts if m == 1 else f"{ts}^{m}")
        return " ".join(parts)


@dataclass(frozen=True)
class PolyStats:
    """Diagonal and spectral extremes of p(A) for one polynomial p."""

    W: float
    w: float
    Lambda: float
    lam: float
    p_at_top: float


def group_spectrum(values: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Merge a descending eigenvalue multiset into distinct values.

    Adjacent values closer than ``tol`` join the same group; the
    representative is the group mean (= multiplicity-weighted mean).
    """
    values = np.asarray(values, dtype=np.float64)
    if len(values) == 0:
        return np.empty(0), np.empty(0, dtype=np.int64)
    gaps = -np.diff(values)
    if np.any(gaps < -tol):
        raise InvalidSpectrumError("eigenvalues must be sorted descending")
    breaks = np.nonzero(gaps > tol)[0]
    starts = np.concatenate([[0], breaks + 1])
    ends = np.concatenate([breaks + 1, [len(values)]])
    thetas = np.array([values[a:b].mean() for a, b in zip(starts, ends)])
    mults = (ends - starts).astype(np.int64)
    return thetas, mults


def eigendecompose(g: Graph, tol: float | None = None) -> Spectrum:
    """Full symmetric eigendecomposition of the adjacency matrix.

    ``tol`` overrides the grouping tolerance (default 1e-7 * max(1, theta_0)).
    A sample of recomputed eigenpairs is residual-checked; failure raises
    ConvergenceError.  Trace identities and simplicity of the Perron root are
    verified before the spectrum is returned.
    """
    A = g.adjacency_dense()
    try:
        w, V = np.linalg.eigh(A)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigensolver failed: {exc}") from exc
    order = np.argsort(w)[::-1]
    values = w[order]

    # residual check on up to 20 spread-out eigenpairs
    max_deg = int(g.degrees.max()) if g.n else 0
    idx = np.unique(np.linspace(0, g.n - 1, num=min(20, g.n)).astype(int))
    resid_tol = max(1e-8 * g.n * max(max_deg, 1), 1e-12)
    for i in idx:
        v = V[:, order[i]]
        r = np.linalg.norm(A @ v - values[i] * v)
        if r > resid_tol:
            raise ConvergenceError(
                f"eigenpair residual {r:.3e} exceeds {resid_tol:.3e}"
            )

    gtol = tol if tol is not None else 1e-7 * max(1.0, abs(float(values[0])))
    thetas, mults = group_spectrum(values, gtol)

    n = g.n
    if int(mults.sum()) != n:
        raise InvalidSpectrumError("multiplicities do not sum to n")
    if abs(float(np.dot(mults, thetas))) > 1e-8 * n:
        raise InvalidSpectrumError("trace of adjacency is not zero")
    if abs(float(np.dot(mults, thetas**2)) - 2 * g.m) > 1e-6 * max(1, g.m):
        raise InvalidSpectrumError("sum of squared eigenvalues != 2m")
    if n > 1 and int(mults[0]) != 1:
        raise InvalidSpectrumError(
            "Perron eigenvalue is not simple; grouping tolerance too coarse?"
        )
    return Spectrum(thetas=thetas, mults=mults, values=values)


def diag_powers(g: Graph, k: int, block: int = 512) -> np.ndarray:
    """diag(A^ell) for ell = 0..k as exact int64, shape (k+1, n).

    Works per source block: repeatedly applies the sparse adjacency to a slab
    of unit vectors, reading off the diagonal entry after each application.
    Never forms a dense matrix power.
    """
    if k < 0:
        raise InvalidSpectrumError("power must be >= 0")
    cache = g._cache.setdefault("diag_powers", {})
    have = cache.get("k", -1)
    if k <= have:
        return cache["table"][: k + 1]

    max_deg = int(g.degrees.max()) if g.n else 0
    if max_deg > 1 and k * math.log2(max_deg) > _INT64_SAFE_BITS:
        raise SizeLimitError(
            f"diag(A^{k}) may overflow int64 for max degree {max_deg}"
        )
    A = g.adjacency_csr()
    n = g.n
    out = np.zeros((k + 1, n), dtype=np.int64)
    out[0] = 1
    for start in range(0, n, block):
        stop = min(start + block, n)
        width = stop - start
        V = np.zeros((n, width), dtype=np.int64)
        V[np.arange(start, stop), np.arange(width)] = 1
        for ell in range(1, k + 1):
            V = A @ V
            out[ell, start:stop] = V[np.arange(start, stop), np.arange(width)]
    cache["k"] = k
    cache["table"] = out
    return out


def poly_stats(g: Graph, spectrum: Spectrum, p) -> PolyStats:
    """W, w, Lambda, lambda and p(theta_0) for a polynomial p.

    Lambda/lambda range over the distinct eigenvalues theta_1..theta_d, which
    equals the range over the multiset with one copy of the Perron root
    removed because m_0 = 1.
    """
    if spectrum.d < 1:
        raise InvalidSpectrumError("need at least two distinct eigenvalues")
    coeffs = np.asarray(p.coeffs, dtype=np.float64)
    table = diag_powers(g, len(coeffs) - 1)
    diag = coeffs @ table.astype(np.float64)
    tail = p(spectrum.thetas[1:])
    return PolyStats(
        W=float(diag.max()),
        w=float(diag.min()),
        Lambda=float(np.max(tail)),
        lam=float(np.min(tail)),
        p_at_top=float(p(spectrum.theta0)),
    )


def is_walk_regular(g: Graph, spectrum: Spectrum) -> bool:
    """True iff diag(A^ell) is vertex-independent for ell = 0..d."""
    table = diag_powers(g, spectrum.d)
    return all(int(row.min()) == int(row.max()) for row in table)
