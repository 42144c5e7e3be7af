"""Spectral upper bounds on the k-independence number.

Every bound returns a BoundReport carrying the raw value, the floored integer
(the quantity tables print), an applicability flag, and a witness dict with
the polynomial and the scalar parameters that produced the number.  When a
bound's hypotheses fail (non-regular graph, degenerate denominator, degree
out of range) the report is flagged not-applicable instead of raising, so the
aggregator can skip it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BoundHypothesisError, InvalidDegreeError, NotRegularError
from .graphs import Graph, is_regular
from .polynomials import (
    Poly,
    alternating_polynomial,
    optimal_quadratic,
    predistance_family,
    sum_power_poly,
    theta_index_le_minus_one,
)
from .spectra import Spectrum, diag_powers, is_walk_regular, poly_stats

_FLOOR_EPS = 1e-9
_COUNT_EPS = 1e-9


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one bound applied to one graph.

    ``floored`` is floor(raw) clamped to [1, n] (alpha_k is always >= 1); a
    1e-9 slack absorbs float drift on bounds that are exact integers.
    """

    name: str
    raw: float
    floored: int
    applicable: bool
    reason: str = ""
    witness: dict = field(default_factory=dict)

    def __repr__(self) -> str:
        if not self.applicable:
            return f"BoundReport({self.name}: n/a, {self.reason})"
        return f"BoundReport({self.name}: raw={self.raw:.6g}, floored={self.floored})"


def _report(name: str, raw: float, n: int, witness: dict | None = None) -> BoundReport:
    if not math.isfinite(raw):
        return _na(name, f"non-finite bound value {raw}")
    floored = int(min(n, max(1, math.floor(raw + _FLOOR_EPS))))
    return BoundReport(
        name=name, raw=float(raw), floored=floored, applicable=True,
        witness=witness or {},
    )


def _na(name: str, reason: str) -> BoundReport:
    return BoundReport(
        name=name, raw=math.nan, floored=0, applicable=False, reason=reason
    )


def _count_tol(*magnitudes: float) -> float:
    return _COUNT_EPS * max(1.0, *(abs(m) for m in magnitudes))


# ---------------------------------------------------------------------------
# classical bounds (k = 1)

def cvetkovic(s: Spectrum) -> BoundReport:
    """Inertia bound: alpha <= min(#{lambda_i >= 0}, #{lambda_i <= 0})."""
    tol = _count_tol(float(s.values[0]))
    nonneg = int(np.sum(s.values >= -tol))
    nonpos = int(np.sum(s.values <= tol))
    return _report(
        "cvetkovic", float(min(nonneg, nonpos)), s.n,
        {"nonnegative": nonneg, "nonpositive": nonpos},
    )


def hoffman(s: Spectrum, delta: int | None) -> BoundReport:
    """Ratio bound for regular graphs: alpha <= n(-lambda_n)/(lambda_1-lambda_n)."""
    if delta is None:
        return _na("hoffman", "graph is not regular")
    lam1 = float(s.values[0])
    lamn = float(s.values[-1])
    if lam1 - lamn <= _count_tol(lam1):
        return _na("hoffman", "spectrum has a single point")
    raw = s.n * (-lamn) / (lam1 - lamn)
    return _report("hoffman", raw, s.n, {"lambda_1": lam1, "lambda_n": lamn})


# ---------------------------------------------------------------------------
# alternating-polynomial bound

def alternating_bound(s: Spectrum, k: int, delta: int | None) -> BoundReport:
    """alpha_k <= 2n / (P_k(theta_0) + 1) with P_k the k-alternating polynomial."""
    if delta is None:
        return _na("alternating", "graph is not regular")
    if not (1 <= k <= s.d - 1):
        return _na("alternating", f"needs 1 <= k <= d-1 = {s.d - 1}")
    P = alternating_polynomial(s, k)
    value = float(P(s.theta0))
    raw = 2.0 * s.n / (value + 1.0)
    return _report(
        "alternating", raw, s.n,
        {"poly": list(P.coeffs), "p_at_top": value},
    )


# ---------------------------------------------------------------------------
# diagonal-entry bounds

def power_count_bound(g: Graph, s: Spectrum, k: int) -> BoundReport:
    """Count bound from the extreme diagonal entries of A^k."""
    if k < 1:
        return _na("power_count", "needs k >= 1")
    table = diag_powers(g, k)
    wk, Wk = int(table[k].min()), int(table[k].max())
    vals = s.values.astype(np.float64) ** k
    tol = _count_tol(float(np.max(np.abs(vals))), wk, Wk)
    above = int(np.sum(vals >= wk - tol))
    below = int(np.sum(vals <= Wk + tol))
    return _report(
        "power_count", float(min(above, below)), s.n,
        {"w_k": wk, "W_k": Wk, "count_ge_w": above, "count_le_W": below},
    )


def shifted_sum_power_bound(g: Graph, s: Spectrum, k: int) -> BoundReport:
    """Ratio bound from p = x + ... + x^k shifted by the spectral radius tail.

    Uses W~ = max diag(A + ... + A^k) and theta = max(|theta_1|, |theta_d|):
    alpha_k <= n (W~ + sum theta^j) / (sum delta^j + sum theta^j).
    """
    delta = is_regular(g)
    if delta is None:
        return _na("shifted_sum_power", "graph is not regular")
    if k < 1 or s.d < 1:
        return _na("shifted_sum_power", "needs k >= 1 and d >= 1")
    table = diag_powers(g, k)
    Wt = int(table[1 : k + 1].sum(axis=0).max())
    theta = max(abs(float(s.thetas[1])), abs(float(s.thetas[-1])))
    theta_sum = sum(theta**j for j in range(1, k + 1))
    delta_sum = sum(delta**j for j in range(1, k + 1))
    raw = s.n * (Wt + theta_sum) / (delta_sum + theta_sum)
    return _report(
        "shifted_sum_power", raw, s.n,
        {"W_tilde": Wt, "theta": theta, "theta_sum": theta_sum, "delta_sum": delta_sum},
    )


def sum_power_bound(g: Graph, s: Spectrum, k: int) -> BoundReport:
    """Improved sum-power bound with exact minimum for odd k, -1/2 floor for even k.

    Odd k:  alpha_k <= n (W_k - S(theta_d)) / (S(delta) - S(theta_d)) where
    S(t) = sum_{j=0..k} t^j and W_k = max diag(A + ... + A^k).
    Even k: alpha_k <= n (W_k + 1/2) / (S(delta) + 1/2).
    """
    delta = is_regular(g)
    if delta is None:
        return _na("sum_power", "graph is not regular")
    if k < 1:
        return _na("sum_power", "needs k >= 1")
    table = diag_powers(g, k)
    Wk = int(table[1 : k + 1].sum(axis=0).max())
    delta_sum0 = sum(delta**j for j in range(0, k + 1))
    if k % 2 == 1:
        td = s.theta_min
        tail = sum(td**j for j in range(0, k + 1))
        raw = s.n * (Wk - tail) / (delta_sum0 - tail)
        witness = {"W_k": Wk, "theta_d_sum": tail, "delta_sum": delta_sum0}
    else:
        raw = s.n * (Wk + 0.5) / (delta_sum0 + 0.5)
        witness = {"W_k": Wk, "delta_sum": delta_sum0}
    return _report("sum_power", raw, s.n, witness)


# ---------------------------------------------------------------------------
# general polynomial bounds

def polynomial_count_bound(g: Graph, s: Spectrum, p: Poly) -> BoundReport:
    """Count bound for an arbitrary polynomial p of degree <= k."""
    stats = poly_stats(g, s, p)
    vals = p(s.values)
    tol = _count_tol(float(np.max(np.abs(vals))), stats.w, stats.W)
    above = int(np.sum(vals >= stats.w - tol))
    below = int(np.sum(vals <= stats.W + tol))
    return _report(
        "polynomial_count", float(min(above, below)), s.n,
        {"poly": list(p.coeffs), "w": stats.w, "W": stats.W,
         "count_ge_w": above, "count_le_W": below},
    )


def polynomial_ratio_bound(g: Graph, s: Spectrum, p: Poly) -> BoundReport:
    """Ratio bound alpha_k <= n (W(p) - lambda(p)) / (p(lambda_1) - lambda(p)).

    The witness carries the 2x2 quotient matrix of p(A) for the partition
    into a putative k-independent set of size r = floored and its complement,
    instantiated at the extremal diagonal value W(p).
    """
    if is_regular(g) is None:
        return _na("polynomial_ratio", "graph is not regular")
    stats = poly_stats(g, s, p)
    if stats.p_at_top <= stats.lam + _count_tol(stats.p_at_top, stats.lam):
        return _na("polynomial_ratio", "p(lambda_1) <= lambda(p)")
    raw = s.n * (stats.W - stats.lam) / (stats.p_at_top - stats.lam)
    rep = _report(
        "polynomial_ratio", raw, s.n,
        {"poly": list(p.coeffs), "W": stats.W, "w": stats.w,
         "Lambda": stats.Lambda, "lambda": stats.lam, "p_at_top": stats.p_at_top},
    )
    r = rep.floored
    if 0 < r < s.n:
        off = r * (stats.p_at_top - stats.W) / (s.n - r)
        rep.witness["quotient"] = [
            [stats.W, stats.p_at_top - stats.W],
            [off, stats.p_at_top - off],
        ]
    return rep


def nonnegative_ratio_bound(g: Graph, s: Spectrum, p: Poly) -> BoundReport:
    """alpha_k <= n W(p) / p(lambda_1) for p nonnegative on the spectrum."""
    if is_regular(g) is None:
        return _na("nonnegative_ratio", "graph is not regular")
    vals = p(s.thetas)
    tol = _count_tol(float(np.max(np.abs(vals))))
    if float(np.min(vals)) < -tol:
        return _na("nonnegative_ratio", "p is negative somewhere on the spectrum")
    stats = poly_stats(g, s, p)
    if stats.p_at_top <= tol:
        return _na("nonnegative_ratio", "p(lambda_1) is not positive")
    raw = s.n * stats.W / stats.p_at_top
    return _report(
        "nonnegative_ratio", raw, s.n,
        {"poly": list(p.coeffs), "W": stats.W, "p_at_top": stats.p_at_top},
    )


# ---------------------------------------------------------------------------
# the optimal quadratic (k = 2)

def quadratic_ratio_bound(g: Graph, s: Spectrum) -> BoundReport:
    """Closed-form optimal degree-2 bound on alpha_2 for regular graphs.

    With theta_i the largest eigenvalue <= -1:
    alpha_2 <= n (theta_0 + theta_i theta_{i-1}) /
               ((theta_0 - theta_i)(theta_0 - theta_{i-1})).
    """
    delta = is_regular(g)
    if delta is None:
        return _na("quadratic_ratio", "graph is not regular")
    if s.d < 2:
        return _na("quadratic_ratio", "needs at least 3 distinct eigenvalues")
    i = theta_index_le_minus_one(s)
    th0 = s.theta0
    ti = float(s.thetas[i])
    tim1 = float(s.thetas[i - 1])
    raw = s.n * (th0 + ti * tim1) / ((th0 - ti) * (th0 - tim1))
    p = optimal_quadratic(s)
    return _report(
        "quadratic_ratio", raw, s.n,
        {"poly": list(p.coeffs), "theta_i": ti, "theta_i_minus_1": tim1,
         "theta_index": i,
         "tight_quotient": tight_quadratic_quotient(delta, ti, tim1).tolist()},
    )


def tight_quadratic_quotient(delta: int, theta_i: float, theta_im1: float) -> np.ndarray:
    """Quotient matrix of p(A) for a tight 2-independent partition.

    Rows/columns: [independent set, complement]; p is the optimal quadratic.
    """
    b12 = delta**2 - (theta_i + theta_im1 + 1) * delta
    b21 = delta + theta_i * theta_im1
    return np.array([[delta, b12], [b21, b12 - theta_i * theta_im1]])


def partition_quotient(g: Graph, p: Poly, subset: list[int]) -> np.ndarray:
    """Realized 2x2 quotient (average block row sums) of p(A) for {subset, rest}."""
    A = g.adjacency_dense()
    coeffs = list(p.coeffs)
    pA = np.zeros_like(A)
    for c in reversed(coeffs):
        pA = pA @ A
        pA += c * np.eye(g.n)
    inside = np.zeros(g.n, dtype=bool)
    inside[list(subset)] = True
    blocks = np.empty((2, 2))
    for a, rows in enumerate((inside, ~inside)):
        for b, cols in enumerate((inside, ~inside)):
            blocks[a, b] = pA[np.ix_(rows, cols)].sum(axis=1).mean()
    return blocks


# ---------------------------------------------------------------------------
# walk-regular and antipodal-style bounds

def walk_regular_bound(g: Graph, s: Spectrum, k: int) -> BoundReport:
    """alpha_k <= n (1 - lambda(q_k)) / (q_k(theta_0) - lambda(q_k)).

    Valid for walk-regular graphs, where every diagonal entry of q_k(A)
    equals <q_k, 1> = 1.  Uses the node-value tables of the predistance
    family; k may run up to d (q_d exists and equals n at theta_0 for
    distance-regular graphs).
    """
    if not (1 <= k <= s.d):
        return _na("walk_regular", f"needs 1 <= k <= d = {s.d}")
    if not is_walk_regular(g, s):
        return _na("walk_regular", "graph is not walk-regular")
    fam = predistance_family(s)
    qk = fam.q_values[k]
    q_top = float(qk[0])
    lam = float(qk[1:].min())
    w_check = float(np.dot(fam.weights, qk))
    if abs(w_check - 1.0) > 1e-6:
        return _na("walk_regular", f"W(q_k) deviates from 1 by {w_check - 1.0:.2e}")
    if q_top - lam <= 0:
        return _na("walk_regular", "degenerate denominator")
    raw = s.n * (1.0 - lam) / (q_top - lam)
    return _report(
        "walk_regular", raw, s.n,
        {"poly": list(fam.sums[k].coeffs), "q_at_top": q_top, "lambda_q": lam},
    )


def antipodal_bound(g: Graph, s: Spectrum, P: Poly) -> BoundReport:
    """alpha_k <= n (Lambda(P) - lambda(P)) / (P(lambda_1) - lambda(P)).

    Requires P(lambda_1) >= Lambda(P); with P the k-alternating polynomial
    this reproduces the 2n/(P_k(theta_0)+1) bound.
    """
    if is_regular(g) is None:
        return _na("antipodal", "graph is not regular")
    if s.d < 1:
        return _na("antipodal", "needs d >= 1")
    tail = P(s.thetas[1:])
    Lam = float(np.max(tail))
    lam = float(np.min(tail))
    ptop = float(P(s.theta0))
    if ptop < Lam - _count_tol(ptop, Lam):
        return _na("antipodal", "P(lambda_1) < Lambda(P)")
    den = ptop - lam
    if den <= _count_tol(ptop, lam):
        return _na("antipodal", "degenerate denominator")
    raw = s.n * (Lam - lam) / den
    return _report(
        "antipodal", raw, s.n,
        {"poly": list(P.coeffs), "Lambda": Lam, "lambda": lam, "p_at_top": ptop},
    )


def antipodal_raw_bound(g: Graph, s: Spectrum, p: Poly, r: int) -> float:
    """Raw clique-tensor bound 1 + (Lambda(p)/p(lambda_1)) (n - 1).

    Hypotheses (checked, BoundHypothesisError on failure):
    p(lambda_1) >= Lambda(p) > 0, lambda(p) < 0, Lambda(p) >= |lambda(p)| (r-1).
    """
    if is_regular(g) is None:
        raise NotRegularError("bound requires a regular graph")
    tail = p(s.thetas[1:])
    Lam = float(np.max(tail))
    lam = float(np.min(tail))
    ptop = float(p(s.theta0))
    tol = _count_tol(ptop, Lam, lam)
    if Lam <= tol:
        raise BoundHypothesisError(f"Lambda(p) = {Lam:.6g} is not positive")
    if ptop < Lam - tol:
        raise BoundHypothesisError("p(lambda_1) < Lambda(p)")
    if lam >= -tol:
        raise BoundHypothesisError(f"lambda(p) = {lam:.6g} is not negative")
    if Lam < abs(lam) * (r - 1) - tol:
        raise BoundHypothesisError("Lambda(p) < |lambda(p)| (r - 1)")
    return 1.0 + (Lam / ptop) * (s.n - 1)


# ---------------------------------------------------------------------------
# diameter propositions

def diameter_from_quadratic(g: Graph, s: Spectrum) -> int | None:
    """Returns 2 when the quadratic bound certifies diameter <= 2, else None."""
    if is_regular(g) is None:
        raise NotRegularError("diameter proposition requires a regular graph")
    if s.d < 2:
        return None
    rep = quadratic_ratio_bound(g, s)
    return 2 if rep.applicable and rep.raw < 2.0 else None


def diameter_from_alternating(g: Graph, s: Spectrum, k: int) -> int | None:
    """Returns k when P_k(theta_0) > n - 1 certifies diameter <= k, else None."""
    if is_regular(g) is None:
        raise NotRegularError("diameter proposition requires a regular graph")
    if not (1 <= k <= s.d - 1):
        raise InvalidDegreeError(f"needs 1 <= k <= d-1 = {s.d - 1}")
    P = alternating_polynomial(s, k)
    return k if float(P(s.theta0)) > s.n - 1 else None


# ---------------------------------------------------------------------------
# aggregation

def all_bounds(g: Graph, s: Spectrum, k: int) -> list[BoundReport]:
    """The full battery of named bounds for one (graph, k)."""
    delta = is_regular(g)
    reports: list[BoundReport] = []
    if k == 1:
        reports.append(cvetkovic(s))
        reports.append(hoffman(s, delta))
    reports.append(power_count_bound(g, s, k))
    reports.append(shifted_sum_power_bound(g, s, k))
    reports.append(sum_power_bound(g, s, k))
    reports.append(alternating_bound(s, k, delta))
    if delta is not None and 1 <= k <= s.d - 1:
        reports.append(antipodal_bound(g, s, alternating_polynomial(s, k)))
    else:
        reports.append(_na("antipodal", "alternating polynomial unavailable"))
    reports.append(walk_regular_bound(g, s, k))
    if k == 2:
        reports.append(quadratic_ratio_bound(g, s))
    return reports


def best_bound(g: Graph, s: Spectrum, k: int) -> BoundReport:
    """Minimum floored value over all applicable bounds, with provenance."""
    reports = all_bounds(g, s, k)
    usable = [r for r in reports if r.applicable]
    if not usable:
        return _report("best", float(s.n), s.n, {"winner": "vacuous"})
    winner = min(usable, key=lambda r: r.floored)
    return BoundReport(
        name="best",
        raw=winner.raw,
        floored=winner.floored,
        applicable=True,
        witness={"winner": winner.name, **winner.witness},
    )
