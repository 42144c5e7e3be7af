"""Polynomial arithmetic and the spectral polynomial families.

Two inner products drive everything here.  For a graph with distinct
eigenvalues theta_0 > ... > theta_d and multiplicities m_i:

    <f,g>   = (1/n) * sum_i m_i f(theta_i) g(theta_i)        (trace product)
    <f,g>'  = (1/n) * sum_{i<d} m_i (theta_0-theta_i) f g    (gap-weighted)

The predistance polynomials p_0..p_d are orthogonal under the trace product
with ||p_i||^2 = p_i(theta_0); their partial sums q_i are orthogonal under
the gap-weighted product and satisfy 1 = q_0(theta_0) < ... < q_{d-1}(theta_0) < n.

The degree-k alternating polynomial maximizes p(theta_0) subject to
|p(theta_i)| <= 1 on theta_1..theta_d; it is computed by a small simplex LP
in the Chebyshev basis of the affinely rescaled spectrum, because raw
monomial (Vandermonde) columns destroy pivoting accuracy once theta_0^k
reaches ~1e10.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Chebyshev, Polynomial
from numpy.polynomial import chebyshev as cheb
from numpy.polynomial import polynomial as npoly

from . import simplex
from .errors import DegenerateSpectrumError, InvalidDegreeError, InvalidSpectrumError, LPNumericalError
from .spectra import Spectrum


@dataclass(frozen=True)
class Poly:
    """Dense real polynomial in the monomial basis, ascending coefficients."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        trimmed = np.trim_zeros(np.asarray(self.coeffs, dtype=np.float64), "b")
        if len(trimmed) == 0:
            trimmed = np.zeros(1)
        object.__setattr__(self, "coeffs", tuple(float(c) for c in trimmed))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return npoly.polyval(x, self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        return Poly(tuple(npoly.polyadd(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Poly") -> "Poly":
        return Poly(tuple(npoly.polysub(self.coeffs, other.coeffs)))

    def __mul__(self, other: "Poly") -> "Poly":
        return Poly(tuple(npoly.polymul(self.coeffs, other.coeffs)))

    def scale(self, a: float) -> "Poly":
        return Poly(tuple(a * c for c in self.coeffs))

    def shift(self, a: float) -> "Poly":
        """p + a (constant offset)."""
        c = list(self.coeffs)
        c[0] += a
        return Poly(tuple(c))

    @staticmethod
    def one() -> "Poly":
        return Poly((1.0,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0.0, 1.0))


def sum_power_poly(k: int) -> Poly:
    """x + x^2 + ... + x^k."""
    if k < 1:
        raise InvalidDegreeError(f"sum-power polynomial needs k >= 1, got {k}")
    return Poly((0.0,) + (1.0,) * k)


def trace_inner_product(f: Poly, g: Poly, s: Spectrum) -> float:
    """(1/n) tr(f(A) g(A)) evaluated through the spectrum."""
    fv = f(s.thetas)
    gv = g(s.thetas)
    return float(np.dot(s.mults, fv * gv) / s.n)


def gap_weighted_inner_product(f: Poly, g: Poly, s: Spectrum) -> float:
    """Sum over i = 0..d-1 of m_i (theta_0 - theta_i) f(theta_i) g(theta_i) / n."""
    t = s.thetas[:-1]
    w = s.mults[:-1] * (s.theta0 - t)
    return float(np.dot(w, f(t) * g(t)) / s.n)


@dataclass(frozen=True)
class PredistanceFamily:
    """Orthogonal family p_0..p_d and partial sums q_0..q_d for one spectrum.

    ``p_values[i][j]`` is p_i(theta_j) with nodes in descending order; these
    node tables are the numerically reliable representation and are what the
    bound formulas consume.  The monomial forms in ``polys``/``sums`` are
    reconstructed for reporting and for building p(A).
    """

    thetas: np.ndarray
    weights: np.ndarray
    p_values: np.ndarray
    q_values: np.ndarray
    polys: tuple[Poly, ...]
    sums: tuple[Poly, ...]

    @property
    def d(self) -> int:
        return len(self.thetas) - 1

    @property
    def p_at_top(self) -> np.ndarray:
        return self.p_values[:, 0]

    @property
    def q_at_top(self) -> np.ndarray:
        return self.q_values[:, 0]

    def value_inner(self, i: int, j: int) -> float:
        """Trace inner product <p_i, p_j> computed from the node tables."""
        return float(np.dot(self.weights, self.p_values[i] * self.p_values[j]))


def _cheb_domain(s: Spectrum) -> list[float]:
    return [float(s.thetas[-1]), float(s.thetas[0])]


def _to_monomial(coefs: np.ndarray, domain: list[float]) -> Poly:
    series = Chebyshev(np.asarray(coefs, dtype=np.float64), domain=domain)
    return Poly(tuple(series.convert(kind=Polynomial).coef))


def predistance_family(s: Spectrum) -> PredistanceFamily:
    """Gram-Schmidt construction of the predistance family.

    Orthogonalization runs in the Chebyshev basis of the rescaled spectrum
    (same nested degree spans as 1, x, x^2, ... but far better conditioned)
    with a second re-projection pass, then each polynomial is scaled so that
    ||p_i||^2 = p_i(theta_0) > 0.
    """
    d = s.d
    if d < 1:
        raise InvalidSpectrumError("predistance family needs d >= 1")
    domain = _cheb_domain(s)
    lo, hi = domain
    t = (2.0 * s.thetas - (hi + lo)) / (hi - lo)
    B = cheb.chebvander(t, d)  # column j = T_j at every node
    w = s.mults.astype(np.float64) / s.n

    ortho_vals = np.zeros((d + 1, d + 1))
    ortho_coef = np.zeros((d + 1, d + 1))
    for i in range(d + 1):
        v = B[:, i].copy()
        c = np.zeros(d + 1)
        c[i] = 1.0
        for _ in range(2):  # double orthogonalization
            for j in range(i):
                alpha = float(np.dot(w, v * ortho_vals[j]))
                v -= alpha * ortho_vals[j]
                c -= alpha * ortho_coef[j]
        norm2 = float(np.dot(w, v * v))
        if norm2 <= 1e-24:
            raise DegenerateSpectrumError(f"degree-{i} stage collapsed numerically")
        v /= np.sqrt(norm2)
        c /= np.sqrt(norm2)
        ortho_vals[i] = v
        ortho_coef[i] = c

    # rescale each unit vector u to u * u(theta_0): then ||p||^2 = p(theta_0) > 0
    p_values = np.zeros_like(ortho_vals)
    p_coefs = np.zeros_like(ortho_coef)
    for i in range(d + 1):
        top = ortho_vals[i, 0]
        if abs(top) < 1e-12:
            raise DegenerateSpectrumError(f"p_{i}(theta_0) vanishes; cannot normalize")
        p_values[i] = ortho_vals[i] * top
        p_coefs[i] = ortho_coef[i] * top

    q_values = np.cumsum(p_values, axis=0)
    q_coefs = np.cumsum(p_coefs, axis=0)
    polys = tuple(_to_monomial(p_coefs[i][: i + 1], domain) for i in range(d + 1))
    sums = tuple(_to_monomial(q_coefs[i][: i + 1], domain) for i in range(d + 1))
    return PredistanceFamily(
        thetas=s.thetas.copy(),
        weights=w,
        p_values=p_values,
        q_values=q_values,
        polys=polys,
        sums=sums,
    )


def alternating_polynomial(s: Spectrum, k: int) -> Poly:
    """Degree-<=k polynomial maximizing p(theta_0) with |p(theta_i)| <= 1, i >= 1.

    Solved as an LP over Chebyshev coefficients of the rescaled variable;
    free coefficients are split into positive parts for the simplex.  The
    optimizer is unique for nondegenerate spectra.
    """
    d = s.d
    if not (1 <= k <= d - 1):
        raise InvalidDegreeError(f"alternating polynomial needs 1 <= k <= d-1 = {d - 1}")
    domain = _cheb_domain(s)
    lo, hi = domain
    t_tail = (2.0 * s.thetas[1:] - (hi + lo)) / (hi - lo)
    B = cheb.chebvander(t_tail, k)  # d x (k+1)
    nv = k + 1
    A = np.block([[B, -B], [-B, B]])
    b = np.ones(2 * d)
    obj = np.concatenate([np.ones(nv), -np.ones(nv)])  # T_j(1) = 1 at theta_0
    x, value = simplex.maximize(obj, A, b)
    coefs = x[:nv] - x[nv:]

    attained = B @ coefs
    if np.max(np.abs(attained)) > 1.0 + 1e-7:
        raise LPNumericalError("alternating polynomial violates |p| <= 1 on spectrum")
    if value < 1.0 - 1e-9:
        raise LPNumericalError("alternating polynomial worse than the constant 1")
    return _to_monomial(coefs, domain)


def theta_index_le_minus_one(s: Spectrum, tol: float = 1e-9) -> int:
    """Index of the largest distinct eigenvalue <= -1 (ties at -1 included)."""
    for i, theta in enumerate(s.thetas):
        if theta <= -1.0 + tol:
            if i == 0:
                raise InvalidSpectrumError("Perron root <= -1; graph cannot be valid")
            return i
    raise InvalidSpectrumError("no eigenvalue <= -1 in spectrum")


def optimal_quadratic(s: Spectrum) -> Poly:
    """x^2 - (theta_i + theta_{i-1}) x with theta_i the largest eigenvalue <= -1.

    This is the quadratic that minimizes the ratio bound over all degree-2
    choices; requires at least three distinct eigenvalues.
    """
    if s.d < 2:
        raise InvalidSpectrumError("optimal quadratic needs d >= 2")
    i = theta_index_le_minus_one(s)
    b = -(float(s.thetas[i]) + float(s.thetas[i - 1]))
    return Poly((0.0, b, 1.0))
