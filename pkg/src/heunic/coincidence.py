"""Indices of coincidence of three classical families and their entropies.

For the two-outcome sampling family with n trials at parameter x, the
waiting-time family, and the rate-n*x counting family, the index of
coincidence (the probability that two independent draws agree) is

    F_n(x) = sum_{k=0}^{n}   ( C(n,k) x^k (1-x)^{n-k} )^2,
    G_n(x) = sum_{k>=0}      ( C(n+k-1,k) x^k (1+x)^{-n-k} )^2,
    K_n(x) = sum_{k>=0}      ( e^{-nx} (nx)^k / k! )^2.

F and G additionally have several closed forms, each implemented as an
independent evaluation route so they can be cross-validated:

    F factored     sum_k C(n,k) C(2k,k) (x^2-x)^k
    F power        sum_j (1-2x)^{2j} 4^{-j} C(n,j)
                       sum_i (-1/4)^i C(n-j,i) C(2i+2j,i+j)
    F established  sum_j (1-2x)^{2j} 4^{-n} C(2j,j) C(2n-2j,n-j)
    F expanded     sum_k (x^2-x)^k 4^{k-n} sum_{j=k}^n C(j,k) C(2j,j) C(2n-2j,n-j)

    G factored     (1+2x)^{1-2n} sum_k C(n-1,k) C(2k,k) (x^2+x)^k
    G power        sum_j (1+2x)^{2j-2n+1} 4^{-j} C(n-1,j)
                       sum_i (-1/4)^i C(n-j-1,i) C(2i+2j,i+j)
    G established  sum_j (1+2x)^{2j-2n+1} 4^{1-n} C(2n-2j-2,n-j-1) C(2j,j)

Closed-form routes run in exact rational arithmetic and round once.
K_n and its derivatives are also available through the integral
representation

    K_n^(j)(x) = (2/pi) 4^j (-n)^j Int_0^{pi/2} (sin t)^{2j} e^{-4nx sin^2 t} dt,

whose x = 0 value (-n)^j C(2j,j) pins down the normalization of the
related confluent solutions.
"""

from __future__ import annotations

import functools
import math
from enum import Enum
from fractions import Fraction

import numpy as np

from .errors import DomainError, PoleError
from .series import DEFAULT_OPTIONS, EvalResult, SeriesOptions

_EPS = 2.220446049250313e-16


class FMethod(Enum):
    DEFINITIONAL = "definitional"
    FACTORED = "factored"
    POWER = "power"
    ESTABLISHED = "established"
    EXPANDED = "expanded"


class GMethod(Enum):
    DEFINITIONAL = "definitional"
    FACTORED = "factored"
    POWER = "power"
    ESTABLISHED = "established"


class EntropyKind(Enum):
    RENYI = "renyi"
    TSALLIS = "tsallis"


def _require_order(n: int) -> None:
    if n < 1:
        raise DomainError("n must be a positive integer")


# ---------------------------------------------------------------------------
# F_n routes


@functools.lru_cache(maxsize=None)
def _alternating_quarter_sum(m: int, j: int) -> Fraction:
    """sum_{i=0}^{m} (-1/4)^i C(m,i) C(2i+2j,i+j), exact."""
    total = Fraction(0)
    for i in range(m + 1):
        total += Fraction((-1) ** i * math.comb(m, i) * math.comb(2 * i + 2 * j, i + j),
                          4**i)
    return total


@functools.lru_cache(maxsize=None)
def _stacked_binomial_sum(n: int, k: int) -> int:
    """sum_{j=k}^{n} C(j,k) C(2j,j) C(2n-2j,n-j), exact."""
    return sum(math.comb(j, k) * math.comb(2 * j, j) * math.comb(2 * n - 2 * j, n - j)
               for j in range(k, n + 1))


def _f_definitional(n: int, x: float) -> float:
    if not 0.0 <= x <= 1.0:
        raise DomainError("the defining sum for F needs 0 <= x <= 1")
    total = 0.0
    for k in range(n + 1):
        total += (math.comb(n, k) * x**k * (1.0 - x) ** (n - k)) ** 2
    return total


def _f_factored(n: int, w: Fraction) -> Fraction:
    total, wk = Fraction(0), Fraction(1)
    for k in range(n + 1):
        total += math.comb(n, k) * math.comb(2 * k, k) * wk
        wk *= w
    return total


def _f_power(n: int, s: Fraction) -> Fraction:
    # s = (1-2x)^2
    total, sj = Fraction(0), Fraction(1)
    for j in range(n + 1):
        total += sj * Fraction(math.comb(n, j), 4**j) * _alternating_quarter_sum(n - j, j)
        sj *= s
    return total


def _f_established(n: int, s: Fraction) -> Fraction:
    total, sj = Fraction(0), Fraction(1)
    for j in range(n + 1):
        total += sj * Fraction(math.comb(2 * j, j) * math.comb(2 * n - 2 * j, n - j), 4**n)
        sj *= s
    return total


def _f_expanded(n: int, w: Fraction) -> Fraction:
    total, wk = Fraction(0), Fraction(1)
    for k in range(n + 1):
        total += wk * Fraction(4**k, 4**n) * _stacked_binomial_sum(n, k)
        wk *= w
    return total


def eval_F(n: int, x: float, method: FMethod = FMethod.ESTABLISHED) -> float:
    """Index of coincidence F_n(x) by the selected route.

    The definitional route requires 0 <= x <= 1; the closed forms accept
    any real x.
    """
    _require_order(n)
    if method is FMethod.DEFINITIONAL:
        return _f_definitional(n, x)
    xr = Fraction(x)
    if method is FMethod.FACTORED:
        return float(_f_factored(n, xr * xr - xr))
    if method is FMethod.POWER:
        return float(_f_power(n, (1 - 2 * xr) ** 2))
    if method is FMethod.ESTABLISHED:
        return float(_f_established(n, (1 - 2 * xr) ** 2))
    if method is FMethod.EXPANDED:
        return float(_f_expanded(n, xr * xr - xr))
    raise DomainError(f"unknown F method {method!r}")


# ---------------------------------------------------------------------------
# G_n routes


def _g_definitional(n: int, x: float, opts: SeriesOptions) -> EvalResult:
    if x < 0.0:
        raise DomainError("the defining sum for G needs x >= 0")
    base = (1.0 + x) ** (-2 * n)
    r = (x / (1.0 + x)) ** 2
    term = base
    total = term
    k = 0
    while k + 1 < opts.max_terms:
        # ratio of consecutive squared weights, decreasing towards r
        ratio = ((n + k) / (k + 1)) ** 2 * r
        if ratio < 1.0 and term <= opts.rel_tol * total:
            tail = term * ratio / (1.0 - ratio)
            return EvalResult(total, k + 1, True,
                              tail + _EPS * total)
        term *= ratio
        total += term
        k += 1
    ratio = ((n + k) / (k + 1)) ** 2 * r
    tail = term * ratio / (1.0 - ratio) if ratio < 1.0 else math.inf
    return EvalResult(total, k + 1, False, tail)


def _g_pole_guard(x: float) -> Fraction:
    xr = Fraction(x)
    if 1 + 2 * xr == 0:
        raise PoleError("x = -1/2 is a pole of the closed forms for G")
    return xr


def _g_factored(n: int, xr: Fraction) -> Fraction:
    v = xr * xr + xr
    total, vk = Fraction(0), Fraction(1)
    for k in range(n):
        total += math.comb(n - 1, k) * math.comb(2 * k, k) * vk
        vk *= v
    return (1 + 2 * xr) ** (1 - 2 * n) * total


def _g_power(n: int, xr: Fraction) -> Fraction:
    t = (1 + 2 * xr) ** 2
    total, tj = Fraction(0), Fraction(1)
    for j in range(n):
        total += tj * Fraction(math.comb(n - 1, j), 4**j) \
            * _alternating_quarter_sum(n - 1 - j, j)
        tj *= t
    return (1 + 2 * xr) ** (1 - 2 * n) * total


def _g_established(n: int, xr: Fraction) -> Fraction:
    t = (1 + 2 * xr) ** 2
    total, tj = Fraction(0), Fraction(1)
    for j in range(n):
        total += tj * Fraction(math.comb(2 * n - 2 * j - 2, n - j - 1)
                               * math.comb(2 * j, j), 4 ** (n - 1))
        tj *= t
    return (1 + 2 * xr) ** (1 - 2 * n) * total


def eval_G(n: int, x: float, method: GMethod = GMethod.ESTABLISHED,
           opts: SeriesOptions | None = None) -> EvalResult:
    """Index of coincidence G_n(x) by the selected route.

    The definitional route truncates the infinite sum with a geometric
    tail bound folded into the error estimate; closed forms are exact
    finite sums (x != -1/2).
    """
    _require_order(n)
    opts = opts or DEFAULT_OPTIONS
    if method is GMethod.DEFINITIONAL:
        return _g_definitional(n, x, opts)
    xr = _g_pole_guard(x)
    if method is GMethod.FACTORED:
        value = _g_factored(n, xr)
    elif method is GMethod.POWER:
        value = _g_power(n, xr)
    elif method is GMethod.ESTABLISHED:
        value = _g_established(n, xr)
    else:
        raise DomainError(f"unknown G method {method!r}")
    return EvalResult(float(value), n, True, 0.0)


# ---------------------------------------------------------------------------
# K_n and its derivatives


def eval_K(n: int, x: float, opts: SeriesOptions | None = None) -> EvalResult:
    """Index of coincidence K_n(x) by truncating the defining sum.

    The cut-off max(50, ceil(4nx) + 40) is far past the mode nx, where
    the squared weights decay faster than geometrically.
    """
    _require_order(n)
    if x < 0.0:
        raise DomainError("the defining sum for K needs x >= 0")
    opts = opts or DEFAULT_OPTIONS
    lam = n * x
    k_max = max(50, math.ceil(4 * lam) + 40)
    term = math.exp(-2.0 * lam)
    total = term
    small = 0
    k = 0
    while k < k_max:
        term *= (lam / (k + 1)) ** 2
        total += term
        k += 1
        if k > lam and term <= opts.rel_tol * total:
            small += 1
            if small >= 3:
                break
        else:
            small = 0
    ratio = (lam / (k + 1)) ** 2
    tail = term * ratio / (1.0 - ratio) if ratio < 1.0 else term
    return EvalResult(total, k + 1, True, tail + _EPS * total)


@functools.lru_cache(maxsize=8)
def _gauss_legendre_quarter(nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped onto [0, pi/2]."""
    xs, ws = np.polynomial.legendre.leggauss(nodes)
    return (xs + 1.0) * (math.pi / 4.0), ws * (math.pi / 4.0)


def _k_derivative_scaled(n: int, j: int, x: float, nodes: int) -> float:
    """(2/pi) 4^j Int_0^{pi/2} (sin t)^{2j} exp(-4nx sin^2 t) dt."""
    t, w = _gauss_legendre_quarter(nodes)
    s2 = np.sin(t) ** 2
    integrand = s2**j * np.exp(-4.0 * n * x * s2)
    return (2.0 / math.pi) * 4**j * float(np.dot(w, integrand))


def k_derivative_quadrature(n: int, j: int, x: float) -> tuple[float, float]:
    """K_n^(j)(x) by 64-node quadrature doubled once for an error estimate.

    Returns (value, estimate) where the value comes from the finer rule.
    """
    _require_order(n)
    if j < 0:
        raise DomainError("derivative order j must be nonnegative")
    if x < 0.0:
        raise DomainError("the integral representation needs x >= 0")
    sign = (-1.0) ** j * float(n) ** j
    coarse = sign * _k_derivative_scaled(n, j, x, 64)
    fine = sign * _k_derivative_scaled(n, j, x, 128)
    return fine, abs(fine - coarse)


def eval_K_derivative(n: int, j: int, x: float) -> float:
    """j-th derivative of K_n at x >= 0 via the integral representation.

    At x = 0 the integral reduces to a Wallis integral and the value is
    (-n)^j C(2j,j).
    """
    return k_derivative_quadrature(n, j, x)[0]


def eval_HC_family(n: int, j: int, x: float) -> float:
    """Confluent solution with parameters (n, j+1, 0, j+1/2, 2n(2j+1)) at x.

    Computed as K_n^(j)(x) normalized by its x = 0 value (-n)^j C(2j,j);
    the sign factors cancel, leaving a positive integral.
    """
    _require_order(n)
    if j < 0:
        raise DomainError("derivative order j must be nonnegative")
    if x < 0.0:
        raise DomainError("the integral representation needs x >= 0")
    return _k_derivative_scaled(n, j, x, 128) / math.comb(2 * j, j)


# ---------------------------------------------------------------------------
# Entropies of order 2


def entropy(s: float, kind: EntropyKind) -> float:
    """Order-2 entropy of an index-of-coincidence value s.

    renyi -> -log(s) (requires s > 0); tsallis -> 1 - s.
    """
    if kind is EntropyKind.RENYI:
        if s <= 0.0:
            raise DomainError("the logarithmic entropy needs s > 0")
        return -math.log(s)
    if kind is EntropyKind.TSALLIS:
        return 1.0 - s
    raise DomainError(f"unknown entropy kind {kind!r}")
