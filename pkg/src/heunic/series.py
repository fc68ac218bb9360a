"""Power-series engines for the two Heun-type differential equations.

Both solvers expand the solution normalized by u(0) = 1 around the
origin.  The coefficients come from three-term recurrences obtained by
substituting a power series into the equation

    u'' + (gamma/x + delta/(x-1) + epsilon/(x-a)) u'
        + (alpha*beta*x - q) / (x(x-1)(x-a)) u = 0

for the four-singular-point case, and

    u'' + (4p + gamma/x + delta/(x-1)) u'
        + (4*p*alpha*x - sigma) / (x(x-1)) u = 0

for the confluent case.  Evaluation is refused outside the disk bounded
by the singular point nearest to the origin; analytic continuation is
out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError

_EPS = 2.220446049250313e-16

# consecutive below-tolerance terms required before declaring convergence;
# three-term recurrences can produce transient small terms
_STREAK = 3


def _is_nonpositive_integer(value: float) -> bool:
    return value <= 0.0 and float(value).is_integer()


@dataclass(frozen=True)
class SeriesOptions:
    """Truncation controls shared by every series evaluation."""

    max_terms: int = 10000
    rel_tol: float = 1e-15

    def __post_init__(self):
        if self.max_terms < 2:
            raise DomainError("max_terms must be at least 2")
        if not 0.0 < self.rel_tol < 1.0:
            raise DomainError("rel_tol must lie in (0, 1)")


DEFAULT_OPTIONS = SeriesOptions()


@dataclass(frozen=True)
class EvalResult:
    """Value of a truncated series or quadrature plus diagnostics.

    ``error_estimate`` is the magnitude of the last computed term when
    the evaluation did not converge; for converged evaluations it also
    accounts for cancellation among the accumulated terms.
    """

    value: float
    terms_used: int
    converged: bool
    error_estimate: float


@dataclass(frozen=True)
class GeneralHeunParams:
    """Parameters (a, q, alpha, beta, gamma, delta) of the four-point equation.

    ``epsilon`` is derived from the Fuchs relation
    alpha + beta + 1 = gamma + delta + epsilon and is never set
    independently.
    """

    a: float
    q: float
    alpha: float
    beta: float
    gamma: float
    delta: float

    def __post_init__(self):
        if self.a == 0.0 or self.a == 1.0:
            raise DomainError("singular-point location a must not be 0 or 1")
        if _is_nonpositive_integer(self.gamma):
            raise DomainError("gamma must not be zero or a negative integer")

    @property
    def epsilon(self) -> float:
        return self.alpha + self.beta + 1.0 - self.gamma - self.delta

    @property
    def radius(self) -> float:
        """Radius of convergence of the local series at the origin."""
        return min(1.0, abs(self.a))


@dataclass(frozen=True)
class ConfluentHeunParams:
    """Parameters (p, gamma, delta, alpha, sigma) of the confluent equation."""

    p: float
    gamma: float
    delta: float
    alpha: float
    sigma: float

    def __post_init__(self):
        if self.p == 0.0:
            raise DomainError("p must be nonzero")
        if _is_nonpositive_integer(self.gamma):
            raise DomainError("gamma must not be zero or a negative integer")

    @property
    def radius(self) -> float:
        return 1.0


def _general_coefficients(p: GeneralHeunParams) -> Iterator[float]:
    """Yield c_0, c_1, ... with c_0 = 1 and a*gamma*c_1 = q.

    For k >= 1:
        a(k+1)(k+gamma) c_{k+1}
            = [k((k-1+gamma)(1+a) + a*delta + epsilon) + q] c_k
              - (k-1+alpha)(k-1+beta) c_{k-1}
    """
    a, q, ga, de, ep = p.a, p.q, p.gamma, p.delta, p.epsilon
    al, be = p.alpha, p.beta
    c_prev = 1.0
    yield c_prev
    c_cur = q / (a * ga)
    yield c_cur
    k = 1
    while True:
        rhs = (k * ((k - 1 + ga) * (1 + a) + a * de + ep) + q) * c_cur
        rhs -= (k - 1 + al) * (k - 1 + be) * c_prev
        c_prev, c_cur = c_cur, rhs / (a * (k + 1) * (k + ga))
        yield c_cur
        k += 1


def _confluent_coefficients(p: ConfluentHeunParams) -> Iterator[float]:
    """Yield c_0, c_1, ... with c_0 = 1 and gamma*c_1 = -sigma.

    For k >= 1:
        (k+1)(k+gamma) c_{k+1}
            = [k(k-1+gamma+delta-4p) - sigma] c_k + 4p(k-1+alpha) c_{k-1}
    """
    pp, ga, de, al, si = p.p, p.gamma, p.delta, p.alpha, p.sigma
    c_prev = 1.0
    yield c_prev
    c_cur = -si / ga
    yield c_cur
    k = 1
    while True:
        rhs = (k * (k - 1 + ga + de - 4 * pp) - si) * c_cur
        rhs += 4 * pp * (k - 1 + al) * c_prev
        c_prev, c_cur = c_cur, rhs / ((k + 1) * (k + ga))
        yield c_cur
        k += 1


def _sum_series(coeffs: Iterator[float], x: float, opts: SeriesOptions,
                max_order: int) -> list[EvalResult]:
    """Sum u, u', ..., u^(max_order) of sum c_k x^k with shared truncation.

    Stops once every tracked derivative had _STREAK consecutive terms
    below rel_tol times its partial sum.  Error estimates include a
    cancellation floor of machine epsilon times the sum of absolute
    terms.
    """
    m1 = max_order + 1
    sums = [0.0] * m1
    abs_sums = [0.0] * m1
    last = [0.0] * m1
    xpow = [0.0] * m1          # xpow[m] == x^(k - m), valid for m <= k
    xpow[0] = 1.0
    streak = 0
    k = 0
    converged = False
    for c in coeffs:
        # coefficients can overflow doubles long before the terms matter;
        # abort so the caller can reroute through a better-conditioned form
        if not math.isfinite(c):
            break
        all_small = True
        ff = 1.0               # falling factorial k(k-1)...(k-m+1)
        for m in range(min(k, max_order) + 1):
            term = c * ff * xpow[m]
            sums[m] += term
            abs_sums[m] += abs(term)
            last[m] = term
            if abs(term) > opts.rel_tol * abs(sums[m]):
                all_small = False
            ff *= k - m
        if all_small and k >= max_order:
            streak += 1
        else:
            streak = 0
        k += 1
        if streak >= _STREAK:
            converged = True
            break
        if k >= opts.max_terms:
            break
        for m in range(max_order, 0, -1):
            xpow[m] = xpow[m - 1]
        xpow[0] *= x
    results = []
    for m in range(m1):
        est = abs(last[m])
        if converged:
            est = max(est, _EPS * abs_sums[m])
        results.append(EvalResult(sums[m], k, converged, est))
    return results


def _check_disk(x: float, radius: float) -> None:
    if abs(x) >= radius:
        raise DomainError(
            f"|x| = {abs(x)} is outside the convergence disk |x| < {radius}")


def _combine_prefactor(pref: list[float], inner: list[EvalResult],
                       max_order: int) -> list[EvalResult]:
    """Leibniz-combine derivatives of prefactor*inner given both sets."""
    out = []
    for m in range(max_order + 1):
        value = 0.0
        err = 0.0
        for i in range(m + 1):
            binom = math.comb(m, i)
            value += binom * pref[i] * inner[m - i].value
            err += binom * abs(pref[i]) * inner[m - i].error_estimate
            err += _EPS * abs(binom * pref[i] * inner[m - i].value)
        out.append(EvalResult(value, inner[m].terms_used, inner[m].converged, err))
    return out


def _needs_rescue(result: EvalResult, opts: SeriesOptions) -> bool:
    if not result.converged or not math.isfinite(result.value):
        return True
    threshold = max(32.0 * _EPS, 4.0 * opts.rel_tol) * abs(result.value)
    return result.error_estimate > threshold


def _better(direct: list[EvalResult], rescued: list[EvalResult]) -> list[EvalResult]:
    if math.isfinite(rescued[0].value) != math.isfinite(direct[0].value):
        return direct if math.isfinite(direct[0].value) else rescued
    if direct[0].converged != rescued[0].converged:
        return direct if direct[0].converged else rescued
    return direct if direct[0].error_estimate <= rescued[0].error_estimate else rescued


def _eval_general(params: GeneralHeunParams, x: float, opts: SeriesOptions,
                  max_order: int) -> list[EvalResult]:
    """Direct series, falling back to the (1 - x/a)-power transformed route.

    The transformed series often stays sign-definite where the direct one
    cancels catastrophically (detected through the error estimate); the
    prefactor (1 - x/a)^e is positive throughout the disk.
    """
    direct = _sum_series(_general_coefficients(params), x, opts, max_order)
    if not _needs_rescue(direct[0], opts):
        return direct
    exponent, transformed = transform_homotopy(params)
    inner = _sum_series(_general_coefficients(transformed), x, opts, max_order)
    base = 1.0 - x / params.a
    pref = []
    fall = 1.0
    for i in range(max_order + 1):
        pref.append(fall * base ** (exponent - i) * (-1.0 / params.a) ** i)
        fall *= exponent - i
    return _better(direct, _combine_prefactor(pref, inner, max_order))


def _eval_confluent(params: ConfluentHeunParams, x: float, opts: SeriesOptions,
                    max_order: int) -> list[EvalResult]:
    """Direct series, falling back to the integrating-factor conjugate

        u(p, gamma, delta, alpha, sigma; x)
            = e^(-4px) u(-p, gamma, delta, gamma+delta-alpha, sigma-4*p*gamma; x),

    whose series is far better conditioned when 4px is large.
    """
    direct = _sum_series(_confluent_coefficients(params), x, opts, max_order)
    if not _needs_rescue(direct[0], opts):
        return direct
    p = params
    conjugate = ConfluentHeunParams(-p.p, p.gamma, p.delta,
                                    p.gamma + p.delta - p.alpha,
                                    p.sigma - 4.0 * p.p * p.gamma)
    inner = _sum_series(_confluent_coefficients(conjugate), x, opts, max_order)
    expfac = math.exp(-4.0 * p.p * x)
    pref = [expfac * (-4.0 * p.p) ** i for i in range(max_order + 1)]
    return _better(direct, _combine_prefactor(pref, inner, max_order))


def eval_heun_local(params: GeneralHeunParams, x: float,
                    opts: SeriesOptions | None = None) -> EvalResult:
    """Evaluate the local solution of the four-point equation, u(0) = 1.

    The slope at the origin is q/(a*gamma).  Raises DomainError outside
    |x| < min(1, |a|).
    """
    opts = opts or DEFAULT_OPTIONS
    _check_disk(x, params.radius)
    return _eval_general(params, x, opts, 0)[0]


def eval_heun_derivatives(params: GeneralHeunParams, x: float,
                          max_order: int = 1,
                          opts: SeriesOptions | None = None) -> list[EvalResult]:
    """Termwise-differentiated series values [u, u', ..., u^(max_order)](x)."""
    opts = opts or DEFAULT_OPTIONS
    _check_disk(x, params.radius)
    return _eval_general(params, x, opts, max_order)


def eval_confluent_heun(params: ConfluentHeunParams, x: float,
                        opts: SeriesOptions | None = None) -> EvalResult:
    """Evaluate the confluent solution normalized by u(0) = 1.

    The slope at the origin is -sigma/gamma.  Raises DomainError outside
    |x| < 1.
    """
    opts = opts or DEFAULT_OPTIONS
    _check_disk(x, params.radius)
    return _eval_confluent(params, x, opts, 0)[0]


def eval_confluent_derivatives(params: ConfluentHeunParams, x: float,
                               max_order: int = 1,
                               opts: SeriesOptions | None = None) -> list[EvalResult]:
    """Termwise-differentiated confluent series values at x."""
    opts = opts or DEFAULT_OPTIONS
    _check_disk(x, params.radius)
    return _eval_confluent(params, x, opts, max_order)


def heun_slope_at_origin(params: GeneralHeunParams) -> float:
    """Derivative of the normalized local solution at x = 0: q/(a*gamma)."""
    return params.q / (params.a * params.gamma)


def transform_homotopy(params: GeneralHeunParams) -> tuple[float, GeneralHeunParams]:
    """Index transformation pulling a power of (1 - x/a) out of the solution.

    Returns (e, transformed) with e = -alpha - beta + gamma + delta such
    that on the common domain

        u(params; x) = (1 - x/a)^e * u(transformed; x),

    where transformed = (a, q - gamma(alpha+beta-gamma-delta),
    -alpha+gamma+delta, -beta+gamma+delta, gamma, delta).
    """
    p = params
    shift = p.alpha + p.beta - p.gamma - p.delta
    transformed = GeneralHeunParams(
        a=p.a,
        q=p.q - p.gamma * shift,
        alpha=-p.alpha + p.gamma + p.delta,
        beta=-p.beta + p.gamma + p.delta,
        gamma=p.gamma,
        delta=p.delta,
    )
    return -shift, transformed


def heun_ode_residual(params: GeneralHeunParams, x: float,
                      opts: SeriesOptions | None = None) -> float:
    """Residual of the four-point equation at x for the evaluated series.

    x must avoid the singular points {0, 1, a} and lie inside the disk.
    """
    if x == 0.0 or x == 1.0 or x == params.a:
        raise DomainError("residual is undefined at a singular point")
    u, du, ddu = (r.value for r in eval_heun_derivatives(params, x, 2, opts))
    p = params
    lin = p.gamma / x + p.delta / (x - 1.0) + p.epsilon / (x - p.a)
    low = (p.alpha * p.beta * x - p.q) / (x * (x - 1.0) * (x - p.a))
    return ddu + lin * du + low * u


def confluent_ode_residual(params: ConfluentHeunParams, x: float,
                           opts: SeriesOptions | None = None) -> float:
    """Residual of the confluent equation at x for the evaluated series."""
    if x == 0.0 or x == 1.0:
        raise DomainError("residual is undefined at a singular point")
    u, du, ddu = (r.value for r in eval_confluent_derivatives(params, x, 2, opts))
    p = params
    lin = 4.0 * p.p + p.gamma / x + p.delta / (x - 1.0)
    low = (4.0 * p.p * p.alpha * x - p.sigma) / (x * (x - 1.0))
    return ddu + lin * du + low * u
