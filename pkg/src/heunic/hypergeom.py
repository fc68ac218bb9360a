"""Gauss and Clausen hypergeometric series and the Heun bridge they support.

Provides the direct 2F1 series, the unit-argument 3F2 with sequence
acceleration, a logarithmic closed form for 2F1(m, 1; m+2k+1; x), and the
hypergeometric-route evaluation of the Heun family
u(1/2, q; 2q, 1; 1, 1; x), which reduces to

    (1 - 2x)^(1-2q) * 2F1(1-q, 1/2; 1; 4x(1-x)).

That reduction follows from the closed form of the negative family
continued to non-integer order combined with the (1 - x/a)-power
transformation; it gives a route through hypergeometric machinery that
is fully independent of the local series engine.  The normalizing value
at the origin of the underlying expansion is the unit-argument
3F2(1/2, q, q; q+1/2, q+1; 1), exposed through ``clausen_3f2_unit``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DivergentSeriesError, DomainError
from .series import DEFAULT_OPTIONS, EvalResult, SeriesOptions

_EPS = 2.220446049250313e-16

# mpmath's working precision is process-global; serialize the one block
# that changes it so the module stays safe for concurrent callers
_MP_LOCK = threading.Lock()


def _is_nonpositive_integer(value: float) -> bool:
    return value <= 0.0 and float(value).is_integer()


@dataclass(frozen=True)
class Gauss2F1Params:
    """Numerator pair (a, b) and denominator c, c not 0 or a negative integer."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if _is_nonpositive_integer(self.c):
            raise DomainError("c must not be zero or a negative integer")

    @property
    def terminates(self) -> bool:
        return _is_nonpositive_integer(self.a) or _is_nonpositive_integer(self.b)


@dataclass(frozen=True)
class Clausen3F2Params:
    """Numerators (a1, a2, a3) and denominators (b1, b2) of a 3F2."""

    a1: float
    a2: float
    a3: float
    b1: float
    b2: float

    def __post_init__(self):
        if _is_nonpositive_integer(self.b1) or _is_nonpositive_integer(self.b2):
            raise DomainError("b1, b2 must not be zero or negative integers")

    @property
    def unit_excess(self) -> float:
        """b1 + b2 - a1 - a2 - a3; positive iff the series converges at 1."""
        return self.b1 + self.b2 - self.a1 - self.a2 - self.a3

    @property
    def terminates(self) -> bool:
        return any(_is_nonpositive_integer(a) for a in (self.a1, self.a2, self.a3))


def gauss_2f1(p: Gauss2F1Params, x: float,
              opts: SeriesOptions | None = None) -> EvalResult:
    """Direct series sum_j (a)_j (b)_j / ((c)_j j!) x^j.

    Requires |x| < 1 unless a or b is a nonpositive integer, in which
    case the series terminates and any x is accepted.
    """
    opts = opts or DEFAULT_OPTIONS
    if abs(x) >= 1.0 and not p.terminates:
        raise DomainError("the series needs |x| < 1 unless it terminates")
    term = 1.0
    total = 1.0
    abs_total = 1.0
    small = 0
    j = 0
    while j + 1 < opts.max_terms:
        term *= (p.a + j) * (p.b + j) / ((p.c + j) * (j + 1)) * x
        total += term
        abs_total += abs(term)
        j += 1
        if term == 0.0:
            # terminating series summed exactly
            return EvalResult(total, j + 1, True, _EPS * abs_total)
        if abs(term) <= opts.rel_tol * abs(total):
            small += 1
            if small >= 3:
                ratio = min(abs(x), 0.999) if not p.terminates else 0.0
                tail = abs(term) * ratio / (1.0 - ratio) if ratio else 0.0
                return EvalResult(total, j + 1, True,
                                  max(tail, _EPS * abs_total))
        else:
            small = 0
    return EvalResult(total, j + 1, False, abs(term))


def _aitken_checkpoints(checkpoints: list[float]) -> tuple[float, float]:
    """Iterated Aitken delta-squared limit of geometrically indexed sums.

    Partial sums recorded at doubling indices converge like a mixture of
    geometric sequences in the checkpoint counter, which the repeated
    delta-squared transform strips one component at a time.  Returns the
    best estimate and the spread of the final transforms.
    """
    row = list(checkpoints)
    best = row[-1]
    best_err = abs(row[-1] - row[-2]) if len(row) > 1 else math.inf
    while len(row) >= 3:
        nxt = []
        for a, b, c in zip(row, row[1:], row[2:]):
            den = (c - b) - (b - a)
            nxt.append(c if den == 0.0 else c - (c - b) ** 2 / den)
        err = abs(nxt[-1] - row[-1])
        if err < best_err:
            best, best_err = nxt[-1], err
        row = nxt
    return best, best_err


def clausen_3f2_unit(p: Clausen3F2Params,
                     opts: SeriesOptions | None = None) -> EvalResult:
    """Unit-argument 3F2 with Aitken-accelerated summation.

    Terms decay like k^(-1-s) with s = b1+b2-a1-a2-a3, so raw partial
    sums converge algebraically; the accelerated limit is formed from
    partial sums at doubling indices.  Raises DivergentSeriesError when
    s <= 0 and the series does not terminate.
    """
    opts = opts or DEFAULT_OPTIONS
    if not p.terminates and p.unit_excess <= 0.0:
        raise DivergentSeriesError(
            "unit-argument series needs b1 + b2 - a1 - a2 - a3 > 0")
    term = 1.0
    total = 1.0
    abs_total = 1.0
    checkpoints = []
    next_checkpoint = 8
    k = 0
    estimate, est_err = total, math.inf
    while k + 1 < opts.max_terms:
        term *= (p.a1 + k) * (p.a2 + k) * (p.a3 + k) \
            / ((p.b1 + k) * (p.b2 + k) * (k + 1))
        total += term
        abs_total += abs(term)
        k += 1
        if term == 0.0:
            return EvalResult(total, k + 1, True, _EPS * abs_total)
        if abs(term) <= opts.rel_tol * abs(total) and p.terminates:
            return EvalResult(total, k + 1, True, _EPS * abs_total)
        if k + 1 == next_checkpoint:
            checkpoints.append(total)
            next_checkpoint *= 2
            if len(checkpoints) >= 4:
                estimate, est_err = _aitken_checkpoints(checkpoints)
                floor = _EPS * abs_total
                if est_err <= max(opts.rel_tol * abs(estimate), floor):
                    return EvalResult(estimate, k + 1, True,
                                      max(est_err, floor))
    if checkpoints:
        return EvalResult(estimate, k + 1, False, est_err)
    return EvalResult(total, k + 1, False, abs(term))


def eval_hl_hypergeometric(q: float, x: float,
                           opts: SeriesOptions | None = None) -> EvalResult:
    """Hypergeometric route for u(1/2, q; 2q, 1; 1, 1; x), normalized at 0.

    Evaluates (1-2x)^(1-2q) * 2F1(1-q, 1/2; 1; 4x(1-x)); the Gauss
    argument is mapped into (0, 1) by the Pfaff transformation when it
    falls below zero.  q must avoid {0, -1, ...} and {-1/2, -3/2, ...},
    and |x| < 1 with x != 1/2 (the function is singular there for
    q > 1/2 and the branch for x > 1/2 is only real when 2q is an
    integer; non-real branches are refused).
    """
    opts = opts or DEFAULT_OPTIONS
    if _is_nonpositive_integer(q) or _is_nonpositive_integer(q + 0.5):
        raise DomainError("q must avoid 0, -1, ... and -1/2, -3/2, ...")
    if abs(x) >= 1.0:
        raise DomainError("the representation needs |x| < 1")
    if x == 0.5:
        raise DomainError("x = 1/2 is a singular point of the equation")
    exponent = 1.0 - 2.0 * q
    base = 1.0 - 2.0 * x
    if base < 0.0 and not float(exponent).is_integer():
        raise DomainError(
            "no real branch beyond x = 1/2 for non-integer exponent")
    prefactor = base**exponent if base > 0.0 else float(
        Fraction(base) ** int(exponent))
    z = 4.0 * x * (1.0 - x)
    scale = 1.0
    if z < 0.0:
        # Pfaff: 2F1(a, b; c; z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)),
        # and here c - b = 1/2 = b, so the parameter triple is unchanged.
        scale = (1.0 - z) ** (q - 1.0)
        z = z / (z - 1.0)
    inner = gauss_2f1(Gauss2F1Params(1.0 - q, 0.5, 1.0), z, opts)
    factor = abs(prefactor * scale)
    return EvalResult(prefactor * scale * inner.value, inner.terms_used,
                      inner.converged, factor * inner.error_estimate)


def harmonic(n: int) -> Fraction:
    """Exact n-th harmonic number, 0 for n = 0 by the empty-sum convention."""
    if n < 0:
        raise DomainError("harmonic index must be nonnegative")
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


def coefficient_a(j: int, k: int) -> Fraction:
    """Exact rational coefficient

    a_{jk} = (1/(2k)!) ( sum_{i=0}^{j-1} C(2k,i) (-1)^i/(j-i)
                         + (-1)^j C(2k,j) e_{2k} )

    appearing in the logarithmic closed form of 2F1(m, 1; m+2k+1; x).
    """
    if j < 0 or k < 0:
        raise DomainError("indices must be nonnegative")
    total = sum((Fraction(math.comb(2 * k, i) * (-1) ** i, j - i)
                 for i in range(j)), Fraction(0))
    total += (-1) ** j * math.comb(2 * k, j) * harmonic(2 * k)
    return total / math.factorial(2 * k)


def _pochhammer_int(r: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= r + i
    return out


def gauss_2f1_closed(m: int, k: int, x: float) -> float:
    """Logarithmic closed form of 2F1(m, 1; m+2k+1; x) for 0.1 <= x < 1.

    Evaluates

        (m)_{2k+1} x^{-m-2k} ( (1-x)^{2k}/(2k)! (e_{2k} - log(1-x))
                               - sum_{j=0}^{2k} a_{jk} x^j
                               - sum_{i=0}^{m-2} x^{i+2k+1}/((i+1)_{2k+1}) ).

    The bracket is a difference of nearly equal quantities: it shrinks
    like x^{m+2k} while its pieces stay O(1), so the rational part is
    kept exact and the logarithm is taken with enough working digits to
    survive the cancellation.  Below x = 0.1 the cancellation outgrows
    any reasonable working precision budget for large m + 2k and the
    direct series must be used instead, so the closed form refuses.
    """
    if m < 1 or k < 0:
        raise DomainError("need m >= 1 and k >= 0")
    if not 0.1 <= x < 1.0:
        raise DomainError("closed form is restricted to 0.1 <= x < 1")
    xr = Fraction(x)
    fact2k = math.factorial(2 * k)
    e2k = harmonic(2 * k)
    rational = e2k * (1 - xr) ** (2 * k) / fact2k
    rational -= sum((coefficient_a(j, k) * xr**j for j in range(2 * k + 1)),
                    Fraction(0))
    rational -= sum((xr ** (i + 2 * k + 1) / _pochhammer_int(i + 1, 2 * k + 1)
                     for i in range(m - 1)), Fraction(0))
    log_weight = (1 - xr) ** (2 * k) / fact2k
    digits = 40 + math.ceil((m + 2 * k + 1) * math.log10(1.0 / x)) + 2 * k
    with _MP_LOCK, mpmath.workdps(digits):
        log_term = mpmath.log(1 - mpmath.mpf(x))
        bracket = (mpmath.mpf(rational.numerator) / rational.denominator
                   - (mpmath.mpf(log_weight.numerator) / log_weight.denominator)
                   * log_term)
        value = (_pochhammer_int(m, 2 * k + 1) * bracket
                 * mpmath.power(mpmath.mpf(x), -(m + 2 * k)))
        return float(value)
