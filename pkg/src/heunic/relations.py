"""Randomized numerical verification of the functional relations.

Each relation compares a derivative or transformation of one function
against a direct evaluation of another.  Derivatives on the left-hand
sides come from termwise-differentiated series (exact for polynomial
truncations); the right-hand sides are evaluated independently.  A
``RelationReport`` records the worst absolute residual over seeded
random parameter draws, always sampled inside the safe disk of the
series engine.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy.polynomial.polynomial as npoly

from .coincidence import eval_K_derivative
from .errors import UnknownRelationError
from .hypergeom import Gauss2F1Params, gauss_2f1
from .series import (
    ConfluentHeunParams,
    GeneralHeunParams,
    SeriesOptions,
    eval_confluent_derivatives,
    eval_confluent_heun,
    eval_heun_derivatives,
    eval_heun_local,
    transform_homotopy,
)

# tight truncation for the checks themselves
_OPTS = SeriesOptions(max_terms=6000, rel_tol=5e-15)

RELATION_IDS = (
    "rel_2_3",
    "rel_2_4",
    "rel_2_5",
    "rel_2_6",
    "rel_5_1",
    "rel_4_1",
    "rel_4_2",
    "rel_4_3",
    "rel_1_9",
    "rel_5_2",
    "rel_4_1_eq_4_2",
)


@dataclass(frozen=True)
class RelationReport:
    relation_id: str
    passed: bool
    worst_residual: float
    worst_point: dict
    trials: int
    tol: float


def _pair_from_sum_product(total: float, product: float) -> tuple[float, float]:
    """Solve s^2 - total*s + product = 0; the discriminant is a square here."""
    disc = max(total * total - 4.0 * product, 0.0)
    root = math.sqrt(disc)
    return (total + root) / 2.0, (total - root) / 2.0


def _heun_derivative(params: GeneralHeunParams, x: float) -> float:
    return eval_heun_derivatives(params, x, 1, _OPTS)[1].value


def _confluent_derivative(params: ConfluentHeunParams, x: float) -> float:
    return eval_confluent_derivatives(params, x, 1, _OPTS)[1].value


# ---------------------------------------------------------------------------
# explicit two-sided forms, parameter-level (reused by the tests)


def derivative_raised_sides(a: float, alpha: float, beta: float, gamma: float,
                            delta: float, x: float,
                            explicit_pair: bool) -> tuple[float, float]:
    """Derivative of u(a, a*alpha*beta; alpha, beta; gamma, delta) at x
    against (alpha*beta/gamma)(1 - x/a) u(a, q1; alpha+2, beta+2; gamma+1, delta+1).

    With ``explicit_pair`` False the raised numerator pair is recovered
    from its sum and product instead of being written down directly.
    """
    params = GeneralHeunParams(a, a * alpha * beta, alpha, beta, gamma, delta)
    eps = params.epsilon
    lhs = _heun_derivative(params, x)
    q1 = a * (alpha * beta + gamma + delta) + gamma + eps + 1.0
    if explicit_pair:
        a1, b1 = alpha + 2.0, beta + 2.0
    else:
        a1, b1 = _pair_from_sum_product(gamma + delta + eps + 3.0,
                                        alpha * beta + 2.0 * (gamma + delta + eps + 1.0))
    raised = GeneralHeunParams(a, q1, a1, b1, gamma + 1.0, delta + 1.0)
    rhs = (alpha * beta / gamma) * (1.0 - x / a) \
        * eval_heun_local(raised, x, _OPTS).value
    return lhs, rhs


def derivative_reflected_sides(a: float, alpha: float, beta: float, gamma: float,
                               delta: float, x: float) -> tuple[float, float]:
    """Same derivative against the route with prefactor (1 - x/a)^(-epsilon)."""
    params = GeneralHeunParams(a, a * alpha * beta, alpha, beta, gamma, delta)
    eps = params.epsilon
    lhs = _heun_derivative(params, x)
    q2 = a * (alpha * beta + gamma + delta) - gamma * eps
    a2, b2 = _pair_from_sum_product(gamma + delta - eps + 1.0,
                                    alpha * beta + (gamma + delta) * (1.0 - eps))
    raised = GeneralHeunParams(a, q2, a2, b2, gamma + 1.0, delta + 1.0)
    rhs = (alpha * beta / gamma) * (1.0 - x / a) ** (-eps) \
        * eval_heun_local(raised, x, _OPTS).value
    return lhs, rhs


def derivative_half_sides(alpha: float, beta: float, gamma: float, x: float,
                          reflected: bool) -> tuple[float, float]:
    """Specialization a = 1/2, delta = gamma of the two derivative routes.

    The raised pair is (alpha+2, beta+2); the reflected route replaces it
    by (2*gamma - alpha, 2*gamma - beta) behind the prefactor
    (1-2x)^(2*gamma - alpha - beta - 1).
    """
    params = GeneralHeunParams(0.5, alpha * beta / 2.0, alpha, beta, gamma, gamma)
    lhs = _heun_derivative(params, x)
    if not reflected:
        a1, b1 = alpha + 2.0, beta + 2.0
        prefactor = (alpha * beta / gamma) * (1.0 - 2.0 * x)
    else:
        a1, b1 = 2.0 * gamma - alpha, 2.0 * gamma - beta
        prefactor = (alpha * beta / gamma) \
            * (1.0 - 2.0 * x) ** (2.0 * gamma - alpha - beta - 1.0)
    raised = GeneralHeunParams(0.5, a1 * b1 / 2.0, a1, b1, gamma + 1.0, gamma + 1.0)
    return lhs, prefactor * eval_heun_local(raised, x, _OPTS).value


def confluent_derivative_sides(p: float, gamma: float, alpha: float, x: float,
                               second_route: bool) -> tuple[float, float]:
    """Derivative of the confluent solution (p, gamma, 0, alpha, 4*p*alpha).

    Route one:  -(4*p*alpha/gamma) u(p, gamma+1, 0, alpha+1, 4p(alpha+1)).
    Route two:  (4*p*alpha/gamma)(x-1) u(p, gamma+1, 2, alpha+2, 4p(alpha+1)-gamma-1).
    """
    sigma = 4.0 * p * alpha
    params = ConfluentHeunParams(p, gamma, 0.0, alpha, sigma)
    lhs = _confluent_derivative(params, x)
    if not second_route:
        raised = ConfluentHeunParams(p, gamma + 1.0, 0.0, alpha + 1.0,
                                     4.0 * p * (alpha + 1.0))
        rhs = -(sigma / gamma) * eval_confluent_heun(raised, x, _OPTS).value
    else:
        raised = ConfluentHeunParams(p, gamma + 1.0, 2.0, alpha + 2.0,
                                     4.0 * p * (alpha + 1.0) - gamma - 1.0)
        rhs = (sigma / gamma) * (x - 1.0) \
            * eval_confluent_heun(raised, x, _OPTS).value
    return lhs, rhs


def confluent_route_equality_sides(p: float, gamma: float, alpha: float,
                                   x: float) -> tuple[float, float]:
    """Equate the two confluent derivative routes directly:

    u(p, gamma+1, 0, alpha+1, 4p(alpha+1); x)
        = (1-x) u(p, gamma+1, 2, alpha+2, 4p(alpha+1)-gamma-1; x).
    """
    first = ConfluentHeunParams(p, gamma + 1.0, 0.0, alpha + 1.0,
                                4.0 * p * (alpha + 1.0))
    second = ConfluentHeunParams(p, gamma + 1.0, 2.0, alpha + 2.0,
                                 4.0 * p * (alpha + 1.0) - gamma - 1.0)
    lhs = eval_confluent_heun(first, x, _OPTS).value
    rhs = (1.0 - x) * eval_confluent_heun(second, x, _OPTS).value
    return lhs, rhs


def k_slope_sides(n: int, x: float) -> tuple[float, float]:
    """u(n, 2, 2, 5/2, 6n-2; x) against K_n'(x)/(2n(x-1))."""
    params = ConfluentHeunParams(n, 2.0, 2.0, 2.5, 6.0 * n - 2.0)
    lhs = eval_confluent_heun(params, x, _OPTS).value
    rhs = eval_K_derivative(n, 1, x) / (2.0 * n * (x - 1.0))
    return lhs, rhs


def homotopy_sides(params: GeneralHeunParams, x: float) -> tuple[float, float]:
    """Both sides of the (1 - x/a)-power transformation."""
    lhs = eval_heun_local(params, x, _OPTS).value
    exponent, transformed = transform_homotopy(params)
    rhs = (1.0 - x / params.a) ** exponent \
        * eval_heun_local(transformed, x, _OPTS).value
    return lhs, rhs


_POLY_TERMS = 320


def _gauss_series_coeffs(a: float, b: float, c: float, terms: int) -> list[float]:
    out = [1.0]
    t = 1.0
    for j in range(terms - 1):
        t *= (a + j) * (b + j) / ((c + j) * (j + 1))
        out.append(t)
    return out


def _binomial_series_coeffs(s: float, terms: int) -> list[float]:
    # (1 - x)^s = sum_j (-s)_j / j! x^j
    out = [1.0]
    t = 1.0
    for j in range(terms - 1):
        t *= (-s + j) / (j + 1)
        out.append(t)
    return out


def gauss_weighted_derivative_sides(a: float, b: float, c: float, m: int,
                                    x: float) -> tuple[float, float]:
    """Termwise m-th derivative of (1-x)^(a+m-1) 2F1(a,b;c;x), weighted by
    (1-x)^(1-a), against (-1)^m (a)_m (c-b)_m / (c)_m 2F1(a+m, b; c+m; x).
    """
    f = _gauss_series_coeffs(a, b, c, _POLY_TERMS)
    w = _binomial_series_coeffs(a + m - 1.0, _POLY_TERMS)
    product = npoly.polymul(w, f)[:_POLY_TERMS]
    derivative = npoly.polyder(product, m)
    lhs = (1.0 - x) ** (1.0 - a) * npoly.polyval(x, derivative)
    poch_a = math.prod(a + i for i in range(m))
    poch_cb = math.prod(c - b + i for i in range(m))
    poch_c = math.prod(c + i for i in range(m))
    rhs = (-1.0) ** m * poch_a * poch_cb / poch_c \
        * gauss_2f1(Gauss2F1Params(a + m, b, c + m), x, _OPTS).value
    return lhs, rhs


# ---------------------------------------------------------------------------
# randomized samplers


def _sample_general(rng: random.Random) -> tuple[float, float, float, float, float, float]:
    a = rng.uniform(0.3, 0.7)
    alpha = rng.uniform(-3.0, 3.0)
    beta = rng.uniform(-3.0, 3.0)
    gamma = rng.uniform(0.5, 3.0)
    delta = rng.uniform(0.5, 3.0)
    x = rng.uniform(0.0, 0.45 * min(1.0, abs(a)))
    return a, alpha, beta, gamma, delta, x


def _sample_confluent(rng: random.Random) -> tuple[float, float, float, float]:
    p = rng.uniform(0.3, 2.0)
    gamma = rng.uniform(0.5, 3.0)
    alpha = rng.uniform(-3.0, 3.0)
    x = rng.uniform(0.0, 0.45)
    return p, gamma, alpha, x


def _trial_2_3(rng):
    a, alpha, beta, gamma, delta, x = _sample_general(rng)
    lhs, rhs = derivative_raised_sides(a, alpha, beta, gamma, delta, x,
                                       explicit_pair=False)
    return lhs, rhs, {"a": a, "alpha": alpha, "beta": beta, "gamma": gamma,
                      "delta": delta, "x": x}


def _trial_5_1(rng):
    a, alpha, beta, gamma, delta, x = _sample_general(rng)
    lhs, rhs = derivative_raised_sides(a, alpha, beta, gamma, delta, x,
                                       explicit_pair=True)
    return lhs, rhs, {"a": a, "alpha": alpha, "beta": beta, "gamma": gamma,
                      "delta": delta, "x": x}


def _trial_2_4(rng):
    a, alpha, beta, gamma, delta, x = _sample_general(rng)
    lhs, rhs = derivative_reflected_sides(a, alpha, beta, gamma, delta, x)
    return lhs, rhs, {"a": a, "alpha": alpha, "beta": beta, "gamma": gamma,
                      "delta": delta, "x": x}


def _trial_half(rng, reflected):
    alpha = rng.uniform(-3.0, 3.0)
    beta = rng.uniform(-3.0, 3.0)
    gamma = rng.uniform(0.5, 3.0)
    x = rng.uniform(0.0, 0.225)
    lhs, rhs = derivative_half_sides(alpha, beta, gamma, x, reflected)
    return lhs, rhs, {"alpha": alpha, "beta": beta, "gamma": gamma, "x": x}


def _trial_confluent(rng, second_route):
    p, gamma, alpha, x = _sample_confluent(rng)
    lhs, rhs = confluent_derivative_sides(p, gamma, alpha, x, second_route)
    return lhs, rhs, {"p": p, "gamma": gamma, "alpha": alpha, "x": x}


def _trial_4_3(rng):
    n = rng.randint(1, 8)
    x = rng.uniform(0.0, 0.45)
    lhs, rhs = k_slope_sides(n, x)
    return lhs, rhs, {"n": n, "x": x}


def _trial_1_9(rng):
    a, alpha, beta, gamma, delta, x = _sample_general(rng)
    q = rng.uniform(-3.0, 3.0)
    params = GeneralHeunParams(a, q, alpha, beta, gamma, delta)
    lhs, rhs = homotopy_sides(params, x)
    return lhs, rhs, {"a": a, "q": q, "alpha": alpha, "beta": beta,
                      "gamma": gamma, "delta": delta, "x": x}


def _trial_5_2(rng):
    a = rng.uniform(-3.0, 3.0)
    b = rng.uniform(-3.0, 3.0)
    c = rng.uniform(0.5, 3.0)
    m = rng.choice((1, 2))
    x = rng.uniform(0.0, 0.45)
    lhs, rhs = gauss_weighted_derivative_sides(a, b, c, m, x)
    return lhs, rhs, {"a": a, "b": b, "c": c, "m": m, "x": x}


def _trial_4_1_eq_4_2(rng):
    p, gamma, alpha, x = _sample_confluent(rng)
    lhs, rhs = confluent_route_equality_sides(p, gamma, alpha, x)
    return lhs, rhs, {"p": p, "gamma": gamma, "alpha": alpha, "x": x}


_TRIALS = {
    "rel_2_3": _trial_2_3,
    "rel_2_4": _trial_2_4,
    "rel_2_5": lambda rng: _trial_half(rng, reflected=False),
    "rel_2_6": lambda rng: _trial_half(rng, reflected=True),
    "rel_5_1": _trial_5_1,
    "rel_4_1": lambda rng: _trial_confluent(rng, second_route=False),
    "rel_4_2": lambda rng: _trial_confluent(rng, second_route=True),
    "rel_4_3": _trial_4_3,
    "rel_1_9": _trial_1_9,
    "rel_5_2": _trial_5_2,
    "rel_4_1_eq_4_2": _trial_4_1_eq_4_2,
}


def check_relation(relation_id: str, trials: int = 100, tol: float = 1e-7,
                   seed: int = 0) -> RelationReport:
    """Run seeded random trials of one relation and report the worst residual."""
    try:
        trial = _TRIALS[relation_id]
    except KeyError:
        raise UnknownRelationError(f"unknown relation id {relation_id!r}") from None
    if trials < 1:
        raise UnknownRelationError("trials must be positive")
    rng = random.Random(f"{seed}:{relation_id}")
    worst = -1.0
    worst_point: dict = {}
    for _ in range(trials):
        lhs, rhs, point = trial(rng)
        residual = abs(lhs - rhs)
        if residual > worst:
            worst = residual
            worst_point = dict(point, lhs=lhs, rhs=rhs)
    return RelationReport(relation_id, worst <= tol, worst, worst_point,
                          trials, tol)
