"""Exact big-integer verification of two combinatorial identities.

Identity A:
    sum_{j=k}^{n} C(j,k) C(2j,j) C(2n-2j,n-j) = 4^(n-k) C(n,k) C(2k,k)

Identity B:
    sum_{i=0}^{n-j} (-1/4)^i C(n-j,i) C(2i+2j,i+j)
        = 4^(j-n) C(2j,j) C(2n-2j,n-j) / C(n,j)

Both sides are computed in exact arithmetic (Python integers and
Fractions; powers of 1/4 are kept exact) and compared for equality, so
a pass carries no floating-point caveat.  Every binomial argument can be
perturbed through a ``Mutation`` to prove the checks are not vacuous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError

__all__ = [
    "binomial_exact",
    "Mutation",
    "IdentityCheck",
    "IDENTITY_A_SITES",
    "IDENTITY_B_SITES",
    "check_identity_A",
    "check_identity_B",
]


def binomial_exact(n: int, k: int) -> int:
    """Exact C(n, k); zero when k < 0 or k > n."""
    if n < 0:
        raise DomainError("binomial upper argument must be nonnegative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class Mutation:
    """Perturb one binomial argument (``site``) by ``delta``."""

    site: int
    delta: int = 1


class IdentityCheck(NamedTuple):
    passed: bool
    lhs: object
    rhs: object


# site labels double as documentation of the perturbable argument slots
IDENTITY_A_SITES = (
    "lhs C(j,k) upper", "lhs C(j,k) lower",
    "lhs C(2j,j) upper", "lhs C(2j,j) lower",
    "lhs C(2n-2j,n-j) upper", "lhs C(2n-2j,n-j) lower",
    "rhs C(n,k) upper", "rhs C(n,k) lower",
    "rhs C(2k,k) upper", "rhs C(2k,k) lower",
)

IDENTITY_B_SITES = (
    "lhs C(n-j,i) upper", "lhs C(n-j,i) lower",
    "lhs C(2i+2j,i+j) upper", "lhs C(2i+2j,i+j) lower",
    "rhs C(2j,j) upper", "rhs C(2j,j) lower",
    "rhs C(2n-2j,n-j) upper", "rhs C(2n-2j,n-j) lower",
    "rhs C(n,j) upper", "rhs C(n,j) lower",
)


def _bump(mutation: Mutation | None, site: int) -> tuple[int, int]:
    """(upper delta, lower delta) contributed by the mutation at this slot pair."""
    if mutation is None:
        return 0, 0
    return (mutation.delta if mutation.site == site else 0,
            mutation.delta if mutation.site == site + 1 else 0)


def check_identity_A(n: int, k: int,
                     mutation: Mutation | None = None) -> IdentityCheck:
    """Compare both exact integer sides of identity A at (n, k)."""
    if not 0 <= k <= n:
        raise DomainError("need 0 <= k <= n")
    if mutation is not None and not 0 <= mutation.site < len(IDENTITY_A_SITES):
        raise DomainError("unknown mutation site for identity A")
    d0 = _bump(mutation, 0)
    d2 = _bump(mutation, 2)
    d4 = _bump(mutation, 4)
    d6 = _bump(mutation, 6)
    d8 = _bump(mutation, 8)
    lhs = sum(binomial_exact(j + d0[0], k + d0[1])
              * binomial_exact(2 * j + d2[0], j + d2[1])
              * binomial_exact(2 * n - 2 * j + d4[0], n - j + d4[1])
              for j in range(k, n + 1))
    rhs = 4 ** (n - k) * binomial_exact(n + d6[0], k + d6[1]) \
        * binomial_exact(2 * k + d8[0], k + d8[1])
    return IdentityCheck(lhs == rhs, lhs, rhs)


def check_identity_B(n: int, j: int,
                     mutation: Mutation | None = None) -> IdentityCheck:
    """Compare both exact rational sides of identity B at (n, j)."""
    if not 0 <= j <= n:
        raise DomainError("need 0 <= j <= n")
    if mutation is not None and not 0 <= mutation.site < len(IDENTITY_B_SITES):
        raise DomainError("unknown mutation site for identity B")
    d0 = _bump(mutation, 0)
    d2 = _bump(mutation, 2)
    d4 = _bump(mutation, 4)
    d6 = _bump(mutation, 6)
    d8 = _bump(mutation, 8)
    lhs = sum((Fraction(-1, 4) ** i
               * binomial_exact(n - j + d0[0], i + d0[1])
               * binomial_exact(2 * i + 2 * j + d2[0], i + j + d2[1])
               for i in range(n - j + 1)), Fraction(0))
    denominator = binomial_exact(n + d8[0], j + d8[1])
    if denominator == 0:
        return IdentityCheck(False, lhs, None)
    rhs = Fraction(binomial_exact(2 * j + d4[0], j + d4[1])
                   * binomial_exact(2 * n - 2 * j + d6[0], n - j + d6[1]),
                   4 ** (n - j) * denominator)
    return IdentityCheck(lhs == rhs, lhs, rhs)
