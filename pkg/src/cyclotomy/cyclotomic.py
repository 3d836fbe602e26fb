"""Cyclotomic polynomials.

Three independent constructions are exported so they can check each other:

* :func:`phi_recursive` divides x**n - 1 by the cyclotomic factors of its
  proper divisors.
* :func:`phi_mobius` evaluates the Mobius product of binomials x**d - 1.
* :func:`phi` reduces to the squarefree index rad(n) and substitutes
  x -> x**(n / rad(n)); this is the one the rest of the package uses.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .numtheory import divisors, factorize, inverse_totient, mobius, radical
from .polyring import IntPolynomial, NotDivisible, compose_power, exact_div, product


def _check_index(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclotomic index must be a positive integer, got {n!r}")


def phi_recursive(n: int) -> IntPolynomial:
    _check_index(n)
    memo: dict[int, IntPolynomial] = {}

    def build(d: int) -> IntPolynomial:
        if d not in memo:
            proper = divisors(d)[:-1]
            memo[d] = exact_div(IntPolynomial.x_pow_minus_one(d),
                                product(build(e) for e in proper))
        return memo[d]

    return build(n)


def phi_mobius(n: int) -> IntPolynomial:
    _check_index(n)
    f = factorize(n)
    up, down = [], []
    for d in divisors(f):
        mu = mobius(n // d)
        if mu == 1:
            up.append(d)
        elif mu == -1:
            down.append(d)
    acc = product(IntPolynomial.x_pow_minus_one(d) for d in up)
    for d in down:
        try:
            acc = exact_div(acc, IntPolynomial.x_pow_minus_one(d))
        except NotDivisible as exc:
            raise RuntimeError(f"Mobius product for n={n} is not exact at d={d}") from exc
    return acc


@lru_cache(maxsize=4096)
def phi(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial.

    >>> str(phi(12))
    'x^4 - x^2 + 1'
    """
    _check_index(n)
    r = radical(n)
    return compose_power(phi_mobius(r), n // r)


def identify_cyclotomic(p: IntPolynomial) -> Optional[int]:
    """Return ``n`` if ``p`` equals phi(n), else ``None``."""
    if p.is_zero() or p.degree < 1 or not p.is_monic():
        return None
    for n in inverse_totient(int(p.degree)):
        if phi(n) == p:
            return n
    return None
