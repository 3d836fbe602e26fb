"""Irreducibility and cyclotomic factorization of compositions Phi_k(x**n).

For ``k, n >= 1`` write ``m`` for the part of ``n`` built from primes dividing
``k`` and ``N = n // m``. Then

    Phi_k(x**n) = Phi_{k*m}(x**N) = prod over d | N of Phi_{k*m*d}(x),

so the composition is irreducible exactly when ``N == 1``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .cyclotomic import phi
from .numtheory import (divisors, factorize, inverse_totient, is_probable_prime, ord_p,
                        totient)
from .polyring import IntPolynomial, NotDivisible, compose_power, exact_div, mul


def _check_positive(**values: int) -> None:
    for name, v in values.items():
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class CompositionSpec:
    """The pair (k, n) naming Phi_k(x**n), with its m / N split."""

    k: int
    n: int

    def __post_init__(self):
        _check_positive(k=self.k, n=self.n)

    @property
    def m(self) -> int:
        return math.prod(p ** ord_p(self.n, p) for p in factorize(self.k).primes)

    @property
    def N(self) -> int:
        return self.n // self.m

    @property
    def lam(self) -> int:
        return self.k * self.n


@dataclass(frozen=True, init=False)
class CycloProduct:
    """A product of cyclotomic polynomials, ``entries`` = ((index, mult), ...)."""

    entries: tuple[tuple[int, int], ...]

    def __init__(self, entries: Union[Mapping[int, int], Iterable[tuple[int, int]]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        merged: dict[int, int] = {}
        for idx, mult in items:
            _check_positive(index=idx)
            merged[idx] = merged.get(idx, 0) + mult
        for idx, mult in merged.items():
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for Phi_{idx}")
        object.__setattr__(
            self, "entries", tuple(sorted((i, e) for i, e in merged.items() if e)))

    @classmethod
    def of_indices(cls, indices: Iterable[int]) -> CycloProduct:
        return cls((i, 1) for i in indices)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    def __len__(self) -> int:
        """Number of factors counted with multiplicity."""
        return sum(e for _, e in self.entries)

    def degree(self) -> int:
        return sum(e * totient(i) for i, e in self.entries)

    def __mul__(self, other: CycloProduct) -> CycloProduct:
        return CycloProduct(self.entries + other.entries)

    def __truediv__(self, other: CycloProduct) -> CycloProduct:
        """Multiset difference; raises ValueError unless ``other`` divides ``self``."""
        return CycloProduct(self.entries + tuple((i, -e) for i, e in other.entries))

    def to_text(self) -> str:
        if not self.entries:
            return "1"
        return " * ".join(f"Phi_{i}" if e == 1 else f"Phi_{i}^{e}" for i, e in self.entries)

    def to_json(self) -> list[dict[str, int]]:
        return [{"index": i, "multiplicity": e} for i, e in self.entries]

    @classmethod
    def from_json(cls, data) -> CycloProduct:
        if isinstance(data, str):
            data = json.loads(data)
        return cls((d["index"], d["multiplicity"]) for d in data)

    def __str__(self):
        return self.to_text()


def is_irreducible_composition(k: int, n: int) -> bool:
    """True iff every prime factor of n divides k (k = 1: only n = 1)."""
    _check_positive(k=k, n=n)
    if k == 1:
        return n == 1
    kprimes = set(factorize(k).primes)
    return all(p in kprimes for p in factorize(n).primes)


def golomb_condition(k: int, n: int) -> bool:
    """Degree test: Phi_{kn} divides Phi_k(x**n), so they are equal iff
    totient(k*n) == n * totient(k)."""
    _check_positive(k=k, n=n)
    return totient(k * n) == n * totient(k)


def factor_composition(k: int, n: int) -> CycloProduct:
    spec = CompositionSpec(k, n)
    km = k * spec.m
    return CycloProduct.of_indices(km * d for d in divisors(spec.N))


def factor_prime_quotient(p: int, n: int) -> CycloProduct:
    """Phi_p(x**n) as (x**(pn) - 1) / (x**n - 1): divisors of pn not dividing n."""
    _check_positive(n=n)
    if not is_probable_prime(p):
        raise ValueError(f"factor_prime_quotient needs a prime, got {p}")
    return CycloProduct.of_indices(divisors(p * n)) / CycloProduct.of_indices(divisors(n))


def expand_product(f: CycloProduct) -> IntPolynomial:
    acc = IntPolynomial.constant(1)
    for idx, mult in f.entries:
        for _ in range(mult):
            acc = mul(acc, phi(idx))
    return acc


def divides_lemma_check(k: int, n: int) -> tuple[bool, bool]:
    """(gcd(n, k) == 1, whether Phi_k(x) actually divides Phi_k(x**n))."""
    _check_positive(k=k, n=n)
    predicted = math.gcd(n, k) == 1
    base = phi(k)
    try:
        exact_div(compose_power(base, n), base)
        verified = True
    except NotDivisible:
        verified = False
    return predicted, verified


def millennial_solutions(degree: int, exponent: int) -> list[int]:
    """Indices j of the monic irreducible solutions p = Phi_j of p(t) | p(t**exponent).

    These are the j with totient(j) == degree and gcd(j, exponent) == 1.
    """
    _check_positive(degree=degree)
    if exponent < 2:
        raise ValueError(f"exponent must be >= 2, got {exponent}")
    return inverse_totient(degree, exponent)
