"""Invariant suites behind ``cyclotomy verify``.

Each suite walks a grid of instances and records the first one that fails.
The production ``phi`` is looked up on :mod:`cyclotomy.cyclotomic` at run time
(or passed in) so a corrupted table can be injected in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import cyclotomic
from .numtheory import divisors, radical, totient
from .polyring import IntPolynomial, compose_power, content, product, substitute_neg
from .structure import (divides_lemma_check, expand_product, factor_composition,
                        factor_prime_quotient, golomb_condition, is_irreducible_composition)

PhiFn = Callable[[int], IntPolynomial]

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    first_failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.first_failure is None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: {self.passed}/{self.total}"
        if not self.ok:
            text += f" (first failure: {self.first_failure})"
        return text


def _run(name: str, cases: Iterator[tuple[str, Callable[[], bool]]]) -> SuiteResult:
    res = SuiteResult(name)
    for label, check in cases:
        res.total += 1
        if check():
            res.passed += 1
        elif res.first_failure is None:
            res.first_failure = label
    return res


def run_suites(max_n: int = 200, max_kn: int = 60,
               phi_fn: Optional[PhiFn] = None) -> list[SuiteResult]:
    phi = phi_fn or cyclotomic.phi

    def cross(n):
        p = phi(n)
        return (p == cyclotomic.phi_recursive(n) == cyclotomic.phi_mobius(n)
                and p.degree == totient(n))

    def eq1(n):
        return product(phi(d) for d in divisors(n)) == IntPolynomial.x_pow_minus_one(n)

    eq_n = min(max_n, 500)
    m_cap = min(max_n, 200)
    kn = max_kn
    suites = [
        ("cross-algorithm", ((f"n={n}", lambda n=n: cross(n)) for n in range(1, max_n + 1))),
        ("monic-content", ((f"n={n}", lambda n=n: phi(n).is_monic() and content(phi(n)) == 1)
                           for n in range(1, max_n + 1))),
        ("divisor-product", ((f"n={n}", lambda n=n: eq1(n)) for n in range(1, eq_n + 1))),
        ("p-divides-m", ((f"p={p} m={m}",
                          lambda p=p, m=m: phi(p * m) == compose_power(phi(m), p))
                         for p in SMALL_PRIMES for m in range(1, m_cap + 1) if m % p == 0)),
        ("p-coprime-m", ((f"p={p} m={m}",
                          lambda p=p, m=m: phi(p * m) * phi(m) == compose_power(phi(m), p))
                         for p in SMALL_PRIMES for m in range(1, m_cap + 1) if m % p)),
        ("prime-power", ((f"p={p} e={e}",
                          lambda p=p, e=e: phi(p ** e) == compose_power(phi(p), p ** (e - 1)))
                         for p in (2, 3, 5, 7) for e in range(1, 12) if p ** e <= max_n)),
        ("double-odd", ((f"n={n}", lambda n=n: phi(2 * n) == substitute_neg(phi(n)))
                        for n in range(3, eq_n + 1, 2))),
        ("radical-reduction", ((f"n={n}",
                                lambda n=n: cyclotomic.phi_recursive(n)
                                == compose_power(phi(radical(n)), n // radical(n)))
                               for n in range(1, max_n + 1))),
        ("factorization", ((f"k={k} n={n}",
                            lambda k=k, n=n: expand_product(factor_composition(k, n))
                            == compose_power(phi(k), n))
                           for k in range(1, kn + 1) for n in range(1, kn + 1))),
        ("irreducibility-criteria", ((f"k={k} n={n}",
                                      lambda k=k, n=n: is_irreducible_composition(k, n)
                                      == golomb_condition(k, n)
                                      == (len(factor_composition(k, n)) == 1))
                                     for k in range(2, kn + 1) for n in range(1, kn + 1))),
        ("prime-quotient", ((f"p={p} n={n}",
                             lambda p=p, n=n: factor_prime_quotient(p, n) == factor_composition(p, n))
                            for p in SMALL_PRIMES for n in range(1, kn + 1))),
        ("divisibility-lemma", ((f"k={k} n={n}",
                                 lambda k=k, n=n: len(set(divides_lemma_check(k, n))) == 1)
                                for k in range(1, kn + 1) for n in range(1, kn + 1))),
    ]
    return [_run(name, cases) for name, cases in suites]
