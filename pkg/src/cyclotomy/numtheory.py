"""Elementary arithmetic functions over factored integers.

Everything here works from a :class:`FactoredInt`, the prime -> exponent map
of a positive integer. Functions that take a ``FactoredInt`` also accept a
plain ``int`` and factor it first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Union

from ._backend import kernels

U64_LIMIT = 1 << 64

# Strong-pseudoprime bases. The first twelve primes are a complete witness set
# below 2**64 (Sorenson & Webster); above that the first 41 primes are used and
# the verdict is only "probable".
U64_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
LARGE_BASES = U64_BASES + (
    41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _is_strong_probable_prime(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int) -> bool:
    """Primality test, exact below 2**64.

    Larger ``n`` are strong probable primes to each of the 41 bases in
    ``LARGE_BASES``; the battery is fixed so results are reproducible.
    """
    if n < U64_LIMIT:
        return n >= 2 and kernels.is_prime_u64(n)
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return False
    return all(_is_strong_probable_prime(n, a) for a in LARGE_BASES)


def primality_mode(n: int) -> str:
    return "deterministic<2^64" if n < U64_LIMIT else "probable"


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer with its prime factorization.

    ``factors`` is a tuple of ``(prime, exponent)`` pairs, primes ascending.
    """

    value: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"FactoredInt needs a positive value, got {self.value}")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1 or not is_probable_prime(p):
                raise ValueError(f"bad factor entry ({p}, {e})")
            last = p
            prod *= p ** e
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __int__(self) -> int:
        return self.value

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)


IntLike = Union[int, FactoredInt]


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(v: int) -> FactoredInt:
    """Factor ``1 <= v < 2**64``.

    Trial division by the primes up to the kernel's bound, then Brent's
    variant of Pollard rho on whatever composite cofactor is left.
    """
    if isinstance(v, bool) or not isinstance(v, int):
        raise TypeError(f"factorize needs an int, got {type(v).__name__}")
    if v < 1:
        raise ValueError(f"factorize needs v >= 1, got {v}")
    if v >= U64_LIMIT:
        raise OverflowError(f"factorize accepts v < 2**64, got {v}")
    small, rest = kernels.trial_divide(v)
    found = dict(small)
    _split(rest, found)
    return FactoredInt(v, tuple(sorted(found.items())))


def _factored(v: IntLike) -> FactoredInt:
    return v if isinstance(v, FactoredInt) else factorize(v)


def divisors(v: IntLike) -> list[int]:
    divs = [1]
    for p, e in _factored(v).factors:
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def tau(v: IntLike) -> int:
    return math.prod(e + 1 for _, e in _factored(v).factors)


def totient(v: IntLike) -> int:
    return math.prod((p - 1) * p ** (e - 1) for p, e in _factored(v).factors)


def mobius(v: IntLike) -> int:
    f = _factored(v).factors
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def radical(v: IntLike) -> int:
    return math.prod(p for p, _ in _factored(v).factors)


def ord_p(v: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``v``."""
    if not is_probable_prime(p):
        raise ValueError(f"ord_p needs a prime, got {p}")
    if v < 1:
        raise ValueError(f"ord_p needs v >= 1, got {v}")
    e = 0
    while v % p == 0:
        v //= p
        e += 1
    return e


def inverse_totient(d: int, coprime_to: int = 1) -> list[int]:
    """All ``j`` with ``totient(j) == d`` and ``gcd(j, coprime_to) == 1``.

    Any such ``j`` is a product of prime powers ``p**a`` whose totients
    ``(p - 1) * p**(a - 1)`` multiply to ``d``; in particular ``p - 1`` divides
    ``d``. The search builds ``j`` from exactly those prime powers, taking
    primes in decreasing order and each prime at most once, so it is complete
    without any size bound on ``j``. (A brute-force cross-check may rely on
    ``totient(j) >= sqrt(j / 2)``, i.e. ``j <= 2 * d**2``.)
    """
    if d < 1:
        raise ValueError(f"inverse_totient needs d >= 1, got {d}")
    if coprime_to < 1:
        raise ValueError(f"coprime_to must be >= 1, got {coprime_to}")
    primes = [q + 1 for q in divisors(d)
              if is_probable_prime(q + 1) and coprime_to % (q + 1) != 0]
    primes.sort(reverse=True)
    found = []

    def extend(rest: int, start: int, acc: int) -> None:
        if rest == 1:
            found.append(acc)
        for i in range(start, len(primes)):
            p = primes[i]
            if rest % (p - 1):
                continue
            r = rest // (p - 1)
            pk = p
            while True:
                extend(r, i + 1, acc * pk)
                if r % p:
                    break
                r //= p
                pk *= p

    extend(d, 0, 1)
    return sorted(found)
