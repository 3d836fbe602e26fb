"""Prime values of Phi_k(a**n).

``search_a`` fixes (k, n) and scans a = 1..a_max; ``search_n`` fixes (k, a)
and walks the exponents n = rad(k)**j for which Phi_k(x**n) stays
irreducible.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cyclotomic import phi
from .numtheory import U64_LIMIT, is_probable_prime, radical
from .polyring import eval_int
from .structure import factor_composition, is_irreducible_composition

__all__ = [
    "PrimeSearchReport", "eval_composition", "is_probable_prime", "mersenne_remark_check",
    "search_a", "search_n",
]

DETERMINISTIC = "deterministic<2^64"
PROBABLE = "probable"


def eval_composition(k: int, a: int, n: int) -> int:
    """Exact value of Phi_k(a**n)."""
    if min(k, a, n) < 1:
        raise ValueError(f"eval_composition needs k, a, n >= 1, got {(k, a, n)}")
    return eval_int(phi(k), pow(a, n))


@dataclass(frozen=True)
class PrimeSearchReport:
    k: int
    n: int
    a_max: int
    hits: tuple[int, ...]
    primality_mode: str
    irreducible: bool = field(default=True, compare=False)

    def __post_init__(self):
        if list(self.hits) != sorted(set(self.hits)):
            raise ValueError("hits must be strictly ascending")
        if self.hits and (self.hits[0] < 1 or self.hits[-1] > self.a_max):
            raise ValueError("hits must lie in 1..a_max")

    @property
    def count(self) -> int:
        return len(self.hits)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "a_max": self.a_max,
            "hits": list(self.hits),
            "count": self.count,
            "primality_mode": self.primality_mode,
        }

    @classmethod
    def from_json(cls, data) -> PrimeSearchReport:
        if isinstance(data, str):
            data = json.loads(data)
        report = cls(data["k"], data["n"], data["a_max"], tuple(data["hits"]),
                     data["primality_mode"],
                     is_irreducible_composition(data["k"], data["n"]))
        if report.count != data["count"]:
            raise ValueError(f"count {data['count']} disagrees with {report.count} hits")
        return report

    def to_text(self) -> str:
        lines = [
            f"Phi_{self.k}(a^{self.n}) prime for {self.count} values of a in 1..{self.a_max}"
            f" ({self.primality_mode})",
        ]
        if not self.irreducible:
            lines.append(f"note: Phi_{self.k}(x^{self.n}) is reducible")
        lines.append("hits: " + " ".join(map(str, self.hits)))
        return "\n".join(lines)


def _scan(k: int, n: int, lo: int, hi: int) -> tuple[list[int], bool]:
    """Hits in lo..hi, and whether every tested value was below 2**64."""
    poly = phi(k)
    hits = []
    small = True
    for a in range(lo, hi + 1):
        v = eval_int(poly, pow(a, n))
        if v >= U64_LIMIT:
            small = False
        if is_probable_prime(v):
            hits.append(a)
    return hits, small


def _blocks(a_max: int, parts: int) -> list[tuple[int, int]]:
    step = -(-a_max // parts)
    return [(lo, min(lo + step - 1, a_max)) for lo in range(1, a_max + 1, step)]


def search_a(k: int, n: int, a_max: int, jobs: int = 1) -> PrimeSearchReport:
    """All a in 1..a_max with Phi_k(a**n) prime.

    With ``jobs > 1`` contiguous blocks of a are tested in worker processes;
    results are concatenated in block order, so the report does not depend on
    ``jobs``.
    """
    if min(k, n, a_max) < 1:
        raise ValueError(f"search_a needs k, n, a_max >= 1, got {(k, n, a_max)}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    if jobs == 1:
        results = [_scan(k, n, 1, a_max)]
    else:
        blocks = _blocks(a_max, jobs * 4)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan, *zip(*((k, n, lo, hi) for lo, hi in blocks))))
    hits = tuple(a for block_hits, _ in results for a in block_hits)
    mode = DETERMINISTIC if all(small for _, small in results) else PROBABLE
    return PrimeSearchReport(k, n, a_max, hits, mode, is_irreducible_composition(k, n))


def search_n(k: int, a: int, j_max: int) -> list[tuple[int, int, bool]]:
    """(j, n, Phi_k(a**n) is prime) for n = rad(k)**j, j = 0..j_max."""
    if k < 2 or a < 2 or j_max < 0:
        raise ValueError(f"search_n needs k >= 2, a >= 2, j_max >= 0, got {(k, a, j_max)}")
    r = radical(k)
    out = []
    for j in range(j_max + 1):
        n = r ** j
        out.append((j, n, is_probable_prime(eval_composition(k, a, n))))
    return out


def mersenne_remark_check(p: int) -> tuple[int, bool]:
    """(2**p - 1, x**p - 1 is reducible); the second entry is always True."""
    if not is_probable_prime(p):
        raise ValueError(f"mersenne_remark_check needs a prime, got {p}")
    return 2 ** p - 1, len(factor_composition(1, p)) > 1
