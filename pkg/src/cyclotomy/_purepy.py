"""Pure-Python implementations of the hot kernels.

Same call signatures as the compiled ``_kernels`` extension. Polynomials are
plain lists of ints in ascending degree order, already canonical (no trailing
zeros) and nonempty.
"""

from __future__ import annotations

NAME = "python"

# Trial division stops here before handing cofactors to Pollard rho.
# The compiled kernel uses 10**6; in Python that loop is too slow to pay off.
TRIAL_BOUND = 1 << 16

# Below this many nonzero terms in the sparser factor, schoolbook wins over
# Kronecker substitution.
_KRONECKER_CUTOFF = 24


def _nonzero_terms(coeffs):
    return [(i, c) for i, c in enumerate(coeffs) if c]


def _mul_schoolbook(dense, sparse_terms):
    out = [0] * (len(dense) + sparse_terms[-1][0])
    for j, v in sparse_terms:
        for i, c in enumerate(dense):
            if c:
                out[i + j] += c * v
    return out


def _pack(coeffs, width):
    """Evaluate at X = 2**(8*width); coefficients may be negative."""
    pos = bytearray(len(coeffs) * width)
    neg = bytearray(len(coeffs) * width)
    for i, c in enumerate(coeffs):
        if c > 0:
            pos[i * width:(i + 1) * width] = c.to_bytes(width, "little")
        elif c < 0:
            neg[i * width:(i + 1) * width] = (-c).to_bytes(width, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value, width, length):
    """Inverse of _pack for digits known to lie in (-2**(8w-1), 2**(8w-1))."""
    sign = 1
    if value < 0:
        sign, value = -1, -value
    raw = value.to_bytes(length * width + 1, "little")
    base = 1 << (8 * width)
    half = base >> 1
    out = []
    carry = 0
    for i in range(length):
        d = int.from_bytes(raw[i * width:(i + 1) * width], "little") + carry
        if d >= half:
            d -= base
            carry = 1
        else:
            carry = 0
        out.append(sign * d)
    return out


def _mul_kronecker(a, b):
    bound = min(len(a), len(b)) * max(abs(c) for c in a) * max(abs(c) for c in b)
    width = (bound.bit_length() + 2 + 7) // 8
    prod = _pack(a, width) * _pack(b, width)
    return _unpack(prod, width, len(a) + len(b) - 1)


def poly_mul(a, b):
    if not a or not b:
        return []
    ta = _nonzero_terms(a)
    tb = _nonzero_terms(b)
    if len(ta) > len(tb):
        a, b, ta, tb = b, a, tb, ta
    if len(ta) <= _KRONECKER_CUTOFF:
        return _mul_schoolbook(b, ta)
    return _mul_kronecker(a, b)


def poly_divrem(num, den):
    """Synthetic division by a divisor with leading coefficient +-1.

    Returns ``(quotient, remainder)``; the remainder list has ``len(den) - 1``
    entries and may carry trailing zeros.
    """
    dn = len(den) - 1
    lead = den[dn]
    rem = list(num)
    if len(num) <= dn:
        return [], rem
    terms = [(j, v) for j, v in enumerate(den[:dn]) if v]
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = rem[i]
        if not c:
            continue
        qc = c if lead == 1 else -c
        base = i - dn
        q[base] = qc
        for j, v in terms:
            rem[base + j] -= qc * v
        rem[i] = 0
    return q, rem[:dn]


def eval_horner(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


_U64_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _strong_test(n, d, s, a):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime_u64(n):
    """Deterministic Miller-Rabin for 0 <= n < 2**64."""
    if n < 2:
        return False
    for p in _U64_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    return all(_strong_test(n, d, s, a) for a in _U64_BASES)


_PRIMES: list[int] | None = None


def _small_primes():
    global _PRIMES
    if _PRIMES is None:
        limit = TRIAL_BOUND
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, int(limit ** 0.5) + 1):
            if sieve[i]:
                sieve[i * i::i] = bytes(len(range(i * i, limit + 1, i)))
        _PRIMES = [i for i in range(limit + 1) if sieve[i]]
    return _PRIMES


def trial_divide(n):
    """Strip primes <= TRIAL_BOUND from 1 <= n < 2**64.

    Returns ``(factors, rest)`` where ``factors`` is a list of (p, e) and
    ``rest`` is 1, a prime, or a composite whose prime factors all exceed
    TRIAL_BOUND.
    """
    factors = []
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    return factors, n
