# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.

Polynomial kernels run on int64 coefficients with overflow detection; any
input or intermediate that leaves the int64 range is redone by the pure-Python
kernel, so results are always exact.
"""

from libc.stdlib cimport calloc, malloc, free
from libc.stdint cimport int64_t, uint64_t

from cyclotomy import _purepy

cdef extern from *:
    """
    typedef unsigned __int128 cy_u128;
    static inline int cy_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int cy_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int cy_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline unsigned long long cy_mulmod(unsigned long long a,
                                               unsigned long long b,
                                               unsigned long long m) {
        return (unsigned long long)(((cy_u128)a * b) % m);
    }
    """
    bint cy_mul_ovf(long long a, long long b, long long *r) nogil
    bint cy_add_ovf(long long a, long long b, long long *r) nogil
    bint cy_sub_ovf(long long a, long long b, long long *r) nogil
    unsigned long long cy_mulmod(unsigned long long a, unsigned long long b,
                                 unsigned long long m) nogil

NAME = "cython"
TRIAL_BOUND = 1000000

# Symmetric range keeps negation overflow-free.
cdef object _I64_MAX = (1 << 63) - 1
cdef object _I64_MIN = -((1 << 63) - 1)


cdef int64_t* _to_c(list coeffs) except? NULL:
    """Copy into a malloc'd int64 buffer; NULL (no error set) if out of range."""
    cdef Py_ssize_t n = len(coeffs), i
    cdef int64_t* buf
    for c in coeffs:
        if c > _I64_MAX or c < _I64_MIN:
            return NULL
    buf = <int64_t*> malloc(max(n, 1) * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = coeffs[i]
    return buf


cdef list _from_c(int64_t* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    return [buf[i] for i in range(n)]


cdef bint _mul_c(int64_t* dense, Py_ssize_t nd, int64_t* sparse, Py_ssize_t ns,
                 int64_t* out) nogil:
    cdef Py_ssize_t i, j
    cdef long long v, t
    for j in range(ns):
        v = sparse[j]
        if v == 0:
            continue
        for i in range(nd):
            if dense[i] == 0:
                continue
            if cy_mul_ovf(dense[i], v, &t):
                return False
            if cy_add_ovf(out[i + j], t, &t):
                return False
            out[i + j] = t
    return True


def poly_mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, nza = 0, nzb = 0
    cdef int64_t* ca
    cdef int64_t* cb
    cdef int64_t* out
    cdef bint ok
    if na == 0 or nb == 0:
        return []
    ca = _to_c(a)
    if ca == NULL:
        return _purepy.poly_mul(a, b)
    cb = _to_c(b)
    if cb == NULL:
        free(ca)
        return _purepy.poly_mul(a, b)
    out = <int64_t*> calloc(na + nb - 1, sizeof(int64_t))
    if out == NULL:
        free(ca)
        free(cb)
        raise MemoryError()
    for i in range(na):
        nza += ca[i] != 0
    for i in range(nb):
        nzb += cb[i] != 0
    with nogil:
        # Outer loop over the sparser operand.
        if nza < nzb:
            ok = _mul_c(cb, nb, ca, na, out)
        else:
            ok = _mul_c(ca, na, cb, nb, out)
    try:
        if not ok:
            return _purepy.poly_mul(a, b)
        return _from_c(out, na + nb - 1)
    finally:
        free(ca)
        free(cb)
        free(out)


cdef bint _divrem_c(int64_t* rem, Py_ssize_t nn, int64_t* den, Py_ssize_t dn,
                    Py_ssize_t* idx, Py_ssize_t nidx, int64_t* q) nogil:
    cdef Py_ssize_t i, k, base
    cdef long long c, qc, t
    cdef int64_t lead = den[dn]
    for i in range(nn - 1, dn - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        qc = c if lead == 1 else -c
        base = i - dn
        q[base] = qc
        for k in range(nidx):
            if cy_mul_ovf(qc, den[idx[k]], &t):
                return False
            if cy_sub_ovf(rem[base + idx[k]], t, &t):
                return False
            rem[base + idx[k]] = t
        rem[i] = 0
    return True


def poly_divrem(list num, list den):
    """Synthetic division by a divisor with leading coefficient +-1."""
    cdef Py_ssize_t nn = len(num), dn = len(den) - 1, j, nidx = 0
    cdef int64_t* rem
    cdef int64_t* cden
    cdef int64_t* q
    cdef Py_ssize_t* idx
    cdef bint ok
    if nn <= dn:
        return [], list(num)
    rem = _to_c(num)
    if rem == NULL:
        return _purepy.poly_divrem(num, den)
    cden = _to_c(den)
    if cden == NULL:
        free(rem)
        return _purepy.poly_divrem(num, den)
    q = <int64_t*> calloc(nn - dn, sizeof(int64_t))
    idx = <Py_ssize_t*> malloc(max(dn, 1) * sizeof(Py_ssize_t))
    if q == NULL or idx == NULL:
        free(rem)
        free(cden)
        free(q)
        free(idx)
        raise MemoryError()
    for j in range(dn):
        if cden[j] != 0:
            idx[nidx] = j
            nidx += 1
    with nogil:
        ok = _divrem_c(rem, nn, cden, dn, idx, nidx, q)
    try:
        if not ok:
            return _purepy.poly_divrem(num, den)
        return _from_c(q, nn - dn), _from_c(rem, dn)
    finally:
        free(rem)
        free(cden)
        free(q)
        free(idx)


def eval_horner(list coeffs, x):
    return _purepy.eval_horner(coeffs, x)


cdef uint64_t _powmod(uint64_t b, uint64_t e, uint64_t m) nogil:
    cdef uint64_t r = 1
    b %= m
    while e:
        if e & 1:
            r = cy_mulmod(r, b, m)
        b = cy_mulmod(b, b, m)
        e >>= 1
    return r


cdef uint64_t[12] _BASES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


cdef bint _is_prime_c(uint64_t n) nogil:
    cdef uint64_t d, x
    cdef int s, i, r
    cdef bint witness
    if n < 2:
        return False
    for i in range(12):
        if n % _BASES[i] == 0:
            return n == _BASES[i]
    d = n - 1
    s = 0
    while d & 1 == 0:
        d >>= 1
        s += 1
    for i in range(12):
        x = _powmod(_BASES[i], d, n)
        if x == 1 or x == n - 1:
            continue
        witness = True
        for r in range(s - 1):
            x = cy_mulmod(x, x, n)
            if x == n - 1:
                witness = False
                break
        if witness:
            return False
    return True


def is_prime_u64(n):
    """Deterministic Miller-Rabin for 0 <= n < 2**64."""
    if n < 0 or n >= (1 << 64):
        raise OverflowError("is_prime_u64 needs 0 <= n < 2**64")
    return _is_prime_c(<uint64_t> n)


cdef uint64_t* _primes = NULL
cdef Py_ssize_t _nprimes = 0


cdef int _build_primes() except -1:
    global _primes, _nprimes
    cdef Py_ssize_t limit = TRIAL_BOUND, i, j, count = 0
    cdef char* sieve = <char*> calloc(limit + 1, 1)
    cdef uint64_t* primes
    if sieve == NULL:
        raise MemoryError()
    for i in range(2, limit + 1):
        if sieve[i] == 0:
            count += 1
            j = i * i
            while j <= limit:
                sieve[j] = 1
                j += i
    primes = <uint64_t*> malloc(count * sizeof(uint64_t))
    if primes == NULL:
        free(sieve)
        raise MemoryError()
    j = 0
    for i in range(2, limit + 1):
        if sieve[i] == 0:
            primes[j] = i
            j += 1
    free(sieve)
    _nprimes = count
    _primes = primes
    return 0


def trial_divide(n):
    """Strip primes <= TRIAL_BOUND from 1 <= n < 2**64.

    Returns ``(factors, rest)``; ``rest`` is 1, a prime, or a composite whose
    prime factors all exceed TRIAL_BOUND.
    """
    cdef uint64_t v, p
    cdef Py_ssize_t i
    cdef int e
    if n < 1 or n >= (1 << 64):
        raise OverflowError("trial_divide needs 1 <= n < 2**64")
    if _primes == NULL:
        _build_primes()
    v = n
    factors = []
    for i in range(_nprimes):
        p = _primes[i]
        if p * p > v:
            break
        if v % p == 0:
            e = 0
            while v % p == 0:
                v //= p
                e += 1
            factors.append((p, e))
    return factors, v
