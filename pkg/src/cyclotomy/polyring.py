"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from ._backend import kernels

NEG_INF = -math.inf


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""

    def __init__(self, remainder_degree: int):
        super().__init__(f"division leaves a remainder of degree {remainder_degree}")
        self.remainder_degree = remainder_degree


class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based column."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """Polynomial stored as ascending coefficients; ``coeffs[i]`` multiplies x**i.

    >>> IntPolynomial([1, 1, 1])
    IntPolynomial('x^2 + x + 1')
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = _trim(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        return cls([0] * degree + [c])

    @classmethod
    def x_pow_minus_one(cls, n: int) -> IntPolynomial:
        """x**n - 1."""
        return cls([-1] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> Union[int, float]:
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else add(self, other)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else mul(self, other)

    __rmul__ = __mul__

    def __floordiv__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else exact_div(self, other)

    def __call__(self, x: int) -> int:
        return eval_int(self, x)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"IntPolynomial('{format_poly(self)}')"


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial.constant(p)
    return NotImplemented


def add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    ca, cb = a.coeffs, b.coeffs
    if len(ca) < len(cb):
        ca, cb = cb, ca
    out = list(ca)
    for i, c in enumerate(cb):
        out[i] += c
    return IntPolynomial(out)


def mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(kernels.poly_mul(list(a.coeffs), list(b.coeffs)))


def divmod_poly(num: IntPolynomial, den: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Quotient and remainder for a divisor with leading coefficient +-1."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if den.leading not in (1, -1):
        raise ValueError(f"divisor must have leading coefficient +-1, got {den.leading}")
    q, r = kernels.poly_divrem(list(num.coeffs), list(den.coeffs))
    return IntPolynomial(q), IntPolynomial(r)


def exact_div(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Return ``q`` with ``q * den == num``; raise :class:`NotDivisible` otherwise."""
    q, r = divmod_poly(num, den)
    if not r.is_zero():
        raise NotDivisible(r.degree)
    return q


def divides(den: IntPolynomial, num: IntPolynomial) -> bool:
    try:
        exact_div(num, den)
    except NotDivisible:
        return False
    return True


def compose_power(p: IntPolynomial, n: int) -> IntPolynomial:
    """p(x**n)."""
    if n < 1:
        raise ValueError(f"compose_power needs n >= 1, got {n}")
    if n == 1 or len(p.coeffs) <= 1:
        return p
    out = [0] * ((len(p.coeffs) - 1) * n + 1)
    out[::n] = p.coeffs
    return IntPolynomial(out)


def substitute_neg(p: IntPolynomial) -> IntPolynomial:
    """p(-x)."""
    return IntPolynomial(-c if i & 1 else c for i, c in enumerate(p.coeffs))


def eval_int(p: IntPolynomial, a: int) -> int:
    return kernels.eval_horner(list(p.coeffs), a)


def content(p: IntPolynomial) -> int:
    return math.gcd(*p.coeffs) if p.coeffs else 0


def product(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    acc = IntPolynomial.constant(1)
    for p in polys:
        acc = mul(acc, p)
    return acc


# Text format.

def format_poly(p: IntPolynomial) -> str:
    """Descending terms, e.g. ``x^8 - x^7 + x^5 - x^4 + x^3 - x + 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        var = "" if i == 0 else "x" if i == 1 else f"x^{i}"
        body = str(mag) if (i == 0 or mag != 1) else ""
        body += var
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<x>x)|(?P<op>[-+*^])|(?P<bad>\S))")


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastgroup)
        if m.lastgroup == "bad":
            raise PolySyntaxError(f"unexpected character {m.group('bad')!r}", text, start)
        yield m.lastgroup, m.group(m.lastgroup), start
        pos = m.end()
    yield "end", "", len(text)


def parse_poly(text: str) -> IntPolynomial:
    """Parse ``[sign] [coef [*]] [x [^ exp]]`` terms joined by ``+`` / ``-``.

    Terms may appear in any order; like terms are summed.
    """
    toks = list(_tokens(text))
    i = 0
    acc: dict[int, int] = {}

    def peek():
        return toks[i]

    def expect_number():
        nonlocal i
        kind, val, pos = toks[i]
        if kind != "num":
            raise PolySyntaxError("expected an integer", text, pos)
        i += 1
        return int(val)

    if peek()[0] == "end":
        raise PolySyntaxError("empty polynomial", text, 0)
    first = True
    while True:
        kind, val, pos = peek()
        sign = 1
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise PolySyntaxError("expected '+' or '-'", text, pos)
        first = False
        kind, val, pos = peek()
        coef = None
        if kind == "num":
            coef = expect_number()
            if peek()[1] == "*":
                i += 1
                if peek()[0] != "x":
                    raise PolySyntaxError("expected 'x' after '*'", text, peek()[2])
        exp = 0
        kind, val, pos = peek()
        if kind == "x":
            i += 1
            exp = 1
            if peek()[1] == "^":
                i += 1
                exp = expect_number()
        elif coef is None:
            raise PolySyntaxError("expected a term", text, pos)
        acc[exp] = acc.get(exp, 0) + sign * (1 if coef is None else coef)
        if peek()[0] == "end":
            break
    coeffs = [0] * (max(acc) + 1)
    for e, c in acc.items():
        coeffs[e] = c
    return IntPolynomial(coeffs)


# JSON form: coefficient strings, ascending degree.

def to_json(p: IntPolynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def from_json(data: Union[str, Sequence[str]]) -> IntPolynomial:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, list) or not all(isinstance(c, str) for c in data):
        raise ValueError("polynomial JSON must be an array of coefficient strings")
    return IntPolynomial(int(c) for c in data)
