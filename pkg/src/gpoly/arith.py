"""Exact rationals and dense univariate polynomials over Q.

Rationals are :class:`fractions.Fraction`, which is already canonical
(reduced, positive denominator).  :class:`Poly` stores coefficients in
ascending order, so ``coeffs[k]`` multiplies ``x**k``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DuplicateAbscissa, MalformedRational

Rat = Fraction

#: Degree of the zero polynomial.  Behaves like minus infinity under ``+``.
ZERO_DEGREE = float("-inf")

_RAT_RE = re.compile(r"[+-]?\d+(/\d+)?")


def rat(x):
    """Normalise a rational: integral values become ``int``, the rest stay ``Fraction``."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return int(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact rationals")
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def parse_rat(text) -> Fraction:
    """Parse an integer or ``p/q`` string.  Decimal and float notation is rejected."""
    if isinstance(text, bool):
        raise MalformedRational(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise MalformedRational(f"not a rational: {text!r}")
    s = text.strip()
    if not _RAT_RE.fullmatch(s):
        raise MalformedRational(f"not an exact rational: {text!r}")
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise MalformedRational(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rat(r: Fraction) -> str:
    return str(Fraction(r))


class Poly:
    """Immutable polynomial with exact rational coefficients.

    Integral coefficients are held as ``int`` (see :func:`rat`); equality and
    hashing agree with the ``Fraction`` values they stand for.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [rat(c) for c in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def constant(cls, value) -> Poly:
        return cls((value,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, value=1) -> Poly:
        return cls([0] * k + [value])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else ZERO_DEGREE

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return 0

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly.constant(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"Poly({[str(c) for c in self._c]})"

    def __str__(self):
        return to_text(self)

    @staticmethod
    def _coerce(other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self._c])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def derivative(self) -> Poly:
        return Poly([k * c for k, c in enumerate(self._c)][1:])

    def __call__(self, t):
        acc = 0
        for c in reversed(self._c):
            acc = acc * t + c
        return rat(acc)

    def to_strings(self) -> list[str]:
        return [format_rat(c) for c in self._c]

    @classmethod
    def from_strings(cls, items: Sequence) -> Poly:
        return cls(parse_rat(s) for s in items)


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def poly_eval(p: Poly, t) -> Fraction:
    return p(Fraction(t))


def lagrange_interpolate(points: Sequence[tuple]) -> Poly:
    """Return the unique polynomial of degree < len(points) through ``points``.

    Uses Newton divided differences, then expands the Newton form into the
    monomial basis with a Horner-style sweep.
    """
    if not points:
        raise ValueError("need at least one point")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("abscissae must be pairwise distinct")
    dd = [Fraction(y) for _, y in points]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # p = dd[n-1]; p = p*(x - xs[i]) + dd[i] for i descending
    coeffs = [dd[-1]]
    for i in range(n - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs
        for k, c in enumerate(coeffs):
            shifted[k] -= xs[i] * c
        shifted[0] += dd[i]
        coeffs = shifted
    return Poly(coeffs)


def interpolate_consecutive(values: Sequence[int]) -> list:
    """Integer-node interpolation: the polynomial with ``p(t) = values[t]``.

    Forward differences at 0 give ``p(t) = sum_k D_k * C(t, k)``; everything
    is scaled by ``d!`` so the expansion stays in integers until one final
    exact division.  Returns ascending coefficients.
    """
    d = len(values) - 1
    diffs = list(values)
    heads = []
    for _ in range(d + 1):
        heads.append(diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    fact = math.factorial(d)
    out = [0] * (d + 1)
    falling = [1]  # coefficients of t(t-1)...(t-k+1)
    for k, h in enumerate(heads):
        w = h * (fact // math.factorial(k))
        if w:
            for i, c in enumerate(falling):
                out[i] += w * c
        falling = [0] + falling
        for i in range(len(falling) - 1):
            falling[i] -= k * falling[i + 1]
    return [rat(Fraction(c, fact)) for c in out]


def to_text(p: Poly, var: str = "x") -> str:
    """Human-readable rendering, highest power first (``x^2 - 1``)."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            term = format_rat(mag)
        else:
            body = var if k == 1 else f"{var}^{k}"
            term = body if mag == 1 else f"{format_rat(mag)}*{body}"
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)
