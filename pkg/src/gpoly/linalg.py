"""Exact dense linear algebra over Q.

Every kernel runs on Python integers.  A rational matrix ``M`` is first
scaled by the lcm ``L`` of its denominators; the results are then rescaled
(``det(M) = det(LM) / L**n`` and likewise for permanents, and the
characteristic polynomial coefficient of ``x**k`` picks up ``L**(k-n)``).
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import Poly, interpolate_consecutive, rat
from .errors import DimensionTooLarge, IndexOutOfRange, NotSymmetric

DEFAULT_PERMANENT_CAP = 20
_permanent_cap = DEFAULT_PERMANENT_CAP


def get_permanent_cap() -> int:
    return _permanent_cap


def set_permanent_cap(cap: int) -> None:
    global _permanent_cap
    if cap < 0:
        raise ValueError("permanent cap must be >= 0")
    _permanent_cap = int(cap)


def permanent_cap_from_env(default: int = DEFAULT_PERMANENT_CAP) -> int:
    raw = os.environ.get("GPOLY_PERMANENT_CAP")
    return int(raw) if raw else default


class RatMatrix:
    """Immutable square matrix of exact rationals.

    Integral entries are stored as ``int`` and the rest as ``Fraction``.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(map(rat, r)) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self._rows = rows

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> RatMatrix:
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> RatMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple, ...]:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"RatMatrix({[[str(x) for x in r] for r in self._rows]})"

    def __add__(self, other: RatMatrix) -> RatMatrix:
        return RatMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return RatMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def scale(self, c) -> RatMatrix:
        return RatMatrix([[c * a for a in r] for r in self._rows])

    __rmul__ = scale

    def shift(self, t) -> RatMatrix:
        """Return ``t*I - self``."""
        t = rat(t)
        return RatMatrix([[(t if i == j else 0) - a for j, a in enumerate(r)]
                          for i, r in enumerate(self._rows)])

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self._rows[s][t] == self._rows[t][s] for s in range(n) for t in range(s + 1, n))

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self._rows]


def _check_index(M: RatMatrix, i: int) -> None:
    if not 0 <= i < M.n:
        raise IndexOutOfRange(f"index {i} out of range for a {M.n}x{M.n} matrix")


def minor(M: RatMatrix, rows: Iterable[int], cols: Iterable[int]) -> RatMatrix:
    """Delete the given rows and columns (0-based), keeping the rest in order.

    Only square results are representable, so ``|rows|`` must equal ``|cols|``.
    """
    rows, cols = set(rows), set(cols)
    for i in rows | cols:
        _check_index(M, i)
    if len(rows) != len(cols):
        raise ValueError("minor must delete as many rows as columns")
    keep_c = [j for j in range(M.n) if j not in cols]
    return RatMatrix([[r[j] for j in keep_c] for i, r in enumerate(M.rows) if i not in rows])


def mask(M: RatMatrix, i: int, j: int) -> RatMatrix:
    """Zero the symmetric pair of entries (i, j) and (j, i)."""
    _check_index(M, i)
    _check_index(M, j)
    if not M.is_symmetric():
        raise NotSymmetric("mask requires a symmetric matrix")
    if not M[i, j]:
        return M
    rows = [list(r) for r in M.rows]
    rows[i][j] = rows[j][i] = 0
    return RatMatrix(rows)


def _integer_rows(M: RatMatrix) -> tuple[list[list[int]], int]:
    """Return ``(L*M as int rows, L)`` with L the lcm of denominators."""
    scale = 1
    for r in M.rows:
        for x in r:
            if type(x) is not int:
                scale = math.lcm(scale, x.denominator)
    if scale == 1:
        return [list(r) for r in M.rows], 1
    return [[x.numerator * (scale // x.denominator) for x in r] for r in M.rows], scale


def bareiss_det(a: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination on an integer matrix (modified in place)."""
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k]:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * piv - f * rk[j]) // prev
        prev = piv
    return sign * a[n - 1][n - 1]


def ryser_permanent(a: Sequence[Sequence[int]]) -> int:
    """Ryser's formula in the Nijenhuis-Wilf form, Gray-code ordered.

    Only subsets of the first n-1 columns are visited; each step adds or
    removes one column from the running row sums, so the cost is
    O(2**(n-1) * n).  Row sums are kept doubled to stay in integers.
    """
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    # doubled x_i = 2*a[i][n-1] - sum_j a[i][j]
    sums = [2 * row[-1] - sum(row) for row in a]
    cols = [tuple(2 * row[j] for row in a) for j in range(n - 1)]
    prod = math.prod
    total = prod(sums)
    subset = 0
    for k in range(1, 1 << (n - 1)):
        j = (k & -k).bit_length() - 1
        subset ^= 1 << j
        col = cols[j]
        if subset >> j & 1:
            sums = [s + c for s, c in zip(sums, col)]
        else:
            sums = [s - c for s, c in zip(sums, col)]
        # |subset| has the parity of k
        if k & 1:
            total -= prod(sums)
        else:
            total += prod(sums)
    # per = (-1)**(n-1) * 2 * total / 2**n
    total >>= n - 1
    return total if n & 1 else -total


def berkowitz(a: Sequence[Sequence[int]]) -> list[int]:
    """Division-free characteristic polynomial ``det(xI - a)``, highest power first."""
    n = len(a)
    poly = [1]
    for r in range(n):
        t = [1, -a[r][r]]
        if r:
            row = a[r][:r]
            v = [a[i][r] for i in range(r)]
            for step in range(r):
                t.append(-sum(x * y for x, y in zip(row, v)))
                if step + 1 < r:
                    v = [sum(a[i][j] * v[j] for j in range(r)) for i in range(r)]
        # Toeplitz product, truncated to the new length r + 2
        poly = [sum(t[i - j] * poly[j] for j in range(max(0, i - r - 1), min(i, r) + 1))
                for i in range(r + 2)]
    return poly


def det(M: RatMatrix) -> Fraction:
    a, scale = _integer_rows(M)
    d = bareiss_det(a)
    return rat(Fraction(d, scale ** M.n))


def _check_cap(n: int, cap) -> None:
    cap = _permanent_cap if cap is None else cap
    if n > cap:
        raise DimensionTooLarge(n, cap)


def perm(M: RatMatrix, cap: int | None = None) -> Fraction:
    _check_cap(M.n, cap)
    a, scale = _integer_rows(M)
    return rat(Fraction(ryser_permanent(a), scale ** M.n))


def _rescale(int_coeffs_ascending: Sequence, scale: int, n: int) -> Poly:
    if scale == 1:
        return Poly(int_coeffs_ascending)
    return Poly(Fraction(c, scale ** (n - k)) for k, c in enumerate(int_coeffs_ascending))


def charpoly(M: RatMatrix) -> Poly:
    """``det(xI - M)`` computed by Berkowitz's algorithm."""
    a, scale = _integer_rows(M)
    return _rescale(berkowitz(a)[::-1], scale, M.n)


def permpoly(M: RatMatrix, cap: int | None = None) -> Poly:
    """``per(xI - M)`` by evaluating at x = 0..n and interpolating.

    The nodes are consecutive integers, so the interpolation runs in exact
    integer arithmetic (:func:`~gpoly.arith.interpolate_consecutive`).
    """
    n = M.n
    _check_cap(n, cap)
    a, scale = _integer_rows(M)
    values = []
    for t in range(n + 1):
        shifted = [[(t if i == j else 0) - x for j, x in enumerate(r)] for i, r in enumerate(a)]
        values.append(ryser_permanent(shifted))
    return _rescale(interpolate_consecutive(values), scale, n)


