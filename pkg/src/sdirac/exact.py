"""Exact Gaussian-rational scalars and small dense exact linear algebra.

Every coefficient appearing in the ladder formulas, the su(2) matrices and
the intertwiner systems is of the form a + b*i with a, b rational, so a
tiny exact scalar type is enough to run all verification paths without
rounding.  Components are kept as plain ``int`` whenever possible (int and
``fractions.Fraction`` mix transparently) so that the common integer-only
paths stay fast.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class QQi:
    """A Gaussian rational a + b*i with exact rational components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re
        self.im = im

    # -- constructors -------------------------------------------------

    @staticmethod
    def i_times(r) -> "QQi":
        """The purely imaginary number i*r for a rational r."""
        return QQi(0, r)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QQi):
            return QQi(self.re + other.re, self.im + other.im)
        if isinstance(other, Rational):
            return QQi(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, QQi):
            return QQi(self.re - other.re, self.im - other.im)
        if isinstance(other, Rational):
            return QQi(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return QQi(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QQi):
            return QQi(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, Rational):
            return QQi(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return QQi(Fraction(self.re, 1) / other, Fraction(self.im, 1) / other)
        if isinstance(other, QQi):
            n = other.re * other.re + other.im * other.im
            if n == 0:
                raise ZeroDivisionError("division by zero Gaussian rational")
            conj = QQi(other.re, -other.im)
            p = self * conj
            return QQi(Fraction(p.re, 1) / n, Fraction(p.im, 1) / n)
        return NotImplemented

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def conjugate(self) -> "QQi":
        return QQi(self.re, -self.im)

    # -- comparisons / conversions --------------------------------------

    def __eq__(self, other):
        if isinstance(other, QQi):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((Fraction(self.re), Fraction(self.im)))

    def __complex__(self):
        return float(self.re) + 1j * float(self.im)

    def __repr__(self):
        return f"QQi({self.re!r}, {self.im!r})"


QQI_ZERO = QQi(0, 0)
QQI_ONE = QQi(1, 0)
QQI_I = QQi(0, 1)


# ---------------------------------------------------------------------
# Dense matrices as tuples of tuples of QQi (row major).  Sizes here are
# tiny (at most a few hundred rows), so plain loops are fine.
# ---------------------------------------------------------------------


def mat_mul(a, b):
    n, p = len(a), len(b[0])
    out = []
    for i in range(n):
        nz = [(t, x) for t, x in enumerate(a[i]) if x]
        row = []
        for j in range(p):
            s = QQI_ZERO
            for t, x in nz:
                s = s + x * b[t][j]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_sub(a, b):
    return tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_scale(a, s):
    return tuple(tuple(x * s for x in row) for row in a)


def mat_is_zero(a) -> bool:
    return all(not x for row in a for x in row)


def nullspace_dim(a) -> int:
    """Dimension of the kernel of an exact matrix, by fraction-free-ish
    Gaussian elimination with exact division."""
    rows = [list(row) for row in a]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n_cols):
        pivot = None
        for r in range(rank, n_rows):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, n_rows):
            x = rows[r][col]
            if not x:
                continue
            factor = x / pv
            for c in range(col, n_cols):
                rows[r][c] = rows[r][c] - factor * rows[rank][c]
        rank += 1
    return n_cols - rank
