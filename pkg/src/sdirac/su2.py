"""Irreducible SU(2) actions on homogeneous polynomials.

The degree-k space has basis p_{k,j}(z1, z2) = z1^(k-j) * z2^j, j = 0..k.
Only the Lie-algebra-level matrices of the basis

    E0 = [[i, 0], [0, i]]-type weight generator,
    E1, E2 spanning the symplectic complement

are built; the group-level action is never exponentiated.  Matrices are
exact Gaussian integers (stored as :class:`sdirac.exact.QQi`) with float
views derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact import QQi, mat_mul, mat_scale, mat_sub, mat_is_zero


@dataclass(frozen=True)
class PolyVector:
    """A degree-k homogeneous polynomial in two complex variables, as
    coefficients against the monomial basis p_{k,j}."""

    k: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.k + 1:
            raise ValueError(f"need {self.k + 1} coefficients, got {len(self.coeffs)}")


@dataclass(frozen=True)
class RepMatrices:
    """Matrices of the three su(2) generators in the monomial basis.

    e0 is diagonal with entries i*(2j - k); e1 is real tridiagonal with
    zero diagonal; e2 is purely imaginary tridiagonal with zero diagonal.
    Entries are exact (QQi, row-major tuples).
    """

    k: int
    e0: tuple
    e1: tuple
    e2: tuple

    def as_arrays(self):
        """Complex128 copies of (e0, e1, e2)."""
        return tuple(
            np.array([[complex(x) for x in row] for row in m], dtype=np.complex128)
            for m in (self.e0, self.e1, self.e2)
        )


def build_rep(k: int) -> RepMatrices:
    """Matrices of the su(2) generators on degree-k polynomials:

        e0 p_j = i(2j - k) p_j
        e1 p_j = (j - k) p_(j+1) + j p_(j-1)
        e2 p_j = i(j - k) p_(j+1) - i j p_(j-1)

    with out-of-range targets contributing nothing.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    size = k + 1
    zero = QQi(0, 0)
    e0 = [[zero] * size for _ in range(size)]
    e1 = [[zero] * size for _ in range(size)]
    e2 = [[zero] * size for _ in range(size)]
    for j in range(size):
        e0[j][j] = QQi(0, 2 * j - k)
        if j + 1 <= k:
            e1[j + 1][j] = QQi(j - k, 0)
            e2[j + 1][j] = QQi(0, j - k)
        if j - 1 >= 0:
            e1[j - 1][j] = QQi(j, 0)
            e2[j - 1][j] = QQi(0, -j)
    return RepMatrices(
        k,
        tuple(tuple(r) for r in e0),
        tuple(tuple(r) for r in e1),
        tuple(tuple(r) for r in e2),
    )


def apply_rep(m, p: PolyVector) -> PolyVector:
    """Apply a generator matrix (exact, row-major) to a polynomial."""
    size = p.k + 1
    out = []
    for r in range(size):
        s = QQi(0, 0)
        for c in range(size):
            x = m[r][c]
            if x:
                s = s + x * p.coeffs[c]
        out.append(s)
    return PolyVector(p.k, tuple(out))


def check_bracket(rep: RepMatrices, mode: str = "exact", tol: float = 1e-13) -> bool:
    """True iff [e0,e1] = 2 e2, [e0,e2] = -2 e1, [e1,e2] = 2 e0.

    Exact mode compares Gaussian rationals; float mode compares complex128
    matrices entrywise within ``tol``.
    """
    if mode == "exact":
        def comm(a, b):
            return mat_sub(mat_mul(a, b), mat_mul(b, a))

        return (
            mat_is_zero(mat_sub(comm(rep.e0, rep.e1), mat_scale(rep.e2, 2)))
            and mat_is_zero(mat_sub(comm(rep.e0, rep.e2), mat_scale(rep.e1, -2)))
            and mat_is_zero(mat_sub(comm(rep.e1, rep.e2), mat_scale(rep.e0, 2)))
        )
    if mode == "float":
        e0, e1, e2 = rep.as_arrays()

        def comm(a, b):
            return a @ b - b @ a

        return (
            np.max(np.abs(comm(e0, e1) - 2 * e2)) <= tol
            and np.max(np.abs(comm(e0, e2) + 2 * e1)) <= tol
            and np.max(np.abs(comm(e1, e2) - 2 * e0)) <= tol
        )
    raise ValueError(f"unknown mode {mode!r}")
