"""Tests for the Sturm-bisection kernel and its two backends."""

import numpy as np
import pytest

from sdirac.tridiag import DEFAULT_BACKEND, eigvalsh_tridiagonal, sturm_count

BACKENDS = ["numpy", "numba"]


def random_tridiag(rng, m):
    return rng.normal(size=m) * 10, rng.normal(size=m - 1) * 5


@pytest.mark.parametrize("backend", BACKENDS)
class TestAgainstLapack:
    def test_random_matrices(self, backend):
        rng = np.random.default_rng(1234)
        for _ in range(25):
            m = int(rng.integers(1, 64))
            d, b = random_tridiag(rng, m)
            got = eigvalsh_tridiagonal(d, b, backend=backend)
            ref = np.linalg.eigvalsh(np.diag(d) + np.diag(b, 1) + np.diag(b, -1))
            assert np.all(np.diff(got) >= 0)
            assert np.max(np.abs(got - ref) / (1 + np.abs(ref))) < 1e-13

    def test_single_cell(self, backend):
        assert eigvalsh_tridiagonal([7.5], [], backend=backend).tolist() == [7.5]

    def test_repeated_eigenvalues(self, backend):
        # decoupled blocks give exact multiplicities
        d = np.array([2.0, 2.0, -1.0])
        b = np.array([0.0, 0.0])
        got = eigvalsh_tridiagonal(d, b, backend=backend)
        assert np.allclose(got, [-1.0, 2.0, 2.0], atol=1e-14)

    def test_zero_matrix(self, backend):
        got = eigvalsh_tridiagonal(np.zeros(4), np.zeros(3), backend=backend)
        assert np.array_equal(got, np.zeros(4))


class TestBackendAgreement:
    def test_bit_identical(self):
        rng = np.random.default_rng(77)
        for _ in range(20):
            m = int(rng.integers(2, 80))
            d, b = random_tridiag(rng, m)
            a = eigvalsh_tridiagonal(d, b, backend="numpy")
            c = eigvalsh_tridiagonal(d, b, backend="numba")
            assert np.array_equal(a, c)

    def test_default_backend_resolves(self):
        assert DEFAULT_BACKEND in ("numba", "numpy")
        d, b = np.array([0.0, 0.0]), np.array([3.0])
        assert np.allclose(eigvalsh_tridiagonal(d, b), [-3, 3], atol=1e-14)


class TestSturmCount:
    def test_counts_match_spectrum(self):
        rng = np.random.default_rng(5)
        d, b = random_tridiag(rng, 30)
        eigs = np.linalg.eigvalsh(np.diag(d) + np.diag(b, 1) + np.diag(b, -1))
        for x in (-50.0, -1.0, 0.0, 2.5, 50.0):
            assert sturm_count(d, b, x) == int(np.sum(eigs < x))


class TestValidation:
    def test_wrong_offdiag_length(self):
        with pytest.raises(ValueError):
            eigvalsh_tridiagonal(np.zeros(3), np.zeros(3))

    def test_wrong_dimensionality(self):
        with pytest.raises(ValueError):
            eigvalsh_tridiagonal(np.zeros((2, 2)), np.zeros(1))

    def test_unknown_backend(self):
        with pytest.raises(ValueError):
            eigvalsh_tridiagonal([1.0], [], backend="gpu")

    def test_empty(self):
        assert eigvalsh_tridiagonal([], []).size == 0
