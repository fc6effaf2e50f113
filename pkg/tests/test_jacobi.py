"""Cyclic Jacobi eigensolver."""

import numpy as np
import pytest

from lapreal.graphs import CYCLE4, STAR, build_laplacian, build_laplacians, complete
from lapreal.jacobi import jacobi_spectra, spectrum_numeric


class TestSpectrumNumeric:
    def test_unit_star(self):
        spec = spectrum_numeric(build_laplacian(STAR, (1.0, 1.0, 1.0)))
        np.testing.assert_allclose(spec, [0.0, 1.0, 1.0, 4.0], atol=1e-10)

    def test_zero_matrix(self):
        spec = spectrum_numeric(np.zeros((4, 4)))
        np.testing.assert_array_equal(spec, np.zeros(4))

    def test_unit_k4(self):
        # unit K4 Laplacian is 4I - J: spectrum {0, 4, 4, 4}
        spec = spectrum_numeric(build_laplacian(complete(4), [1.0] * 6))
        np.testing.assert_allclose(spec, [0.0, 4.0, 4.0, 4.0], atol=1e-10)

    def test_diagonal_matrix(self):
        spec = spectrum_numeric(np.diag([3.0, -1.0, 2.0]))
        np.testing.assert_array_equal(spec, [-1.0, 2.0, 3.0])

    def test_rejects_asymmetric(self):
        m = np.array([[1.0, 2.0], [0.0, 1.0]])
        with pytest.raises(ValueError):
            spectrum_numeric(m)

    def test_matches_numpy_eigvalsh(self):
        rng = np.random.default_rng(31)
        for n in (2, 3, 4, 6, 9):
            a = rng.standard_normal((n, n))
            m = a + a.T
            got = spectrum_numeric(m)
            want = np.linalg.eigvalsh(m)
            np.testing.assert_allclose(got, want, atol=1e-9)


class TestJacobiSpectra:
    def test_batch_matches_single(self):
        rng = np.random.default_rng(37)
        rows = rng.uniform(0.0, 4.0, (30, 4))
        mats = build_laplacians(CYCLE4, rows)
        batch = jacobi_spectra(mats)
        for k in range(rows.shape[0]):
            np.testing.assert_allclose(
                batch[k], spectrum_numeric(mats[k]), atol=1e-12
            )

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            jacobi_spectra(np.zeros((3, 4)))

    def test_laplacian_zero_eigenvalue(self):
        rng = np.random.default_rng(41)
        mats = build_laplacians(STAR, rng.uniform(0.0, 4.0, (100, 3)))
        spectra = jacobi_spectra(mats)
        assert np.abs(spectra[:, 0]).max() < 1e-9
        assert spectra.min() > -1e-9
