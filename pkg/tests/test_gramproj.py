"""Tests for Weyl-Heisenberg Gram projectors and the P-P^T property."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from siclie.errors import InvalidStateError, UnsupportedParityError
from siclie.gramproj import check_ppt, h_vector, wh_gram_bundle, wigner_h_relation
from siclie.sic import Fiducial, random_fiducial
from siclie.tensors import gram
from siclie.utils import numerical_rank


class TestGramBundle:
    def test_sic_orbit_matches_gram(self, fid3, sic3):
        bundle = wh_gram_bundle(fid3)
        assert_allclose(bundle.P, gram(sic3).G / 3, atol=1e-12)

    def test_h_unit_and_real(self, fid3):
        bundle = wh_gram_bundle(fid3)
        assert np.linalg.norm(bundle.h) == pytest.approx(1.0)
        assert bundle.h_imag < 1e-12

    def test_ppt_factorization(self, fid2):
        bundle = wh_gram_bundle(fid2)
        assert_allclose(bundle.P @ bundle.P.T, np.outer(bundle.h, bundle.h), atol=1e-12)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_random_fiducials(self, d):
        fid = random_fiducial(d, np.random.default_rng(d))
        report = check_ppt(wh_gram_bundle(fid))
        assert report.passed, [c.name for c in report.failures()]

    def test_ranks_d2(self, fid2):
        bundle = wh_gram_bundle(fid2)
        assert numerical_rank(bundle.Pbar) == 1
        assert numerical_rank(bundle.J_P @ bundle.J_P) == 2

    def test_unnormalized_fiducial(self):
        fid = Fiducial(np.array([1.0, 0.5j, 0.25]))
        with pytest.raises(InvalidStateError):
            wh_gram_bundle(fid)
        report = check_ppt(wh_gram_bundle(fid, strict=False))
        assert not report.passed
        assert not report.get("gramproj.P_idempotent").passed


class TestWigner:
    @pytest.mark.parametrize("d", [3, 5])
    def test_relation_random(self, d):
        fid = random_fiducial(d, np.random.default_rng(10 + d))
        assert wigner_h_relation(fid).passed

    def test_relation_sic(self, fid3):
        assert wigner_h_relation(fid3).passed

    def test_even_dimension_rejected(self, fid4):
        with pytest.raises(UnsupportedParityError):
            wigner_h_relation(fid4)

    def test_h_of_basis_state(self):
        psi = np.zeros(3, dtype=complex)
        psi[0] = 1.0
        h = h_vector(psi)
        assert h[0] == pytest.approx(1 / np.sqrt(3))
