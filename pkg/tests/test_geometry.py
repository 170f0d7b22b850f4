"""Tests for subspace geometry of the adjoint projectors."""

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.stats import unitary_group

from siclie.errors import InvalidProjectorError
from siclie.geometry import (
    SubspaceFrame,
    check_geom_vectors,
    check_uniform_inclination,
    f_sum_identities,
    geom_vectors,
    geometry_sweep,
    inclination,
    intersection_dimension,
    pair_sample,
    principal_cosines,
    verify_q_geometry,
    verify_r_geometry,
)


def _projector(columns: np.ndarray) -> np.ndarray:
    return SubspaceFrame.from_vectors(columns).projector


class TestSubspaces:
    def test_same_subspace(self):
        p = np.diag([1.0, 1.0, 0.0, 0.0])
        assert_allclose(principal_cosines(p, p), [1.0, 1.0])
        assert intersection_dimension(p, p) == 2

    def test_orthogonal_subspaces(self):
        p = np.diag([1.0, 1.0, 0.0, 0.0])
        pp = np.diag([0.0, 0.0, 1.0, 1.0])
        assert_allclose(principal_cosines(p, pp), [0.0, 0.0], atol=1e-12)
        assert intersection_dimension(p, pp) == 0

    def test_symmetric(self):
        u = unitary_group.rvs(5, random_state=3)
        p, pp = _projector(u[:, :2]), _projector(u[:, 1:4] + 0.3 * u[:, 4:5])
        assert_allclose(principal_cosines(p, pp), principal_cosines(pp, p), atol=1e-12)

    def test_single_angle(self):
        theta = 0.4
        p = _projector(np.array([[1.0], [0.0]]))
        pp = _projector(np.array([[np.cos(theta)], [np.sin(theta)]]))
        assert_allclose(principal_cosines(p, pp), [np.cos(theta)])
        ok, c = check_uniform_inclination(p, pp)
        assert ok
        assert c == pytest.approx(np.cos(theta))

    def test_random_pair_not_uniform(self):
        u = unitary_group.rvs(6, random_state=11)
        v = unitary_group.rvs(6, random_state=12)
        p, pp = _projector(u[:, :3]), _projector(v[:, :3])
        ok, _ = check_uniform_inclination(p, pp)
        assert not ok

    def test_rank_mismatch(self):
        with pytest.raises(InvalidProjectorError):
            inclination(np.diag([1.0, 0.0, 0.0]), np.diag([0.0, 1.0, 1.0]))

    def test_not_a_projector(self):
        with pytest.raises(InvalidProjectorError):
            principal_cosines(np.diag([1.0, 0.5]), np.eye(2))

    def test_frame_properties(self):
        frame = SubspaceFrame.from_projector(np.diag([0.0, 1.0, 1.0]))
        assert frame.ambient == 3
        assert frame.dim == 2


class TestVectors:
    def test_vector_checks(self, small_bundle):
        gv = geom_vectors(small_bundle)
        report = check_geom_vectors(gv, small_bundle)
        assert report.passed, [c.name for c in report.failures()]

    def test_diagonal_zero(self, bundle3):
        gv = geom_vectors(bundle3)
        assert_allclose(gv.f[4, 4], 0.0)
        assert_allclose(gv.g[2, 2], 0.0)


class TestPairGeometry:
    def test_line_cosines_d3(self, bundle3):
        gv = geom_vectors(bundle3)
        assert abs(np.vdot(gv.f[0, 1], gv.f[1, 0])) == pytest.approx(0.25)
        assert abs(np.vdot(gv.f[0, 1], gv.fstar[1, 0])) == pytest.approx(0.75)
        assert abs(gv.gbar[0, 1] @ gv.gbar[1, 0]) == pytest.approx(0.5)

    @pytest.mark.parametrize("pair", [(0, 1), (3, 7), (8, 2)])
    def test_q_geometry_d3(self, bundle3, pair):
        report = verify_q_geometry(bundle3, *pair)
        assert report.passed
        assert not report.skipped_checks()

    def test_inclination_d3(self, bundle3):
        gv = geom_vectors(bundle3)
        Q_rs = bundle3.Q[0] - np.outer(gv.f[0, 1], gv.f[0, 1].conj())
        Q_sr = bundle3.Q[1] - np.outer(gv.f[1, 0], gv.f[1, 0].conj())
        ok, c = check_uniform_inclination(Q_rs, Q_sr)
        assert ok
        assert c == pytest.approx(0.5)

    def test_r_geometry_d3(self, bundle3):
        report = verify_r_geometry(bundle3, 2, 5)
        assert report.passed
        assert report.get("geometry.r.rank").max_error == 0.0

    def test_d2_skips_degenerate(self, bundle2):
        q = verify_q_geometry(bundle2, 0, 1)
        r = verify_r_geometry(bundle2, 0, 1)
        assert q.passed and r.passed
        assert q.get("geometry.q.inclination").is_skipped
        assert r.get("geometry.r.rank").is_skipped
        assert not q.get("geometry.q.sandwich").is_skipped


class TestSums:
    def test_d4_includes_reversed_gbar(self, bundle4):
        report = f_sum_identities(bundle4)
        assert report.passed, [c.name for c in report.failures()]
        assert not report.get("geometry.fsum.gbar_reversed").is_skipped

    def test_small_d_skips_reversed_gbar(self, small_bundle):
        report = f_sum_identities(small_bundle)
        assert report.passed
        assert report.get("geometry.fsum.gbar_reversed").is_skipped


class TestSweep:
    def test_pair_sample(self):
        assert len(pair_sample(3)) == 72
        assert pair_sample(5, seed=1) == pair_sample(5, seed=1)
        assert len(pair_sample(5)) == 200
        assert all(r != s for r, s in pair_sample(6))

    def test_sweep_d3(self, bundle3):
        report = geometry_sweep(bundle3)
        assert report.passed, [c.name for c in report.failures()]
        assert report.get("geometry.q.inclination").detail == "worst of 72 pairs"

    def test_sweep_subset_d2(self, bundle2):
        report = geometry_sweep(bundle2, pairs=[(0, 1), (1, 2)])
        assert report.passed
        assert report.get("geometry.q.orthogonality").is_skipped
