"""Tests for SIC construction, validation, search and file formats."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from siclie.config import Settings
from siclie.errors import InvalidFileError, InvalidStateError, MissingFiducialError
from siclie.sic import (
    Fiducial,
    SearchOptions,
    SicSet,
    fiducial_hash,
    fiducial_search,
    format_fiducial,
    load_fiducial,
    load_sic_set,
    max_overlap_residual,
    probabilities,
    random_density_matrix,
    random_fiducial,
    resolve_fiducial,
    save_fiducial,
    save_sic_set,
    sic_from_fiducial,
    state_from_probabilities,
    validate_sic,
)


class TestSicFromFiducial:
    def test_d2_tetrahedron(self, sic2):
        assert validate_sic(sic2, tol=1e-9).passed
        off = ~np.eye(4, dtype=bool)
        assert_allclose(np.abs(sic2.overlaps[off]) ** 2, 1 / 3, atol=1e-12)

    def test_orbit_shape_and_origin(self, fid3, sic3):
        assert sic3.vectors.shape == (9, 3)
        assert_allclose(np.linalg.norm(sic3.vectors, axis=1), 1.0)
        assert_allclose(sic3.vectors[0], fid3.components)
        assert len(sic3.label_map) == 9

    def test_repeated_vector_fails(self, fid2):
        sic = SicSet(np.tile(fid2.components, (4, 1)))
        report = validate_sic(sic)
        assert not report.passed
        assert report.get("sic.overlaps").max_error == pytest.approx(1 - 1 / 3)

    def test_d4_cross_overlap(self, sic4):
        assert validate_sic(sic4, tol=1e-9).passed
        off = ~np.eye(16, dtype=bool)
        assert_allclose(np.abs(sic4.overlaps[off]) ** 2, 1 / 5, atol=1e-9)

    def test_unnormalized_fiducial_rejected(self):
        with pytest.raises(InvalidStateError):
            sic_from_fiducial(Fiducial(np.array([1.0, 1.0])))

    def test_rephased_keeps_labels(self, sic2):
        moved = sic2.rephased(np.linspace(0, 1, 4))
        assert moved.label_map == sic2.label_map
        assert_allclose(np.abs(moved.overlaps), np.abs(sic2.overlaps))


class TestStates:
    @given(seed=st.integers(0, 2**31 - 1), rank=st.integers(1, 3))
    def test_probability_round_trip(self, sic3, seed, rank):
        rho = random_density_matrix(3, np.random.default_rng(seed), rank=rank)
        p = probabilities(rho, sic3)
        assert p.sum() == pytest.approx(1.0)
        assert_allclose(state_from_probabilities(p, sic3), rho, atol=1e-10)

    def test_random_fiducial_is_unit(self, rng):
        fid = random_fiducial(5, rng)
        assert fid.d == 5
        assert fid.is_normalized()


class TestSearch:
    @pytest.mark.parametrize("seed", [0, 11])
    def test_d2_converges(self, seed):
        fid = fiducial_search(2, seed=seed)
        assert max_overlap_residual(fid.components) < 1e-9
        assert validate_sic(sic_from_fiducial(fid), tol=1e-9).passed

    def test_d3_cross_overlap(self):
        sic = sic_from_fiducial(fiducial_search(3, seed=5))
        off = ~np.eye(9, dtype=bool)
        assert_allclose(np.abs(sic.overlaps[off]) ** 2, 1 / 4, atol=1e-9)

    def test_deterministic(self):
        opts = SearchOptions(restarts=8)
        a = fiducial_search(3, seed=3, opts=opts)
        b = fiducial_search(3, seed=3, opts=opts)
        assert format_fiducial(a) == format_fiducial(b)


class TestFiles:
    def test_load_example_file(self, tmp_path):
        path = tmp_path / "f.txt"
        path.write_text("2\n0.888074 0\n0.325058 0.325058\n")
        fid = load_fiducial(path, norm_tol=1e-5)
        assert fid.d == 2
        assert_allclose(fid.components, [0.888074, 0.325058 + 0.325058j])

    def test_fiducial_round_trip(self, tmp_path, fid3):
        path = save_fiducial(fid3, tmp_path / "f3.txt")
        loaded = load_fiducial(path)
        assert_allclose(loaded.components, fid3.components, rtol=0, atol=0)
        assert fiducial_hash(loaded) == fiducial_hash(fid3)

    @pytest.mark.parametrize(
        "content",
        [
            "3\n1 0\n0 0\n",
            "x\n1 0\n0 0\n",
            "2\n1 0\n0 zero\n",
            "2\n1 0 0\n0 0\n",
            "2\n0.9 0\n0 0\n",
            "",
        ],
        ids=["missing-row", "bad-header", "bad-number", "extra-column", "norm", "empty"],
    )
    def test_malformed(self, tmp_path, content):
        path = tmp_path / "bad.txt"
        path.write_text(content)
        with pytest.raises(InvalidFileError):
            load_fiducial(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InvalidFileError):
            load_fiducial(tmp_path / "absent.txt")

    def test_sic_set_round_trip(self, tmp_path, sic2):
        path = save_sic_set(sic2, tmp_path / "set.txt")
        assert_allclose(load_sic_set(path).vectors, sic2.vectors, rtol=0, atol=0)


class TestResolve:
    def test_bundled(self, fid3):
        assert_allclose(resolve_fiducial(3).components, fid3.components)

    def test_explicit_path_dimension_mismatch(self, tmp_path, fid2):
        path = save_fiducial(fid2, tmp_path / "f2.txt")
        with pytest.raises(InvalidFileError):
            resolve_fiducial(3, path)

    def test_outside_fallback_range(self, tmp_path):
        settings = Settings(data_dir=tmp_path)
        with pytest.raises(MissingFiducialError):
            resolve_fiducial(9, settings=settings)

    def test_search_fallback_caches(self, tmp_path):
        settings = Settings(data_dir=tmp_path)
        fid = resolve_fiducial(2, settings=settings)
        assert (tmp_path / "d2.txt").exists()
        assert validate_sic(sic_from_fiducial(fid)).passed
        assert_allclose(resolve_fiducial(2, settings=settings).components, fid.components)

    @pytest.mark.parametrize("d", range(2, 8))
    def test_bundled_fiducials_are_sics(self, d):
        settings = Settings()
        fid = resolve_fiducial(d, settings=settings)
        assert fid.d == d
        assert max_overlap_residual(fid.components) < 1e-12
        assert validate_sic(sic_from_fiducial(fid), tol=settings.tol).passed

    def test_search_fallback_never_writes_package_data(self, tmp_path, monkeypatch):
        monkeypatch.setattr(
            "siclie.sic.fiducial_io.BUNDLED_DATA_DIR", tmp_path.resolve()
        )
        fid = resolve_fiducial(2, settings=Settings(data_dir=tmp_path))
        assert not (tmp_path / "d2.txt").exists()
        assert validate_sic(sic_from_fiducial(fid)).passed
