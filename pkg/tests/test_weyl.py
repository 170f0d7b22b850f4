"""Tests for displacement operators, parity and the Wigner function."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from siclie.errors import (
    InvalidDimensionError,
    InvalidStateError,
    UnsupportedParityError,
)
from siclie.weyl import (
    DisplacementIndex,
    check_dimension,
    displacement,
    displacement_stack,
    parity,
    phase_space,
    tau,
    tau_power,
    wigner,
    wigner_function,
)


class TestDisplacement:
    def test_zero_displacement_is_identity(self):
        assert_allclose(displacement(2, (0, 0)).matrix, np.eye(2))

    def test_shift_in_d2(self):
        assert_allclose(displacement(2, (1, 0)).matrix, [[0, 1], [1, 0]])

    def test_composition_example_d3(self):
        p = DisplacementIndex(3, 1, 2)
        q = DisplacementIndex(3, 2, 1)
        assert p.symplectic(q) == 3
        lhs = displacement(3, p).matrix @ displacement(3, q).matrix
        rhs = tau(3) ** 3 * displacement(3, p + q).matrix
        assert_allclose(lhs, rhs, atol=1e-12)

    @given(
        d=st.integers(2, 7),
        p=st.tuples(st.integers(-20, 20), st.integers(-20, 20)),
        q=st.tuples(st.integers(-20, 20), st.integers(-20, 20)),
    )
    def test_composition_law(self, d, p, q):
        p, q = DisplacementIndex(d, *p), DisplacementIndex(d, *q)
        lhs = displacement(d, p).matrix @ displacement(d, q).matrix
        rhs = tau_power(d, p.symplectic(q)) * displacement(d, p + q).matrix
        assert_allclose(lhs, rhs, atol=1e-10)

    @given(d=st.integers(2, 7), p1=st.integers(-30, 30), p2=st.integers(-30, 30))
    def test_unitary_and_inverse(self, d, p1, p2):
        p = DisplacementIndex(d, p1, p2)
        op = displacement(d, p)
        assert op.is_unitary(1e-10)
        assert_allclose(op.dagger().matrix, displacement(d, -p).matrix, atol=1e-10)

    @pytest.mark.parametrize("d", [2, 4, 6])
    def test_even_period_is_2d(self, d):
        assert DisplacementIndex(d, 2 * d + 1, 0) == DisplacementIndex(d, 1, 0)
        shifted = displacement(d, (d, 1)).matrix
        assert_allclose(shifted, -displacement(d, (0, 1)).matrix, atol=1e-12)

    @given(
        d=st.sampled_from([2, 4, 6]),
        p=st.tuples(st.integers(-12, 12), st.integers(-12, 12)),
        u=st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
    )
    def test_even_sign_law(self, d, p, u):
        sign = (-1) ** ((u[0] * p[1] + u[1] * p[0]) % 2)
        shifted = displacement(d, (p[0] + d * u[0], p[1] + d * u[1])).matrix
        assert_allclose(shifted, sign * displacement(d, p).matrix, atol=1e-10)

    @given(
        d=st.integers(2, 7),
        p=st.tuples(st.integers(-10, 10), st.integers(-10, 10)),
        data=st.data(),
    )
    def test_power_is_scaled_index(self, d, p, data):
        n = data.draw(st.integers(0, 2 * d))
        idx = DisplacementIndex(d, *p)
        power = np.linalg.matrix_power(displacement(d, idx).matrix, n)
        assert_allclose(power, displacement(d, idx.scale(n)).matrix, atol=1e-9)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_irreducible_on_basis_pairs(self, d):
        stack = displacement_stack(d)
        eye = np.eye(d)
        for a in range(d):
            for b in range(d):
                amps = np.einsum("i,pij,j->p", eye[a], stack, eye[b])
                assert np.max(np.abs(amps)) > 0.5

    @given(d=st.integers(2, 6), seed=st.integers(0, 2**16))
    def test_irreducible_on_random_pairs(self, d, seed):
        rng = np.random.default_rng(seed)
        phi, chi = rng.standard_normal((2, d)) + 1j * rng.standard_normal((2, d))
        phi /= np.linalg.norm(phi)
        chi /= np.linalg.norm(chi)
        amps = np.einsum("i,pij,j->p", phi.conj(), displacement_stack(d), chi)
        assert np.sum(np.abs(amps) ** 2) == pytest.approx(d, rel=1e-9)
        assert np.max(np.abs(amps)) > 0

    def test_stack_is_row_major_and_read_only(self):
        stack = displacement_stack(3)
        assert stack.shape == (9, 3, 3)
        assert_allclose(stack[5], displacement(3, (1, 2)).matrix)
        with pytest.raises(ValueError):
            stack[0, 0, 0] = 2.0

    def test_phase_space_order(self):
        labels = [(p.p1, p.p2) for p in phase_space(2)]
        assert labels == [(0, 0), (0, 1), (1, 0), (1, 1)]

    @pytest.mark.parametrize("d", [1, 0, -3])
    def test_invalid_dimension(self, d):
        with pytest.raises(InvalidDimensionError):
            check_dimension(d)


class TestParity:
    def test_d2_parity_is_identity(self):
        assert_allclose(parity(2).matrix, np.eye(2))

    def test_d3_parity_action(self):
        expected = np.zeros((3, 3))
        expected[0, 0] = expected[2, 1] = expected[1, 2] = 1
        assert_allclose(parity(3).matrix, expected)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_involution(self, d):
        u = parity(d).matrix
        assert_allclose(u @ u, np.eye(d))


class TestWigner:
    def test_basis_state_origin(self):
        assert wigner(np.array([1, 0, 0]), (0, 0)) == pytest.approx(1 / 3)

    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_sums_to_one(self, d, rng):
        psi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        psi /= np.linalg.norm(psi)
        assert wigner_function(psi).sum() == pytest.approx(1.0, abs=1e-10)

    def test_even_dimension_rejected(self):
        with pytest.raises(UnsupportedParityError):
            wigner(np.array([1, 0, 0, 0]), (0, 0))

    def test_non_unit_state_rejected(self):
        with pytest.raises(InvalidStateError):
            wigner(np.array([1.0, 1.0, 0.0]), (0, 0))
