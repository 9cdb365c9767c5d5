import numpy as np
from django.test import SimpleTestCase

from cat_correlations import numerics
from cat_correlations.exceptions import DomainError, PreconditionError

BELL = np.zeros((4, 4), dtype=complex)
BELL[0, 0] = BELL[0, 3] = BELL[3, 0] = BELL[3, 3] = 0.5


def random_hermitian(seed, size=4):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    return a + a.conj().T


class BinaryEntropyTests(SimpleTestCase):
    def test_known_values(self):
        self.assertAlmostEqual(numerics.binary_entropy(0.9), 0.468996, places=6)
        self.assertEqual(numerics.binary_entropy(0.0), 0.0)
        self.assertEqual(numerics.binary_entropy(1.0), 0.0)
        self.assertAlmostEqual(numerics.binary_entropy(0.5), 1.0, places=15)

    def test_symmetric_bitwise(self):
        # k/1024 and 1 - k/1024 are both exact
        for k in range(1025):
            x = k / 1024
            self.assertEqual(numerics.binary_entropy(x), numerics.binary_entropy(1.0 - x))

    def test_symmetric(self):
        for x in np.linspace(0.0, 1.0, 1001):
            self.assertAlmostEqual(numerics.binary_entropy(x), numerics.binary_entropy(1.0 - x), places=14)

    def test_outside_unit_interval(self):
        with self.assertRaises(DomainError):
            numerics.binary_entropy(1.1)
        with self.assertRaises(DomainError):
            numerics.binary_entropy(-0.01)

    def test_roundoff_outside_interval_is_clamped(self):
        self.assertEqual(numerics.binary_entropy(1.0 + 1e-13), 0.0)


class SpectrumTests(SimpleTestCase):
    def test_matches_numpy_on_random_matrices(self):
        for seed in range(5):
            matrix = random_hermitian(seed)
            expected = np.sort(np.linalg.eigvalsh(matrix))[::-1]
            got = numerics.hermitian_eigen(matrix).values
            np.testing.assert_allclose(got, expected, atol=1e-10)

    def test_reconstruct(self):
        matrix = random_hermitian(11)
        spectrum = numerics.hermitian_eigen(matrix, vectors=True)
        np.testing.assert_allclose(spectrum.reconstruct(), matrix, atol=1e-10)

    def test_reconstruct_without_vectors(self):
        with self.assertRaises(PreconditionError):
            numerics.hermitian_eigen(np.eye(2)).reconstruct()

    def test_rejects_non_hermitian_and_wrong_size(self):
        with self.assertRaises(PreconditionError):
            numerics.hermitian_eigen(np.array([[0, 1], [0, 0]]))
        with self.assertRaises(PreconditionError):
            numerics.hermitian_eigen(np.eye(3))

    def test_symmetric_eigen3(self):
        matrix = np.diag([1.0, 3.0, 2.0])
        np.testing.assert_allclose(numerics.symmetric_eigen3(matrix).values, [3.0, 2.0, 1.0])

    def test_clamp_spectrum(self):
        np.testing.assert_array_equal(numerics.clamp_spectrum([0.5, -1e-12]), [0.5, 0.0])
        with self.assertRaises(PreconditionError):
            numerics.clamp_spectrum([1.0, -1e-6])


class DensityMatrixTests(SimpleTestCase):
    def test_von_neumann_entropy(self):
        self.assertAlmostEqual(numerics.von_neumann_entropy(np.eye(4) / 4), 2.0, places=12)
        self.assertAlmostEqual(numerics.von_neumann_entropy(BELL), 0.0, places=12)

    def test_von_neumann_entropy_is_unitarily_invariant(self):
        rng = np.random.default_rng(7)
        for size in (2, 4):
            a = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
            rho = a @ a.conj().T
            rho /= np.trace(rho).real
            before = numerics.von_neumann_entropy(rho)
            for _ in range(5):
                u, _r = np.linalg.qr(rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size)))
                rotated = u @ rho @ u.conj().T
                rotated = 0.5 * (rotated + rotated.conj().T)
                self.assertAlmostEqual(numerics.von_neumann_entropy(rotated), before, places=10)

    def test_validation(self):
        with self.assertRaises(PreconditionError):
            numerics.validate_density_matrix(np.eye(4) / 2)
        with self.assertRaises(PreconditionError):
            numerics.validate_density_matrix(np.diag([1.5, -0.5]))
        with self.assertRaises(PreconditionError):
            numerics.validate_density_matrix(np.eye(3) / 3)

    def test_partial_trace_of_product_state(self):
        first = np.array([[0.7, 0.1], [0.1, 0.3]], dtype=complex)
        second = np.array([[0.4, 0.2j], [-0.2j, 0.6]], dtype=complex)
        joint = np.kron(first, second)
        np.testing.assert_allclose(numerics.partial_trace(joint, numerics.Subsystem.SECOND), first)
        np.testing.assert_allclose(numerics.partial_trace(joint, 'first'), second)

    def test_partial_trace_of_bell_state_is_maximally_mixed(self):
        np.testing.assert_allclose(numerics.partial_trace(BELL, 'second'), np.eye(2) / 2)


class MeasurementTests(SimpleTestCase):
    def test_bell_state_leaves_pure_conditionals(self):
        for direction in ([0, 0, 1], [1, 0, 0]):
            self.assertAlmostEqual(numerics.conditional_entropy(BELL, direction), 0.0, places=10)

    def test_maximally_mixed_state(self):
        self.assertAlmostEqual(
            numerics.conditional_entropy(np.eye(4) / 4, [0, 1, 0]), 1.0, places=12,
        )

    def test_zero_probability_branch_is_flagged(self):
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = 1.0
        outcome = numerics.measurement_update(rho, [0, 0, 1])
        self.assertEqual(outcome.degenerate, (False, True))
        self.assertEqual(outcome.probabilities, (1.0, 0.0))
        np.testing.assert_allclose(outcome.states[1], np.eye(2) / 2)

    def test_direction_must_be_unit(self):
        with self.assertRaises(PreconditionError):
            numerics.measurement_update(BELL, [1, 1, 0])

    def test_spherical_direction(self):
        np.testing.assert_allclose(numerics.spherical_direction(0.0, 0.0), [0, 0, 1])
        np.testing.assert_allclose(
            numerics.spherical_direction(np.pi / 2, np.pi / 2), [0, 1, 0], atol=1e-15,
        )
