import math

import numpy as np
import pytest

from qfrac.gates import named_gate, rx
from qfrac.simulator import (
    CNOT,
    CapacityError,
    Gate1,
    ShotResult,
    StateVector,
    apply_1q,
    apply_cnot,
    circuit_unitary,
    new_state,
    prob_one,
    run,
    sample,
)

from conftest import random_unitaries

R2 = math.sqrt(2) / 2
X = named_gate("X")


def basis(n, bits):
    amps = np.zeros(2**n, dtype=complex)
    amps[int(bits, 2)] = 1
    return StateVector(n, amps)


def random_ops(rng, n, count):
    us = random_unitaries(count, seed=int(rng.integers(1 << 30)))
    ops = []
    for u in us:
        if n > 1 and rng.random() < 0.4:
            c, t = rng.choice(n, size=2, replace=False)
            ops.append(CNOT(int(c), int(t)))
        else:
            ops.append(Gate1(u, int(rng.integers(n))))
    return ops


class TestState:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_new_state(self, n):
        expected = np.zeros(2**n)
        expected[0] = 1
        np.testing.assert_array_equal(new_state(n).amplitudes, expected)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            new_state(0)
        with pytest.raises(CapacityError):
            new_state(25)

    def test_validation(self):
        with pytest.raises(ValueError, match="normalised"):
            StateVector(1, [1, 1])
        with pytest.raises(ValueError):
            StateVector(2, [1, 0])

    def test_immutable(self):
        with pytest.raises(ValueError):
            new_state(1).amplitudes[0] = 0


class TestGates:
    def test_rx_on_qubit0(self):
        theta = 0.7
        s = apply_1q(new_state(2), rx(theta), 0)
        a, b = math.cos(theta / 2), -1j * math.sin(theta / 2)
        np.testing.assert_allclose(s.amplitudes, [a, 0, b, 0], atol=1e-15)

    def test_identity(self, rng):
        v = rng.normal(size=8) + 1j * rng.normal(size=8)
        s = StateVector(3, v / np.linalg.norm(v))
        for q in range(3):
            np.testing.assert_allclose(apply_1q(s, np.eye(2), q).amplitudes, s.amplitudes, atol=1e-15)

    def test_x_on_qubit1_is_big_endian(self):
        np.testing.assert_array_equal(apply_1q(new_state(2), X, 1).amplitudes, basis(2, "01").amplitudes)

    def test_index_errors(self):
        with pytest.raises(IndexError):
            apply_1q(new_state(2), X, 2)
        with pytest.raises(ValueError):
            apply_cnot(new_state(2), 1, 1)
        with pytest.raises(ValueError):
            CNOT(0, 0)


class TestCnot:
    def test_truth_table(self):
        for bits, out in [("00", "00"), ("01", "01"), ("10", "11"), ("11", "10")]:
            np.testing.assert_array_equal(apply_cnot(basis(2, bits), 0, 1).amplitudes, basis(2, out).amplitudes)

    def test_reversed_control(self):
        np.testing.assert_array_equal(apply_cnot(basis(2, "01"), 1, 0).amplitudes, basis(2, "11").amplitudes)

    def test_worked_example(self):
        a, b = 0.6, 0.8j
        s = StateVector(3, [a, 0, 0, 0, b, 0, 0, 0])
        np.testing.assert_allclose(apply_cnot(s, 0, 2).amplitudes, [a, 0, 0, 0, 0, b, 0, 0])

    def test_involution_exact(self, rng):
        v = rng.normal(size=16) + 1j * rng.normal(size=16)
        s = StateVector(4, v / np.linalg.norm(v))
        for c in range(4):
            for t in range(4):
                if c != t:
                    twice = apply_cnot(apply_cnot(s, c, t), c, t)
                    np.testing.assert_array_equal(twice.amplitudes, s.amplitudes)


class TestCircuitUnitary:
    def test_empty_is_identity(self):
        np.testing.assert_array_equal(circuit_unitary([], 3), np.eye(8))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            circuit_unitary([], 11)

    def test_cnot_matrix(self):
        expected = np.eye(4)[[0, 1, 3, 2]]
        np.testing.assert_array_equal(circuit_unitary([CNOT(0, 1)], 2), expected)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_matches_statevector(self, rng, n):
        for _ in range(5):
            ops = random_ops(rng, n, 12)
            u = circuit_unitary(ops, n)
            np.testing.assert_allclose(run(ops, n).amplitudes, u[:, 0], atol=1e-10)

    def test_norm_preserved(self, rng):
        for n in (2, 5, 8):
            s = run(random_ops(rng, n, 40), n)
            assert abs(np.sum(np.abs(s.amplitudes) ** 2) - 1) <= 1e-10


class TestProbabilities:
    def test_zero_state(self):
        assert prob_one(new_state(1), 0) == 0

    def test_worked_example_state(self):
        a, b, c, d = 0.6, -0.8j, math.cos(0.3), -1j * math.sin(0.3)
        s = StateVector(3, [a * c, 0, 0, a * d, 0, b * c, b * d, 0])
        assert prob_one(s, 2) == pytest.approx(abs(a * d) ** 2 + abs(b * c) ** 2, abs=1e-15)

    def test_bell(self):
        s = StateVector(2, [R2, 0, 0, R2])
        assert prob_one(s, 1) == pytest.approx(0.5)
        assert prob_one(s, 0) == pytest.approx(0.5)

    def test_global_phase_invisible(self, rng):
        for _ in range(20):
            ops = random_ops(rng, 3, 10)
            phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
            shifted = [Gate1(phase * op.matrix, op.target) if isinstance(op, Gate1) else op for op in ops]
            s, t = run(ops, 3), run(shifted, 3)
            for q in range(3):
                assert abs(prob_one(s, q) - prob_one(t, q)) <= 1e-12


class TestSampling:
    def test_certain_outcomes(self):
        r = sample(new_state(1), 0, 500, seed=1)
        assert r.counts == {"0": 500, "1": 0}
        r = sample(basis(1, "1"), 0, 500, seed=1)
        assert r.counts == {"0": 0, "1": 500}

    def test_half(self):
        s = StateVector(1, [R2, R2])
        r = sample(s, 0, 10_000, seed=7)
        assert abs(r.frequency("1") - 0.5) <= 4 * math.sqrt(0.25 / 10_000)

    def test_deterministic(self):
        s = StateVector(1, [math.cos(0.4), math.sin(0.4)])
        assert sample(s, 0, 1000, seed=3) == sample(s, 0, 1000, seed=3)
        assert sample(s, 0, 1000, seed=3) != sample(s, 0, 1000, seed=4)

    def test_result_fields(self):
        r = sample(new_state(2), 1, 10, seed=5)
        assert isinstance(r, ShotResult)
        assert sum(r.counts.values()) == r.shots == 10
        assert r.seed == 5 and r.rng == "numpy.PCG64"

    def test_rejects_no_shots(self):
        with pytest.raises(ValueError):
            sample(new_state(1), 0, 0, seed=1)
