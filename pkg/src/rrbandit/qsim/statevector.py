"""Dense statevector simulation for up to 20 qubits.

Basis-state index bit i is qubit i (least significant bit first). Gate
functions mutate the complex state array in place and return it; the heavy
lifting lives in _accel with a numba fast path and a numpy fallback.
"""

import math

import numpy as np

from .. import _accel

MAX_QUBITS = 20

_SQRT_HALF = 1.0 / math.sqrt(2.0)


def zero_state(n):
    if int(n) != n or not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must be in [1, {MAX_QUBITS}]")
    state = np.zeros(1 << n, dtype=np.complex128)
    state[0] = 1.0
    return state


def num_qubits(state):
    n = state.shape[0].bit_length() - 1
    if 1 << n != state.shape[0]:
        raise ValueError("state length is not a power of two")
    return n


def _check_qubit(state, qubit):
    n = num_qubits(state)
    if int(qubit) != qubit or not 0 <= qubit < n:
        raise ValueError(f"qubit index {qubit} out of range for {n} qubits")


def apply_rotation(state, qubit, axis, angle):
    """exp(-i * angle * P / 2) for the Pauli P named by axis ('x', 'y', 'z')."""
    _check_qubit(state, qubit)
    c = math.cos(0.5 * angle)
    s = math.sin(0.5 * angle)
    if axis == "x":
        m = (complex(c), complex(0.0, -s), complex(0.0, -s), complex(c))
    elif axis == "y":
        m = (complex(c), complex(-s), complex(s), complex(c))
    elif axis == "z":
        m = (complex(c, -s), 0j, 0j, complex(c, s))
    else:
        raise ValueError("axis must be 'x', 'y' or 'z'")
    return _accel.apply_1q(state, m[0], m[1], m[2], m[3], int(qubit))


def apply_hadamard(state, qubit):
    _check_qubit(state, qubit)
    h = complex(_SQRT_HALF)
    return _accel.apply_1q(state, h, h, h, -h, int(qubit))


def apply_cz(state, q1, q2):
    _check_qubit(state, q1)
    _check_qubit(state, q2)
    if q1 == q2:
        raise ValueError("controlled-Z needs two distinct qubits")
    return _accel.apply_cz(state, int(q1), int(q2))


def apply_phase(state, values, angle):
    """Diagonal phase exp(-i * angle * values[z]) per basis state z."""
    values = np.asarray(values, dtype=np.float64)
    if values.shape != state.shape:
        raise ValueError("values must have one entry per basis state")
    return _accel.apply_phase(state, values, float(angle))


def probabilities(state):
    return np.abs(state) ** 2


def norm(state):
    return float(np.sqrt(np.real(np.vdot(state, state))))


class ShotSampler:
    """Inverse-CDF bitstring sampler with a cached prefix sum.

    Built once per parameter point; each shot costs one uniform draw and a
    binary search, so repeated sampling at a fixed point stays cheap.
    """

    def __init__(self, probs):
        probs = np.asarray(probs, dtype=np.float64)
        if probs.ndim != 1 or probs.size == 0:
            raise ValueError("need a non-empty 1-d probability vector")
        if np.any(probs < 0.0):
            raise ValueError("probabilities must be non-negative")
        self._cdf = np.cumsum(probs)
        total = self._cdf[-1]
        if not 0.0 < total < np.inf:
            raise ValueError("probabilities must have positive finite mass")
        if abs(total - 1.0) > 1e-6:
            raise ValueError("probabilities are not normalized")

    def sample(self, rng, n_shots=1):
        u = rng.random(int(n_shots)) * self._cdf[-1]
        idx = np.searchsorted(self._cdf, u, side="right")
        return np.minimum(idx, self._cdf.size - 1)

    def counts(self, rng, n_shots):
        return np.bincount(self.sample(rng, n_shots), minlength=self._cdf.size)
