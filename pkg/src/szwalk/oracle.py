"""Exact dense walk operator built directly from the definitions.

This is the verification backbone: every synthesized circuit is compared
against these matrices.  For a column-stochastic P on N states the single
step operator is ``S (2 Pi - I)`` where Pi projects onto the states
``|i> (x) |phi_i>``, ``|phi_i>`` holds the square roots of column i, and S
swaps the two registers.  Everything here is ground truth only, never the
performance path, so sizes are guarded at N <= 64 (matrix dimension 4096).
"""

import math
from dataclasses import dataclass

import numpy as np

from .markov import validate

N_STATES_GUARD = 64


@dataclass(frozen=True)
class WalkOracle:
    """Dense N^2 x N^2 walk operator for an N-state chain."""

    n_states: int
    matrix: np.ndarray

    @property
    def valid_dim(self) -> int:
        return self.n_states ** 2


def column_state(p: np.ndarray, i: int) -> np.ndarray:
    """|phi_i>: entrywise square root of column i of P (unit norm)."""
    p = np.asarray(p, dtype=float)
    n = p.shape[0]
    if not 0 <= i < n:
        raise ValueError(f"column index {i} out of range for N={n}")
    return np.sqrt(p[:, i])


def swap_matrix(n: int) -> np.ndarray:
    """Register swap S with S[i*N+j, j*N+i] = 1; satisfies S @ S = I exactly."""
    s = np.zeros((n * n, n * n))
    for i in range(n):
        for j in range(n):
            s[i * n + j, j * n + i] = 1.0
    return s


def reflection(p: np.ndarray) -> np.ndarray:
    """The reflection 2 Pi - I about the span of the projector states."""
    p = np.asarray(p, dtype=float)
    n = p.shape[0]
    r = -np.eye(n * n)
    for i in range(n):
        phi = np.sqrt(p[:, i])
        block = slice(i * n, (i + 1) * n)
        r[block, block] += 2.0 * np.outer(phi, phi)
    return r


def walk_operator(p: np.ndarray) -> WalkOracle:
    """Single-step Szegedy walk operator S (2 Pi - I) as a dense matrix."""
    p = np.asarray(p, dtype=float)
    n = p.shape[0]
    if n > N_STATES_GUARD:
        raise ValueError(f"oracle limited to N <= {N_STATES_GUARD}, got {n}")
    report = validate(p)
    if not report.ok:
        raise ValueError(f"invalid transition matrix: column deviation "
                         f"{report.max_column_deviation:.3e}, min entry {report.min_entry:.3e}")
    return WalkOracle(n_states=n, matrix=swap_matrix(n) @ reflection(p))


def embed(oracle: WalkOracle, n_qubits: int) -> np.ndarray:
    """Embed the oracle on two n-qubit registers.

    Basis states |i,j> with both i, j < N carry the oracle block; any basis
    state with either index >= N is mapped to itself.  The result stays
    unitary because the oracle never leaves the valid subspace.
    """
    n = oracle.n_states
    dim_reg = 2 ** n_qubits
    if dim_reg < n:
        raise ValueError(f"register of {n_qubits} qubit(s) too small for N={n}")
    big = np.eye(dim_reg * dim_reg)
    valid = valid_indices(n, n_qubits)
    big[np.ix_(valid, valid)] = oracle.matrix
    return big


def valid_indices(n_states: int, n_qubits: int) -> np.ndarray:
    """Embedded basis indices of the valid states |i,j>, i,j < N, in (i,j) order."""
    dim_reg = 2 ** n_qubits
    i = np.repeat(np.arange(n_states), n_states)
    j = np.tile(np.arange(n_states), n_states)
    return i * dim_reg + j


def initial_superposition(p: np.ndarray, n_qubits: int | None = None) -> np.ndarray:
    """Equal superposition (1/sqrt(N)) sum_i |i> (x) |phi_i>.

    With ``n_qubits`` given, the state is embedded on two n-qubit registers
    (zero amplitude on every invalid basis state); otherwise it has native
    length N^2.
    """
    p = np.asarray(p, dtype=float)
    n = p.shape[0]
    psi = (np.sqrt(p) / math.sqrt(n)).T.reshape(n * n)
    if n_qubits is None:
        return psi
    big = np.zeros(4 ** n_qubits)
    big[valid_indices(n, n_qubits)] = psi
    return big
