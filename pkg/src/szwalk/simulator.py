"""Dense statevector execution of circuits, without materializing gate matrices.

States are complex vectors of length ``2**width`` indexed with qubit 0 as
the most significant bit.  ``apply`` is purely functional (the caller's
vector is never mutated); internally gates update amplitude slices in
place.  ``unitary_of`` runs the same kernel on an identity matrix treated
as a batch of basis-state columns.
"""

import math

import numpy as np

from .gates import Circuit

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

UNITARY_WIDTH_GUARD = 12


def basis_state(width: int, index: int) -> np.ndarray:
    """Computational basis state |index> on ``width`` qubits."""
    if not 0 <= index < 2 ** width:
        raise ValueError(f"basis index {index} out of range for width {width}")
    s = np.zeros(2 ** width, dtype=complex)
    s[index] = 1.0
    return s


def _apply_gate(t: np.ndarray, g) -> None:
    """Apply one gate to tensor ``t`` of shape (2,)*width (+ batch axes)."""
    base = [slice(None)] * t.ndim
    for q, p in g.controls:
        base[q] = p
    kind = g.kind
    if kind == "GPHASE":
        if g.sign == -1:
            t[tuple(base)] *= -1.0
        return
    if kind == "SWAP":
        qa, qb = g.qubits
        i01, i10 = list(base), list(base)
        i01[qa], i01[qb] = 0, 1
        i10[qa], i10[qb] = 1, 0
        i01, i10 = tuple(i01), tuple(i10)
        tmp = t[i01].copy()
        t[i01] = t[i10]
        t[i10] = tmp
        return
    tq = g.qubits[0]
    i0, i1 = list(base), list(base)
    i0[tq], i1[tq] = 0, 1
    i0, i1 = tuple(i0), tuple(i1)
    if kind == "X":
        tmp = t[i0].copy()
        t[i0] = t[i1]
        t[i1] = tmp
    elif kind == "H":
        a0, a1 = t[i0].copy(), t[i1]
        t[i0] = (a0 + a1) * _INV_SQRT2
        t[i1] = (a0 - a1) * _INV_SQRT2
    elif kind == "RY":
        c, s = math.cos(g.angle), math.sin(g.angle)
        a0, a1 = t[i0].copy(), t[i1]
        t[i0] = c * a0 - s * a1
        t[i1] = s * a0 + c * a1
    elif kind == "Z":
        t[i1] *= -1.0
    elif kind == "ZP":
        t[i0] *= -1.0
    else:  # pragma: no cover - Gate constructor rejects unknown kinds
        raise ValueError(f"unknown gate kind {kind}")


def _run(circuit: Circuit, array: np.ndarray) -> np.ndarray:
    t = array.reshape((2,) * circuit.width + array.shape[1:])
    for g in circuit.gates:
        _apply_gate(t, g)
    return array


def apply(circuit: Circuit, state: np.ndarray) -> np.ndarray:
    """Return ``unitary(circuit) @ state``, computed gate by gate."""
    state = np.asarray(state)
    if state.shape != (2 ** circuit.width,):
        raise ValueError(f"state length {state.shape} does not match width {circuit.width}")
    return _run(circuit, state.astype(complex, copy=True))


def unitary_of(circuit: Circuit) -> np.ndarray:
    """Full unitary matrix of a circuit; column k is ``apply(c, |k>)``."""
    if circuit.width > UNITARY_WIDTH_GUARD:
        raise ValueError(f"unitary extraction limited to width {UNITARY_WIDTH_GUARD}, "
                         f"got {circuit.width}")
    dim = 2 ** circuit.width
    return _run(circuit, np.eye(dim, dtype=complex))


def marginal_register2(state: np.ndarray, n: int | None = None) -> np.ndarray:
    """Probability of each register-2 basis state: p(j) = sum_i |a(i,j)|^2."""
    state = np.asarray(state)
    width = int(round(math.log2(state.size)))
    if 2 ** width != state.size:
        raise ValueError("state length is not a power of two")
    if n is None:
        if width % 2:
            raise ValueError("odd width; pass the register size n explicitly")
        n = width // 2
    if n > width:
        raise ValueError(f"register size {n} exceeds width {width}")
    probs = np.abs(state) ** 2
    return probs.reshape(2 ** (width - n), 2 ** n).sum(axis=0)
