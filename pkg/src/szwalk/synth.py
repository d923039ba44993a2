"""Compilation of structured chains into gate-level walk circuits.

Every synthesizer targets the same decomposition: the walk operator splits
into a register swap and a reflection, and the reflection is diagonalized
per column subset by (a) transforms mapping each column state onto the
subset's reference state and (b) a preparation routine mapping a
computational basis state onto that reference.  The diagonalized core is a
multi-controlled phase flip.

Sign convention used throughout: the multi-controlled flips realize
``I - 2|b><b|`` on their patterns, so a single ``GPHASE(-1)`` is appended
per assembled walk circuit (not per subset segment) to recover the
reflection ``2 Pi - I`` exactly.  With one phase per segment the overall
sign comes out wrong whenever the number of subsets is even.

Correctness of each synthesizer is defined by ``verify``: exact agreement
with the dense oracle on the valid subspace, and no leakage out of it.
"""

import math
from dataclasses import dataclass, asdict

import numpy as np

from .gates import (Circuit, compose, dagger, gphase, h, on_qubits, ry, swap,
                    with_controls, x, z, zp)
from .markov import directed_example8, google_matrix, validate, wheel_graph
from .oracle import column_state, embed, valid_indices, walk_operator
from .simulator import apply, basis_state, unitary_of

STATE_PREP_NORM_TOL = 1e-10
PARTITION_CHECK_TOL = 1e-10


# ---------------------------------------------------------------------------
# Modular shifts

def _increment_gates(qubits, controls):
    """|v> -> |v+1 mod 2^len(qubits)> on the listed qubits (first = MSB)."""
    gates = []
    for t in range(len(qubits)):
        ctrl = tuple((qubits[s], 1) for s in range(t + 1, len(qubits))) + tuple(controls)
        gates.append(x(qubits[t], ctrl))
    return gates


def shift_circuit(n: int, amount: int, direction: str = "left", controls=(),
                  width: int | None = None, offset: int = 0) -> Circuit:
    """Modular shift |j> -> |j -/+ amount mod 2^n> (left = subtract).

    Acts on the n qubits starting at ``offset``; ``controls`` are extra
    conditions applied to every gate.  The default width is just large
    enough for the register and controls.
    """
    if n < 1:
        raise ValueError("register needs at least one qubit")
    if amount < 0:
        raise ValueError("shift amount must be nonnegative")
    if direction not in ("left", "right"):
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    controls = tuple((int(q), int(p)) for q, p in controls)
    if width is None:
        width = max([offset + n] + [q + 1 for q, _ in controls])
    register = [offset + k for k in range(n)]
    gates = []
    amount %= 2 ** n
    for k in range(n):
        if (amount >> k) & 1:
            # adding 2^k increments the subregister above bit k
            gates.extend(_increment_gates(register[:n - k], controls))
    if direction == "left":
        gates.reverse()
    return Circuit(width, gates)


def controlled_shift_transform(n: int, offset_x: int, direction: str = "left") -> Circuit:
    """The block transform ``sum_i |i><i| (x) L^(i*x)`` on 2n qubits.

    For each bit of register 1, register 2 is shifted by the corresponding
    multiple of ``offset_x`` under that bit's control ('right' gives R
    powers instead).
    """
    if n < 1:
        raise ValueError("register needs at least one qubit")
    gates = []
    for k in range(n):
        amount = (offset_x * 2 ** (n - 1 - k)) % 2 ** n
        if amount == 0:
            continue
        piece = shift_circuit(n, amount, direction, controls=[(k, 1)],
                              width=2 * n, offset=n)
        gates.extend(piece.gates)
    return Circuit(2 * n, gates)


# ---------------------------------------------------------------------------
# State preparation

def state_prep(target: np.ndarray, basis_b: int) -> Circuit:
    """Preparation routine K_b with ``K_b |basis_b> = target``.

    Probability-bisection construction: X gates map |b> to |0...0>, then a
    tree of prefix-controlled RY rotations splits the probability mass
    level by level.  The target must be a nonnegative unit vector of
    length 2^n; the preparation is then exact to rounding.
    """
    target = np.asarray(target, dtype=float)
    n = max(int(target.size - 1).bit_length(), 0)
    if target.size != 2 ** n:
        raise ValueError(f"target length {target.size} is not a power of two")
    if (target < 0).any():
        raise ValueError("target amplitudes must be nonnegative")
    if abs(np.linalg.norm(target) - 1.0) > STATE_PREP_NORM_TOL:
        raise ValueError(f"target norm {np.linalg.norm(target):.12f} is not 1")
    if not 0 <= basis_b < 2 ** n:
        raise ValueError(f"basis state {basis_b} out of range")

    levels = [target ** 2]
    for _ in range(n):
        levels.append(levels[-1].reshape(-1, 2).sum(axis=1))
    levels.reverse()  # levels[k] has 2^k prefix masses

    gates = [x(q) for q in range(n) if (basis_b >> (n - 1 - q)) & 1]
    for k in range(n):
        for prefix in range(2 ** k):
            m0 = levels[k + 1][2 * prefix]
            m1 = levels[k + 1][2 * prefix + 1]
            if levels[k][prefix] == 0.0 or m1 == 0.0:
                continue
            theta = math.atan2(math.sqrt(m1), math.sqrt(m0))
            ctrl = tuple((s, (prefix >> (k - 1 - s)) & 1) for s in range(k))
            gates.append(ry(k, theta, ctrl))
    return Circuit(n, gates)


def kb_cycle(n: int) -> tuple[Circuit, int]:
    """Preparation for the cycle-graph reference column.

    Maps |N/2 - 1> onto {0, 1/sqrt(2), 0, ..., 0, 1/sqrt(2)}: a Hadamard on
    the top qubit followed by a cascade of anti-controlled NOTs.
    """
    if n < 2:
        raise ValueError("cycle preparation needs at least 2 qubits")
    b = 2 ** (n - 1) - 1
    gates = [h(0)] + [x(q, [(0, 0)]) for q in range(1, n - 1)]
    return Circuit(n, gates), b


def kb_complete(n: int) -> tuple[Circuit, int]:
    """Preparation for the complete-graph reference column.

    Maps |1> onto {0, sqrt(1/(N-1)), ..., sqrt(1/(N-1))}.  Level i rotates
    mass off the all-zero prefix with cos(theta_i) =
    sqrt((2^(n-i) - 1) / (2^(n-i+1) - 1)), then finishes the peeled branch
    into a uniform block with an X and Hadamards.  (The square root in the
    angle is required for the prepared state to match the target column;
    see the angle-convention note in the README.)
    """
    if n < 1:
        raise ValueError("register needs at least one qubit")
    gates = []
    for i in range(1, n):
        t = i - 1
        theta = math.acos(math.sqrt((2 ** (n - i) - 1) / (2 ** (n - i + 1) - 1)))
        prefix0 = tuple((s, 0) for s in range(t))
        branch1 = prefix0 + ((t, 1),)
        gates.append(ry(t, theta, prefix0))
        gates.append(x(n - 1, branch1))
        gates.extend(h(q, branch1) for q in range(t + 1, n))
    return Circuit(n, gates), 1


# ---------------------------------------------------------------------------
# Single-reference assembly

@dataclass(frozen=True)
class SingleReference:
    """A chain's diagonalizing data: U = (I (x) K_b^dag) T on 2n qubits.

    ``U`` maps every projector state |i>|phi_i> to |i>|basis_b>, which is
    everything a walk assembly or a tensor composition needs to know.
    """

    n_qubits: int
    diagonalizer: Circuit
    basis_b: int


def _pattern_flip(qubits, value, extra_controls=()):
    """Gate applying -1 to the basis state ``value`` of the listed qubits."""
    extra = tuple(extra_controls)
    if not qubits:
        return gphase(-1, extra)
    bits = [(value >> (len(qubits) - 1 - k)) & 1 for k in range(len(qubits))]
    ctrl = tuple((qubits[k], bits[k]) for k in range(len(qubits) - 1)) + extra
    return (z if bits[-1] else zp)(qubits[-1], ctrl)


def single_reference_parts(n: int, t_transform: Circuit, kb: Circuit,
                           basis_b: int) -> SingleReference:
    if t_transform.width != 2 * n:
        raise ValueError(f"transform must act on {2 * n} qubits, got {t_transform.width}")
    if kb.width != n:
        raise ValueError(f"preparation must act on {n} qubit(s), got {kb.width}")
    reg2 = list(range(n, 2 * n))
    diag = compose(t_transform, on_qubits(dagger(kb), reg2, 2 * n))
    return SingleReference(n, diag, basis_b)


def synth_from_parts(parts: SingleReference) -> Circuit:
    """Assemble U -> D -> U^dag -> S from single-reference parts."""
    n = parts.n_qubits
    reg2 = list(range(n, 2 * n))
    gates = list(parts.diagonalizer.gates)
    gates.append(_pattern_flip(reg2, parts.basis_b))
    gates.extend(dagger(parts.diagonalizer).gates)
    gates.append(gphase(-1))
    gates.extend(swap(q, q + n) for q in range(n))
    return Circuit(2 * n, gates)


def synth_single_reference(n: int, t_transform: Circuit, kb: Circuit,
                           basis_b: int) -> Circuit:
    """Walk circuit from a block transform, preparation routine and basis state."""
    return synth_from_parts(single_reference_parts(n, t_transform, kb, basis_b))


def circulant_parts(phi0: np.ndarray, offset_x: int = 1,
                    kb: Circuit | None = None,
                    basis_b: int | None = None) -> SingleReference:
    """Parts for a chain whose column i is column 0 right-rotated i*x slots.

    Without an explicit preparation routine, K_b is built by state_prep
    from the reference column with b = 0.
    """
    phi0 = np.asarray(phi0, dtype=float)
    n = max(int(phi0.size - 1).bit_length(), 1)
    if phi0.size != 2 ** n:
        raise ValueError(f"column length {phi0.size} is not a power of two")
    if kb is None:
        basis_b = 0
        kb = state_prep(phi0, basis_b)
    elif basis_b is None:
        raise ValueError("basis_b must accompany an explicit preparation routine")
    return single_reference_parts(n, controlled_shift_transform(n, offset_x, "left"),
                                  kb, basis_b)


def cycle_parts(n: int) -> SingleReference:
    kb, b = kb_cycle(n)
    return single_reference_parts(n, controlled_shift_transform(n, 1, "left"), kb, b)


def complete_parts(n: int) -> SingleReference:
    kb, b = kb_complete(n)
    return single_reference_parts(n, controlled_shift_transform(n, 1, "left"), kb, b)


def synth_circulant(phi0: np.ndarray, offset_x: int = 1,
                    kb: Circuit | None = None,
                    basis_b: int | None = None) -> Circuit:
    return synth_from_parts(circulant_parts(phi0, offset_x, kb, basis_b))


def synth_cycle(n: int) -> Circuit:
    """Walk circuit for the cycle graph C_{2^n}."""
    return synth_from_parts(cycle_parts(n))


def synth_complete(n: int) -> Circuit:
    """Walk circuit for the complete graph K_{2^n}."""
    return synth_from_parts(complete_parts(n))


def synth_k2() -> Circuit:
    """Two-qubit walk circuit for the K_2 graph."""
    return synth_from_parts(complete_parts(1))


# ---------------------------------------------------------------------------
# Tensor composition

def tensor_parts(a: SingleReference, b: SingleReference) -> SingleReference:
    """Compose single-reference parts for P = P_1 (x) P_2.

    Factor 1's diagonalizer acts on the high qubits of both composite
    registers, factor 2's on the low qubits; the joint basis state is
    |b_1, b_2>.  The result is single-reference shaped, so compositions
    nest.
    """
    n1, n2 = a.n_qubits, b.n_qubits
    n = n1 + n2
    map1 = list(range(n1)) + list(range(n, n + n1))
    map2 = list(range(n1, n)) + list(range(n + n1, 2 * n))
    u1 = on_qubits(a.diagonalizer, map1, 2 * n)
    u2 = on_qubits(b.diagonalizer, map2, 2 * n)
    return SingleReference(n, compose(u1, u2), a.basis_b * 2 ** n2 + b.basis_b)


def synth_tensor(a: SingleReference, b: SingleReference) -> Circuit:
    """Walk circuit for the Kronecker product of two synthesized chains."""
    return synth_from_parts(tensor_parts(a, b))


def synth_crown(n: int) -> Circuit:
    """Walk circuit for the crown graph S_{2^n}^0 = K_{2^n} (x) K_2."""
    if n < 2:
        raise ValueError("crown synthesis needs at least 2 qubits for the K_N factor")
    return synth_tensor(complete_parts(n), complete_parts(1))


# ---------------------------------------------------------------------------
# Partitioned (multi-reference) assembly

@dataclass(frozen=True)
class Partition:
    """Disjoint subsets covering {0..N-1} with a reference column and basis
    state per subset."""

    subsets: tuple
    references: tuple
    basis: tuple

    def __post_init__(self):
        object.__setattr__(self, "subsets", tuple(tuple(sorted(s)) for s in self.subsets))
        object.__setattr__(self, "references", tuple(self.references))
        object.__setattr__(self, "basis", tuple(self.basis))
        if not (len(self.subsets) == len(self.references) == len(self.basis)):
            raise ValueError("subsets, references and basis must align")
        seen = set()
        for sub, r in zip(self.subsets, self.references):
            if not sub:
                raise ValueError("empty subset")
            if seen & set(sub):
                raise ValueError("subsets must be disjoint")
            seen |= set(sub)
            if r not in sub:
                raise ValueError(f"reference {r} not in its subset {sub}")
        if seen != set(range(len(seen))) or min(seen) != 0:
            raise ValueError("subsets must cover {0..N-1} exactly")

    @property
    def n_states(self) -> int:
        return sum(len(s) for s in self.subsets)


def subset_patterns(subset, n_qubits: int):
    """Register-1 control patterns selecting exactly the given vertices.

    A subset equal to all completions of a fixed bit pattern yields one
    pattern; anything else falls back to one full pattern per member.
    """
    members = sorted(set(subset))
    base = members[0]
    varying = 0
    for m in members:
        varying |= m ^ base
    if len(members) == 2 ** bin(varying).count("1"):
        pattern = tuple((q, (base >> (n_qubits - 1 - q)) & 1)
                        for q in range(n_qubits)
                        if not (varying >> (n_qubits - 1 - q)) & 1)
        return [pattern]
    return [tuple((q, (m >> (n_qubits - 1 - q)) & 1) for q in range(n_qubits))
            for m in members]


@dataclass(frozen=True)
class _Segment:
    patterns: tuple     # register-1 control patterns covering the subset
    transform: Circuit  # T_x on 2n qubits, controls included (may be empty)
    prep: Circuit       # K_b on the n register-2 qubits, uncontrolled
    basis_b: int


def _assemble(n: int, segments) -> Circuit:
    reg2 = list(range(n, 2 * n))
    gates = []
    for seg in segments:
        kb = on_qubits(seg.prep, reg2, 2 * n)
        kb_dag = dagger(kb)
        gates.extend(seg.transform.gates)
        for pat in seg.patterns:
            gates.extend(with_controls(kb_dag, pat).gates)
        for pat in seg.patterns:
            gates.append(_pattern_flip(reg2, seg.basis_b, pat))
        for pat in seg.patterns:
            gates.extend(with_controls(kb, pat).gates)
        gates.extend(dagger(seg.transform).gates)
    gates.append(gphase(-1))
    gates.extend(swap(q, q + n) for q in range(n))
    return Circuit(2 * n, gates)


def synth_partitioned(p: np.ndarray, partition: Partition, transforms,
                      preps, check_tol: float = PARTITION_CHECK_TOL) -> Circuit:
    """General multi-reference synthesis.

    ``transforms`` maps ``(x, y)`` (subset index, member vertex) to a
    width-n circuit realizing T_{x,y} on register 2; missing entries mean
    identity.  ``preps`` lists one width-n preparation circuit per subset.
    Both families are checked numerically against the column states before
    assembly: T_{x,y}|phi_y> must equal |phi_r_x> and K|b_x> must equal
    |phi_r_x>, each within ``check_tol``.
    """
    p = np.asarray(p, dtype=float)
    n_states = p.shape[0]
    report = validate(p)
    if not report.ok:
        raise ValueError(f"invalid transition matrix: column deviation "
                         f"{report.max_column_deviation:.3e}, min entry {report.min_entry:.3e}")
    if partition.n_states != n_states:
        raise ValueError(f"partition covers {partition.n_states} states, matrix has {n_states}")
    n = max((n_states - 1).bit_length(), 1)
    dim = 2 ** n

    def embedded_column(i):
        col = np.zeros(dim)
        col[:n_states] = column_state(p, i)
        return col

    segments = []
    for xi, (sub, ref, b) in enumerate(zip(partition.subsets, partition.references,
                                           partition.basis)):
        if not 0 <= b < dim:
            raise ValueError(f"basis state {b} out of range for {n} qubit(s)")
        phi_ref = embedded_column(ref)
        gates = []
        for y in sub:
            t_xy = transforms.get((xi, y))
            moved = embedded_column(y) if t_xy is None else apply(t_xy, embedded_column(y))
            err = np.abs(moved - phi_ref).max()
            if err > check_tol:
                raise ValueError(f"transform check failed for (x={xi}, y={y}): "
                                 f"deviation {err:.3e}")
            if t_xy is not None and t_xy.gates:
                member_pattern = tuple((q, (y >> (n - 1 - q)) & 1) for q in range(n))
                lifted = with_controls(on_qubits(t_xy, list(range(n, 2 * n)), 2 * n),
                                       member_pattern)
                gates.extend(lifted.gates)
        prep = preps[xi]
        prepared = apply(prep, basis_state(n, b))
        err = np.abs(prepared - phi_ref).max()
        if err > check_tol:
            raise ValueError(f"preparation check failed for subset {xi}: deviation {err:.3e}")
        segments.append(_Segment(tuple(subset_patterns(sub, n)), Circuit(2 * n, gates),
                                 prep, b))
    return _assemble(n, segments)


# ---------------------------------------------------------------------------
# Specific partitioned families

def synth_bipartite(n1: int, n2: int) -> Circuit:
    """Walk circuit for the complete bipartite graph K_{2^n1, 2^n2}.

    Natural two-subset partition; all transforms are identity because the
    columns within each part coincide.  Register width is n1 + 1.
    """
    if n1 < n2 or n2 < 0:
        raise ValueError(f"need n1 >= n2 >= 0, got {n1}, {n2}")
    big_n1 = 2 ** n1
    n = n1 + 1
    pat1 = ((0, 0),)
    pat2 = ((0, 1),) + tuple((1 + k, 0) for k in range(n1 - n2))
    kb1 = Circuit(n, [h(q) for q in range(n - n2, n)])
    kb2 = Circuit(n, [h(q) for q in range(1, n)])
    empty = Circuit(2 * n)
    return _assemble(n, [
        _Segment((pat1,), empty, kb1, big_n1),
        _Segment((pat2,), empty, kb2, 0),
    ])


def _cycle_pair_gates(qubits, controls):
    """|0...0> -> (|0..01> + |1..11>)/sqrt(2): the two cycle neighbors of
    vertex 0 within a block of 2^len(qubits) states."""
    first, last = qubits[0], qubits[-1]
    controls = tuple(controls)
    gates = [x(last, controls), h(first, controls)]
    gates.extend(x(q, controls + ((first, 1),)) for q in qubits[1:-1])
    return gates


def synth_win_cycles(n1: int, n2: int) -> Circuit:
    """Walk circuit for two cycles C_{2^n1}, C_{2^n2} joined completely.

    Both subsets use restricted cyclic shifts: register 2 is decremented
    modulo the block size under controls keeping the complementary block
    and the padding states fixed.
    """
    if n1 < n2 or n2 < 2:
        raise ValueError(f"need n1 >= n2 >= 2, got {n1}, {n2}")
    big_n1, big_n2 = 2 ** n1, 2 ** n2
    n = n1 + 1
    w = 2 * n
    pat1 = ((0, 0),)
    pat2 = ((0, 1),) + tuple((1 + k, 0) for k in range(n1 - n2))
    block2 = ((n, 1),) + tuple((n + 1 + k, 0) for k in range(n1 - n2))

    t1_gates = []
    for k in range(1, n):
        piece = shift_circuit(n1, 2 ** (n - 1 - k), "left",
                              controls=[(0, 0), (k, 1), (n, 0)], width=w, offset=n + 1)
        t1_gates.extend(piece.gates)
    t2_gates = []
    for k in range(n2):
        piece = shift_circuit(n2, 2 ** (n2 - 1 - k), "left",
                              controls=pat2 + ((n - n2 + k, 1),) + block2,
                              width=w, offset=2 * n - n2)
        t2_gates.extend(piece.gates)

    theta1 = math.acos(math.sqrt(2.0 / (2.0 + big_n2)))
    kb1_gates = [ry(0, theta1)]
    kb1_gates += _cycle_pair_gates(list(range(1, n)), [(0, 0)])
    kb1_gates += [h(q, [(0, 1)]) for q in range(n - n2, n)]

    theta2 = math.acos(math.sqrt(big_n1 / (2.0 + big_n1)))
    kb2_gates = [ry(0, theta2)]
    kb2_gates += [h(q, [(0, 0)]) for q in range(1, n)]
    kb2_gates += _cycle_pair_gates(list(range(n - n2, n)), [(0, 1)])

    return _assemble(n, [
        _Segment((pat1,), Circuit(w, t1_gates), Circuit(n, kb1_gates), 0),
        _Segment((pat2,), Circuit(w, t2_gates), Circuit(n, kb2_gates), 0),
    ])


def synth_wheel(m: int, directed: bool = False, alpha: float = 0.85) -> Circuit:
    """Walk circuit for the Google matrix of the wheel W_{2^m} (or W'_{2^m}).

    The chain has N+1 = 2^m + 1 vertices, so registers carry m+1 qubits and
    correctness is defined on the valid subspace.  Outer vertices share one
    reference column reached by restricted cyclic shifts; the hub is its
    own subset with a one-rotation preparation.
    """
    if m < 2:
        raise ValueError(f"wheel synthesis needs m >= 2, got {m}")
    big_n = 2 ** m
    g = google_matrix(wheel_graph(big_n, directed), alpha)
    n = m + 1
    w = 2 * n
    dim = 2 ** n

    t1_gates = []
    for k in range(1, n):
        piece = shift_circuit(m, 2 ** (n - 1 - k), "left",
                              controls=[(0, 0), (k, 1), (n, 0)], width=w, offset=n + 1)
        t1_gates.extend(piece.gates)

    phi0 = np.zeros(dim)
    phi0[:big_n + 1] = column_state(g, 0)
    kb1 = state_prep(phi0, 0)

    theta = math.acos(math.sqrt(1.0 - g[big_n, big_n]))
    kb2 = Circuit(n, [ry(0, theta)] + [h(q, [(0, 0)]) for q in range(1, n)])

    pat1 = ((0, 0),)
    pat2 = ((0, 1),) + tuple((q, 0) for q in range(1, n))
    return _assemble(n, [
        _Segment((pat1,), Circuit(w, t1_gates), kb1, 0),
        _Segment((pat2,), Circuit(w), kb2, 0),
    ])


def synth_directed8(alpha: float = 0.85) -> Circuit:
    """Walk circuit for the Google matrix of the 8-vertex directed example.

    Three subsets: the 4-cycle (restricted shifts modulo 4), the pair
    {4, 5} (one full shift by 2), and {6, 7} whose columns already agree.
    """
    g = google_matrix(directed_example8(), alpha)
    n = 3
    w = 2 * n

    t1_gates = []
    for k, amount in ((1, 2), (2, 1)):
        piece = shift_circuit(2, amount, "left", controls=[(0, 0), (k, 1), (n, 0)],
                              width=w, offset=n + 1)
        t1_gates.extend(piece.gates)
    t2_gates = shift_circuit(n, 2, "left", controls=[(0, 1), (1, 0), (2, 1)],
                             width=w, offset=n).gates

    segments = [
        _Segment((((0, 0),),), Circuit(w, t1_gates), state_prep(column_state(g, 0), 0), 0),
        _Segment((((0, 1), (1, 0)),), Circuit(w, t2_gates), state_prep(column_state(g, 4), 0), 0),
        _Segment((((0, 1), (1, 1)),), Circuit(w), state_prep(column_state(g, 6), 0), 0),
    ]
    return _assemble(n, segments)


# ---------------------------------------------------------------------------
# Verification against the dense oracle

@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a circuit-versus-oracle comparison."""

    max_deviation: float
    leakage: float
    tolerance: float
    passed: bool

    def as_dict(self) -> dict:
        return asdict(self)


def verify(circuit: Circuit, p: np.ndarray, tolerance: float = 1e-10) -> VerifyReport:
    """Compare a walk circuit against the embedded dense oracle.

    The comparison runs over valid columns only: ``max_deviation`` is the
    largest entrywise difference on the valid block, ``leakage`` the
    largest amplitude a valid column acquires outside the valid subspace.
    """
    p = np.asarray(p, dtype=float)
    n_states = p.shape[0]
    n = max((n_states - 1).bit_length(), 1)
    if circuit.width != 2 * n:
        raise ValueError(f"circuit width {circuit.width} does not match "
                         f"2*ceil(log2({n_states})) = {2 * n}")
    u = unitary_of(circuit)
    target = embed(walk_operator(p), n)
    valid = valid_indices(n_states, n)
    rest = np.setdiff1d(np.arange(4 ** n), valid)
    dev = float(np.abs(u[np.ix_(valid, valid)] - target[np.ix_(valid, valid)]).max())
    leak = float(np.abs(u[np.ix_(rest, valid)]).max()) if rest.size else 0.0
    return VerifyReport(max_deviation=dev, leakage=leak, tolerance=tolerance,
                        passed=dev <= tolerance and leak <= tolerance)
