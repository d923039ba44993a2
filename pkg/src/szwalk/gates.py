"""Gate-level IR for two-register walk circuits.

A circuit is an ordered sequence of gates on ``width`` qubits.  Qubit 0 is
the most significant bit, so a basis state on two n-qubit registers maps to
the integer ``i * 2**n + j`` where ``i`` is register 1 (qubits ``0..n-1``)
and ``j`` is register 2 (qubits ``n..2n-1``).  Gates are listed in time
order: the matrix of ``compose(a, b)`` is ``U_b @ U_a``.

Gate kinds:

===========  ======================================================
``X``        Pauli X
``H``        Hadamard
``RY``       real rotation [[cos t, -sin t], [sin t, cos t]]
``Z``        phase flip, -1 on |1>
``ZP``       primed phase flip, -1 on |0> (equals X Z X)
``SWAP``     exchange two qubits
``GPHASE``   global phase, sign in {+1, -1}
===========  ======================================================

Every gate may carry controls ``(qubit, polarity)`` with polarity 1
(fire on |1>) or 0 (fire on |0>).  A controlled GPHASE applies its sign
only on the control-satisfied subspace.  Multi-controlled gates are
first-class; decomposition cost is a reporting convention only (see
``gate_count``).
"""

from dataclasses import dataclass, field
import math

GATE_KINDS = ("X", "H", "RY", "Z", "ZP", "SWAP", "GPHASE")

_N_OPERANDS = {"X": 1, "H": 1, "RY": 1, "Z": 1, "ZP": 1, "SWAP": 2, "GPHASE": 0}


@dataclass(frozen=True)
class Gate:
    """One gate: a kind, operand qubits, controls and optional parameters."""

    kind: str
    qubits: tuple = ()
    controls: tuple = ()
    angle: float | None = None
    sign: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        object.__setattr__(self, "controls", tuple((int(q), int(p)) for q, p in self.controls))
        if self.angle is not None:
            object.__setattr__(self, "angle", float(self.angle))
        if self.sign is not None:
            object.__setattr__(self, "sign", int(self.sign))
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.qubits) != _N_OPERANDS[self.kind]:
            raise ValueError(f"{self.kind} takes {_N_OPERANDS[self.kind]} operand(s), got {self.qubits}")
        if self.kind == "SWAP" and self.qubits[0] == self.qubits[1]:
            raise ValueError("SWAP operands must be distinct")
        if self.kind == "RY":
            if self.angle is None or not math.isfinite(self.angle):
                raise ValueError("RY needs a finite angle")
        elif self.angle is not None:
            raise ValueError(f"{self.kind} takes no angle")
        if self.kind == "GPHASE":
            if self.sign not in (1, -1):
                raise ValueError("GPHASE sign must be +1 or -1")
        elif self.sign is not None:
            raise ValueError(f"{self.kind} takes no sign")
        cqs = [q for q, _ in self.controls]
        if len(set(cqs)) != len(cqs):
            raise ValueError(f"duplicate control qubits in {cqs}")
        if set(cqs) & set(self.qubits):
            raise ValueError("control qubits overlap gate operands")
        for q, p in self.controls:
            if p not in (0, 1):
                raise ValueError(f"control polarity must be 0 or 1, got {p}")

    def all_qubits(self):
        return self.qubits + tuple(q for q, _ in self.controls)


def x(q, controls=()):
    return Gate("X", (q,), controls)


def h(q, controls=()):
    return Gate("H", (q,), controls)


def ry(q, angle, controls=()):
    return Gate("RY", (q,), controls, angle=float(angle))


def z(q, controls=()):
    return Gate("Z", (q,), controls)


def zp(q, controls=()):
    return Gate("ZP", (q,), controls)


def swap(a, b, controls=()):
    return Gate("SWAP", (a, b), controls)


def gphase(sign=-1, controls=()):
    return Gate("GPHASE", (), controls, sign=sign)


@dataclass(frozen=True)
class Circuit:
    """Immutable gate sequence on ``width`` qubits."""

    width: int
    gates: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.width < 0:
            raise ValueError("width must be nonnegative")
        for g in self.gates:
            for q in g.all_qubits():
                if not 0 <= q < self.width:
                    raise ValueError(f"qubit {q} out of range for width {self.width}")

    def __len__(self):
        return len(self.gates)


def compose(*circuits: Circuit) -> Circuit:
    """Concatenate circuits in time order; all widths must match.

    The matrix of the result is the product of the parts' matrices in
    reverse order: ``unitary(compose(a, b)) = unitary(b) @ unitary(a)``.
    """
    if not circuits:
        raise ValueError("compose needs at least one circuit")
    w = circuits[0].width
    for c in circuits[1:]:
        if c.width != w:
            raise ValueError(f"width mismatch: {c.width} != {w}")
    gates = []
    for c in circuits:
        gates.extend(c.gates)
    return Circuit(w, gates)


def dagger(c: Circuit) -> Circuit:
    """Inverse circuit: reversed gate order, RY angles negated."""
    inv = []
    for g in reversed(c.gates):
        if g.kind == "RY":
            inv.append(Gate("RY", g.qubits, g.controls, angle=-g.angle))
        else:
            inv.append(g)
    return Circuit(c.width, inv)


def with_controls(c: Circuit, controls) -> Circuit:
    """Add the given ``(qubit, polarity)`` controls to every gate.

    Control qubits must be disjoint from every gate's operand qubits.
    An empty control list returns the circuit unchanged.
    """
    controls = tuple((int(q), int(p)) for q, p in controls)
    if not controls:
        return c
    for q, _ in controls:
        if not 0 <= q < c.width:
            raise ValueError(f"control qubit {q} out of range for width {c.width}")
    gates = []
    for g in c.gates:
        if set(q for q, _ in controls) & set(g.qubits):
            raise ValueError(f"control qubits overlap operands of {g.kind} on {g.qubits}")
        gates.append(Gate(g.kind, g.qubits, g.controls + controls, angle=g.angle, sign=g.sign))
    return Circuit(c.width, gates)


def on_qubits(c: Circuit, qubits, width: int) -> Circuit:
    """Remap a circuit onto the listed wires of a wider circuit.

    ``qubits[k]`` is the new index of the old qubit ``k``.
    """
    qubits = tuple(qubits)
    if len(qubits) != c.width:
        raise ValueError(f"need {c.width} wire(s), got {len(qubits)}")
    if len(set(qubits)) != len(qubits):
        raise ValueError("target wires must be distinct")
    gates = []
    for g in c.gates:
        gates.append(Gate(g.kind, tuple(qubits[q] for q in g.qubits),
                          tuple((qubits[q], p) for q, p in g.controls),
                          angle=g.angle, sign=g.sign))
    return Circuit(width, gates)


def gate_count(c: Circuit) -> tuple[int, int]:
    """Return ``(total gates, decomposed one-/two-qubit gate estimate)``.

    Convention: a gate with k controls costs 1 for k <= 1 and 2(k-1)+1
    for k >= 2, regardless of kind; an uncontrolled GPHASE costs 0
    (classical bookkeeping, no physical gate).
    """
    total = len(c.gates)
    est = 0
    for g in c.gates:
        k = len(g.controls)
        if g.kind == "GPHASE" and k == 0:
            continue
        est += 1 if k <= 1 else 2 * (k - 1) + 1
    return total, est


# ---------------------------------------------------------------------------
# Textual format, one gate per line:
#   KIND operands... [@q+|@q- ...] [angle=<radians>] [sign=<+1|-1>]
# preceded by a single header line carrying the format version and width.
# parse(print(c)) reproduces c exactly (floats are repr round-tripped).

_HEADER = "szwalk-circuit v1"


def to_text(c: Circuit) -> str:
    lines = [f"{_HEADER} width={c.width}"]
    for g in c.gates:
        parts = [g.kind] + [str(q) for q in g.qubits]
        parts += [f"@{q}{'+' if p else '-'}" for q, p in g.controls]
        if g.angle is not None:
            parts.append(f"angle={g.angle!r}")
        if g.sign is not None:
            parts.append(f"sign={g.sign:+d}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Circuit:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith(_HEADER):
        raise ValueError(f"missing header line {_HEADER!r}")
    try:
        width = int(lines[0].split("width=", 1)[1])
    except (IndexError, ValueError) as exc:
        raise ValueError("header must carry width=<int>") from exc
    gates = []
    for ln in lines[1:]:
        toks = ln.split()
        kind, rest = toks[0], toks[1:]
        qubits, controls, angle, sign = [], [], None, None
        for tok in rest:
            if tok.startswith("@"):
                if tok[-1] not in "+-":
                    raise ValueError(f"bad control token {tok!r}")
                controls.append((int(tok[1:-1]), 1 if tok[-1] == "+" else 0))
            elif tok.startswith("angle="):
                angle = float(tok[6:])
            elif tok.startswith("sign="):
                sign = int(tok[5:])
            else:
                qubits.append(int(tok))
        gates.append(Gate(kind, tuple(qubits), tuple(controls), angle=angle, sign=sign))
    return Circuit(width, gates)


def to_openqasm(c: Circuit) -> str:
    """One-way export to an OpenQASM 3 flavored dialect.

    RY angles are doubled on export because the IR rotation
    [[cos t, -sin t], [sin t, cos t]] equals the standard ry(2t).
    GPHASE becomes gphase(pi); ZP is exported as its X Z X expansion.
    """
    lines = ["OPENQASM 3.0;", f"qubit[{c.width}] q;"]

    def ctrl_prefix(controls):
        pos = sum(1 for _, p in controls if p == 1)
        neg = len(controls) - pos
        pre = ""
        if pos:
            pre += f"ctrl({pos}) @ "
        if neg:
            pre += f"negctrl({neg}) @ "
        return pre

    def ctrl_args(controls):
        ordered = [q for q, p in controls if p == 1] + [q for q, p in controls if p == 0]
        return ordered

    for g in c.gates:
        cargs = ", ".join(f"q[{q}]" for q in ctrl_args(g.controls) + list(g.qubits))
        pre = ctrl_prefix(g.controls)
        if g.kind == "X":
            lines.append(f"{pre}x {cargs};")
        elif g.kind == "H":
            lines.append(f"{pre}h {cargs};")
        elif g.kind == "RY":
            lines.append(f"{pre}ry({2 * g.angle!r}) {cargs};")
        elif g.kind == "Z":
            lines.append(f"{pre}z {cargs};")
        elif g.kind == "ZP":
            lines.append(f"{pre}x {cargs};")
            lines.append(f"{pre}z {cargs};")
            lines.append(f"{pre}x {cargs};")
        elif g.kind == "SWAP":
            lines.append(f"{pre}swap {cargs};")
        elif g.kind == "GPHASE":
            if g.sign == -1:
                args = ", ".join(f"q[{q}]" for q in ctrl_args(g.controls))
                lines.append(f"{pre}gphase(pi){' ' + args if args else ''};")
    return "\n".join(lines) + "\n"
