"""Acceptance suite: every shipping criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass/fail
line per criterion.
"""

import math

import numpy as np
import pytest

from szwalk import markov, oracle, pagerank
from szwalk.gates import Circuit, Gate, gate_count
from szwalk.simulator import apply, basis_state, unitary_of
from szwalk.synth import (controlled_shift_transform, cycle_parts,
                          complete_parts, kb_complete, state_prep,
                          synth_bipartite, synth_complete, synth_crown,
                          synth_cycle, synth_directed8, synth_k2,
                          synth_single_reference, synth_tensor,
                          synth_wheel, synth_win_cycles, verify)

ORACLE_TOL = 1e-10
REFLECTION_TOL = 1e-12
OUTER_SYMMETRY_TOL = 1e-8
NORMALIZATION_TOL = 1e-10
PAGERANK_STEPS = 1000
GATE_SCALING_CONSTANT = 2.0


def report(criterion, label, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    print(f"[{tag}] criterion {criterion}: {label}" + (f"  ({detail})" if detail else ""))
    assert ok, f"criterion {criterion} failed: {label} {detail}"


def equivalence_cases():
    alpha = 0.85
    return [
        ("C_8", synth_cycle(3), markov.cycle_graph(8)),
        ("C_16", synth_cycle(4), markov.cycle_graph(16)),
        ("C_32", synth_cycle(5), markov.cycle_graph(32)),
        ("K_8", synth_complete(3), markov.complete_graph(8)),
        ("K_16", synth_complete(4), markov.complete_graph(16)),
        ("K_{8,4}", synth_bipartite(3, 2), markov.complete_bipartite(8, 4)),
        ("K_{4,4}", synth_bipartite(2, 2), markov.complete_bipartite(4, 4)),
        ("K_2", synth_k2(), markov.complete_graph(2)),
        ("crown S_4^0", synth_crown(2), markov.crown_graph(4)),
        ("crown S_8^0", synth_crown(3), markov.crown_graph(8)),
        ("WIN(8,4)", synth_win_cycles(3, 2), markov.win_cycles(8, 4)),
        ("W_8", synth_wheel(3, directed=False, alpha=alpha),
         markov.google_matrix(markov.wheel_graph(8), alpha)),
        ("W_8'", synth_wheel(3, directed=True, alpha=alpha),
         markov.google_matrix(markov.wheel_graph(8, directed=True), alpha)),
        ("directed8", synth_directed8(alpha),
         markov.google_matrix(markov.directed_example8(), alpha)),
    ]


@pytest.fixture(scope="module")
def wheel_series():
    alpha = 0.85
    gu = markov.google_matrix(markov.wheel_graph(8), alpha)
    gd = markov.google_matrix(markov.wheel_graph(8, directed=True), alpha)
    su = pagerank.run(synth_wheel(3, directed=False, alpha=alpha), gu,
                      steps=PAGERANK_STEPS)
    sd = pagerank.run(synth_wheel(3, directed=True, alpha=alpha), gd,
                      steps=PAGERANK_STEPS)
    return su, sd


@pytest.fixture(scope="module")
def directed8_series():
    alpha = 0.85
    g = markov.google_matrix(markov.directed_example8(), alpha)
    return pagerank.run(synth_directed8(alpha), g, steps=PAGERANK_STEPS)


def test_criterion_01_oracle_equivalence():
    worst = ("", 0.0)
    for label, circuit, p in equivalence_cases():
        rep = verify(circuit, p, tolerance=ORACLE_TOL)
        if rep.max_deviation > worst[1]:
            worst = (label, rep.max_deviation)
        assert rep.passed, (label, rep)
        assert rep.leakage <= ORACLE_TOL, (label, rep)
    report(1, "oracle equivalence for all 14 graph cases", True,
           f"worst deviation {worst[1]:.2e} at {worst[0]}")


def test_criterion_02_reflection_swap_identities():
    worst = 0.0
    for label, _, p in equivalence_cases():
        n = p.shape[0]
        s = oracle.swap_matrix(n)
        assert np.array_equal(s @ s, np.eye(n * n)), label
        r = oracle.reflection(p)
        dev_r = np.abs(r @ r - np.eye(n * n)).max()
        u = oracle.walk_operator(p).matrix
        dev_u = np.abs(u.T @ u - np.eye(n * n)).max()
        worst = max(worst, dev_r, dev_u)
        assert dev_r <= REFLECTION_TOL, label
        assert dev_u <= REFLECTION_TOL, label
    report(2, "S^2 = I exactly, reflection^2 and walk unitarity within 1e-12",
           True, f"worst deviation {worst:.2e}")


def test_criterion_03_shift_transform_brute_force():
    for n in range(1, 5):
        big = 2 ** n
        for x_off in range(4):
            u = unitary_of(controlled_shift_transform(n, x_off)).real
            expected = np.zeros((big * big, big * big))
            for i in range(big):
                for j in range(big):
                    expected[i * big + ((j - i * x_off) % big), i * big + j] = 1.0
            assert np.array_equal(u, expected), (n, x_off)
    report(3, "controlled shift transform matches arithmetic oracle exactly "
              "(n <= 4, x in 0..3)", True)


def test_criterion_04_state_preparation_fidelity():
    rng = np.random.default_rng(2026)
    worst = 0.0
    for size in (8, 16, 32):
        n = int(math.log2(size))
        for _ in range(100):
            target = rng.random(size)
            target /= np.linalg.norm(target)
            b = int(rng.integers(size))
            out = apply(state_prep(target, b), basis_state(n, b))
            err = np.abs(out - target).max()
            worst = max(worst, err)
            assert err <= 1e-10, (size, b, err)
    report(4, "state preparation entrywise fidelity <= 1e-10 "
              "(100 seeded targets x lengths 8/16/32)", True, f"worst {worst:.2e}")


def test_criterion_05_tensor_composition():
    cases = [
        ("K_4 x K_2", synth_tensor(complete_parts(2), complete_parts(1)),
         markov.tensor(markov.complete_graph(4), markov.complete_graph(2))),
        ("C_4 x C_4", synth_tensor(cycle_parts(2), cycle_parts(2)),
         markov.tensor(markov.cycle_graph(4), markov.cycle_graph(4))),
    ]
    worst = 0.0
    for label, circuit, p in cases:
        rep = verify(circuit, p, tolerance=ORACLE_TOL)
        worst = max(worst, rep.max_deviation)
        assert rep.passed, (label, rep)
    report(5, "tensor-composed circuits equal the Kronecker-product oracle",
           True, f"worst deviation {worst:.2e}")


def test_criterion_06_pagerank_wheel(wheel_series):
    su, sd = wheel_series
    for label, series in (("W_8", su), ("W_8'", sd)):
        hub, outer = series.average[8], series.average[:8]
        assert hub > outer.max(), label
        spread = outer.max() - outer.min()
        assert spread <= OUTER_SYMMETRY_TOL, (label, spread)
    cmp = pagerank.compare_hub(su, sd)
    assert cmp.second_exceeds_first, cmp
    report(6, "wheel PageRank: hub ranks first, outer vertices tie, directed "
              "hub exceeds undirected", True,
           f"hub {su.average[8]:.4f} vs {sd.average[8]:.4f}, "
           f"outer spread {max(su.average[:8].max() - su.average[:8].min(), sd.average[:8].max() - sd.average[:8].min()):.1e}")


def test_criterion_07_pagerank_directed8(directed8_series):
    avg = directed8_series.average
    z1, z2, z3 = avg[0:4], avg[4:6], avg[6:8]
    assert z3.min() > z2.max()
    assert z2.min() > z1.max()
    for label, group in (("Z_1", z1), ("Z_2", z2), ("Z_3", z3)):
        spread = group.max() - group.min()
        assert spread <= OUTER_SYMMETRY_TOL, (label, spread)
    report(7, "directed-8 PageRank ordering Z_3 > Z_2 > Z_1 with ties inside "
              "each subset", True,
           f"averages {z1.mean():.4f} < {z2.mean():.4f} < {z3.mean():.4f}")


def test_criterion_08_normalization(wheel_series, directed8_series):
    worst = 0.0
    for series in (*wheel_series, directed8_series):
        dev = np.abs(series.instantaneous.sum(axis=1) - 1.0).max()
        worst = max(worst, dev)
        assert dev <= NORMALIZATION_TOL
    report(8, "sum_j Q(j,t) = 1 within 1e-10 at every step of criteria 6-7",
           True, f"worst {worst:.2e}")


def test_criterion_09_gate_scaling():
    rows = []
    for n in range(3, 11):
        total, est = gate_count(synth_cycle(n))
        rows.append((n, total, est, est / n ** 3))
        assert est <= GATE_SCALING_CONSTANT * n ** 3, (n, est)
    table = ", ".join(f"n={n}:{est}" for n, _, est, _ in rows)
    report(9, f"cycle-walk gate estimate under {GATE_SCALING_CONSTANT}*n^3 "
              "for n = 3..10", True, table)


def test_criterion_10_negative_control():
    kb, b = kb_complete(3)
    gates = list(kb.gates)
    for i, g in enumerate(gates):
        if g.kind == "RY":
            gates[i] = Gate("RY", g.qubits, g.controls, angle=g.angle + 0.01)
            break
    bad = synth_single_reference(3, controlled_shift_transform(3, 1),
                                 Circuit(kb.width, gates), b)
    rep = verify(bad, markov.complete_graph(8))
    assert not rep.passed
    assert rep.max_deviation > 1e-3
    report(10, "perturbing a preparation angle by +0.01 rad makes verify fail",
           True, f"deviation {rep.max_deviation:.2e}")
