"""Verification suites behind ``holosim verify``.

Each suite runs a batch of numerical checks against the closed-form gate
theory and returns one record per check with the measured value and its
threshold.  Suites are deterministic: randomized checks use fixed seeds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chain import ChainLayout, block_sz
from .compiler import Reflection, Rotation, XYGate, compile_circuit, compile_rotation, circuit_unitary
from .gates import (
    bloch_angles,
    bloch_vector,
    compose_rule,
    entangling_verdict,
    extract_logical_gate,
    one_qubit_gate,
    projected_block_maps,
    two_qubit_gate,
)
from .holonomy import certify, computational_frame, trace_subspace, wilson_loop
from .linalg import DEFAULT_TOL, gate_fidelity, polar_unitary
from .pulses import OneQubitPulse, ThreeSitePulse, propagate_exact, schedule_propagator

__all__ = ["CheckResult", "SUITE_NAMES", "run_suite"]

SUITE_NAMES = ("onequbit", "twoqubit", "holonomy", "compiler", "all")


@dataclass
class CheckResult:
    name: str
    measured: float
    threshold: float
    comparison: str  # "<=" or ">="
    passed: bool


def _check(name: str, measured: float, threshold: float, comparison: str = "<=") -> CheckResult:
    measured = float(measured)
    ok = measured <= threshold if comparison == "<=" else measured >= threshold
    return CheckResult(name=name, measured=measured, threshold=threshold,
                       comparison=comparison, passed=ok)


def _random_unit_vectors(count: int, rng) -> np.ndarray:
    v = rng.normal(size=(count, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


# ---------------------------------------------------------------------------
# One-qubit suite
# ---------------------------------------------------------------------------

def suite_onequbit(samples: int = 1024, tol_scale: float = 1.0) -> list[CheckResult]:
    del samples  # no path sampling in this suite
    results = []
    layout = ChainLayout(2)

    worst = 1.0
    for theta in np.linspace(0.0, np.pi, 16):
        for phi in np.linspace(0.0, 2.0 * np.pi, 16, endpoint=False):
            U = propagate_exact(OneQubitPulse(1, theta, phi), layout)
            target = np.kron(one_qubit_gate(bloch_vector(theta, phi)), np.eye(2))
            report = extract_logical_gate(U, layout, target=target)
            worst = min(worst, report.fidelity_vs_target)
    results.append(_check("pi-pulse gate law on 16x16 (theta, phi) grid: min fidelity",
                          worst, 1.0 - 1e-10 * tol_scale, ">="))

    rng = np.random.default_rng(20240601)
    layout1 = ChainLayout(1)
    worst_dev = 0.0
    for n, m in zip(_random_unit_vectors(1000, rng), _random_unit_vectors(1000, rng)):
        tn, pn = bloch_angles(n)
        tm, pm = bloch_angles(m)
        U = schedule_propagator([OneQubitPulse(1, tn, pn), OneQubitPulse(1, tm, pm)], layout1)
        got = extract_logical_gate(U, layout1).logical_gate
        want = compose_rule(n, m)
        worst_dev = max(worst_dev, _phase_free_distance(got, want))
    results.append(_check("two-pulse composition law, 1000 random pairs: max deviation",
                          worst_dev, 1e-10 * tol_scale))

    worst = 1.0
    for axis, angle in zip(_random_unit_vectors(100, rng), rng.uniform(-2 * np.pi, 2 * np.pi, 100)):
        n, m = compile_rotation(axis, angle)
        target = (math.cos(0.5 * angle) * np.eye(2, dtype=complex)
                  - 1j * math.sin(0.5 * angle) * one_qubit_gate(axis))
        worst = min(worst, gate_fidelity(compose_rule(n, m), target))
    results.append(_check("rotation split round-trip, 100 random rotations: min fidelity",
                          worst, 1.0 - 1e-10 * tol_scale, ">="))
    return results


def _phase_free_distance(A, B) -> float:
    """Frobenius distance minimized over a global phase."""
    inner = np.trace(B.conj().T @ A)
    phase = inner / abs(inner) if abs(inner) > 1e-14 else 1.0
    return float(np.linalg.norm(A - phase * B))


# ---------------------------------------------------------------------------
# Two-qubit suite
# ---------------------------------------------------------------------------

def suite_twoqubit(samples: int = 1024, tol_scale: float = 1.0) -> list[CheckResult]:
    del samples
    results = []
    layout = ChainLayout(2)
    thetas = np.linspace(0.0, 2.0 * np.pi, 32, endpoint=False)
    idx = layout.logical_indices()

    worst_block = 0.0
    for vt in thetas:
        for a in np.linspace(2.0 * np.pi / 16, 2.0 * np.pi, 16):
            U = propagate_exact(ThreeSitePulse(1, vt, area=a), layout)
            A_num = U[np.ix_(idx[1:3], idx[1:3])]
            c_num = U[idx[3], idx[3]]
            A, c = projected_block_maps(vt, a)
            worst_block = max(worst_block,
                              float(np.max(np.abs(A_num - A))), abs(c_num - c))
    results.append(_check("projected block maps on 32x16 (vartheta, area) grid: max deviation",
                          worst_block, 1e-10 * tol_scale))

    worst_fid, worst_leak, worst_aux = 1.0, 0.0, 0.0
    for vt in thetas:
        U = propagate_exact(ThreeSitePulse(1, vt), layout)
        report = extract_logical_gate(U, layout, target=two_qubit_gate(vt))
        worst_fid = min(worst_fid, report.fidelity_vs_target)
        worst_leak = max(worst_leak, report.leakage)
        worst_aux = max(worst_aux, _aux_population(U, layout))
    results.append(_check("pi-area XY gate vs closed form, 32 vartheta: min fidelity",
                          worst_fid, 1.0 - 1e-10 * tol_scale, ">="))
    results.append(_check("pi-area XY gate: max leakage", worst_leak, 1e-10 * tol_scale))
    results.append(_check("pi-area XY gate: max auxiliary-site population", worst_aux, 1e-12 * tol_scale))

    sz = block_sz(1, layout)
    worst_sz, worst_e = 0.0, 0.0
    for vt in thetas[::4]:
        for a in (0.37, np.pi, 5.1):
            U = propagate_exact(ThreeSitePulse(1, vt, area=a), layout)
            worst_sz = max(worst_sz, float(np.linalg.norm(U @ sz - sz @ U)))
            worst_e = max(worst_e, _excited_fixity(U, layout))
    results.append(_check("XY propagator commutes with block S_z: max commutator norm",
                          worst_sz, 1e-10 * tol_scale))
    results.append(_check("XY propagator fixes every |e>-carrying basis state: max deviation",
                          worst_e, 1e-12 * tol_scale))

    ent_pi2, _ = entangling_verdict(two_qubit_gate(np.pi / 2))
    local_0, w0 = entangling_verdict(two_qubit_gate(0.0))
    local_pi, wpi = entangling_verdict(two_qubit_gate(np.pi))
    results.append(_check("entangling verdict at vartheta=pi/2 (1=true)", float(ent_pi2), 1.0, ">="))
    results.append(_check("max product-state output entropy at vartheta=0",
                          0.0 if not local_0 else w0.entropy, 1e-8 * tol_scale))
    results.append(_check("max product-state output entropy at vartheta=pi",
                          0.0 if not local_pi else wpi.entropy, 1e-8 * tol_scale))
    return results


def _aux_population(U, layout: ChainLayout) -> float:
    """Worst-case population left outside the logical block by logical inputs."""
    idx = layout.logical_indices()
    worst = 0.0
    for j in idx:
        psi = U[:, j]
        keep = np.zeros_like(psi)
        keep[idx] = psi[idx]
        worst = max(worst, float(np.linalg.norm(psi - keep) ** 2))
    return worst


def _excited_fixity(U, layout: ChainLayout) -> float:
    dim = layout.dim
    worst = 0.0
    for j in range(dim):
        digits = np.base_repr(j, base=3).zfill(layout.n_sites)
        if "2" in digits:
            col = U[:, j].copy()
            col[j] -= 1.0
            worst = max(worst, float(np.linalg.norm(col)))
    return worst


# ---------------------------------------------------------------------------
# Holonomy suite
# ---------------------------------------------------------------------------

def suite_holonomy(samples: int = 1024, tol_scale: float = 1.0) -> list[CheckResult]:
    results = []
    layout = ChainLayout(2)
    tol = DEFAULT_TOL
    for label, pulse in (
        ("one-qubit pi pulse (theta=pi/4)", OneQubitPulse(1, np.pi / 4, 0.0)),
        ("three-site pi pulse (vartheta=pi/2)", ThreeSitePulse(1, np.pi / 2)),
    ):
        report = certify(pulse, layout, samples=samples, strict=False)
        results.append(_check(f"{label}: parallel-transport residual",
                              report.parallel_transport_residual,
                              tol.certify_parallel_transport * tol_scale))
        results.append(_check(f"{label}: |dynamical phase|", abs(report.dynamical_phase),
                              tol.certify_dynamical_phase * tol_scale))
        results.append(_check(f"{label}: cyclicity residual", report.cyclicity_residual,
                              tol.certify_cyclicity * tol_scale))
        results.append(_check(f"{label}: wilson cross-fidelity", report.cross_fidelity,
                              tol.certify_cross_fidelity, ">="))
    return results


def wilson_deficits(pulse, layout: ChainLayout, sample_counts) -> np.ndarray:
    """1 - cross_fidelity of the Wilson gate at each sample count."""
    frame = computational_frame(pulse, layout)
    U = propagate_exact(pulse, layout)
    reference = polar_unitary(frame.conj().T @ U @ frame)
    deficits = []
    for count in sample_counts:
        path = trace_subspace(pulse, frame, count, layout)
        W = wilson_loop(path)
        deficits.append(1.0 - gate_fidelity(W, reference))
    return np.array(deficits)


# ---------------------------------------------------------------------------
# Compiler suite
# ---------------------------------------------------------------------------

def _random_circuit(rng, n_logical: int, depth: int) -> list:
    gates = []
    for _ in range(depth):
        kind = rng.integers(0, 3)
        if kind == 0:
            axis = tuple(_random_unit_vectors(1, rng)[0])
            gates.append(Rotation(qubit=int(rng.integers(1, n_logical + 1)),
                                  axis=axis, angle=float(rng.uniform(-2 * np.pi, 2 * np.pi))))
        elif kind == 1:
            n = tuple(_random_unit_vectors(1, rng)[0])
            gates.append(Reflection(qubit=int(rng.integers(1, n_logical + 1)), n=n))
        elif n_logical >= 2:
            gates.append(XYGate(pair=int(rng.integers(1, n_logical)),
                                vartheta=float(rng.uniform(0.0, 2.0 * np.pi))))
        else:
            gates.append(Reflection(qubit=1, n=(0.0, 0.0, 1.0)))
    return gates


def suite_compiler(samples: int = 1024, tol_scale: float = 1.0, circuits: int = 30) -> list[CheckResult]:
    del samples
    results = []
    rng = np.random.default_rng(77)

    worst = 1.0
    for _ in range(circuits):
        n_logical = int(rng.integers(1, 4))
        layout = ChainLayout(n_logical)
        circuit = _random_circuit(rng, n_logical, int(rng.integers(1, 7)))
        schedule = compile_circuit(circuit, layout)
        U = schedule_propagator(schedule, layout)
        report = extract_logical_gate(U, layout, target=circuit_unitary(circuit, layout))
        worst = min(worst, report.fidelity_vs_target)
    results.append(_check(f"compiled-schedule round trip, {circuits} random circuits: min fidelity",
                          worst, 1.0 - 1e-8 * tol_scale, ">="))

    layout = ChainLayout(2)
    circuit = [Rotation(1, (0.0, 0.0, 1.0), np.pi / 2), XYGate(1, np.pi / 2)]
    sched_a = compile_circuit(circuit, layout)
    sched_b = compile_circuit(circuit, layout)
    results.append(_check("compilation determinism (0 = bit-identical)",
                          0.0 if sched_a == sched_b else 1.0, 0.0))

    worst_dev = 0.0
    for axis, angle in zip(_random_unit_vectors(200, rng), rng.uniform(-2 * np.pi, 2 * np.pi, 200)):
        n, m = compile_rotation(axis, angle)
        worst_dev = max(
            worst_dev,
            abs(np.linalg.norm(n) - 1.0),
            abs(np.linalg.norm(m) - 1.0),
            abs(float(np.dot(n, m)) - math.cos(0.5 * angle)),
            float(np.linalg.norm(np.cross(n, m) - math.sin(0.5 * angle) * axis)),
        )
    results.append(_check("rotation split invariants, 200 random rotations: max deviation",
                          worst_dev, 1e-12 * tol_scale))
    return results


_SUITES = {
    "onequbit": suite_onequbit,
    "twoqubit": suite_twoqubit,
    "holonomy": suite_holonomy,
    "compiler": suite_compiler,
}


def run_suite(name: str, samples: int = 1024, tol_scale: float = 1.0) -> list[CheckResult]:
    """Run one named suite (or 'all'); unknown names raise ValueError."""
    if name == "all":
        results = []
        for suite in _SUITES.values():
            results.extend(suite(samples=samples, tol_scale=tol_scale))
        return results
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}, expected one of {SUITE_NAMES}")
    return _SUITES[name](samples=samples, tol_scale=tol_scale)
