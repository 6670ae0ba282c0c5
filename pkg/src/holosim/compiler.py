"""Compilation of logical circuits into pulse schedules.

Gate set: reflections (one pi pulse), rotations about an arbitrary axis
(two pi pulses, via the two-reflection decomposition), and the XY-block
gate on adjacent logical pairs (one pi-area three-site pulse).  Compilation
is deterministic and performs no optimization, so the emitted schedule can
be audited pulse-by-pulse against its source gates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chain import ChainLayout
from .gates import bloch_angles, one_qubit_gate, two_qubit_gate
from .pulses import OneQubitPulse, ThreeSitePulse

__all__ = [
    "Rotation",
    "Reflection",
    "XYGate",
    "compile_rotation",
    "compile_gate",
    "compile_circuit",
    "circuit_unitary",
]

_BASIS_AXES = (
    np.array([1.0, 0.0, 0.0]),
    np.array([0.0, 1.0, 0.0]),
    np.array([0.0, 0.0, 1.0]),
)


@dataclass(frozen=True)
class Rotation:
    """exp(-i angle/2 * axis.sigma) on one logical qubit."""

    qubit: int
    axis: tuple[float, float, float]
    angle: float


@dataclass(frozen=True)
class Reflection:
    """n.sigma on one logical qubit (single pi pulse)."""

    qubit: int
    n: tuple[float, float, float]


@dataclass(frozen=True)
class XYGate:
    """XY-block gate with mixing angle vartheta on adjacent pair (l', l'+1)."""

    pair: int
    vartheta: float


def _checked_axis(axis) -> np.ndarray:
    a = np.asarray(axis, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"axis must be a 3-vector, got shape {a.shape}")
    norm = np.linalg.norm(a)
    if norm < 1e-12:
        raise ValueError("rotation axis must be nonzero")
    return a / norm


def compile_rotation(axis, angle: float) -> tuple[np.ndarray, np.ndarray]:
    """Split a rotation into two reflection axes (n, m).

    n is the first of (x, y, z) not parallel to the rotation axis,
    orthogonalized against it; m = cos(angle/2) n + sin(angle/2) (axis x n).
    Then n.m = cos(angle/2) and n x m = sin(angle/2) axis, so the two
    reflections compose to the requested rotation.
    """
    a = _checked_axis(axis)
    if not np.isfinite(angle):
        raise ValueError("rotation angle must be finite")
    for e in _BASIS_AXES:
        if np.linalg.norm(np.cross(a, e)) > 1e-6:
            n = e - np.dot(e, a) * a
            n /= np.linalg.norm(n)
            break
    else:  # unreachable for a unit axis
        raise ValueError(f"could not find a direction transverse to axis {a}")
    m = math.cos(0.5 * angle) * n + math.sin(0.5 * angle) * np.cross(a, n)
    return n, m


def _reflection_pulse(qubit: int, n) -> OneQubitPulse:
    theta, phi = bloch_angles(n)
    return OneQubitPulse(qubit=qubit, theta=theta, phi=phi, area=math.pi)


def compile_gate(gate, layout: ChainLayout) -> list:
    """Pulses implementing one logical gate, in execution order."""
    if isinstance(gate, Reflection):
        layout.site_of_qubit(gate.qubit)
        return [_reflection_pulse(gate.qubit, gate.n)]
    if isinstance(gate, Rotation):
        layout.site_of_qubit(gate.qubit)
        n, m = compile_rotation(gate.axis, gate.angle)
        return [_reflection_pulse(gate.qubit, n), _reflection_pulse(gate.qubit, m)]
    if isinstance(gate, XYGate):
        layout.sites_of_pair(gate.pair)  # adjacent pairs only; rejects the rest
        return [ThreeSitePulse(pair=gate.pair, vartheta=gate.vartheta, area=math.pi)]
    raise TypeError(f"unknown gate type: {gate!r}")


def compile_circuit(circuit, layout: ChainLayout) -> list:
    """Compile an ordered gate list into a pulse schedule (order preserved)."""
    schedule = []
    for i, gate in enumerate(circuit):
        try:
            schedule.extend(compile_gate(gate, layout))
        except ValueError as exc:
            raise ValueError(f"gate {i}: {exc}") from None
    return schedule


def _embed_logical(op, first_qubit: int, n_targets: int, n_logical: int) -> np.ndarray:
    left = 2 ** (first_qubit - 1)
    right = 2 ** (n_logical - (first_qubit + n_targets - 1))
    out = np.asarray(op, dtype=complex)
    if left > 1:
        out = np.kron(np.eye(left, dtype=complex), out)
    if right > 1:
        out = np.kron(out, np.eye(right, dtype=complex))
    return out


def circuit_unitary(circuit, layout: ChainLayout) -> np.ndarray:
    """Analytic 2^N x 2^N unitary of a logical circuit (first gate first).

    Built directly from the closed-form gate matrices; serves as the
    reference the compiled pulse schedule is verified against.
    """
    N = layout.n_logical
    U = np.eye(layout.logical_dim, dtype=complex)
    for i, gate in enumerate(circuit):
        if isinstance(gate, Reflection):
            layout.site_of_qubit(gate.qubit)
            G = _embed_logical(one_qubit_gate(gate.n), gate.qubit, 1, N)
        elif isinstance(gate, Rotation):
            layout.site_of_qubit(gate.qubit)
            a = _checked_axis(gate.axis)
            half = 0.5 * gate.angle
            local = math.cos(half) * np.eye(2, dtype=complex) - 1j * math.sin(half) * one_qubit_gate(a)
            G = _embed_logical(local, gate.qubit, 1, N)
        elif isinstance(gate, XYGate):
            layout.sites_of_pair(gate.pair)
            G = _embed_logical(two_qubit_gate(gate.vartheta), gate.pair, 2, N)
        else:
            raise TypeError(f"gate {i}: unknown gate type {gate!r}")
        U = G @ U
    return U
