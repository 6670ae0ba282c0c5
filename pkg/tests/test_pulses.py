import numpy as np
import pytest

from holosim.chain import ChainLayout, block_sz, embed, logical_encode
from holosim.gates import bloch_vector, entanglement_entropy, one_qubit_gate
from holosim.linalg import gate_fidelity, unitarity_defect
from holosim.pulses import (
    ENVELOPES,
    OneQubitPulse,
    ThreeSitePulse,
    cumulative_area,
    propagate_exact,
    propagate_stepped,
    run_schedule,
    schedule_propagator,
    slice_areas,
)

from oracles import svd_entropy


class TestEnvelopes:
    @pytest.mark.parametrize("envelope", ENVELOPES)
    @pytest.mark.parametrize("steps", [1, 10, 100, 10000])
    def test_discretized_area_matches_request(self, envelope, steps):
        areas = slice_areas(envelope, np.pi, steps)
        assert areas.shape == (steps,)
        assert np.all(areas >= 0)
        assert abs(areas.sum() - np.pi) < 1e-12

    @pytest.mark.parametrize("envelope", ENVELOPES)
    def test_cumulative_area_endpoints_and_monotonicity(self, envelope):
        assert cumulative_area(envelope, np.pi, 0.0) == 0.0
        assert cumulative_area(envelope, np.pi, 1.0) == pytest.approx(np.pi, abs=1e-15)
        values = [cumulative_area(envelope, np.pi, s) for s in np.linspace(0, 1, 101)]
        assert np.all(np.diff(values) >= -1e-15)

    @pytest.mark.parametrize("envelope", ENVELOPES)
    def test_slice_sums_track_the_closed_form_cumulative(self, envelope):
        # partial sums of the normalized slices must follow cumulative_area
        steps = 10000
        partial = np.cumsum(slice_areas(envelope, np.pi, steps))
        grid = (np.arange(steps) + 1.0) / steps
        want = np.array([cumulative_area(envelope, np.pi, s) for s in grid])
        assert np.max(np.abs(partial - want)) < 1e-7

    def test_invalid_envelope_and_steps(self):
        with pytest.raises(ValueError, match="envelope"):
            slice_areas("triangle", np.pi, 10)
        with pytest.raises(ValueError, match="steps"):
            slice_areas("square", np.pi, 0)
        with pytest.raises(ValueError, match="envelope"):
            OneQubitPulse(1, 0.0, 0.0, envelope="trapezoid")
        with pytest.raises(ValueError, match="duration"):
            OneQubitPulse(1, 0.0, 0.0, duration=0.0)


class TestPropagateExact:
    def test_zero_area_is_identity(self):
        layout = ChainLayout(2)
        U = propagate_exact(OneQubitPulse(1, 0.7, 0.3, area=0.0), layout)
        assert np.allclose(U, np.eye(layout.dim), atol=1e-14)

    @pytest.mark.parametrize("theta,phi", [(0.0, 0.0), (np.pi / 4, 0.0), (1.2, 2.6)])
    def test_pi_area_restricts_to_reflection(self, theta, phi):
        layout = ChainLayout(1)
        U = propagate_exact(OneQubitPulse(1, theta, phi), layout)
        block = U[:2, :2]
        assert np.allclose(block, one_qubit_gate(bloch_vector(theta, phi)), atol=1e-12)
        # no residual coupling of the qubit subspace to the excited level
        assert np.max(np.abs(U[2, :2])) < 1e-12

    def test_three_site_double_area_is_identity_on_logical_block(self):
        layout = ChainLayout(2)
        U = propagate_exact(ThreeSitePulse(1, 1.1, area=2 * np.pi), layout)
        idx = layout.logical_indices()
        assert np.allclose(U[np.ix_(idx, idx)], np.eye(4), atol=1e-12)

    @pytest.mark.parametrize(
        "pulse",
        [
            OneQubitPulse(1, 0.9, 4.4, area=0.37),
            ThreeSitePulse(1, 2.3, area=1.9),
        ],
    )
    def test_unitarity(self, pulse):
        U = propagate_exact(pulse, ChainLayout(2))
        assert unitarity_defect(U) < 1e-10

    def test_sz_conserved_during_three_site_pulse(self):
        layout = ChainLayout(2)
        sz = block_sz(1, layout)
        for area in (0.4, np.pi, 5.0):
            U = propagate_exact(ThreeSitePulse(1, 1.7, area=area), layout)
            assert np.linalg.norm(U @ sz - sz @ U) < 1e-10

    def test_three_site_pulse_fixes_excited_states(self):
        layout = ChainLayout(2)
        U = propagate_exact(ThreeSitePulse(1, 2.0, area=1.3), layout)
        for j in range(layout.dim):
            if "2" in np.base_repr(j, base=3).zfill(3):
                col = U[:, j].copy()
                col[j] -= 1.0
                assert np.linalg.norm(col) < 1e-12

    def test_locality_on_three_qubit_chain(self):
        # a pulse on pair (1,2) commutes with every operator on site 5
        layout = ChainLayout(3)
        U = propagate_exact(ThreeSitePulse(1, np.pi / 2), layout)
        for a in range(3):
            for b in range(3):
                E = np.zeros((3, 3))
                E[a, b] = 1.0
                O = embed(E, 5, layout)
                assert np.linalg.norm(U @ O - O @ U) < 1e-12


class TestPropagateStepped:
    def test_single_square_step_equals_exact(self):
        layout = ChainLayout(2)
        pulse = ThreeSitePulse(1, 1.3, area=2.2)
        assert np.linalg.norm(
            propagate_stepped(pulse, 1, layout) - propagate_exact(pulse, layout)
        ) < 1e-12

    @pytest.mark.parametrize("envelope", ENVELOPES)
    @pytest.mark.parametrize("steps", [10, 100, 10000])
    def test_envelope_and_step_count_irrelevant(self, envelope, steps):
        layout = ChainLayout(1)
        pulse = OneQubitPulse(1, np.pi / 4, 0.0, envelope=envelope)
        U = propagate_stepped(pulse, steps, layout)
        assert gate_fidelity(U, propagate_exact(pulse, layout)) >= 1.0 - 1e-9

    def test_three_site_envelopes(self):
        layout = ChainLayout(2)
        exact = propagate_exact(ThreeSitePulse(1, np.pi / 2), layout)
        for envelope in ENVELOPES:
            U = propagate_stepped(ThreeSitePulse(1, np.pi / 2, envelope=envelope), 1000, layout)
            assert gate_fidelity(U, exact) >= 1.0 - 1e-9


class TestRunSchedule:
    def test_empty_schedule(self):
        layout = ChainLayout(2)
        psi0 = logical_encode([1, 0], layout)
        assert np.array_equal(run_schedule([], psi0, layout), psi0)

    def test_polar_pulse_fixes_zero_state(self):
        layout = ChainLayout(2)
        psi0 = logical_encode([0, 0], layout)
        psi = run_schedule([OneQubitPulse(1, 0.0, 0.0)], psi0, layout)
        assert abs(abs(np.vdot(psi0, psi)) - 1.0) < 1e-12

    def test_norm_preserved(self):
        layout = ChainLayout(2)
        psi = run_schedule(
            [OneQubitPulse(1, 1.1, 0.4), ThreeSitePulse(1, 2.0), OneQubitPulse(2, 0.3, 5.1)],
            logical_encode([0, 1], layout),
            layout,
        )
        assert abs(np.linalg.norm(psi) - 1.0) < 1e-12

    def test_dimension_mismatch(self):
        layout = ChainLayout(2)
        with pytest.raises(ValueError, match="dimension"):
            run_schedule([], np.zeros(9, dtype=complex), layout)

    def test_hadamard_then_xy_leaves_product_state(self):
        # oracle-checked: H on qubit 1 makes (|00> + |10>)/sqrt(2); the
        # pi/2 exchange then maps |10> -> |01>, giving |0> x |+> -- still
        # a product state, with zero leakage
        layout = ChainLayout(2)
        schedule = [OneQubitPulse(1, np.pi / 4, 0.0), ThreeSitePulse(1, np.pi / 2)]
        psi = run_schedule(schedule, logical_encode([0, 0], layout), layout)
        amps = psi[layout.logical_indices()]
        assert np.allclose(np.abs(amps), [1 / np.sqrt(2), 1 / np.sqrt(2), 0, 0], atol=1e-12)
        assert abs(1.0 - np.sum(np.abs(amps) ** 2)) < 1e-12  # no leakage
        assert entanglement_entropy(amps) < 1e-12
        assert svd_entropy(amps) < 1e-12

    def test_double_hadamard_then_xy_is_maximally_entangling(self):
        # oracle-checked: |+>|+> through the pi/2 exchange gate picks up a
        # sign on |11> and becomes maximally entangled
        layout = ChainLayout(2)
        schedule = [
            OneQubitPulse(1, np.pi / 4, 0.0),
            OneQubitPulse(2, np.pi / 4, 0.0),
            ThreeSitePulse(1, np.pi / 2),
        ]
        psi = run_schedule(schedule, logical_encode([0, 0], layout), layout)
        amps = psi[layout.logical_indices()]
        assert np.allclose(amps, [0.5, 0.5, 0.5, -0.5], atol=1e-12)
        assert abs(entanglement_entropy(amps) - np.log(2)) < 1e-9
        assert abs(svd_entropy(amps) - np.log(2)) < 1e-9

    def test_schedule_propagator_matches_stepwise_run(self):
        layout = ChainLayout(2)
        schedule = [OneQubitPulse(2, 0.8, 1.0), ThreeSitePulse(1, 1.1)]
        psi0 = logical_encode([1, 1], layout)
        assert np.allclose(
            schedule_propagator(schedule, layout) @ psi0,
            run_schedule(schedule, psi0, layout),
            atol=1e-12,
        )
