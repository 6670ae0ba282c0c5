"""Command-line front end.

Subcommands::

    holosim simulate     --schedule F --qubits N --initial BITS [--out F]
    holosim verify       --suite NAME [--tol X] [--samples K]
    holosim compile      --circuit F --qubits N [--out F]
    holosim extract-gate --schedule F --qubits N [--out F]

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Report files are deterministic: fixed field order, floats with 17
significant digits.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .chain import ChainLayout, logical_encode
from .checks import SUITE_NAMES, run_suite
from .compiler import Reflection, Rotation, XYGate, compile_gate, circuit_unitary
from .formats import (
    FormatError,
    complex_pair,
    dumps,
    loads_circuit,
    loads_schedule,
    matrix_pairs,
    pulse_to_dict,
    schedule_to_obj,
)
from .gates import extract_logical_gate
from .pulses import run_schedule, schedule_propagator

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holosim",
        description="Simulate, verify and compile holonomic gates on a qutrit chain.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a pulse schedule on a logical basis state")
    p.add_argument("--schedule", required=True, help="schedule JSON file")
    p.add_argument("--qubits", required=True, type=int, help="number of logical qubits N")
    p.add_argument("--initial", required=True, help="initial logical bitstring, length N")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES)
    p.add_argument("--tol", type=float, default=1.0,
                   help="scale factor applied to every threshold (default 1)")
    p.add_argument("--samples", type=int, default=1024,
                   help="path samples for holonomy certification (default 1024)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compile", help="compile a logical circuit into a pulse schedule")
    p.add_argument("--circuit", required=True, help="circuit JSON file")
    p.add_argument("--qubits", required=True, type=int)
    p.add_argument("--out", help="write the schedule document here instead of stdout")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("extract-gate", help="extract the logical gate of a schedule")
    p.add_argument("--schedule", required=True, help="schedule JSON file")
    p.add_argument("--qubits", required=True, type=int)
    p.add_argument("--out", help="write the gate report here instead of stdout")
    p.set_defaults(func=cmd_extract_gate)
    return parser


def _layout(n_qubits: int) -> ChainLayout:
    layout = ChainLayout(n_qubits)
    if n_qubits > 4:
        print(
            f"warning: N={n_qubits} means dense {layout.dim}-dimensional propagators; "
            "expect long runtimes",
            file=sys.stderr,
        )
    return layout


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_report(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_bits(bits: str, n: int) -> list[int]:
    if len(bits) != n or any(c not in "01" for c in bits):
        raise FormatError(f"--initial must be a bitstring of length {n}, got {bits!r}")
    return [int(c) for c in bits]


def cmd_simulate(args) -> int:
    layout = _layout(args.qubits)
    schedule = loads_schedule(_read(args.schedule))
    bits = _parse_bits(args.initial, layout.n_logical)
    psi = run_schedule(schedule, logical_encode(bits, layout), layout)

    idx = layout.logical_indices()
    amplitudes = psi[idx]
    logical_population = float(np.sum(np.abs(amplitudes) ** 2))
    marg = np.abs(psi.reshape((3,) * layout.n_sites)) ** 2
    site_populations = []
    for site in range(layout.n_sites):
        axes = tuple(i for i in range(layout.n_sites) if i != site)
        site_populations.append([float(v) for v in marg.sum(axis=axes)])

    report = {
        "qubits": layout.n_logical,
        "initial": args.initial,
        "basis": "logical, lexicographic in n1..nN",
        "final_amplitudes": [complex_pair(a) for a in amplitudes],
        "leakage": max(0.0, 1.0 - logical_population),
        "site_populations": site_populations,
        "norm": float(np.linalg.norm(psi)),
    }
    _write_report(dumps(report), args.out)
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite, samples=args.samples, tol_scale=args.tol)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        failed += not r.passed
        print(f"[{status}] {r.name}: measured={r.measured:.6e} {r.comparison} {r.threshold:.6e}")
    print(f"suite {args.suite!r}: {len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


_RULES = {
    Reflection: "reflection: one pi-area drive along n",
    Rotation: "rotation: two pi-area drives (reflection pair n then m)",
    XYGate: "xy: one pi-area three-site coupling pulse",
}


def cmd_compile(args) -> int:
    layout = _layout(args.qubits)
    circuit = loads_circuit(_read(args.circuit))
    schedule = []
    provenance = []
    for i, gate in enumerate(circuit):
        try:
            pulses = compile_gate(gate, layout)
        except ValueError as exc:
            raise FormatError(f"gates[{i}]: {exc}") from None
        provenance.append({
            "gate": i,
            "kind": type(gate).__name__.lower(),
            "pulses": list(range(len(schedule), len(schedule) + len(pulses))),
            "rule": _RULES[type(gate)],
        })
        schedule.extend(pulses)

    document = schedule_to_obj(schedule)
    document["predicted_gate"] = matrix_pairs(circuit_unitary(circuit, layout))
    document["provenance"] = provenance
    _write_report(dumps(document), args.out)
    return 0


def cmd_extract_gate(args) -> int:
    layout = _layout(args.qubits)
    schedule = loads_schedule(_read(args.schedule))
    U = schedule_propagator(schedule, layout)
    report = extract_logical_gate(U, layout, diagnostics=True)

    doc = {
        "qubits": layout.n_logical,
        "pulses": [pulse_to_dict(p) for p in schedule],
        "cyclic": report.cyclic,
        "leakage": report.leakage,
        "logical_gate": matrix_pairs(report.logical_gate),
    }
    if report.makhlin is not None:
        doc["makhlin_g1"] = complex_pair(report.makhlin[0])
        doc["makhlin_g2"] = report.makhlin[1]
    if report.entangling is not None:
        doc["entangling"] = report.entangling
        doc["witness_entropy"] = report.witness.entropy
    _write_report(dumps(doc), args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
