"""Chain layout, local operators and Hamiltonian builders.

The register is a linear chain of 2N-1 three-level systems.  Odd sites
1, 3, ..., 2N-1 carry the N logical qubits in their {|0>, |1>} subspaces;
even sites are auxiliary and idle in |0> between two-qubit operations.

Basis conventions (fixed once, everything downstream depends on them):

* local codes |0> -> 0, |1> -> 1, |e> -> 2;
* global index = sum_i code(site i) * 3**(n_sites - i), site 1 most
  significant (i.e. plain ``np.kron`` order with site 1 leftmost).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

__all__ = [
    "GELL_MANN_INDICES",
    "gell_mann",
    "SIGMA_Z3",
    "ChainLayout",
    "embed",
    "lambda_coupling",
    "h1",
    "h3",
    "block_sz",
    "logical_encode",
    "normalize_bloch_angles",
]

# The five generators actually used by the chain Hamiltonian, in the local
# basis order (|0>, |1>, |e>).  Indices 3, 5, 8 are deliberately absent:
# nothing in the model drives them, and omitting them prevents silent misuse.
_KET0, _KET1, _KETE = np.eye(3, dtype=complex)

_GELL_MANN = {
    1: np.outer(_KETE, _KET0) + np.outer(_KET0, _KETE),
    2: -1j * np.outer(_KETE, _KET0) + 1j * np.outer(_KET0, _KETE),
    4: np.outer(_KETE, _KET1) + np.outer(_KET1, _KETE),
    6: np.outer(_KET0, _KET1) + np.outer(_KET1, _KET0),
    7: -1j * np.outer(_KET0, _KET1) + 1j * np.outer(_KET1, _KET0),
}

GELL_MANN_INDICES = (1, 2, 4, 6, 7)

# Pseudo-spin z on the qubit subspace of one qutrit: |0><0| - |1><1|.
SIGMA_Z3 = np.diag([1.0, -1.0, 0.0]).astype(complex)


def gell_mann(index: int) -> np.ndarray:
    """3x3 generator with the given catalog index (one of 1, 2, 4, 6, 7)."""
    try:
        return _GELL_MANN[index].copy()
    except (KeyError, TypeError):
        raise ValueError(
            f"gell_mann index must be one of {GELL_MANN_INDICES}, got {index!r}"
        ) from None


@dataclass(frozen=True)
class ChainLayout:
    """Mapping between N logical qubits and a chain of 2N-1 qutrits."""

    n_logical: int

    def __post_init__(self):
        if not isinstance(self.n_logical, int) or self.n_logical < 1:
            raise ValueError(f"n_logical must be a positive integer, got {self.n_logical!r}")

    @property
    def n_sites(self) -> int:
        return 2 * self.n_logical - 1

    @property
    def dim(self) -> int:
        return 3 ** self.n_sites

    @property
    def logical_dim(self) -> int:
        return 2 ** self.n_logical

    def site_of_qubit(self, qubit: int) -> int:
        """Chain site hosting logical qubit l (1-based): site 2l-1."""
        if not 1 <= qubit <= self.n_logical:
            raise ValueError(f"qubit {qubit} out of range 1..{self.n_logical}")
        return 2 * qubit - 1

    def sites_of_pair(self, pair: int) -> tuple[int, int, int]:
        """The three consecutive sites driven by the coupling on pair l'."""
        if not 1 <= pair <= self.n_logical - 1:
            raise ValueError(f"pair {pair} out of range 1..{self.n_logical - 1}")
        left = 2 * pair - 1
        return (left, left + 1, left + 2)

    def logical_index(self, bits) -> int:
        """Global index of the chain basis state |n1 0 n2 0 ... nN>."""
        bits = tuple(int(b) for b in bits)
        if len(bits) != self.n_logical or any(b not in (0, 1) for b in bits):
            raise ValueError(f"bits must be {self.n_logical} values in {{0,1}}, got {bits}")
        index = 0
        for qubit, b in enumerate(bits, start=1):
            site = 2 * qubit - 1
            index += b * 3 ** (self.n_sites - site)
        return index

    def logical_indices(self) -> list[int]:
        """Global indices of all 2^N logical states, lexicographic in n1..nN."""
        return [self.logical_index(bits) for bits in product((0, 1), repeat=self.n_logical)]


def embed(op, start_site: int, layout: ChainLayout) -> np.ndarray:
    """Tensor-embed ``op`` (acting on contiguous sites) into the full chain.

    ``op`` must act on m = log3(dim) consecutive sites beginning at
    ``start_site`` (1-based); identities fill the remaining sites.
    """
    op = np.asarray(op, dtype=complex)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise ValueError(f"operator must be square, got shape {op.shape}")
    m = round(np.log(op.shape[0]) / np.log(3))
    if 3 ** m != op.shape[0]:
        raise ValueError(f"operator dimension {op.shape[0]} is not a power of 3")
    if start_site < 1 or start_site + m - 1 > layout.n_sites:
        raise ValueError(
            f"sites {start_site}..{start_site + m - 1} out of range 1..{layout.n_sites}"
        )
    left = 3 ** (start_site - 1)
    right = 3 ** (layout.n_sites - (start_site + m - 1))
    out = op
    if left > 1:
        out = np.kron(np.eye(left, dtype=complex), out)
    if right > 1:
        out = np.kron(out, np.eye(right, dtype=complex))
    return out


def lambda_coupling(theta: float, phi: float) -> np.ndarray:
    """Local 3x3 two-field coupling sin(t/2)e^{i p}|e><0| - cos(t/2)|e><1| + h.c.

    The two lower levels couple to |e> with relative amplitude -tan(theta/2)
    and relative phase phi; the {|0>,|1>} block is exactly zero, and the
    nonzero spectrum is {+1, -1} for every (theta, phi) since the coupling
    vector has unit norm.
    """
    if not (np.isfinite(theta) and np.isfinite(phi)):
        raise ValueError("theta and phi must be finite")
    half = 0.5 * theta
    return (
        np.sin(half) * (np.cos(phi) * _GELL_MANN[1] - np.sin(phi) * _GELL_MANN[2])
        - np.cos(half) * _GELL_MANN[4]
    )


def h1(site: int, theta: float, phi: float, layout: ChainLayout) -> np.ndarray:
    """Full-chain one-qubit drive Hamiltonian at an odd (logical) site."""
    if not 1 <= site <= layout.n_sites:
        raise ValueError(f"site {site} out of range 1..{layout.n_sites}")
    if site % 2 == 0:
        raise ValueError(f"site {site} is auxiliary; one-qubit drives address odd sites only")
    return embed(lambda_coupling(theta, phi), site, layout)


# Qubit-subspace hopping between two neighboring qutrits:
# (lam6 lam6 + lam7 lam7)/2 = |01><10| + |10><01|, zero on any |e| component.
_HOP = 0.5 * (
    np.kron(_GELL_MANN[6], _GELL_MANN[6]) + np.kron(_GELL_MANN[7], _GELL_MANN[7])
)

# Qubit-sector projector of one qutrit.  The three-site coupling carries it
# on the bystander site of each bond so that every |e>-carrying
# configuration of the block is annihilated, not merely decoupled from the
# computational states; the action on the qubit sector is unchanged.
_QUBIT = np.diag([1.0, 1.0, 0.0]).astype(complex)


def h3(pair: int, vartheta: float, layout: ChainLayout) -> np.ndarray:
    """Full-chain three-site XY Hamiltonian for the coupling on pair l'.

    Acts on sites (2l'-1, 2l', 2l'+1) with hopping amplitudes -cos(v/2) on
    the left bond and +sin(v/2) on the right bond.  Commutes with the block
    pseudo-spin S_z and annihilates every basis state carrying |e> on any
    of the three sites.
    """
    if not np.isfinite(vartheta):
        raise ValueError("vartheta must be finite")
    left, _, _ = layout.sites_of_pair(pair)
    half = 0.5 * vartheta
    block = -np.cos(half) * np.kron(_HOP, _QUBIT) + np.sin(half) * np.kron(_QUBIT, _HOP)
    return embed(block, left, layout)


def block_sz(pair: int, layout: ChainLayout) -> np.ndarray:
    """Embedded total pseudo-spin S_z = (sz + sz + sz)/2 over a pair's three sites."""
    sites = layout.sites_of_pair(pair)
    out = np.zeros((layout.dim, layout.dim), dtype=complex)
    for site in sites:
        out += 0.5 * embed(SIGMA_Z3, site, layout)
    return out


def logical_encode(bits, layout: ChainLayout) -> np.ndarray:
    """Chain basis state with qubit values on odd sites and |0> elsewhere."""
    psi = np.zeros(layout.dim, dtype=complex)
    psi[layout.logical_index(bits)] = 1.0
    return psi


def normalize_bloch_angles(theta: float, phi: float) -> tuple[float, float]:
    """Canonical (theta, phi) with theta in [0, pi], phi in [0, 2*pi).

    The returned pair points at the same Bloch vector as the input; use for
    stable comparisons and reports.  Hamiltonian builders take raw angles
    (the map below can flip the sign of the drive, which leaves every
    pi-area gate unchanged but matters for partial-area propagators).
    """
    theta = float(theta) % (2.0 * np.pi)
    phi = float(phi)
    if theta > np.pi:
        theta = 2.0 * np.pi - theta
        phi += np.pi
    return theta, phi % (2.0 * np.pi)
