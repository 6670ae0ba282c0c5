"""Independent reference computations used to pin expected test values.

These deliberately avoid the library's own code paths: the matrix
exponential is a Taylor sum, embeddings are brute-force Kronecker products,
and entropies come straight from an SVD of the amplitude matrix.
"""

import numpy as np


def taylor_expm(H, t):
    """exp(-i t H) by direct Taylor summation to machine convergence."""
    H = np.asarray(H, dtype=complex)
    A = -1j * t * H
    term = np.eye(H.shape[0], dtype=complex)
    out = term.copy()
    for k in range(1, 500):
        term = term @ A / k
        out = out + term
        if np.linalg.norm(term) < 1e-20 * max(1.0, np.linalg.norm(out)):
            break
    return out


def kron_chain(site_ops):
    """Kronecker product of per-site operators, site 1 leftmost."""
    out = np.asarray(site_ops[0], dtype=complex)
    for op in site_ops[1:]:
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def brute_embed(op, start_site, n_sites):
    """Embed a single-site 3x3 operator by explicit Kronecker product."""
    ops = [np.eye(3)] * n_sites
    ops[start_site - 1] = op
    return kron_chain(ops)


def haar_unitary(dim, rng):
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    Z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    Q, R = np.linalg.qr(Z)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def random_hermitian(dim, rng):
    A = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return 0.5 * (A + A.conj().T)


def random_unit_vector(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def svd_entropy(state4):
    """Entanglement entropy of a two-qubit pure state from raw SVD."""
    s = np.linalg.svd(np.asarray(state4, dtype=complex).reshape(2, 2), compute_uv=False)
    p = s**2
    p = p[p > 1e-300]
    return float(-np.sum(p * np.log(p)))
