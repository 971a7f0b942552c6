"""Independent reference computations used to freeze expected values.

Nothing here imports the package under test.
"""

import itertools

import numpy as np


def constants_from_matrices(basis):
    """Structure constants of a matrix Lie algebra from commutators of its basis.

    Solves [B_i, B_j] = sum_k C_ijk B_k by least squares and rounds, since
    every catalog algebra has integer constants.
    """
    basis = [np.asarray(b, dtype=float) for b in basis]
    m = len(basis)
    flat = np.stack([b.ravel() for b in basis], axis=1)
    c = np.zeros((m, m, m))
    for i, j in itertools.product(range(m), repeat=2):
        comm = basis[i] @ basis[j] - basis[j] @ basis[i]
        coeffs, *_ = np.linalg.lstsq(flat, comm.ravel(), rcond=None)
        assert np.allclose(flat @ coeffs, comm.ravel()), "basis not closed under commutator"
        c[i, j] = coeffs
    return np.round(c, 12)


def unit(n, i, j):
    e = np.zeros((n, n))
    e[i, j] = 1.0
    return e


def so3_matrix_basis():
    # L_k v = e_k x v
    basis = []
    for k in range(3):
        ek = np.eye(3)[k]
        basis.append(np.column_stack([np.cross(ek, np.eye(3)[j]) for j in range(3)]))
    return basis


SL2_BASIS = [np.diag([1.0, -1.0]), unit(2, 0, 1), unit(2, 1, 0)]
GL2_BASIS = [unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)]
HEISENBERG_BASIS = [unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)]
UPPER2_BASIS = [unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 1)]


def bracket_loops(c, x, y):
    m = len(x)
    out = [0.0] * m
    for i in range(m):
        for j in range(m):
            for k in range(m):
                out[k] += x[i] * y[j] * c[i][j][k]
    return np.array(out)


def jacobi_residuals_loops(c):
    """Brute-force Jacobi residual vector for every basis triple, via nested loops."""
    c = np.asarray(c, dtype=float)
    m = c.shape[0]
    e = np.eye(m)
    out = {}
    for i, j, k in itertools.product(range(m), repeat=3):
        r = (
            bracket_loops(c, bracket_loops(c, e[i], e[j]), e[k])
            + bracket_loops(c, bracket_loops(c, e[j], e[k]), e[i])
            + bracket_loops(c, bracket_loops(c, e[k], e[i]), e[j])
        )
        out[(i, j, k)] = r
    return out


def central_jacobian(f, x, h=1e-6):
    x = np.asarray(x, dtype=float)
    cols = []
    for j in range(len(x)):
        d = np.zeros_like(x)
        d[j] = h
        cols.append((f(x + d) - f(x - d)) / (2 * h))
    return np.column_stack(cols)


def rodrigues(axis, theta):
    """Rotation by ``theta`` about unit ``axis``."""
    k = np.asarray(axis, dtype=float)
    k = k / np.linalg.norm(k)
    K = np.array([[0, -k[2], k[1]], [k[2], 0, -k[0]], [-k[1], k[0], 0]])
    return np.eye(3) + np.sin(theta) * K + (1 - np.cos(theta)) * K @ K
