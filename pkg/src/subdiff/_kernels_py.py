"""Pure NumPy/LAPACK fallback for the compiled kernel extension.

Implements the same three primitives as ``subdiff._kernels``:

* SPD tridiagonal solve (LAPACK ``dptsv``),
* batched complex-shifted tridiagonal solves (vectorised Thomas sweep
  across shifts; pivoting-free, valid because every shifted system
  ``z^alpha*M + S`` with SPD ``M``, ``S`` and ``z^alpha`` off the negative
  real axis has nonzero leading principal minors),
* the blocked history convolution used by the time stepper.
"""

import numpy as np
from scipy.linalg.lapack import dptsv

from .errors import SolverError

BACKEND_NAME = "python"


def solve_spd_tridiag(diag, off, rhs):
    """Solve the SPD tridiagonal system with diagonal `diag`, off-diagonal `off`."""
    if diag.shape[0] == 1:
        if diag[0] <= 0.0:
            raise SolverError("tridiagonal system is not positive definite")
        return rhs / diag[0]
    d, _, x, info = dptsv(diag, off, rhs)
    if info != 0:
        raise SolverError(f"dptsv failed with info={info}: system not SPD")
    return x


def solve_shifted_tridiag_many(mass_diag, mass_off, stiff_diag, stiff_off, shifts, rhs):
    """Solve (shift*M + S) x = rhs for every complex shift; returns (K, n)."""
    k = shifts.shape[0]
    n = mass_diag.shape[0]
    d = shifts[:, None] * mass_diag[None, :] + stiff_diag[None, :]
    x = np.empty((k, n), dtype=np.complex128)
    if n == 1:
        x[:, 0] = rhs[0] / d[:, 0]
        return x
    e = shifts[:, None] * mass_off[None, :] + stiff_off[None, :]
    # forward elimination, vectorised across the shift axis
    c = np.empty((k, n - 1), dtype=np.complex128)
    g = np.empty((k, n), dtype=np.complex128)
    c[:, 0] = e[:, 0] / d[:, 0]
    g[:, 0] = rhs[0] / d[:, 0]
    for i in range(1, n - 1):
        denom = d[:, i] - e[:, i - 1] * c[:, i - 1]
        c[:, i] = e[:, i] / denom
        g[:, i] = (rhs[i] - e[:, i - 1] * g[:, i - 1]) / denom
    denom = d[:, n - 1] - e[:, n - 2] * c[:, n - 2]
    g[:, n - 1] = (rhs[n - 1] - e[:, n - 2] * g[:, n - 2]) / denom
    x[:, n - 1] = g[:, n - 1]
    for i in range(n - 2, -1, -1):
        x[:, i] = g[:, i] - c[:, i] * x[:, i + 1]
    return x


def conv_history_block(phi, weights, n0, nrows, out):
    """out[i] = sum_{k<n0} weights[n0+i-k] * phi[k]  for i < nrows."""
    if n0 == 0:
        out[:nrows] = 0.0
        return
    w = weights[n0 + np.arange(nrows)[:, None] - np.arange(n0)[None, :]]
    np.matmul(w, phi[:n0], out=out[:nrows])


def conv_history_recent(phi, weights, n0, n, out):
    """out += sum_{k=n0..n-1} weights[n-k] * phi[k]."""
    r = n - n0
    if r <= 0:
        return
    out += weights[r:0:-1] @ phi[n0:n]
