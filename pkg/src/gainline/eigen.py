"""Eigenvalues of real symmetric matrices by the cyclic Jacobi rotation method."""

from __future__ import annotations

import math

import numpy as np

from .errors import StructuralError

MAX_SWEEPS = 100


def jacobi_eigenvalues(matrix, tol: float = 1e-13) -> list[float]:
    """All eigenvalues of a symmetric matrix, ascending.

    Each sweep zeroes every off-diagonal pair once with a plane rotation.
    Iteration stops when the off-diagonal Frobenius norm is below
    ``tol`` times the full norm.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise StructuralError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise StructuralError("matrix must be symmetric")
    n = a.shape[0]
    if n == 0:
        return []
    scale = max(float(np.sqrt((a * a).sum())), 1.0)

    for _ in range(MAX_SWEEPS):
        off = float(np.sqrt(np.square(a - np.diag(np.diag(a))).sum()))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-17 * scale:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J with J the rotation in the (p, q) plane
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    else:
        raise StructuralError("Jacobi iteration did not converge")
    return sorted(float(x) for x in np.diag(a))
