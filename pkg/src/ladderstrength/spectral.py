"""Cyclic Jacobi eigensolver for small dense symmetric matrices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import MAX_DIM

OFF_TOL = 1e-13
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Jacobi sweeps failed to reduce the off-diagonal norm within budget."""

    def __init__(self, residual: float, sweeps: int):
        self.residual = residual
        self.sweeps = sweeps
        super().__init__(
            f"Jacobi did not converge after {sweeps} sweeps "
            f"(relative off-diagonal norm {residual:.3e})"
        )


@dataclass(frozen=True)
class EigenSystem:
    """Ascending eigenvalues with sign-canonical unit eigenvectors.

    ``eigenvectors[:, k]`` belongs to ``eigenvalues[k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    def vector(self, k: int) -> np.ndarray:
        return self.eigenvectors[:, k]

    def __len__(self) -> int:
        return len(self.eigenvalues)


def canonical_sign(x: np.ndarray) -> np.ndarray:
    """Flip ``x`` so its largest-magnitude entry (lowest index on ties) is positive."""
    k = int(np.argmax(np.abs(x)))
    return -x if x[k] < 0 else x


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    if apq == 0.0:
        return
    app, aqq = a[p, p], a[q, q]
    # Rutishauser's stable form: t = tan(phi), smaller root
    h = aqq - app
    if abs(h) + 100.0 * abs(apq) == abs(h):
        t = apq / h
    else:
        theta = h / (2.0 * apq)
        t = 1.0 / (abs(theta) + np.hypot(1.0, theta))
        if theta < 0:
            t = -t
    c = 1.0 / np.hypot(1.0, t)
    s = t * c
    tau = s / (1.0 + c)

    ap = a[:, p].copy()
    aq = a[:, q].copy()
    a[:, p] = ap - s * (aq + tau * ap)
    a[:, q] = aq + s * (ap - tau * aq)
    a[p, :] = a[:, p]
    a[q, :] = a[:, q]
    a[p, p] = app - t * apq
    a[q, q] = aqq + t * apq
    a[p, q] = a[q, p] = 0.0

    vp = v[:, p].copy()
    vq = v[:, q].copy()
    v[:, p] = vp - s * (vq + tau * vp)
    v[:, q] = vq + s * (vp - tau * vq)


def jacobi_eigh(h, tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS):
    """Raw cyclic Jacobi: returns ``(diag, V, sweeps)`` with ``h = V diag V^T``.

    Sweeps continue past ``tol`` until the off-diagonal part is exhausted (or
    stops shrinking), which is what gives tiny eigenvector components their
    relative accuracy in the weak-coupling regime.
    """
    a = np.array(h, dtype=float, copy=True)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ValueError("matrix must be square")
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds {MAX_DIM}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    v = np.eye(n)
    scale = float(np.linalg.norm(a)) or 1.0
    off = _off_norm(a)
    sweeps = 0
    while off > 0.0 and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
        sweeps += 1
        new_off = _off_norm(a)
        if new_off <= tol * scale and new_off >= off * 0.5:
            off = new_off
            break
        off = new_off
    if off > tol * scale:
        raise ConvergenceError(off / scale, sweeps)
    return np.diag(a).copy(), v, sweeps


def decompose(h) -> EigenSystem:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Eigenvalues come back ascending; each eigenvector has its largest
    component positive.
    """
    d, v, sweeps = jacobi_eigh(h)
    order = np.argsort(d, kind="stable")
    vecs = v[:, order]
    for k in range(vecs.shape[1]):
        vecs[:, k] = canonical_sign(vecs[:, k])
    return EigenSystem(d[order], vecs, sweeps)


def ground_state(h) -> tuple[float, np.ndarray]:
    es = decompose(h)
    return float(es.eigenvalues[0]), es.vector(0).copy()
