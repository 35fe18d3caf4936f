"""Finite-dimensional quaternionic Hilbert module.

Vectors are arrays of shape (n, 4) with quaternion scalars acting on the
right; operators are (n, n, 4) arrays acting by matrix multiplication from
the left, which makes them quaternion linear: ``M(f a) = (M f) a``.

Elements of the commutative subalgebra span{1, e1} are represented as
Python/numpy complex numbers with ``e1`` as the imaginary unit. Every
quaternion splits as ``alpha + e2 beta`` over that subalgebra, and this
split is the bridge to complex linear algebra used by the eigensolver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import conj, join_array, qmul, quaternion_basis, split_array
from .errors import (
    DependentSet,
    LengthMismatch,
    NotAntiHermitian,
    NotNormalized,
    UnsupportedAlgebra,
)

ANTIHERMITIAN_TOL = 1e-10
GS_TOL = 1e-10


def as_qvector(f):
    f = np.asarray(f, dtype=float)
    if f.ndim != 2 or f.shape[1] != 4:
        raise ValueError(f"QVector must have shape (n, 4), got {f.shape}")
    return f


def as_qmatrix(m):
    m = np.asarray(m, dtype=float)
    if m.ndim != 3 or m.shape[0] != m.shape[1] or m.shape[2] != 4:
        raise ValueError(f"QMatrix must have shape (n, n, 4), got {m.shape}")
    return m


def real_qmatrix(a):
    """Promote a real (n, n) array to a QMatrix."""
    a = np.asarray(a, dtype=float)
    out = np.zeros(a.shape + (4,))
    out[..., 0] = a
    return out


def unit_times(i, a):
    """QMatrix/QVector whose entries are ``e_i`` times the real array ``a``."""
    a = np.asarray(a, dtype=float)
    out = np.zeros(a.shape + (4,))
    out[..., i] = a
    return out


def _check_lengths(f, g):
    if f.shape[0] != g.shape[0]:
        raise LengthMismatch(f"vector lengths differ: {f.shape[0]} vs {g.shape[0]}")


def qinner(f, g):
    f, g = as_qvector(f), as_qvector(g)
    _check_lengths(f, g)
    return qmul(conj(f), g).sum(axis=0)


def qnorm(f):
    return float(np.sqrt(np.sum(np.square(f))))


def right_scale(f, a):
    return qmul(f, np.asarray(a, dtype=float))


def left_scale(a, f):
    return qmul(np.asarray(a, dtype=float), f)


def matvec(m, f):
    return qmul(m, f[None, :, :]).sum(axis=1)


def matmul(m, n):
    return qmul(m[:, :, None, :], n[None, :, :, :]).sum(axis=1)


def identity(n):
    return real_qmatrix(np.eye(n))


def adjoint(m):
    """Conjugate transpose, so that ``(M f, g) = (f, M^dagger g)``."""
    return conj(np.swapaxes(as_qmatrix(m), 0, 1))


def antihermitian_defect(m):
    m = as_qmatrix(m)
    return float(np.max(np.abs(m + adjoint(m)), initial=0.0))


def check_antihermitian(m, tol=ANTIHERMITIAN_TOL):
    m = as_qmatrix(m)
    scale = max(1.0, float(np.max(np.abs(m), initial=0.0)))
    if antihermitian_defect(m) > tol * scale:
        raise NotAntiHermitian(f"anti-Hermiticity defect {antihermitian_defect(m):.3e}")
    return m


def gram_schmidt(vs, tol=GS_TOL):
    """Orthonormalize over right quaternion multiples.

    Raises ``DependentSet`` when a residual falls below ``tol`` times the
    norm of the input vector it came from.
    """
    out = []
    for k, v in enumerate(vs):
        v = as_qvector(v)
        h = v.copy()
        for phi in out:
            h = h - right_scale(phi, qinner(phi, h))
        n = qnorm(h)
        if n < tol * max(qnorm(v), np.finfo(float).tiny):
            raise DependentSet(f"vector {k} lies in the span of the previous ones")
        out.append(h / n)
    return out


# ---------------------------------------------------------------------------
# left algebras

class LeftAlgebra:
    """Real-linear left action ``E_1, E_2, E_3`` isomorphic to the quaternions.

    The standard algebra multiplies every component by ``e_i`` from the
    left. A conjugated algebra ``U E_i U^dagger`` is described by the
    quaternion-linear unitary ``conjugator``. Algebras built from raw
    real-linear maps carry no conjugator and cannot be decomposed.
    """

    def __init__(self, n, conjugator=None, maps=None):
        self.n = n
        self.conjugator = None if conjugator is None else as_qmatrix(conjugator)
        self._maps = maps

    @property
    def is_standard(self):
        return self.conjugator is None and self._maps is None

    def apply(self, i, f):
        f = as_qvector(f)
        if i == 0:
            return f.copy()
        if self._maps is not None:
            return _from_real(self._maps[i - 1] @ _to_real(f))
        e = quaternion_basis(i)
        if self.conjugator is None:
            return left_scale(e, f)
        u = self.conjugator
        return matvec(u, left_scale(e, matvec(adjoint(u), f)))

    def real_matrix(self, i):
        """The map ``E_i`` as a real (4n, 4n) matrix on stacked coefficients."""
        basis = np.eye(4 * self.n)
        return np.array([_to_real(self.apply(i, _from_real(col))) for col in basis]).T

    @classmethod
    def from_maps(cls, maps):
        maps = [np.asarray(m, dtype=float) for m in maps]
        return cls(maps[0].shape[0] // 4, maps=maps)


def _to_real(f):
    return np.asarray(f, dtype=float).ravel()


def _from_real(x):
    return np.asarray(x, dtype=float).reshape(-1, 4)


def standard_left_algebra(n):
    if n < 1:
        raise ValueError("dimension must be positive")
    return LeftAlgebra(n)


@dataclass(frozen=True)
class FormallyRealParts:
    parts: tuple  # four QVectors with E_i f_i = f_i e_i
    algebra: LeftAlgebra

    def reconstruct(self):
        return sum(self.algebra.apply(i, p) for i, p in enumerate(self.parts))


def formally_real_decompose(f, algebra=None):
    """Unique parts ``f_i`` with ``f = sum_i E_i f_i`` and ``E_i f_i = f_i e_i``.

    For the standard algebra ``f_i`` is the real vector of i-th
    coefficients; a conjugated algebra transports those parts through its
    conjugator.
    """
    f = as_qvector(f)
    algebra = algebra or standard_left_algebra(f.shape[0])
    if algebra._maps is not None:
        raise UnsupportedAlgebra("decomposition needs a known conjugation to the standard algebra")
    base = f if algebra.conjugator is None else matvec(adjoint(algebra.conjugator), f)
    parts = [real_qmatrix(base[:, i]) for i in range(4)]
    if algebra.conjugator is not None:
        parts = [matvec(algebra.conjugator, p) for p in parts]
    return FormallyRealParts(tuple(parts), algebra)


# ---------------------------------------------------------------------------
# symplectic split of operators and the complex embedding

@dataclass(frozen=True)
class OperatorSplit:
    """``H = e1 H1 + e2 Hbeta`` with complex ``H1`` Hermitian and ``Hbeta`` symmetric."""

    H1: np.ndarray
    Hbeta: np.ndarray

    def reconstruct(self):
        return join_array(1j * self.H1, self.Hbeta)


def operator_symplectic_split(h, tol=ANTIHERMITIAN_TOL):
    h = check_antihermitian(h, tol)
    alpha, beta = split_array(h)
    return OperatorSplit(H1=-1j * alpha, Hbeta=beta)


def complex_embedding(m):
    """Complex (2n, 2n) image of a QMatrix, ``[[A, -B*], [B, A*]]`` for ``M = A + e2 B``.

    This is a real-algebra homomorphism compatible with ``embed_vector``:
    ``complex_embedding(M) @ embed_vector(f) == embed_vector(M f)``, and
    right multiplication of a vector by ``e1`` becomes multiplication by 1j.
    """
    a, b = split_array(as_qmatrix(m))
    return np.block([[a, -b.conj()], [b, a.conj()]])


def embed_vector(f):
    a, b = split_array(as_qvector(f))
    return np.concatenate([a, b])


def extract_vector(v):
    v = np.asarray(v, dtype=complex)
    n = v.shape[0] // 2
    return join_array(v[:n], v[n:])


def transition_probability(psi, chi, tol=1e-10):
    """``|(psi, chi)|^2`` for normalized vectors."""
    psi, chi = as_qvector(psi), as_qvector(chi)
    for name, v in (("psi", psi), ("chi", chi)):
        if abs(qnorm(v) - 1.0) > tol:
            raise NotNormalized(f"{name} has norm {qnorm(v)!r}")
    return float(np.sum(np.square(qinner(psi, chi))))
