"""Spectral theory of anti-self-adjoint quaternionic operators.

The eigenproblem ``H psi = psi e1 E`` (``E >= 0``) is solved through the
complex embedding of ``qmodule``: right multiplication by ``e1`` becomes
multiplication by ``1j``, so ``-1j * chi(H)`` is Hermitian with spectrum
``{+E_k, -E_k}``. One representative per pair is mapped back. The
negative branch of every eigenvalue is reached by right multiplication
with ``e2``.

The module also holds the position-grid operators ``X``, ``S`` and
``P = hbar E1 S`` and the time operator on a symmetric energy grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import join_array, quaternion_basis, split_array
from .errors import (
    ConvergenceFailure,
    GridTooSmall,
    IncompleteSystem,
    NotNormalized,
    NotSelfAdjoint,
)
from .qmodule import (
    adjoint,
    as_qmatrix,
    as_qvector,
    check_antihermitian,
    complex_embedding,
    extract_vector,
    left_scale,
    matvec,
    qinner,
    qnorm,
    real_qmatrix,
    right_scale,
    unit_times,
)

ZERO_MODE_TOL = 1e-10
PAIR_TOL = 1e-8
RESIDUAL_CHECK = 1e-8

E1 = quaternion_basis(1)
E2 = quaternion_basis(2)


@dataclass(frozen=True)
class EigenSystem:
    """Orthonormal ``vectors[k]`` with ``H vectors[k] = vectors[k] e1 energies[k]``."""

    vectors: np.ndarray  # (k, n, 4)
    energies: np.ndarray  # (k,), ascending, >= 0

    def __len__(self):
        return len(self.energies)

    @property
    def pairs(self):
        return [(self.vectors[k], float(self.energies[k])) for k in range(len(self))]

    def to_records(self):
        return [{"E": float(e), "psi": v.tolist()} for v, e in self.pairs]


def branch_residual(h, psi, energy):
    """``||H psi - psi e1 E||`` for either sign of ``E``."""
    return qnorm(matvec(h, psi) - right_scale(psi, E1 * energy))


def _gauge_fix(psi):
    # rotate by a span{1,e1} phase so the largest alpha entry is real positive
    alpha, beta = split_array(psi)
    mags = np.abs(alpha) ** 2 + np.abs(beta) ** 2
    k = int(np.argmax(mags))
    z = alpha[k] if abs(alpha[k]) > 1e-8 * np.sqrt(mags[k]) else beta[k]
    if abs(z) == 0:
        return psi
    phase = np.conj(z) / abs(z)
    return join_array(alpha * phase, beta * phase)


def _orthonormalize_block(vectors, count, tol=1e-8):
    """Quaternionic Gram-Schmidt keeping the first ``count`` independent vectors."""
    out = []
    for v in vectors:
        h = v.copy()
        for phi in out:
            h = h - right_scale(phi, qinner(phi, h))
        n = qnorm(h)
        if n > tol:
            out.append(h / n)
        if len(out) == count:
            break
    if len(out) < count:
        raise ConvergenceFailure(f"degenerate block: found {len(out)} of {count} independent vectors")
    return out


def eigensystem_antihermitian(h, tol=1e-10):
    h = check_antihermitian(h, tol)
    n = h.shape[0]
    k = -1j * complex_embedding(h)
    k = 0.5 * (k + k.conj().T)
    w, v = np.linalg.eigh(k)
    scale = max(1.0, float(np.max(np.abs(w), initial=0.0)))
    zero_tol = ZERO_MODE_TOL * scale

    positive = [i for i in range(2 * n) if w[i] > zero_tol]
    negative = [i for i in range(2 * n) if w[i] < -zero_tol]
    if len(positive) != len(negative):
        raise ConvergenceFailure("embedded spectrum is not symmetric about zero")
    pos_vals = w[positive]
    neg_vals = np.sort(-w[negative])
    if np.max(np.abs(pos_vals - neg_vals), initial=0.0) > PAIR_TOL * scale:
        raise ConvergenceFailure("could not pair +E/-E eigenvalues")

    n_zero = n - len(positive)
    zero_idx = sorted(range(2 * n), key=lambda i: (abs(w[i]), i))[: 2 * n_zero]
    zero_vecs = [extract_vector(v[:, i]) for i in sorted(zero_idx)]
    vectors = _orthonormalize_block(zero_vecs, n_zero) if n_zero else []
    energies = [0.0] * n_zero

    # group positive eigenvalues into degenerate blocks
    blocks = []
    for i in positive:
        if blocks and w[i] - w[blocks[-1][-1]] <= PAIR_TOL * scale:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    for block in blocks:
        vecs = [extract_vector(v[:, i]) for i in block]
        vecs = _orthonormalize_block(vecs, len(block)) if len(block) > 1 else vecs
        vectors.extend(vecs)
        energies.extend(float(w[i]) for i in block)

    vectors = np.array([_gauge_fix(p) for p in vectors]).reshape(n, n, 4)
    energies = np.array(energies)
    for p, e in zip(vectors, energies):
        if branch_residual(h, p, e) > RESIDUAL_CHECK * scale:
            raise ConvergenceFailure(f"eigenpair residual {branch_residual(h, p, e):.3e} at E={e}")
    return EigenSystem(vectors=vectors, energies=energies)


def negative_branch(psi, energy):
    """``(psi e2, -E)``: the eigenvector for the mirrored eigenvalue."""
    return right_scale(as_qvector(psi), E2), -energy


def closure_defect(system, f):
    """``||sum_k psi_k (psi_k, f) - f||``."""
    f = as_qvector(f)
    rec = sum(right_scale(p, qinner(p, f)) for p in system.vectors)
    return qnorm(rec - f)


# ---------------------------------------------------------------------------
# energy representation

@dataclass(frozen=True)
class EnergyRep:
    """Complex (span{1, e1}) values on signed energies.

    ``values[k]`` belongs to ``+E_k`` and ``values[n + k]`` to ``-E_k``;
    ``branch`` records the sign explicitly so that zero modes, which put a
    value on both branches at ``E = 0``, still fold back unambiguously.
    """

    energies: np.ndarray
    values: np.ndarray
    branch: np.ndarray

    def fold(self):
        """Quaternion coefficients ``alpha_k + e2 beta_k`` against the eigenbasis."""
        n = len(self.values) // 2
        return join_array(self.values[:n], self.values[n:])

    def weight(self):
        return float(np.sum(np.abs(self.values) ** 2))


def energy_unfold(system, psi):
    psi = as_qvector(psi)
    if len(system) != psi.shape[0]:
        raise IncompleteSystem(f"{len(system)} eigenpairs for a {psi.shape[0]}-dimensional space")
    coeffs = np.array([qinner(p, psi) for p in system.vectors])
    alpha, beta = split_array(coeffs)
    return EnergyRep(
        energies=np.concatenate([system.energies, -system.energies]),
        values=np.concatenate([alpha, beta]),
        branch=np.concatenate([np.ones(len(system)), -np.ones(len(system))]).astype(int),
    )


def energy_fold(system, rep):
    """Rebuild the vector ``sum_k psi_k c_k`` from an unfolded representation."""
    c = rep.fold()
    return sum(right_scale(p, c[k]) for k, p in enumerate(system.vectors))


def symmetric_energy_grid(half_points, de):
    """Uniform grid ``(j + 1/2) dE`` for ``j = -half_points .. half_points - 1``."""
    j = np.arange(-half_points, half_points)
    return (j + 0.5) * de


def unfold_profile(q_values):
    """Quaternion profile on the positive half-grid -> complex profile on the full grid.

    ``alpha`` parts go to ``+E`` and ``beta`` parts to the mirrored ``-E``
    points, matching ``symmetric_energy_grid``'s ordering.
    """
    alpha, beta = split_array(np.asarray(q_values, dtype=float))
    return np.concatenate([beta[::-1], alpha])


def fold_profile(values):
    values = np.asarray(values, dtype=complex)
    m = len(values) // 2
    return join_array(values[m:], values[:m][::-1])


def _check_energy_grid(energies):
    energies = np.asarray(energies, dtype=float)
    if energies.ndim != 1 or energies.size < 5:
        raise GridTooSmall("time operator needs at least 5 grid points")
    d = np.diff(energies)
    if np.any(d <= 0) or np.max(np.abs(d - d[0])) > 1e-9 * abs(d[0]):
        raise GridTooSmall("energy grid must be uniform and increasing")
    if np.max(np.abs(energies + energies[::-1])) > 1e-9 * abs(d[0]) * energies.size:
        raise GridTooSmall("energy grid must be symmetric about zero")
    return energies, float(d[0])


def time_operator(energies):
    """Dense matrix of ``T = -e1 d/dE`` (central differences) on complex profiles.

    The first and last rows are zero: the central stencil is undefined
    there, and the commutator contract covers interior points only.
    """
    energies, de = _check_energy_grid(energies)
    m = energies.size
    d = np.zeros((m, m))
    idx = np.arange(1, m - 1)
    d[idx, idx + 1] = 1.0 / (2 * de)
    d[idx, idx - 1] = -1.0 / (2 * de)
    return -1j * d


def energy_hamiltonian(energies):
    """``H_E``: multiplication by ``e1 E``."""
    return np.diag(1j * np.asarray(energies, dtype=float))


def time_commutator_defect(energies, values):
    """Max interior magnitude of ``([T, H_E] - 1) v``."""
    t = time_operator(energies)
    h = energy_hamiltonian(energies)
    v = np.asarray(values, dtype=complex)
    r = t @ (h @ v) - h @ (t @ v) - v
    return float(np.max(np.abs(r[1:-1])))


# ---------------------------------------------------------------------------
# position grid

@dataclass(frozen=True)
class GridRep:
    n: int
    h: float
    boundary: str = "periodic"
    hbar: float = 1.0

    def __post_init__(self):
        if self.n < 3:
            raise GridTooSmall("position grid needs n >= 3")
        if not self.h > 0:
            raise ValueError("grid spacing must be positive")
        if self.boundary not in ("periodic", "dirichlet"):
            raise ValueError(f"unknown boundary {self.boundary!r}")
        if not self.hbar > 0:
            raise ValueError("hbar must be positive")

    @property
    def x(self):
        return (np.arange(self.n) - (self.n - 1) / 2) * self.h

    @property
    def length(self):
        return self.n * self.h


def derivative_matrix(rep):
    """Real antisymmetric central-difference matrix."""
    n = rep.n
    s = np.zeros((n, n))
    i = np.arange(n - 1)
    s[i, i + 1] = 1.0 / (2 * rep.h)
    s[i + 1, i] = -1.0 / (2 * rep.h)
    if rep.boundary == "periodic":
        s[n - 1, 0] = 1.0 / (2 * rep.h)
        s[0, n - 1] = -1.0 / (2 * rep.h)
    return s


def build_position(rep):
    return real_qmatrix(np.diag(rep.x))


def build_S(rep):
    return real_qmatrix(derivative_matrix(rep))


def build_momentum(rep):
    """``P = hbar E1 S``: each entry of ``S`` multiplied by ``hbar e1``."""
    return unit_times(1, rep.hbar * derivative_matrix(rep))


def apply_left_unit(i, f):
    return left_scale(quaternion_basis(i), f)


def commutator_defect(rep, psi):
    """``||([X, P] + hbar E1) psi||``."""
    psi = as_qvector(psi)
    x, p = build_position(rep), build_momentum(rep)
    xp = matvec(x, matvec(p, psi)) - matvec(p, matvec(x, psi))
    return qnorm(xp + rep.hbar * apply_left_unit(1, psi))


def gaussian_state(rep, sigma, x0=0.0, k0=0.0):
    """Normalized ``exp(-(x-x0)^2 / 4 sigma^2) exp(e1 k0 x)`` sampled on the grid."""
    x = rep.x
    amp = np.exp(-((x - x0) ** 2) / (4 * sigma**2)) * np.exp(1j * k0 * x)
    amp /= np.sqrt(np.sum(np.abs(amp) ** 2))
    return join_array(amp, np.zeros_like(amp))


def _expectation(a, psi):
    return qinner(psi, matvec(a, psi))


def uncertainty(psi, a, b, tol=1e-10):
    """Standard deviations ``(dA, dB)`` with ``dA = ||(A - <A>) psi||``."""
    psi = as_qvector(psi)
    a, b = as_qmatrix(a), as_qmatrix(b)
    if abs(qnorm(psi) - 1.0) > tol:
        raise NotNormalized(f"state has norm {qnorm(psi)!r}")
    out = []
    for m in (a, b):
        scale = max(1.0, float(np.max(np.abs(m))))
        if np.max(np.abs(m - adjoint(m))) > tol * scale:
            raise NotSelfAdjoint("operator is not self-adjoint")
        mean = _expectation(m, psi)[0]
        out.append(qnorm(matvec(m, psi) - mean * psi))
    return out[0], out[1]
