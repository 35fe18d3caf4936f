"""Tensor factorization through formally real parts, and the one-particle Fock sector.

Only the vacuum and one-particle states are represented. Their scalar
product and the annihilation rule are taken as defining relations:

    (Psi(f), Psi(g)) = (2 (f, g) + (g, f)) / 3
    a(f) Psi(g)      = Psi_0 (2 (f, g) + (g, f)) / 3

The occupation-number factor ``lambda`` of the deformed commutation
relation cannot be fixed inside this sector, and is reported as
unconstrained rather than assigned a value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import qmul
from .errors import LengthMismatch, WrongSector
from .qmodule import (
    as_qvector,
    formally_real_decompose,
    standard_left_algebra,
)

VACUUM = "vacuum"
ONE_PARTICLE = "one-particle"


@dataclass(frozen=True)
class TensorFactorization:
    """Blocks ``f_i (x) g_j`` of real outer products, labelled by ``e_i (x) e_j``."""

    real_parts: np.ndarray  # (4, 4, n, m)
    f_parts: np.ndarray  # (4, n) real
    g_parts: np.ndarray  # (4, m) real

    @property
    def algebra_labels(self):
        return [(i, j) for i in range(4) for j in range(4)]

    def nonzero_blocks(self, tol=0.0):
        return [(i, j) for i, j in self.algebra_labels if np.max(np.abs(self.real_parts[i, j])) > tol]

    def contract(self):
        """The real tensor ``T[a, b, i, j] = f[a]_i g[b]_j`` in H (x)_R H per component pair."""
        return np.einsum("ijab->abij", self.real_parts)

    def reconstruct_pair(self):
        f = np.zeros((self.f_parts.shape[1], 4))
        g = np.zeros((self.g_parts.shape[1], 4))
        f[:, :] = self.f_parts.T
        g[:, :] = self.g_parts.T
        return f, g


def tensor_decompose(f, g):
    f, g = as_qvector(f), as_qvector(g)
    fp = formally_real_decompose(f, standard_left_algebra(f.shape[0])).parts
    gp = formally_real_decompose(g, standard_left_algebra(g.shape[0])).parts
    fr = np.array([p[:, 0] for p in fp])
    gr = np.array([p[:, 0] for p in gp])
    blocks = np.einsum("ia,jb->ijab", fr, gr)
    return TensorFactorization(real_parts=blocks, f_parts=fr, g_parts=gr)


def one_particle_inner(f, g):
    """``(2 (f, g) + (g, f)) / 3``; real part ``Re (f, g)``, imaginary part a third of ``Im (f, g)``."""
    f, g = as_qvector(f), as_qvector(g)
    if f.shape[0] != g.shape[0]:
        raise LengthMismatch(f"vector lengths differ: {f.shape[0]} vs {g.shape[0]}")
    # each term below is an exact antisymmetric difference, so f == g gives exact zeros
    a0, av = f[:, :1], f[:, 1:]
    b0, bv = g[:, :1], g[:, 1:]
    im = (a0 * bv - b0 * av - np.cross(av, bv)).sum(axis=0)
    out = np.empty(4)
    out[0] = np.sum(f * g)
    out[1:] = im / 3.0
    return out


@dataclass(frozen=True)
class FockState:
    sector: str
    payload: np.ndarray | None = None  # generating vector for one-particle states
    amplitude: np.ndarray | None = None  # coefficient against Psi_0 for vacuum-sector states

    @classmethod
    def vacuum(cls, amplitude=(1.0, 0.0, 0.0, 0.0)):
        return cls(VACUUM, amplitude=np.asarray(amplitude, dtype=float))

    @classmethod
    def one_particle(cls, f):
        return cls(ONE_PARTICLE, payload=as_qvector(f).copy())

    def is_zero(self, tol=0.0):
        if self.sector == VACUUM:
            return float(np.max(np.abs(self.amplitude))) <= tol
        return float(np.max(np.abs(self.payload))) <= tol

    def norm(self):
        if self.sector == VACUUM:
            return float(np.sqrt(np.sum(np.square(self.amplitude))))
        return float(np.sqrt(one_particle_inner(self.payload, self.payload)[0]))

    def to_dict(self):
        return {
            "sector": self.sector,
            "amplitude": None if self.amplitude is None else self.amplitude.tolist(),
            "payload": None if self.payload is None else self.payload.tolist(),
        }

    @classmethod
    def from_dict(cls, d):
        sector = d["sector"]
        if sector not in (VACUUM, ONE_PARTICLE):
            raise ValueError(f"unknown sector {sector!r}")
        amp = d.get("amplitude")
        pay = d.get("payload")
        return cls(
            sector,
            payload=None if pay is None else as_qvector(pay),
            amplitude=None if amp is None else np.asarray(amp, dtype=float),
        )


def annihilate_one(f, state):
    """``a(f)`` on the vacuum (gives zero) or on a one-particle state (gives a vacuum multiple)."""
    if state.sector == VACUUM:
        return FockState.vacuum(np.zeros(4))
    if state.sector != ONE_PARTICLE:
        raise WrongSector(f"annihilation is defined on vacuum and one-particle states, got {state.sector!r}")
    return FockState.vacuum(one_particle_inner(f, state.payload))


def create_one(g, state):
    """``a^dagger(g)`` on the vacuum; higher occupations are outside the implemented sector."""
    if state.sector != VACUUM:
        raise WrongSector("creation is only implemented on the vacuum")
    if not np.array_equal(state.amplitude, np.array([1.0, 0.0, 0.0, 0.0])):
        raise WrongSector("creation on a rephased vacuum needs the vacuum phase, which is not modelled")
    return FockState.one_particle(g)


@dataclass(frozen=True)
class DeformedRelationProbe:
    F_vacuum: np.ndarray
    lambda_status: str
    normal_order_vacuum: np.ndarray  # a(f) a^dagger(g) Psi_0 amplitude
    reverse_order_vacuum: np.ndarray  # a^dagger(g) a(f) Psi_0 amplitude (zero)

    def to_dict(self):
        return {
            "F_vacuum": self.F_vacuum.tolist(),
            "lambda_status": self.lambda_status,
            "normal_order_vacuum": self.normal_order_vacuum.tolist(),
            "reverse_order_vacuum": self.reverse_order_vacuum.tolist(),
        }


def deformed_relation_probe(f, g):
    """Evaluate ``a(f) a^dagger(g) -/+ lambda a^dagger(g) a(f)`` on the vacuum.

    The second ordering annihilates the vacuum first, so ``lambda`` drops
    out and the vacuum matrix element gives ``F(f, g)`` alone.
    """
    vac = FockState.vacuum()
    forward = annihilate_one(f, create_one(g, vac))
    # a(f) Psi_0 = 0, and a^dagger(g) of the zero state is zero
    reverse = annihilate_one(f, vac).amplitude
    return DeformedRelationProbe(
        F_vacuum=forward.amplitude,
        lambda_status="unconstrained",
        normal_order_vacuum=forward.amplitude,
        reverse_order_vacuum=reverse,
    )


def linearity_deficit(f, g, q):
    """``|(Psi(f), Psi(g q)) - (Psi(f), Psi(g)) q|``: nonzero in general."""
    g = as_qvector(g)
    lhs = one_particle_inner(f, qmul(g, np.asarray(q, dtype=float)))
    rhs = qmul(one_particle_inner(f, g), np.asarray(q, dtype=float))
    return float(np.sqrt(np.sum(np.square(lhs - rhs))))
