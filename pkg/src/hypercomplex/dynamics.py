"""Quaternionic Schroedinger dynamics and the optical-potential reduction.

Time evolution solves ``d psi / dt = -H psi`` for anti-self-adjoint ``H``.
Splitting ``H = e1 H1 + e2 Hbeta`` and ``psi = psi_alpha + e2 psi_beta``
turns the stationary equation into a pair of complex equations; solving
the second for ``psi_beta`` leaves an energy-dependent effective
Hamiltonian on ``psi_alpha`` whose extra term is the optical potential.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import least_squares

from .algebra import qmul, split_array
from .errors import NotEigenpair, ResonanceOffGrid, SingularOpticalDenominator
from .qmodule import (
    OperatorSplit,
    as_qvector,
    check_antihermitian,
    complex_embedding,
    operator_symplectic_split,
    qinner,
    right_scale,
)
from .spectral import branch_residual, eigensystem_antihermitian

COND_LIMIT = 1e12
OSCILLATION_THRESHOLD = 0.02


def _exp_e1(angles):
    """``exp(e1 * angle)`` as quaternion arrays."""
    angles = np.asarray(angles, dtype=float)
    out = np.zeros(angles.shape + (4,))
    out[..., 0] = np.cos(angles)
    out[..., 1] = np.sin(angles)
    return out


def evolve(h, psi0, t, system=None):
    """``exp(-H t) psi0`` through the eigensystem of ``H``.

    Each eigenvector picks up ``exp(-e1 E_k t)`` on the right, between the
    vector and its expansion coefficient.
    """
    psi0 = as_qvector(psi0)
    if system is None:
        system = eigensystem_antihermitian(h)
    out = np.zeros_like(psi0)
    for p, e in system.pairs:
        c = qinner(p, psi0)
        out += right_scale(p, qmul(_exp_e1(-e * t), c))
    return out


# ---------------------------------------------------------------------------
# optical potential

@dataclass(frozen=True)
class OpticalPotential:
    H_eff: np.ndarray
    V_opt: np.ndarray
    energy: float
    condition: float
    antihermitian_norm: float  # ||(H_eff - H_eff^dagger) / 2||_F


def optical_potential(split, energy, cond_limit=COND_LIMIT):
    """``H_eff(E) = H1 + Hbeta^* (E + H1^*)^-1 Hbeta`` with ``*`` flipping ``e1``."""
    h1 = np.asarray(split.H1, dtype=complex)
    hb = np.asarray(split.Hbeta, dtype=complex)
    denom = energy * np.eye(h1.shape[0]) + h1.conj()
    cond = float(np.linalg.cond(denom))
    if not np.isfinite(cond) or cond > cond_limit:
        raise SingularOpticalDenominator(f"E + H1* has condition number {cond:.3e} at E={energy}")
    v_opt = hb.conj() @ np.linalg.solve(denom, hb)
    h_eff = h1 + v_opt
    anti = 0.5 * (h_eff - h_eff.conj().T)
    return OpticalPotential(h_eff, v_opt, float(energy), cond, float(np.linalg.norm(anti)))


@dataclass(frozen=True)
class ReductionReport:
    psi_alpha: np.ndarray
    psi_beta: np.ndarray
    E: float
    residual_19a: float
    residual_19b: float
    residual_20: float
    eigen_residual: float

    def passed(self, tol=1e-8):
        return max(self.residual_19a, self.residual_19b, self.residual_20) < tol


def verify_reduction(h, psi, energy, tol=1e-8):
    """Check the component equations and the effective-Hamiltonian equation for one eigenpair.

    The component equations are
    ``e1 H1 a - Hbeta^* b = e1 E a`` and ``-e1 H1^* b + Hbeta a = e1 E b``
    with ``a = psi_alpha`` and ``b = psi_beta``.
    """
    h = check_antihermitian(h)
    psi = as_qvector(psi)
    scale = max(1.0, float(np.max(np.abs(h))))
    eig_res = branch_residual(h, psi, energy)
    if eig_res > tol * scale:
        raise NotEigenpair(f"standard-form residual {eig_res:.3e} exceeds {tol:.1e}")
    split = operator_symplectic_split(h)
    h1, hb = split.H1, split.Hbeta
    a, b = split_array(psi)
    r19a = np.linalg.norm(1j * h1 @ a - hb.conj() @ b - 1j * energy * a)
    r19b = np.linalg.norm(-1j * h1.conj() @ b + hb @ a - 1j * energy * b)
    try:
        heff = optical_potential(split, energy).H_eff
        r20 = float(np.linalg.norm(heff @ a - energy * a))
    except SingularOpticalDenominator:
        r20 = float("nan")
    return ReductionReport(a, b, float(energy), float(r19a), float(r19b), r20, eig_res)


def treversal_witness(h_eff):
    """``||H - conj(H)||_F / ||H||_F`` in the supplied basis (``conj``: e1 -> -e1)."""
    h_eff = np.asarray(h_eff, dtype=complex)
    n = np.linalg.norm(h_eff)
    if n == 0:
        return 0.0
    return float(np.linalg.norm(h_eff - h_eff.conj()) / n)


# ---------------------------------------------------------------------------
# quaternionic Lee-Friedrichs model

PROFILES = ("flat", "sine")


@dataclass(frozen=True)
class LFModel:
    """Discrete level ``omega0`` coupled only to a continuum on ``(E_min, E_max)``.

    ``g_alpha`` couples through ``e1 H1`` (the complex sector), ``g_beta``
    through ``e2 Hbeta``. Couplings are scaled by ``sqrt(dE)`` so the
    discretized continuum approximates a fixed spectral density. The
    ``sine`` profile multiplies both couplings by ``sin(pi x)``,
    ``x = (E - E_min) / (E_max - E_min)``, which switches them off at the
    band edges.
    """

    omega0: float = 1.0
    E_min: float = 0.05
    E_max: float = 4.0
    m: int = 300
    g_alpha: complex = 0.3
    g_beta: complex = 0.3
    profile: str = "sine"

    def __post_init__(self):
        if self.profile not in PROFILES:
            raise ValueError(f"unknown profile {self.profile!r}; expected one of {PROFILES}")
        if not 0 < self.E_min < self.E_max:
            raise ValueError("continuum needs 0 < E_min < E_max")
        if self.m < 2:
            raise ValueError("continuum needs at least two points")

    @property
    def de(self):
        return (self.E_max - self.E_min) / self.m

    @property
    def energies(self):
        return self.E_min + (np.arange(self.m) + 0.5) * self.de

    def shape(self):
        if self.profile == "flat":
            return np.ones(self.m)
        x = (self.energies - self.E_min) / (self.E_max - self.E_min)
        return np.sin(np.pi * x)

    def coupling_alpha(self):
        return self.g_alpha * self.shape() * np.sqrt(self.de)

    def coupling_beta(self):
        return self.g_beta * self.shape() * np.sqrt(self.de)

    def split(self):
        n = self.m + 1
        h1 = np.zeros((n, n), dtype=complex)
        hb = np.zeros((n, n), dtype=complex)
        h1[0, 0] = self.omega0
        idx = np.arange(1, n)
        h1[idx, idx] = self.energies
        ga, gb = self.coupling_alpha(), self.coupling_beta()
        h1[idx, 0] = ga
        h1[0, idx] = np.conj(ga)
        hb[idx, 0] = gb
        hb[0, idx] = gb
        return OperatorSplit(H1=h1, Hbeta=hb)

    def hamiltonian(self):
        return self.split().reconstruct()

    def to_config(self):
        def enc(z):
            z = complex(z)
            return z.real if z.imag == 0 else [z.real, z.imag]

        return {
            "omega0": self.omega0,
            "E_min": self.E_min,
            "E_max": self.E_max,
            "m": self.m,
            "g_alpha": enc(self.g_alpha),
            "g_beta": enc(self.g_beta),
            "profile": self.profile,
        }

    @classmethod
    def from_config(cls, cfg):
        def dec(v):
            return complex(v[0], v[1]) if isinstance(v, (list, tuple)) else v

        kw = dict(cfg)
        for key in ("g_alpha", "g_beta"):
            if key in kw:
                kw[key] = dec(kw[key])
        return cls(**kw)


def survival_amplitudes(model, tgrid):
    """Quaternion amplitudes ``(psi_d, psi(t))`` as complex ``(alpha, beta)`` arrays."""
    if not model.E_min < model.omega0 < model.E_max:
        raise ResonanceOffGrid(f"omega0={model.omega0} outside ({model.E_min}, {model.E_max})")
    h = check_antihermitian(model.hamiltonian())
    n = h.shape[0]
    k = -1j * complex_embedding(h)
    w, v = np.linalg.eigh(0.5 * (k + k.conj().T))
    # embedded initial state is alpha_d = unit vector 0; read alpha_d and beta_d
    c = v[0, :].conj()
    phases = np.exp(-1j * np.outer(w, np.asarray(tgrid, dtype=float)))
    alpha = (v[0, :] * c) @ phases
    beta = (v[n, :] * c) @ phases
    return alpha, beta


def lee_friedrichs_survival(model, tgrid, projection="quaternionic"):
    """Survival probability of the discrete state.

    ``projection="quaternionic"`` gives ``|(psi_d, psi(t))|^2``, the full
    quaternion modulus. ``projection="complex"`` keeps only the span{1, e1}
    part of the amplitude, the probability of finding the system in the
    discrete state's complex sector. The +omega0 / -omega0 interference
    shows up in the complex-sector law; in the full modulus it cancels
    against the e2 component to leading order.
    """
    alpha, beta = survival_amplitudes(model, tgrid)
    if projection == "complex":
        return np.abs(alpha) ** 2
    if projection == "quaternionic":
        return np.abs(alpha) ** 2 + np.abs(beta) ** 2
    raise ValueError(f"unknown projection {projection!r}")


@dataclass(frozen=True)
class OscillationFit:
    c: float
    gamma: float
    omega: float
    phi: float
    log_amplitude: float
    extra: dict = field(default_factory=dict)

    def oscillates(self, threshold=OSCILLATION_THRESHOLD):
        return self.c > threshold


def oscillation_score(tgrid, survival, t_min=None, n_omega=800):
    """Fit ``A exp(-gamma t) (1 + c cos(omega t + phi))`` on the log scale.

    A scan over ``omega`` (envelope and sinusoid solved jointly by linear
    least squares at each frequency) seeds a nonlinear refinement of the
    exact log model. Frequencies run from two periods per window up to half
    the Nyquist frequency, so envelope curvature is not read as
    oscillation and the sinusoid never aliases onto the constant term.
    Samples before ``t_min`` (the short-time, non-pole transient) are
    dropped.
    """
    t = np.asarray(tgrid, dtype=float)
    p = np.asarray(survival, dtype=float)
    if t_min is not None:
        keep = t >= t_min
        t, p = t[keep], p[keep]
    if np.any(p <= 0):
        raise ValueError("survival must stay positive for a log-envelope fit")
    lp = np.log(p)
    span = t[-1] - t[0]
    dt = np.max(np.diff(t))
    omegas = np.linspace(4 * np.pi / span, 0.5 * np.pi / dt, n_omega)

    ones = np.ones_like(t)
    cos = np.cos(np.outer(omegas, t))
    sin = np.sin(np.outer(omegas, t))
    design = np.stack([np.broadcast_to(ones, cos.shape), np.broadcast_to(-t, cos.shape), cos, sin], axis=1)
    gram = design @ design.transpose(0, 2, 1)
    rhs = design @ lp
    coef = np.linalg.solve(gram, rhs[..., None])[..., 0]
    amps = np.hypot(coef[:, 2], coef[:, 3])
    k = int(np.argmax(amps))
    c0, om0 = float(amps[k]), float(omegas[k])
    phi0 = float(np.arctan2(-coef[k, 3], coef[k, 2]))

    def resid(q):
        la, g, c, om, ph = q
        return la - g * t + np.log1p(c * np.cos(om * t + ph)) - lp

    dom = omegas[1] - omegas[0]
    lo = [-np.inf, -np.inf, 0.0, max(omegas[0], om0 - 5 * dom), -np.inf]
    hi = [np.inf, np.inf, 0.95, min(omegas[-1], om0 + 5 * dom), np.inf]
    x0 = [coef[k, 0], coef[k, 1], min(c0, 0.9), om0, phi0]
    x0[3] = float(np.clip(x0[3], lo[3] + 1e-9 * dom, hi[3] - 1e-9 * dom))
    fit = least_squares(resid, x0, bounds=(lo, hi))
    la, g, c, om, ph = fit.x
    return OscillationFit(
        c=float(c),
        gamma=float(g),
        omega=float(om),
        phi=float(ph),
        log_amplitude=float(la),
        extra={"scan_c": c0, "rms": float(np.sqrt(np.mean(fit.fun**2)))},
    )
