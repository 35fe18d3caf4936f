"""Finite-dimensional octonionic vectors.

An ``OVector`` is an array of shape (n, 8); octonion scalars act on the
right componentwise. The inner product is ``(f, g) = sum_i f_i^* g_i``.
"""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import DEFAULT_TOL, conj, norm, octonion_basis, omul
from .errors import LengthMismatch, NotNormalized, ZeroDirection


def as_ovector(f):
    f = np.asarray(f, dtype=float)
    if f.ndim != 2 or f.shape[1] != 8:
        raise ValueError(f"OVector must have shape (n, 8), got {f.shape}")
    return f


def _check_lengths(f, g):
    if f.shape[0] != g.shape[0]:
        raise LengthMismatch(f"vector lengths differ: {f.shape[0]} vs {g.shape[0]}")


def oinner(f, g):
    f, g = as_ovector(f), as_ovector(g)
    _check_lengths(f, g)
    return omul(conj(f), g).sum(axis=0)


def onorm(f):
    return float(np.sqrt(np.sum(np.square(as_ovector(f)))))


def right_scale(f, a):
    """Componentwise ``f_i a``."""
    return omul(as_ovector(f), np.asarray(a, dtype=float))


def orthogonal_residual(g, f, tol=DEFAULT_TOL):
    """Split ``g = f a + h`` with ``(h, f) = 0``.

    ``a = (f, g) / ||f||^2`` minimizes ``||g - f a||``: left alternativity
    gives ``(f, f a) = ||f||^2 a``.
    """
    g, f = as_ovector(g), as_ovector(f)
    _check_lengths(f, g)
    nf2 = float(np.sum(f * f))
    if np.sqrt(nf2) < tol:
        raise ZeroDirection("cannot project onto a zero vector")
    a = oinner(f, g) / nf2
    h = g - right_scale(f, a)
    return a, h


def _unit_candidates():
    # 0, +1, -1, +e1, -e1, ..., +e7, -e7
    out = [np.zeros(8)]
    for i in range(8):
        e = octonion_basis(i)
        out.extend([e, -e])
    return out


def expansion_obstruction_demo(threshold=0.1):
    """First (lexicographic) orthonormal pair with ``(phi1, phi2 a) != 0``.

    Candidates are length-2 vectors whose entries come from
    ``{0, ±1, ±e1, ..., ±e7}``, normalized; ``a`` ranges over the same
    nonzero units. Returns ``(phi1, phi2, a, witness)``.
    """
    units = _unit_candidates()
    vectors = []
    for u, v in itertools.product(units, repeat=2):
        vec = np.array([u, v])
        n = onorm(vec)
        if n > 0:
            vectors.append(vec / n + 0.0)
    scalars = units[1:]
    for phi1 in vectors:
        for phi2 in vectors:
            if np.abs(oinner(phi1, phi2)).max() != 0.0:
                continue
            for a in scalars:
                witness = oinner(phi1, right_scale(phi2, a))
                if norm(witness) > threshold:
                    return phi1, phi2, a, witness
    raise RuntimeError("no obstruction witness in the search space")


def transition_probability_trace(psi, chi, tol=1e-10):
    """``Tr[(psi, chi)(chi, psi)]`` with ``Tr`` the real part."""
    psi, chi = as_ovector(psi), as_ovector(chi)
    for name, v in (("psi", psi), ("chi", chi)):
        if abs(onorm(v) - 1.0) > tol:
            raise NotNormalized(f"{name} has norm {onorm(v)!r}")
    return float(omul(oinner(psi, chi), oinner(chi, psi))[0])
