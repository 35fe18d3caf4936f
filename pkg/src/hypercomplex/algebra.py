"""Quaternion and octonion scalar arithmetic.

Elements are stored as real coefficient arrays: ``[w, x, y, z]`` for a
quaternion ``w + x e1 + y e2 + z e3`` and ``[c0, ..., c7]`` for an octonion,
index ``i`` holding the coefficient of ``e_i``. The array functions
(``qmul``, ``omul``, ...) broadcast over leading axes, so they serve
vectors and matrices of scalars as well as single elements. The
``Quaternion`` and ``Octonion`` classes are thin immutable wrappers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NotImaginaryUnit, TableInconsistent

DEFAULT_TOL = 1e-12

# Seven defining products e_i e_j = e_k; the rest follow by cyclic
# permutation and antisymmetry.
OCTONION_LINES = (
    (1, 2, 3),
    (5, 1, 4),
    (4, 2, 6),
    (6, 3, 5),
    (6, 7, 1),
    (5, 7, 2),
    (4, 7, 3),
)


def _build_table(dim, lines):
    index = np.full((dim, dim), -1, dtype=np.int_)
    sign = np.zeros((dim, dim))
    index[0, :] = np.arange(dim)
    index[:, 0] = np.arange(dim)
    sign[0, :] = 1.0
    sign[:, 0] = 1.0
    for i in range(1, dim):
        index[i, i] = 0
        sign[i, i] = -1.0

    def put(i, j, k, s):
        if index[i, j] != -1 and (index[i, j] != k or sign[i, j] != s):
            raise TableInconsistent(f"conflicting products for e{i} e{j}")
        index[i, j] = k
        sign[i, j] = s

    for i, j, k in lines:
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            put(a, b, c, 1.0)
            put(b, a, c, -1.0)

    if (index < 0).any():
        missing = [(int(i), int(j)) for i, j in zip(*np.nonzero(index < 0))]
        raise TableInconsistent(f"undefined products: {missing}")
    for r in range(dim):
        if sorted(index[r]) != list(range(dim)) or sorted(index[:, r]) != list(range(dim)):
            raise TableInconsistent(f"row/column {r} is not a signed permutation")
    return index, sign


QUAT_INDEX, QUAT_SIGN = _build_table(4, [(1, 2, 3)])
OCT_INDEX, OCT_SIGN = _build_table(8, OCTONION_LINES)

if not (
    np.array_equal(OCT_INDEX[:4, :4], QUAT_INDEX) and np.array_equal(OCT_SIGN[:4, :4], QUAT_SIGN)
):
    raise TableInconsistent("octonion table does not restrict to the quaternion table on e1, e2, e3")


def basis_product(i, j, algebra="octonion"):
    """Return ``(k, s)`` with ``e_i e_j = s e_k`` as Python ints."""
    if algebra == "octonion":
        return int(OCT_INDEX[i, j]), int(OCT_SIGN[i, j])
    return int(QUAT_INDEX[i, j]), int(QUAT_SIGN[i, j])


# ---------------------------------------------------------------------------
# array-level operations

def qmul(a, b):
    """Hamilton product of quaternion arrays of shape (..., 4)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    w1, x1, y1, z1 = np.moveaxis(a, -1, 0)
    w2, x2, y2, z2 = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ],
        axis=-1,
    )


def omul(a, b):
    """Octonion product of arrays of shape (..., 8)."""
    return kernels.structure_mul(a, b, OCT_INDEX, OCT_SIGN)


def conj(a):
    """Involution ``e_i -> -e_i`` for i != 0 (either algebra)."""
    out = -np.asarray(a, dtype=float)
    out[..., 0] *= -1
    return out


def norm(a):
    return np.sqrt(np.sum(np.square(a), axis=-1))


def qinv(a):
    a = np.asarray(a, dtype=float)
    return conj(a) / np.sum(a * a, axis=-1, keepdims=True)


def oinv(a):
    return qinv(a)


def associator(a, b, c):
    """``(ab)c - a(bc)`` for octonion arrays."""
    return omul(omul(a, b), c) - omul(a, omul(b, c))


def quaternion_basis(i):
    e = np.zeros(4)
    e[i] = 1.0
    return e


def octonion_basis(i):
    e = np.zeros(8)
    e[i] = 1.0
    return e


# ---------------------------------------------------------------------------
# symplectic split over span{1, e1}

def split_array(a):
    """Split quaternion arrays into complex ``(alpha, beta)`` with ``a = alpha + e2 beta``.

    ``e1`` is identified with the complex unit, so
    ``alpha = a0 + a1 e1`` and ``beta = a2 - a3 e1``.
    """
    a = np.asarray(a, dtype=float)
    alpha = a[..., 0] + 1j * a[..., 1]
    beta = a[..., 2] - 1j * a[..., 3]
    return alpha, beta


def join_array(alpha, beta):
    """Inverse of ``split_array``."""
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    return np.stack([alpha.real, alpha.imag, beta.real, -beta.imag], axis=-1)


def complex_to_quaternion(z):
    """Embed complex numbers as ``Re z + Im z e1``."""
    z = np.asarray(z, dtype=complex)
    return np.stack([z.real, z.imag, np.zeros(z.shape), np.zeros(z.shape)], axis=-1)


# ---------------------------------------------------------------------------
# scalar wrappers

class _Element:
    __slots__ = ("_c",)
    DIM = 0

    def __init__(self, *coeffs):
        if len(coeffs) == 1 and np.ndim(coeffs[0]) == 1:
            coeffs = coeffs[0]
        c = np.zeros(self.DIM)
        vals = np.asarray(coeffs, dtype=float).ravel()
        if vals.size > self.DIM:
            raise ValueError(f"{type(self).__name__} takes at most {self.DIM} coefficients")
        c[: vals.size] = vals
        c.flags.writeable = False
        self._c = c

    @classmethod
    def unit(cls, i):
        c = np.zeros(cls.DIM)
        c[i] = 1.0
        return cls(c)

    @property
    def coeffs(self):
        return self._c

    def __array__(self, dtype=None, copy=None):
        return self._c.astype(dtype) if dtype is not None else self._c.copy()

    def __getitem__(self, i):
        return float(self._c[i])

    def __iter__(self):
        return iter(self._c.tolist())

    @property
    def real(self):
        return float(self._c[0])

    @property
    def imag(self):
        return self._c[1:].copy()

    def conj(self):
        return type(self)(conj(self._c))

    def __abs__(self):
        return float(norm(self._c))

    def inverse(self):
        return type(self)(qinv(self._c))

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other._c
        if np.isscalar(other):
            c = np.zeros(self.DIM)
            c[0] = other
            return c
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else type(self)(self._c + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else type(self)(self._c - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else type(self)(o - self._c)

    def __neg__(self):
        return type(self)(-self._c)

    def __mul__(self, other):
        if np.isscalar(other):
            return type(self)(self._c * other)
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else type(self)(self._product(self._c, o))

    def __rmul__(self, other):
        if np.isscalar(other):
            return type(self)(self._c * other)
        return NotImplemented

    def __truediv__(self, other):
        if np.isscalar(other):
            return type(self)(self._c / other)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return bool(np.array_equal(self._c, o))

    def __hash__(self):
        return hash((type(self).__name__, tuple(self._c)))

    def isclose(self, other, tol=DEFAULT_TOL):
        return bool(norm(self._c - np.asarray(other, dtype=float)) <= tol)

    def to_list(self):
        return self._c.tolist()

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(repr(float(v)) for v in self._c)})"

    def __str__(self):
        terms = []
        for i, v in enumerate(self._c):
            if v == 0:
                continue
            terms.append(f"{v:g}" if i == 0 else f"{v:g}*e{i}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


class Quaternion(_Element):
    DIM = 4

    @staticmethod
    def _product(a, b):
        return qmul(a, b)

    @property
    def w(self):
        return float(self._c[0])

    @property
    def x(self):
        return float(self._c[1])

    @property
    def y(self):
        return float(self._c[2])

    @property
    def z(self):
        return float(self._c[3])


class Octonion(_Element):
    DIM = 8

    @staticmethod
    def _product(a, b):
        return omul(a, b)


@dataclass(frozen=True)
class SymplecticPair:
    """``alpha`` and ``beta`` in span{1, e1}, stored as Python complex numbers."""

    alpha: complex
    beta: complex

    def reconstruct(self):
        return Quaternion(join_array(self.alpha, self.beta))


def symplectic_split(a):
    alpha, beta = split_array(np.asarray(a, dtype=float))
    return SymplecticPair(complex(alpha), complex(beta))


def rephase_to_standard(e, tol=DEFAULT_TOL):
    """Unit quaternion ``q`` with ``q^-1 e q = e1`` for an imaginary unit ``e``.

    On the hemisphere facing ``e1`` this is the shortest rotation carrying
    ``e1`` to ``e``. On the far hemisphere the rotation carries ``-e1`` to
    ``e`` and is composed with ``e2`` (which maps ``-e1`` to ``e1``), so
    ``e = -e1`` returns exactly ``e2`` and the construction stays well
    conditioned near the antipode.
    """
    e = np.asarray(e, dtype=float)
    if abs(e[0]) > tol or abs(norm(e) - 1.0) > tol:
        raise NotImaginaryUnit(f"expected an imaginary unit quaternion, got {e.tolist()}")
    e1 = quaternion_basis(1)
    if e[1] >= 0:
        q = quaternion_basis(0) - qmul(e, e1)
    else:
        q = qmul(quaternion_basis(0) + qmul(e, e1), quaternion_basis(2))
    return Quaternion(q / norm(q))
