"""Dense real Clifford algebra C7 with generators squaring to -1.

Blades are 7-bit masks, bit ``i-1`` standing for generator ``e_i``, with
factors in ascending order. Octonion unit ``e_i`` corresponds to the
Clifford generator ``e_i`` through successive right multiplication.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .algebra import OCT_INDEX, OCT_SIGN, OCTONION_LINES

NGEN = 7
DIM = 1 << NGEN
RANK_TOL = 1e-9


def _popcount(x):
    return bin(x).count("1")


def _blade_sign(a, b):
    # swaps needed to merge ascending factor lists, then e_i^2 = -1 per shared factor
    swaps = 0
    a_rest = a >> 1
    while a_rest:
        swaps += _popcount(a_rest & b)
        a_rest >>= 1
    swaps += _popcount(a & b)
    return -1 if swaps & 1 else 1


def _tables():
    index = np.empty((DIM, DIM), dtype=np.int_)
    sign = np.empty((DIM, DIM))
    for a in range(DIM):
        for b in range(DIM):
            index[a, b] = a ^ b
            sign[a, b] = _blade_sign(a, b)
    return index, sign


BLADE_INDEX, BLADE_SIGN = _tables()
GRADE = np.array([_popcount(m) for m in range(DIM)])
# dagger: e_i -> -e_i and reversed factor order
DAGGER_SIGN = np.array([(-1) ** g * (-1) ** (g * (g - 1) // 2) for g in GRADE], dtype=float)


def mask_of(*gens):
    """Blade mask for a set of generator indices (1..7)."""
    m = 0
    for g in gens:
        m |= 1 << (g - 1)
    return m


def blade_label(mask):
    if mask == 0:
        return "1"
    return "e" + "".join(str(i + 1) for i in range(NGEN) if mask >> i & 1)


class CliffordElement:
    """Immutable element of C7 as 128 real coefficients indexed by blade mask."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = np.zeros(DIM) if coeffs is None else np.array(coeffs, dtype=float)
        if c.shape != (DIM,):
            raise ValueError(f"expected {DIM} coefficients, got shape {c.shape}")
        c.flags.writeable = False
        self._c = c

    @classmethod
    def scalar(cls, value=1.0):
        c = np.zeros(DIM)
        c[0] = value
        return cls(c)

    @classmethod
    def blade(cls, mask, coeff=1.0):
        c = np.zeros(DIM)
        c[mask] = coeff
        return cls(c)

    @classmethod
    def generator(cls, i):
        """``e_i`` for i in 1..7; ``generator(0)`` is the unit."""
        return cls.scalar() if i == 0 else cls.blade(mask_of(i))

    @classmethod
    def product_of(cls, *gens):
        """Ordered product ``e_{g1} e_{g2} ...`` of generators."""
        out = cls.scalar()
        for g in gens:
            out = out * cls.generator(g)
        return out

    @property
    def coeffs(self):
        return self._c

    def __array__(self, dtype=None, copy=None):
        return self._c.astype(dtype) if dtype is not None else self._c.copy()

    def __add__(self, other):
        if np.isscalar(other):
            other = CliffordElement.scalar(other)
        return CliffordElement(self._c + other._c)

    __radd__ = __add__

    def __sub__(self, other):
        if np.isscalar(other):
            other = CliffordElement.scalar(other)
        return CliffordElement(self._c - other._c)

    def __rsub__(self, other):
        return CliffordElement.scalar(other) - self

    def __neg__(self):
        return CliffordElement(-self._c)

    def __mul__(self, other):
        if np.isscalar(other):
            return CliffordElement(self._c * other)
        return blade_mul(self, other)

    def __rmul__(self, other):
        if np.isscalar(other):
            return CliffordElement(self._c * other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    def dagger(self):
        return CliffordElement(self._c * DAGGER_SIGN)

    def max_abs(self):
        return float(np.max(np.abs(self._c)))

    def isclose(self, other, tol=1e-12):
        return bool(np.max(np.abs(self._c - np.asarray(other, dtype=float))) <= tol)

    def is_zero(self, tol=0.0):
        return self.max_abs() <= tol

    def to_pairs(self):
        """Serialization: ``[(mask, coeff), ...]`` over nonzero coefficients."""
        return [(int(m), float(self._c[m])) for m in np.nonzero(self._c)[0]]

    @classmethod
    def from_pairs(cls, pairs):
        c = np.zeros(DIM)
        for mask, coeff in pairs:
            if not 0 <= int(mask) < DIM:
                raise ValueError(f"blade mask out of range: {mask}")
            c[int(mask)] += float(coeff)
        return cls(c)

    def __repr__(self):
        terms = [f"{v:+g}*{blade_label(m)}" for m, v in self.to_pairs()]
        return "CliffordElement(" + (" ".join(terms) or "0") + ")"


def blade_mul(a, b):
    """Bilinear product of two elements."""
    return CliffordElement(kernels.blade_mul(a.coeffs, b.coeffs, BLADE_INDEX, BLADE_SIGN))


def pseudoscalar():
    return CliffordElement.blade(DIM - 1)


def central_projections():
    """``(P+, P-)`` with ``P± = (1 ± e1 e2 ... e7) / 2``."""
    one = CliffordElement.scalar()
    omega = CliffordElement.product_of(*range(1, NGEN + 1))
    return (one + omega) * 0.5, (one - omega) * 0.5


# (1 - e1e2e3)(1 - e4e2e6)(1 - e4e5e1) / 8
IDEAL_TRIPLES = ((1, 2, 3), (4, 2, 6), (4, 5, 1))


@dataclass(frozen=True)
class IdealProjection:
    element: CliffordElement
    sector: int


def _sector(sign):
    if sign in (+1, "+", "plus"):
        return +1
    if sign in (-1, "-", "minus"):
        return -1
    raise ValueError(f"sector must be +1 or -1, got {sign!r}")


@lru_cache(maxsize=None)
def _minimal_projection(sector):
    p_plus, p_minus = central_projections()
    out = p_plus if sector > 0 else p_minus
    for triple in reversed(IDEAL_TRIPLES):
        out = (1.0 - CliffordElement.product_of(*triple)) * out
    return out * 0.125


def minimal_ideal_projection(sector=+1):
    s = _sector(sector)
    return IdealProjection(_minimal_projection(s), s)


def right_multiplication_matrix(p):
    """128x128 matrix of ``x -> x p``."""
    cols = np.zeros((DIM, DIM))
    basis = np.eye(DIM)
    rows = kernels.blade_mul_batch(basis, np.broadcast_to(p.coeffs, (DIM, DIM)), BLADE_INDEX, BLADE_SIGN)
    cols[:, :] = rows.T
    return cols


def left_ideal_dimension(sector=+1):
    """Real dimension of ``C7 P0`` via singular values of the right-multiplication map."""
    p = minimal_ideal_projection(sector).element
    sv = np.linalg.svd(right_multiplication_matrix(p), compute_uv=False)
    return int(np.sum(sv > RANK_TOL))


@lru_cache(maxsize=None)
def _matrix_units(sector):
    p0 = _minimal_projection(sector)
    gens = [CliffordElement.generator(i) for i in range(8)]
    return tuple(tuple(gens[i] * p0 * gens[j].dagger() for j in range(8)) for i in range(8))


def matrix_units(i, j, sector=+1):
    """``e_ij = e_i P0 e_j^dagger`` with ``e_0 = 1``."""
    if not (0 <= i < 8 and 0 <= j < 8):
        raise ValueError("matrix-unit indices run over 0..7")
    return _matrix_units(_sector(sector))[i][j]


def all_matrix_units(sector=+1):
    """Stack of shape (8, 8, 128) with all matrix units of one sector."""
    units = _matrix_units(_sector(sector))
    return np.array([[u.coeffs for u in row] for row in units])


def matrix_unit_law_defect(sector=+1):
    """Largest coefficient of ``e_ij e_kl - delta_jk e_il`` over all 64^2 products."""
    units = all_matrix_units(sector).reshape(64, DIM)
    left = np.repeat(units, 64, axis=0)
    right = np.tile(units, (64, 1))
    prods = kernels.blade_mul_batch(left, right, BLADE_INDEX, BLADE_SIGN).reshape(8, 8, 8, 8, DIM)
    expected = np.zeros_like(prods)
    u = units.reshape(8, 8, DIM)
    for j in range(8):
        expected[:, j, j, :, :] = u
    return float(np.max(np.abs(prods - expected)))


@dataclass(frozen=True)
class CayleyLine:
    i: int
    j: int
    k: int
    octonion_sign: int
    ideal_sign: int

    @property
    def recovered(self):
        return self.ideal_sign == self.octonion_sign

    @property
    def involves_e7(self):
        return 7 in (self.i, self.j, self.k)


def cayley_pairs():
    """The 21 ordered pairs ``(i, j, k)`` with ``e_i e_j = +e_k`` (seven lines, cyclic)."""
    out = []
    for i, j, k in OCTONION_LINES:
        out.extend([(i, j, k), (j, k, i), (k, i, j)])
    return out


def cayley_recovery_report(sector=+1, tol=1e-12):
    """For each table line, the sign ``s`` with ``e_i e_j P0 = s e_k P0`` (0 if neither)."""
    s = _sector(sector)
    p0 = _minimal_projection(s)
    lines = []
    for i, j, k in cayley_pairs():
        lhs = CliffordElement.product_of(i, j) * p0
        rhs = CliffordElement.generator(k) * p0
        if lhs.isclose(rhs, tol):
            found = 1
        elif lhs.isclose(-rhs, tol):
            found = -1
        else:
            found = 0
        lines.append(CayleyLine(i, j, k, int(OCT_SIGN[i, j]), found))
    return lines


def octonion_rightmul_embedding():
    """Integer 8x8 matrices ``R_i`` of ``f -> f e_i`` on octonion coefficients."""
    mats = []
    for i in range(1, 8):
        r = np.zeros((8, 8), dtype=np.int64)
        for col in range(8):
            r[OCT_INDEX[col, i], col] = int(OCT_SIGN[col, i])
        mats.append(r)
    return mats


def anticommutator_defect(mats):
    """Max entry of ``R_i R_j + R_j R_i + 2 delta_ij I`` in exact integer arithmetic."""
    eye = np.eye(mats[0].shape[0], dtype=np.int64)
    worst = 0
    for (a, ra), (b, rb) in itertools.product(enumerate(mats), repeat=2):
        d = ra @ rb + rb @ ra + (2 * eye if a == b else 0)
        worst = max(worst, int(np.max(np.abs(d))))
    return worst


def generated_algebra_dimension(mats, max_rounds=16, tol=RANK_TOL):
    """Real dimension of the matrix algebra spanned by products of ``mats``.

    Grows the span by multiplying every current basis element by each
    generator until the dimension stops changing.
    """
    n = mats[0].shape[0]
    basis = [np.eye(n)]
    frontier = [np.eye(n)]
    dim = 1
    for _ in range(max_rounds):
        new = [f @ g for f in frontier for g in mats]
        stack = np.array([b.ravel() for b in basis + new], dtype=float)
        # orthonormal basis of the span
        u, sv, vt = np.linalg.svd(stack, full_matrices=False)
        r = int(np.sum(sv > tol * max(1.0, sv[0])))
        if r == dim:
            break
        dim = r
        basis = [row.reshape(n, n) for row in vt[:r]]
        frontier = basis
    return dim
