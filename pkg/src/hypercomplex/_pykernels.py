"""Pure-Python (numpy) fallback for the compiled kernels in ``_ckernels``.

Every function here has the same signature and semantics as its compiled
counterpart; ``hypercomplex.kernels`` picks one implementation at import.
"""

import numpy as np


def blade_mul(a, b, index, sign):
    """Product of two dense multivectors.

    ``index[i, j]`` is the blade produced by blades ``i`` and ``j`` and
    ``sign[i, j]`` its sign (+1/-1).
    """
    outer = np.multiply.outer(a, b) * sign
    return np.bincount(index.ravel(), weights=outer.ravel(), minlength=a.shape[0])


def blade_mul_batch(a, b, index, sign):
    """Row-wise ``blade_mul`` for stacks of shape (m, dim)."""
    m, dim = a.shape
    outer = (a[:, :, None] * b[:, None, :]) * sign
    flat = (index[None, :, :] + dim * np.arange(m)[:, None, None]).ravel()
    return np.bincount(flat, weights=outer.ravel(), minlength=m * dim).reshape(m, dim)


def structure_mul(a, b, table_index, table_sign):
    """Batched product for a basis algebra with signed permutation table.

    ``a`` and ``b`` have shape (m, d). Used for quaternions (d=4) and
    octonions (d=8).
    """
    m, d = a.shape
    out = np.zeros((m, d))
    for i in range(d):
        for j in range(d):
            out[:, table_index[i, j]] += table_sign[i, j] * a[:, i] * b[:, j]
    return out
