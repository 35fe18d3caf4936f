"""Backend selection for the hot product kernels.

The compiled ``_ckernels`` extension is used when it has been built;
otherwise the numpy implementation in ``_pykernels`` is used. Setting
``HYPERCOMPLEX_PURE_PYTHON=1`` forces the fallback.
"""

import os

import numpy as np

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("HYPERCOMPLEX_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # noqa: F811

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels


def _f64(x):
    return np.ascontiguousarray(x, dtype=np.float64)


def _i64(x):
    return np.ascontiguousarray(x, dtype=np.int_)


def blade_mul(a, b, index, sign):
    return _impl.blade_mul(_f64(a), _f64(b), _i64(index), _f64(sign))


def blade_mul_batch(a, b, index, sign):
    return _impl.blade_mul_batch(_f64(a), _f64(b), _i64(index), _f64(sign))


def structure_mul(a, b, table_index, table_sign):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    d = a.shape[-1]
    shape = np.broadcast_shapes(a.shape, b.shape)
    a2 = _f64(np.broadcast_to(a, shape).reshape(-1, d))
    b2 = _f64(np.broadcast_to(b, shape).reshape(-1, d))
    out = _impl.structure_mul(a2, b2, _i64(table_index), _f64(table_sign))
    return np.asarray(out).reshape(shape)


def backends():
    """Both implementations, for benchmarking and cross-checking."""
    impls = {"python": _pykernels}
    try:
        from . import _ckernels

        impls["cython"] = _ckernels
    except ImportError:
        pass
    return impls
