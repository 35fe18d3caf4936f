"""JSON wire formats shared by the library and the CLI.

Quaternions are ``[w, x, y, z]``, octonions 8-element arrays, QVectors
arrays of quaternions, QMatrices row-major nested arrays of quaternions.
Fixture files wrap a payload in ``{"kind": ..., "data": ...}``.
"""

import json

import numpy as np

from .errors import ParseError

KINDS = ("qmatrix", "qvector", "ovector", "lf_config", "grid_config", "energy_config")


def _array(data, shape_check, what):
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{what}: non-numeric entries ({exc})") from None
    if not shape_check(arr):
        raise ParseError(f"{what}: unexpected shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ParseError(f"{what}: non-finite entries")
    return arr


def parse_quaternion(data):
    return _array(data, lambda a: a.shape == (4,), "quaternion")


def parse_octonion(data):
    return _array(data, lambda a: a.shape == (8,), "octonion")


def parse_qvector(data):
    return _array(data, lambda a: a.ndim == 2 and a.shape[1] == 4, "qvector")


def parse_ovector(data):
    return _array(data, lambda a: a.ndim == 2 and a.shape[1] == 8, "ovector")


def parse_qmatrix(data):
    return _array(
        data, lambda a: a.ndim == 3 and a.shape[0] == a.shape[1] and a.shape[2] == 4, "qmatrix"
    )


def dump_array(a):
    return np.asarray(a, dtype=float).tolist()


def load_fixture(path):
    """Return ``(kind, payload)`` from a fixture file."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read fixture {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"fixture {path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "kind" not in doc or "data" not in doc:
        raise ParseError('fixture must be an object with "kind" and "data"')
    kind = doc["kind"]
    if kind not in KINDS:
        raise ParseError(f"unknown fixture kind {kind!r}")
    data = doc["data"]
    if kind == "qmatrix":
        data = parse_qmatrix(data)
    elif kind == "qvector":
        data = parse_qvector(data)
    elif kind == "ovector":
        data = parse_ovector(data)
    elif not isinstance(data, dict):
        raise ParseError(f"{kind} data must be an object")
    return kind, data


def write_fixture(path, kind, data):
    if isinstance(data, np.ndarray):
        data = dump_array(data)
    with open(path, "w") as fh:
        json.dump({"kind": kind, "data": data}, fh, indent=1)
