import os
import subprocess
import sys

import numpy as np
import pytest

from hypercomplex import algebra, clifford, kernels

BACKENDS = kernels.backends()


def test_cython_backend_available():
    if "cython" not in BACKENDS:
        pytest.skip("compiled extension not built")
    if os.environ.get("HYPERCOMPLEX_PURE_PYTHON"):
        pytest.skip("fallback forced by environment")
    assert kernels.BACKEND == "cython"


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_backends_agree_on_blades(name, rng):
    impl = BACKENDS[name]
    ref = BACKENDS["python"]
    idx = clifford.BLADE_INDEX.astype(np.int_)
    sgn = clifford.BLADE_SIGN.astype(float)
    a, b = rng.standard_normal((2, clifford.DIM))
    a[::3] = 0.0
    np.testing.assert_allclose(impl.blade_mul(a, b, idx, sgn), ref.blade_mul(a, b, idx, sgn), atol=1e-12)
    sa, sb = rng.standard_normal((2, 5, clifford.DIM))
    np.testing.assert_allclose(
        impl.blade_mul_batch(sa, sb, idx, sgn), ref.blade_mul_batch(sa, sb, idx, sgn), atol=1e-12
    )


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_backends_agree_on_octonions(name, rng):
    impl = BACKENDS[name]
    a, b = rng.standard_normal((2, 50, 8))
    idx = algebra.OCT_INDEX.astype(np.int_)
    sgn = algebra.OCT_SIGN.astype(float)
    np.testing.assert_allclose(
        np.asarray(impl.structure_mul(a, b, idx, sgn)),
        BACKENDS["python"].structure_mul(a, b, idx, sgn),
        atol=1e-12,
    )


def test_structure_mul_broadcasts():
    a = np.ones((3, 1, 4))
    b = np.ones((5, 4))
    assert kernels.structure_mul(a, b, algebra.QUAT_INDEX, algebra.QUAT_SIGN).shape == (3, 5, 4)


def test_env_var_forces_fallback():
    env = dict(os.environ, HYPERCOMPLEX_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from hypercomplex import kernels; print(kernels.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
