import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import random_antihermitian
from hypercomplex import algebra as alg
from hypercomplex import qmodule as qm
from hypercomplex.errors import (
    DependentSet,
    LengthMismatch,
    NotAntiHermitian,
    NotNormalized,
    UnsupportedAlgebra,
)
from oracles import complex_matrix

qvecs = arrays(np.float64, (4, 4), elements=st.floats(-5, 5, allow_nan=False))
quats = arrays(np.float64, 4, elements=st.floats(-5, 5, allow_nan=False))


@given(qvecs, qvecs, quats)
def test_inner_product_sesquilinear(f, g, a):
    lhs = qm.qinner(f, qm.right_scale(g, a))
    np.testing.assert_allclose(lhs, alg.qmul(qm.qinner(f, g), a), atol=1e-9)
    np.testing.assert_allclose(qm.qinner(g, f), alg.conj(qm.qinner(f, g)), atol=1e-12)


def test_qinner_length_mismatch():
    with pytest.raises(LengthMismatch):
        qm.qinner(np.ones((2, 4)), np.ones((3, 4)))


def test_operators_are_right_linear(rng):
    m = rng.standard_normal((3, 3, 4))
    f = rng.standard_normal((3, 4))
    a = rng.standard_normal(4)
    np.testing.assert_allclose(qm.matvec(m, qm.right_scale(f, a)), qm.right_scale(qm.matvec(m, f), a), atol=1e-12)


def test_adjoint(rng):
    m = rng.standard_normal((3, 3, 4))
    f, g = rng.standard_normal((2, 3, 4))
    np.testing.assert_allclose(qm.qinner(qm.matvec(m, f), g), qm.qinner(f, qm.matvec(qm.adjoint(m), g)), atol=1e-12)


def test_check_antihermitian(rng):
    h = random_antihermitian(rng, 4)
    qm.check_antihermitian(h)
    with pytest.raises(NotAntiHermitian):
        qm.check_antihermitian(h + qm.identity(4))


def test_gram_schmidt(rng):
    vs = list(rng.standard_normal((3, 4, 4)))
    out = qm.gram_schmidt(vs)
    for i, a in enumerate(out):
        for j, b in enumerate(out):
            expected = [1.0 if i == j else 0.0, 0, 0, 0]
            np.testing.assert_allclose(qm.qinner(a, b), expected, atol=1e-12)
    dep = vs[:2] + [qm.right_scale(vs[0], [1, 2, 3, 4])]
    with pytest.raises(DependentSet):
        qm.gram_schmidt(dep)


@settings(max_examples=30)
@given(qvecs)
def test_formally_real_decomposition_standard(f):
    parts = qm.formally_real_decompose(f)
    np.testing.assert_allclose(parts.reconstruct(), f, atol=1e-12)
    alg_ = parts.algebra
    for i, p in enumerate(parts.parts):
        ei = alg.quaternion_basis(i)
        np.testing.assert_allclose(alg_.apply(i, p), qm.right_scale(p, ei), atol=1e-12)
    for p in parts.parts:
        for q in parts.parts:
            assert np.abs(qm.qinner(p, q)[1:]).max() < 1e-9


def test_formally_real_decomposition_conjugated(rng):
    u = qm.gram_schmidt(list(rng.standard_normal((3, 3, 4))))
    umat = np.stack(u, axis=1)  # columns are orthonormal vectors
    algebra = qm.LeftAlgebra(3, conjugator=umat)
    f = rng.standard_normal((3, 4))
    parts = qm.formally_real_decompose(f, algebra)
    np.testing.assert_allclose(parts.reconstruct(), f, atol=1e-12)
    for i, p in enumerate(parts.parts):
        np.testing.assert_allclose(algebra.apply(i, p), qm.right_scale(p, alg.quaternion_basis(i)), atol=1e-12)
    # E_i commute with right scalar multiplication and satisfy E1 E2 = E3
    r = [algebra.real_matrix(i) for i in range(4)]
    np.testing.assert_allclose(r[1] @ r[2], r[3], atol=1e-12)


def test_custom_algebra_not_decomposable():
    std = qm.standard_left_algebra(2)
    custom = qm.LeftAlgebra.from_maps([std.real_matrix(i) for i in (1, 2, 3)])
    np.testing.assert_allclose(custom.apply(2, np.eye(2, 4)), std.apply(2, np.eye(2, 4)))
    with pytest.raises(UnsupportedAlgebra):
        qm.formally_real_decompose(np.ones((2, 4)), custom)


def test_operator_split_roundtrip(rng):
    h = random_antihermitian(rng, 5)
    split = qm.operator_symplectic_split(h)
    np.testing.assert_allclose(split.reconstruct(), h, atol=1e-15)
    np.testing.assert_allclose(split.H1, split.H1.conj().T, atol=1e-15)
    np.testing.assert_allclose(split.Hbeta, split.Hbeta.T, atol=1e-15)


def test_complex_embedding_homomorphism(rng):
    a, b = rng.standard_normal((2, 3, 3, 4))
    f = rng.standard_normal((3, 4))
    ca, cb = qm.complex_embedding(a), qm.complex_embedding(b)
    np.testing.assert_allclose(qm.complex_embedding(qm.matmul(a, b)), ca @ cb, atol=1e-12)
    np.testing.assert_allclose(ca @ qm.embed_vector(f), qm.embed_vector(qm.matvec(a, f)), atol=1e-12)
    np.testing.assert_allclose(qm.extract_vector(qm.embed_vector(f)), f)
    # right multiplication by e1 is multiplication by 1j
    fe1 = qm.right_scale(f, alg.quaternion_basis(1))
    np.testing.assert_allclose(qm.embed_vector(fe1), 1j * qm.embed_vector(f), atol=1e-15)


def test_embedding_spectrum_matches_oracle(rng):
    h = random_antihermitian(rng, 4)
    ours = np.sort(np.linalg.eigvals(qm.complex_embedding(h)).imag)
    ref = np.sort(np.linalg.eigvals(complex_matrix(h)).imag)
    np.testing.assert_allclose(ours, ref, atol=1e-10)


def test_transition_probability(rng):
    f = np.zeros((2, 4))
    f[0, 0] = 1.0
    g = np.zeros((2, 4))
    g[0, 2] = g[1, 0] = np.sqrt(0.5)
    assert qm.transition_probability(f, g) == pytest.approx(0.5)
    with pytest.raises(NotNormalized):
        qm.transition_probability(2 * f, g)
