import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hypercomplex import algebra as alg
from hypercomplex import fock
from hypercomplex import qmodule as qm
from hypercomplex.errors import LengthMismatch, WrongSector

qvecs = arrays(np.float64, (3, 4), elements=st.floats(-5, 5, allow_nan=False))


@given(qvecs)
def test_diagonal_is_exact_norm(f):
    d = fock.one_particle_inner(f, f)
    assert d[0] == np.sum(f * f)
    assert not np.any(d[1:])


@given(qvecs, qvecs)
def test_matches_defining_formula(f, g):
    fg, gf = qm.qinner(f, g), qm.qinner(g, f)
    np.testing.assert_allclose(fock.one_particle_inner(f, g), (2 * fg + gf) / 3, atol=1e-9)


@given(qvecs, qvecs)
def test_exchange_conjugation(f, g):
    np.testing.assert_allclose(
        fock.one_particle_inner(g, f), alg.conj(fock.one_particle_inner(f, g)), atol=1e-12
    )


def test_not_quaternion_linear():
    f = np.eye(1, 4)
    assert fock.linearity_deficit(f, f, alg.quaternion_basis(2)) == pytest.approx(2 / 3)
    assert fock.linearity_deficit(f, f, [2.0, 0, 0, 0]) == 0.0


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        fock.one_particle_inner(np.ones((2, 4)), np.ones((3, 4)))


def test_annihilation_and_creation():
    f = np.eye(1, 4)
    vac = fock.FockState.vacuum()
    one = fock.create_one(f, vac)
    assert one.sector == fock.ONE_PARTICLE
    np.testing.assert_array_equal(fock.annihilate_one(f, one).amplitude, [1, 0, 0, 0])
    assert fock.annihilate_one(f, vac).is_zero()
    assert one.norm() == 1.0
    with pytest.raises(WrongSector):
        fock.create_one(f, one)
    with pytest.raises(WrongSector):
        fock.annihilate_one(f, fock.FockState("two-particle"))
    with pytest.raises(WrongSector):
        fock.create_one(f, fock.FockState.vacuum([0, 1, 0, 0]))


def test_state_serialization():
    s = fock.FockState.one_particle(np.ones((2, 4)))
    back = fock.FockState.from_dict(s.to_dict())
    np.testing.assert_array_equal(back.payload, s.payload)
    with pytest.raises(ValueError):
        fock.FockState.from_dict({"sector": "bogus"})


def test_deformed_relation_probe(rng):
    f, g = rng.standard_normal((2, 3, 4))
    probe = fock.deformed_relation_probe(f, g)
    np.testing.assert_array_equal(probe.F_vacuum, fock.one_particle_inner(f, g))
    assert probe.lambda_status == "unconstrained"
    assert not np.any(probe.reverse_order_vacuum)
    assert probe.to_dict()["lambda_status"] == "unconstrained"


def test_tensor_factorization(rng):
    f = rng.standard_normal((2, 4))
    g = rng.standard_normal((3, 4))
    tf = fock.tensor_decompose(f, g)
    assert len(tf.algebra_labels) == 16
    rf, rg = tf.reconstruct_pair()
    np.testing.assert_array_equal(rf, f)
    np.testing.assert_array_equal(rg, g)
    np.testing.assert_allclose(tf.real_parts[1, 2], np.outer(f[:, 1], g[:, 2]))
    sparse = fock.tensor_decompose(np.eye(1, 4), np.eye(1, 4, 3))
    assert sparse.nonzero_blocks() == [(0, 3)]
