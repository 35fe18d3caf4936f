import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hypercomplex import algebra as alg
from hypercomplex.algebra import Octonion, Quaternion
from hypercomplex.errors import NotImaginaryUnit
from oracles import hamilton

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
quats = arrays(np.float64, 4, elements=finite)
octs = arrays(np.float64, 8, elements=finite)


def e(i):
    return alg.octonion_basis(i)


@given(quats, quats)
def test_qmul_matches_hamilton(a, b):
    np.testing.assert_allclose(alg.qmul(a, b), hamilton(a, b), atol=1e-12)


def test_quaternion_units():
    q = [alg.quaternion_basis(i) for i in range(4)]
    np.testing.assert_array_equal(alg.qmul(q[1], q[2]), q[3])
    np.testing.assert_array_equal(alg.qmul(q[2], q[1]), -q[3])
    for i in (1, 2, 3):
        np.testing.assert_array_equal(alg.qmul(q[i], q[i]), -q[0])


@pytest.mark.parametrize("line", alg.OCTONION_LINES)
def test_octonion_lines_cyclic(line):
    i, j, k = line
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        np.testing.assert_array_equal(alg.omul(e(a), e(b)), e(c))
        np.testing.assert_array_equal(alg.omul(e(b), e(a)), -e(c))


def test_fano_lines_cover_each_pair_once():
    pairs = [frozenset(p) for line in alg.OCTONION_LINES for p in itertools.combinations(line, 2)]
    assert len(pairs) == 21 == len(set(pairs))


def test_octonion_restricts_to_quaternions():
    for i in range(4):
        for j in range(4):
            q = alg.qmul(alg.quaternion_basis(i), alg.quaternion_basis(j))
            np.testing.assert_array_equal(alg.omul(e(i), e(j))[:4], q)


def test_associator_frozen_value():
    # e1 (e2 e4) = e1 e6 = -e7 and (e1 e2) e4 = e3 e4 = e7
    np.testing.assert_array_equal(alg.associator(e(1), e(2), e(4)), 2 * e(7))
    np.testing.assert_array_equal(alg.associator(e(1), e(2), e(3)), np.zeros(8))


@given(octs, octs)
def test_octonion_norm_composition(a, b):
    lhs = alg.norm(alg.omul(a, b))
    assert abs(lhs - alg.norm(a) * alg.norm(b)) <= 1e-12 * max(1.0, lhs)


@given(octs, octs)
def test_alternativity(a, b):
    scale = max(1.0, alg.norm(a) ** 2 * alg.norm(b))
    assert np.abs(alg.associator(a, a, b)).max() <= 1e-12 * scale * 10
    assert np.abs(alg.associator(a, b, b)).max() <= 1e-12 * max(1.0, alg.norm(a) * alg.norm(b) ** 2) * 10


@settings(max_examples=50)
@given(octs, octs, octs)
def test_associator_is_alternating(a, b, c):
    s = max(1.0, alg.norm(a) * alg.norm(b) * alg.norm(c))
    base = alg.associator(a, b, c)
    np.testing.assert_allclose(alg.associator(b, a, c), -base, atol=1e-11 * s)
    np.testing.assert_allclose(alg.associator(a, c, b), -base, atol=1e-11 * s)


def test_octonions_not_associative_on_basis():
    hits = 0
    for i, j, k in itertools.product(range(1, 8), repeat=3):
        if np.any(alg.associator(e(i), e(j), e(k))):
            hits += 1
    assert hits > 0


@given(octs)
def test_octonion_inverse(a):
    if alg.norm(a) < 1e-3:
        return
    np.testing.assert_allclose(alg.omul(a, alg.oinv(a)), e(0), atol=1e-12)


@given(quats, quats)
def test_conjugation_reverses_products(a, b):
    np.testing.assert_allclose(alg.conj(alg.qmul(a, b)), alg.qmul(alg.conj(b), alg.conj(a)), atol=1e-10)


@given(quats)
def test_symplectic_split_roundtrip(a):
    pair = alg.symplectic_split(a)
    np.testing.assert_allclose(pair.reconstruct().coeffs, a, atol=0)


def test_symplectic_split_example():
    pair = alg.symplectic_split([1.0, 2.0, 3.0, 4.0])
    assert pair.alpha == 1 + 2j
    assert pair.beta == 3 - 4j


def test_element_classes():
    i, j = Quaternion.unit(1), Quaternion.unit(2)
    assert i * j == Quaternion.unit(3)
    assert abs(Quaternion(1, 1, 1, 1)) == 2.0
    assert (2 * i + 1).to_list() == [1.0, 2.0, 0.0, 0.0]
    assert str(Quaternion(1, 0, -2, 0)) == "1 - 2*e2"
    with pytest.raises(ValueError):
        Quaternion(*range(5))
    o = Octonion.unit(1) * Octonion.unit(2)
    assert o == Octonion.unit(3)
    assert Quaternion(1, 2, 3, 4).inverse().isclose(alg.qinv([1, 2, 3, 4]))
    with pytest.raises(ValueError):
        Quaternion(1).coeffs[0] = 2.0


unit_imag = arrays(np.float64, 3, elements=st.floats(-1, 1, allow_nan=False)).filter(
    lambda v: np.linalg.norm(v) > 1e-3
)


@given(unit_imag)
def test_rephase_to_standard(v):
    u = np.concatenate([[0.0], v / np.linalg.norm(v)])
    q = alg.rephase_to_standard(u).coeffs
    assert abs(alg.norm(q) - 1) < 1e-12
    res = hamilton(hamilton(alg.qinv(q), u), q) - alg.quaternion_basis(1)
    assert alg.norm(res) < 1e-12


@pytest.mark.parametrize("i,sign", [(1, 1), (1, -1), (2, 1), (3, -1)])
def test_rephase_axes(i, sign):
    u = sign * alg.quaternion_basis(i)
    q = alg.rephase_to_standard(u).coeffs
    res = alg.qmul(alg.qmul(alg.qinv(q), u), q)
    np.testing.assert_allclose(res, alg.quaternion_basis(1), atol=1e-15)


def test_rephase_antipode_is_e2():
    q = alg.rephase_to_standard(-alg.quaternion_basis(1))
    assert q == Quaternion.unit(2)


@pytest.mark.parametrize("bad", [[1, 0, 0, 0], [0, 2, 0, 0], [0.5, 0.5, 0.5, 0.5]])
def test_rephase_rejects_non_units(bad):
    with pytest.raises(NotImaginaryUnit):
        alg.rephase_to_standard(bad)
