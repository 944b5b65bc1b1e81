import numpy as np
import pytest

from revfid.errors import DimensionMismatchError, ValidationError
from revfid.linalg import HermitianMatrix
from revfid.states import (
    Channel,
    ProbDist,
    PureState,
    SignedVector,
    apply_channel,
    basis_measurement,
    embed_classical,
    make_density,
    measure,
    preparation_channel,
    random_channel,
    random_density,
    random_pure,
    random_tangent,
    rng_for,
    tensor,
)


def test_make_density_valid_qubit():
    rho = make_density(np.array([[0.5, 0.1], [0.1, 0.5]]))
    w = np.linalg.eigvalsh(rho.mat)
    assert np.allclose(w, [0.4, 0.6])


def test_make_density_rejects_bad_trace():
    with pytest.raises(ValidationError):
        make_density(np.diag([0.6, 0.6]))


def test_make_density_rejects_negative():
    with pytest.raises(ValidationError):
        make_density(np.diag([1.2, -0.2]))


def test_make_density_clips_roundoff():
    rho = make_density(np.diag([1.0 + 5e-9, -5e-9]))
    assert rho.min_eigenvalue() >= 0.0
    assert np.trace(rho.mat).real == pytest.approx(1.0, abs=1e-14)


def test_random_density_rank():
    rho = random_density(4, 2, 7)
    w = np.linalg.eigvalsh(rho.mat)
    assert np.sum(w > 1e-10) == 2


def test_random_density_deterministic():
    assert np.array_equal(random_density(3, 3, 5).mat, random_density(3, 3, 5).mat)


def test_rng_streams_differ():
    a = rng_for(1, 0).standard_normal(4)
    b = rng_for(1, 1).standard_normal(4)
    assert not np.allclose(a, b)


def test_pure_state_normalizes():
    psi = PureState(np.array([1.0, 1.0]) / np.sqrt(2))
    assert psi.projector().mat[0, 0] == pytest.approx(0.5)


def test_prob_dist_rejects_negative():
    with pytest.raises(ValidationError):
        ProbDist(np.array([1.1, -0.1]))


def test_signed_vector_total():
    SignedVector(np.array([0.5, -0.5]), total=0.0)
    with pytest.raises(ValidationError):
        SignedVector(np.array([0.5, 0.5]), total=0.0)


def test_random_channel_complete():
    lam = random_channel(3, 2, 2, 8)
    comp = sum(k.conj().T @ k for k in lam.kraus)
    assert np.linalg.norm(comp - np.eye(3)) < 1e-9


def test_channel_rejects_incomplete_kraus():
    with pytest.raises(ValidationError):
        Channel((np.eye(2) * 0.5,))


def test_depolarizing_channel():
    paulis = [
        np.eye(2),
        np.array([[0, 1], [1, 0]]),
        np.array([[0, -1j], [1j, 0]]),
        np.diag([1, -1]),
    ]
    lam = Channel(tuple(0.5 * p for p in paulis))
    rho = random_density(2, 2, 3)
    out = apply_channel(lam, rho)
    assert np.allclose(out.mat, np.eye(2) / 2, atol=1e-12)


def test_apply_channel_dim_mismatch():
    lam = random_channel(2, 2, 2, 1)
    with pytest.raises(DimensionMismatchError):
        apply_channel(lam, random_density(3, 3, 1))


def test_preparation_channel_prepares_columns():
    cols = np.column_stack([np.array([1.0, 0.0]), np.array([1.0, 1.0]) / np.sqrt(2)])
    lam = preparation_channel(cols)
    p = embed_classical(ProbDist(np.array([0.3, 0.7])))
    out = apply_channel(lam, p)
    expect = 0.3 * np.outer(cols[:, 0], cols[:, 0]) + 0.7 * np.outer(cols[:, 1], cols[:, 1])
    assert np.allclose(out.mat, expect)


def test_measure_x_basis_on_zero():
    frame = np.column_stack([np.array([1, 1]), np.array([1, -1])]) / np.sqrt(2)
    effects = basis_measurement(frame)
    p = measure(effects, PureState(np.array([1.0, 0.0])).projector())
    assert np.allclose(p.weights, [0.5, 0.5])


def test_measure_rejects_incomplete_povm():
    with pytest.raises(ValidationError):
        measure([np.eye(2) * 0.5], random_density(2, 2, 1))


def test_tensor_of_pure_is_pure():
    a = random_pure(2, 1).projector()
    b = random_pure(2, 2).projector()
    w = np.linalg.eigvalsh(tensor(a, b).mat)
    assert np.sum(w > 1e-10) == 1


def test_random_tangent_traceless_and_safe():
    rho, v = random_tangent(3, 9)
    assert abs(np.trace(v.entries).real) < 1e-12
    assert np.linalg.eigvalsh(rho.mat + 0.5 * v.entries)[0] > 0
