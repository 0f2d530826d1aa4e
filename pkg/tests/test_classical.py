import numpy as np
import pytest

from conftest import random_symmetric
from ritz_majorize.classical import CLASSICAL_KINDS, check_classical, random_classical_inputs
from ritz_majorize.errors import InvalidInput
from ritz_majorize.linalg import eigvals, singular_values, sqrt_psd
from ritz_majorize.majorization import weak_majorizes


def test_lidskii_zero_b(rng):
    a = random_symmetric(rng, 4)
    v = check_classical("lidskii", a, np.zeros((4, 4)))
    assert v.holds and v.relation == "strong"
    np.testing.assert_allclose(v.prefix_margins, 0, atol=1e-12)


def test_gelfand_naimark_identity(rng):
    b = rng.standard_normal((4, 4))
    v = check_classical("gelfand-naimark", np.eye(4), b)
    assert v.holds
    np.testing.assert_allclose(v.prefix_margins, 0, atol=1e-12)


def test_pinching_strong_direct(rng):
    for _ in range(50):
        a1, a2 = rng.standard_normal((3, 2)), rng.standard_normal((3, 2))
        b = random_symmetric(rng, 3)
        assert check_classical("pinching-strong", a1, a2, b).holds
        # direct evaluation of both sides
        lhs = np.concatenate([eigvals(a1.T @ b @ a1), eigvals(a2.T @ b @ a2)])
        root = sqrt_psd(a1 @ a1.T + a2 @ a2.T)
        rhs = np.pad(np.clip(eigvals(root @ b @ root), 0, None), (0, 1))
        assert weak_majorizes(lhs, rhs).holds


def test_pinching_strong_square_case_is_strong(rng):
    # [A1 A2] square: no padding zeros, the eigenvalue form holds as a strong majorization
    for _ in range(50):
        a = rng.standard_normal((4, 4))
        b = random_symmetric(rng, 4)
        lhs = np.concatenate([eigvals(a[:, :2].T @ b @ a[:, :2]), eigvals(a[:, 2:].T @ b @ a[:, 2:])])
        root = sqrt_psd(a @ a.T)
        assert np.sum(lhs) == pytest.approx(np.sum(eigvals(root @ b @ root)), abs=1e-9)


@pytest.mark.parametrize("kind", CLASSICAL_KINDS)
def test_random_instances(kind):
    rng = np.random.default_rng(hash(kind) % 2**32)
    for _ in range(200):
        mats = random_classical_inputs(kind, rng)
        assert check_classical(kind, *mats).holds


@pytest.mark.parametrize("kind", CLASSICAL_KINDS)
def test_rank_deficient_and_rectangular(kind):
    rng = np.random.default_rng(3)
    for _ in range(50):
        mats = [m.copy() for m in random_classical_inputs(kind, rng, max_dim=4)]
        # zero out a column of the first factor to force rank deficiency
        if kind not in ("lidskii", "pinching-strong"):
            mats[0][:, 0] = 0.0
        assert check_classical(kind, *mats).holds


def test_checks_can_fail(rng):
    # the wrong direction of the singular value product inequality is detected
    a, b = np.diag([3.0, 1.0]), np.diag([1.0, 3.0])
    sab = singular_values(a @ b)
    assert not weak_majorizes(singular_values(a) * singular_values(b), sab * 0.5).holds
    # reversed Lidskii (spectrum of the difference bounded by difference of spectra) fails in general
    x, y = np.diag([1.0, 0.0]), np.diag([0.0, 1.0])
    from ritz_majorize.majorization import strong_majorizes

    assert not strong_majorizes(eigvals(x - y), eigvals(x) - eigvals(y)).holds


def test_errors():
    with pytest.raises(InvalidInput):
        check_classical("no-such-kind", np.eye(2), np.eye(2))
    with pytest.raises(InvalidInput):
        check_classical("lidskii", np.eye(2))
    with pytest.raises(InvalidInput):
        check_classical("lidskii", np.eye(2), np.eye(3))
    with pytest.raises(InvalidInput):
        check_classical("gelfand-naimark", np.ones((2, 3)), np.ones((2, 3)))
    with pytest.raises(InvalidInput):
        check_classical("three-factor", np.ones((2, 3)), np.ones((3, 2)), np.ones((3, 3)))
    with pytest.raises(InvalidInput):
        check_classical("pinching-weak", np.ones((3, 1)), np.ones((2, 1)), np.eye(3), np.ones((3, 1)), np.ones((3, 1)))
    with pytest.raises(InvalidInput):
        check_classical("pinching-strong", np.ones((3, 1)), np.ones((3, 1)), np.ones((3, 2)))
    with pytest.raises(InvalidInput):
        check_classical("pinching-strong", np.ones((3, 1)), np.ones((3, 1)), np.eye(2))
