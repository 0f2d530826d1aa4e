import numpy as np
import pytest
from hypothesis import settings

from ritz_majorize.linalg import _backend, _fallback

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

BACKENDS = ["python"] + (["cython"] if _backend.BACKEND == "cython" else [])


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run the test once per available kernel backend."""
    if request.param == "python":
        monkeypatch.setattr(_backend, "jacobi_eigh", _fallback.jacobi_eigh)
        monkeypatch.setattr(_backend, "jacobi_svd", _fallback.jacobi_svd)
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def random_symmetric(rng, n):
    g = rng.standard_normal((n, n))
    return g + g.T


def random_basis(rng, n, p):
    q, _ = np.linalg.qr(rng.standard_normal((n, p)))
    return q


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
