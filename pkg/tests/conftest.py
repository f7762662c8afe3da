import numpy as np
import pytest


def random_complex(rng, M):
    return rng.normal(size=M) + 1j * rng.normal(size=M)


def random_distribution(rng, M):
    return rng.dirichlet(np.ones(M))


def random_orthonormal(rng, M, k):
    """k orthonormal columns from the QR factor of a random complex matrix."""
    q, _ = np.linalg.qr(random_complex(rng, M * k).reshape(M, k))
    return [q[:, c] for c in range(k)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS, key=lambda s: int(s.split("]")[1].split(".")[0])):
        terminalreporter.write_line(line)
