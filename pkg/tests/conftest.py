import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def random_density(rng: np.random.Generator, num_qubits: int, rank: int | None = None) -> np.ndarray:
    """Ginibre-sampled mixed state, optionally rank-deficient."""
    d = 2**num_qubits
    k = rank or d
    g = rng.normal(size=(d, k)) + 1j * rng.normal(size=(d, k))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def ptrace_loop(rho: np.ndarray, n: int, keep: list[int]) -> np.ndarray:
    """Partial trace by explicit summation over basis indices (test oracle)."""
    d_keep = 2 ** len(keep)
    out = np.zeros((d_keep, d_keep), dtype=complex)
    bits = lambda x: [(x >> (n - 1 - q)) & 1 for q in range(n)]
    for i in range(2**n):
        bi = bits(i)
        for j in range(2**n):
            bj = bits(j)
            if any(bi[q] != bj[q] for q in range(n) if q not in keep):
                continue
            r = int("".join(str(bi[q]) for q in keep), 2)
            c = int("".join(str(bj[q]) for q in keep), 2)
            out[r, c] += rho[i, j]
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, passed: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
