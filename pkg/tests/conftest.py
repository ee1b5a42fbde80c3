import mpmath
import pytest

from ladderstrength.spectral import canonical_sign


def mp_eigenvectors(h, dps=50):
    """High-precision reference eigensystem (ascending, sign-canonical columns)."""
    import numpy as np

    with mpmath.workdps(dps):
        evals, q = mpmath.eigsy(mpmath.matrix(h.tolist()))
        n = h.shape[0]
        order = sorted(range(n), key=lambda k: evals[k])
        vals = [evals[k] for k in order]
        vecs = []
        for k in order:
            col = [q[i, k] for i in range(n)]
            big = max(range(n), key=lambda i: abs(col[i]))
            if col[big] < 0:
                col = [-x for x in col]
            vecs.append(col)
    return vals, vecs


@pytest.fixture
def mp_eig():
    return mp_eigenvectors


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
