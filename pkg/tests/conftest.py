import pytest

from lsseq import LsPoints

# The standard tuples exercised throughout: both classical shapes (k=2),
# a pure radix case (k=1), and two genuine k=3 patterns.
PARAMS_SET = [(1, 1), (2, 1), (3, 1), (2, 1, 1), (3, 2, 1), (4,)]

CLASSICAL_SET = [(1, 1), (2, 1), (3, 1)]  # k = 2 with L >= S


@pytest.fixture(scope="session")
def gens() -> dict:
    """One shared point generator per test tuple."""
    return {coeffs: LsPoints(coeffs) for coeffs in PARAMS_SET}
