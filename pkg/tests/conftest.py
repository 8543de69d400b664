"""Shared fixtures: the standard worked example and the known depth-2 slice."""

from __future__ import annotations

import pytest

from g2crystal.monomials import ExtMonomial

# A weight -5L1 - L2 element that exists in all three realizations and
# exercises every count at once.
EXAMPLE_EXPONENTS = {
    (1, -1): (1, 1),
    (1, 1): (0, -5),
    (1, 2): (0, -1),
    (2, -2): (1, -2),
    (2, -1): (0, -1),
    (2, 0): (0, 2),
}
EXAMPLE_COUNTS = (1, 0, 1, 2, 0, 1, 2)  # (b2, b3, b0, b3bar, b2bar, b1bar, b3low)
EXAMPLE_KS = (1, 1, 7, 4, 5, 2)  # (k12bar, k13bar, k13, k12, k11, k22)
EXAMPLE_ROW1 = ["1", "1", "1", "1", "2", "0", "3b", "3b", "1b"]
EXAMPLE_ROW2 = ["2", "3", "3"]

# The full depth-2 slice of the crystal in Y-variable form, keyed by the
# lowering word reaching each element.
DEPTH2_YFORMS = {
    (): {(1, -1): (1, 0), (2, -2): (1, 0)},
    (1,): {(1, -1): (1, -1), (1, 0): (0, -1), (2, -2): (1, 0), (2, -1): (0, 1)},
    (2,): {(1, -1): (1, 3), (2, -2): (1, -1), (2, -1): (0, -1)},
    (1, 1): {(1, -1): (1, -2), (1, 0): (0, -2), (2, -2): (1, 0), (2, -1): (0, 2)},
    (1, 2): {(1, -1): (1, -1), (1, 0): (0, 2), (2, -2): (1, 0), (2, 0): (0, -1)},
    (2, 1): {(1, -1): (1, 2), (1, 0): (0, -1), (2, -2): (1, -1)},
    (2, 2): {(1, -1): (1, 6), (2, -2): (1, -2), (2, -1): (0, -2)},
}

# The same slice as canonical count vectors (b2, b3, b0, b3bar, b2bar, b1bar, b3low).
DEPTH2_COUNTS = {
    (): (0, 0, 0, 0, 0, 0, 0),
    (1,): (1, 0, 0, 0, 0, 0, 0),
    (2,): (0, 0, 0, 0, 0, 0, 1),
    (1, 1): (2, 0, 0, 0, 0, 0, 0),
    (1, 2): (0, 1, 0, 0, 0, 0, 0),
    (2, 1): (1, 0, 0, 0, 0, 0, 1),
    (2, 2): (0, 0, 0, 0, 0, 0, 2),
}


@pytest.fixture
def example_monomial():
    return ExtMonomial(EXAMPLE_EXPONENTS)
