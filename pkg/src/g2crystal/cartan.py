"""G2 Cartan datum, weight arithmetic, and extended exponent pairs.

Every module in the package takes its conventions from here.  The index set
is I = {1, 2} with alpha_1 the short root, fixed by

    <h_1, alpha_1> = 2,   <h_1, alpha_2> = -3,
    <h_2, alpha_1> = -1,  <h_2, alpha_2> = 2.

Weights are stored in fundamental-weight coordinates ``(w1, w2)`` meaning
``w1*Lambda_1 + w2*Lambda_2``; simple-root coordinates are computed on
demand (the change of basis is unimodular, so both directions stay in
integers).

Extended exponents are pairs ``(u, v)`` of integers ordered
lexicographically; plain tuples already compare that way, so an "ExtPair"
is just a ``tuple[int, int]`` and pair arithmetic lives in the helper
functions below.  An extended weight is one pair per fundamental weight.

Crystal element contract
------------------------
The element classes of the realization modules all provide the same duck
interface, which the graph and verification layers rely on:

* ``f(i)`` / ``e(i)``: Kashiwara operators, returning a new element or
  ``None`` for the crystal zero,
* ``wt()``: weight in Lambda-coordinates, ``eps(i)``/``phi(i)``: integers,
* ``key()``: hashable, sortable canonical encoding,
* ``text()``: canonical one-line rendering,
* ``to_json()`` and classmethod ``from_json(obj)``.

All of them are immutable values; everything here is a pure function.
"""

from __future__ import annotations

from fractions import Fraction

INDEX_SET = (1, 2)

# a_ij = <h_i, alpha_j>
CARTAN = {(1, 1): 2, (1, 2): -3, (2, 1): -1, (2, 2): 2}

# Monomial convention constants c_ij with c_12 + c_21 = 1.
C_SHIFT = {(1, 2): 1, (2, 1): 0}

ExtPair = tuple  # (u, v), lexicographic order == tuple order
Weight = tuple  # (w1, w2) in Lambda-coordinates

PAIR_ZERO = (0, 0)
WEIGHT_ZERO = (0, 0)

# Simple roots in Lambda-coordinates: alpha_j = sum_i a_ij Lambda_i.
SIMPLE_ROOTS = {1: (2, -1), 2: (-3, 2)}

# Positive roots of G2 in simple-root coordinates (a, b) = a*alpha_1 + b*alpha_2.
POSITIVE_ROOTS = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))


def pair_add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def pair_neg(p):
    return (-p[0], -p[1])


def pair_scale(p, c):
    return (c * p[0], c * p[1])


def weight_add(w, x):
    return (w[0] + x[0], w[1] + x[1])


def weight_sub(w, x):
    return (w[0] - x[0], w[1] - x[1])


def fundamental_weight(i):
    return (1, 0) if i == 1 else (0, 1)


def simple_root(i):
    return SIMPLE_ROOTS[i]


def pairing(i, w):
    """Evaluate <h_i, w> for a weight in Lambda-coordinates."""
    return w[i - 1]


def weight_to_roots(w):
    """Write ``w = a*alpha_1 + b*alpha_2`` and return ``(a, b)``.

    The Cartan matrix has determinant 1, so the coefficients are integers
    for every integral weight.
    """
    w1, w2 = w
    return (2 * w1 + 3 * w2, w1 + 2 * w2)


def roots_to_weight(a, b):
    """Inverse of :func:`weight_to_roots`; accepts rational coefficients."""
    w1 = 2 * a - 3 * b
    w2 = -a + 2 * b
    if isinstance(w1, Fraction):
        if w1.denominator == 1 and w2.denominator == 1:
            return (int(w1), int(w2))
    return (w1, w2)


def ext_weight_add(ew, fx):
    return (pair_add(ew[0], fx[0]), pair_add(ew[1], fx[1]))


def ext_weight_project(ew):
    """Project an extended weight onto its ordinary part (second components)."""
    return (ew[0][1], ew[1][1])
