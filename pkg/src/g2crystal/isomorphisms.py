"""Explicit crystal isomorphisms between the three realizations.

The tableau <-> monomial map copies the count vector verbatim: row-1 letter
counts become the level-(r-1) X exponents and the row-2 count of 3s becomes
the level-(r-2) one.  The tableau -> tensor map is

    k11 = b2 + b3 + b0 + b3bar + b2bar + b1bar
    k12 = k11 - b2
    k13 = 2*(b3bar + b2bar + b1bar) + b0
    k13bar = b2bar + b1bar,  k12bar = b1bar,  k22 = b3low

and its inverse resolves the halved middle term with integer arithmetic:

    b1bar = k12bar, b2bar = k13bar - k12bar, b3bar = k13//2 - k13bar,
    b0 = k13 % 2, b3 = k12 - ceil(k13/2), b2 = k11 - k12, b3low = k22.

Changing the family parameters of a monomial element while keeping its
count vector is itself an isomorphism onto the shifted family.
"""

from __future__ import annotations

from .cliff import CliffElement
from .minf import MinfElement
from .tableaux import MLTableau


def tableau_to_minf(tab):
    """Count-copy isomorphism onto M(infinity) proper."""
    return MinfElement(*tab.counts())


def minf_to_tableau(elem):
    if elem.params() != (1, 1, 0):
        raise ValueError(
            f"only M(1,1;0;infinity) corresponds to tableaux directly, got params {elem.params()}"
        )
    return MLTableau(*elem.counts())


def tableau_to_cliff(tab):
    tail3 = tab.b3bar + tab.b2bar + tab.b1bar
    return CliffElement(
        k12bar=tab.b1bar,
        k13bar=tab.b2bar + tab.b1bar,
        k13=2 * tail3 + tab.b0,
        k12=tab.b3 + tab.b0 + tail3,
        k11=tab.b2 + tab.b3 + tab.b0 + tail3,
        k22=tab.b3low,
    )


def cliff_to_tableau(elem):
    if not elem.is_member():
        raise ValueError(f"not in the realization: {elem.text()}")
    return MLTableau(
        b2=elem.k11 - elem.k12,
        b3=elem.k12 - (elem.k13 + 1) // 2,
        b0=elem.k13 % 2,
        b3bar=elem.k13 // 2 - elem.k13bar,
        b2bar=elem.k13bar - elem.k12bar,
        b1bar=elem.k12bar,
        b3low=elem.k22,
    )


def shift_params(elem, p1, p2, r):
    """Isomorphism onto the shifted family: same counts, new parameters."""
    return elem.with_params(p1, p2, r)


def minf_to_cliff(elem):
    return tableau_to_cliff(minf_to_tableau(elem))


def cliff_to_minf(elem):
    return tableau_to_minf(cliff_to_tableau(elem))
