"""The distinguished monomial set M(infinity) and its shifted family.

Elements are stored in the canonical product form

    X_1(r-1)^(p1+p2, -(b2+b3+b0+b3bar+b2bar+b1bar))
    X_2(r-1)^(0,b2) X_3(r-1)^(0,b3) X_0(r-1)^(0,b0)
    X_3b(r-1)^(0,b3bar) X_2b(r-1)^(0,b2bar) X_1b(r-1)^(0,b1bar)
    X_2(r-2)^(p2,-b3low) X_3(r-2)^(0,b3low)

with seven nonnegative counts (``b0 <= 1``) and family parameters
``(p1, p2, r)``; the defaults ``(1, 1, 0)`` give M(infinity) proper.  The
``X`` change of variables expands into ``Y`` variables via
:func:`x_monomial`, and membership of a raw monomial is decided by the
three support-shape conditions checked in :func:`is_minf_monomial`.

Kashiwara operators are evaluated by the signature rule: write a word of
1s and 0s under an ordered list of components, cancel (0,1) adjacencies,
and dispatch on the component owning the leftmost surviving 0 (for the
lowering operator) or the rightmost surviving 1 (for the raising
operator).  Each case is multiplication by an explicit ``A_i(m)^{+-1}``,
so the rule agrees with the generic monomial operators; the verification
suites check that equivalence exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .monomials import ExtMonomial

X_LETTERS = ("1", "2", "3", "0", "3b", "2b", "1b")


def x_monomial(letter, m, u, v):
    """Expand ``X_letter(m)^(u,v)`` into Y-variables."""
    if letter == "1":
        exp = {(1, m): (u, v)}
    elif letter == "2":
        exp = {(2, m): (u, v), (1, m + 1): (-u, -v)}
    elif letter == "3":
        exp = {(1, m + 1): (2 * u, 2 * v), (2, m + 1): (-u, -v)}
    elif letter == "0":
        exp = {(1, m + 1): (u, v), (1, m + 2): (-u, -v)}
    elif letter == "3b":
        exp = {(2, m + 1): (u, v), (1, m + 2): (-2 * u, -2 * v)}
    elif letter == "2b":
        exp = {(1, m + 2): (u, v), (2, m + 2): (-u, -v)}
    elif letter == "1b":
        exp = {(1, m + 3): (-u, -v)}
    else:
        raise ValueError(f"unknown X letter {letter!r}")
    return ExtMonomial(exp)


@dataclass(frozen=True)
class MinfElement:
    """Canonical count vector of an element of M(p1, p2; r; infinity)."""

    b2: int = 0
    b3: int = 0
    b0: int = 0
    b3bar: int = 0
    b2bar: int = 0
    b1bar: int = 0
    b3low: int = 0
    p1: int = 1
    p2: int = 1
    r: int = 0

    def __post_init__(self):
        counts = self.counts()
        if any(c < 0 for c in counts):
            raise ValueError(f"negative count in {counts}")
        if self.b0 > 1:
            raise ValueError(f"b0 must be 0 or 1, got {self.b0}")
        if self.p1 < 1 or self.p2 < 1:
            raise ValueError("family parameters p1, p2 must be positive")

    def counts(self):
        return (self.b2, self.b3, self.b0, self.b3bar, self.b2bar, self.b1bar, self.b3low)

    def params(self):
        return (self.p1, self.p2, self.r)

    def key(self):
        return self.counts() + self.params()

    def with_params(self, p1, p2, r):
        return replace(self, p1=p1, p2=p2, r=r)

    # -- change of variables ----------------------------------------------

    def x_factors(self):
        """The nine ``(letter, m, u, v)`` factors of the canonical product."""
        body = self.b2 + self.b3 + self.b0 + self.b3bar + self.b2bar + self.b1bar
        return [
            ("1", self.r - 1, self.p1 + self.p2, -body),
            ("2", self.r - 1, 0, self.b2),
            ("3", self.r - 1, 0, self.b3),
            ("0", self.r - 1, 0, self.b0),
            ("3b", self.r - 1, 0, self.b3bar),
            ("2b", self.r - 1, 0, self.b2bar),
            ("1b", self.r - 1, 0, self.b1bar),
            ("2", self.r - 2, self.p2, -self.b3low),
            ("3", self.r - 2, 0, self.b3low),
        ]

    def to_monomial(self):
        mono = ExtMonomial.one()
        for letter, m, u, v in self.x_factors():
            mono = mono * x_monomial(letter, m, u, v)
        return mono

    # -- structure maps (delegated to the Y-form) --------------------------

    def wt(self):
        return self.to_monomial().wt()

    def eps(self, i):
        return self.to_monomial().eps(i)

    def phi(self, i):
        return self.to_monomial().phi(i)

    # -- signature-rule operators ------------------------------------------

    def signature(self, i):
        """Reduced i-signature with the source component of each survivor.

        The raw word is emitted over the component order X_1b X_2b X_3b X_0
        X_3 X_2 for i = 1 (ones under X_1b, X_3b twice per unit, X_0, X_2;
        zeros under X_2b, X_0, X_3 twice per unit) and X_2b X_3b X_3 X_2
        X_3low for i = 2; (0,1) adjacencies then cancel until the word is
        ones followed by zeros.
        """
        word = []
        if i == 1:
            word += [(1, "1b")] * self.b1bar
            word += [(0, "2b")] * self.b2bar
            word += [(1, "3b")] * (2 * self.b3bar)
            word += [(1, "0")] * self.b0 + [(0, "0")] * self.b0
            word += [(0, "3")] * (2 * self.b3)
            word += [(1, "2")] * self.b2
        elif i == 2:
            word += [(1, "2b")] * self.b2bar
            word += [(0, "3b")] * self.b3bar
            word += [(1, "3")] * self.b3
            word += [(0, "2")] * self.b2
            word += [(1, "3low")] * self.b3low
        else:
            raise ValueError(f"index must be 1 or 2, got {i}")
        reduced = []
        for sym in word:
            if sym[0] == 1 and reduced and reduced[-1][0] == 0:
                reduced.pop()
            else:
                reduced.append(sym)
        return reduced

    def f(self, i):
        """Lowering operator; total on the family (never the crystal zero)."""
        sig = self.signature(i)
        zero_tags = [tag for sym, tag in sig if sym == 0]
        tag = zero_tags[0] if zero_tags else None
        if i == 1:
            if tag is None:
                return replace(self, b2=self.b2 + 1)
            if tag == "2b":
                return replace(self, b2bar=self.b2bar - 1, b1bar=self.b1bar + 1)
            if tag == "0":
                return replace(self, b0=self.b0 - 1, b3bar=self.b3bar + 1)
            # a surviving 0 at X_3 forces b0 = 0, else the X_0 zero sits further left
            assert self.b0 == 0
            return replace(self, b3=self.b3 - 1, b0=self.b0 + 1)
        if tag is None:
            return replace(self, b3low=self.b3low + 1)
        if tag == "3b":
            return replace(self, b3bar=self.b3bar - 1, b2bar=self.b2bar + 1)
        return replace(self, b2=self.b2 - 1, b3=self.b3 + 1)

    def e(self, i):
        """Raising operator; ``None`` when no 1 survives in the signature."""
        sig = self.signature(i)
        one_tags = [tag for sym, tag in sig if sym == 1]
        if not one_tags:
            return None
        tag = one_tags[-1]
        if i == 1:
            if tag == "1b":
                return replace(self, b1bar=self.b1bar - 1, b2bar=self.b2bar + 1)
            if tag == "3b":
                # a surviving 1 at X_3b forces b0 = 0: the X_0 one would outlive it
                assert self.b0 == 0
                return replace(self, b3bar=self.b3bar - 1, b0=self.b0 + 1)
            if tag == "0":
                assert self.b0 == 1
                return replace(self, b0=self.b0 - 1, b3=self.b3 + 1)
            return replace(self, b2=self.b2 - 1)
        if tag == "2b":
            return replace(self, b2bar=self.b2bar - 1, b3bar=self.b3bar + 1)
        if tag == "3":
            return replace(self, b3=self.b3 - 1, b2=self.b2 + 1)
        return replace(self, b3low=self.b3low - 1)

    # -- serialization -----------------------------------------------------

    def text(self):
        parts = [
            f"X_{letter}({m})^({u},{v})"
            for letter, m, u, v in self.x_factors()
            if (u, v) != (0, 0)
        ]
        return " ".join(parts)

    def to_json(self):
        return {
            "b2": self.b2,
            "b3": self.b3,
            "b0": self.b0,
            "b3bar": self.b3bar,
            "b2bar": self.b2bar,
            "b1bar": self.b1bar,
            "b3low": self.b3low,
            "p1": self.p1,
            "p2": self.p2,
            "r": self.r,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(**{k: int(v) for k, v in obj.items()})


def highest_minf(p1=1, p2=1, r=0):
    return MinfElement(p1=p1, p2=p2, r=r)


def _support_exponents(monomial, p1, p2, r):
    """Exponents at the eight allowed positions, or ``None`` on shape mismatch."""
    allowed = {
        (1, r - 1): p1,
        (1, r): 0,
        (1, r + 1): 0,
        (1, r + 2): 0,
        (2, r - 2): p2,
        (2, r - 1): 0,
        (2, r): 0,
        (2, r + 1): 0,
    }
    for (i, m) in monomial.support():
        if (i, m) not in allowed:
            return None
    a = {}
    for (i, m), u_req in allowed.items():
        u, v = monomial.exponent(i, m)
        if u != u_req:
            return None
        a[(i, m)] = v
    return a


def is_minf_monomial(monomial, p1=1, p2=1, r=0):
    """Membership of a raw monomial in M(p1, p2; r; infinity).

    Checks the support shape and the three defining conditions on the
    ordinary exponents: the sign constraints, the two linear relations, and
    the shared-parity nonnegativity constraint.
    """
    a = _support_exponents(monomial, p1, p2, r)
    if a is None:
        return False
    a1m1, a10, a11, a12 = (a[(1, r - 1)], a[(1, r)], a[(1, r + 1)], a[(1, r + 2)])
    a2m2, a2m1, a20, a21 = (a[(2, r - 2)], a[(2, r - 1)], a[(2, r)], a[(2, r + 1)])
    if a2m2 - a2m1 > 0 or a21 > 0 or a12 > 0 or a2m2 > 0:
        return False
    if (a1m1 - a11 - a12) + (2 * a2m2 + a2m1 - a20 - 2 * a21) != 0:
        return False
    if (a1m1 + a10 - a12) + (a2m2 + 2 * a2m1 + a20 - a21) != 0:
        return False
    s1 = a10 + a2m1 - a2m2
    s2 = -a11 - a21
    return s1 >= 0 and s2 >= 0 and s1 % 2 == s2 % 2


def minf_from_monomial(monomial, p1=1, p2=1, r=0):
    """Canonical count vector of a member, via the change of variables

    b2 = a2^{r-1} - a2^{r-2},  b2bar = -a2^{r+1},  b1bar = -a1^{r+2},
    b3low = -a2^{r-2}, and the parity split fixing b0 in {0, 1} with
    2*b3 = a1^r + a2^{r-1} - a2^{r-2} - b0 and 2*b3bar = -a1^{r+1} - a2^{r+1} - b0.
    """
    if not is_minf_monomial(monomial, p1, p2, r):
        raise ValueError(f"not a member of M({p1},{p2};{r};infinity): {monomial.text()}")
    a = _support_exponents(monomial, p1, p2, r)
    a10, a11, a12 = a[(1, r)], a[(1, r + 1)], a[(1, r + 2)]
    a2m2, a2m1, a21 = a[(2, r - 2)], a[(2, r - 1)], a[(2, r + 1)]
    s1 = a10 + a2m1 - a2m2
    s2 = -a11 - a21
    b0 = s1 % 2
    return MinfElement(
        b2=a2m1 - a2m2,
        b3=(s1 - b0) // 2,
        b0=b0,
        b3bar=(s2 - b0) // 2,
        b2bar=-a21,
        b1bar=-a12,
        b3low=-a2m2,
        p1=p1,
        p2=p2,
        r=r,
    )
