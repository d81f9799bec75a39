"""Seifert invariants of torus-knot fillings and their antipodal quotients.

Everything here is exact: homology orders are integers and the Euler number
is a Fraction.

Convention note: for the quotient family the order |2r - pqs| is returned as
a closed form.  Feeding ``quotient_invariants`` to ``sfs_h1_order`` gives
|2r(qu + pv) + pqs| instead; the two agree once the Bezout coefficients are
attached to the other fibre (p, 2v), (q, 2u) and the filling fibre is taken
as (r, -s).  Both are exposed and the discrepancy is left visible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .slopes import Slope
from .surgery import INFINITE


@dataclass(frozen=True)
class SeifertInvariants:
    """Unnormalized invariants {b, (Oo, g), (a1, b1), ..., (an, bn)}.

    Fibres keep the order they were given in for printing; equality compares
    the canonical order (by |alpha|, then beta).
    """

    b: int
    fibers: tuple = ()
    genus: int = 0
    base: str = "Oo"

    def __post_init__(self):
        fibers = tuple((int(a), int(b)) for a, b in self.fibers)
        if any(a == 0 for a, _ in fibers):
            raise ValueError("fibre multiplicity alpha must be non-zero")
        if self.base != "Oo":
            raise ValueError(f"only the orientable base class Oo is supported, not {self.base!r}")
        if self.genus < 0:
            raise ValueError("negative base genus")
        object.__setattr__(self, "fibers", fibers)

    def canonical_fibers(self) -> tuple:
        return tuple(sorted(self.fibers, key=lambda f: (abs(f[0]), f[1])))

    def __eq__(self, other):
        if not isinstance(other, SeifertInvariants):
            return NotImplemented
        return (self.b, self.genus, self.base, self.canonical_fibers()) == (
            other.b,
            other.genus,
            other.base,
            other.canonical_fibers(),
        )

    def __hash__(self):
        return hash((self.b, self.genus, self.base, self.canonical_fibers()))

    def __str__(self):
        parts = [str(self.b), f"({self.base},{self.genus})"]
        parts += [f"({a},{b})" for a, b in self.fibers]
        return "{" + ",".join(parts) + "}"

    @classmethod
    def parse(cls, text: str) -> "SeifertInvariants":
        """Read brace notation, e.g. ``{1,(Oo,0),(-2,1),(-3,1),(-11,2)}``."""
        t = re.sub(r"\s+", "", text)
        m = re.fullmatch(r"\{([+-]?\d+),\((\w+),(\d+)\)((?:,\([+-]?\d+,[+-]?\d+\))*)\}", t)
        if not m:
            raise ValueError(f"cannot parse Seifert invariants {text!r}")
        fibers = re.findall(r"\(([+-]?\d+),([+-]?\d+)\)", m.group(4))
        return cls(int(m.group(1)), tuple(fibers), int(m.group(3)), m.group(2))

    def normalized_sum(self) -> Fraction:
        return self.b + sum((Fraction(b, a) for a, b in self.fibers), Fraction(0))

    def shift(self, i: int, k: int) -> "SeifertInvariants":
        """Move k units from b into fibre i: beta_i += k*alpha_i, b -= k."""
        fibers = list(self.fibers)
        a, beta = fibers[i]
        fibers[i] = (a, beta + k * a)
        return SeifertInvariants(self.b - k, tuple(fibers), self.genus, self.base)


@dataclass(frozen=True)
class BezoutPair:
    u: int
    v: int


def bezout(p: int, q: int) -> BezoutPair:
    """The solution of p*u + q*v = 1 with 0 < u < |q|."""
    if abs(q) < 2:
        raise ValueError(f"need |q| >= 2, got q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"{p} and {q} are not coprime")
    m = abs(q)
    u = pow(p, -1, m)
    v = (1 - p * u) // q
    return BezoutPair(u, v)


def _check_quotient_args(p, q, filling: Slope):
    if p % 2 == 0 or q % 2 == 0:
        raise ValueError(f"torus knot parameters must be odd, got ({p}, {q})")
    if abs(p) < 3 or abs(q) < 3:
        raise ValueError("torus knot parameters must be at least 3 in absolute value")
    if gcd(p, q) != 1:
        raise ValueError(f"{p} and {q} are not coprime")
    if filling.p % 2 == 0 or filling.q % 2 == 0:
        raise ValueError(
            f"filling {filling} has no setwise fixed representative "
            "(needs numerator and denominator both odd); the quotient is free"
        )


def quotient_invariants(p: int, q: int, filling: Slope) -> SeifertInvariants:
    """Invariants of the antipodal quotient of the r/s filling of T(p, q)."""
    _check_quotient_args(p, q, filling)
    bz = bezout(p, q)
    return SeifertInvariants(0, ((p, 2 * bz.u), (q, 2 * bz.v), (filling.p, filling.q)))


def quotient_h1_order(p: int, q: int, r: int, s: int) -> int:
    """|2r - pqs|, the order of H_1 of that quotient."""
    _check_quotient_args(p, q, Slope(r, s))
    return abs(2 * r - p * q * s)


def euler_number(inv: SeifertInvariants) -> Fraction:
    return -inv.normalized_sum()


def sfs_h1_order(inv: SeifertInvariants):
    """|alpha_1 ... alpha_n * (b + sum beta_i/alpha_i)|, INFINITE when zero.

    Positive base genus always gives infinite homology.
    """
    if inv.genus > 0:
        return INFINITE
    order = abs(prod(a for a, _ in inv.fibers) * inv.normalized_sum())
    assert order.denominator == 1
    return INFINITE if order == 0 else int(order)
