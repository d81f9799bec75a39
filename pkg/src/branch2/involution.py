"""Involutions of knot complements and what they do under Dehn filling.

A symmetry type is the pair (fixed set in S^3, fixed set on the knot).  The
rules below decide, per type and slope, whether the involution extends over
the filling, whether it has fixed points there, and what the quotient is.
Quotients are symbolic descriptors, never manifolds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .slopes import Slope


class Fix(enum.Enum):
    S2 = "S2"
    S1 = "S1"
    S0 = "S0"
    EMPTY = "E"


class SymmetryType(enum.Enum):
    S2S1 = (Fix.S2, Fix.S1)
    S2S0 = (Fix.S2, Fix.S0)
    S1S1 = (Fix.S1, Fix.S1)
    S1S0 = (Fix.S1, Fix.S0)
    S1E = (Fix.S1, Fix.EMPTY)
    S0S0 = (Fix.S0, Fix.S0)
    S0E = (Fix.S0, Fix.EMPTY)
    EE = (Fix.EMPTY, Fix.EMPTY)

    @property
    def ambient_fix(self) -> Fix:
        return self.value[0]

    @property
    def knot_fix(self) -> Fix:
        return self.value[1]

    @property
    def tag(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "SymmetryType":
        key = text.strip().upper().replace("∅", "E").replace("(", "").replace(")", "")
        key = key.replace(",", "").replace("EMPTY", "E")
        try:
            return cls[key]
        except KeyError:
            raise ValueError(
                f"unknown symmetry type {text!r}; expected one of "
                + ", ".join(t.name for t in cls)
            ) from None

    @classmethod
    def from_pair(cls, ambient: Fix, knot: Fix) -> "SymmetryType":
        try:
            return cls((ambient, knot))
        except ValueError:
            raise ValueError(f"({ambient.value},{knot.value}) is not a possible symmetry type") from None

    def __str__(self):
        a, k = (f.value if f is not Fix.EMPTY else "∅" for f in self.value)
        return f"({a},{k})"


class QuotientKind(enum.Enum):
    THREE_SPHERE = "S3"
    LENS_SPACE = "lens space"
    SURGERY_ON_QUOTIENT_KNOT = "surgery on quotient knot"
    NON_ORIENTABLE_COVER = "non-orientable quotient"
    RP3_KNOT_FILLING = "filling of a knot in RP3"
    SINGULAR = "not a manifold"
    NONE = "none"


@dataclass(frozen=True)
class QuotientDescriptor:
    kind: QuotientKind
    orientable: bool = True
    knot: Optional[str] = None
    slope: Optional[Slope] = None
    lens: Optional[tuple] = None
    is_three_sphere: Optional[bool] = None
    seifert: Optional[object] = None

    def __str__(self):
        k = self.kind
        if k is QuotientKind.THREE_SPHERE:
            return "S3"
        if k is QuotientKind.LENS_SPACE:
            return f"L({self.lens[0]},{self.lens[1]})"
        if k is QuotientKind.SURGERY_ON_QUOTIENT_KNOT:
            return f"S3_{self.knot}({self.slope})"
        if k is QuotientKind.RP3_KNOT_FILLING:
            text = f"filling of {self.knot} in RP3"
            return text + (f" = SFS {self.seifert}" if self.seifert is not None else "")
        return k.value


NO_QUOTIENT = QuotientDescriptor(QuotientKind.NONE)


@dataclass(frozen=True)
class ExtensionResult:
    extends: bool
    free: bool
    quotient: QuotientDescriptor
    branch_components: int
    degenerate: bool = False
    note: str = ""

    def __post_init__(self):
        if self.free and self.branch_components != 0:
            raise ValueError("a free involution has no branch locus")
        if (self.quotient.kind is QuotientKind.NONE) == self.extends:
            raise ValueError("quotient kind must be NONE exactly when the involution does not extend")

    @property
    def is_branched_cover(self) -> bool:
        return self.extends and self.quotient.kind not in (QuotientKind.SINGULAR, QuotientKind.NONE)


UNKNOT_NAMES = ("unknot", "0_1", "o")


def _is_unknot(name: Optional[str]) -> bool:
    return name is not None and name.strip().lower() in UNKNOT_NAMES


def _lens(c: Slope) -> tuple:
    # p/q surgery on the unknot is L(p, q); only q mod p matters, -p/q gives L(p, -q)
    n = abs(c.p)
    if n == 0:
        return 0, 1  # S^1 x S^2
    return n, (c.q if c.p > 0 else -c.q) % n


def h2_z2_dim_of_surgery(s: Slope) -> int:
    """dim over Z/2 of H^2 of p/q surgery on a knot: H_1 is Z/p (Z for p = 0)."""
    return 0 if s.p % 2 else 1


def branch_components_bound(h2_z2_dim: int) -> int:
    """Fixed-set component count of an involution acting trivially on homology."""
    if h2_z2_dim < 0:
        raise ValueError("dimension must be non-negative")
    return 1 + h2_z2_dim


def cyclic_quotient_coefficient(s: Slope, n: int = 2) -> Slope:
    """Surgery coefficient on the quotient knot of an n-fold cyclic symmetry.

    Any slope for n = 2 (the result is reduced); only 1/q slopes for n > 2.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n > 2 and abs(s.p) != 1:
        raise ValueError(f"for n > 2 only 1/q slopes are covered, got {s}")
    return Slope(s.p, n * s.q)


def fixed_representative_exists(r: int, s: int) -> bool:
    """Does the class r*mu + s*lambda have a representative fixed by (x, y) -> (x + 1/2, y + 1/2)?

    Only when r and s are both odd.
    """
    return r % 2 == 1 and s % 2 == 1


def extend_involution(t: SymmetryType, s: Slope, quotient_knot: Optional[str] = None) -> ExtensionResult:
    """Extension of an involution of type ``t`` over the ``s`` filling.

    ``quotient_knot`` names the image of the knot for type (S1, empty):
    "unknot" or a knot name.  For (empty, empty) it is used as the name of
    the quotient knot in RP^3 when given.
    """
    if not isinstance(t, SymmetryType):
        raise ValueError(f"not a symmetry type: {t!r}")

    if t is SymmetryType.S1S0:
        return ExtensionResult(
            True,
            False,
            QuotientDescriptor(QuotientKind.THREE_SPHERE, is_three_sphere=True),
            branch_components_bound(h2_z2_dim_of_surgery(s)),
            note="branch locus: the quotient arc with the slope's rational tangle glued in",
        )

    if t is SymmetryType.S1E:
        if quotient_knot is None or not quotient_knot.strip():
            raise ValueError("type (S1,∅) needs the quotient knot: 'unknot' or a knot name")
        coeff = cyclic_quotient_coefficient(s, 2)
        comps = 1 if s.p % 2 else 2
        if coeff.is_infinite:
            quotient = QuotientDescriptor(QuotientKind.THREE_SPHERE, is_three_sphere=True)
        elif _is_unknot(quotient_knot):
            if abs(coeff.p) == 1:
                quotient = QuotientDescriptor(QuotientKind.THREE_SPHERE, is_three_sphere=True)
            else:
                quotient = QuotientDescriptor(
                    QuotientKind.LENS_SPACE,
                    knot="unknot",
                    slope=coeff,
                    lens=_lens(coeff),
                    is_three_sphere=False,
                )
        else:
            # non-trivial surgery on a non-trivial knot is never S^3
            quotient = QuotientDescriptor(
                QuotientKind.SURGERY_ON_QUOTIENT_KNOT,
                knot=quotient_knot.strip(),
                slope=coeff,
                is_three_sphere=False,
            )
        return ExtensionResult(True, False, quotient, comps)

    if t is SymmetryType.S0S0:
        # p*mu + q*lambda goes to p*mu - q*lambda
        if s.q == 0:
            return ExtensionResult(
                True,
                False,
                QuotientDescriptor(QuotientKind.SINGULAR, orientable=False),
                0,
                note="trivial filling: the quotient is singular at the image of a fixed point",
            )
        if s.p == 0:
            return ExtensionResult(
                True,
                True,
                QuotientDescriptor(QuotientKind.NON_ORIENTABLE_COVER, orientable=False, is_three_sphere=False),
                0,
                note="0 filling: free action, unbranched 2-fold cover of a non-orientable manifold",
            )
        return ExtensionResult(False, False, NO_QUOTIENT, 0, note="the slope is not preserved")

    if t is SymmetryType.S0E:
        return ExtensionResult(
            False,
            False,
            NO_QUOTIENT,
            0,
            note="never a branched cover: the quotient contains a cone on RP2",
        )

    if t is SymmetryType.EE:
        fixed = fixed_representative_exists(s.p, s.q)
        name = quotient_knot.strip() if quotient_knot and quotient_knot.strip() else "K/tau"
        quotient = QuotientDescriptor(QuotientKind.RP3_KNOT_FILLING, knot=name, is_three_sphere=None)
        if fixed:
            return ExtensionResult(True, False, quotient, 1, note="branch locus: core of the filling torus")
        return ExtensionResult(True, True, quotient, 0, note="free action: unbranched 2-fold cover")

    notes = {
        SymmetryType.S2S1: "only the unknot; no branched covers",
        SymmetryType.S2S0: "only the unknot and composite knots; no branched covers",
        SymmetryType.S1S1: "only the unknot; the standard branched double cover of S3 by itself",
    }
    return ExtensionResult(False, False, NO_QUOTIENT, 0, degenerate=True, note=notes[t])
