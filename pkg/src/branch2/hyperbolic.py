"""Möbius maps and the Dehn filling space of the torus.

Maps are 2x2 complex matrices of determinant 1, taken up to sign.  The
filling family is

    A_w(z) = exp(2 pi i / w) z,   B_w(z) = exp(2 pi zeta i / w) z,

with A_inf(z) = z + 1 and B_inf(z) = z + zeta.  The conjugator that carries
the family onto the cusp uses half angles, phi = pi / w:

    E_w(z) = -i z / (2 sin phi) + i / (2 sin phi)

so that E A E^-1 (z) = exp(2 i phi) z + exp(i phi), which tends to z + 1.
Only the translation part of E matters; its linear coefficient drops out.
"""

from __future__ import annotations

import cmath
import enum
import math
import re
from dataclasses import dataclass
from math import gcd
from typing import Optional

DET_TOL = 1e-12
CLASSIFY_TOL = 1e-9
RELATION_TOL = 1e-8
LENGTH_TOL = 1e-8
RESIDUAL_TOL = 1e-9

INFINITY = math.inf


def is_infinite(z) -> bool:
    return z is None or cmath.isinf(complex(z))


class Kind(enum.Enum):
    IDENTITY = "identity"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class MobiusMap:
    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        a, b, c, d = (complex(x) for x in (self.a, self.b, self.c, self.d))
        if not all(cmath.isfinite(x) for x in (a, b, c, d)):
            raise ValueError("matrix entries must be finite")
        det = a * d - b * c
        if abs(det) < 1e-300:
            raise ValueError("singular matrix")
        if abs(det - 1) > DET_TOL:
            r = cmath.sqrt(det)
            a, b, c, d = a / r, b / r, c / r, d / r
        for name, x in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, x)

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def scalar(cls, lam) -> "MobiusMap":
        """z -> lam z, as diag(sqrt(lam), 1/sqrt(lam)) with the principal root."""
        r = cmath.sqrt(complex(lam))
        return cls(r, 0, 0, 1 / r)

    @classmethod
    def affine(cls, alpha, beta) -> "MobiusMap":
        """z -> alpha z + beta."""
        return cls(alpha, beta, 0, 1)

    @classmethod
    def translation(cls, t) -> "MobiusMap":
        return cls(1, t, 0, 1)

    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> complex:
        return self.a + self.d

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return compose(self, other)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "MobiusMap":
        if n < 0:
            return self.inverse() ** (-n)
        out, base = MobiusMap.identity(), self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def __call__(self, z):
        return apply(self, z)

    def distance(self, other: "MobiusMap") -> float:
        """Entrywise max modulus, minimised over the sign of ``other``."""
        best = math.inf
        for sgn in (1, -1):
            d = max(
                abs(x - sgn * y)
                for x, y in zip((self.a, self.b, self.c, self.d), (other.a, other.b, other.c, other.d))
            )
            best = min(best, d)
        return best

    def close(self, other: "MobiusMap", tol: float = RELATION_TOL) -> bool:
        return self.distance(other) < tol

    def __str__(self):
        return f"[[{format_complex(self.a)}, {format_complex(self.b)}], [{format_complex(self.c)}, {format_complex(self.d)}]]"


def compose(f: MobiusMap, g: MobiusMap) -> MobiusMap:
    """f after g."""
    return MobiusMap(
        f.a * g.a + f.b * g.c,
        f.a * g.b + f.b * g.d,
        f.c * g.a + f.d * g.c,
        f.c * g.b + f.d * g.d,
    )


def apply(f: MobiusMap, z):
    """f(z) on the Riemann sphere; infinity is ``INFINITY``."""
    if is_infinite(z):
        return INFINITY if f.c == 0 else f.a / f.c
    z = complex(z)
    den = f.c * z + f.d
    if den == 0:
        return INFINITY
    return (f.a * z + f.b) / den


def classify(f: MobiusMap, tol: float = CLASSIFY_TOL) -> Kind:
    t = f.trace
    if abs(t - 2) < tol or abs(t + 2) < tol:
        sign = 1 if abs(t - 2) < tol else -1
        if f.distance(MobiusMap(sign, 0, 0, sign)) < tol:
            return Kind.IDENTITY
        return Kind.PARABOLIC
    if abs(t.imag) < tol and abs(t.real) < 2:
        return Kind.ELLIPTIC
    return Kind.HYPERBOLIC


def _reduce_angle(theta: float) -> float:
    """Representative of theta mod 2 pi in (-pi, pi]."""
    r = math.remainder(theta, 2 * math.pi)
    return math.pi if r == -math.pi else r


def complex_length(f: MobiusMap) -> complex:
    """l with multiplier e^l: Re l > 0 and Im l in (-pi, pi]."""
    kind = classify(f)
    if kind is not Kind.HYPERBOLIC:
        raise ValueError(f"complex length needs a loxodromic map, got {kind.value}")
    if abs(f.b) == 0 and abs(f.c) == 0:
        x = f.a
    else:
        t = f.trace
        root = cmath.sqrt(t * t - 4)
        x = (t + root) / 2
        if abs(x) < 1:
            x = (t - root) / 2
    if abs(x) < 1:
        x = 1 / x
    ell = 2 * cmath.log(x)
    return complex(ell.real, _reduce_angle(ell.imag))


def translation_length(f: MobiusMap) -> float:
    """Re of the complex length, 0 for non-loxodromic maps."""
    if classify(f) is not Kind.HYPERBOLIC:
        return 0.0
    return complex_length(f).real


@dataclass(frozen=True)
class FillingFamily:
    w: object
    zeta: complex
    A: MobiusMap
    B: MobiusMap
    E: Optional[MobiusMap] = None

    @property
    def finite(self) -> bool:
        return not is_infinite(self.w)

    def word(self, m: int, n: int) -> MobiusMap:
        """The image of alpha^m beta^n."""
        return (self.A ** m) @ (self.B ** n)


CUSP_A = MobiusMap.translation(1)


def filling_family(w, zeta=1j) -> FillingFamily:
    zeta = complex(zeta)
    if not cmath.isfinite(zeta) or zeta.imag <= 0:
        raise ValueError(f"zeta must have positive imaginary part, got {zeta}")
    if is_infinite(w):
        return FillingFamily(INFINITY, zeta, CUSP_A, MobiusMap.translation(zeta))
    w = complex(w)
    if not cmath.isfinite(w):
        raise ValueError("w must be finite or infinity")
    if w == 0:
        raise ValueError("w = 0 is not a point of Dehn filling space")
    A = MobiusMap.scalar(cmath.exp(2j * math.pi / w))
    B = MobiusMap.scalar(cmath.exp(2j * math.pi * zeta / w))
    E = None
    s = cmath.sin(math.pi / w)
    if abs(s) > 1e-12:
        E = MobiusMap.affine(-1j / (2 * s), 1j / (2 * s))
    return FillingFamily(w, zeta, A, B, E)


def conjugated_b_closed_form(w, zeta=1j) -> MobiusMap:
    """z -> e^{2 i zeta phi} z + e^{i zeta phi}(e^{i zeta phi} - e^{-i zeta phi}) / (e^{i phi} - e^{-i phi})."""
    phi = math.pi / complex(w)
    u = cmath.exp(1j * zeta * phi)
    return MobiusMap.affine(u * u, u * (u - 1 / u) / (cmath.exp(1j * phi) - cmath.exp(-1j * phi)))


def conjugation_residual(fam: FillingFamily):
    """(|E A E^-1 - A_inf|, |E B E^-1 - closed form|)."""
    if not fam.finite:
        raise ValueError("the residual is defined for finite w only")
    if fam.E is None:
        raise ValueError(f"the conjugator is undefined at w={format_complex(fam.w)}: sin(pi/w) = 0")
    E, Einv = fam.E, fam.E.inverse()
    ra = (E @ fam.A @ Einv).distance(CUSP_A)
    rb = (E @ fam.B @ Einv).distance(conjugated_b_closed_form(fam.w, fam.zeta))
    return ra, rb


def _ext_gcd(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        k, (a, b) = a // b, (b, a % b)
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def dual_curve(p: int, q: int):
    """(m, n) with p n - q m = 1."""
    g, x, y = _ext_gcd(p, q)
    if g != 1:
        raise ValueError(f"({p}, {q}) is not a coprime pair")
    return -y, x


def core_geodesic_length(p: int, q: int) -> float:
    if p == 0 and q == 0:
        raise ValueError("(0, 0) is not a slope")
    if gcd(p, q) != 1:
        raise ValueError(f"{p} and {q} are not coprime")
    return 2 * math.pi / (p * p + q * q)


def core_complex_length(p: int, q: int, zeta=1j) -> complex:
    """Complex length of rho_{p+qi}(alpha^m beta^n) for the dual curve (m, n)."""
    m, n = dual_curve(p, q)
    fam = filling_family(complex(p, q), zeta)
    return complex_length(fam.word(m, n))


def relation_residual(p: int, q: int, zeta=1j) -> float:
    """Distance of A_w^p B_w^q from the identity at w = p + qi."""
    fam = filling_family(complex(p, q), zeta)
    return fam.word(p, q).distance(MobiusMap.identity())


def coprime_pairs(max_norm: int):
    """All coprime (p, q) with 0 < p^2 + q^2 <= max_norm."""
    r = math.isqrt(max_norm)
    for p in range(-r, r + 1):
        for q in range(-r, r + 1):
            if 0 < p * p + q * q <= max_norm and gcd(p, q) == 1:
                yield p, q


@dataclass(frozen=True)
class LengthSample:
    p: int
    q: int
    relation: float
    length: float
    expected: float

    @property
    def error(self) -> float:
        return abs(self.length - self.expected)


def length_sweep(max_norm: int, zeta=1j):
    out = []
    for p, q in coprime_pairs(max_norm):
        out.append(
            LengthSample(
                p,
                q,
                relation_residual(p, q, zeta),
                core_complex_length(p, q, zeta).real,
                core_geodesic_length(p, q),
            )
        )
    return out


def family_row(w, zeta=1j) -> dict:
    """One line of a family dump: traces, residuals and translation lengths."""
    fam = filling_family(w, zeta)
    row = {
        "w": format_complex(fam.w),
        "trace_A": format_complex(fam.A.trace),
        "trace_B": format_complex(fam.B.trace),
        "kind_A": classify(fam.A).value,
        "kind_B": classify(fam.B).value,
        "residual_A": "",
        "residual_B": "",
        "length_A": repr(translation_length(fam.A)),
        "length_B": repr(translation_length(fam.B)),
    }
    if fam.finite and fam.E is not None:
        ra, rb = conjugation_residual(fam)
        row["residual_A"], row["residual_B"] = repr(ra), repr(rb)
    return row


_COMPLEX_TEXT = re.compile(r"^[0-9eE.+\-ij]+$")


def parse_complex(text: str):
    """Read "a+bi", "bi", "i", "3", or "inf"; returns ``INFINITY`` for the latter."""
    t = text.strip().lower().replace(" ", "")
    if t in ("inf", "infinity", "oo", "∞"):
        return INFINITY
    if not t or not _COMPLEX_TEXT.match(t) or t.count("i") + t.count("j") > 1:
        raise ValueError(f"cannot parse complex number {text!r}")
    try:
        z = complex(t.replace("i", "j"))
    except ValueError:
        raise ValueError(f"cannot parse complex number {text!r}") from None
    if not cmath.isfinite(z):
        raise ValueError(f"{text!r} is not finite")
    return z


def format_complex(z) -> str:
    if is_infinite(z):
        return "inf"
    z = complex(z)
    return f"{z.real:.12g}{z.imag:+.12g}i"
