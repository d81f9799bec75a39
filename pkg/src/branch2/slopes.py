"""Surgery slopes and their S/T words in SL(2, Z).

A slope p/q stands for the boundary class p*mu + q*lambda.  Slopes are kept
reduced with a non-negative denominator; infinity is (1, 0).

    >>> slope_to_word(Slope.parse("2/3")).text()
    'T S T^3 S'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

S_MATRIX = ((0, -1), (1, 0))
T_MATRIX = ((1, 1), (0, 1))
T_INV_MATRIX = ((1, -1), (0, 1))

LETTERS = {"S": S_MATRIX, "T": T_MATRIX, "T^-1": T_INV_MATRIX}

# Longest word slope_to_word will spell out letter by letter.
MAX_WORD_LETTERS = 10**6

_SLOPE_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


@dataclass(frozen=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if not isinstance(p, int) or not isinstance(q, int):
            raise TypeError("slope entries must be integers")
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a slope")
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Read "p/q", "p" or "inf"."""
        t = text.strip().lower()
        if t in ("inf", "infinity", "oo", "∞", "1/0", "-1/0"):
            return cls(1, 0)
        m = _SLOPE_RE.match(t)
        if not m:
            raise ValueError(f"cannot parse slope {text!r}")
        p = int(m.group(1))
        q = int(m.group(2)) if m.group(2) is not None else 1
        return cls(p, q)

    @classmethod
    def infinity(cls) -> "Slope":
        return cls(1, 0)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinite slope has no rational value")
        return Fraction(self.p, self.q)

    def __str__(self):
        if self.q == 0:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"


def mat_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def word_to_matrix(letters) -> tuple:
    """Ordered product of the letter matrices (identity for the empty word)."""
    m = ((1, 0), (0, 1))
    for letter in letters:
        try:
            m = mat_mul(m, LETTERS[letter])
        except KeyError:
            raise ValueError(f"unknown letter {letter!r}") from None
    return m


def _merge_runs(runs):
    out = []
    for letter, n in runs:
        if n == 0:
            continue
        if out and out[-1][0] == letter:
            out[-1] = (letter, out[-1][1] + n)
        else:
            out.append((letter, n))
    return tuple(out)


@dataclass(frozen=True)
class SL2Word:
    """A word in S, T and T^-1, stored run-length encoded as (letter, count)."""

    runs: tuple
    matrix: tuple

    @classmethod
    def from_letters(cls, letters) -> "SL2Word":
        letters = tuple(letters)
        return cls(_merge_runs((x, 1) for x in letters), word_to_matrix(letters))

    @classmethod
    def parse(cls, text: str) -> "SL2Word":
        """Read words such as "T S T^3 S" or "T^-2 S"; "" and "e" are empty."""
        letters = []
        for tok in text.replace("ε", "").split():
            if tok == "e":
                continue
            m = re.fullmatch(r"(S|T)(?:\^([+-]?\d+))?", tok)
            if not m:
                raise ValueError(f"bad word token {tok!r}")
            n = int(m.group(2)) if m.group(2) else 1
            if abs(n) > MAX_WORD_LETTERS:
                raise ValueError(f"exponent {n} too large")
            if m.group(1) == "S":
                letters += ["S"] * (n % 4)
            else:
                letters += ["T" if n > 0 else "T^-1"] * abs(n)
        return cls.from_letters(letters)

    @property
    def letters(self) -> tuple:
        return tuple(x for letter, n in self.runs for x in (letter,) * n)

    def __len__(self):
        return sum(n for _, n in self.runs)

    def syllables(self):
        """Run-length form: list of (letter, exponent) with T^-1 folded into T."""
        out = []
        for letter, n in self.runs:
            base, n = ("T", -n) if letter == "T^-1" else (letter, n)
            if out and out[-1][0] == base == "T":
                out[-1] = (base, out[-1][1] + n)
                if out[-1][1] == 0:
                    out.pop()
            else:
                out.extend([(base, 1)] * n if base == "S" else [(base, n)])
        return out

    def text(self) -> str:
        if not self.runs:
            return "ε"
        parts = []
        for base, n in self.syllables():
            parts.append(base if n == 1 else f"{base}^{n}")
        return " ".join(parts)

    def __str__(self):
        return self.text()


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def twist_exponents(s: Slope) -> list:
    """Exponents a_1, ..., a_k of the canonical word T^a1 S T^a2 S ... T^ak S.

    Each step takes a = ceil(x) and continues with -1/(x - a); on integers the
    denominator strictly drops, so the loop ends at infinity.
    """
    p, q = s.p, s.q
    out = []
    while q != 0:
        a = ceil_div(p, q)
        out.append(a)
        # -1/(p/q - a) = q/(aq - p), with 0 <= aq - p < q
        p, q = q, a * q - p
    return out


def slope_to_word(s: Slope) -> SL2Word:
    exps = twist_exponents(s)
    size = sum(abs(a) for a in exps) + len(exps)
    if size > MAX_WORD_LETTERS:
        raise ValueError(f"word for {s} has {size} letters (limit {MAX_WORD_LETTERS})")
    runs = []
    m = ((1, 0), (0, 1))
    for a in exps:
        runs.append(("T", a) if a >= 0 else ("T^-1", -a))
        runs.append(("S", 1))
        # T^a S = [[a, -1], [1, 0]]
        m = ((m[0][0] * a + m[0][1], -m[0][0]), (m[1][0] * a + m[1][1], -m[1][0]))
    return SL2Word(_merge_runs(runs), m)


def matrix_to_slope(m) -> Slope:
    """Slope read off the first column of an SL(2, Z) matrix."""
    (a, b), (c, d) = m
    if a * d - b * c != 1:
        raise ValueError(f"determinant {a * d - b * c} != 1")
    return Slope(a, c)
