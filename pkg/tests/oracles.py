"""Independent reference computations used by the tests.

None of these call into branch2; they recompute the same quantities by a
different route (brute force, regular continued fractions, Fractions).
"""

from math import gcd


def regular_cf(p, q):
    """Regular continued fraction [a0; a1, ...] of p/q by floor division."""
    out = []
    while q:
        a = p // q
        out.append(a)
        p, q = q, p - a * q
    return out


def continuant(terms):
    """Numerator of [a0; a1, ..., an] via h_n = a_n h_{n-1} + h_{n-2}."""
    h_prev, h = 0, 1
    for a in terms:
        h_prev, h = h, a * h + h_prev
    return h


def continuant_numerator(p, q):
    return abs(continuant(regular_cf(p, q)))


def brute_bezout(p, q):
    for u in range(1, abs(q)):
        if (1 - p * u) % q == 0:
            return u, (1 - p * u) // q
    raise ValueError("no solution")


def half_shift_fixed(r, s):
    """Is some line of direction (r, s) on R^2/Z^2 carried to itself by (x, y) -> (x + 1/2, y + 1/2)?

    That happens iff there is t with r*t and s*t both congruent to 1/2 mod 1.
    Every t solving the first congruence is (2j + 1)/(2r) mod 1, so it is
    enough to try those and test the second one.
    """
    if r == 0:
        return False
    r2 = 2 * abs(r)
    for j in range(abs(r)):
        # s*t - 1/2 with t = (2j + 1)/(2|r|), times 2|r|
        if (s * (2 * j + 1) - abs(r)) % r2 == 0:
            return True
    return False


def slope_fixed_by_reflection(p, q):
    """Is the slope p/q (as an unoriented class) fixed by mu -> mu, lambda -> -lambda?"""
    g = gcd(p, q)
    a, b = p // g, q // g
    return (a, -b) in ((a, b), (-a, -b))


def int_det(m):
    """Determinant by cofactor expansion over Fractions; fine for n <= 6."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * int_det(minor)
    return total


def surgery_h1_oracle(framings, linking):
    """|det| of the linking presentation by cofactor expansion; 0 means infinite."""
    n = len(framings)
    m = [[framings[i][0] if i == j else framings[i][1] * linking[i][j] for j in range(n)] for i in range(n)]
    return abs(int_det(m))
