"""Exact determinants for small integer matrices."""

from fractions import Fraction


def exact_det(rows):
    """Determinant of a square integer (or rational) matrix, computed exactly.

    Gaussian elimination over the rationals; rows with a zero in the pivot
    column are skipped, which keeps banded matrices (Goeritz matrices of
    two-bridge diagrams, linking matrices) cheap.
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [[Fraction(x) for x in row] for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        pk = m[k][k]
        det *= pk
        row_k = m[k]
        nz = [j for j in range(k + 1, n) if row_k[j] != 0]
        for i in range(k + 1, n):
            f = m[i][k]
            if f == 0:
                continue
            f /= pk
            row_i = m[i]
            for j in nz:
                row_i[j] -= f * row_k[j]
    return int(det) if det.denominator == 1 else det
