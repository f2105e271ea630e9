"""Exact linear algebra over the rationals (fractions.Fraction throughout).

Small and deliberate: reduced row echelon form, rank, nullspace, linear
solve, determinant, inverse, and the characteristic polynomial via
Faddeev-LeVerrier.  No pivots are chosen for numerical reasons (there is
no rounding), only for determinism: first nonzero entry in column order.
"""

from __future__ import annotations

from fractions import Fraction

Row = list
Matrix = list


def _as_fraction_rows(rows) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def rref(rows) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = _as_fraction_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def reduce_against(echelon: Matrix, pivots: list[int], vec) -> Row:
    """Reduce a vector modulo the row space of an echelon basis."""
    v = [Fraction(x) for x in vec]
    for row, c in zip(echelon, pivots):
        if v[c] != 0:
            f = v[c]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def in_row_space(echelon: Matrix, pivots: list[int], vec) -> bool:
    return all(x == 0 for x in reduce_against(echelon, pivots, vec))


def nullspace(rows, ncols: int | None = None) -> list[Row]:
    """Basis of {x : A x = 0}; one vector per free column, deterministic."""
    m = _as_fraction_rows(rows)
    if ncols is None:
        if not m:
            raise ValueError("ncols required for an empty system")
        ncols = len(m[0])
    if not m:
        echelon, pivots = [], []
    else:
        echelon, pivots = rref(m)
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(echelon, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve(rows, rhs) -> Row | None:
    """One solution of A x = b (free variables set to 0), or None."""
    m = _as_fraction_rows(rows)
    b = [Fraction(v) for v in rhs]
    if len(m) != len(b):
        raise ValueError("right-hand side length mismatch")
    if not m:
        return []
    ncols = len(m[0])
    augmented = [row + [bv] for row, bv in zip(m, b)]
    echelon, pivots = rref(augmented)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(echelon, pivots):
        x[pc] = row[-1]
    return x


def determinant(matrix) -> Fraction:
    m = _as_fraction_rows(matrix)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            det = -det
        det *= m[c][c]
        inv = Fraction(1) / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def inverse(matrix) -> Matrix | None:
    m = _as_fraction_rows(matrix)
    n = len(m)
    augmented = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    echelon, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in echelon]


def matmul(a, b) -> Matrix:
    a = _as_fraction_rows(a)
    b = _as_fraction_rows(b)
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def charpoly(matrix) -> list[Fraction]:
    """Coefficients [1, c1, ..., cn] of det(xI - A) = x^n + c1 x^(n-1) + ... + cn."""
    a = _as_fraction_rows(matrix)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("charpoly needs a square matrix")
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I ; c_k = -trace(A M_k) / k
        if k == 1:
            m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        else:
            m = matmul(a, m)
            ck = coeffs[-1]
            for i in range(n):
                m[i][i] += ck
        am = matmul(a, m)
        trace = sum((am[i][i] for i in range(n)), Fraction(0))
        coeffs.append(-trace / k)
    return coeffs
