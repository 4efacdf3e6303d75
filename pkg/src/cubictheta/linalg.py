"""Exact integer/rational linear algebra for rank-3 lattices.

Conventions: vectors are rows; a lattice is the Z-span of the rows of its
basis matrix. Canonical bases are upper-triangular row Hermite form with
positive diagonal and off-diagonal entries reduced modulo the diagonal
entry below them, which makes equality of lattices equality of matrices.
"""

from __future__ import annotations

from fractions import Fraction


def _xgcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form of a full-rank integer row set (n columns,
    >= n rows). Raises ValueError if the rows do not span a rank-n lattice."""
    if not rows:
        raise ValueError("empty generating set")
    n = len(rows[0])
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = []
    for col in range(n):
        # gather rows with leading nonzero at `col`
        pivot = None
        rest = []
        for r in work:
            if r[col] != 0:
                if pivot is None:
                    pivot = r
                else:
                    g, s, t = _xgcd(pivot[col], r[col])
                    u, v = pivot[col] // g, r[col] // g
                    new_pivot = [s * x + t * y for x, y in zip(pivot, r)]
                    new_r = [-v * x + u * y for x, y in zip(pivot, r)]
                    pivot = new_pivot
                    if any(new_r):
                        rest.append(new_r)
            else:
                rest.append(r)
        if pivot is None:
            raise ValueError("rows do not have full rank")
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        work = rest
    # reduce above-diagonal entries
    for i in range(n - 1, -1, -1):
        d = basis[i][i]
        for j in range(i):
            q = basis[j][i] // d
            if q:
                basis[j] = [x - q * y for x, y in zip(basis[j], basis[i])]
    return basis


def det3(m) -> Fraction | int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    assert len(A[0]) == k
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def mat_vec(A, v):
    return [sum(A[i][j] * v[j] for j in range(len(v))) for i in range(len(A))]


def solve3(M, v):
    """Solve x M = v for a row vector x over the rationals (M 3x3, full rank)."""
    # transpose-Cramer: M^T x^T = v^T
    det = det3(M)
    if det == 0:
        raise ZeroDivisionError("singular matrix")
    cols = list(zip(*M))
    out = []
    for i in range(3):
        mi = [list(c) for c in cols]
        mi[i] = list(v)
        out.append(Fraction(det3(mi), det))
    return out


def solve_upper(B, v):
    """Solve x B = v for upper-triangular B (rows) over Q; exact."""
    n = len(B)
    x = [Fraction(0)] * n
    for i in range(n):
        acc = Fraction(v[i])
        for j in range(i):
            acc -= x[j] * B[j][i]
        x[i] = acc / B[i][i]
    return x


def snf_with_transforms(A: list[list[int]]):
    """Smith normal form with transforms: returns (S, U, V) with
    U * A * V = S, U and V unimodular, S diagonal with s1 | s2 | ... and
    non-negative entries. A is any m x n integer matrix."""
    m, n = len(A), len(A[0])
    S = [list(r) for r in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in S:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, q):  # row_i += q * row_j
        S[i] = [x + q * y for x, y in zip(S[i], S[j])]
        U[i] = [x + q * y for x, y in zip(U[i], U[j])]

    def add_col(i, j, q):  # col_i += q * col_j
        for r in S:
            r[i] += q * r[j]
        for r in V:
            r[i] += q * r[j]

    def scale_row(i, s):
        S[i] = [s * x for x in S[i]]
        U[i] = [s * x for x in U[i]]

    t = 0
    while t < min(m, n):
        # find a pivot
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if S[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // S[t][t]
                    add_row(i, t, -q)
                    if S[i][t]:
                        swap_rows(i, t)
            if any(S[i][t] for i in range(t + 1, m)):
                continue
            # clear row t
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // S[t][t]
                    add_col(j, t, -q)
                    if S[t][j]:
                        swap_cols(j, t)
            if any(S[i][t] for i in range(t + 1, m)):
                continue
            if any(S[t][j] for j in range(t + 1, n)):
                continue
            break
        if S[t][t] < 0:
            scale_row(t, -1)
        t += 1
    # enforce divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(min(m, n) - 1):
            a, b = S[i][i], S[i + 1][i + 1]
            if b and a and b % a != 0:
                # standard trick: add col i+1 to col i, re-reduce block
                add_col(i, i + 1, 1)
                g, s, tt = _xgcd(S[i][i], S[i + 1][i])
                # row ops to restore diagonal with gcd
                u, v = S[i][i] // g, S[i + 1][i] // g
                Ri = [s * x + tt * y for x, y in zip(S[i], S[i + 1])]
                Rj = [-v * x + u * y for x, y in zip(S[i], S[i + 1])]
                Ui = [s * x + tt * y for x, y in zip(U[i], U[i + 1])]
                Uj = [-v * x + u * y for x, y in zip(U[i], U[i + 1])]
                S[i], S[i + 1], U[i], U[i + 1] = Ri, Rj, Ui, Uj
                # clear the off-diagonal entries created
                if S[i][i + 1]:
                    q = S[i][i + 1] // S[i][i]
                    add_col(i + 1, i, -q)
                if S[i + 1][i]:
                    q = S[i + 1][i] // S[i][i]
                    add_row(i + 1, i, -q)
                if S[i + 1][i + 1] < 0:
                    scale_row(i + 1, -1)
                changed = True
    return S, U, V


def kernel_mod(N: list[list[int]], d: int) -> list[list[int]]:
    """Row basis of the lattice {k in Z^n : N k = 0 (mod d)} (k a column
    vector), for an m x n integer matrix N and modulus d >= 1."""
    if d == 1:
        n = len(N[0])
        return [[int(i == j) for j in range(n)] for i in range(n)]
    S, U, V = snf_with_transforms(N)
    n = len(N[0])
    gens = []
    for i in range(n):
        s = S[i][i] if i < len(S) and i < len(S[i]) else 0
        t = d // _gcd_int(s % d if s else 0, d) if s % d != 0 else 1
        if s % d == 0:
            t = 1
        # k = V * (t * e_i): column V[:,i] scaled by t
        gens.append([V[r][i] * t for r in range(n)])
    return hnf(gens)


def _gcd_int(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def lattice_index(sub: list[list[int]], sup: list[list[int]]) -> Fraction:
    """Index [sup : sub] of integer row lattices (both full rank)."""
    return Fraction(abs(det3(sub)), abs(det3(sup)))


def identity(n=3):
    return [[int(i == j) for j in range(n)] for i in range(n)]
