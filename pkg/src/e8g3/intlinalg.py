"""Small exact linear algebra helpers: integer matrices, Smith normal form,
and Gaussian elimination over Fraction or Q(w) entries."""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyc


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, m, k = len(A), len(B[0]), len(B)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    row[j] += a * Bt[j]
    return out

def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_eq(A, B):
    return all(ra == rb for ra, rb in zip(A, B))


def mat_pow(A, k):
    n = len(A)
    out = identity(n)
    base = [row[:] for row in A]
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


def det_bareiss(M):
    """Exact determinant of an integer matrix (fraction free)."""
    A = [row[:] for row in M]
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[-1][-1]


def det_laplace(M):
    """Exhaustive determinant via expansion over column subsets (oracle use)."""
    n = len(M)
    memo = {(): 1}

    def minor(rows_key, col):
        # rows_key: tuple of remaining row indices, expanding along column `col`
        if rows_key in memo:
            return memo[rows_key]
        val = 0
        sign = 1
        for pos, r in enumerate(rows_key):
            a = M[r][col]
            if a:
                rest = rows_key[:pos] + rows_key[pos + 1:]
                val += sign * a * minor(rest, col + 1)
            sign = -sign
        memo[rows_key] = val
        return val

    return minor(tuple(range(n)), 0)


def smith_normal_form(M):
    """Return (D, U, V) with U @ M @ V = D diagonal, U, V unimodular.

    Pivoting is deterministic: smallest absolute value, ties broken by
    row-then-column position, so repeated runs give identical transforms.
    """
    A = [row[:] for row in M]
    n = len(A)
    m = len(A[0])
    U = identity(n)
    V = identity(m)

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    for s in range(min(n, m)):
        while True:
            pivot = None
            best = None
            for i in range(s, n):
                for j in range(s, m):
                    a = abs(A[i][j])
                    if a and (best is None or a < best):
                        best = a
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(s, pivot[0])
            swap_cols(s, pivot[1])
            if A[s][s] < 0:
                negate_row(s)
            dirty = False
            for i in range(s + 1, n):
                if A[i][s]:
                    add_row(s, i, -(A[i][s] // A[s][s]))
                    if A[i][s]:
                        dirty = True
            for j in range(s + 1, m):
                if A[s][j]:
                    add_col(s, j, -(A[s][j] // A[s][s]))
                    if A[s][j]:
                        dirty = True
            if dirty:
                continue
            # force divisibility of the remaining block by the pivot
            bad = None
            for i in range(s + 1, n):
                for j in range(s + 1, m):
                    if A[i][j] % A[s][s]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, s, 1)
        if s < min(n, m) and A[s][s] < 0:
            negate_row(s)
    return A, U, V


def unimodular_inverse(U):
    """Exact inverse of a unimodular integer matrix, returned with int entries."""
    n = len(U)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(U)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                c = aug[i][col]
                aug[i] = [x - c * y for x, y in zip(aug[i], aug[col])]
    out = []
    for row in aug:
        vals = row[n:]
        assert all(v.denominator == 1 for v in vals)
        out.append([int(v) for v in vals])
    return out


def _is_zero(x):
    return not x


def rref(rows, width, field="fraction"):
    """Reduced row echelon form of dense rows (lists) over Fraction or Cyc.

    Returns (reduced_rows, pivot_columns). Mutates nothing.
    """
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(width):
        piv = None
        for i in range(r, len(rows)):
            if not _is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if field == "cyc":
            inv = lead.inverse() if isinstance(lead, Cyc) else Cyc(Fraction(1, lead))
        else:
            inv = Fraction(1) / lead
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not _is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows, width, field="fraction"):
    return len(rref(rows, width, field)[1])


def nullspace(rows, width, field="fraction"):
    """Basis of the right kernel of the matrix given by dense rows."""
    red, pivots = rref(rows, width, field)
    one = Cyc(1, 0) if field == "cyc" else Fraction(1)
    zero = Cyc(0, 0) if field == "cyc" else Fraction(0)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * width
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def solve(rows, rhs, width, field="fraction"):
    """One particular solution of rows @ x = rhs, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, width + 1, field)
    if width in pivots:
        return None
    zero = Cyc(0, 0) if field == "cyc" else Fraction(0)
    x = [zero] * width
    for r, pc in enumerate(pivots):
        x[pc] = red[r][width]
    return x
