"""Exact linear algebra over the rationals, plus division-free determinants.

Matrices are plain lists (or tuples) of rows of Fractions; everything is desk
scale, so the code favours clarity and exactness over asymptotics.  The ring
determinants at the bottom only use +, -, * and therefore work for entries in
any commutative unital carrier (Fractions or algebra Elements), including
carriers with zero divisors where pivoting-based elimination is unsound.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def mat_vec(rows, vec):
    return tuple(sum((r[j] * vec[j] for j in range(len(vec)) if vec[j]), ZERO)
                 for r in rows)


def mat_mul(a, b):
    n = len(b)
    m = len(b[0]) if n else 0
    out = []
    for row in a:
        out.append(tuple(sum((row[k] * b[k][j] for k in range(n) if row[k]), ZERO)
                         for j in range(m)))
    return tuple(out)


def rref(rows):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = ONE / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in mat], pivots


def solve(rows, rhs):
    """One exact solution of rows * x = rhs (free variables 0), or None."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:          # pivot in the rhs column: inconsistent
        return None
    x = [ZERO] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][ncols]
    return tuple(x)


def nullspace(rows, ncols=None):
    """Deterministic kernel basis (one vector per free column of the RREF)."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [tuple(ONE if j == i else ZERO for j in range(ncols))
                for i in range(ncols)]
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, c in enumerate(pivots):
            v[c] = -red[r][free]
        basis.append(tuple(v))
    return basis


def det_fraction(rows):
    """Determinant over the rational field by Gaussian elimination."""
    n = len(rows)
    mat = [list(r) for r in rows]
    det = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if mat[i][c]), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            det = -det
        det *= mat[c][c]
        inv = ONE / mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c]:
                f = mat[i][c] * inv
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[c])]
    return det


def _det_cofactor(rows, zero):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = zero
    for j in range(n):
        a = rows[0][j]
        if not a:            # works for Fractions and for algebra Elements
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = a * _det_cofactor(minor, zero)
        total = total - term if j % 2 else total + term
    return total


def _berkowitz_charpoly(rows, zero, one):
    # Characteristic polynomial det(tI - A) = t^n + c[1] t^(n-1) + ... + c[n],
    # built up one principal leading submatrix at a time.  Division free, so
    # valid over commutative carriers with zero divisors.
    n = len(rows)
    c = [one]
    for m in range(1, n + 1):
        prev = [row[:m - 1] for row in rows[:m - 1]]
        r_row = rows[m - 1][:m - 1]
        col = [rows[i][m - 1] for i in range(m - 1)]
        diag = rows[m - 1][m - 1]
        # first column of the (m+1) x m Toeplitz factor
        t = [one, zero - diag]
        vec = col
        for _ in range(m - 1):
            dot = zero
            for rj, vj in zip(r_row, vec):
                dot = dot + rj * vj
            t.append(zero - dot)
            vec = [sum_ring((prev[i][j] * vec[j] for j in range(len(vec))), zero)
                   for i in range(len(prev))]
        new = []
        for i in range(m + 1):
            acc = zero
            for j in range(0, min(i + 1, len(c))):
                acc = acc + t[i - j] * c[j]
            new.append(acc)
        c = new
    return c


def sum_ring(items, zero):
    acc = zero
    for it in items:
        acc = acc + it
    return acc


def det_ring(rows, zero, one):
    """Division-free determinant over any commutative unital carrier.

    Cofactor expansion up to 5x5, Berkowitz beyond (no pivoting, no division:
    sound even when the carrier has zero divisors).
    """
    n = len(rows)
    if n == 0:
        return one
    if n <= 5:
        return _det_cofactor([list(r) for r in rows], zero)
    charpoly = _berkowitz_charpoly(rows, zero, one)
    dt = charpoly[n]
    return dt if n % 2 == 0 else zero - dt
