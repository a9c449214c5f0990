"""Dense exact linear algebra over a `Field`.

Matrices are lists of lists of scalars.  Everything is deterministic:
Gaussian elimination sweeps columns left to right and picks the topmost
nonzero entry as pivot, so outputs are reproducible bit for bit.
"""

from __future__ import annotations


def zeros(field, m, n):
    z = field.zero()
    return [[z] * n for _ in range(m)]


def identity(field, n):
    z, o = field.zero(), field.one()
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def mat_mul(field, A, B):
    m = len(A)
    n = len(B)
    q = len(B[0]) if B else 0
    C = zeros(field, m, q)
    for i in range(m):
        Ai = A[i]
        Ci = C[i]
        for k in range(n):
            a = Ai[k]
            if not a:
                continue
            Bk = B[k]
            for j in range(q):
                b = Bk[j]
                if b:
                    Ci[j] = Ci[j] + a * b
    return C


def rref(field, A):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    R = [row[:] for row in A]
    m = len(R)
    n = len(R[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        pivot_row = None
        for i in range(r, m):
            if R[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        R[r], R[pivot_row] = R[pivot_row], R[r]
        inv = field.one() / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                Ri, Rr = R[i], R[r]
                R[i] = [a - f * b for a, b in zip(Ri, Rr)]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(field, A):
    return len(rref(field, A)[1])


def kernel_basis(field, A, ncols=None):
    """Basis of the right kernel of A, as a list of column vectors.

    Basis vectors are indexed by the free columns in ascending order, each
    with a 1 in its free position (the standard rref kernel basis).
    """
    if ncols is None:
        ncols = len(A[0]) if A else 0
    if not A:
        return [[field.one() if i == j else field.zero() for i in range(ncols)]
                for j in range(ncols)]
    R, pivots = rref(field, A)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    z, o = field.zero(), field.one()
    for fc in free:
        v = [z] * ncols
        v[fc] = o
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][fc]
        basis.append(v)
    return basis


def solve(field, A, B):
    """Solve A X = B column-wise; least-pivot particular solution.

    Returns X (n x q) or None when inconsistent.  Free variables are zero.
    """
    m = len(A)
    n = len(A[0]) if A else 0
    q = len(B[0]) if B else 0
    if m == 0:
        return zeros(field, n, q)
    aug = [A[i] + B[i] for i in range(m)]
    R, pivots = rref(field, aug)
    pivots_in_A = [c for c in pivots if c < n]
    if len(pivots_in_A) != len(pivots):
        return None  # a pivot fell in the B block: inconsistent
    X = zeros(field, n, q)
    for r, pc in enumerate(pivots_in_A):
        for j in range(q):
            X[pc][j] = R[r][n + j]
    return X


def inverse(field, A):
    n = len(A)
    if any(len(row) != n for row in A):
        return None
    X = solve(field, A, identity(field, n))
    if X is None:
        return None
    # solve() guarantees A X = I; for square A that also forces X A = I.
    if rank(field, A) != n:
        return None
    return X


def transpose(A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]
