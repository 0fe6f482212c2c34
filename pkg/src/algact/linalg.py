"""Dense exact linear algebra over a Field.

Vectors are lists of scalars, matrices are lists of rows.  Everything here
is deterministic: reduced row echelon form is unique for a given row space,
so every subspace in the package has one canonical basis and subspace
equality is literal equality of bases.
"""

from __future__ import annotations

from .errors import DimensionMismatch
from .fields import Field


def vec_zero(field: Field, n: int) -> list:
    return [field.zero] * n


def vec_is_zero(field: Field, v) -> bool:
    return all(field.is_zero(x) for x in v)


def vec_add(field: Field, u, v) -> list:
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field: Field, u, v) -> list:
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_neg(field: Field, v) -> list:
    return [field.neg(a) for a in v]


def vec_scale(field: Field, c, v) -> list:
    return [field.mul(c, a) for a in v]


def vec_eq(field: Field, u, v) -> bool:
    return len(u) == len(v) and all(field.eq(a, b) for a, b in zip(u, v))


def unit_vector(field: Field, n: int, i: int) -> list:
    v = vec_zero(field, n)
    v[i] = field.one
    return v


def mat_zero(field: Field, rows: int, cols: int) -> list:
    return [vec_zero(field, cols) for _ in range(rows)]


def mat_identity(field: Field, n: int) -> list:
    return [unit_vector(field, n, i) for i in range(n)]


def mat_add(field: Field, A, B) -> list:
    return [vec_add(field, ra, rb) for ra, rb in zip(A, B)]


def mat_sub(field: Field, A, B) -> list:
    return [vec_sub(field, ra, rb) for ra, rb in zip(A, B)]


def mat_neg(field: Field, A) -> list:
    return [vec_neg(field, r) for r in A]


def mat_eq(field: Field, A, B) -> bool:
    return len(A) == len(B) and all(vec_eq(field, ra, rb) for ra, rb in zip(A, B))


def mat_is_zero(field: Field, A) -> bool:
    return all(vec_is_zero(field, r) for r in A)


def mat_vec(field: Field, A, v) -> list:
    if A and len(A[0]) != len(v):
        raise DimensionMismatch(f"matrix is {len(A)}x{len(A[0])}, vector has {len(v)}")
    out = []
    for row in A:
        acc = field.zero
        for a, x in zip(row, v):
            if not field.is_zero(a) and not field.is_zero(x):
                acc = field.add(acc, field.mul(a, x))
        out.append(acc)
    return out


def mat_mul(field: Field, A, B) -> list:
    if A and B and len(A[0]) != len(B):
        raise DimensionMismatch(f"cannot compose {len(A)}x{len(A[0])} with {len(B)}x{len(B[0])}")
    cols = len(B[0]) if B else 0
    out = mat_zero(field, len(A), cols)
    for i, row in enumerate(A):
        for k, a in enumerate(row):
            if field.is_zero(a):
                continue
            brow = B[k]
            orow = out[i]
            for j in range(cols):
                b = brow[j]
                if not field.is_zero(b):
                    orow[j] = field.add(orow[j], field.mul(a, b))
    return out


def mat_col(A, j) -> list:
    return [row[j] for row in A]


def mat_from_cols(field: Field, cols: list, rows: int) -> list:
    return [[col[i] for col in cols] for i in range(rows)]


def mat_flatten(A) -> list:
    """Row-major flattening; inverse of :func:`mat_unflatten`."""
    return [x for row in A for x in row]


def mat_unflatten(flat, rows: int, cols: int) -> list:
    return [list(flat[i * cols : (i + 1) * cols]) for i in range(rows)]


def mat_rank(field: Field, A) -> int:
    return len(rref(field, A)[0])


def rref(field: Field, rows) -> tuple[list, list]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns).

    The RREF of a row space is unique, which is what makes every basis in
    this package canonical.
    """
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if not field.is_zero(m[i][c]):
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i == r:
                continue
            f = m[i][c]
            if field.is_zero(f):
                continue
            m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def span_basis(field: Field, vectors, n: int) -> tuple[list, list]:
    """Canonical (RREF) basis of the span of the given vectors."""
    vecs = [v for v in vectors if not vec_is_zero(field, v)]
    if not vecs:
        return [], []
    for v in vecs:
        if len(v) != n:
            raise DimensionMismatch("generator has wrong length")
    return rref(field, vecs)


def nullspace_basis(field: Field, rows, n: int) -> tuple[list, list]:
    """Canonical basis of {x : rows . x = 0} in F^n."""
    rows = [r for r in rows if not vec_is_zero(field, r)]
    if not rows:
        return rref(field, mat_identity(field, n)) if n else ([], [])
    R, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    vecs = []
    for fc in free:
        v = vec_zero(field, n)
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(R[r][fc])
        vecs.append(v)
    return span_basis(field, vecs, n)


def coords_in_span(field: Field, basis, pivots, v):
    """Coordinates of v in an RREF basis, or None if v is outside the span."""
    coords = [v[p] for p in pivots]
    residue = list(v)
    for c, b in zip(coords, basis):
        if field.is_zero(c):
            continue
        residue = [field.sub(x, field.mul(c, y)) for x, y in zip(residue, b)]
    if not vec_is_zero(field, residue):
        return None
    return coords


def in_span(field: Field, basis, pivots, v) -> bool:
    return coords_in_span(field, basis, pivots, v) is not None


def solve(field: Field, A, b):
    """One exact solution of A x = b, or None if inconsistent.

    Used where a specific preimage is needed (kernel coordinates of a split
    extension); when A has full column rank the solution is unique.
    """
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    aug = [list(row) + [b[i]] for i, row in enumerate(A)]
    R, pivots = rref(field, aug)
    x = vec_zero(field, ncols)
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None  # pivot in the constant column: inconsistent
        x[pc] = R[r][ncols]
    return x


def same_span(field: Field, basis_a, basis_b) -> bool:
    """Whether two canonical bases present the same subspace."""
    return len(basis_a) == len(basis_b) and all(
        vec_eq(field, u, v) for u, v in zip(basis_a, basis_b)
    )
