"""Independent brute-force oracle over small prime fields.

Everything here works on plain int tuples mod p and checks the defining
identities directly from their definitions, sharing no code with the
package's linear-system path.  Used to confirm that exhaustive enumeration
counts equal p**(nullspace dimension).
"""

from itertools import product


def tables(A):
    """Structure constants of an algact Algebra over GF(p) as int tensors."""
    n = A.dim
    out = []
    for op in range(A.num_ops):
        out.append(
            tuple(
                tuple(tuple(int(c) for c in A.mul_basis(op, i, j)) for j in range(n))
                for i in range(n)
            )
        )
    return out


def mulvec(c, x, y, p):
    n = len(c)
    out = [0] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            coeff = x[i] * y[j]
            row = c[i][j]
            for k in range(n):
                if row[k]:
                    out[k] = (out[k] + coeff * row[k]) % p
    return tuple(out)


def apply(M, v, p):
    return tuple(sum(M[m][j] * v[j] for j in range(len(v))) % p for m in range(len(M)))


def unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def all_matrices(n, p):
    for flat in product(range(p), repeat=n * n):
        yield tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))


def vsub(u, v, p):
    return tuple((a - b) % p for a, b in zip(u, v))


def is_derivation(M, c, p):
    n = len(c)
    for i in range(n):
        for j in range(n):
            lhs = apply(M, c[i][j], p)
            rhs = tuple(
                (a + b) % p
                for a, b in zip(
                    mulvec(c, apply(M, unit(n, i), p), unit(n, j), p),
                    mulvec(c, unit(n, i), apply(M, unit(n, j), p), p),
                )
            )
            if lhs != rhs:
                return False
    return True


def is_antiderivation(M, c, p):
    n = len(c)
    for i in range(n):
        for j in range(n):
            lhs = apply(M, c[i][j], p)
            rhs = vsub(
                mulvec(c, apply(M, unit(n, i), p), unit(n, j), p),
                mulvec(c, apply(M, unit(n, j), p), unit(n, i), p),
                p,
            )
            if lhs != rhs:
                return False
    return True


def bider_compatible(d, D, c, p):
    n = len(c)
    for i in range(n):
        for j in range(n):
            if mulvec(c, unit(n, i), apply(d, unit(n, j), p), p) != mulvec(
                c, unit(n, i), apply(D, unit(n, j), p), p
            ):
                return False
    return True


def is_left_multiplier(M, c, p):
    n = len(c)
    for i in range(n):
        for j in range(n):
            if apply(M, c[i][j], p) != mulvec(c, apply(M, unit(n, i), p), unit(n, j), p):
                return False
    return True


def is_right_multiplier(M, c, p):
    n = len(c)
    for i in range(n):
        for j in range(n):
            if apply(M, c[i][j], p) != mulvec(c, unit(n, i), apply(M, unit(n, j), p), p):
                return False
    return True


def bim_mixed_ok(f, F, c, p):
    n = len(c)
    for i in range(n):
        for j in range(n):
            if mulvec(c, unit(n, i), apply(f, unit(n, j), p), p) != mulvec(
                c, apply(F, unit(n, i), p), unit(n, j), p
            ):
                return False
    return True


def v1_ok(f, d, br, prod, p):
    n = len(br)
    for i in range(n):
        for j in range(n):
            lhs = apply(f, br[i][j], p)
            rhs = vsub(
                mulvec(br, apply(f, unit(n, i), p), unit(n, j), p),
                mulvec(prod, apply(d, unit(n, j), p), unit(n, i), p),
                p,
            )
            if lhs != rhs:
                return False
    return True


def v2_ok(F, d, br, prod, p):
    n = len(br)
    for i in range(n):
        for j in range(n):
            lhs = apply(F, br[i][j], p)
            rhs = vsub(
                mulvec(br, apply(F, unit(n, i), p), unit(n, j), p),
                mulvec(prod, unit(n, i), apply(d, unit(n, j), p), p),
                p,
            )
            if lhs != rhs:
                return False
    return True


def count_space(kind, A, p=3):
    """Number of operator tuples of the given kind, by direct enumeration."""
    ts = tables(A)
    prod = ts[0]
    br = ts[1] if A.num_ops == 2 else ts[0]
    n = A.dim
    mats = list(all_matrices(n, p))
    if kind == "derivations":
        return sum(1 for M in mats if is_derivation(M, br, p))
    if kind == "antiderivations":
        return sum(1 for M in mats if is_antiderivation(M, br, p))
    if kind == "biderivations":
        ders = [M for M in mats if is_derivation(M, br, p)]
        antis = [M for M in mats if is_antiderivation(M, br, p)]
        return sum(
            1 for d in ders for D in antis if bider_compatible(d, D, br, p)
        )
    if kind == "multipliers":
        return sum(1 for M in mats if is_left_multiplier(M, prod, p))
    if kind == "bimultipliers":
        lefts = [M for M in mats if is_left_multiplier(M, prod, p)]
        rights = [M for M in mats if is_right_multiplier(M, prod, p)]
        return sum(1 for f in lefts for F in rights if bim_mixed_ok(f, F, prod, p))
    if kind == "usga-cpoisson":
        lefts = [M for M in mats if is_left_multiplier(M, prod, p)]
        ds = [
            M
            for M in mats
            if is_derivation(M, br, p) and is_derivation(M, prod, p)
        ]
        return sum(1 for f in lefts for d in ds if v1_ok(f, d, br, prod, p))
    if kind == "usga-poisson":
        lefts = [M for M in mats if is_left_multiplier(M, prod, p)]
        rights = [M for M in mats if is_right_multiplier(M, prod, p)]
        ds = [
            M
            for M in mats
            if is_derivation(M, br, p) and is_derivation(M, prod, p)
        ]
        # mixed compatibility is independent of d: build bitmasks once
        masks = []
        for f in lefts:
            mask = 0
            for i, F in enumerate(rights):
                if bim_mixed_ok(f, F, prod, p):
                    mask |= 1 << i
            masks.append(mask)
        total = 0
        for d in ds:
            v2mask = 0
            for i, F in enumerate(rights):
                if v2_ok(F, d, br, prod, p):
                    v2mask |= 1 << i
            for fi, f in enumerate(lefts):
                if v1_ok(f, d, br, prod, p):
                    total += (masks[fi] & v2mask).bit_count()
        return total
    raise ValueError(kind)
