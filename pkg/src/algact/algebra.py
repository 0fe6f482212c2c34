"""Finite-dimensional algebras given by structure constants.

An :class:`Algebra` is a vector space F^n with one or two bilinear
operations stored as sparse tensors ``c[i][j][k]``, meaning
``e_i . e_j = sum_k c[i][j][k] e_k``.  One operation covers associative,
Leibniz, Lie and Jordan algebras; two operations (product first, bracket
second) cover Poisson-type algebras.

Identity checking is exhaustive over basis tuples: every identity handled
here is multilinear in each argument (the Jordan identity, cubic in one
variable, is checked through all of its multihomogeneous components), so
vanishing on basis tuples is equivalent to vanishing everywhere.  Failing
checks always return the lexicographically first witness tuple together
with its nonzero defect, so reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations
from typing import Optional

from . import linalg
from .errors import (
    DimensionMismatch,
    FieldMismatch,
    InputError,
    OpArityMismatch,
    OpIndexOutOfRange,
)
from .fields import Field

__all__ = [
    "BilinearOp",
    "Algebra",
    "IdentityReport",
    "Centers",
    "multiply",
    "check_identity",
    "leibniz_kernel",
    "centers",
    "annihilator",
    "product_subspace",
    "is_homomorphism",
    "IDENTITY_TAGS",
]

IDENTITY_TAGS = (
    "associative",
    "commutative",
    "anticommutative",
    "leibniz_right",
    "jacobi",
    "lie",
    "poisson",
    "jordan",
)


class BilinearOp:
    """One structure-constant tensor, stored sparse, evaluated dense."""

    __slots__ = ("name", "entries", "_table")

    def __init__(self, field: Field, dim: int, entries, name: str = "mul"):
        self.name = name
        canon = {}
        for (i, j, k), c in (entries.items() if isinstance(entries, dict) else entries):
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise InputError(f"structure constant index ({i},{j},{k}) out of range")
            if (i, j, k) in canon:
                raise InputError(f"duplicate structure constant at ({i},{j},{k})")
            c = field.of(c)
            if not field.is_zero(c):
                canon[(i, j, k)] = c
        self.entries = canon
        table = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), c in canon.items():
            table[i][j][k] = c
        self._table = table

    def value(self, i: int, j: int):
        return self._table[i][j]

    def sorted_entries(self):
        return sorted(self.entries.items())


class Algebra:
    """Immutable structure-constant algebra; all operations are pure."""

    def __init__(self, field: Field, dim: int, ops, labels=None):
        if dim < 0:
            raise InputError("dimension must be nonnegative")
        if not 1 <= len(ops) <= 2:
            raise OpArityMismatch("an algebra carries one or two bilinear operations")
        self.field = field
        self.dim = dim
        self.ops = list(ops)
        if labels is not None and len(labels) != dim:
            raise InputError("label count must equal the dimension")
        self.labels = list(labels) if labels is not None else None

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_entries(cls, field, dim, op_entries, names=None, labels=None):
        """Build from a list of entry iterables, one per operation."""
        if names is None:
            names = ["mul", "bracket"][: len(op_entries)] if len(op_entries) == 2 else ["mul"]
        ops = [
            BilinearOp(field, dim, entries, name)
            for entries, name in zip(op_entries, names)
        ]
        return cls(field, dim, ops, labels)

    @property
    def num_ops(self) -> int:
        return len(self.ops)

    @property
    def product_op(self) -> int:
        return 0

    @property
    def bracket_op(self) -> int:
        """Index of the bracket: op 1 when two operations, op 0 otherwise."""
        return 1 if len(self.ops) == 2 else 0

    def _check_op(self, op_index: int):
        if not 0 <= op_index < len(self.ops):
            raise OpIndexOutOfRange(f"operation index {op_index} out of range")

    def unit(self, i: int):
        return linalg.unit_vector(self.field, self.dim, i)

    def zero_vec(self):
        return linalg.vec_zero(self.field, self.dim)

    def mul_basis(self, op_index: int, i: int, j: int):
        self._check_op(op_index)
        return list(self.ops[op_index].value(i, j))

    def multiply(self, op_index: int, x, y):
        self._check_op(op_index)
        f = self.field
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("element length differs from the algebra dimension")
        out = [f.zero] * self.dim
        value = self.ops[op_index].value
        for i, xi in enumerate(x):
            if f.is_zero(xi):
                continue
            for j, yj in enumerate(y):
                if f.is_zero(yj):
                    continue
                c = f.mul(xi, yj)
                row = value(i, j)
                for k in range(self.dim):
                    if not f.is_zero(row[k]):
                        out[k] = f.add(out[k], f.mul(c, row[k]))
        return out

    def left_matrix_basis(self, op_index: int, a: int):
        """Matrix of x -> e_a . x."""
        self._check_op(op_index)
        n, value = self.dim, self.ops[op_index].value
        return [[value(a, j)[m] for j in range(n)] for m in range(n)]

    def right_matrix_basis(self, op_index: int, a: int):
        """Matrix of x -> x . e_a."""
        self._check_op(op_index)
        n, value = self.dim, self.ops[op_index].value
        return [[value(i, a)[m] for i in range(n)] for m in range(n)]

    def left_matrix(self, op_index: int, u):
        f, n = self.field, self.dim
        out = linalg.mat_zero(f, n, n)
        for a, ua in enumerate(u):
            if f.is_zero(ua):
                continue
            La = self.left_matrix_basis(op_index, a)
            out = linalg.mat_add(f, out, [[f.mul(ua, x) for x in row] for row in La])
        return out

    def right_matrix(self, op_index: int, u):
        f, n = self.field, self.dim
        out = linalg.mat_zero(f, n, n)
        for a, ua in enumerate(u):
            if f.is_zero(ua):
                continue
            Ra = self.right_matrix_basis(op_index, a)
            out = linalg.mat_add(f, out, [[f.mul(ua, x) for x in row] for row in Ra])
        return out

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        f = self.field
        data = {
            "field": f.to_json(),
            "dim": self.dim,
            "ops": [
                {
                    "name": op.name,
                    "entries": [
                        [i, j, k, f.to_str(c)] for (i, j, k), c in op.sorted_entries()
                    ],
                }
                for op in self.ops
            ],
        }
        if self.labels is not None:
            data["labels"] = self.labels
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "Algebra":
        try:
            field = Field.from_json(data["field"])
            dim = int(data["dim"])
            raw_ops = data["ops"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed algebra description: {exc}") from exc
        ops = []
        for pos, op in enumerate(raw_ops):
            entries = [
                ((int(i), int(j), int(k)), field.of(c)) for i, j, k, c in op.get("entries", [])
            ]
            name = op.get("name") or ("bracket" if pos == 1 else "mul")
            ops.append(BilinearOp(field, dim, entries, name))
        return cls(field, dim, ops, data.get("labels"))

    def canonical_key(self):
        f = self.field
        return (
            str(f.to_json()),
            self.dim,
            tuple(
                (op.name, tuple((ijk, f.to_str(c)) for ijk, c in op.sorted_entries()))
                for op in self.ops
            ),
        )

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.dim == other.dim
            and len(self.ops) == len(other.ops)
            and all(a.entries == b.entries for a, b in zip(self.ops, other.ops))
        )

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        kinds = "+".join(op.name for op in self.ops)
        return f"Algebra(dim={self.dim}, ops={kinds}, field={self.field!r})"


@dataclass
class IdentityReport:
    """Outcome of an exhaustive identity check.

    ``witness`` is the first failing basis tuple in lexicographic order and
    ``defect`` the corresponding nonzero element; ``failed_part`` names the
    sub-identity that failed for composite tags such as ``lie``/``poisson``.
    """

    identity: str
    holds: bool
    failed_part: Optional[str] = None
    witness: Optional[tuple] = None
    defect: Optional[list] = None

    def to_json_dict(self, field: Field) -> dict:
        data = {"identity": self.identity, "holds": self.holds}
        if not self.holds:
            data["failed_part"] = self.failed_part
            data["witness"] = list(self.witness)
            data["defect"] = [field.to_str(c) for c in self.defect]
        return data


def multiply(A: Algebra, op_index: int, x, y):
    """Bilinear extension of the structure constants to coordinate vectors."""
    return A.multiply(op_index, x, y)


def _first_defect(A, tuples, defect_fn):
    f = A.field
    for idx in tuples:
        d = defect_fn(*idx)
        if not linalg.vec_is_zero(f, d):
            return idx, d
    return None


def _pairs(n):
    return ((i, j) for i in range(n) for j in range(n))


def _triples(n):
    return ((i, j, k) for i in range(n) for j in range(n) for k in range(n))


def _assoc_defect(A, op):
    def defect(i, j, k):
        lhs = A.multiply(op, A.mul_basis(op, i, j), A.unit(k))
        rhs = A.multiply(op, A.unit(i), A.mul_basis(op, j, k))
        return linalg.vec_sub(A.field, lhs, rhs)

    return defect


def _check_simple(A, tag):
    f, n = A.field, A.dim
    br = A.bracket_op
    if tag == "associative":
        hit = _first_defect(A, _triples(n), _assoc_defect(A, 0))
    elif tag == "commutative":
        hit = _first_defect(
            A,
            _pairs(n),
            lambda i, j: linalg.vec_sub(f, A.mul_basis(0, i, j), A.mul_basis(0, j, i)),
        )
    elif tag == "anticommutative":
        # includes the diagonal: [e_i, e_i] + [e_i, e_i] = 2 [e_i, e_i],
        # nonzero iff [e_i, e_i] is (char != 2)
        hit = _first_defect(
            A,
            _pairs(n),
            lambda i, j: linalg.vec_add(f, A.mul_basis(br, i, j), A.mul_basis(br, j, i)),
        )
    elif tag == "leibniz_right":

        def defect(i, j, k):
            lhs = A.multiply(br, A.mul_basis(br, i, j), A.unit(k))
            t1 = A.multiply(br, A.mul_basis(br, i, k), A.unit(j))
            t2 = A.multiply(br, A.unit(i), A.mul_basis(br, j, k))
            return linalg.vec_sub(f, lhs, linalg.vec_add(f, t1, t2))

        hit = _first_defect(A, _triples(n), defect)
    elif tag == "jacobi":

        def defect(i, j, k):
            t1 = A.multiply(br, A.mul_basis(br, i, j), A.unit(k))
            t2 = A.multiply(br, A.mul_basis(br, j, k), A.unit(i))
            t3 = A.multiply(br, A.mul_basis(br, k, i), A.unit(j))
            return linalg.vec_add(f, t1, linalg.vec_add(f, t2, t3))

        hit = _first_defect(A, _triples(n), defect)
    else:  # pragma: no cover - guarded by dispatch table
        raise InputError(f"unknown identity tag {tag!r}")
    if hit is None:
        return IdentityReport(tag, True)
    return IdentityReport(tag, False, failed_part=tag, witness=hit[0], defect=hit[1])


def _check_poisson_compat(A):
    """The compatibility law [p, q t] = [p, q] t + q [p, t] on basis triples."""
    f, n = A.field, A.dim

    def defect(i, j, k):
        lhs = A.multiply(1, A.unit(i), A.mul_basis(0, j, k))
        t1 = A.multiply(0, A.mul_basis(1, i, j), A.unit(k))
        t2 = A.multiply(0, A.unit(j), A.mul_basis(1, i, k))
        return linalg.vec_sub(f, lhs, linalg.vec_add(f, t1, t2))

    hit = _first_defect(A, _triples(n), defect)
    if hit is None:
        return IdentityReport("poisson", True)
    return IdentityReport("poisson", False, failed_part="poisson_compat", witness=hit[0], defect=hit[1])


def _check_jordan(A):
    """Jordan law (xy)(xx) = x(y(xx)) as a formal identity.

    The law is cubic in x, so basis substitution alone is not exhaustive;
    instead every multihomogeneous component must vanish.  The component of
    x = e_p e_q e_r against y = e_m is the sum over ordered triples (i,j,k)
    running through the permutations of the multiset {p,q,r}.  This is
    characteristic-independent.
    """
    f, n = A.field, A.dim
    for m in range(n):
        em = A.unit(m)
        for mult in combinations_with_replacement(range(n), 3):
            total = A.zero_vec()
            for (i, j, k) in set(permutations(mult)):
                sq = A.mul_basis(0, j, k)
                lhs = A.multiply(0, A.mul_basis(0, i, m), sq)
                rhs = A.multiply(0, A.unit(i), A.multiply(0, em, sq))
                total = linalg.vec_add(f, total, linalg.vec_sub(f, lhs, rhs))
            if not linalg.vec_is_zero(f, total):
                return IdentityReport(
                    "jordan", False, failed_part="jordan", witness=(m, *mult), defect=total
                )
    return IdentityReport("jordan", True)


def check_identity(A: Algebra, tag: str) -> IdentityReport:
    """Exhaustively test a named identity of ``A``.

    ``associative``/``commutative``/``jordan`` test operation 0, the bracket
    identities test operation 1 when present (operation 0 otherwise), and
    ``poisson`` requires both operations: associativity of the product, Lie
    axioms for the bracket and the compatibility law between them.
    """
    if tag not in IDENTITY_TAGS:
        raise InputError(f"unknown identity tag {tag!r}")
    if tag == "poisson":
        if A.num_ops != 2:
            raise OpArityMismatch("the poisson tag needs a product and a bracket")
        for part in ("associative", "anticommutative", "jacobi"):
            rep = _check_simple(A, part)
            if not rep.holds:
                return IdentityReport("poisson", False, failed_part=part,
                                      witness=rep.witness, defect=rep.defect)
        return _check_poisson_compat(A)
    if tag == "lie":
        for part in ("anticommutative", "jacobi"):
            rep = _check_simple(A, part)
            if not rep.holds:
                return IdentityReport("lie", False, failed_part=part,
                                      witness=rep.witness, defect=rep.defect)
        return IdentityReport("lie", True)
    if tag == "jordan":
        rep = _check_simple(A, "commutative")
        if not rep.holds:
            return IdentityReport("jordan", False, failed_part="commutative",
                                  witness=rep.witness, defect=rep.defect)
        return _check_jordan(A)
    return _check_simple(A, tag)


def leibniz_kernel(A: Algebra):
    """Canonical basis of span{[x, x] : x in A}.

    Polarizing [x, x] over a basis gives the generators [e_i, e_i] and
    [e_i, e_j] + [e_j, e_i]; their span equals the span of all squares.
    """
    f, n, br = A.field, A.dim, A.bracket_op
    gens = [A.mul_basis(br, i, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            gens.append(linalg.vec_add(f, A.mul_basis(br, i, j), A.mul_basis(br, j, i)))
    basis, _ = linalg.span_basis(f, gens, n)
    return basis


@dataclass
class Centers:
    zl: list
    zr: list
    z: list
    zl_is_subalgebra: bool


def centers(A: Algebra) -> Centers:
    """Left center {x : [x, A] = 0}, right center {x : [A, x] = 0}, and
    their intersection, each as a canonical nullspace basis.

    The left center can fail to be a subalgebra, so closure under the
    bracket is reported as a flag rather than assumed.
    """
    f, n, br = A.field, A.dim, A.bracket_op
    value = A.ops[br].value
    left_rows = []
    right_rows = []
    for j in range(n):
        for m in range(n):
            left_rows.append([value(a, j)[m] for a in range(n)])
            right_rows.append([value(j, a)[m] for a in range(n)])
    zl, zl_piv = linalg.nullspace_basis(f, left_rows, n)
    zr, _ = linalg.nullspace_basis(f, right_rows, n)
    z, _ = linalg.nullspace_basis(f, left_rows + right_rows, n)
    closed = all(
        linalg.in_span(f, zl, zl_piv, A.multiply(br, u, v)) for u in zl for v in zl
    )
    return Centers(zl=zl, zr=zr, z=z, zl_is_subalgebra=closed)


def annihilator(A: Algebra):
    """Canonical basis of {x : x.y = y.x = 0 for all y} for the product."""
    f, n = A.field, A.dim
    value = A.ops[0].value
    rows = []
    for j in range(n):
        for m in range(n):
            rows.append([value(a, j)[m] for a in range(n)])
            rows.append([value(j, a)[m] for a in range(n)])
    basis, _ = linalg.nullspace_basis(f, rows, n)
    return basis


def product_subspace(A: Algebra, op_index: int):
    """Canonical basis of span{e_i . e_j}; full dimension means A.A = A."""
    A._check_op(op_index)
    gens = [A.mul_basis(op_index, i, j) for i in range(A.dim) for j in range(A.dim)]
    basis, _ = linalg.span_basis(A.field, gens, A.dim)
    return basis


def is_homomorphism(fmat, A: Algebra, B: Algebra) -> IdentityReport:
    """Whether the matrix f (dim B x dim A) satisfies f(x .op y) = f(x) .op f(y)
    for every operation, checked on all basis pairs of A."""
    if A.field != B.field:
        raise FieldMismatch("source and target live over different fields")
    if A.num_ops != B.num_ops:
        raise OpArityMismatch("source and target have different operation counts")
    if len(fmat) != B.dim or (fmat and len(fmat[0]) != A.dim):
        raise DimensionMismatch(
            f"matrix must be {B.dim}x{A.dim}, got {len(fmat)}x{len(fmat[0]) if fmat else 0}"
        )
    f = A.field
    cols = [linalg.mat_col(fmat, j) for j in range(A.dim)]
    for op in range(A.num_ops):
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = linalg.mat_vec(f, fmat, A.mul_basis(op, i, j))
                rhs = B.multiply(op, cols[i], cols[j])
                d = linalg.vec_sub(f, lhs, rhs)
                if not linalg.vec_is_zero(f, d):
                    return IdentityReport(
                        "homomorphism", False, failed_part=f"op{op}", witness=(op, i, j), defect=d
                    )
    return IdentityReport("homomorphism", True)
