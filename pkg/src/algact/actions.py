"""Derived actions, split extensions and the action/morphism correspondence.

Supported varieties and their data:

* ``associative``   (l, r):        a*y and x*b
* ``leibniz``       (l, r):        l_x(b) = [s(x), i(b)], r_y(a) = [i(a), s(y)]
* ``poisson``       (l, r, k):     p*y, x*q and the bracket action k_p(y)
* ``cpoisson``      (l, k):        r is the commutative mirror of l

Sign conventions are pinned here, once, and every conversion below depends
on this table:

* a morphism value on x in the Leibniz weak actor is the pair
  ``(-r_x, l_x)``; unpacking therefore reads ``r = -component 0`` and
  ``l = component 1``;
* the bracket built from a morphism is
  ``[(x,a),(y,b)] = ([x,y], [a,b] + l_x(b) + r_y(a))``, which coincides with
  the semidirect bracket of the unpacked action;
* in the Poisson variety the morphism value is ``(l_p, r-slot_p, k_p)`` and
  the semidirect operations are
  ``(p,x)(q,y) = (pq, xy + p*y + x*q)`` and
  ``{(p,x),(q,y)} = ([p,q], [x,y] + k_p(y) - k_q(x))``.

Validation labels follow the classical condition lists: L1..L6 for Leibniz,
A1..A6 for associative (the same list that reappears inside P1), and
P1.1..P1.6, P2.1, P2.2, P3..P8 for Poisson.  Every condition is multilinear
in its algebra arguments, so evaluating it on basis tuples is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Optional

from . import linalg
from .algebra import Algebra, IdentityReport, check_identity, is_homomorphism
from .errors import (
    BudgetExceeded,
    InputError,
    InvalidAction,
    KernelMismatch,
    NotAHomomorphism,
    NotSplit,
    ShapeMismatch,
    TupleNotInSpace,
)
from .fields import Field, PrimeField
from .opspace import OperatorSpace, space_of_kind

__all__ = [
    "VARIETIES",
    "ActionData",
    "SplitExtension",
    "ValidationReport",
    "validate_action",
    "semidirect",
    "semidirect_algebra",
    "extract_action",
    "weak_actor_kind",
    "weak_actor",
    "ActorMorphism",
    "action_to_morphism",
    "morphism_to_action",
    "ActingReport",
    "is_acting_morphism",
    "enumerate_actions",
    "enumerate_acting_morphisms",
    "DEFAULT_BUDGET",
    "zero_action",
]

VARIETIES = ("associative", "leibniz", "poisson", "cpoisson")

_ACTOR_KINDS = {
    "associative": "bimultipliers",
    "leibniz": "biderivations",
    "poisson": "usga-poisson",
    "cpoisson": "usga-cpoisson",
}

DEFAULT_BUDGET = 3 ** 10


def weak_actor_kind(variety: str) -> str:
    try:
        return _ACTOR_KINDS[variety]
    except KeyError:
        raise InputError(f"unknown variety {variety!r}") from None


def weak_actor(X: Algebra, variety: str) -> OperatorSpace:
    return space_of_kind(X, weak_actor_kind(variety))


def _zero_tensor(field, a, b, c):
    z = field.zero
    return tuple(tuple(tuple(z for _ in range(c)) for _ in range(b)) for _ in range(a))


def _canon_tensor(field, tensor, a, b, c, what):
    if tensor is None:
        return None
    if len(tensor) != a or any(len(row) != b for row in tensor):
        raise ShapeMismatch(f"{what} tensor must be {a}x{b}x{c}")
    out = []
    for row in tensor:
        orow = []
        for vec in row:
            if len(vec) != c:
                raise ShapeMismatch(f"{what} tensor must be {a}x{b}x{c}")
            orow.append(tuple(field.of(x) for x in vec))
        out.append(tuple(orow))
    return tuple(out)


class ActionData:
    """Variety-tagged action tensors of an algebra B on an algebra X.

    ``l[p][y]`` and ``k[p][y]`` are vectors in X indexed by (B basis,
    X basis); ``r[x][q]`` is indexed by (X basis, B basis).  Invalid actions
    are ordinary values: only :func:`semidirect` refuses them, so
    counterexamples can be built and inspected.
    """

    def __init__(self, variety, acting: Algebra, kernel: Algebra, l, r=None, bracket=None):
        if variety not in VARIETIES:
            raise InputError(f"unknown variety {variety!r}")
        if acting.field != kernel.field:
            raise ShapeMismatch("acting and kernel algebras live over different fields")
        f = acting.field
        nb, nx = acting.dim, kernel.dim
        self.variety = variety
        self.acting = acting
        self.kernel = kernel
        self.l = _canon_tensor(f, l, nb, nx, nx, "l")
        if self.l is None:
            self.l = _zero_tensor(f, nb, nx, nx)
        if variety == "cpoisson":
            if r is not None:
                raise ShapeMismatch("cpoisson actions derive r from l; do not supply it")
            self.r = None
        else:
            self.r = _canon_tensor(f, r, nx, nb, nx, "r")
            if self.r is None:
                self.r = _zero_tensor(f, nx, nb, nx)
        if variety in ("poisson", "cpoisson"):
            self.bracket = _canon_tensor(f, bracket, nb, nx, nx, "bracket_action")
            if self.bracket is None:
                self.bracket = _zero_tensor(f, nb, nx, nx)
        else:
            if bracket is not None:
                raise ShapeMismatch(f"{variety} actions carry no bracket tensor")
            self.bracket = None

    @property
    def field(self) -> Field:
        return self.acting.field

    # -- operator views ------------------------------------------------------

    def l_matrix(self, p: int):
        nx = self.kernel.dim
        return [[self.l[p][y][m] for y in range(nx)] for m in range(nx)]

    def r_matrix(self, q: int):
        nx = self.kernel.dim
        if self.r is None:  # commutative mirror
            return self.l_matrix(q)
        return [[self.r[x][q][m] for x in range(nx)] for m in range(nx)]

    def k_matrix(self, p: int):
        nx = self.kernel.dim
        return [[self.bracket[p][y][m] for y in range(nx)] for m in range(nx)]

    def r_value(self, x: int, q: int):
        if self.r is None:
            return list(self.l[q][x])
        return list(self.r[x][q])

    def _sum_matrices(self, mats, coeffs):
        f, nx = self.field, self.kernel.dim
        out = linalg.mat_zero(f, nx, nx)
        for c, M in zip(coeffs, mats):
            if f.is_zero(c):
                continue
            out = linalg.mat_add(f, out, [[f.mul(c, x) for x in row] for row in M])
        return out

    def l_of(self, bvec):
        """Matrix of y -> l(b, y) for an arbitrary element b of B."""
        return self._sum_matrices([self.l_matrix(p) for p in range(self.acting.dim)], bvec)

    def r_of(self, bvec):
        return self._sum_matrices([self.r_matrix(q) for q in range(self.acting.dim)], bvec)

    def k_of(self, bvec):
        return self._sum_matrices([self.k_matrix(p) for p in range(self.acting.dim)], bvec)

    # -- serialization -------------------------------------------------------

    def _sparse(self, tensor):
        f = self.field
        out = []
        if tensor is None:
            return out
        for i, row in enumerate(tensor):
            for j, vec in enumerate(row):
                for k, c in enumerate(vec):
                    if not f.is_zero(c):
                        out.append([i, j, k, f.to_str(c)])
        return out

    def to_json_dict(self) -> dict:
        data = {
            "variety": self.variety,
            "acting": self.acting.to_json_dict(),
            "kernel": self.kernel.to_json_dict(),
            "l": self._sparse(self.l),
        }
        if self.variety != "cpoisson":
            data["r"] = self._sparse(self.r)
        if self.variety in ("poisson", "cpoisson"):
            data["bracket_action"] = self._sparse(self.bracket)
        return data

    @classmethod
    def from_json_dict(cls, data: dict, load_algebra=None) -> "ActionData":
        load_algebra = load_algebra or Algebra.from_json_dict
        try:
            variety = data["variety"]
            acting = load_algebra(data["acting"])
            kernel = load_algebra(data["kernel"])
        except KeyError as exc:
            raise InputError(f"action description missing {exc}") from exc
        f = acting.field
        nb, nx = acting.dim, kernel.dim

        def densify(entries, a, b, c):
            if entries is None:
                return None
            t = [[[f.zero] * c for _ in range(b)] for _ in range(a)]
            for i, j, k, v in entries:
                if not (0 <= i < a and 0 <= j < b and 0 <= k < c):
                    raise ShapeMismatch(f"tensor entry ({i},{j},{k}) out of range")
                t[i][j][k] = f.of(v)
            return t

        return cls(
            variety,
            acting,
            kernel,
            densify(data.get("l"), nb, nx, nx),
            densify(data.get("r"), nx, nb, nx),
            densify(data.get("bracket_action"), nb, nx, nx),
        )

    def canonical_key(self):
        f = self.field
        return (
            self.variety,
            self.acting.canonical_key(),
            self.kernel.canonical_key(),
            tuple(tuple(tuple(f.to_str(c) for c in vec) for vec in row) for row in self.l),
            tuple(tuple(tuple(f.to_str(c) for c in vec) for vec in row) for row in self.r)
            if self.r is not None
            else None,
            tuple(tuple(tuple(f.to_str(c) for c in vec) for vec in row) for row in self.bracket)
            if self.bracket is not None
            else None,
        )

    def __eq__(self, other):
        return isinstance(other, ActionData) and self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return (
            f"ActionData({self.variety}, B dim {self.acting.dim}, X dim {self.kernel.dim})"
        )


def zero_action(variety: str, B: Algebra, X: Algebra) -> ActionData:
    return ActionData(variety, B, X, None)


# -- validation ---------------------------------------------------------------


@dataclass
class ConditionResult:
    label: str
    holds: bool
    witness: Optional[tuple] = None
    defect: Optional[list] = None


@dataclass
class ValidationReport:
    variety: str
    conditions: list  # [ConditionResult] in canonical label order

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.conditions)

    def failed_labels(self):
        return [c.label for c in self.conditions if not c.holds]

    def condition(self, label: str) -> ConditionResult:
        for c in self.conditions:
            if c.label == label:
                return c
        raise KeyError(label)

    def to_json_dict(self, field: Field) -> dict:
        conds = {}
        for c in self.conditions:
            entry = {"holds": c.holds}
            if not c.holds:
                entry["witness"] = list(c.witness)
                entry["defect"] = [field.to_str(x) for x in c.defect]
            conds[c.label] = entry
        return {"variety": self.variety, "pass": self.passed, "conditions": conds}


def _evaluate(label, indices, defect_fn, field):
    witness = None
    defect = None
    for idx in indices:
        d = defect_fn(*idx)
        if not linalg.vec_is_zero(field, d):
            witness, defect = idx, d
            break
    return ConditionResult(label, witness is None, witness, defect)


def _leibniz_conditions(a: ActionData):
    B, X, f = a.acting, a.kernel, a.field
    nb, nx = B.dim, X.dim
    brB, brX = B.bracket_op, X.bracket_op
    L = [a.l_matrix(p) for p in range(nb)]
    R = [a.r_matrix(q) for q in range(nb)]
    unit = X.unit

    def bx(u, v):
        return X.multiply(brX, u, v)

    def mv(M, v):
        return linalg.mat_vec(f, M, v)

    bxx = [(x, aa, bb) for x in range(nb) for aa in range(nx) for bb in range(nx)]
    bba = [(x, y, aa) for x in range(nb) for y in range(nb) for aa in range(nx)]

    def l1(x, aa, bb):
        lhs = mv(R[x], X.mul_basis(brX, aa, bb))
        rhs = linalg.vec_add(f, bx(mv(R[x], unit(aa)), unit(bb)), bx(unit(aa), mv(R[x], unit(bb))))
        return linalg.vec_sub(f, lhs, rhs)

    def l2(x, aa, bb):
        lhs = mv(L[x], X.mul_basis(brX, aa, bb))
        rhs = linalg.vec_sub(f, bx(mv(L[x], unit(aa)), unit(bb)), bx(mv(L[x], unit(bb)), unit(aa)))
        return linalg.vec_sub(f, lhs, rhs)

    def l3(x, aa, bb):
        s = linalg.vec_add(f, mv(R[x], unit(bb)), mv(L[x], unit(bb)))
        return bx(unit(aa), s)

    def l4(x, y, aa):
        Rxy = a.r_of(B.mul_basis(brB, x, y))
        rhs = linalg.vec_sub(
            f, mv(R[y], mv(R[x], unit(aa))), mv(R[x], mv(R[y], unit(aa)))
        )
        return linalg.vec_sub(f, mv(Rxy, unit(aa)), rhs)

    def l5(x, y, aa):
        Lxy = a.l_of(B.mul_basis(brB, x, y))
        rhs = linalg.vec_sub(
            f, mv(R[y], mv(L[x], unit(aa))), mv(L[x], mv(R[y], unit(aa)))
        )
        return linalg.vec_sub(f, mv(Lxy, unit(aa)), rhs)

    def l6(x, y, aa):
        s = linalg.vec_add(f, mv(L[y], unit(aa)), mv(R[y], unit(aa)))
        return mv(L[x], s)

    yield "L1", bxx, l1
    yield "L2", bxx, l2
    yield "L3", bxx, l3
    yield "L4", bba, l4
    yield "L5", bba, l5
    yield "L6", bba, l6


def _associative_conditions(a: ActionData, labels=("A1", "A2", "A3", "A4", "A5", "A6")):
    B, X, f = a.acting, a.kernel, a.field
    nb, nx = B.dim, X.dim
    L = [a.l_matrix(p) for p in range(nb)]
    R = [a.r_matrix(q) for q in range(nb)]
    unit = X.unit

    def px(u, v):
        return X.multiply(0, u, v)

    def mv(M, v):
        return linalg.mat_vec(f, M, v)

    axy = [(p, x, y) for p in range(nb) for x in range(nx) for y in range(nx)]
    abx = [(p, q, x) for p in range(nb) for q in range(nb) for x in range(nx)]

    def a1(p, x, y):  # p*(xy) = (p*x)y
        return linalg.vec_sub(f, mv(L[p], X.mul_basis(0, x, y)), px(mv(L[p], unit(x)), unit(y)))

    def a2(p, x, y):  # (xy)*p = x(y*p)
        return linalg.vec_sub(f, mv(R[p], X.mul_basis(0, x, y)), px(unit(x), mv(R[p], unit(y))))

    def a3(p, x, y):  # x(p*y) = (x*p)y
        return linalg.vec_sub(f, px(unit(x), mv(L[p], unit(y))), px(mv(R[p], unit(x)), unit(y)))

    def a4(p, q, x):  # (p*x)*q = p*(x*q)
        return linalg.vec_sub(f, mv(R[q], mv(L[p], unit(x))), mv(L[p], mv(R[q], unit(x))))

    def a5(p, q, x):  # (pq)*x = p*(q*x)
        Lpq = a.l_of(B.mul_basis(0, p, q))
        return linalg.vec_sub(f, mv(Lpq, unit(x)), mv(L[p], mv(L[q], unit(x))))

    def a6(p, q, x):  # x*(pq) = (x*p)*q
        Rpq = a.r_of(B.mul_basis(0, p, q))
        return linalg.vec_sub(f, mv(Rpq, unit(x)), mv(R[q], mv(R[p], unit(x))))

    for label, idx, fn in zip(labels, (axy, axy, axy, abx, abx, abx), (a1, a2, a3, a4, a5, a6)):
        yield label, idx, fn


def _poisson_conditions(a: ActionData):
    B, X, f = a.acting, a.kernel, a.field
    nb, nx = B.dim, X.dim
    L = [a.l_matrix(p) for p in range(nb)]
    R = [a.r_matrix(q) for q in range(nb)]
    K = [a.k_matrix(p) for p in range(nb)]
    unit = X.unit

    def px(u, v):
        return X.multiply(0, u, v)

    def bx(u, v):
        return X.multiply(1, u, v)

    def mv(M, v):
        return linalg.mat_vec(f, M, v)

    yield from _associative_conditions(
        a, labels=("P1.1", "P1.2", "P1.3", "P1.4", "P1.5", "P1.6")
    )

    pxy = [(p, x, y) for p in range(nb) for x in range(nx) for y in range(nx)]
    pqx = [(p, q, x) for p in range(nb) for q in range(nb) for x in range(nx)]

    def p21(p, x, y):  # k_p[x,y] = [k_p x, y] + [x, k_p y]
        lhs = mv(K[p], X.mul_basis(1, x, y))
        rhs = linalg.vec_add(f, bx(mv(K[p], unit(x)), unit(y)), bx(unit(x), mv(K[p], unit(y))))
        return linalg.vec_sub(f, lhs, rhs)

    def p22(p, q, x):  # k_{[p,q]} = k_p k_q - k_q k_p
        Kpq = a.k_of(B.mul_basis(B.bracket_op, p, q))
        rhs = linalg.vec_sub(f, mv(K[p], mv(K[q], unit(x))), mv(K[q], mv(K[p], unit(x))))
        return linalg.vec_sub(f, mv(Kpq, unit(x)), rhs)

    def p3(p, q, x):  # k_{pq} = l_p k_q + r-slot: k_{pq}(x) = p*k_q(x) + k_p(x)*q
        Kpq = a.k_of(B.mul_basis(0, p, q))
        rhs = linalg.vec_add(f, mv(L[p], mv(K[q], unit(x))), mv(R[q], mv(K[p], unit(x))))
        return linalg.vec_sub(f, mv(Kpq, unit(x)), rhs)

    def p4(p, q, x):  # [p,q]*x = p*k_q(x) - k_q(p*x)
        Lpq = a.l_of(B.mul_basis(B.bracket_op, p, q))
        rhs = linalg.vec_sub(f, mv(L[p], mv(K[q], unit(x))), mv(K[q], mv(L[p], unit(x))))
        return linalg.vec_sub(f, mv(Lpq, unit(x)), rhs)

    def p5(p, q, x):  # x*[p,q] = k_q(x)*p - k_q(x*p)
        Rpq = a.r_of(B.mul_basis(B.bracket_op, p, q))
        rhs = linalg.vec_sub(f, mv(R[p], mv(K[q], unit(x))), mv(K[q], mv(R[p], unit(x))))
        return linalg.vec_sub(f, mv(Rpq, unit(x)), rhs)

    def p6(p, x, y):  # p*[x,y] = [p*x, y] - k_p(y) . x
        lhs = mv(L[p], X.mul_basis(1, x, y))
        rhs = linalg.vec_sub(f, bx(mv(L[p], unit(x)), unit(y)), px(mv(K[p], unit(y)), unit(x)))
        return linalg.vec_sub(f, lhs, rhs)

    def p7(p, x, y):  # [x,y]*p = [x*p, y] - x . k_p(y)
        lhs = mv(R[p], X.mul_basis(1, x, y))
        rhs = linalg.vec_sub(f, bx(mv(R[p], unit(x)), unit(y)), px(unit(x), mv(K[p], unit(y))))
        return linalg.vec_sub(f, lhs, rhs)

    def p8(p, x, y):  # k_p(x . y) = k_p(x) . y + x . k_p(y)
        lhs = mv(K[p], X.mul_basis(0, x, y))
        rhs = linalg.vec_add(f, px(mv(K[p], unit(x)), unit(y)), px(unit(x), mv(K[p], unit(y))))
        return linalg.vec_sub(f, lhs, rhs)

    yield "P2.1", pxy, p21
    yield "P2.2", pqx, p22
    yield "P3", pqx, p3
    yield "P4", pqx, p4
    yield "P5", pqx, p5
    yield "P6", pxy, p6
    yield "P7", pxy, p7
    yield "P8", pxy, p8


def validate_action(a: ActionData) -> ValidationReport:
    """Evaluate the variety's condition list on all relevant basis tuples.

    For Leibniz actions, witnesses for L1-L3 are (x, a, b) with x in B and
    a, b in X, and for L4-L6 they are (x, y, a); associative/Poisson
    witnesses follow the same pattern for their lists.
    """
    if a.variety == "leibniz":
        gens = _leibniz_conditions(a)
    elif a.variety == "associative":
        gens = _associative_conditions(a)
    else:
        gens = _poisson_conditions(a)
    results = [
        _evaluate(label, idx, fn, a.field) for label, idx, fn in gens
    ]
    return ValidationReport(a.variety, results)


# -- split extensions ---------------------------------------------------------


@dataclass
class SplitExtension:
    """Total algebra with a kernel embedding, retraction and section."""

    total: Algebra
    kernel_inj: list  # total.dim x kernel-dim
    retraction: list  # base-dim x total.dim
    section: list  # total.dim x base-dim

    @property
    def field(self) -> Field:
        return self.total.field

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel_inj[0]) if self.kernel_inj else 0

    @property
    def base_dim(self) -> int:
        return len(self.retraction)

    def to_json_dict(self) -> dict:
        f = self.field

        def mat(M):
            return [[f.to_str(x) for x in row] for row in M]

        return {
            "total": self.total.to_json_dict(),
            "kernel_inj": mat(self.kernel_inj),
            "retraction": mat(self.retraction),
            "section": mat(self.section),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SplitExtension":
        try:
            total = Algebra.from_json_dict(data["total"])
            f = total.field
            i = [[f.of(x) for x in row] for row in data["kernel_inj"]]
            pi = [[f.of(x) for x in row] for row in data["retraction"]]
            s = [[f.of(x) for x in row] for row in data["section"]]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed split extension: {exc}") from exc
        return cls(total, i, pi, s)

    # -- derived algebras ----------------------------------------------------

    def base_algebra(self) -> Algebra:
        """Base structure transported along the section: b_i . b_j is the
        retraction of s(b_i) . s(b_j)."""
        f, k = self.field, self.base_dim
        cols = [linalg.mat_col(self.section, j) for j in range(k)]
        op_entries = []
        for op in range(self.total.num_ops):
            entries = {}
            for i in range(k):
                for j in range(k):
                    v = linalg.mat_vec(
                        f, self.retraction, self.total.multiply(op, cols[i], cols[j])
                    )
                    for m, c in enumerate(v):
                        if not f.is_zero(c):
                            entries[(i, j, m)] = c
            op_entries.append(entries)
        names = [op.name for op in self.total.ops]
        labels = _label_pullback(f, self.total.labels, self.section)
        return Algebra.from_entries(f, k, op_entries, names=names, labels=labels)

    def kernel_algebra(self) -> Algebra:
        """Kernel structure pulled back along the injection; raises
        KernelMismatch when the image of i is not closed."""
        f, m = self.field, self.kernel_dim
        cols = [linalg.mat_col(self.kernel_inj, j) for j in range(m)]
        op_entries = []
        for op in range(self.total.num_ops):
            entries = {}
            for i in range(m):
                for j in range(m):
                    v = self.total.multiply(op, cols[i], cols[j])
                    coords = linalg.solve(f, self.kernel_inj, v)
                    if coords is None or not linalg.vec_eq(
                        f, linalg.mat_vec(f, self.kernel_inj, coords), v
                    ):
                        raise KernelMismatch(
                            f"kernel image is not closed under operation {op} at ({i},{j})"
                        )
                    for kk, c in enumerate(coords):
                        if not f.is_zero(c):
                            entries[(i, j, kk)] = c
            op_entries.append(entries)
        names = [op.name for op in self.total.ops]
        labels = _label_pullback(f, self.total.labels, self.kernel_inj)
        return Algebra.from_entries(f, m, op_entries, names=names, labels=labels)

    def validate(self) -> list:
        """All structural defects, as human-readable strings (empty = valid)."""
        f = self.field
        problems = []
        n, k, m = self.total.dim, self.base_dim, self.kernel_dim
        if k + m != n:
            problems.append("base and kernel dimensions do not add up to the total")
        ps = linalg.mat_mul(f, self.retraction, self.section)
        if not linalg.mat_eq(f, ps, linalg.mat_identity(f, k)):
            problems.append("retraction . section is not the identity")
        pi_i = linalg.mat_mul(f, self.retraction, self.kernel_inj)
        if not linalg.mat_is_zero(f, pi_i):
            problems.append("retraction . kernel_inj is not zero")
        if linalg.mat_rank(f, self.kernel_inj) != m:
            problems.append("kernel injection is not injective")
        if linalg.mat_rank(f, self.retraction) != k:
            problems.append("retraction is not surjective")
        try:
            X = self.kernel_algebra()
        except KernelMismatch as exc:
            problems.append(str(exc))
            X = None
        B = self.base_algebra()
        if X is not None and not is_homomorphism(self.kernel_inj, X, self.total).holds:
            problems.append("kernel injection is not a homomorphism")
        if not is_homomorphism(self.retraction, self.total, B).holds:
            problems.append("retraction is not a homomorphism")
        if not is_homomorphism(self.section, B, self.total).holds:
            problems.append("section is not a homomorphism")
        return problems


def _action_ops_variety(variety):
    # operation count of the algebras participating in each variety
    return 2 if variety in ("poisson", "cpoisson") else 1


def _label_pullback(field, total_labels, matrix):
    """Labels transported along a map whose columns are basis vectors of the
    total algebra; None as soon as any column is not a unit vector."""
    if total_labels is None:
        return None
    cols = len(matrix[0]) if matrix else 0
    labels = []
    for j in range(cols):
        col = linalg.mat_col(matrix, j)
        hits = [i for i, c in enumerate(col) if not field.is_zero(c)]
        if len(hits) != 1 or not field.eq(col[hits[0]], field.one):
            return None
        labels.append(total_labels[hits[0]])
    return labels


def semidirect_algebra(a: ActionData) -> Algebra:
    """The algebra on B + X built from the semidirect formulas, with no
    validity gate.

    For invalid actions the result simply fails the variety's identity
    checker; that equivalence (conditions hold iff the built algebra is in
    the variety) is the correspondence the validation suite tests.
    """
    B, X, f = a.acting, a.kernel, a.field
    nb, nx = B.dim, X.dim
    n = nb + nx
    num_ops = _action_ops_variety(a.variety)
    if B.num_ops != num_ops or X.num_ops != num_ops:
        raise ShapeMismatch("operation count of B or X does not match the variety")
    op_entries = []
    names = []
    for op in range(num_ops):
        entries = {}

        def put(i, j, vec, offset):
            for k, c in enumerate(vec):
                if not f.is_zero(c):
                    entries[(i, j, offset + k)] = c

        for i in range(nb):
            for j in range(nb):
                put(i, j, B.mul_basis(op, i, j), 0)
        for i in range(nx):
            for j in range(nx):
                put(nb + i, nb + j, X.mul_basis(op, i, j), nb)
        is_bracket_of_poisson = num_ops == 2 and op == 1
        if not is_bracket_of_poisson:
            # product slot (or the Leibniz/associative single operation)
            for p in range(nb):
                for y in range(nx):
                    put(p, nb + y, a.l[p][y], nb)
            for x in range(nx):
                for q in range(nb):
                    put(nb + x, q, a.r_value(x, q), nb)
        else:
            for p in range(nb):
                for y in range(nx):
                    put(p, nb + y, a.bracket[p][y], nb)
            for x in range(nx):
                for q in range(nb):
                    put(nb + x, q, linalg.vec_neg(f, list(a.bracket[q][x])), nb)
        op_entries.append(entries)
        names.append(B.ops[op].name)
    labels = None
    if B.labels is not None and X.labels is not None:
        labels = B.labels + X.labels
    return Algebra.from_entries(f, n, op_entries, names=names, labels=labels)


def semidirect(a: ActionData) -> SplitExtension:
    """The semidirect product on B + X, refusing invalid actions.

    Basis order is B first, then X.  The canonical injection, retraction
    and section make the result a split extension whose derived action is
    the input again.
    """
    report = validate_action(a)
    if not report.passed:
        raise InvalidAction(report)
    f = a.field
    nb, nx = a.acting.dim, a.kernel.dim
    n = nb + nx
    total = semidirect_algebra(a)
    kernel_inj = [[f.one if (i >= nb and i - nb == j) else f.zero for j in range(nx)] for i in range(n)]
    retraction = [[f.one if i == j else f.zero for j in range(n)] for i in range(nb)]
    section = [[f.one if i == j else f.zero for j in range(nb)] for i in range(n)]
    return SplitExtension(total, kernel_inj, retraction, section)


def extract_action(E: SplitExtension, variety: str) -> ActionData:
    """Recover the derived action of a split extension.

    l and r (and the bracket action) are computed by multiplying section
    images with kernel images inside the total algebra and re-expressing
    the result in kernel coordinates.
    """
    if variety not in VARIETIES:
        raise InputError(f"unknown variety {variety!r}")
    f = E.field
    nb, nx = E.base_dim, E.kernel_dim
    ps = linalg.mat_mul(f, E.retraction, E.section)
    if not linalg.mat_eq(f, ps, linalg.mat_identity(f, nb)):
        raise NotSplit("retraction . section is not the identity")
    if not linalg.mat_is_zero(f, linalg.mat_mul(f, E.retraction, E.kernel_inj)):
        raise KernelMismatch("kernel image does not lie in the kernel of the retraction")
    if linalg.mat_rank(f, E.kernel_inj) != nx or nb + nx != E.total.dim:
        raise KernelMismatch("kernel injection does not span the retraction kernel")
    num_ops = _action_ops_variety(variety)
    if E.total.num_ops != num_ops:
        raise ShapeMismatch("operation count of the total algebra does not match the variety")
    B = E.base_algebra()
    X = E.kernel_algebra()
    s_cols = [linalg.mat_col(E.section, j) for j in range(nb)]
    i_cols = [linalg.mat_col(E.kernel_inj, j) for j in range(nx)]

    def kernel_coords(v, what):
        coords = linalg.solve(f, E.kernel_inj, v)
        if coords is None or not linalg.vec_eq(
            f, linalg.mat_vec(f, E.kernel_inj, coords), v
        ):
            raise KernelMismatch(f"{what} does not land in the kernel image")
        return coords

    prod_op = 0
    br_op = E.total.bracket_op
    main_op = prod_op if variety in ("associative", "poisson", "cpoisson") else br_op
    l = [
        [kernel_coords(E.total.multiply(main_op, s_cols[p], i_cols[y]), "l value") for y in range(nx)]
        for p in range(nb)
    ]
    r = [
        [kernel_coords(E.total.multiply(main_op, i_cols[x], s_cols[q]), "r value") for q in range(nb)]
        for x in range(nx)
    ]
    bracket = None
    if variety in ("poisson", "cpoisson"):
        bracket = [
            [kernel_coords(E.total.multiply(br_op, s_cols[p], i_cols[y]), "bracket value") for y in range(nx)]
            for p in range(nb)
        ]
    if variety == "cpoisson":
        # r must be the commutative mirror of l; anything else is not a
        # commutative split extension
        for x in range(nx):
            for q in range(nb):
                if not linalg.vec_eq(f, r[x][q], l[q][x]):
                    raise KernelMismatch("extension is not commutative: r is not the mirror of l")
        return ActionData(variety, B, X, l, None, bracket)
    return ActionData(variety, B, X, l, r, bracket)


# -- morphisms into the weak actor ---------------------------------------------


def _action_tuples(a: ActionData):
    """The operator tuple of each acting basis element, per the pinned
    convention table."""
    f = a.field
    tuples = []
    for p in range(a.acting.dim):
        if a.variety == "leibniz":
            tuples.append((linalg.mat_neg(f, a.r_matrix(p)), a.l_matrix(p)))
        elif a.variety == "associative":
            tuples.append((a.l_matrix(p), a.r_matrix(p)))
        elif a.variety == "poisson":
            tuples.append((a.l_matrix(p), a.r_matrix(p), a.k_matrix(p)))
        else:  # cpoisson
            tuples.append((a.l_matrix(p), a.k_matrix(p)))
    return tuples


@dataclass
class ActorMorphism:
    variety: str
    acting: Algebra
    kernel: Algebra
    space: OperatorSpace
    matrix: list  # space.dim x acting.dim
    hom: IdentityReport

    @property
    def is_homomorphism(self) -> bool:
        return self.hom.holds


def action_to_morphism(a: ActionData, space: Optional[OperatorSpace] = None) -> ActorMorphism:
    """Coordinates of each acting basis element's operator tuple in the weak
    actor basis, with the homomorphism property verified and reported."""
    if space is None:
        space = weak_actor(a.kernel, a.variety)
    cols = []
    for p, tup in enumerate(_action_tuples(a)):
        coords = space.coords(tup)
        if coords is None:
            raise TupleNotInSpace(
                f"operator tuple of acting basis element {p} escapes the weak actor"
            )
        cols.append(coords)
    matrix = linalg.mat_from_cols(a.field, cols, space.dim)
    hom = is_homomorphism(matrix, a.acting, space.as_algebra())
    return ActorMorphism(a.variety, a.acting, a.kernel, space, matrix, hom)


def _morphism_tuples(matrix, B: Algebra, space: OperatorSpace):
    cols = [linalg.mat_col(matrix, p) for p in range(B.dim)]
    return [space.tuple_from_coords(c) for c in cols]


def _require_hom(matrix, B: Algebra, space: OperatorSpace):
    if len(matrix) != space.dim or (matrix and len(matrix[0]) != B.dim):
        raise ShapeMismatch(
            f"morphism matrix must be {space.dim}x{B.dim}"
        )
    hom = is_homomorphism(matrix, B, space.as_algebra())
    if not hom.holds:
        raise NotAHomomorphism(
            f"not a homomorphism into the weak actor: defect at {hom.witness}"
        )
    return hom


def morphism_to_action(
    matrix,
    B: Algebra,
    X: Algebra,
    variety: str,
    space: Optional[OperatorSpace] = None,
    _skip_hom_check: bool = False,
) -> ActionData:
    """Unpack a morphism into action tensors (inverse of
    :func:`action_to_morphism` on its image)."""
    if space is None:
        space = weak_actor(X, variety)
    if not _skip_hom_check:
        _require_hom(matrix, B, space)
    f = B.field
    nb, nx = B.dim, X.dim
    tuples = _morphism_tuples(matrix, B, space)
    l = [[None] * nx for _ in range(nb)]
    r = [[None] * nb for _ in range(nx)] if variety != "cpoisson" else None
    bracket = [[None] * nx for _ in range(nb)] if variety in ("poisson", "cpoisson") else None
    for p, tup in enumerate(tuples):
        if variety == "leibniz":
            Rm, Lm = linalg.mat_neg(f, tup[0]), tup[1]
        elif variety == "associative":
            Lm, Rm = tup[0], tup[1]
        elif variety == "poisson":
            Lm, Rm, Km = tup[0], tup[1], tup[2]
        else:
            Lm, Km = tup[0], tup[1]
            Rm = None
        for y in range(nx):
            l[p][y] = linalg.mat_col(Lm, y)
        if r is not None:
            for x in range(nx):
                r[x][p] = linalg.mat_col(Rm, x)
        if bracket is not None:
            for y in range(nx):
                bracket[p][y] = linalg.mat_col(Km, y)
    return ActionData(variety, B, X, l, r, bracket)


@dataclass
class ActingReport:
    acting: bool
    witness: Optional[tuple] = None
    defect: Optional[list] = None

    def to_json_dict(self, field: Field) -> dict:
        data = {"acting": self.acting}
        if not self.acting:
            data["witness"] = list(self.witness)
            data["defect"] = [field.to_str(x) for x in self.defect]
        return data


def is_acting_morphism(
    matrix,
    B: Algebra,
    X: Algebra,
    variety: str,
    space: Optional[OperatorSpace] = None,
) -> ActingReport:
    """Whether a homomorphism into the weak actor arises from a split
    extension.

    The criterion is the permutability law for associative and Poisson
    varieties (the left action of one element commutes with the right
    action of another) and, for Leibniz, the vanishing of
    l_x(l_y(a) + r_y(a)); a non-homomorphism input is an error rather
    than a "not acting" verdict.
    """
    if space is None:
        space = weak_actor(X, variety)
    _require_hom(matrix, B, space)
    f = B.field
    nb, nx = B.dim, X.dim
    tuples = _morphism_tuples(matrix, B, space)
    if variety == "leibniz":

        def defect(x, y, aa):
            Ax, Bx = tuples[x]
            Ay, By = tuples[y]
            inner = linalg.vec_sub(
                f,
                linalg.mat_vec(f, By, X.unit(aa)),
                linalg.mat_vec(f, Ay, X.unit(aa)),
            )
            return linalg.mat_vec(f, Bx, inner)

    elif variety == "cpoisson":

        def defect(x, y, aa):
            fx = tuples[x][0]
            fy = tuples[y][0]
            u = X.unit(aa)
            return linalg.vec_sub(
                f,
                linalg.mat_vec(f, fx, linalg.mat_vec(f, fy, u)),
                linalg.mat_vec(f, fy, linalg.mat_vec(f, fx, u)),
            )

    else:  # associative and poisson share the permutability criterion

        def defect(x, y, aa):
            fx = tuples[x][0]
            Fy = tuples[y][1]
            u = X.unit(aa)
            return linalg.vec_sub(
                f,
                linalg.mat_vec(f, fx, linalg.mat_vec(f, Fy, u)),
                linalg.mat_vec(f, Fy, linalg.mat_vec(f, fx, u)),
            )

    for x in range(nb):
        for y in range(nb):
            for aa in range(nx):
                d = defect(x, y, aa)
                if not linalg.vec_is_zero(f, d):
                    return ActingReport(False, witness=(x, y, aa), defect=d)
    return ActingReport(True)


# -- exhaustive enumeration (small prime fields) -------------------------------


def _entry_slots(variety, nb, nx):
    slots = nb * nx * nx  # l
    if variety != "cpoisson":
        slots += nx * nb * nx  # r
    if variety in ("poisson", "cpoisson"):
        slots += nb * nx * nx  # bracket action
    return slots


def enumerate_actions(B: Algebra, X: Algebra, variety: str, budget: int = DEFAULT_BUDGET):
    """All valid actions of B on X, by exhausting every tensor assignment
    over the prime field and validating each; output is sorted canonically
    so it is independent of enumeration order."""
    f = B.field
    if not isinstance(f, PrimeField):
        raise InputError("exhaustive enumeration needs a prime field")
    nb, nx = B.dim, X.dim
    slots = _entry_slots(variety, nb, nx)
    needed = f.p ** slots
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    nl = nb * nx * nx
    nr = 0 if variety == "cpoisson" else nx * nb * nx
    found = []
    for assignment in iproduct(range(f.p), repeat=slots):
        l = r = bracket = None
        if nl:
            l = [
                [
                    [assignment[(p * nx + y) * nx + k] for k in range(nx)]
                    for y in range(nx)
                ]
                for p in range(nb)
            ]
        if nr:
            r = [
                [
                    [assignment[nl + (x * nb + q) * nx + k] for k in range(nx)]
                    for q in range(nb)
                ]
                for x in range(nx)
            ]
        if variety in ("poisson", "cpoisson"):
            off = nl + nr
            bracket = [
                [
                    [assignment[off + (p * nx + y) * nx + k] for k in range(nx)]
                    for y in range(nx)
                ]
                for p in range(nb)
            ]
        a = ActionData(variety, B, X, l, r, bracket)
        if validate_action(a).passed:
            found.append(a)
    found.sort(key=lambda act: act.canonical_key())
    return found


def enumerate_acting_morphisms(
    B: Algebra,
    X: Algebra,
    variety: str,
    budget: int = DEFAULT_BUDGET,
    space: Optional[OperatorSpace] = None,
):
    """All acting homomorphisms from B into the weak actor of X, enumerated
    entry by entry over the prime field; returns (space, sorted matrices)."""
    f = B.field
    if not isinstance(f, PrimeField):
        raise InputError("exhaustive enumeration needs a prime field")
    if space is None:
        space = weak_actor(X, variety)
    slots = space.dim * B.dim
    needed = f.p ** slots
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    actor_alg = space.as_algebra()
    found = []
    for assignment in iproduct(range(f.p), repeat=slots):
        matrix = [
            [assignment[t * B.dim + p] for p in range(B.dim)] for t in range(space.dim)
        ]
        if not is_homomorphism(matrix, B, actor_alg).holds:
            continue
        if is_acting_morphism(matrix, B, X, variety, space=space).acting:
            found.append(matrix)
    found.sort(key=lambda m: tuple(tuple(row) for row in m))
    return space, found
