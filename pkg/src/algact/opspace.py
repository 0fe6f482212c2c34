"""Operator spaces cut out by linear identities, with their induced operations.

Each space is the exact nullspace of a homogeneous linear system over the
unknown entries of a tuple of n x n matrices:

* ``derivations``        d:            d[x,y] = [dx,y] + [x,dy]
* ``antiderivations``    D:            D[x,y] = [Dx,y] - [Dy,x]
* ``biderivations``      (d,D):        both of the above and [x,dy] = [x,Dy]
* ``bimultipliers``      (f,F):        f(xy) = f(x)y,  F(xy) = xF(y),
                                       xf(y) = F(x)y
* ``multipliers``        f:            f(xy) = f(x)y   (commutative base)
* ``usga-poisson``       (f,F,d):      (f,F) bimultiplier, d a derivation of
                                       both operations, coupled by
                                       f[x,y] = [fx,y] - d(y)x and
                                       F[x,y] = [Fx,y] - x d(y)
* ``usga-cpoisson``      (f,d):        f a multiplier, d a derivation of both
                                       operations, f[x,y] = [fx,y] - d(y)x

Every identity above is bilinear in the two algebra arguments, so imposing
it on all basis pairs is equivalent to imposing it everywhere; that is the
soundness argument for assembling the systems from basis pairs only.

The computed basis is canonical (reduced row echelon over the flattened
matrix tuple), each induced operation is stored as a structure-constant
tensor in that basis, and closure plus the defining identities are
re-verified on the computed basis during construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional

from . import linalg
from .algebra import Algebra, check_identity, is_homomorphism
from .errors import (
    ClosureError,
    InnerNotInSpace,
    InputError,
    NotAssociative,
    NotCommutative,
    NotCommutativePoisson,
    NotPoisson,
    OpArityMismatch,
)
from .fields import Field

__all__ = [
    "LinearSystem",
    "nullspace",
    "OperatorSpace",
    "derivations",
    "anti_derivations",
    "biderivations",
    "bimultipliers",
    "multipliers",
    "poisson_usga",
    "comm_poisson_usga",
    "space_of_kind",
    "SPACE_KINDS",
    "inner_embedding",
    "InnerEmbedding",
    "check_bim_commutation",
    "CommutationReport",
    "der_module_action",
    "cpoisson_diagonal_report",
    "DiagonalReport",
]

SPACE_KINDS = (
    "derivations",
    "antiderivations",
    "biderivations",
    "bimultipliers",
    "multipliers",
    "usga-poisson",
    "usga-cpoisson",
)

_COMPONENTS = {
    "derivations": ("d",),
    "antiderivations": ("D",),
    "biderivations": ("d", "D"),
    "bimultipliers": ("f", "F"),
    "multipliers": ("f",),
    "usga-poisson": ("f", "F", "d"),
    "usga-cpoisson": ("f", "d"),
}


@dataclass
class LinearSystem:
    """Homogeneous system; rows are sparse {column: coefficient} maps."""

    field: Field
    unknowns: int
    rows: list = dc_field(default_factory=list)

    def add_form(self, form: dict):
        if form:
            self.rows.append(form)

    def dense_rows(self):
        z = self.field.zero
        out = []
        for form in self.rows:
            row = [z] * self.unknowns
            for idx, c in form.items():
                row[idx] = c
            out.append(row)
        return out


def nullspace(system: LinearSystem):
    """Canonical (RREF) basis of the solution space of ``system``."""
    basis, _ = linalg.nullspace_basis(
        system.field, system.dense_rows(), system.unknowns
    )
    return basis


# -- sparse linear forms over the unknown matrix entries ---------------------
#
# A "form vector" is a length-n list of {unknown-index: coefficient} dicts,
# one linear form per output coordinate.  Unknown matrix number b occupies
# the index block [b*n*n, (b+1)*n*n) in row-major order.


def _u_apply(field, block, n, vec):
    """Forms of (unknown matrix #block) applied to a known vector."""
    off = block * n * n
    out = []
    for m in range(n):
        form = {}
        for j, c in enumerate(vec):
            if not field.is_zero(c):
                form[off + m * n + j] = c
        out.append(form)
    return out


def _k_apply(field, K, fv):
    """Forms of a known matrix applied to a form vector."""
    out = []
    for m in range(len(K)):
        acc: dict = {}
        row = K[m]
        for j, form in enumerate(fv):
            c = row[j]
            if field.is_zero(c):
                continue
            for idx, s in form.items():
                v = field.add(acc.get(idx, field.zero), field.mul(c, s))
                if field.is_zero(v):
                    acc.pop(idx, None)
                else:
                    acc[idx] = v
        out.append(acc)
    return out


def _fv_combine(field, fvs, signs):
    out = []
    for parts in zip(*fvs):
        acc: dict = {}
        for form, sign in zip(parts, signs):
            for idx, s in form.items():
                s = s if sign > 0 else field.neg(s)
                v = field.add(acc.get(idx, field.zero), s)
                if field.is_zero(v):
                    acc.pop(idx, None)
                else:
                    acc[idx] = v
        out.append(acc)
    return out


def _emit(system, fv):
    for form in fv:
        system.add_form(form)


def _derivation_rows(system, A, op, block):
    """d(e_i . e_j) - d(e_i) . e_j - e_i . d(e_j) = 0 over all basis pairs."""
    f, n = A.field, A.dim
    for i in range(n):
        Li = A.left_matrix_basis(op, i)
        d_ei = _u_apply(f, block, n, A.unit(i))
        for j in range(n):
            Rj = A.right_matrix_basis(op, j)
            t1 = _u_apply(f, block, n, A.mul_basis(op, i, j))
            t2 = _k_apply(f, Rj, d_ei)
            t3 = _k_apply(f, Li, _u_apply(f, block, n, A.unit(j)))
            _emit(system, _fv_combine(f, (t1, t2, t3), (1, -1, -1)))


def _antiderivation_rows(system, A, op, block):
    """D(e_i . e_j) - D(e_i) . e_j + D(e_j) . e_i = 0 over all basis pairs."""
    f, n = A.field, A.dim
    for i in range(n):
        Ri = A.right_matrix_basis(op, i)
        D_ei = _u_apply(f, block, n, A.unit(i))
        for j in range(n):
            Rj = A.right_matrix_basis(op, j)
            t1 = _u_apply(f, block, n, A.mul_basis(op, i, j))
            t2 = _k_apply(f, Rj, D_ei)
            t3 = _k_apply(f, Ri, _u_apply(f, block, n, A.unit(j)))
            _emit(system, _fv_combine(f, (t1, t2, t3), (1, -1, 1)))


def _bider_compat_rows(system, A, op, block_d, block_D):
    """e_i . (d(e_j) - D(e_j)) = 0 over all basis pairs."""
    f, n = A.field, A.dim
    for i in range(n):
        Li = A.left_matrix_basis(op, i)
        for j in range(n):
            diff = _fv_combine(
                f,
                (_u_apply(f, block_d, n, A.unit(j)), _u_apply(f, block_D, n, A.unit(j))),
                (1, -1),
            )
            _emit(system, _k_apply(f, Li, diff))


def _left_multiplier_rows(system, A, op, block):
    """f(e_i . e_j) - f(e_i) . e_j = 0."""
    f, n = A.field, A.dim
    for i in range(n):
        f_ei = _u_apply(f, block, n, A.unit(i))
        for j in range(n):
            t1 = _u_apply(f, block, n, A.mul_basis(op, i, j))
            t2 = _k_apply(f, A.right_matrix_basis(op, j), f_ei)
            _emit(system, _fv_combine(f, (t1, t2), (1, -1)))


def _right_multiplier_rows(system, A, op, block):
    """F(e_i . e_j) - e_i . F(e_j) = 0."""
    f, n = A.field, A.dim
    for i in range(n):
        Li = A.left_matrix_basis(op, i)
        for j in range(n):
            t1 = _u_apply(f, block, n, A.mul_basis(op, i, j))
            t2 = _k_apply(f, Li, _u_apply(f, block, n, A.unit(j)))
            _emit(system, _fv_combine(f, (t1, t2), (1, -1)))


def _bim_mixed_rows(system, A, op, block_f, block_F):
    """e_i . f(e_j) - F(e_i) . e_j = 0."""
    f, n = A.field, A.dim
    for i in range(n):
        Li = A.left_matrix_basis(op, i)
        F_ei = _u_apply(f, block_F, n, A.unit(i))
        for j in range(n):
            t1 = _k_apply(f, Li, _u_apply(f, block_f, n, A.unit(j)))
            t2 = _k_apply(f, A.right_matrix_basis(op, j), F_ei)
            _emit(system, _fv_combine(f, (t1, t2), (1, -1)))


def _v1_rows(system, A, br, prod, block_f, block_d):
    """f([e_i,e_j]) - [f(e_i),e_j] + d(e_j).e_i = 0."""
    f, n = A.field, A.dim
    for i in range(n):
        f_ei = _u_apply(f, block_f, n, A.unit(i))
        Rp_i = A.right_matrix_basis(prod, i)
        for j in range(n):
            t1 = _u_apply(f, block_f, n, A.mul_basis(br, i, j))
            t2 = _k_apply(f, A.right_matrix_basis(br, j), f_ei)
            t3 = _k_apply(f, Rp_i, _u_apply(f, block_d, n, A.unit(j)))
            _emit(system, _fv_combine(f, (t1, t2, t3), (1, -1, 1)))


def _v2_rows(system, A, br, prod, block_F, block_d):
    """F([e_i,e_j]) - [F(e_i),e_j] + e_i.d(e_j) = 0."""
    f, n = A.field, A.dim
    for i in range(n):
        F_ei = _u_apply(f, block_F, n, A.unit(i))
        Lp_i = A.left_matrix_basis(prod, i)
        for j in range(n):
            t1 = _u_apply(f, block_F, n, A.mul_basis(br, i, j))
            t2 = _k_apply(f, A.right_matrix_basis(br, j), F_ei)
            t3 = _k_apply(f, Lp_i, _u_apply(f, block_d, n, A.unit(j)))
            _emit(system, _fv_combine(f, (t1, t2, t3), (1, -1, 1)))


# -- operator space ----------------------------------------------------------


@dataclass
class OperatorSpace:
    """Canonical basis of operator tuples plus induced structure constants.

    ``basis[t]`` is a tuple of matrices on the base algebra; ``ops`` maps an
    operation name to the tensor of the induced operation expressed in this
    basis, making the space directly reusable as an :class:`Algebra`.
    """

    base: Algebra
    kind: str
    components: tuple
    basis: list
    vec_basis: list
    pivots: list
    ops: list  # [(name, {(a, b): coords})]
    _alg_cache: Optional[Algebra] = dc_field(default=None, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self) -> Field:
        return self.base.field

    def flatten(self, tup) -> list:
        flat = []
        for comp in tup:
            flat.extend(linalg.mat_flatten(comp))
        return flat

    def unflatten(self, flat) -> tuple:
        n = self.base.dim
        return tuple(
            linalg.mat_unflatten(flat[b * n * n : (b + 1) * n * n], n, n)
            for b in range(len(self.components))
        )

    def coords(self, tup):
        """Coordinates of an operator tuple in the basis; None if outside."""
        return linalg.coords_in_span(self.field, self.vec_basis, self.pivots, self.flatten(tup))

    def tuple_from_coords(self, coords) -> tuple:
        f = self.field
        flat = [f.zero] * (len(self.components) * self.base.dim ** 2)
        for c, bvec in zip(coords, self.vec_basis):
            if f.is_zero(c):
                continue
            flat = [f.add(x, f.mul(c, y)) for x, y in zip(flat, bvec)]
        return self.unflatten(flat)

    def as_algebra(self) -> Algebra:
        """The space as a structure-constant algebra in its own basis."""
        if not self.ops:
            raise OpArityMismatch(
                f"the {self.kind} space carries no internal bilinear operation"
            )
        if self._alg_cache is not None:
            return self._alg_cache
        f = self.field
        op_entries = []
        names = []
        for name, tensor in self.ops:
            entries = {}
            for (a, b), coords in tensor.items():
                for k, c in enumerate(coords):
                    if not f.is_zero(c):
                        entries[(a, b, k)] = c
            op_entries.append(entries)
            names.append(name)
        self._alg_cache = Algebra.from_entries(f, self.dim, op_entries, names=names)
        return self._alg_cache

    def to_json_dict(self) -> dict:
        f = self.field
        data = {
            "kind": self.kind,
            "components": list(self.components),
            "base": self.base.to_json_dict(),
            "dim": self.dim,
            "basis": [
                [[[f.to_str(x) for x in row] for row in comp] for comp in tup]
                for tup in self.basis
            ],
        }
        if self.ops:
            data["ops"] = self.as_algebra().to_json_dict()["ops"]
        return data


def _require_associative(A: Algebra, op: int):
    rep = check_identity(A, "associative") if op == 0 else None
    if rep is not None and not rep.holds:
        raise NotAssociative(f"base product is not associative: witness {rep.witness}")


def _tensor_of(space_field, fn, tuples, flatten, coords):
    tensor = {}
    for a, ta in enumerate(tuples):
        for b, tb in enumerate(tuples):
            raw = fn(ta, tb)
            c = coords(raw)
            if c is None:
                raise ClosureError(
                    f"induced operation escaped the span at basis pair ({a}, {b})"
                )
            if any(not space_field.is_zero(x) for x in c):
                tensor[(a, b)] = c
    return tensor


def _comm(f, a, b):
    return linalg.mat_sub(f, linalg.mat_mul(f, a, b), linalg.mat_mul(f, b, a))


def _space_ops(kind: str, f: Field):
    mm = lambda a, b: linalg.mat_mul(f, a, b)
    add = lambda a, b: linalg.mat_add(f, a, b)
    if kind == "derivations":
        return [("bracket", lambda t, u: (_comm(f, t[0], u[0]),))]
    if kind == "antiderivations":
        return []
    if kind == "biderivations":
        # [(d,D),(d',D')] = (d d' - d' d, D d' - d' D)
        return [
            (
                "bracket",
                lambda t, u: (
                    _comm(f, t[0], u[0]),
                    linalg.mat_sub(f, mm(t[1], u[0]), mm(u[0], t[1])),
                ),
            )
        ]
    if kind == "bimultipliers":
        # (f,F)(f',F') = (f f', F' F): the second slot composes oppositely
        return [("mul", lambda t, u: (mm(t[0], u[0]), mm(u[1], t[1])))]
    if kind == "multipliers":
        return [("mul", lambda t, u: (mm(t[0], u[0]),))]
    if kind == "usga-poisson":
        return [
            (
                "mul",
                lambda t, u: (
                    mm(t[0], u[0]),
                    mm(u[1], t[1]),
                    add(mm(t[0], u[2]), mm(u[1], t[2])),
                ),
            ),
            (
                "bracket",
                lambda t, u: (
                    linalg.mat_sub(f, mm(t[0], u[2]), mm(u[2], t[0])),
                    linalg.mat_sub(f, mm(t[1], u[2]), mm(u[2], t[1])),
                    _comm(f, t[2], u[2]),
                ),
            ),
        ]
    if kind == "usga-cpoisson":
        return [
            (
                "mul",
                lambda t, u: (
                    mm(t[0], u[0]),
                    add(mm(t[0], u[1]), mm(u[0], t[1])),
                ),
            ),
            (
                "bracket",
                lambda t, u: (
                    linalg.mat_sub(f, mm(t[0], u[1]), mm(u[1], t[0])),
                    _comm(f, t[1], u[1]),
                ),
            ),
        ]
    raise InputError(f"unknown operator space kind {kind!r}")


def defining_defects(kind: str, A: Algebra, tup):
    """Direct evaluation of the defining identities of ``kind`` on a raw
    matrix tuple, independent of the assembled linear system.

    Yields (label, (i, j), defect vector) for every violated instance; used
    as the post-construction self-check and by membership diagnostics.
    """
    f, n = A.field, A.dim
    br = A.bracket_op
    prod = 0

    def apply(M, v):
        return linalg.mat_vec(f, M, v)

    def pairs():
        return ((i, j) for i in range(n) for j in range(n))

    def der(label, M, op):
        for i, j in pairs():
            lhs = apply(M, A.mul_basis(op, i, j))
            rhs = linalg.vec_add(
                f,
                A.multiply(op, apply(M, A.unit(i)), A.unit(j)),
                A.multiply(op, A.unit(i), apply(M, A.unit(j))),
            )
            d = linalg.vec_sub(f, lhs, rhs)
            if not linalg.vec_is_zero(f, d):
                yield label, (i, j), d

    def antider(label, M, op):
        for i, j in pairs():
            lhs = apply(M, A.mul_basis(op, i, j))
            rhs = linalg.vec_sub(
                f,
                A.multiply(op, apply(M, A.unit(i)), A.unit(j)),
                A.multiply(op, apply(M, A.unit(j)), A.unit(i)),
            )
            d = linalg.vec_sub(f, lhs, rhs)
            if not linalg.vec_is_zero(f, d):
                yield label, (i, j), d

    def lmul(label, M, op):
        for i, j in pairs():
            d = linalg.vec_sub(
                f,
                apply(M, A.mul_basis(op, i, j)),
                A.multiply(op, apply(M, A.unit(i)), A.unit(j)),
            )
            if not linalg.vec_is_zero(f, d):
                yield label, (i, j), d

    def rmul(label, M, op):
        for i, j in pairs():
            d = linalg.vec_sub(
                f,
                apply(M, A.mul_basis(op, i, j)),
                A.multiply(op, A.unit(i), apply(M, A.unit(j))),
            )
            if not linalg.vec_is_zero(f, d):
                yield label, (i, j), d

    def mixed(label, Mf, MF, op):
        for i, j in pairs():
            d = linalg.vec_sub(
                f,
                A.multiply(op, A.unit(i), apply(Mf, A.unit(j))),
                A.multiply(op, apply(MF, A.unit(i)), A.unit(j)),
            )
            if not linalg.vec_is_zero(f, d):
                yield label, (i, j), d

    def v1(label, Mf, Md):
        for i, j in pairs():
            lhs = apply(Mf, A.mul_basis(br, i, j))
            rhs = linalg.vec_sub(
                f,
                A.multiply(br, apply(Mf, A.unit(i)), A.unit(j)),
                A.multiply(prod, apply(Md, A.unit(j)), A.unit(i)),
            )
            d = linalg.vec_sub(f, lhs, rhs)
            if not linalg.vec_is_zero(f, d):
                yield label, (i, j), d

    def v2(label, MF, Md):
        for i, j in pairs():
            lhs = apply(MF, A.mul_basis(br, i, j))
            rhs = linalg.vec_sub(
                f,
                A.multiply(br, apply(MF, A.unit(i)), A.unit(j)),
                A.multiply(prod, A.unit(i), apply(Md, A.unit(j))),
            )
            d = linalg.vec_sub(f, lhs, rhs)
            if not linalg.vec_is_zero(f, d):
                yield label, (i, j), d

    def compat(label, Md, MD):
        for i, j in pairs():
            d = linalg.vec_sub(
                f,
                A.multiply(br, A.unit(i), apply(Md, A.unit(j))),
                A.multiply(br, A.unit(i), apply(MD, A.unit(j))),
            )
            if not linalg.vec_is_zero(f, d):
                yield label, (i, j), d

    if kind == "derivations":
        yield from der("derivation", tup[0], br)
    elif kind == "antiderivations":
        yield from antider("antiderivation", tup[0], br)
    elif kind == "biderivations":
        yield from der("derivation", tup[0], br)
        yield from antider("antiderivation", tup[1], br)
        yield from compat("compatibility", tup[0], tup[1])
    elif kind == "bimultipliers":
        yield from lmul("left", tup[0], prod)
        yield from rmul("right", tup[1], prod)
        yield from mixed("mixed", tup[0], tup[1], prod)
    elif kind == "multipliers":
        yield from lmul("multiplier", tup[0], prod)
    elif kind == "usga-poisson":
        yield from lmul("bim.left", tup[0], prod)
        yield from rmul("bim.right", tup[1], prod)
        yield from mixed("bim.mixed", tup[0], tup[1], prod)
        yield from der("lie_derivation", tup[2], br)
        yield from der("V3", tup[2], prod)
        yield from v1("V1", tup[0], tup[2])
        yield from v2("V2", tup[1], tup[2])
    elif kind == "usga-cpoisson":
        yield from lmul("multiplier", tup[0], prod)
        yield from der("lie_derivation", tup[1], br)
        yield from der("V2", tup[1], prod)
        yield from v1("V1", tup[0], tup[1])
    else:
        raise InputError(f"unknown operator space kind {kind!r}")


def _build_space(A: Algebra, kind: str, fill_rows: Callable) -> OperatorSpace:
    f, n = A.field, A.dim
    ncomp = len(_COMPONENTS[kind])
    system = LinearSystem(f, ncomp * n * n)
    fill_rows(system)
    vec_basis, pivots = linalg.nullspace_basis(f, system.dense_rows(), system.unknowns)
    space = OperatorSpace(
        base=A,
        kind=kind,
        components=_COMPONENTS[kind],
        basis=[],
        vec_basis=vec_basis,
        pivots=pivots,
        ops=[],
    )
    space.basis = [space.unflatten(v) for v in vec_basis]
    for tup in space.basis:
        bad = next(defining_defects(kind, A, tup), None)
        if bad is not None:
            raise ClosureError(
                f"computed {kind} basis tuple violates {bad[0]} at {bad[1]}"
            )
    for name, fn in _space_ops(kind, f):
        tensor = _tensor_of(f, fn, space.basis, space.flatten, space.coords)
        space.ops.append((name, tensor))
    return space


def derivations(A: Algebra) -> OperatorSpace:
    """Derivation space with the commutator bracket (a Lie algebra)."""
    br = A.bracket_op

    def rows(system):
        _derivation_rows(system, A, br, 0)

    return _build_space(A, "derivations", rows)


def anti_derivations(A: Algebra) -> OperatorSpace:
    """Antiderivation space.

    It carries no internal bilinear operation of its own; the module action
    of the derivation space on it is exposed via :func:`der_module_action`.
    """
    br = A.bracket_op

    def rows(system):
        _antiderivation_rows(system, A, br, 0)

    return _build_space(A, "antiderivations", rows)


def biderivations(A: Algebra) -> OperatorSpace:
    """Pairs (d, D) of a derivation and an antiderivation with
    [x, d(y)] = [x, D(y)]; a Leibniz algebra under its bracket, and the weak
    actor in the Leibniz variety."""
    br = A.bracket_op

    def rows(system):
        _derivation_rows(system, A, br, 0)
        _antiderivation_rows(system, A, br, 1)
        _bider_compat_rows(system, A, br, 0, 1)

    return _build_space(A, "biderivations", rows)


def bimultipliers(A: Algebra) -> OperatorSpace:
    """Bimultiplier pairs (f, F) of an associative algebra; the weak actor
    in the associative variety."""
    _require_associative(A, 0)

    def rows(system):
        _left_multiplier_rows(system, A, 0, 0)
        _right_multiplier_rows(system, A, 0, 1)
        _bim_mixed_rows(system, A, 0, 0, 1)

    return _build_space(A, "bimultipliers", rows)


def multipliers(A: Algebra) -> OperatorSpace:
    """Multipliers f(xy) = f(x)y of a commutative associative algebra."""
    _require_associative(A, 0)
    if not check_identity(A, "commutative").holds:
        raise NotCommutative("multipliers need a commutative base product")

    def rows(system):
        _left_multiplier_rows(system, A, 0, 0)

    return _build_space(A, "multipliers", rows)


def poisson_usga(V: Algebra) -> OperatorSpace:
    """The universal strict general actor of a Poisson algebra: triples
    (f, F, d) with (f, F) a bimultiplier of the product, d a derivation of
    both operations, and the two coupling identities; carries the product
    (f,F,d)(f',F',d') = (ff', F'F, fd' + F'd) and the bracket
    [(f,F,d),(f',F',d')] = (fd' - d'f, Fd' - d'F, dd' - d'd)."""
    if V.num_ops != 2:
        raise OpArityMismatch("a Poisson algebra carries two operations")
    rep = check_identity(V, "poisson")
    if not rep.holds:
        raise NotPoisson(f"base fails {rep.failed_part} at {rep.witness}")
    br = 1

    def rows(system):
        _left_multiplier_rows(system, V, 0, 0)
        _right_multiplier_rows(system, V, 0, 1)
        _bim_mixed_rows(system, V, 0, 0, 1)
        _derivation_rows(system, V, br, 2)
        _derivation_rows(system, V, 0, 2)
        _v1_rows(system, V, br, 0, 0, 2)
        _v2_rows(system, V, br, 0, 1, 2)

    return _build_space(V, "usga-poisson", rows)


def comm_poisson_usga(V: Algebra) -> OperatorSpace:
    """Commutative-Poisson analogue: pairs (f, d) with f a multiplier, d a
    derivation of both operations, and f[x,y] = [fx,y] - d(y)x; product
    (f,d)(f',d') = (ff', fd' + f'd), bracket (fd' - d'f, dd' - d'd)."""
    if V.num_ops != 2:
        raise OpArityMismatch("a Poisson algebra carries two operations")
    rep = check_identity(V, "poisson")
    if not rep.holds or not check_identity(V, "commutative").holds:
        raise NotCommutativePoisson("base must be a commutative Poisson algebra")
    br = 1

    def rows(system):
        _left_multiplier_rows(system, V, 0, 0)
        _derivation_rows(system, V, br, 1)
        _derivation_rows(system, V, 0, 1)
        _v1_rows(system, V, br, 0, 0, 1)

    return _build_space(V, "usga-cpoisson", rows)


_SPACE_BUILDERS = {
    "derivations": derivations,
    "antiderivations": anti_derivations,
    "biderivations": biderivations,
    "bimultipliers": bimultipliers,
    "multipliers": multipliers,
    "usga-poisson": poisson_usga,
    "usga-cpoisson": comm_poisson_usga,
}


def space_of_kind(A: Algebra, kind: str) -> OperatorSpace:
    try:
        builder = _SPACE_BUILDERS[kind]
    except KeyError:
        raise InputError(f"unknown operator space kind {kind!r}") from None
    return builder(A)


# -- inner elements ----------------------------------------------------------


def inner_tuple(A: Algebra, kind: str, a: int) -> tuple:
    """The operator tuple induced by left/right multiplication by e_a."""
    f = A.field
    br = A.bracket_op
    if kind == "biderivations":
        Ra = A.right_matrix_basis(br, a)
        return (linalg.mat_neg(f, Ra), A.left_matrix_basis(br, a))
    if kind == "bimultipliers":
        return (A.left_matrix_basis(0, a), A.right_matrix_basis(0, a))
    if kind == "multipliers":
        return (A.left_matrix_basis(0, a),)
    if kind == "usga-poisson":
        return (
            A.left_matrix_basis(0, a),
            A.right_matrix_basis(0, a),
            A.left_matrix_basis(1, a),
        )
    if kind == "usga-cpoisson":
        return (A.left_matrix_basis(0, a), A.left_matrix_basis(1, a))
    raise InputError(f"no inner elements defined for kind {kind!r}")


@dataclass
class InnerEmbedding:
    space: OperatorSpace
    matrix: list  # space.dim x base.dim
    hom: object  # IdentityReport of the homomorphism check

    @property
    def is_homomorphism(self) -> bool:
        return self.hom.holds


def inner_embedding(A: Algebra, kind: str, space: Optional[OperatorSpace] = None) -> InnerEmbedding:
    """Express the inner tuples of ``A`` in the computed operator space and
    verify that the resulting linear map is a homomorphism for the induced
    operations.

    A tuple escaping the space would mean the system and the inner formulas
    disagree; that is surfaced as an error, never ignored.
    """
    if space is None:
        space = space_of_kind(A, kind)
    cols = []
    for a in range(A.dim):
        c = space.coords(inner_tuple(A, kind, a))
        if c is None:
            raise InnerNotInSpace(f"inner tuple of basis element {a} escapes {kind}")
        cols.append(c)
    matrix = linalg.mat_from_cols(A.field, cols, space.dim)
    hom = is_homomorphism(matrix, A, space.as_algebra())
    return InnerEmbedding(space=space, matrix=matrix, hom=hom)


# -- special checks ----------------------------------------------------------


@dataclass
class CommutationReport:
    """Whether every left multiplier commutes with every right multiplier."""

    holds: bool
    witness: Optional[tuple] = None

    def to_json_dict(self) -> dict:
        data = {"holds": self.holds}
        if not self.holds:
            data["witness"] = list(self.witness)
        return data


def check_bim_commutation(V: Algebra, bim: Optional[OperatorSpace] = None) -> CommutationReport:
    """Test f o F' = F' o f across all pairs of bimultiplier basis tuples.

    Both sides are bilinear in the pair, so basis pairs suffice.  When this
    holds, every morphism into the Poisson actor space arises from a split
    extension.
    """
    if bim is None:
        bim = bimultipliers(V)
    f = V.field
    for s, ts in enumerate(bim.basis):
        for t, tt in enumerate(bim.basis):
            lhs = linalg.mat_mul(f, ts[0], tt[1])
            rhs = linalg.mat_mul(f, tt[1], ts[0])
            if not linalg.mat_eq(f, lhs, rhs):
                return CommutationReport(False, witness=(s, t))
    return CommutationReport(True)


def der_module_action(
    A: Algebra,
    ders: Optional[OperatorSpace] = None,
    antiders: Optional[OperatorSpace] = None,
):
    """Tensor of the action d . D = D d - d D of derivations on
    antiderivations, in the two computed bases.

    Exposed as a convenience product; the result of the action is verified
    to stay inside the antiderivation space.
    """
    if ders is None:
        ders = derivations(A)
    if antiders is None:
        antiders = anti_derivations(A)
    f = A.field
    tensor = {}
    for i, dt in enumerate(ders.basis):
        for j, Dt in enumerate(antiders.basis):
            raw = linalg.mat_sub(
                f, linalg.mat_mul(f, Dt[0], dt[0]), linalg.mat_mul(f, dt[0], Dt[0])
            )
            coords = antiders.coords((raw,))
            if coords is None:
                raise ClosureError(
                    f"derivation action left the antiderivation space at ({i}, {j})"
                )
            if any(not f.is_zero(c) for c in coords):
                tensor[(i, j)] = coords
    return tensor


@dataclass
class DiagonalReport:
    """Status of the pairwise embedding (f, d) -> (f, f, d) into the
    three-component actor space.

    Membership and the bracket always correspond; the product corresponds
    exactly when the multiplier components commute pairwise (for instance
    whenever the left/right multiplier commutation law holds), so that part
    is reported rather than asserted.
    """

    embeds: bool
    bracket_hom: bool
    product_hom: bool
    witness: Optional[tuple] = None


def cpoisson_diagonal_report(
    V: Algebra,
    cspace: Optional[OperatorSpace] = None,
    pspace: Optional[OperatorSpace] = None,
) -> DiagonalReport:
    if cspace is None:
        cspace = comm_poisson_usga(V)
    if pspace is None:
        pspace = poisson_usga(V)
    f = V.field
    for (fm, dm) in cspace.basis:
        if pspace.coords((fm, fm, dm)) is None:
            return DiagonalReport(False, False, False)
    bracket_ok = True
    product_ok = True
    witness = None

    def embed(tup):
        return (tup[0], tup[0], tup[1])

    cp_fns = dict(_space_ops("usga-cpoisson", f))
    p_fns = dict(_space_ops("usga-poisson", f))
    for a, ta in enumerate(cspace.basis):
        for b, tb in enumerate(cspace.basis):
            via_c = embed(cp_fns["mul"](ta, tb))
            via_p = p_fns["mul"](embed(ta), embed(tb))
            if not all(linalg.mat_eq(f, x, y) for x, y in zip(via_c, via_p)):
                product_ok = False
                if witness is None:
                    witness = (a, b)
            via_cb = embed(cp_fns["bracket"](ta, tb))
            via_pb = p_fns["bracket"](embed(ta), embed(tb))
            if not all(linalg.mat_eq(f, x, y) for x, y in zip(via_cb, via_pb)):
                bracket_ok = False
    return DiagonalReport(True, bracket_ok, product_ok, witness=witness)
