"""Acceptance suite: one test per criterion, exact (zero-tolerance) checks.

Each test prints a single pass line on success; runtime-limited criteria
assert their wall-clock budget.
"""

import io
import json
import random
import time

import pytest

from algact import linalg
from algact.actions import (
    ActionData,
    action_to_morphism,
    enumerate_acting_morphisms,
    enumerate_actions,
    extract_action,
    morphism_to_action,
    semidirect,
    semidirect_algebra,
    validate_action,
)
from algact.algebra import check_identity
from algact.catalog import builtin, catalog_actions, catalog_algebras, repro_suite
from algact.cli import main as cli_main
from algact.errors import (
    BudgetExceeded,
    NotAssociative,
    NotCommutative,
    NotCommutativePoisson,
    NotPoisson,
)
from algact.fields import GF, Q
from algact.opspace import (
    SPACE_KINDS,
    space_of_kind,
)

import oracle


def canonical(data) -> bytes:
    return json.dumps(data, sort_keys=True, separators=(",", ":")).encode()


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli_main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


# -- criterion 1 ----------------------------------------------------------------


def test_criterion_1_fact_exactness():
    t0 = time.perf_counter()
    for field in (Q, GF(5)):
        report = repro_suite(field)
        assert report.passed, report.to_text()
        by_id = {r.fact_id: r for r in report.results}
        assert by_id["a"].details["bider_dim"] == 2
        assert by_id["a"].details["acting"] is False
        assert by_id["a"].details["failed_conditions"] == ["L6"]
        assert by_id["a"].details["L6_defect"] == ["2"]
        assert by_id["d"].details["usga_dim"] == 3
        assert by_id["d"].details["bracket_zero"] == []
        assert by_id["d"].details["poisson"] is True
        assert by_id["e"].details["usga_dim"] == 12
        assert by_id["e"].details["bracket_is_skew"] is False
        assert by_id["f"].details["usga_c_dim"] == 8
        assert by_id["f"].details["product_commutative"] is False
        assert by_id["g"].details["eqpois_holds"] is True
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"fact suite took {elapsed:.2f}s (budget 1s)"
    print(f"criterion 1 (fact exactness over Q and GF(5), {elapsed:.2f}s): PASS")


# -- criterion 2 ----------------------------------------------------------------


VARIETY_TAGS = {
    "leibniz": ("leibniz_right",),
    "associative": ("associative",),
    "poisson": ("poisson",),
    "cpoisson": ("poisson", "commutative"),
}

_VARIETY_POOL = {
    "leibniz": ("abelian(1)", "abelian(2)", "leibniz_2dim_nonlie", "lie_2dim_nonabelian"),
    "associative": ("abelian(1)", "abelian(2)", "assoc_unital_1dim",
                    "assoc_trunc_poly", "assoc_triangular"),
    "poisson": ("poisson_abelian(1)", "poisson_abelian(2)", "poisson_triangular",
                "poisson_trunc_poly", "cpoisson_solv2"),
    "cpoisson": ("poisson_abelian(1)", "poisson_abelian(2)", "poisson_trunc_poly",
                 "cpoisson_solv2"),
}


def _random_action(rng, variety, B, X):
    p = B.field.p
    nb, nx = B.dim, X.dim

    def t3(a, b, c):
        return [[[rng.randrange(p) for _ in range(c)] for _ in range(b)] for _ in range(a)]

    l = t3(nb, nx, nx)
    r = None if variety == "cpoisson" else t3(nx, nb, nx)
    k = t3(nb, nx, nx) if variety in ("poisson", "cpoisson") else None
    return ActionData(variety, B, X, l, r, k)


def _mutate(rng, act):
    p = act.field.p
    l = [[list(v) for v in row] for row in act.l]
    r = None if act.r is None else [[list(v) for v in row] for row in act.r]
    k = None if act.bracket is None else [[list(v) for v in row] for row in act.bracket]
    tensors = [t for t in (l, r, k) if t is not None]
    t = tensors[rng.randrange(len(tensors))]
    i = rng.randrange(len(t))
    j = rng.randrange(len(t[i]))
    m = rng.randrange(len(t[i][j]))
    t[i][j][m] = (t[i][j][m] + 1 + rng.randrange(p - 1)) % p
    return ActionData(act.variety, act.acting, act.kernel, l, r, k)


def test_criterion_2_checker_equivalence():
    t0 = time.perf_counter()
    rng = random.Random(20260810)
    field = GF(3)
    total = agreements = 0
    for variety, names in _VARIETY_POOL.items():
        algebras = [builtin(n, field) for n in names]
        valid_seeds = [
            act for name, act in catalog_actions(field)
            if act.variety == variety and act.acting.dim <= 2 and act.kernel.dim <= 2
        ]
        instances = []
        for _ in range(40):
            B = algebras[rng.randrange(len(algebras))]
            X = algebras[rng.randrange(len(algebras))]
            instances.append(_random_action(rng, variety, B, X))
        for act in valid_seeds:
            instances.append(act)
            instances.extend(_mutate(rng, act) for _ in range(3))
        for act in instances:
            verdict = validate_action(act).passed
            built = semidirect_algebra(act)
            checker = all(check_identity(built, tag).holds for tag in VARIETY_TAGS[variety])
            assert verdict == checker, (variety, act.to_json_dict())
            total += 1
            agreements += 1
    elapsed = time.perf_counter() - t0
    assert total >= 200, total
    assert elapsed < 30.0, f"equivalence sweep took {elapsed:.2f}s (budget 30s)"
    print(
        f"criterion 2 (validator == semidirect checker on {total} instances, "
        f"{elapsed:.2f}s): PASS"
    )


# -- criterion 3 ----------------------------------------------------------------


def test_criterion_3_enumeration_bijection():
    t0 = time.perf_counter()
    field = GF(3)
    F1 = builtin("abelian(1)", field)
    L2 = builtin("leibniz_2dim_nonlie", field)
    pairs = [(F1, F1), (F1, L2), (L2, F1), (L2, L2)]
    checked = 0
    for B, X in pairs:
        try:
            acts = enumerate_actions(B, X, "leibniz")
        except BudgetExceeded:
            # (L2, L2) needs 3^16 assignments: outside the default budget
            assert (B.dim, X.dim) == (2, 2)
            continue
        space, homs = enumerate_acting_morphisms(B, X, "leibniz")
        assert len(acts) == len(homs)
        keys_from_homs = sorted(
            morphism_to_action(m, B, X, "leibniz", space=space).canonical_key()
            for m in homs
        )
        assert keys_from_homs == [a.canonical_key() for a in acts]
        hom_set = {canonical([[str(x) for x in row] for row in m]) for m in homs}
        for act in acts:
            mor = action_to_morphism(act, space=space)
            key = canonical([[str(x) for x in row] for row in mor.matrix])
            assert key in hom_set
        checked += 1
    # the same bijection in the two-operation varieties on the line
    P1 = builtin("poisson_abelian(1)", field)
    for variety in ("poisson", "cpoisson"):
        acts = enumerate_actions(P1, P1, variety)
        space, homs = enumerate_acting_morphisms(P1, P1, variety)
        assert sorted(
            morphism_to_action(m, P1, P1, variety, space=space).canonical_key()
            for m in homs
        ) == [a.canonical_key() for a in acts]
        checked += 1
    elapsed = time.perf_counter() - t0
    assert checked == 5
    assert elapsed < 120.0, f"bijection sweep took {elapsed:.2f}s (budget 120s)"
    print(
        f"criterion 3 (action/morphism bijection on {checked} pairs, "
        f"{elapsed:.2f}s): PASS"
    )


# -- criterion 4 ----------------------------------------------------------------


def _usga_product_raw(f, t, u):
    return (
        linalg.mat_mul(f, t[0], u[0]),
        linalg.mat_mul(f, u[1], t[1]),
        linalg.mat_add(f, linalg.mat_mul(f, t[0], u[2]), linalg.mat_mul(f, u[1], t[2])),
    )


def _usga_bracket_raw(f, t, u):
    def comm(a, b):
        return linalg.mat_sub(f, linalg.mat_mul(f, a, b), linalg.mat_mul(f, b, a))

    return (
        linalg.mat_sub(f, linalg.mat_mul(f, t[0], u[2]), linalg.mat_mul(f, u[2], t[0])),
        linalg.mat_sub(f, linalg.mat_mul(f, t[1], u[2]), linalg.mat_mul(f, u[2], t[1])),
        comm(t[2], u[2]),
    )


def test_criterion_4_closure_self_checks():
    closures = 0
    for field in (Q, GF(5)):
        for name, A, _tag in catalog_algebras(field):
            ders = space_of_kind(A, "derivations")
            assert check_identity(ders.as_algebra(), "lie").holds, name
            bider = space_of_kind(A, "biderivations")
            assert check_identity(bider.as_algebra(), "leibniz_right").holds, name
            closures += 2
            if check_identity(A, "associative").holds:
                bim = space_of_kind(A, "bimultipliers")
                assert check_identity(bim.as_algebra(), "associative").holds, name
                closures += 1
            if A.num_ops == 2 and check_identity(A, "poisson").holds:
                # re-verify closure of both operations by raw recomposition
                usga = space_of_kind(A, "usga-poisson")
                f = A.field
                raw_fns = {"mul": _usga_product_raw, "bracket": _usga_bracket_raw}
                for opname, tensor in usga.ops:
                    fn = raw_fns[opname]
                    for a in range(usga.dim):
                        for b in range(usga.dim):
                            raw = fn(f, usga.basis[a], usga.basis[b])
                            coords = usga.coords(raw)
                            assert coords is not None, (name, opname)
                            expected = list(tensor.get((a, b), [f.zero] * usga.dim))
                            assert coords == expected, (name, opname)
                closures += 1
    assert closures >= 40
    print(f"criterion 4 ({closures} closure self-checks, zero tolerance): PASS")


# -- criterion 5 ----------------------------------------------------------------


def test_criterion_5_roundtrips_byte_exact():
    count = 0
    for field in (Q, GF(3)):
        for name, act in catalog_actions(field):
            blob = canonical(act.to_json_dict())
            ext = semidirect(act)
            back = extract_action(ext, act.variety)
            assert canonical(back.to_json_dict()) == blob, name
            mor = action_to_morphism(act)
            act2 = morphism_to_action(
                mor.matrix, act.acting, act.kernel, act.variety, space=mor.space
            )
            assert canonical(act2.to_json_dict()) == blob, name
            mor2 = action_to_morphism(act2, space=mor.space)
            assert mor2.matrix == mor.matrix, name
            count += 3
    print(f"criterion 5 ({count} byte-exact roundtrips): PASS")


# -- criterion 6 ----------------------------------------------------------------


_ORACLE_CASES = {
    "derivations": ("abelian(1)", "abelian(2)", "leibniz_2dim_nonlie",
                    "lie_2dim_nonabelian", "poisson_triangular", "cpoisson_solv2"),
    "antiderivations": ("abelian(1)", "abelian(2)", "leibniz_2dim_nonlie",
                        "lie_2dim_nonabelian", "poisson_triangular", "cpoisson_solv2"),
    "biderivations": ("abelian(1)", "abelian(2)", "leibniz_2dim_nonlie",
                      "lie_2dim_nonabelian", "poisson_triangular", "cpoisson_solv2"),
    "bimultipliers": ("abelian(1)", "abelian(2)", "assoc_unital_1dim",
                      "assoc_trunc_poly", "assoc_triangular", "poisson_triangular"),
    "multipliers": ("abelian(1)", "abelian(2)", "assoc_unital_1dim",
                    "assoc_trunc_poly", "poisson_trunc_poly"),
    "usga-poisson": ("poisson_abelian(1)", "poisson_abelian(2)", "poisson_triangular",
                     "poisson_trunc_poly", "cpoisson_solv2"),
    "usga-cpoisson": ("poisson_abelian(1)", "poisson_abelian(2)",
                      "poisson_trunc_poly", "cpoisson_solv2"),
}


def test_criterion_6_nullspace_vs_enumeration():
    field = GF(3)
    cases = 0
    assert set(_ORACLE_CASES) == set(SPACE_KINDS)
    for kind, names in _ORACLE_CASES.items():
        for name in names:
            A = builtin(name, field)
            assert A.dim <= 2
            space = space_of_kind(A, kind)
            count = oracle.count_space(kind, A, 3)
            assert count == 3 ** space.dim, (kind, name, count, space.dim)
            cases += 1
    print(f"criterion 6 ({cases} oracle/nullspace agreements over GF(3)): PASS")


# -- criterion 7 ----------------------------------------------------------------


def test_criterion_7_determinism(tmp_path):
    outputs = []
    pairfile = tmp_path / "pair.json"
    F1 = builtin("abelian(1)", GF(3))
    pairfile.write_text(
        json.dumps(
            {
                "variety": "leibniz",
                "acting": F1.to_json_dict(),
                "kernel": F1.to_json_dict(),
            }
        )
    )
    commands = [
        ("repro", "--field", "5", "--json"),
        ("hunt", "--p", "3", "--dim", "2", "--samples", "30", "--seed", "9", "--json"),
        ("enumerate", str(pairfile), "--json"),
    ]
    for argv in commands:
        code1, out1, _ = run_cli(*argv)
        code2, out2, _ = run_cli(*argv)
        assert code1 == code2 == 0, argv
        assert out1.encode() == out2.encode(), argv
        outputs.append(out1)
    assert all(outputs)
    print("criterion 7 (byte-identical JSON reports for fixed seeds): PASS")
