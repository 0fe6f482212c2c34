from fractions import Fraction

import pytest

from algact import linalg
from algact.algebra import Algebra, check_identity
from algact.catalog import builtin
from algact.errors import (
    NotAssociative,
    NotCommutative,
    NotPoisson,
    OpArityMismatch,
)
from algact.fields import GF, Q
from algact.opspace import (
    anti_derivations,
    biderivations,
    bimultipliers,
    check_bim_commutation,
    comm_poisson_usga,
    cpoisson_diagonal_report,
    defining_defects,
    der_module_action,
    derivations,
    inner_embedding,
    inner_tuple,
    multipliers,
    poisson_usga,
    space_of_kind,
)

import oracle


def F(x):
    return Fraction(x)


# -- dimensions against hand computations ---------------------------------------


def test_derivations_abelian_is_all_of_end():
    assert derivations(builtin("abelian(1)")).dim == 1
    assert derivations(builtin("abelian(2)")).dim == 4


def test_derivation_dims():
    assert derivations(builtin("leibniz_2dim_nonlie")).dim == 2
    assert derivations(builtin("lie_2dim_nonabelian")).dim == 2
    assert derivations(builtin("sl2")).dim == 3
    assert derivations(builtin("heisenberg")).dim == 6


def test_antiderivation_dims():
    assert anti_derivations(builtin("abelian(2)")).dim == 4
    assert anti_derivations(builtin("leibniz_2dim_nonlie")).dim == 2


def test_lie_derivations_equal_antiderivations():
    for name in ("sl2", "heisenberg", "lie_2dim_nonabelian", "abelian(2)"):
        A = builtin(name)
        d = derivations(A)
        ad = anti_derivations(A)
        assert linalg.same_span(A.field, d.vec_basis, ad.vec_basis), name


def test_biderivations_of_line_is_end_squared():
    assert biderivations(builtin("abelian(1)")).dim == 2


def test_biderivations_dims():
    assert biderivations(builtin("abelian(2)")).dim == 8
    assert biderivations(builtin("leibniz_2dim_nonlie")).dim == 3
    # trivial right center forces the diagonal
    assert biderivations(builtin("sl2")).dim == derivations(builtin("sl2")).dim


def test_bimultiplier_dims():
    zero1 = Algebra.from_entries(Q, 1, [{}])
    assert bimultipliers(zero1).dim == 2
    assert bimultipliers(builtin("assoc_unital_1dim")).dim == 1
    zero2 = Algebra.from_entries(Q, 2, [{}])
    assert bimultipliers(zero2).dim == 8


def test_multiplier_dims():
    zero2 = Algebra.from_entries(Q, 2, [{}])
    assert multipliers(zero2).dim == 4
    assert multipliers(builtin("assoc_unital_1dim")).dim == 1
    assert multipliers(builtin("assoc_trunc_poly")).dim == 2


def test_usga_dims():
    assert poisson_usga(builtin("poisson_abelian(1)")).dim == 3
    assert poisson_usga(builtin("poisson_abelian(2)")).dim == 12
    assert comm_poisson_usga(builtin("poisson_abelian(2)")).dim == 8
    assert comm_poisson_usga(builtin("poisson_abelian(1)")).dim == 2
    assert comm_poisson_usga(builtin("cpoisson_solv2")).dim == 3


def test_zero_dimensional_base():
    V = Algebra.from_entries(Q, 0, [{}, {}])
    for kind in ("derivations", "biderivations", "bimultipliers", "usga-poisson"):
        space = space_of_kind(V, kind)
        assert space.dim == 0
        assert space.ops == [] or all(t == {} for _, t in space.ops)


# -- preconditions ----------------------------------------------------------------


def test_bimultipliers_require_associative():
    nonassoc = Algebra.from_entries(Q, 2, [{(0, 0, 1): 1, (1, 0, 0): 1}])
    assert not check_identity(nonassoc, "associative").holds
    with pytest.raises(NotAssociative):
        bimultipliers(nonassoc)


def test_multipliers_require_commutative():
    with pytest.raises(NotCommutative):
        multipliers(builtin("assoc_triangular"))


def test_poisson_usga_requires_poisson():
    bad = Algebra.from_entries(Q, 1, [{}, {(0, 0, 0): 1}])  # nonzero [x,x]
    with pytest.raises(NotPoisson):
        poisson_usga(bad)


def test_antiderivations_have_no_algebra():
    space = anti_derivations(builtin("abelian(1)"))
    with pytest.raises(OpArityMismatch):
        space.as_algebra()


# -- closure and self-checks -------------------------------------------------------


ALL_BRACKET_ALGEBRAS = (
    "abelian(1)",
    "abelian(2)",
    "leibniz_2dim_nonlie",
    "lie_2dim_nonabelian",
    "sl2",
    "heisenberg",
)


@pytest.mark.parametrize("name", ALL_BRACKET_ALGEBRAS)
def test_derivations_form_lie_algebra(name):
    alg = derivations(builtin(name)).as_algebra()
    assert check_identity(alg, "lie").holds


@pytest.mark.parametrize("name", ALL_BRACKET_ALGEBRAS)
def test_biderivations_form_leibniz_algebra(name):
    alg = biderivations(builtin(name)).as_algebra()
    assert check_identity(alg, "leibniz_right").holds


@pytest.mark.parametrize(
    "name", ("assoc_unital_1dim", "assoc_trunc_poly", "assoc_triangular")
)
def test_bimultipliers_form_associative_algebra(name):
    alg = bimultipliers(builtin(name)).as_algebra()
    assert check_identity(alg, "associative").holds


@pytest.mark.parametrize(
    "name",
    (
        "poisson_abelian(1)",
        "poisson_abelian(2)",
        "poisson_triangular",
        "poisson_trunc_poly",
        "cpoisson_solv2",
    ),
)
def test_usga_closes_and_selfchecks(name):
    # construction itself re-verifies defining identities and closure
    V = builtin(name)
    space = poisson_usga(V)
    for tup in space.basis:
        assert next(defining_defects("usga-poisson", V, tup), None) is None


def test_basis_tuples_satisfy_identities_explicitly():
    A = builtin("leibniz_2dim_nonlie")
    space = biderivations(A)
    for tup in space.basis:
        assert next(defining_defects("biderivations", A, tup), None) is None


def test_induced_tensor_matches_raw_composition():
    A = builtin("sl2")
    space = derivations(A)
    f = A.field
    name, tensor = space.ops[0]
    for a, ta in enumerate(space.basis):
        for b, tb in enumerate(space.basis):
            raw = linalg.mat_sub(
                f,
                linalg.mat_mul(f, ta[0], tb[0]),
                linalg.mat_mul(f, tb[0], ta[0]),
            )
            coords = space.coords((raw,))
            expected = list(tensor.get((a, b), [f.zero] * space.dim))
            assert coords == expected


# -- inner embeddings --------------------------------------------------------------


def test_inner_embedding_abelian_is_zero():
    emb = inner_embedding(builtin("abelian(2)"), "biderivations")
    assert linalg.mat_is_zero(Q, emb.matrix)
    assert emb.is_homomorphism


@pytest.mark.parametrize("name", ("leibniz_2dim_nonlie", "sl2", "heisenberg"))
def test_inner_embedding_into_biderivations_is_hom(name):
    emb = inner_embedding(builtin(name), "biderivations")
    assert emb.is_homomorphism


def test_inner_embedding_poisson_zero_map():
    emb = inner_embedding(builtin("poisson_abelian(2)"), "usga-poisson")
    assert linalg.mat_is_zero(Q, emb.matrix)


@pytest.mark.parametrize(
    "name,kind",
    [
        ("assoc_triangular", "bimultipliers"),
        ("assoc_trunc_poly", "multipliers"),
        ("poisson_triangular", "usga-poisson"),
        ("poisson_trunc_poly", "usga-cpoisson"),
        ("cpoisson_solv2", "usga-cpoisson"),
    ],
)
def test_inner_embeddings_are_homomorphisms(name, kind):
    emb = inner_embedding(builtin(name), kind)
    assert emb.is_homomorphism


def test_inner_tuple_signs():
    # for the bi-adjoint convention the first slot is minus right bracket
    A = builtin("leibniz_2dim_nonlie")
    t = inner_tuple(A, "biderivations", 1)
    assert t[0] == [[F(0), F(-1)], [F(0), F(0)]]  # -ad_{e2}
    assert t[1] == [[F(0), F(1)], [F(0), F(0)]]  # Ad_{e2}


# -- commutation and module action ---------------------------------------------------


def test_bim_commutation_line_holds():
    assert check_bim_commutation(builtin("poisson_abelian(1)")).holds


def test_bim_commutation_unital_holds():
    # trivial annihilator case
    assert check_bim_commutation(builtin("assoc_trunc_poly")).holds


def test_bim_commutation_plane_fails_with_witness():
    V = builtin("poisson_abelian(2)")
    rep = check_bim_commutation(V)
    assert not rep.holds
    s, t = rep.witness
    bim = bimultipliers(V)
    f = V.field
    lhs = linalg.mat_mul(f, bim.basis[s][0], bim.basis[t][1])
    rhs = linalg.mat_mul(f, bim.basis[t][1], bim.basis[s][0])
    assert not linalg.mat_eq(f, lhs, rhs)


def test_der_module_action_closes():
    for name in ("leibniz_2dim_nonlie", "sl2"):
        tensor = der_module_action(builtin(name))
        assert isinstance(tensor, dict)


def test_diagonal_embedding_full_iso_when_multipliers_commute():
    for name in ("poisson_abelian(1)", "poisson_trunc_poly", "cpoisson_solv2"):
        rep = cpoisson_diagonal_report(builtin(name))
        assert rep.embeds and rep.bracket_hom and rep.product_hom, name


def test_diagonal_embedding_product_fails_on_plane():
    rep = cpoisson_diagonal_report(builtin("poisson_abelian(2)"))
    assert rep.embeds and rep.bracket_hom
    assert not rep.product_hom
    assert rep.witness is not None


# -- frozen actor space of the line ---------------------------------------------------


def test_usga_line_product_table():
    space = poisson_usga(builtin("poisson_abelian(1)"))
    alg = space.as_algebra()
    assert alg.ops[1].sorted_entries() == []  # zero bracket
    got = [(ijk, str(c)) for ijk, c in alg.ops[0].sorted_entries()]
    assert got == [
        ((0, 0, 0), "1"),
        ((0, 2, 2), "1"),
        ((1, 1, 1), "1"),
        ((2, 1, 2), "1"),
    ]
    assert check_identity(alg, "poisson").holds


def test_usga_plane_bracket_not_skew():
    alg = poisson_usga(builtin("poisson_abelian(2)")).as_algebra()
    rep = check_identity(alg, "anticommutative")
    assert not rep.holds


def test_usga_c_of_line_is_poisson_actor_case():
    space = comm_poisson_usga(builtin("poisson_abelian(1)"))
    assert space.dim == 2
    alg = space.as_algebra()
    assert alg.ops[1].sorted_entries() == []  # zero bracket
    assert check_identity(alg, "commutative").holds
    assert check_identity(alg, "poisson").holds


# -- oracle agreement over GF(3) -------------------------------------------------------


_F3_CASES = [
    ("derivations", "abelian(1)"),
    ("derivations", "abelian(2)"),
    ("derivations", "leibniz_2dim_nonlie"),
    ("antiderivations", "leibniz_2dim_nonlie"),
    ("antiderivations", "lie_2dim_nonabelian"),
    ("biderivations", "leibniz_2dim_nonlie"),
    ("biderivations", "lie_2dim_nonabelian"),
    ("multipliers", "assoc_trunc_poly"),
    ("bimultipliers", "assoc_triangular"),
    ("usga-cpoisson", "cpoisson_solv2"),
]


@pytest.mark.parametrize("kind,name", _F3_CASES)
def test_oracle_counts_match_nullspace_dims(kind, name):
    A = builtin(name, GF(3))
    space = space_of_kind(A, kind)
    assert oracle.count_space(kind, A, 3) == 3 ** space.dim


def test_oracle_usga_poisson_triangular():
    A = builtin("poisson_triangular", GF(3))
    space = poisson_usga(A)
    assert oracle.count_space("usga-poisson", A, 3) == 3 ** space.dim


# -- serialization -----------------------------------------------------------------------


def test_space_json_contains_algebra_ops():
    space = derivations(builtin("leibniz_2dim_nonlie"))
    data = space.to_json_dict()
    assert data["dim"] == 2
    assert data["kind"] == "derivations"
    assert "ops" in data
    assert len(data["basis"]) == 2
