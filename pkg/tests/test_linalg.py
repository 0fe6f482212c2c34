from fractions import Fraction

from algact import linalg
from algact.fields import GF, Q
from algact.opspace import LinearSystem, nullspace


def F(x):
    return Fraction(x)


def test_nullspace_identity_system_empty():
    system = LinearSystem(Q, 3)
    for i in range(3):
        system.add_form({i: F(1)})
    assert nullspace(system) == []


def test_nullspace_zero_system_is_standard_basis():
    system = LinearSystem(Q, 2)
    basis = nullspace(system)
    assert basis == [[F(1), F(0)], [F(0), F(1)]]


def test_nullspace_one_equation_mod3_canonicalized():
    f = GF(3)
    system = LinearSystem(f, 2)
    system.add_form({0: 1, 1: 1})  # x + y = 0
    assert nullspace(system) == [[1, 2]]


def test_rref_unique_under_row_shuffles():
    rows = [[F(2), F(4), F(1)], [F(1), F(2), F(0)], [F(0), F(0), F(1)]]
    r1, p1 = linalg.rref(Q, rows)
    r2, p2 = linalg.rref(Q, rows[::-1])
    assert r1 == r2 and p1 == p2


def test_coords_in_span():
    basis, piv = linalg.span_basis(Q, [[F(1), F(2), F(0)], [F(0), F(0), F(1)]], 3)
    v = [F(2), F(4), F(5)]
    coords = linalg.coords_in_span(Q, basis, piv, v)
    assert coords == [F(2), F(5)]
    assert linalg.coords_in_span(Q, basis, piv, [F(0), F(1), F(0)]) is None


def test_solve_consistent_and_inconsistent():
    A = [[F(1), F(0)], [F(1), F(1)], [F(0), F(1)]]
    x = linalg.solve(Q, A, [F(2), F(5), F(3)])
    assert x == [F(2), F(3)]
    assert linalg.solve(Q, A, [F(1), F(0), F(0)]) is None


def test_rank_and_same_span():
    A = [[F(1), F(1)], [F(2), F(2)]]
    assert linalg.mat_rank(Q, A) == 1
    b1, _ = linalg.span_basis(Q, [[F(1), F(1)]], 2)
    b2, _ = linalg.span_basis(Q, [[F(3), F(3)], [F(-1), F(-1)]], 2)
    assert linalg.same_span(Q, b1, b2)


def test_mat_mul_shapes():
    A = [[F(1), F(2)]]
    B = [[F(3)], [F(4)]]
    assert linalg.mat_mul(Q, A, B) == [[F(11)]]
    assert linalg.mat_mul(Q, B, A) == [[F(3), F(6)], [F(4), F(8)]]
