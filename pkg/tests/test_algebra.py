from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from helpers import algebra_from_constants, consts, left_consts
from smoothrough.algebra import (
    Algebra, AxiomError, Module, check_algebra, check_unital_module, detect_unit, direct_sum, forget_unit,
    is_algebra_hom, left_as_right_op, opposite, right_as_left_op, swap_sides, trivial_module, unit_algebra,
    zero_action_module,
)
from smoothrough.category import UNIT, Mor, atom, identity, tensor_obj, zero_mor
from smoothrough.examples import PairingSpec, build_pairing_algebra, column_module, matrix_algebra, zero_algebra
from smoothrough.linalg import Matrix


def test_unit_algebra_passes_and_is_unital():
    k = unit_algebra()
    assert check_algebra(k).passed and k.is_unital
    assert detect_unit(k) == identity(UNIT)


def test_zero_algebra_is_associative_non_unital():
    z = zero_algebra(1)
    assert check_algebra(z).passed
    assert not z.is_unital and detect_unit(z) is None
    assert detect_unit(zero_algebra(2)) is None


def test_matrix_algebra_matches_matrix_units():
    m2 = matrix_algebra(2)
    assert consts(m2) == oracle.matrix_unit_constants(2)
    assert oracle.is_associative(consts(m2))
    assert check_algebra(m2).passed and m2.is_unital


def test_detect_unit_matrix_algebra():
    m2 = matrix_algebra(2)
    e = detect_unit(forget_unit(m2))
    assert e == m2.unit
    # oracle: solve e·a = a = a·e independently
    assert [x for x in oracle.find_unit(consts(m2))] == [1, 0, 0, 1]


def test_non_associative_data_is_rejected():
    c = oracle.matrix_unit_constants(2)
    c[0][0] = [1, 1, 0, 0]
    assert not oracle.is_associative(c)
    with pytest.raises(AxiomError) as err:
        algebra_from_constants(c)
    assert err.value.law == "associativity"
    assert "lhs" in err.value.detail and "rhs" in err.value.detail


def test_bad_unit_is_rejected():
    z = zero_algebra(1)
    eta = Mor(UNIT, z.carrier, Matrix.column([1]))
    with pytest.raises(AxiomError) as err:
        Algebra(z.carrier, z.mu, eta)
    assert err.value.law == "left unit"


def test_opposite_examples():
    a = algebra_from_constants([[[3]]], "C")
    assert opposite(a).mu == a.mu
    pa = build_pairing_algebra(PairingSpec(2, 1, (1, 0)))
    op = opposite(pa.algebra)
    assert consts(op) == oracle.opposite_constants(consts(pa.algebra))
    # in A, a1 is a right identity; in A^op it is a left identity
    c, cop = consts(pa.algebra), consts(op)
    assert all(c[j][0] == [int(k == j) for k in range(2)] for j in range(2))
    assert all(cop[0][j] == [int(k == j) for k in range(2)] for j in range(2))
    assert opposite(opposite(pa.algebra)).mu == pa.algebra.mu


def test_side_swaps():
    k = unit_algebra()
    x = atom("X", 2)
    r = Module(x, right=k, act_right=trivial_module(x).act_right)
    l = right_as_left_op(r)
    assert l.act_left.mat == r.act_right.mat
    back = left_as_right_op(l)
    assert back.act_right == r.act_right
    pa = build_pairing_algebra(PairingSpec(2, 1, (1, 0)))
    reg = pa.algebra.regular.forget_left()
    as_left = right_as_left_op(reg)
    cop = oracle.opposite_constants(consts(pa.algebra))
    assert oracle.is_left_module(cop, left_consts(as_left), 2)
    assert swap_sides(swap_sides(pa.algebra.regular)).act_left == pa.algebra.regular.act_left


def test_unital_module_checks():
    m2 = matrix_algebra(2)
    assert check_unital_module(m2.regular)
    assert not check_unital_module(zero_action_module(m2, atom("Z", 1)))
    assert check_unital_module(column_module(m2, 2))


def test_module_axioms_rejected():
    m2 = matrix_algebra(2)
    x = atom("X", 2)
    bad = Mor(tensor_obj(m2.carrier, x), x, Matrix.from_sparse(2, 8, {(0, 0): 1, (1, 1): 1}))
    with pytest.raises(AxiomError) as err:
        Module(x, m2, bad)
    assert err.value.law == "left associativity"


def test_direct_sum_and_zero_action():
    m2 = matrix_algebra(2)
    s = direct_sum(m2.regular.forget_right(), zero_action_module(m2, atom("Z", 1)))
    assert s.dim == 5
    assert oracle.is_left_module(consts(m2), left_consts(s), 5)


def test_algebra_homomorphisms():
    m2 = matrix_algebra(2)
    assert is_algebra_hom(identity(m2.carrier), m2, m2)
    z = zero_mor(m2.carrier, m2.carrier)
    assert is_algebra_hom(z, m2, m2)


@given(st.integers(0, 7), st.integers(0, 3), st.integers(1, 3), st.integers(0, 1))
@settings(max_examples=60, deadline=None)
def test_perturbed_constants_are_rejected(i, k, delta, which):
    """Any failure of associativity is caught; the rejection rate of single-entry changes is positive."""
    base = oracle.matrix_unit_constants(2) if which else oracle.pairing_constants(2, 2, [1, 0, 0, 1])
    c = [[list(r) for r in row] for row in base]
    c[i // 4][i % 4][k] += delta
    if oracle.is_associative(c):
        assert check_algebra(algebra_from_constants(c)).passed
    else:
        with pytest.raises(AxiomError):
            algebra_from_constants(c)


def test_perturbation_rejection_rate_positive():
    base = oracle.matrix_unit_constants(2)
    total = rejected = 0
    for i in range(4):
        for j in range(4):
            for k in range(4):
                c = [[list(r) for r in row] for row in base]
                c[i][j][k] += 1
                total += 1
                try:
                    algebra_from_constants(c)
                except AxiomError:
                    rejected += 1
    assert rejected > 0
    assert rejected / total > 0.5


@given(st.sampled_from([(1, 1), (2, 1), (1, 2), (2, 2)]))
@settings(max_examples=10, deadline=None)
def test_detect_unit_recovers_stored_unit(dims):
    m = matrix_algebra(dims[0])
    assert detect_unit(forget_unit(m)) == m.unit
    pa = build_pairing_algebra(PairingSpec(*dims, tuple(int(w == v) for w in range(dims[1]) for v in range(dims[0]))))
    unit = detect_unit(pa.algebra)
    expected = oracle.find_unit(consts(pa.algebra))
    assert (unit is None) == (expected is None)
