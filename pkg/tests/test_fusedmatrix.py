import json
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from _strategies import rationals, unit_q
from fusedhecke import golden
from fusedhecke.errors import ReductionError
from fusedhecke.fusedmatrix import (
    FusedMatrix,
    closed_form_entry,
    closed_form_matrix,
    closed_form_sigma_matrix,
    j_factor,
    reduce_operator,
    solve_in_span,
    symmetrized_basis,
)
from fusedhecke.heckerep import BlockShape, fused_r_baxterised, fused_r_product, generator, partial_braiding
from fusedhecke.tensor import TensorOperator

HALF = F(1, 2)
S22 = BlockShape(2, 2)


def test_basis_extremes_are_pure():
    basis = dict(symmetrized_basis(BlockShape(1, 1), HALF))
    assert len(basis) == 4
    assert all(len(basis[i]) == 1 for i in ((0, 0), (1, 1)))


def test_basis_uses_symmetrizer_weights():
    shape = BlockShape(1, 2)
    sp = shape.space()
    basis = dict(symmetrized_basis(shape, HALF))
    # first block holds e2, second block holds one e1: S[2,3] on e1⊗e2
    assert basis[(0, 1)] == {sp.index((1, 0, 1)): F(1, 5), sp.index((1, 1, 0)): F(4, 5)}
    with pytest.raises(ValueError):
        symmetrized_basis(BlockShape(1, 1, 3), HALF)


@given(unit_q(), st.sampled_from([(1, 2), (2, 2), (2, 3)]))
@settings(max_examples=8)
def test_basis_nonnegative(q, kl):
    for side in ("in", "out"):
        for _, v in symmetrized_basis(BlockShape(*kl), q, side):
            assert all(c >= 0 for c in v.values())


def test_solve_in_span():
    x, res = solve_in_span([{0: F(1), 1: F(1)}, {1: F(2)}], {0: F(3), 1: F(7)})
    assert x == [3, 2] and res == {}
    _, res = solve_in_span([{0: F(1)}], {1: F(1)})
    assert res == {1: 1}


def test_identity_reduces_to_identity():
    shape = BlockShape(2, 2)
    M = reduce_operator(TensorOperator.identity(shape.space()), shape, HALF)
    assert M.rows == [[F(int(i == j)) for j in range(9)] for i in range(9)]


def test_image_outside_span_raises():
    shape = BlockShape(2, 2)
    with pytest.raises(ReductionError):
        reduce_operator(generator(2, shape.space(), HALF), shape, HALF)


@pytest.mark.parametrize("q", [HALF, F(1, 3)])
def test_sigma_golden(q):
    for p, ref in ((1, golden.reference_sigma_221), (2, golden.reference_sigma_222)):
        M = reduce_operator(partial_braiding(S22, p, S22.space(), q), S22, q)
        assert M.rows == ref(q)
        assert closed_form_sigma_matrix(S22, p, q) == M


def test_sigma_221_entry():
    M = reduce_operator(partial_braiding(S22, 1, S22.space(), HALF), S22, HALF)
    assert M.entry((0, 1), (0, 1)) == F(19, 20)


@pytest.mark.parametrize("q,z", [(HALF, F(8)), (F(1, 3), F(81))])
def test_r22_golden(q, z):
    M = reduce_operator(fused_r_product(S22, z, S22.space(), q), S22, q, z)
    assert M.rows == golden.reference_r22(q, z)
    assert closed_form_matrix(S22, z, q) == M
    assert closed_form_entry(S22, z, q, (0, 0), (0, 0)) == 1


def test_j_factor_examples():
    assert j_factor(3, 0, 1, 0, HALF) == 1
    assert j_factor(3, 2, 1, 0, HALF) == (F(1, 4)) ** 4
    assert j_factor(2, 1, 1, 1, HALF) == F(3, 4)
    assert j_factor(2, 1, 1, 2, HALF) == 0
    assert j_factor(2, 1, 1, -1, HALF) == 0


def test_closed_form_11_example():
    M = closed_form_matrix(BlockShape(1, 1), 2, HALF)
    assert M.entry((0, 1), (0, 1)) == F(6, 7)
    assert M.entry((0, 1), (1, 0)) == F(1, 7)
    assert closed_form_entry(BlockShape(1, 1), 2, HALF, (0, 1), (1, 1)) == 0


@st.composite
def shape_point(draw, shapes=((1, 1), (1, 2), (2, 2), (2, 3), (1, 3))):
    k, l = draw(st.sampled_from(shapes))
    q = draw(unit_q())
    z = draw(rationals())
    t = q * q
    assume(all(z != t ** (1 + m) for m in range(-l, l + 1)))
    return BlockShape(k, l), q, z


@settings(max_examples=12)
@given(shape_point())
def test_closed_form_equals_reduction(pt):
    shape, q, z = pt
    sp = shape.space()
    cf = closed_form_matrix(shape, z, q)
    assert reduce_operator(fused_r_product(shape, z, sp, q), shape, q, z) == cf
    assert reduce_operator(fused_r_baxterised(shape, z, sp, q), shape, q, z) == cf
    assert all(s == 1 for s in cf.row_sums())
    assert cf.conservation_defect() is None


@settings(max_examples=4)
@given(shape_point(shapes=((3, 3), (2, 4))))
def test_closed_form_larger_shapes(pt):
    shape, q, z = pt
    assert reduce_operator(fused_r_product(shape, z, shape.space(), q), shape, q, z) == closed_form_matrix(shape, z, q)


def test_serialization():
    M = closed_form_matrix(BlockShape(1, 2), 3, HALF)
    d = json.loads(json.dumps(M.to_json()))
    assert d["ℓ"] == 2 and d["ordering"] == "lex-second-fastest" and d["orientation"] == "row=input"
    assert d["column_labels"] == [[0, 0], [0, 1], [1, 0], [1, 1], [2, 0], [2, 1]]
    assert [F(x) for x in d["rows"][0]] == M.rows[0]
    csv = M.to_csv_rows()
    assert csv[0][1:] == ["(0,0)", "(0,1)", "(1,0)", "(1,1)", "(2,0)", "(2,1)"]
    with pytest.raises(ValueError):
        FusedMatrix(BlockShape(1, 1), [[F(1)]])
