import itertools
import json

import numpy as np
import pytest

from conftest import ring
from oracles import tri2_product
from ringlab import homological as H
from ringlab.errors import (
    AssociativityViolation,
    NotIrreducible,
    NotTwoSidedIdeal,
    OrderIncompatibility,
    ParseError,
    UnitViolation,
)
from ringlab.parse import build_ring, load_raw_ring
from ringlab.rings import gf, make_ring, ring_isomorphism


def test_cyclic_ring_from_one_generator():
    R = make_ring([4], [[[1]]], [1])
    assert R.size == 4
    assert ring_isomorphism(R, build_ring("Z/4")) is not None


def test_zero_multiplication_has_no_unit():
    with pytest.raises(UnitViolation) as exc:
        make_ring([2], [[[0]]], [1])
    assert exc.value.indices


def test_nonassociative_table_rejected():
    # b0 = 1, b1*b1 = b2, b2*b1 = b0 but b1*b2 = 0 breaks associativity
    mult = np.zeros((3, 3, 3), dtype=int)
    for i in range(3):
        mult[0, i, i] = mult[i, 0, i] = 1
    mult[1, 1, 2] = 1
    mult[2, 1, 0] = 1
    with pytest.raises(AssociativityViolation):
        make_ring([2, 2, 2], mult, [1, 0, 0])


def test_order_incompatibility():
    # b1 of order 2 but b1 * b1 = b0 of order 4 is fine; b0*b1 = b0 is not
    mult = [[[1, 0], [1, 0]], [[0, 1], [0, 0]]]
    with pytest.raises(OrderIncompatibility):
        make_ring([4, 2], mult, [1, 0])


def test_triangular_table_matches_matrix_arithmetic():
    R = build_ring("Tri(2, GF(2))")
    assert R.size == 8
    for x, y in itertools.product(range(8), repeat=2):
        expected = tri2_product(R.elements[x], R.elements[y])
        assert tuple(R.elements[R.mul_table[x, y]]) == expected


def test_triangular_raw_table_validates():
    mult = [[[0, 0, 0]] * 3 for _ in range(3)]
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    mult = [[list(tri2_product(a, b)) for b in basis] for a in basis]
    R = make_ring([2, 2, 2], mult, [1, 0, 1], name="tri")
    assert R.size == 8
    assert ring_isomorphism(R, build_ring("Tri(2,GF(2))")) is not None


def test_jacobson_of_triangular_is_strict_upper_part():
    R = ring("Tri(2,GF(2))")
    J = H.context(R).jacobson
    assert J.size == 2
    (nz,) = [x for x in J.elems if x]
    assert tuple(R.elements[nz]) == (0, 1, 0)
    assert (R.mul_table[np.ix_(J.elems, J.elems)] == 0).all()


@pytest.mark.parametrize(
    "a, b, iso",
    [
        ("Z/6", "Z/2 x Z/3", True),
        ("Z/4", "GF(2)[x]/(x^2)", False),
        ("GF(4)", "Z/2 x Z/2", False),
        ("op(Tri(2,GF(2)))", "Tri(2,GF(2))", True),
        ("Z/12", "Z/4 x Z/3", True),
    ],
)
def test_ring_isomorphism(a, b, iso):
    assert (ring_isomorphism(build_ring(a), build_ring(b)) is not None) == iso


def test_opposite_is_an_involution():
    R = ring("Tri(2,GF(2))")
    assert R.op.op.same_tables(R)
    assert not R.op.same_tables(R)


@pytest.mark.parametrize(
    "spec, size",
    [
        ("Z/2", 2), ("GF(9)", 9), ("GF(8)", 8), ("Mat(2, GF(2))", 16), ("Tri(2, GF(3))", 27),
        ("GF(2)[x]/(x^3)", 8), ("Z/4 x Z/9", 36), ("(Z/2 x Z/3) x Z/5", 30), ("Z/4[x]/(x^2+1)", 16),
    ],
)
def test_spec_sizes(spec, size):
    assert build_ring(spec).size == size


@pytest.mark.parametrize("spec", ["Z/", "GF(6)", "Foo(2)", "Z/4 x", "Z/4 junk", "Mat(2 GF(2))", ""])
def test_parse_errors(spec):
    with pytest.raises(ParseError):
        build_ring(spec)


def test_not_irreducible():
    # x^2 + 1 = (x + 1)^2 over F_2
    with pytest.raises(NotIrreducible):
        gf(4, modulus=[1, 0, 1])
    assert gf(4, modulus=[1, 1, 1]).size == 4


def test_polynomial_quotient_need_not_be_a_field():
    R = build_ring("GF(2)[x]/(x^2+1)")
    assert ring_isomorphism(R, build_ring("GF(2)[x]/(x^2)")) is not None


def test_quotient_by_two_sided_ideal():
    Q = build_ring("quo(Z/8; [4])")
    assert ring_isomorphism(Q, build_ring("Z/4")) is not None
    with pytest.raises(NotTwoSidedIdeal):
        # the left ideal R e11 of Tri(2, GF(2)) is not two-sided
        build_ring("quo(Tri(2,GF(2)); [1,0,0])")


def test_raw_json_round_trip():
    R = ring("Tri(2,GF(2))")
    doc = json.dumps(R.to_json())
    S = load_raw_ring(doc)
    assert S.same_tables(R)
    assert build_ring(doc).same_tables(R)
