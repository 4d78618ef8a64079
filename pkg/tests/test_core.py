"""Core lattice validation, residuation and serialization."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sharplat import enumeration, gallery, parse_lattice
from sharplat.core import FiniteMultLattice, FinitePoset
from sharplat.errors import (
    BadSchema,
    NoIdentity,
    NotALattice,
    NotAPartialOrder,
    NotAssociative,
    NotCommutative,
    NotDistributive,
)

CHAIN3_LEQ = [[1, 1, 1], [0, 1, 1], [0, 0, 1]]


def all_gallery():
    return [build() for build in gallery.BUILTINS.values()]


# -- parsing and validation -------------------------------------------


def test_nonsharp5_document_is_valid(nonsharp5):
    doc = nonsharp5.serialize()
    assert parse_lattice(doc) == nonsharp5


def test_chain2_forced_table(chain2):
    assert chain2.mult == ((0, 0), (0, 1))


def test_parse_canonicalizes_scrambled_order(nonsharp5):
    # same lattice with elements listed top-first
    doc = nonsharp5.serialize()
    perm = [4, 3, 2, 1, 0]
    scrambled = {
        "elements": [doc["elements"][p] for p in perm],
        "leq": [[doc["leq"][p][q] for q in perm] for p in perm],
        "mult": [[perm.index(doc["mult"][p][q]) for q in perm] for p in perm],
    }
    assert parse_lattice(scrambled) == nonsharp5


def test_round_trip_all_gallery():
    for L in all_gallery():
        assert parse_lattice(json.loads(L.to_json())) == L


@pytest.mark.parametrize(
    "doc,message",
    [
        ({}, "elements"),
        ({"elements": ["0", "1"], "leq": [[1, 1], [0, 1]]}, "mult"),
        (
            {"elements": ["0", "0"], "leq": [[1, 1], [0, 1]], "mult": [[0, 0], [0, 1]]},
            "distinct",
        ),
        (
            {"elements": ["0", "1"], "leq": [[1, 1]], "mult": [[0, 0], [0, 1]]},
            "matrix",
        ),
        (
            {"elements": ["0", "1"], "leq": [[1, 1], [0, 1]], "mult": [[0, 9], [0, 1]]},
            "indices",
        ),
    ],
)
def test_bad_schema(doc, message):
    with pytest.raises(BadSchema) as err:
        parse_lattice(doc)
    assert message in str(err.value)


def test_not_a_partial_order_non_transitive():
    doc = {
        "elements": ["0", "a", "1"],
        "leq": [[1, 1, 0], [0, 1, 1], [0, 0, 1]],  # 0<=a, a<=1 but not 0<=1
        "mult": [[0, 0, 0], [0, 0, 1], [0, 1, 2]],
    }
    with pytest.raises(NotAPartialOrder) as err:
        parse_lattice(doc)
    assert err.value.witness == (0, 1, 2)


def test_not_a_lattice_no_upper_bound():
    doc = {
        "elements": ["0", "p", "q"],
        "leq": [[1, 1, 1], [0, 1, 0], [0, 0, 1]],
        "mult": [[0, 0, 0], [0, 1, 0], [0, 0, 2]],
    }
    with pytest.raises(NotALattice) as err:
        parse_lattice(doc)
    assert err.value.witness is not None


def test_nonsharp5_with_ac_changed_to_b_is_rejected(nonsharp5):
    doc = nonsharp5.serialize()
    doc["mult"][1][3] = 2
    doc["mult"][3][1] = 2
    with pytest.raises((NotDistributive, NotAssociative)) as err:
        parse_lattice(doc)
    assert err.value.witness is not None  # a witness triple is reported


def test_not_commutative():
    mult = [[0, 0, 0], [0, 1, 0], [0, 1, 2]]  # m*1 != 1*m
    with pytest.raises(NotCommutative) as err:
        FiniteMultLattice(FinitePoset(["0", "m", "1"], CHAIN3_LEQ), mult)
    assert err.value.witness == (1, 2)


def test_no_identity():
    mult = [[0, 0, 0], [0, 1, 0], [0, 0, 2]]  # symmetric but top*m == 0
    with pytest.raises(NoIdentity) as err:
        FiniteMultLattice(FinitePoset(["0", "m", "1"], CHAIN3_LEQ), mult)
    assert err.value.witness == (1,)


def test_not_associative():
    # 4-chain with b*b = a, a*b = a, a*a = 0: (a*b)*b = a*b = a while
    # a*(b*b) = a*a = 0, and the chain shape keeps binary
    # distributivity (= monotonicity) intact so associativity trips.
    leq = [[i <= j for j in range(4)] for i in range(4)]
    mult = [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 1, 2], [0, 1, 2, 3]]
    with pytest.raises(NotAssociative) as err:
        FiniteMultLattice(FinitePoset(["0", "a", "b", "1"], leq), mult)
    assert err.value.witness is not None


def test_empty_join_law_checked():
    mult = [[0, 1, 0], [1, 1, 1], [0, 1, 2]]  # 0*m = m
    with pytest.raises(NotDistributive):
        FiniteMultLattice(FinitePoset(["0", "m", "1"], CHAIN3_LEQ), mult)


# -- joins, meets, residuals, divisibility ----------------------------


def test_join_meet_examples(nonsharp5):
    a, b, c = (nonsharp5.id_of(x) for x in "abc")
    assert nonsharp5.join_of({a, b}) == b
    assert nonsharp5.join_of(set()) == 0
    assert nonsharp5.meet_of(set()) == nonsharp5.top
    assert nonsharp5.meet_of({c, b}) == b


def test_residual_examples(nonsharp5, chain3_nil):
    a, b = nonsharp5.id_of("a"), nonsharp5.id_of("b")
    assert nonsharp5.residual(a, b) == b
    for L in all_gallery():
        for y in L.elements():
            assert L.residual(y, L.top) == y
    m = chain3_nil.id_of("m")
    # brute-force: {x : x*m <= 0} = {0, m}, join = m
    assert chain3_nil.residual(0, m) == m


def test_divides_examples(nonsharp5):
    a, b, c = (nonsharp5.id_of(x) for x in "abc")
    assert nonsharp5.divides(b, a) is None
    assert nonsharp5.divides(c, a) == a
    for L in all_gallery():
        for x in L.elements():
            assert L.divides(L.top, x) == x


def test_divides_returns_least_witness(chain3_idem):
    m = chain3_idem.id_of("m")
    # m*m == m and m*1 == m; the least witness is m itself
    assert chain3_idem.divides(m, m) == m


def test_residual_is_maximum_full_scan():
    for L in all_gallery():
        for y in L.elements():
            for x in L.elements():
                r = L.residual(y, x)
                assert L.le(L.mul(r, x), y)
                for a in L.elements():
                    if L.le(L.mul(a, x), y):
                        assert L.le(a, r)


def test_residual_absorbs_join_with_numerator():
    for L in all_gallery():
        for y in L.elements():
            for x in L.elements():
                assert L.residual(y, x) == L.residual(y, L.join(x, y))


def test_product_below_meet_and_monotone():
    for L in all_gallery():
        for x in L.elements():
            for y in L.elements():
                assert L.le(L.mul(x, y), L.meet(x, y))
                for z in L.elements():
                    if L.le(y, z):
                        assert L.le(L.mul(x, y), L.mul(x, z))


def test_canonical_ids():
    for L in all_gallery():
        assert L.bottom == 0
        assert L.top == L.size - 1
        assert all(L.le(0, x) and L.le(x, L.top) for x in L.elements())


# -- property-based checks over enumerated structures ------------------

_CHAIN5 = list(enumeration.enumerate_structures(enumeration.chain_poset(5)))


@settings(max_examples=60, deadline=None)
@given(
    L=st.sampled_from(_CHAIN5),
    y=st.integers(min_value=0, max_value=4),
    x=st.integers(min_value=0, max_value=4),
)
def test_residual_law_on_census_structures(L, y, x):
    r = L.residual(y, x)
    assert L.le(L.mul(r, x), y)
    assert all(L.le(a, r) for a in L.elements() if L.le(L.mul(a, x), y))


@settings(max_examples=60, deadline=None)
@given(
    L=st.sampled_from(_CHAIN5),
    x=st.integers(min_value=0, max_value=4),
    y=st.integers(min_value=0, max_value=4),
    z=st.integers(min_value=0, max_value=4),
)
def test_axioms_hold_on_enumerated_structures(L, x, y, z):
    assert L.mul(x, y) == L.mul(y, x)
    assert L.mul(L.mul(x, y), z) == L.mul(x, L.mul(y, z))
    assert L.mul(x, L.join(y, z)) == L.join(L.mul(x, y), L.mul(x, z))
    assert L.mul(L.top, x) == x
