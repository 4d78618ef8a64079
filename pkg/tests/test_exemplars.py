"""The exact exemplar models: valuation chains and monoid ideals."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sharplat.errors import ZeroDivisor
from sharplat.exemplars import (
    FGIdeal,
    INFINITE,
    R1Element,
    R1_TOP,
    R1_ZERO,
    ZMinusElement,
    Z_BOTTOM,
    Z_TOP,
    counterexample_report,
    ideal_equal,
    ideal_join,
    ideal_le,
    ideal_meet,
    ideal_member,
    ideal_product,
    ideal_residual,
    nideal_selftest,
    r1_le,
    r1_meet,
    r1_mult,
    r1_join,
    r1_residual,
    r1_selftest,
    residual_members_scan,
    z_join,
    z_le,
    z_meet,
    z_mult,
    z_residual,
    zminus_selftest,
)


# -- the discrete valuation chain ----------------------------------------


def _z_residual_oracle(a, b, scan_to=10):
    """Brute force: the largest element x (= least exponent) among
    exponents 0..scan_to and the bottom with x*b <= a."""
    candidates = [ZMinusElement(e) for e in range(scan_to + 1)] + [Z_BOTTOM]
    best = Z_BOTTOM
    for x in candidates:
        if z_le(z_mult(x, b), a) and z_le(best, x):
            best = x
    return best


def test_z_residual_example():
    assert z_residual(ZMinusElement(5), ZMinusElement(2)) == ZMinusElement(3)
    assert _z_residual_oracle(ZMinusElement(5), ZMinusElement(2)) == ZMinusElement(3)


def test_z_residual_by_top_and_bottom():
    for k in (0, 1, 7, 40):
        a = ZMinusElement(k)
        assert z_residual(a, Z_TOP) == a
        assert z_residual(a, Z_BOTTOM) == Z_TOP
        assert z_residual(Z_BOTTOM, a) == Z_BOTTOM
    assert z_residual(Z_BOTTOM, Z_BOTTOM) == Z_TOP


def test_z_sharp_identity_spot():
    a, b = ZMinusElement(7), ZMinusElement(3)
    r = z_residual(a, b)
    assert z_mult(z_residual(a, r), r) == a


def test_z_order_and_multiplication():
    assert z_le(Z_BOTTOM, ZMinusElement(5))
    assert z_le(ZMinusElement(5), ZMinusElement(2))
    assert z_mult(ZMinusElement(2), ZMinusElement(3)) == ZMinusElement(5)
    assert z_join(ZMinusElement(2), ZMinusElement(3)) == ZMinusElement(2)
    assert z_meet(ZMinusElement(2), ZMinusElement(3)) == ZMinusElement(3)
    assert z_mult(Z_BOTTOM, ZMinusElement(3)) == Z_BOTTOM


def test_z_selftest_all_pairs():
    report = zminus_selftest(max_exponent=100)
    assert report["failures"] == 0
    assert report["trials"] == 102 * 102


@settings(max_examples=150, deadline=None)
@given(
    a=st.integers(min_value=0, max_value=40),
    b=st.integers(min_value=0, max_value=40),
    c=st.integers(min_value=0, max_value=40),
)
def test_z_multiplication_order_preserving(a, b, c):
    ea, eb, ec = ZMinusElement(a), ZMinusElement(b), ZMinusElement(c)
    if z_le(ea, eb):
        assert z_le(z_mult(ea, ec), z_mult(eb, ec))
    assert z_le(ea, eb) or z_le(eb, ea)  # total order


@settings(max_examples=200, deadline=None)
@given(
    a=st.integers(min_value=0, max_value=60),
    b=st.integers(min_value=0, max_value=60),
)
def test_z_residual_matches_oracle(a, b):
    ea, eb = ZMinusElement(a), ZMinusElement(b)
    assert z_residual(ea, eb) == _z_residual_oracle(ea, eb, scan_to=130)


def test_z_element_validation():
    with pytest.raises(ValueError):
        ZMinusElement(-1)
    with pytest.raises(ValueError):
        ZMinusElement(1.5)
    assert ZMinusElement(INFINITE) == Z_BOTTOM


# -- the real interval chain ---------------------------------------------


def test_r1_spec_examples():
    assert r1_residual(R1Element.closed(5), R1Element.open(2)) == R1Element.closed(3)
    assert r1_residual(R1Element.open(5), R1Element.closed(2)) == R1Element.open(3)


RATIONAL_SAMPLES = [
    (Fraction(5), Fraction(2)),
    (Fraction(7, 3), Fraction(1, 4)),
    (Fraction(22, 7), Fraction(22, 7)),
    (Fraction(100, 9), Fraction(3, 2)),
]


@pytest.mark.parametrize("r,t", RATIONAL_SAMPLES)
def test_r1_table_rows(r, t):
    """The four rows of the residual table for a <= b (so r >= t), as
    symbolic kind patterns with exact endpoints.

    Rows are (a, b) -> (a:b), then (a:(a:b)):
      [r]|[t] -> [r-t], [t];  (r]|(t] -> [r-t], (t];
      [r]|(t] -> [r-t], [t];  (r]|[t] -> (r-t], and the second residual
    is [t]: the printed source table shows (t] there, but [t,inf]
    multiplied by the open interval (r-t,inf] already lands inside
    (r,inf], so the closed interval is the true maximum (see the
    maximality assertions below).
    """
    assert r >= t >= 0
    cl, op = R1Element.closed, R1Element.open
    # row 1
    assert r1_residual(cl(r), cl(t)) == cl(r - t)
    assert r1_residual(cl(r), cl(r - t)) == cl(t)
    # row 2
    assert r1_residual(op(r), op(t)) == cl(r - t)
    assert r1_residual(op(r), cl(r - t)) == op(t)
    # row 3
    assert r1_residual(cl(r), op(t)) == cl(r - t)
    assert r1_residual(cl(r), cl(r - t)) == cl(t)
    # row 4
    assert r1_residual(op(r), cl(t)) == op(r - t)
    second = r1_residual(op(r), op(r - t))
    assert second == cl(t)
    # the closed answer genuinely divides back into a and dominates the
    # open one, so (t] would not be maximal
    assert r1_le(r1_mult(second, op(r - t)), op(r))
    assert r1_le(op(t), second) and second != op(t)
    # every row satisfies the sharpness identity
    for a, b in [
        (cl(r), cl(t)),
        (op(r), op(t)),
        (cl(r), op(t)),
        (op(r), cl(t)),
    ]:
        ab = r1_residual(a, b)
        assert r1_mult(r1_residual(a, ab), ab) == a


def test_r1_clamps_to_top_when_divisor_is_inside():
    assert r1_residual(R1Element.closed(2), R1Element.closed(5)) == R1_TOP
    assert r1_residual(R1Element.closed(2), R1Element.open(2)) == R1_TOP
    assert r1_residual(R1Element.open(2), R1Element.closed(5)) == R1_TOP
    # equal endpoints, closed divisor of an open dividend: one open step
    assert r1_residual(R1Element.open(2), R1Element.closed(2)) == R1Element.open(0)


def test_r1_zero_cases():
    a = R1Element.closed(3)
    assert r1_residual(a, R1_ZERO) == R1_TOP
    assert r1_residual(R1_ZERO, a) == R1_ZERO
    assert r1_mult(R1_ZERO, a) == R1_ZERO
    assert r1_le(R1_ZERO, a) and not r1_le(a, R1_ZERO)


def test_r1_identity_element():
    for x in (R1Element.closed(7), R1Element.open(Fraction(1, 3)), R1_ZERO):
        assert r1_mult(R1_TOP, x) == x


def test_r1_selftest_seeded():
    report = r1_selftest(trials=1000, seed=42)
    assert report["failures"] == 0
    assert all(count > 0 for count in report["kind_pairs"].values())


def test_r1_element_validation():
    with pytest.raises(ValueError):
        R1Element.closed(-1)
    with pytest.raises(ValueError):
        R1Element("closed", None)
    with pytest.raises(ValueError):
        R1Element("interval", Fraction(1))


_fractions = st.fractions(min_value=0, max_value=50)
_r1_elements = st.one_of(
    st.just(R1_ZERO),
    _fractions.map(R1Element.closed),
    _fractions.map(R1Element.open),
)


@settings(max_examples=300, deadline=None)
@given(a=_r1_elements, b=_r1_elements)
def test_r1_residual_laws(a, b):
    r = r1_residual(a, b)
    assert r1_le(r1_mult(r, b), a)  # r*b <= a
    ab = r1_residual(a, r)
    assert r1_mult(ab, r) == a  # the sharpness identity
    # total order
    assert r1_le(a, b) or r1_le(b, a)
    # multiplication is order-preserving
    assert r1_le(r1_mult(a, r1_meet(a, b)), r1_mult(a, r1_join(a, b)))


@settings(max_examples=200, deadline=None)
@given(a=_r1_elements, b=_r1_elements, c=_r1_elements)
def test_r1_residual_maximality(a, b, c):
    # no third element strictly above (a:b) still divides into a
    r = r1_residual(a, b)
    if r1_le(c, r):
        assert r1_le(r1_mult(c, b), a)
    elif not r1_le(r1_mult(c, b), a):
        pass  # consistent: c does not qualify
    else:
        assert r1_le(c, r), f"{c} qualifies but exceeds the residual"


# -- monoid ideals --------------------------------------------------------


def _members_to(a, bound):
    return [n for n in range(1, bound + 1) if ideal_member(a, n)]


def test_minimal_generating_sets():
    assert FGIdeal.of(2, 4, 6).generators == frozenset({2})
    assert FGIdeal.of(4, 6, 9, 36).generators == frozenset({4, 6, 9})
    assert FGIdeal.of().is_zero()
    with pytest.raises(ValueError):
        FGIdeal.of(0)
    with pytest.raises(ValueError):
        FGIdeal.of(-3)


def test_ideal_product_example():
    b = FGIdeal.of(2, 3)
    b2 = ideal_product(b, b)
    assert b2.generators == frozenset({4, 6, 9})
    # membership oracle up to 100
    expected = [
        n
        for n in range(1, 101)
        if n % 4 == 0 or n % 6 == 0 or n % 9 == 0
    ]
    assert _members_to(b2, 100) == expected


def test_ideal_join_meet_examples():
    a = FGIdeal.of(4, 9)
    assert ideal_join(a, FGIdeal.of(1)).generators == frozenset({1})
    meet = ideal_meet(FGIdeal.of(2), FGIdeal.of(3))
    assert meet.generators == frozenset({6})
    assert _members_to(meet, 60) == [n for n in range(1, 61) if n % 6 == 0]


def test_ideal_residual_examples():
    a, b = FGIdeal.of(4, 9), FGIdeal.of(2, 3)
    assert ideal_residual(a, b).generators == frozenset({4, 6, 9})
    assert ideal_residual(a, FGIdeal.of(4, 6, 9)).generators == frozenset({2, 3})
    assert ideal_residual(a, FGIdeal.of(1)) == a
    with pytest.raises(ZeroDivisor):
        ideal_residual(a, FGIdeal.of())


def test_zero_ideal_arithmetic():
    zero, b = FGIdeal.of(), FGIdeal.of(2, 3)
    assert ideal_product(zero, b).is_zero()
    assert ideal_join(zero, b) == b
    assert ideal_meet(zero, b).is_zero()
    assert ideal_residual(zero, b).is_zero()
    assert ideal_le(zero, b) and not ideal_le(b, zero)


def test_counterexample_report():
    report = counterexample_report()
    assert report["residual_ab"] == [4, 6, 9]
    assert report["residual_ab_is_b_squared"]
    assert report["residual_a_ab"] == [2, 3]
    assert report["residual_a_ab_is_b"]
    assert report["recomposition"] == [8, 12, 18, 27]
    assert not report["sharp_identity_holds"]
    assert report["witness"] == 4  # 4 is in <4,9> but not in b^3
    assert report["pseudo_dedekind_all_principal"]


def test_nideal_selftest_confirms_expected_outcome():
    report = nideal_selftest(trials=100, seed=7)
    assert report["expected_outcome_confirmed"]
    assert report["oracle_failures"] == 0


_small_ideals = st.sets(
    st.integers(min_value=1, max_value=24), min_size=1, max_size=3
).map(lambda gens: FGIdeal(frozenset(gens)))


@settings(max_examples=150, deadline=None)
@given(a=_small_ideals, b=_small_ideals)
def test_ideal_residual_matches_membership_scan(a, b):
    r = ideal_residual(a, b)
    bound = 400
    assert _members_to(r, bound) == residual_members_scan(a, b, bound)


@settings(max_examples=150, deadline=None)
@given(a=_small_ideals, a_extra=_small_ideals, b=_small_ideals)
def test_ideal_residual_monotone(a, a_extra, b):
    bigger = ideal_join(a, a_extra)  # a <= bigger
    assert ideal_le(ideal_residual(a, b), ideal_residual(bigger, b))


@settings(max_examples=150, deadline=None)
@given(a=_small_ideals, b=_small_ideals)
def test_ideal_minimality_invariant(a, b):
    prod = ideal_product(a, b)
    gens = prod.generators
    assert all(
        not any(h != g and g % h == 0 for h in gens) for g in gens
    )
    # equality is mutual divisibility coverage
    assert ideal_equal(prod, FGIdeal(frozenset(g for g in gens)))
    # a product sits inside both factors
    assert ideal_le(prod, a) and ideal_le(prod, b)
