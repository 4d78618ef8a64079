"""Exact models of the canonical totally ordered sharp lattices and of
finitely generated ideals of the multiplicative monoid of nonnegative
integers.

Three symbolic families, all immutable and exact:

* ``ZMinusElement``: the ideal chain of a discrete valuation domain,
  written multiplicatively as exponents (0 is the top/identity,
  infinity is the bottom).
* ``R1Element``: the interval family [r, inf] / (r, inf] / {inf} with
  exact rational endpoints r >= 0, ordered by inclusion.  Rational
  endpoints keep the residual arithmetic exact; the family is closed
  under every implemented operation.
* ``FGIdeal``: a finitely generated ideal of the multiplicative monoid
  of nonnegative integers, stored as its divisibility-minimal generator
  set (which is unique); the empty set encodes the zero ideal.

The self-test entry points at the bottom back the CLI's exemplar
reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, inf

from .errors import ZeroDivisor

# -- the discrete valuation chain --------------------------------------

INFINITE = inf


@dataclass(frozen=True)
class ZMinusElement:
    """The element with the given exponent: 0 is the top and identity,
    larger exponents sit lower, ``INFINITE`` is the bottom."""

    exponent: int | float

    def __post_init__(self):
        if self.exponent == INFINITE:
            return
        if not isinstance(self.exponent, int) or self.exponent < 0:
            raise ValueError("exponent must be a nonnegative integer or INFINITE")

    def is_bottom(self) -> bool:
        return self.exponent == INFINITE


Z_TOP = ZMinusElement(0)
Z_BOTTOM = ZMinusElement(INFINITE)


def z_le(a: ZMinusElement, b: ZMinusElement) -> bool:
    """Order reverses exponents: m^j <= m^k iff j >= k."""
    return a.exponent >= b.exponent


def z_mult(a: ZMinusElement, b: ZMinusElement) -> ZMinusElement:
    if a.is_bottom() or b.is_bottom():
        return Z_BOTTOM
    return ZMinusElement(a.exponent + b.exponent)


def z_join(a: ZMinusElement, b: ZMinusElement) -> ZMinusElement:
    return ZMinusElement(min(a.exponent, b.exponent))


def z_meet(a: ZMinusElement, b: ZMinusElement) -> ZMinusElement:
    return ZMinusElement(max(a.exponent, b.exponent))


def z_residual(a: ZMinusElement, b: ZMinusElement) -> ZMinusElement:
    """Largest x with x*b <= a: exponent max(exp(a) - exp(b), 0);
    dividing by the bottom gives the top, and (bottom : finite) is
    the bottom."""
    if b.is_bottom():
        return Z_TOP
    if a.is_bottom():
        return Z_BOTTOM
    return ZMinusElement(max(a.exponent - b.exponent, 0))


# -- the real-valued interval chain ------------------------------------

_CLOSED = "closed"
_OPEN = "open"
_ZERO = "zero"


@dataclass(frozen=True)
class R1Element:
    """One of [r, inf] (closed), (r, inf] (open) or {inf} (zero), with
    an exact rational endpoint r >= 0.  closed(0) is the top and the
    multiplicative identity; zero is the bottom."""

    kind: str
    endpoint: Fraction | None

    def __post_init__(self):
        if self.kind == _ZERO:
            if self.endpoint is not None:
                raise ValueError("the bottom has no endpoint")
            return
        if self.kind not in (_CLOSED, _OPEN):
            raise ValueError(f"unknown kind {self.kind!r}")
        if not isinstance(self.endpoint, Fraction) or self.endpoint < 0:
            raise ValueError("endpoint must be a nonnegative Fraction")

    @classmethod
    def closed(cls, r) -> "R1Element":
        return cls(_CLOSED, Fraction(r))

    @classmethod
    def open(cls, r) -> "R1Element":
        return cls(_OPEN, Fraction(r))

    @classmethod
    def zero(cls) -> "R1Element":
        return cls(_ZERO, None)

    def is_zero(self) -> bool:
        return self.kind == _ZERO

    def __repr__(self) -> str:
        if self.kind == _ZERO:
            return "R1{inf}"
        left = "[" if self.kind == _CLOSED else "("
        return f"R1{left}{self.endpoint},inf]"


R1_TOP = R1Element.closed(0)
R1_ZERO = R1Element.zero()


def r1_le(a: R1Element, b: R1Element) -> bool:
    """Set inclusion; the family is totally ordered."""
    if a.is_zero():
        return True
    if b.is_zero():
        return False
    if b.kind == _CLOSED:
        return a.endpoint >= b.endpoint
    if a.kind == _OPEN:
        return a.endpoint >= b.endpoint
    return a.endpoint > b.endpoint  # closed inside open needs a strict step


def r1_mult(a: R1Element, b: R1Element) -> R1Element:
    """Interval addition: endpoints add, the sum is closed only when
    both factors are closed, and the bottom absorbs."""
    if a.is_zero() or b.is_zero():
        return R1_ZERO
    kind = _CLOSED if (a.kind == _CLOSED and b.kind == _CLOSED) else _OPEN
    return R1Element(kind, a.endpoint + b.endpoint)


def r1_join(a: R1Element, b: R1Element) -> R1Element:
    return a if r1_le(b, a) else b


def r1_meet(a: R1Element, b: R1Element) -> R1Element:
    return a if r1_le(a, b) else b


def r1_residual(a: R1Element, b: R1Element) -> R1Element:
    """Largest x with x*b <= a, case-split on the endpoint kinds.

    With d = endpoint(a) - endpoint(b): dividing an open interval by a
    closed one yields (d, inf] (for d >= 0); every other kind pair
    yields [d, inf], because multiplying by an open interval is open
    regardless of x, letting the closed endpoint through.  Whenever the
    divisor is contained in the dividend (d < 0 in the strict case,
    d <= 0 otherwise) the residual is the whole top.
    """
    if b.is_zero():
        return R1_TOP
    if a.is_zero():
        return R1_ZERO
    d = a.endpoint - b.endpoint
    if a.kind == _OPEN and b.kind == _CLOSED:
        if d < 0:
            return R1_TOP
        return R1Element(_OPEN, d)
    return R1Element(_CLOSED, max(d, Fraction(0)))


# -- finitely generated monoid ideals ----------------------------------


def _minimize(gens: set[int]) -> frozenset[int]:
    return frozenset(
        g
        for g in gens
        if not any(h != g and g % h == 0 for h in gens)
    )


@dataclass(frozen=True)
class FGIdeal:
    """A finitely generated ideal of the nonnegative integers under
    multiplication, by its unique divisibility-minimal generator set.
    A positive integer belongs to the ideal iff some generator divides
    it; the empty generator set is the zero ideal."""

    generators: frozenset[int]

    def __post_init__(self):
        for g in self.generators:
            if not isinstance(g, int) or g < 1:
                raise ValueError("generators must be positive integers")
        minimal = _minimize(set(self.generators))
        if minimal != self.generators:
            object.__setattr__(self, "generators", minimal)

    @classmethod
    def of(cls, *gens: int) -> "FGIdeal":
        return cls(frozenset(gens))

    def is_zero(self) -> bool:
        return not self.generators

    def __repr__(self) -> str:
        return f"FGIdeal<{', '.join(map(str, sorted(self.generators)))}>"


ZERO_IDEAL = FGIdeal.of()
UNIT_IDEAL = FGIdeal.of(1)


def ideal_member(a: FGIdeal, n: int) -> bool:
    if n < 1:
        raise ValueError("membership is defined for positive integers")
    return any(n % g == 0 for g in a.generators)


def ideal_le(a: FGIdeal, b: FGIdeal) -> bool:
    """Containment a <= b, decided on generators."""
    return all(ideal_member(b, g) for g in a.generators)


def ideal_equal(a: FGIdeal, b: FGIdeal) -> bool:
    return a.generators == b.generators


def ideal_product(a: FGIdeal, b: FGIdeal) -> FGIdeal:
    return FGIdeal(frozenset(g * h for g in a.generators for h in b.generators))


def ideal_join(a: FGIdeal, b: FGIdeal) -> FGIdeal:
    return FGIdeal(a.generators | b.generators)


def ideal_meet(a: FGIdeal, b: FGIdeal) -> FGIdeal:
    return FGIdeal(
        frozenset(
            g * h // gcd(g, h) for g in a.generators for h in b.generators
        )
    )


def ideal_residual(a: FGIdeal, b: FGIdeal) -> FGIdeal:
    """The ideal {x : x*b <= a}, computed exactly.

    x*h lands in a iff some generator g of a divides x*h, i.e.
    g/gcd(g, h) divides x; intersecting over the generators h of b and
    distributing the intersection over the generator unions gives one
    lcm per choice function from b's generators to a's.
    """
    if b.is_zero():
        raise ZeroDivisor("residual by the zero ideal")
    hs = sorted(b.generators)
    gens = set()
    for choice in product(sorted(a.generators), repeat=len(hs)):
        val = 1
        for g, h in zip(choice, hs):
            q = g // gcd(g, h)
            val = val * q // gcd(val, q)
        gens.add(val)
    return FGIdeal(frozenset(gens))


def residual_members_scan(a: FGIdeal, b: FGIdeal, bound: int) -> list[int]:
    """Brute-force oracle: all x in [1, bound] with x*h in a for every
    generator h of b.  Membership is exact (plain divisibility), so the
    bound only limits which x are inspected."""
    if b.is_zero():
        raise ZeroDivisor("residual by the zero ideal")
    hs = sorted(b.generators)
    return [
        x
        for x in range(1, bound + 1)
        if all(ideal_member(a, x * h) for h in hs)
    ]


# -- the pseudo-Dedekind-but-not-sharp counterexample -------------------


def counterexample_report(scan_bound: int = 200) -> dict:
    """Reproduce the full not-sharp computation for a = <4, 9> and
    b = <2, 3>: (a:b) = b^2, (a:(a:b)) = b, and their product b^3
    misses a (least witness 4), while residuals of principal ideals
    stay principal on a sampled family."""
    a = FGIdeal.of(4, 9)
    b = FGIdeal.of(2, 3)
    res_ab = ideal_residual(a, b)
    res_a_ab = ideal_residual(a, res_ab)
    b2 = ideal_product(b, b)
    b3 = ideal_product(b2, b)
    recomposed = ideal_product(res_a_ab, res_ab)
    witness = None
    for n in range(1, scan_bound + 1):
        if ideal_member(a, n) != ideal_member(recomposed, n):
            witness = n
            break
    principal_samples = []
    for x in range(2, 16):
        for other in (b, b2, FGIdeal.of(6, 10, 15), FGIdeal.of(x + 1)):
            r = ideal_residual(FGIdeal.of(x), other)
            principal_samples.append(len(r.generators) <= 1)
    return {
        "model": "nideal",
        "a": sorted(a.generators),
        "b": sorted(b.generators),
        "residual_ab": sorted(res_ab.generators),
        "residual_ab_is_b_squared": ideal_equal(res_ab, b2),
        "residual_a_ab": sorted(res_a_ab.generators),
        "residual_a_ab_is_b": ideal_equal(res_a_ab, b),
        "recomposition": sorted(recomposed.generators),
        "recomposition_is_b_cubed": ideal_equal(recomposed, b3),
        "sharp_identity_holds": ideal_equal(recomposed, a),
        "witness": witness,
        "pseudo_dedekind_samples": len(principal_samples),
        "pseudo_dedekind_all_principal": all(principal_samples),
    }


# -- self-tests (consumed by the CLI) -----------------------------------


def zminus_selftest(max_exponent: int = 100) -> dict:
    """Check the sharpness identity a == (a:(a:b)) (a:b) and residual
    soundness for every exponent pair in [0, max_exponent] + bottom."""
    carrier = [ZMinusElement(k) for k in range(max_exponent + 1)] + [Z_BOTTOM]
    failures = []
    for a in carrier:
        for b in carrier:
            r = z_residual(a, b)
            if not z_le(z_mult(r, b), a):
                failures.append(("residual_bound", a.exponent, b.exponent))
                continue
            if z_mult(z_residual(a, r), r) != a:
                failures.append(("sharp_identity", a.exponent, b.exponent))
    return {
        "model": "zminus",
        "trials": len(carrier) ** 2,
        "failures": len(failures),
        "witnesses": failures[:10],
    }


def _r1_random_element(rng: random.Random, allow_zero: bool = True) -> R1Element:
    if allow_zero and rng.randrange(40) == 0:
        return R1_ZERO
    endpoint = Fraction(rng.randrange(0, 2000), rng.randrange(1, 60))
    kind = _CLOSED if rng.randrange(2) == 0 else _OPEN
    return R1Element(kind, endpoint)


def r1_selftest(trials: int = 1000, seed: int = 0) -> dict:
    """Seeded random pairs cycling through all four kind combinations:
    sharpness identity, residual soundness and maximality step, order
    compatibility."""
    rng = random.Random(seed)
    kinds = [
        (_CLOSED, _CLOSED),
        (_OPEN, _OPEN),
        (_CLOSED, _OPEN),
        (_OPEN, _CLOSED),
    ]
    failures = []
    combos = {k: 0 for k in kinds}
    for t in range(trials):
        if t % 29 == 28:
            a = R1_ZERO if t % 2 == 0 else _r1_random_element(rng)
            b = _r1_random_element(rng)
        else:
            ka, kb = kinds[t % 4]
            combos[(ka, kb)] += 1
            a = R1Element(ka, Fraction(rng.randrange(0, 2000), rng.randrange(1, 60)))
            b = R1Element(kb, Fraction(rng.randrange(0, 2000), rng.randrange(1, 60)))
        r = r1_residual(a, b)
        if not r1_le(r1_mult(r, b), a):
            failures.append(("residual_bound", repr(a), repr(b)))
            continue
        if r1_mult(r1_residual(a, r), r) != a:
            failures.append(("sharp_identity", repr(a), repr(b)))
        if not a.is_zero() and not r.is_zero() and r != R1_TOP:
            # the next element up must overshoot: with x > r, x*b <= a fails
            if r.kind == _OPEN:
                bigger = R1Element(_CLOSED, r.endpoint)
                if r1_le(r1_mult(bigger, b), a):
                    failures.append(("residual_maximality", repr(a), repr(b)))
    return {
        "model": "r1",
        "trials": trials,
        "seed": seed,
        "kind_pairs": {f"{ka}/{kb}": c for (ka, kb), c in combos.items()},
        "failures": len(failures),
        "witnesses": failures[:10],
    }


def nideal_selftest(trials: int = 200, seed: int = 0, scan_bound: int = 300) -> dict:
    """The counterexample chain plus seeded random residuals checked
    against the membership-scan oracle."""
    report = counterexample_report()
    rng = random.Random(seed)
    failures = []
    for _ in range(trials):
        a = FGIdeal(frozenset(rng.randrange(1, 25) for _ in range(rng.randrange(1, 4))))
        b = FGIdeal(frozenset(rng.randrange(1, 25) for _ in range(rng.randrange(1, 3))))
        if b.is_zero():
            continue
        r = ideal_residual(a, b)
        expected = residual_members_scan(a, b, scan_bound)
        got = [x for x in range(1, scan_bound + 1) if ideal_member(r, x)]
        if expected != got:
            failures.append((sorted(a.generators), sorted(b.generators)))
    report.update(
        {
            "trials": trials,
            "seed": seed,
            "scan_bound": scan_bound,
            "oracle_failures": len(failures),
            "oracle_witnesses": failures[:10],
        }
    )
    expected_chain = (
        report["residual_ab_is_b_squared"]
        and report["residual_a_ab_is_b"]
        and report["recomposition_is_b_cubed"]
        and not report["sharp_identity_holds"]
        and report["witness"] == 4
        and report["pseudo_dedekind_all_principal"]
    )
    report["expected_outcome_confirmed"] = expected_chain and not failures
    return report
