"""Localization at a prime element and factor (quotient) lattices.

Both constructions materialize their carrier as a sub-carrier of the
input lattice in canonical id order, rebuild the induced structure, and
re-run full validation from scratch: a validation failure here would
mean a bug in the construction, so it surfaces as
InternalValidationFailure instead of an ordinary input error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ElementId, FiniteMultLattice, FinitePoset
from .errors import (
    DegenerateQuotient,
    InternalValidationFailure,
    NotPrime,
    SharplatError,
)
from .predicates import prime_witness


@dataclass(frozen=True)
class LocalizationResult:
    """The localized lattice, the projection x -> x_p (as new ids), and
    the image carrier (new id -> original id)."""

    lattice: FiniteMultLattice
    projection: tuple[ElementId, ...]
    image: tuple[ElementId, ...]


@dataclass(frozen=True)
class QuotientResult:
    """The factor lattice on [a, top], the projection x -> x v a (as
    new ids), and the carrier (new id -> original id)."""

    lattice: FiniteMultLattice
    projection: tuple[ElementId, ...]
    image: tuple[ElementId, ...]


def _require_prime(L: FiniteMultLattice, p: ElementId) -> None:
    w = prime_witness(L, p)
    if w is not None:
        raise NotPrime(f"element {L.names[p]!r} (id {p}) is not prime", witness=w)


def _localize_element(L: FiniteMultLattice, p: ElementId, x: ElementId) -> ElementId:
    out = 0
    for a in L.elements():
        if any(
            not L.le(s, p) and L.le(L.mul(a, s), x) for s in L.elements()
        ):
            out = L.join(out, a)
    return out


def localize_element(
    L: FiniteMultLattice, p: ElementId, x: ElementId
) -> ElementId:
    """x_p, the join of all a with a*s <= x for some s not below p.

    Every element of a finite lattice is compact, so the join may range
    over the whole carrier.  Only localization at primes is defined.
    """
    _require_prime(L, p)
    return _localize_element(L, p, x)


def localize(L: FiniteMultLattice, p: ElementId) -> LocalizationResult:
    """The image lattice L_p = {x_p} with multiplication (x, y) -> (xy)_p.

    The carrier keeps the original element names and canonical order;
    the result is validated from scratch.
    """
    _require_prime(L, p)
    loc = [_localize_element(L, p, x) for x in L.elements()]
    image = tuple(sorted(set(loc)))
    index = {old: new for new, old in enumerate(image)}
    names = [L.names[i] for i in image]
    leq = [[L.le(i, j) for j in image] for i in image]
    mult = [[index[loc[L.mul(i, j)]] for j in image] for i in image]
    try:
        lattice = FiniteMultLattice(
            FinitePoset(names, leq),
            mult,
            provenance={"localized_at": L.names[p]},
        )
    except SharplatError as exc:
        raise InternalValidationFailure(
            f"localized structure failed validation: {exc}", witness=exc.witness
        ) from exc
    projection = tuple(index[loc[x]] for x in L.elements())
    return LocalizationResult(lattice, projection, image)


def quotient(L: FiniteMultLattice, a: ElementId) -> QuotientResult:
    """The factor lattice on the interval [a, top] with multiplication
    x*y = (xy) v a; bottom is a, identity stays top.

    Rejects a = top: that quotient would collapse to one point.
    """
    if a == L.top:
        raise DegenerateQuotient("quotient by top is a one-point lattice")
    image = tuple(x for x in L.elements() if L.le(a, x))
    index = {old: new for new, old in enumerate(image)}
    names = [L.names[i] for i in image]
    leq = [[L.le(i, j) for j in image] for i in image]
    mult = [[index[L.join(L.mul(i, j), a)] for j in image] for i in image]
    try:
        lattice = FiniteMultLattice(
            FinitePoset(names, leq),
            mult,
            provenance={"quotient_by": L.names[a]},
        )
    except SharplatError as exc:
        raise InternalValidationFailure(
            f"factor structure failed validation: {exc}", witness=exc.witness
        ) from exc
    projection = tuple(index[L.join(x, a)] for x in L.elements())
    return QuotientResult(lattice, projection, image)
