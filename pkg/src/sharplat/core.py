"""Finite multiplicative lattices: order, joins/meets, multiplication,
residuation and divisibility.

A multiplicative lattice here is a finite complete lattice carrying a
commutative monoid multiplication whose identity is the top element and
which distributes over joins.  Finiteness makes every element compact,
so the completeness/compactness side conditions of the general theory
hold automatically and are not re-checked.

Element ids are plain ints indexing the canonical carrier order: bottom
is always id 0, top is always id ``size - 1``, and the order is a
topological (linear) extension of ``leq``.  Ids are only meaningful
relative to the lattice that issued them.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator

from .errors import (
    BadSchema,
    InternalValidationFailure,
    NoIdentity,
    NotALattice,
    NotAPartialOrder,
    NotAssociative,
    NotCommutative,
    NotDistributive,
)

ElementId = int

# serializer keys carried through for derived structures
_PROVENANCE_KEYS = ("localized_at", "quotient_by")


def _check_partial_order(leq: tuple[tuple[bool, ...], ...]) -> None:
    n = len(leq)
    for i in range(n):
        if not leq[i][i]:
            raise NotAPartialOrder(f"leq not reflexive at {i}", witness=(i,))
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise NotAPartialOrder(
                    f"leq not antisymmetric at ({i}, {j})", witness=(i, j)
                )
    for i in range(n):
        for j in range(n):
            if leq[i][j]:
                for k in range(n):
                    if leq[j][k] and not leq[i][k]:
                        raise NotAPartialOrder(
                            f"leq not transitive at ({i}, {j}, {k})",
                            witness=(i, j, k),
                        )


def _lub_table(leq) -> tuple[tuple[int, ...], ...]:
    """All-pairs least upper bounds; NotALattice on a pair without one."""
    n = len(leq)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            uppers = [k for k in range(n) if leq[i][k] and leq[j][k]]
            if not uppers:
                raise NotALattice(f"({i}, {j}) has no upper bound", witness=(i, j))
            least = [u for u in uppers if all(leq[u][v] for v in uppers)]
            if not least:
                raise NotALattice(
                    f"({i}, {j}) has no least upper bound", witness=(i, j)
                )
            row.append(least[0])
        rows.append(tuple(row))
    return tuple(rows)


def _glb_table(leq) -> tuple[tuple[int, ...], ...]:
    n = len(leq)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            lowers = [k for k in range(n) if leq[k][i] and leq[k][j]]
            if not lowers:
                raise NotALattice(f"({i}, {j}) has no lower bound", witness=(i, j))
            greatest = [u for u in lowers if all(leq[v][u] for v in lowers)]
            if not greatest:
                raise NotALattice(
                    f"({i}, {j}) has no greatest lower bound", witness=(i, j)
                )
            row.append(greatest[0])
        rows.append(tuple(row))
    return tuple(rows)


def canonical_permutation(leq) -> list[int]:
    """Stable topological order of a validated partial order: bottom
    first, top last, ties broken by input position.

    Returns ``order`` such that ``order[new_id] = old_id``.
    """
    n = len(leq)
    placed: list[int] = []
    remaining = list(range(n))
    while remaining:
        for i in remaining:
            if all(j in placed or not leq[j][i] for j in range(n) if j != i):
                placed.append(i)
                remaining.remove(i)
                break
        else:
            raise NotAPartialOrder("cycle while ordering", witness=tuple(remaining))
    return placed


class FinitePoset:
    """A finite lattice-ordered carrier in canonical order.

    ``names`` are distinct labels; ``leq`` is the full order relation.
    The constructor validates the partial-order and lattice axioms and
    requires canonical element order (bottom id 0, top id size-1,
    topological); the parsing helpers canonicalize raw input first.
    """

    __slots__ = ("size", "names", "leq", "joins", "meets")

    def __init__(self, names: Iterable[str], leq) -> None:
        names = tuple(str(x) for x in names)
        n = len(names)
        if n == 0:
            raise NotALattice("empty carrier has no bottom/top")
        if len(set(names)) != n:
            raise BadSchema("element names are not distinct")
        leq = tuple(tuple(bool(v) for v in row) for row in leq)
        if len(leq) != n or any(len(row) != n for row in leq):
            raise BadSchema(f"leq must be {n}x{n}")
        _check_partial_order(leq)
        self.size = n
        self.names = names
        self.leq = leq
        self.joins = _lub_table(leq)
        self.meets = _glb_table(leq)
        if any(not leq[0][i] for i in range(n)):
            raise InternalValidationFailure("carrier not in canonical order: bottom")
        if any(not leq[i][n - 1] for i in range(n)):
            raise InternalValidationFailure("carrier not in canonical order: top")
        for i in range(n):
            for j in range(i):
                if leq[i][j] and i != j:
                    raise InternalValidationFailure(
                        "carrier not in canonical order: not topological"
                    )

    @classmethod
    def from_raw(cls, names, leq) -> tuple["FinitePoset", list[int]]:
        """Canonicalize arbitrary element order, then build.

        Returns the poset and the permutation ``order[new_id] = old_id``
        so companion tables can be reordered the same way.
        """
        names = tuple(str(x) for x in names)
        leq = tuple(tuple(bool(v) for v in row) for row in leq)
        if len(leq) != len(names) or any(len(row) != len(names) for row in leq):
            raise BadSchema(f"leq must be {len(names)}x{len(names)}")
        _check_partial_order(leq)
        order = canonical_permutation(leq)
        new_names = [names[o] for o in order]
        new_leq = [[leq[a][b] for b in order] for a in order]
        return cls(new_names, new_leq), order

    # -- order queries ------------------------------------------------

    @property
    def bottom(self) -> ElementId:
        return 0

    @property
    def top(self) -> ElementId:
        return self.size - 1

    def le(self, x: ElementId, y: ElementId) -> bool:
        return self.leq[x][y]

    def lt(self, x: ElementId, y: ElementId) -> bool:
        return x != y and self.leq[x][y]

    def join(self, x: ElementId, y: ElementId) -> ElementId:
        return self.joins[x][y]

    def meet(self, x: ElementId, y: ElementId) -> ElementId:
        return self.meets[x][y]

    def join_of(self, ids: Iterable[ElementId]) -> ElementId:
        """Join of a set of elements; the empty join is bottom."""
        out = 0
        for x in ids:
            out = self.joins[out][x]
        return out

    def meet_of(self, ids: Iterable[ElementId]) -> ElementId:
        """Meet of a set of elements; the empty meet is top."""
        out = self.size - 1
        for x in ids:
            out = self.meets[out][x]
        return out

    def is_chain(self) -> bool:
        return all(
            self.leq[i][j] or self.leq[j][i]
            for i in range(self.size)
            for j in range(i)
        )

    def automorphisms(self) -> list[tuple[int, ...]]:
        """All order automorphisms, found by backtracking on ids."""
        n = self.size
        leq = self.leq
        perm: list[int] = []
        used = [False] * n
        found: list[tuple[int, ...]] = []

        def extend(i: int) -> None:
            if i == n:
                found.append(tuple(perm))
                return
            for img in range(n):
                if used[img]:
                    continue
                ok = all(
                    leq[j][i] == leq[perm[j]][img] and leq[i][j] == leq[img][perm[j]]
                    for j in range(i)
                )
                if ok:
                    perm.append(img)
                    used[img] = True
                    extend(i + 1)
                    perm.pop()
                    used[img] = False

        extend(0)
        return found

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FinitePoset)
            and self.names == other.names
            and self.leq == other.leq
        )

    def __hash__(self) -> int:
        return hash((self.names, self.leq))

    def __repr__(self) -> str:
        return f"FinitePoset({list(self.names)!r})"


class FiniteMultLattice:
    """A finite multiplicative lattice with precomputed derived tables.

    Validation checks, in order: commutativity, identity (top acts as
    1), multiplication by bottom (the empty-join distributivity law
    ``a*0 = 0``), associativity, binary distributivity over joins, and
    the derived bound ``xy <= x meet y`` as an internal cross-check.
    In a finite lattice binary distributivity plus the bottom law is
    equivalent to distributivity over arbitrary joins.

    Instances are immutable after construction; every operation is a
    pure read, so validated lattices are safe to share freely.
    """

    __slots__ = ("poset", "mult", "residuals", "provenance")

    def __init__(self, poset: FinitePoset, mult, provenance: dict | None = None):
        n = poset.size
        mult = tuple(tuple(int(v) for v in row) for row in mult)
        if len(mult) != n or any(len(row) != n for row in mult):
            raise BadSchema(f"mult must be {n}x{n}")
        if any(v < 0 or v >= n for row in mult for v in row):
            raise BadSchema("mult entries out of range")
        self.poset = poset
        self.mult = mult
        self.provenance = dict(provenance) if provenance else {}
        self._validate()
        self.residuals = self._residual_table()

    def _validate(self) -> None:
        n = self.poset.size
        mult = self.mult
        joins = self.poset.joins
        meets = self.poset.meets
        top = n - 1
        for x in range(n):
            for y in range(x + 1, n):
                if mult[x][y] != mult[y][x]:
                    raise NotCommutative(
                        f"{x}*{y} != {y}*{x}", witness=(x, y)
                    )
        for x in range(n):
            if mult[top][x] != x:
                raise NoIdentity(f"top*{x} != {x}", witness=(x,))
        for x in range(n):
            if mult[x][0] != 0:
                raise NotDistributive(
                    f"{x}*bottom != bottom (empty join law)", witness=(x, 0)
                )
        for x in range(n):
            for y in range(n):
                xy = mult[x][y]
                for z in range(n):
                    if mult[xy][z] != mult[x][mult[y][z]]:
                        raise NotAssociative(
                            f"({x}*{y})*{z} != {x}*({y}*{z})", witness=(x, y, z)
                        )
        for a in range(n):
            for b in range(n):
                for c in range(b + 1, n):
                    if mult[a][joins[b][c]] != joins[mult[a][b]][mult[a][c]]:
                        raise NotDistributive(
                            f"{a}*({b} v {c}) != {a}*{b} v {a}*{c}",
                            witness=(a, b, c),
                        )
        for x in range(n):
            for y in range(n):
                if not self.poset.leq[mult[x][y]][meets[x][y]]:
                    raise InternalValidationFailure(
                        f"derived bound xy <= x^y fails at ({x}, {y})",
                        witness=(x, y),
                    )

    def _residual_table(self):
        n = self.poset.size
        leq = self.poset.leq
        joins = self.poset.joins
        mult = self.mult
        rows = []
        for y in range(n):
            row = []
            for x in range(n):
                r = 0
                for a in range(n):
                    if leq[mult[a][x]][y]:
                        r = joins[r][a]
                row.append(r)
            rows.append(tuple(row))
        return tuple(rows)

    # -- carrier ------------------------------------------------------

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def names(self) -> tuple[str, ...]:
        return self.poset.names

    @property
    def bottom(self) -> ElementId:
        return 0

    @property
    def top(self) -> ElementId:
        return self.poset.size - 1

    def id_of(self, name: str) -> ElementId:
        return self.poset.names.index(name)

    # -- operations ---------------------------------------------------

    def le(self, x: ElementId, y: ElementId) -> bool:
        return self.poset.leq[x][y]

    def lt(self, x: ElementId, y: ElementId) -> bool:
        return x != y and self.poset.leq[x][y]

    def join(self, x: ElementId, y: ElementId) -> ElementId:
        return self.poset.joins[x][y]

    def meet(self, x: ElementId, y: ElementId) -> ElementId:
        return self.poset.meets[x][y]

    def join_of(self, ids: Iterable[ElementId]) -> ElementId:
        return self.poset.join_of(ids)

    def meet_of(self, ids: Iterable[ElementId]) -> ElementId:
        return self.poset.meet_of(ids)

    def mul(self, x: ElementId, y: ElementId) -> ElementId:
        return self.mult[x][y]

    def residual(self, y: ElementId, x: ElementId) -> ElementId:
        """The largest element a with ``a*x <= y`` (read "(y : x)")."""
        return self.residuals[y][x]

    def divides(self, a: ElementId, b: ElementId) -> ElementId | None:
        """Least witness c with ``a*c == b``, or None if a never reaches b."""
        row = self.mult[a]
        for c in range(self.poset.size):
            if row[c] == b:
                return c
        return None

    def elements(self) -> Iterator[ElementId]:
        return iter(range(self.poset.size))

    def flat_mult(self) -> tuple[int, ...]:
        """Row-major multiplication table, the canonical sort key for
        structures sharing a poset."""
        return tuple(v for row in self.mult for v in row)

    # -- serialization ------------------------------------------------

    def serialize(self) -> dict:
        """Canonical-order document in the interchange schema."""
        doc: dict = {
            "elements": list(self.poset.names),
            "leq": [[1 if v else 0 for v in row] for row in self.poset.leq],
            "mult": [list(row) for row in self.mult],
        }
        for key in _PROVENANCE_KEYS:
            if key in self.provenance:
                doc[key] = self.provenance[key]
        return doc

    def to_json(self, pretty: bool = False) -> str:
        if pretty:
            return json.dumps(self.serialize(), indent=2)
        return json.dumps(self.serialize(), separators=(",", ":"))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteMultLattice)
            and self.poset == other.poset
            and self.mult == other.mult
        )

    def __hash__(self) -> int:
        return hash((self.poset, self.mult))

    def __repr__(self) -> str:
        return f"FiniteMultLattice({list(self.poset.names)!r})"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BadSchema(message)


def parse_poset(document: dict | str) -> FinitePoset:
    """Read and canonicalize the order part of a lattice document."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise BadSchema(f"not valid JSON: {exc}") from exc
    _require(isinstance(document, dict), "document must be a JSON object")
    _require("elements" in document, 'missing "elements"')
    _require("leq" in document, 'missing "leq"')
    elements = document["elements"]
    leq = document["leq"]
    _require(isinstance(elements, list) and elements, '"elements" must be a non-empty list')
    _require(all(isinstance(e, str) for e in elements), "element names must be strings")
    n = len(elements)
    _require(
        isinstance(leq, list) and len(leq) == n and all(
            isinstance(row, list) and len(row) == n for row in leq
        ),
        f'"leq" must be a {n}x{n} matrix',
    )
    _require(
        all(v in (0, 1, True, False) for row in leq for v in row),
        '"leq" entries must be 0/1',
    )
    poset, _ = FinitePoset.from_raw(elements, leq)
    return poset


def parse_lattice(document: dict | str) -> FiniteMultLattice:
    """Parse, canonicalize and fully validate a lattice document.

    The input order may be arbitrary; the result is re-indexed so the
    bottom has id 0 and the top has id size-1 (stable topological
    order otherwise).  Raises BadSchema for shape problems and the
    specific axiom error (with witness) for structural ones.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise BadSchema(f"not valid JSON: {exc}") from exc
    _require(isinstance(document, dict), "document must be a JSON object")
    for key in ("elements", "leq", "mult"):
        _require(key in document, f'missing "{key}"')
    elements = document["elements"]
    leq = document["leq"]
    mult = document["mult"]
    _require(isinstance(elements, list) and elements, '"elements" must be a non-empty list')
    _require(all(isinstance(e, str) for e in elements), "element names must be strings")
    n = len(elements)
    for key, mat in (("leq", leq), ("mult", mult)):
        _require(
            isinstance(mat, list) and len(mat) == n and all(
                isinstance(row, list) and len(row) == n for row in mat
            ),
            f'"{key}" must be a {n}x{n} matrix',
        )
    _require(
        all(v in (0, 1, True, False) for row in leq for v in row),
        '"leq" entries must be 0/1',
    )
    _require(
        all(isinstance(v, int) and 0 <= v < n for row in mult for v in row),
        '"mult" entries must be element indices',
    )
    poset, order = FinitePoset.from_raw(elements, leq)
    inverse = [0] * n
    for new, old in enumerate(order):
        inverse[old] = new
    new_mult = [[inverse[mult[a][b]] for b in order] for a in order]
    provenance = {k: document[k] for k in _PROVENANCE_KEYS if k in document}
    return FiniteMultLattice(poset, new_mult, provenance=provenance or None)


def serialize(lattice: FiniteMultLattice) -> dict:
    return lattice.serialize()
