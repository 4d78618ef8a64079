"""Enumerate every multiplicative-lattice structure on a finite poset.

The search fixes the forced cells (identity row, bottom row), walks the
free cells (unordered pairs of interior elements, most-constrained
first), bounds each candidate by xy <= x meet y, and checks
associativity and binary distributivity incrementally on the triples
that are already determined.  Every leaf is re-validated from scratch
by the core validator, so correctness never depends on the propagation
being complete.

Censuses count labeled structures on the fixed poset.  Chains have no
nontrivial order automorphisms, so labeled and isomorphism counts
coincide there; for other posets an optional canonical-form count
(lexicographically least table over poset automorphisms) is available.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from . import predicates
from .core import FiniteMultLattice, FinitePoset
from .errors import SharplatError, SizeTooSmall

_MIDDLE_NAMES = "abcdefghijklmnopqrstuvwxyz"


def chain_poset(n: int) -> FinitePoset:
    """The n-element chain: bottom, n-2 interior elements, top.

    Interior names follow the conventional labels: a single interior
    element is called m (the local maximal), longer chains use
    a, b, c, ...
    """
    if n < 2:
        raise SizeTooSmall("a chain needs at least bottom and top")
    if n == 3:
        middles = ["m"]
    elif n - 2 <= len(_MIDDLE_NAMES):
        middles = list(_MIDDLE_NAMES[: n - 2])
    else:
        middles = [f"m{i}" for i in range(1, n - 1)]
    names = ["0", *middles, "1"]
    leq = [[i <= j for j in range(n)] for i in range(n)]
    return FinitePoset(names, leq)


def diamond_poset(width: int) -> FinitePoset:
    """Bottom, ``width`` pairwise-incomparable interior elements, top.

    width = 2 is the four-element diamond with interior p, q.
    """
    if width < 1:
        raise SizeTooSmall("diamond needs at least one interior element")
    letters = "pqrstuvwxyz"
    if width <= len(letters):
        middles = list(letters[:width])
    else:
        middles = [f"p{i}" for i in range(1, width + 1)]
    names = ["0", *middles, "1"]
    n = width + 2
    leq = [
        [i == j or i == 0 or j == n - 1 for j in range(n)] for i in range(n)
    ]
    return FinitePoset(names, leq)


def _free_cells(poset: FinitePoset) -> list[tuple[int, int]]:
    """Unordered interior pairs, products of larger elements first."""
    mids = range(1, poset.size - 1)
    cells = [(i, j) for i in mids for j in mids if i <= j]
    cells.sort(key=lambda c: (-c[0], -c[1]))
    return cells


def _consistent(table, joins, n) -> bool:
    """Associativity and binary distributivity over the determined
    triples of a partial table."""
    for x in range(n):
        row_x = table[x]
        for y in range(n):
            xy = row_x[y]
            row_y = table[y]
            for z in range(n):
                if xy is not None:
                    t = table[xy][z]
                else:
                    t = None
                yz = row_y[z]
                if t is not None and yz is not None:
                    u = row_x[yz]
                    if u is not None and t != u:
                        return False
            for z in range(y + 1, n):
                xj = row_x[joins[y][z]]
                xy2 = row_x[y]
                xz = row_x[z]
                if xj is not None and xy2 is not None and xz is not None:
                    if xj != joins[xy2][xz]:
                        return False
    return True


def _search(poset: FinitePoset, cells, pin=None) -> list[FiniteMultLattice]:
    n = poset.size
    top = n - 1
    leq = poset.leq
    meets = poset.meets
    joins = poset.joins
    table: list[list[int | None]] = [[None] * n for _ in range(n)]
    for x in range(n):
        table[top][x] = table[x][top] = x
        table[0][x] = table[x][0] = 0
    found: list[FiniteMultLattice] = []

    def leaf() -> None:
        try:
            found.append(FiniteMultLattice(poset, table))
        except SharplatError:
            # propagation admitted a bad table; the validator has the
            # final word
            pass

    def backtrack(k: int) -> None:
        if k == len(cells):
            leaf()
            return
        i, j = cells[k]
        bound = meets[i][j]
        for v in range(n):
            if not leq[v][bound]:
                continue
            table[i][j] = table[j][i] = v
            if _consistent(table, joins, n):
                backtrack(k + 1)
            table[i][j] = table[j][i] = None

    if pin is None:
        backtrack(0)
    else:
        i, j = cells[0]
        if leq[pin][meets[i][j]]:
            table[i][j] = table[j][i] = pin
            if _consistent(table, joins, n):
                backtrack(1)
            table[i][j] = table[j][i] = None
    return found


def _thread_cap() -> int:
    raw = os.environ.get("SHARPLAT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def enumerate_structures(poset: FinitePoset):
    """Yield every multiplication table making ``poset`` a
    multiplicative lattice, exactly once, in lexicographic order of the
    row-major table.  Every yielded lattice has passed full validation.

    SHARPLAT_THREADS > 1 splits the search on the first cell's
    candidates; the output is identical either way.
    """
    cells = _free_cells(poset)
    cap = _thread_cap()
    if cap <= 1 or not cells:
        lattices = _search(poset, cells)
    else:
        i, j = cells[0]
        candidates = [
            v for v in range(poset.size) if poset.leq[v][poset.meets[i][j]]
        ]
        workers = min(cap, len(candidates))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(
                pool.map(lambda v: _search(poset, cells, pin=v), candidates)
            )
        lattices = [L for chunk in chunks for L in chunk]
    lattices.sort(key=FiniteMultLattice.flat_mult)
    yield from lattices


def brute_force_structures(poset: FinitePoset) -> list[FiniteMultLattice]:
    """Reference oracle: try every commutative table and keep what the
    validator accepts.

    Tables are generated as assignments over unordered pairs, which is
    every commutative table; non-commutative tables never validate, so
    nothing is lost.  The two inline pre-filters (identity row, bottom
    row) reject exactly the tables the validator would reject with
    NoIdentity / the empty-join law, just without building the object.
    Exponential: intended for carriers of size <= 4.
    """
    n = poset.size
    top = n - 1
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    forced = []
    for k, (i, j) in enumerate(pairs):
        if j == top:
            forced.append((k, i))
        elif i == 0:
            forced.append((k, 0))
    out = []
    for values in product(range(n), repeat=len(pairs)):
        if any(values[k] != v for k, v in forced):
            continue
        table = [[0] * n for _ in range(n)]
        for (i, j), v in zip(pairs, values):
            table[i][j] = table[j][i] = v
        try:
            out.append(FiniteMultLattice(poset, table))
        except SharplatError:
            continue
    out.sort(key=FiniteMultLattice.flat_mult)
    return out


@dataclass(frozen=True)
class Census:
    """Aggregate counts over all structures on one poset.

    Counts are of labeled structures; ``distinct_up_to_automorphism``
    (when requested) dedups by the lexicographically least table over
    order automorphisms of the poset.
    """

    elements: tuple[str, ...]
    leq: tuple[tuple[int, ...], ...]
    total: int
    sharp: int
    domains: int
    all_principal: int
    representatives: tuple[dict, ...] | None = None
    distinct_up_to_automorphism: int | None = None

    def to_dict(self) -> dict:
        out: dict = {
            "poset": {
                "elements": list(self.elements),
                "leq": [list(row) for row in self.leq],
            },
            "counting": "labeled",
            "total_structures": self.total,
            "sharp_count": self.sharp,
            "domain_count": self.domains,
            "all_principal_count": self.all_principal,
        }
        if self.distinct_up_to_automorphism is not None:
            out["distinct_up_to_automorphism"] = self.distinct_up_to_automorphism
        if self.representatives is not None:
            out["representatives"] = list(self.representatives)
        return out


def census(
    poset: FinitePoset,
    keep_representatives: bool = False,
    audit_each: bool = False,
    distinct_up_to_auto: bool = False,
) -> Census:
    """Enumerate and classify every structure on ``poset``.

    ``audit_each`` runs the claim audit on every structure and lets a
    ClaimFalsified propagate (the census cannot finish on a falsifying
    instance).  Deterministic for a fixed poset.
    """
    total = sharp = domains = all_principal = 0
    reps: list[dict] = []
    canon: set[tuple[int, ...]] = set()
    autos = poset.automorphisms() if distinct_up_to_auto else None
    for L in enumerate_structures(poset):
        total += 1
        report = predicates.sharpness_report(L)
        if report.is_sharp:
            sharp += 1
        if predicates.prime_witness(L, 0) is None:
            domains += 1
        if len(predicates.principal_elements(L)) == L.size:
            all_principal += 1
        if audit_each:
            try:
                predicates.theorem_audit(L)
            except SharplatError as exc:
                if getattr(exc, "lattice_document", None) is None:
                    exc.lattice_document = L.serialize()
                raise
        if keep_representatives:
            reps.append(L.serialize())
        if autos is not None:
            canon.add(_canonical_key(L, autos))
    return Census(
        elements=poset.names,
        leq=tuple(tuple(1 if v else 0 for v in row) for row in poset.leq),
        total=total,
        sharp=sharp,
        domains=domains,
        all_principal=all_principal,
        representatives=tuple(reps) if keep_representatives else None,
        distinct_up_to_automorphism=len(canon) if autos is not None else None,
    )


def _canonical_key(L: FiniteMultLattice, autos) -> tuple[int, ...]:
    n = L.size
    best = None
    for sigma in autos:
        flat = []
        inv = [0] * n
        for i, img in enumerate(sigma):
            inv[img] = i
        for i in range(n):
            for j in range(n):
                flat.append(sigma[L.mult[inv[i]][inv[j]]])
        key = tuple(flat)
        if best is None or key < best:
            best = key
    return best
