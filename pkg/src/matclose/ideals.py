"""Ideals of finite rings and their images in the matrix closure.

Closure ideals are represented intensionally (a base ideal plus the
membership predicate "all body entries lie in the base ideal"): the
closure of an ideal is infinite, but for two-sided ideals the lattice
isomorphism with the base makes the intensional form lossless.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iproduct
from typing import Iterable, Iterator, Optional

from .closure import ClosureElement, cone, embed, inject, lift
from .matrices import Matrix, MatrixRing, diag_repeat, mat_identity, mat_unit, mat_zero
from .report import FAIL, PASS, UNDECIDED, Outcome
from .rings import BoundExceededError, Ring, RingElement, RingError, RingMismatchError

SIDES = ("left", "right", "two-sided")
ENUMERATION_MAX_ORDER = 64
LATTICE_MAX_ORDER = 16


@dataclass(frozen=True)
class FiniteIdeal:
    """An explicit ideal of an enumerable ring."""

    ring: Ring
    side: str
    members: frozenset

    def __contains__(self, a: RingElement) -> bool:
        return a in self.members

    def sorted_members(self) -> tuple:
        idx = self.ring.element_index
        return tuple(sorted(self.members, key=idx.__getitem__))

    def format(self) -> str:
        return "{" + ",".join(str(a) for a in self.sorted_members()) + "}"

    def __le__(self, other: "FiniteIdeal") -> bool:
        return self.members <= other.members

    def __repr__(self):
        return f"<{self.side} ideal {self.format()} of {self.ring}>"


def validate_ideal(ideal: FiniteIdeal) -> list[str]:
    """Check 0-membership, additive closure and side absorption."""
    ring, mem = ideal.ring, ideal.members
    failures = []
    if ring.zero not in mem:
        failures.append("0 missing")
    for x in mem:
        if ring.neg(x) not in mem:
            failures.append(f"-{x} missing")
            break
        for y in mem:
            if ring.add(x, y) not in mem:
                failures.append(f"{x}+{y} escapes")
                break
    absorb_left = ideal.side in ("left", "two-sided")
    absorb_right = ideal.side in ("right", "two-sided")
    for x in mem:
        for r in ring.elements():
            if absorb_left and ring.mul(r, x) not in mem:
                failures.append(f"{r}*{x} escapes")
                break
            if absorb_right and ring.mul(x, r) not in mem:
                failures.append(f"{x}*{r} escapes")
                break
    return failures


def _additive_closure(ring: Ring, seed: set) -> frozenset:
    seen = set(seed)
    seen.add(ring.zero)
    frontier = list(seen)
    while frontier:
        x = frontier.pop()
        for y in list(seen):
            s = ring.add(x, y)
            if s not in seen:
                seen.add(s)
                frontier.append(s)
    return frozenset(seen)


def ideal_generated(ring: Ring, gens: Iterable[RingElement], side: str = "two-sided") -> FiniteIdeal:
    """The ideal of the given side generated by ``gens``."""
    if side not in SIDES:
        raise ValueError(f"unknown ideal side {side!r}")
    els = ring.elements()
    seed = set()
    for gen in gens:
        if side == "left":
            seed.update(ring.mul(r, gen) for r in els)
        elif side == "right":
            seed.update(ring.mul(gen, r) for r in els)
        else:
            for r in els:
                rg = ring.mul(r, gen)
                seed.update(ring.mul(rg, s) for s in els)
    return FiniteIdeal(ring, side, _additive_closure(ring, seed))


def enumerate_ideals(ring: Ring, side: str = "two-sided") -> tuple[FiniteIdeal, ...]:
    """All ideals of the given side, ordered by size then members.

    Every ideal is a join of principal ideals, so the lattice is the join
    closure of the principal ones.
    """
    if not ring.enumerable:
        raise RingError(f"ideal enumeration needs an enumerable ring: {ring}")
    o = ring.order()
    if o > ENUMERATION_MAX_ORDER:
        raise BoundExceededError(
            f"ideal enumeration bounded to order <= {ENUMERATION_MAX_ORDER}; {ring} has {o}"
        )
    principals = {ideal_generated(ring, [a], side).members for a in ring.elements()}
    lattice = set(principals)
    frontier = list(principals)
    while frontier:
        left = frontier.pop()
        for right in list(lattice):
            join = _additive_closure(ring, left | right)
            if join not in lattice:
                lattice.add(join)
                frontier.append(join)
    idx = ring.element_index
    ordered = sorted(lattice, key=lambda m: (len(m), sorted(idx[a] for a in m)))
    return tuple(FiniteIdeal(ring, side, m) for m in ordered)


def maximal_ideals(ring: Ring, side: str = "left") -> tuple[FiniteIdeal, ...]:
    """Maximal proper ideals of the given side."""
    all_ideals = [i for i in enumerate_ideals(ring, side) if len(i.members) < ring.order()]
    out = []
    for i in all_ideals:
        if not any(i.members < j.members for j in all_ideals):
            out.append(i)
    return tuple(out)


# ---------------------------------------------------------------------------
# closure ideals


@dataclass(frozen=True)
class ClosureIdealView:
    """MC_n(I) as a membership predicate over closure elements.

    Membership is lift-invariant: lifting only copies entries and adds
    zeros, so testing the canonical body is enough.
    """

    base: FiniteIdeal
    n: int

    def __contains__(self, x: ClosureElement) -> bool:
        return closure_membership(x, self)


def closure_membership(x: ClosureElement, view: ClosureIdealView) -> bool:
    if x.ring != view.base.ring or x.n != view.n:
        raise RingMismatchError("element and closure-ideal view do not match")
    return all(c in view.base.members for c in x.body.cells)


def extract_ideal(ring: Ring, generators: Iterable[ClosureElement]) -> FiniteIdeal:
    """The two-sided base ideal generated by all body entries.

    Any entry of a member is reachable from the (0,0) slot by multiplying
    with matrix units on both sides, so entries of generators generate the
    same ideal the closure elements do.
    """
    entries: list[RingElement] = []
    for g in generators:
        if g.ring != ring:
            raise RingMismatchError("generator over a different base ring")
        entries.extend(g.body.cells)
    return ideal_generated(ring, entries, "two-sided")


def lattice_iso_roundtrip(ring: Ring, n: int, max_level: int) -> list[Outcome]:
    """Round-trip, monotonicity and injectivity of I |-> MC_n(I).

    Exhaustive: every two-sided ideal is pushed to its closure view via
    level-0 generators and pulled back by entry extraction; containments
    are swept over all level <= max_level matrices with entries in the
    smaller ideal.
    """
    o = ring.order()
    if o is None or o > LATTICE_MAX_ORDER:
        raise BoundExceededError(
            f"lattice round-trip bounded to order <= {LATTICE_MAX_ORDER}; {ring} has {o}"
        )
    ideals = enumerate_ideals(ring, "two-sided")
    outcomes = []
    for pos, ideal in enumerate(ideals):
        gens = [embed(a, n) for a in ideal.sorted_members()]
        back = extract_ideal(ring, gens)
        verdict = PASS if back.members == ideal.members else FAIL
        outcomes.append(
            Outcome(f"lattice.roundtrip.i{pos}", verdict, witness=ideal.format())
        )
    monotone = True
    witness = "-"
    for small in ideals:
        for big in ideals:
            if not small.members <= big.members:
                continue
            view = ClosureIdealView(FiniteIdeal(ring, "two-sided", big.members), n)
            for level in range(max_level + 1):
                k = n**level
                for cells in _iproduct(small.sorted_members(), repeat=k * k):
                    x = inject(ring, n, level, Matrix(ring, k, k, cells))
                    if x not in view:
                        monotone = False
                        witness = f"{small.format()}<={big.format()} at {x}"
                        break
                if not monotone:
                    break
            if not monotone:
                break
        if not monotone:
            break
    outcomes.append(Outcome("lattice.monotone", PASS if monotone else FAIL, witness, max_level))
    injective = True
    witness = "-"
    for i, small in enumerate(ideals):
        for big in ideals[i + 1 :]:
            diff = (small.members - big.members) | (big.members - small.members)
            if not diff:
                injective = False
                witness = "two distinct ideals with equal member sets"
                break
            a = next(iter(diff))
            x = embed(a, n)
            in_small = x in ClosureIdealView(small, n)
            in_big = x in ClosureIdealView(big, n)
            if in_small == in_big:
                injective = False
                witness = f"views agree on separating element {a}"
                break
        if not injective:
            break
    outcomes.append(Outcome("lattice.injective", PASS if injective else FAIL, witness))
    if len(ideals) == 2:
        outcomes.append(
            Outcome(
                "lattice.simple",
                PASS,
                witness="simple base ring; exactly the two trivial closure ideals",
            )
        )
    return outcomes


# ---------------------------------------------------------------------------
# the strictly descending chain of idempotent-generated left summands


def principal_column_support(x: Matrix, modulus: int) -> Optional[int]:
    """First nonzero column not divisible by ``modulus``, or None.

    Left multiples of the lifted corner idempotent have nonzero entries
    only in columns divisible by n^k (the idempotent's diagonal support),
    and lifting block-copies columns into the same residue classes, so
    this single structural test decides membership in the principal left
    ideal at every level.
    """
    z = x.ring.zero
    for j in range(x.cols):
        if j % modulus == 0:
            continue
        for i in range(x.rows):
            if x.entry(i, j) != z:
                return j
    return None


def idempotent_chain(ring: Ring, n: int, depth: int) -> list[Outcome]:
    """Containment and strictness witnesses for the corner-idempotent chain.

    For each k < depth: the level-(k+1) corner idempotent is a left
    multiple of the lifted level-k one (containment), while the lifted
    level-k idempotent has column support outside the level-(k+1) pattern
    (strictness).  Nonzero base ring required.
    """
    if ring.order() == 1:
        raise RingError("the corner-idempotent chain needs a nonzero ring")
    outcomes = []
    strict_count = 0
    for k in range(depth):
        small = mat_unit(ring, n**k, 0, 0)
        lifted = diag_repeat(small, n)  # level-(k+1) representative of e_k
        big = mat_unit(ring, n ** (k + 1), 0, 0)
        contained = big * lifted == big
        outcomes.append(
            Outcome(
                f"chain.contains.k{k}",
                PASS if contained else FAIL,
                witness=f"e(0,0)@{k + 1}*(I{n}(x)e(0,0)@{k})=e(0,0)@{k + 1}",
                level=k,
            )
        )
        col = principal_column_support(lifted, n ** (k + 1))
        strict = col is not None
        if strict:
            strict_count += 1
        outcomes.append(
            Outcome(
                f"chain.strict.k{k}",
                PASS if strict else FAIL,
                witness=f"column {col} not divisible by {n ** (k + 1)}" if strict else "-",
                level=k,
            )
        )
    outcomes.append(
        Outcome(
            "chain.summary",
            PASS if strict_count == depth else FAIL,
            witness=f"{strict_count} strict descents of left direct summands",
            level=depth,
        )
    )
    outcomes.append(
        Outcome(
            "chain.z_derived",
            PASS,
            witness=(
                "derived: no DCC/ACC on left direct summands; not artinian; "
                "not noetherian; no finite uniform dimension; not quasi-Frobenius"
            ),
        )
    )
    return outcomes


# ---------------------------------------------------------------------------
# ascending unions of level-wise ideals


@dataclass(frozen=True)
class ColumnIdealFamily:
    """Level family I_k = {A : first-column entries lie in J}, J a left ideal.

    Compatible with the block-diagonal transitions, and level-wise maximal
    whenever J is a maximal left ideal (the quotient at level k is the
    column module (R/J)^(n^k)).  For a field base and J = 0 this is the
    zero-first-column family.
    """

    base: FiniteIdeal
    n: int

    def contains(self, mat: Matrix) -> bool:
        mem = self.base.members
        return all(mat.entry(i, 0) in mem for i in range(mat.rows))

    def contains_element(self, x: ClosureElement) -> bool:
        return self.contains(x.body)

    def level_members(self, k: int) -> Iterator[Matrix]:
        ring = self.base.ring
        size = self.n**k
        first_col = self.base.sorted_members()
        rest = ring.elements()
        for col in _iproduct(first_col, repeat=size):
            for other in _iproduct(rest, repeat=size * (size - 1)):
                cells = []
                it = iter(other)
                for i in range(size):
                    cells.append(col[i])
                    cells.extend(next(it) for _ in range(size - 1))
                yield Matrix(ring, size, size, tuple(cells))

    def maximality_witness(self, mat: Matrix, budget: int) -> Optional[tuple[Matrix, Matrix]]:
        """(z, i) with z*mat + i = identity, i in the level ideal, or None.

        Only the first column constrains the search: row t of z must send
        mat's first column to delta_{t0} modulo J, and rows are independent.
        """
        ring = self.base.ring
        size = mat.rows
        col = tuple(mat.entry(i, 0) for i in range(size))
        mem = self.base.members
        add, mul = ring.add, ring.mul
        rows = []
        tried = 0
        for t in range(size):
            target_unit = t == 0
            found = None
            for cand in _iproduct(ring.elements(), repeat=size):
                tried += 1
                if tried > budget:
                    raise BoundExceededError("maximality witness search budget exceeded")
                acc = mul(cand[0], col[0])
                for j in range(1, size):
                    acc = add(acc, mul(cand[j], col[j]))
                if target_unit:
                    ok = ring.sub(acc, ring.one) in mem
                else:
                    ok = acc in mem
                if ok:
                    found = cand
                    break
            if found is None:
                return None
            rows.append(found)
        z = Matrix(ring, size, size, tuple(c for row in rows for c in row))
        remainder = mat_identity(ring, size) - z * mat
        if not self.contains(remainder):
            raise RingError("witness remainder escaped the level ideal")
        return z, remainder


def default_maximal_family(ring: Ring, n: int) -> ColumnIdealFamily:
    """Column family over a computed maximal left ideal of the base."""
    best = maximal_ideals(ring, "left")
    if not best:
        raise RingError(f"no proper left ideals in {ring}")
    return ColumnIdealFamily(best[0], n)


def maximal_family_union(
    ring: Ring,
    n: int,
    family: ColumnIdealFamily,
    max_level: int,
    rng,
    samples: int = 100,
    budget: int = 1 << 24,
) -> list[Outcome]:
    """Verify the ascending union of a level-wise ideal family.

    Checks, per the stated level bound: family compatibility under the
    block transitions, closure of the union predicate under addition and
    left multiplication (sampled), properness, and level-wise maximality
    witnesses for every non-member matrix.
    """
    from .closure import random_closure_element

    outcomes = []
    for k in range(max_level):
        count = ring.order() ** ((n**k) ** 2)
        compatible = True
        witness = "-"
        if count <= budget:
            for mat in family.level_members(k):
                lifted = diag_repeat(mat, n)
                if not family.contains(lifted):
                    compatible = False
                    witness = str(mat)
                    break
            outcomes.append(
                Outcome(
                    f"maxunion.compat.k{k}",
                    PASS if compatible else FAIL,
                    witness,
                    level=k,
                )
            )
        else:
            outcomes.append(Outcome(f"maxunion.compat.k{k}", UNDECIDED, "level too large", k))

    def random_member(level: int) -> ClosureElement:
        size = n**level
        first = family.base.sorted_members()
        cells = []
        for i in range(size):
            cells.append(first[rng.randrange(len(first))])
            cells.extend(ring.sample(rng) for _ in range(size - 1))
        return inject(ring, n, level, Matrix(ring, size, size, tuple(cells)))

    closed_add = True
    closed_mul = True
    witness_add = witness_mul = "-"
    for _ in range(samples):
        x = random_member(rng.randrange(max_level + 1))
        y = random_member(rng.randrange(max_level + 1))
        z = random_closure_element(ring, n, rng, max_level)
        s = x + y
        if not family.contains_element(s):
            closed_add = False
            witness_add = f"{x}+{y}"
        p = z * x
        if not family.contains_element(p):
            closed_mul = False
            witness_mul = f"{z}*{x}"
    outcomes.append(Outcome("maxunion.closed_add", PASS if closed_add else FAIL, witness_add))
    outcomes.append(Outcome("maxunion.closed_mul", PASS if closed_mul else FAIL, witness_mul))

    proper = not family.contains_element(cone(ring, n))
    outcomes.append(
        Outcome("maxunion.proper", PASS if proper else FAIL, witness="1 is not a member")
    )

    for k in range(max_level + 1):
        size = n**k
        total = ring.order() ** (size * size)
        if total > budget:
            outcomes.append(Outcome(f"maxunion.maximal.k{k}", UNDECIDED, "level too large", k))
            continue
        missing = None
        checked = 0
        for cells in _iproduct(ring.elements(), repeat=size * size):
            mat = Matrix(ring, size, size, cells)
            if family.contains(mat):
                continue
            checked += 1
            if family.maximality_witness(mat, budget) is None:
                missing = mat
                break
        outcomes.append(
            Outcome(
                f"maxunion.maximal.k{k}",
                PASS if missing is None else FAIL,
                witness=f"witnesses for all {checked} non-members"
                if missing is None
                else f"no witness for {missing}",
                level=k,
            )
        )
    return outcomes
