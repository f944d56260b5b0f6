"""Decision procedures for ring classes and their level-wise preservation.

Every closure-preservation statement is verified as the corresponding
matrix-ring statement at levels <= K: the closure is the union of its
levels, so the level statements are the finite content.  The radical is
computed by quasiregularity (x such that 1 - rx is a unit for every r),
with the maximal-left-ideal intersection as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iproduct
from typing import Optional

from .closure import ClosureElement, cmul, inject
from .ideals import FiniteIdeal, maximal_ideals, validate_ideal
from .matrices import (
    Matrix,
    MatrixRing,
    flatten,
    mat_identity,
    split_product_matrix,
    unflatten,
    zip_product_matrix,
)
from .rings import (
    BoundExceededError,
    ProductRing,
    Ring,
    RingElement,
    RingError,
    field_characteristic,
)

RADICAL_MAX_ORDER = 64
CROSSCHECK_MAX_ORDER = 16
DEFAULT_BUDGET = 1 << 24

HOLDS = "holds"
FAILS = "fails"
UNDECIDED_AT_BOUND = "undecided-at-bound"
VACUOUS = "vacuous"


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of one ring-class decision, with a re-checkable witness."""

    prop: str
    ring: Ring
    verdict: str
    witness: tuple = ()
    note: str = ""

    def holds(self) -> bool:
        return self.verdict == HOLDS

    def witness_text(self) -> str:
        if not self.witness:
            return self.note or "-"
        parts = ",".join(str(w) for w in self.witness)
        return f"{parts}{'; ' + self.note if self.note else ''}"


# ---------------------------------------------------------------------------
# Jacobson radical


def quasiregular_radical(ring: Ring, max_order: int) -> FiniteIdeal:
    """J(ring) as {x : 1 - rx is a unit for all r}, with validation."""
    o = ring.order()
    if o is None or o > max_order:
        raise BoundExceededError(
            f"radical computation bounded to order <= {max_order}; {ring} has {o}"
        )
    units = ring.units
    els = ring.elements()
    one = ring.one
    members = set()
    for x in els:
        if all(ring.sub(one, ring.mul(r, x)) in units for r in els):
            members.add(x)
    ideal = FiniteIdeal(ring, "two-sided", frozenset(members))
    problems = validate_ideal(ideal)
    if problems:
        raise RingError(f"quasiregular set is not an ideal: {problems[0]}")
    return ideal


def jacobson_radical(ring: Ring) -> FiniteIdeal:
    return quasiregular_radical(ring, RADICAL_MAX_ORDER)


def radical_via_maximal_left(ring: Ring) -> frozenset:
    """Cross-check oracle: intersection of the maximal left ideals."""
    o = ring.order()
    if o is None or o > CROSSCHECK_MAX_ORDER:
        raise BoundExceededError(
            f"maximal-ideal cross-check bounded to order <= {CROSSCHECK_MAX_ORDER}"
        )
    maxima = maximal_ideals(ring, "left")
    if not maxima:
        return frozenset(ring.elements())
    out = set(maxima[0].members)
    for m in maxima[1:]:
        out &= m.members
    return frozenset(out)


def is_semisimple(ring: Ring) -> PropertyVerdict:
    j = jacobson_radical(ring)
    if len(j.members) == 1:
        return PropertyVerdict("semisimple", ring, HOLDS, note="radical is zero")
    wit = tuple(a for a in j.sorted_members() if a != ring.zero)[:1]
    return PropertyVerdict("semisimple", ring, FAILS, witness=wit, note="nonzero radical")


def matrix_levels_radical_check(
    ring: Ring, n: int, max_level: int, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, bool, str]]:
    """Per level k <= max_level: J(M_{n^k}(R)) == M_{n^k}(J(R)) entry-wise.

    Both sides by brute force: the left by quasiregularity over the matrix
    ring, the right from the base radical.  Returns (level, ok, witness).
    """
    base_radical = jacobson_radical(ring)
    results = []
    for k in range(max_level + 1):
        size = n**k
        mring = MatrixRing(ring, size) if size > 1 else None
        if mring is None:
            ok = True  # level 0 is the base identity J(R) = J(R)
            results.append((0, ok, base_radical.format()))
            continue
        order = mring.order()
        if order is None or order > budget:
            raise BoundExceededError(
                f"level-{k} radical needs {order} matrices; budget {budget}"
            )
        left = quasiregular_radical(mring, budget).members
        right = set()
        for cells in _iproduct(base_radical.sorted_members(), repeat=size * size):
            right.add(mring.element(Matrix(ring, size, size, cells)))
        ok = left == right
        witness = f"|J(M{size})|={len(left)}, |M{size}(J)|={len(right)}"
        if not ok:
            diff = next(iter(left.symmetric_difference(right)))
            witness += f"; differs at {diff}"
        results.append((k, ok, witness))
    return results


# ---------------------------------------------------------------------------
# semiprime / prime


def is_semiprime(ring: Ring) -> PropertyVerdict:
    """Brute force on aRa = 0 => a = 0 at the zero ideal."""
    els = ring.elements()
    zero = ring.zero
    for a in els:
        if a == zero:
            continue
        if all(ring.mul(ring.mul(a, r), a) == zero for r in els):
            return PropertyVerdict("semiprime", ring, FAILS, witness=(a,), note="aRa=0")
    return PropertyVerdict("semiprime", ring, HOLDS)


def is_prime(ring: Ring) -> PropertyVerdict:
    """Brute force on aRb = 0 => a = 0 or b = 0 at the zero ideal."""
    els = ring.elements()
    zero = ring.zero
    for a in els:
        if a == zero:
            continue
        for b in els:
            if b == zero:
                continue
            if all(ring.mul(ring.mul(a, r), b) == zero for r in els):
                return PropertyVerdict("prime", ring, FAILS, witness=(a, b), note="aRb=0")
    return PropertyVerdict("prime", ring, HOLDS)


def _matrix_ring_semiprime(mring: MatrixRing) -> Optional[RingElement]:
    els = mring.elements()
    zero = mring.zero
    for a in els:
        if a == zero:
            continue
        if all(mring.mul(mring.mul(a, r), a) == zero for r in els):
            return a
    return None


def _matrix_ring_prime(mring: MatrixRing) -> Optional[tuple[RingElement, RingElement]]:
    els = mring.elements()
    zero = mring.zero
    for a in els:
        if a == zero:
            continue
        for b in els:
            if b == zero:
                continue
            if all(mring.mul(mring.mul(a, r), b) == zero for r in els):
                return a, b
    return None


def closure_semiprime_check(
    ring: Ring, n: int, max_level: int, budget: int = DEFAULT_BUDGET
) -> PropertyVerdict:
    """Level-wise semiprimeness of the closure, vacuous off semiprime bases."""
    base = is_semiprime(ring)
    if not base.holds():
        return PropertyVerdict(
            "closure-semiprime", ring, VACUOUS, witness=base.witness, note="base not semiprime"
        )
    for k in range(max_level + 1):
        size = n**k
        mring = MatrixRing(ring, size)
        if mring.order() > budget:
            return PropertyVerdict(
                "closure-semiprime", ring, UNDECIDED_AT_BOUND, note=f"level {k} too large"
            )
        bad = _matrix_ring_semiprime(mring)
        if bad is not None:
            return PropertyVerdict(
                "closure-semiprime", ring, FAILS, witness=(bad,), note=f"level {k}"
            )
    return PropertyVerdict("closure-semiprime", ring, HOLDS, note=f"levels<={max_level}")


def closure_prime_check(
    ring: Ring, n: int, max_level: int, budget: int = DEFAULT_BUDGET
) -> PropertyVerdict:
    base = is_prime(ring)
    if not base.holds():
        return PropertyVerdict(
            "closure-prime", ring, VACUOUS, witness=base.witness, note="base not prime"
        )
    for k in range(max_level + 1):
        size = n**k
        mring = MatrixRing(ring, size)
        if mring.order() ** 2 > budget:
            return PropertyVerdict(
                "closure-prime", ring, UNDECIDED_AT_BOUND, note=f"level {k} too large"
            )
        bad = _matrix_ring_prime(mring)
        if bad is not None:
            return PropertyVerdict("closure-prime", ring, FAILS, witness=bad, note=f"level {k}")
    return PropertyVerdict("closure-prime", ring, HOLDS, note=f"levels<={max_level}")


# ---------------------------------------------------------------------------
# von Neumann regularity


def is_von_neumann_regular(ring: Ring) -> PropertyVerdict:
    els = ring.elements()
    for a in els:
        if not any(ring.mul(ring.mul(a, x), a) == a for x in els):
            return PropertyVerdict(
                "von-neumann-regular", ring, FAILS, witness=(a,), note="no quasi-inverse"
            )
    return PropertyVerdict("von-neumann-regular", ring, HOLDS)


def _rank_form_quasi_inverse(a: Matrix, p: int) -> Matrix:
    """X with AXA = A over a prime-modulus base, via full-pivot reduction.

    Reduce P A Q = D with D a 0/1 diagonal pattern; then X = Q D P works
    because D**3 = D.
    """
    k = a.rows
    ring = a.ring
    m = [[a.entry(i, j).payload for j in range(k)] for i in range(k)]
    pm = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    qm = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    rank = 0
    for pos in range(k):
        piv = next(
            (
                (i, j)
                for i in range(pos, k)
                for j in range(pos, k)
                if m[i][j] % p
            ),
            None,
        )
        if piv is None:
            break
        pi, pj = piv
        m[pos], m[pi] = m[pi], m[pos]
        pm[pos], pm[pi] = pm[pi], pm[pos]
        if pj != pos:
            for row in m:
                row[pos], row[pj] = row[pj], row[pos]
            for row in qm:
                row[pos], row[pj] = row[pj], row[pos]
        scale = pow(m[pos][pos], -1, p)
        m[pos] = [(x * scale) % p for x in m[pos]]
        pm[pos] = [(x * scale) % p for x in pm[pos]]
        for r in range(k):
            if r != pos and m[r][pos]:
                f = m[r][pos]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[pos])]
                pm[r] = [(x - f * y) % p for x, y in zip(pm[r], pm[pos])]
        for c in range(k):
            if c != pos and m[pos][c]:
                f = m[pos][c]
                for row in m:
                    row[c] = (row[c] - f * row[pos]) % p
                for row in qm:
                    row[c] = (row[c] - f * row[pos]) % p
        rank += 1
    el = ring.el  # type: ignore[attr-defined]
    # X = Q D P with D the rank pattern: (QD) keeps the first `rank` columns of Q
    x = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            x[i][j] = sum(qm[i][t] * pm[t][j] for t in range(rank)) % p
    return Matrix(ring, k, k, tuple(el(x[i][j]) for i in range(k) for j in range(k)))


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        while m % d == 0:
            out.append(d)
            m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def _squarefree_quasi_inverse(a: Matrix, m: int) -> Matrix:
    """Componentwise rank-form solutions glued back along the residues."""
    from .rings import ModularRing, PrimeField

    k = a.rows
    parts = []
    for p in _prime_factors(m):
        fld = PrimeField(p)
        proj = Matrix(
            fld, k, k, tuple(fld.el(c.payload) for c in a.cells)
        )
        parts.append((p, _rank_form_quasi_inverse(proj, p)))
    ring = a.ring
    cells = []
    for idx in range(k * k):
        residue = 0
        for p, sol in parts:
            q = m // p
            residue += sol.cells[idx].payload * q * pow(q, -1, p)
        cells.append(ring.el(residue % m))  # type: ignore[attr-defined]
    return Matrix(ring, k, k, tuple(cells))


def matrix_quasi_inverse(a: Matrix, budget: int = DEFAULT_BUDGET) -> Matrix:
    """Some X with A X A = A over a von Neumann regular enumerable base."""
    from .rings import ModularRing, is_prime

    ring = a.ring
    p = field_characteristic(ring)
    if p is not None:
        return _rank_form_quasi_inverse(a, p)
    if isinstance(ring, ModularRing):
        factors = _prime_factors(ring.m)
        if len(set(factors)) == len(factors):
            return _squarefree_quasi_inverse(a, ring.m)
    if isinstance(ring, MatrixRing):
        return unflatten(matrix_quasi_inverse(flatten(a), budget), ring.size)
    if isinstance(ring, ProductRing):
        l, r = split_product_matrix(a)
        return zip_product_matrix(
            matrix_quasi_inverse(l, budget), matrix_quasi_inverse(r, budget), ring
        )
    mring = MatrixRing(ring, a.rows)
    order = mring.order()
    if order is None or order > budget:
        raise BoundExceededError("quasi-inverse search exceeds the candidate budget")
    wrapped = mring.element(a)
    for x in mring.elements():
        if mring.mul(mring.mul(wrapped, x), wrapped) == wrapped:
            return x.payload
    raise RingError("no quasi-inverse found; base ring is not von Neumann regular")


def closure_vnr_witness(x: ClosureElement, budget: int = DEFAULT_BUDGET) -> ClosureElement:
    """A same-level w with x*w*x == x, re-verified before returning."""
    w = inject(x.ring, x.n, x.level, matrix_quasi_inverse(x.body, budget), allow_n1=True)
    if cmul(cmul(x, w), x) != x:
        raise RingError("quasi-inverse failed re-verification")
    return w


# ---------------------------------------------------------------------------
# invariant basis number


def ibn_check(
    ring: Ring,
    n: int,
    rmax: int,
    smax: int,
    level: int,
    budget: int = DEFAULT_BUDGET,
) -> PropertyVerdict:
    """Exhaustive search for AB = I_r, BA = I_s with r != s at one level.

    Entries range over M_{n^level}(R); a hit would flatten to a rectangular
    identity pair over R, so none existing is the level content of basis
    invariance.  Deterministic iteration; 'undecided-at-bound' when the
    candidate count exceeds the budget.
    """
    size = n**level
    base: Ring = MatrixRing(ring, size) if size > 1 else ring
    o = base.order()
    if o is None:
        raise RingError("basis-invariance search needs an enumerable ring")
    checked = 0
    for r in range(1, rmax + 1):
        for s in range(1, smax + 1):
            if r == s:
                continue
            count = o ** (2 * r * s)
            if checked + count > budget:
                return PropertyVerdict(
                    "ibn",
                    ring,
                    UNDECIDED_AT_BOUND,
                    note=f"r={r},s={s} needs {count} candidates",
                )
            checked += count
            for acells in _iproduct(base.elements(), repeat=r * s):
                a = Matrix(base, r, s, acells)
                for bcells in _iproduct(base.elements(), repeat=s * r):
                    b = Matrix(base, s, r, bcells)
                    if a * b == mat_identity(base, r) and b * a == mat_identity(base, s):
                        return PropertyVerdict(
                            "ibn",
                            ring,
                            FAILS,
                            witness=(),
                            note=f"rectangular inverse pair at r={r},s={s}: {a} / {b}",
                        )
    return PropertyVerdict(
        "ibn", ring, HOLDS, note=f"no witness among {checked} candidate pairs"
    )


def ibn_flatten_consistency(ring: Ring, n: int, level: int, rng, samples: int = 20) -> bool:
    """The rectangular block-collapse respects products on random pairs.

    This is the reduction step that turns a closure-level inverse pair
    into a base-level one.
    """
    if level < 1:
        level = 1
    size = n**level
    base = MatrixRing(ring, size)
    for _ in range(samples):
        r, s, t = rng.randrange(1, 3), rng.randrange(1, 3), rng.randrange(1, 3)
        a = Matrix(base, r, s, tuple(base.sample(rng) for _ in range(r * s)))
        b = Matrix(base, s, t, tuple(base.sample(rng) for _ in range(s * t)))
        if flatten(a * b) != flatten(a) * flatten(b):
            return False
    return True
