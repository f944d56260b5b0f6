"""The matrix closure of a ring: level-tagged canonical matrices.

An element is a class of the direct system M_{n^0}(R) -> M_{n^1}(R) -> ...
whose transition maps are the block-diagonal embeddings A |-> I_n (x) A.
Each class has a unique minimal-level representative, obtained by stripping
I_n (x) - structure greedily; arithmetic lifts both operands to the larger
of the two levels, operates, and re-normalizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as _iproduct
from typing import Iterator, Optional

from .matrices import (
    Matrix,
    MatrixRing,
    RingMorphism,
    block_scalar_strip,
    diag_repeat,
    flatten,
    mat_identity,
    mat_inverse,
    mat_map,
    mat_unit,
    mat_zero,
    scalar_matrix,
    unflatten,
)
from .rings import Ring, RingElement, RingError, RingMismatchError


class NotCentralError(RingError):
    """Raised when a center section is requested for a non-central element."""


class ClosureElement:
    """A canonical (level, body) pair: body is n^level x n^level over R.

    Construct through :func:`inject`; the constructor itself trusts that
    the body is already in minimal-level form.
    """

    __slots__ = ("ring", "n", "level", "body", "_hash")

    def __init__(self, ring: Ring, n: int, level: int, body: Matrix):
        self.ring = ring
        self.n = n
        self.level = level
        self.body = body
        self._hash = None

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, ClosureElement)
            and self.n == other.n
            and self.level == other.level
            and self.ring == other.ring
            and self.body == other.body
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.ring, self.n, self.level, self.body))
        return h

    def __add__(self, other):
        return cadd(self, other)

    def __sub__(self, other):
        return cadd(self, cneg(other))

    def __mul__(self, other):
        return cmul(self, other)

    def __neg__(self):
        return cneg(self)

    def __str__(self):
        return format_closure(self)

    def __repr__(self):
        return f"<{format_closure(self)} in MC{self.n}({self.ring})>"


def _strip(n: int, level: int, body: Matrix) -> tuple[int, Matrix]:
    while level > 0:
        inner = block_scalar_strip(body, n)
        if inner is None:
            break
        body, level = inner, level - 1
    return level, body


def inject(ring: Ring, n: int, level: int, body: Matrix, *, allow_n1: bool = False) -> ClosureElement:
    """The canonical injection of a level-``level`` matrix into the closure.

    Normalizes to the minimal-level representative.  n = 1 collapses the
    construction to R itself and is refused unless ``allow_n1`` is set.
    """
    if n < 2 and not allow_n1:
        raise ValueError("n must be at least 2 (pass allow_n1=True for the degenerate case)")
    if n < 1 or level < 0:
        raise ValueError("bad closure parameters")
    if body.ring != ring:
        raise RingMismatchError("body is not over the stated base ring")
    if not body.is_square() or body.rows != n**level:
        raise ValueError(f"body size {body.rows}x{body.cols} is not {n}^{level} square")
    lvl, b = _strip(n, level, body)
    return ClosureElement(ring, n, lvl, b)


def embed(a: RingElement, n: int) -> ClosureElement:
    """Level-0 injection of a base element."""
    return inject(a.ring, n, 0, Matrix(a.ring, 1, 1, (a,)))


def czero(ring: Ring, n: int) -> ClosureElement:
    return embed(ring.zero, n)


def cone(ring: Ring, n: int) -> ClosureElement:
    return embed(ring.one, n)


def lift(x: ClosureElement, level: int) -> Matrix:
    """The level-``level`` representative I_{n^(level-k)} (x) body."""
    if level < x.level:
        raise ValueError(f"cannot lift level {x.level} down to {level}")
    return diag_repeat(x.body, x.n ** (level - x.level))


def _mated(x: ClosureElement, y: ClosureElement) -> int:
    if not isinstance(y, ClosureElement):
        raise TypeError("expected a ClosureElement")
    if x.ring != y.ring or x.n != y.n:
        raise RingMismatchError("closure elements over different bases")
    return max(x.level, y.level)


def cadd(x: ClosureElement, y: ClosureElement) -> ClosureElement:
    m = _mated(x, y)
    return inject(x.ring, x.n, m, lift(x, m) + lift(y, m), allow_n1=True)


def cmul(x: ClosureElement, y: ClosureElement) -> ClosureElement:
    m = _mated(x, y)
    return inject(x.ring, x.n, m, lift(x, m) * lift(y, m), allow_n1=True)


def cneg(x: ClosureElement) -> ClosureElement:
    return inject(x.ring, x.n, x.level, -x.body, allow_n1=True)


def cmap(f: RingMorphism, x: ClosureElement) -> ClosureElement:
    """Apply a base-ring morphism level-wise; the closure functor on maps."""
    if x.ring != f.source:
        raise RingMismatchError("element is not over the morphism source")
    return inject(f.target, x.n, x.level, mat_map(f, x.body), allow_n1=True)


def cunit(x: ClosureElement) -> tuple[bool, Optional[ClosureElement]]:
    """Unit test: invertibility of the body at its own level.

    Units of the closure are exactly the images of level-wise matrix
    units groups, so no search above the element's level is needed.
    """
    inv = mat_inverse(x.body)
    if inv is None:
        return False, None
    return True, inject(x.ring, x.n, x.level, inv, allow_n1=True)


def center_check(x: ClosureElement, sample_bound: Optional[int] = None) -> bool:
    """True iff ``x`` commutes with a generating set of its level.

    Matrix units force the scalar-diagonal shape; scalar diagonals over R
    force the scalar into the center of R.  Together the two families
    generate M_{n^k}(R), so commuting with them is equivalent to being
    central.  ``sample_bound`` caps the scalar sweep for large bases.
    """
    ring, k = x.ring, x.n**x.level
    body = x.body
    for i in range(k):
        for j in range(k):
            e = mat_unit(ring, k, i, j)
            if body * e != e * body:
                return False
    els = ring.elements()
    if sample_bound is not None:
        els = els[:sample_bound]
    for a in els:
        s = scalar_matrix(ring, k, a)
        if body * s != s * body:
            return False
    return True


def center_section(x: ClosureElement) -> RingElement:
    """The central base element with level-0 injection equal to ``x``.

    Exists exactly when ``x`` is central: central elements are scalar
    diagonals over Cen(R), and those normalize to level 0.
    """
    if not center_check(x):
        raise NotCentralError(f"{x} is not central")
    if x.level != 0:
        raise RingError("central element did not normalize to level 0")
    return x.body.entry(0, 0)


# ---------------------------------------------------------------------------
# the closure as a ring handle (so closure elements can be entries/coefficients)


@dataclass(frozen=True)
class ClosureRing(Ring):
    """MC_n(base) as a ring handle; payloads are ClosureElement values.

    Countably infinite for nonzero finite bases, so never enumerable.
    """

    base: Ring
    n: int

    enumerable = False

    def order(self):
        return 1 if self.base.order() == 1 else None

    @cached_property
    def zero(self):
        return self.element(czero(self.base, self.n))

    @cached_property
    def one(self):
        return self.element(cone(self.base, self.n))

    def add(self, a, b):
        return self.element(cadd(a.payload, b.payload))

    def mul(self, a, b):
        return self.element(cmul(a.payload, b.payload))

    def neg(self, a):
        return self.element(cneg(a.payload))

    def unit_inverse(self, a):
        ok, inv = cunit(a.payload)
        return self.element(inv) if ok else None

    def sample(self, rng, size: int = 2):
        return self.element(random_closure_element(self.base, self.n, rng, max_level=1, entry_size=size))

    def format_element(self, a):
        return format_closure(a.payload)

    def spec(self):
        return f"MC{self.n}({self.base.spec()})"


def format_closure(x: ClosureElement) -> str:
    if x.level == 0:
        return x.ring.format_element(x.body.entry(0, 0))
    return f"@{x.level}{x.body}"


# ---------------------------------------------------------------------------
# flattening MC_n(MC_n(R)) -> MC_n(R) and its inverse
#
# A doubly-closed element lives in the colimit over pairs (outer level k,
# inner level j); outer transitions prepend a base-n digit to the outer
# index word, inner transitions prepend one to the inner word.  Flattening
# at a common diagonal level t and then interleaving the two digit words
# (a1..at, r1..rt) |-> a1 r1 a2 r2 .. at rt turns the diagonal transition
# into the standard two-step transition exactly, which is what makes the
# collapse a ring isomorphism rather than merely a reindexing.  Without
# the interleave the map fails additivity on mixed-level inputs.


def _digits(value: int, width: int, n: int) -> list[int]:
    out = [0] * width
    for pos in range(width - 1, -1, -1):
        out[pos] = value % n
        value //= n
    return out


def _interleave_positions(t: int, n: int) -> list[int]:
    """position -> interleaved position for index words of length 2t."""
    size = n ** (2 * t)
    out = []
    for idx in range(size):
        word = _digits(idx, 2 * t, n)
        shuffled = []
        for pos in range(t):
            shuffled.append(word[pos])
            shuffled.append(word[t + pos])
        acc = 0
        for d in shuffled:
            acc = acc * n + d
        out.append(acc)
    return out


def flatten_closure(x: ClosureElement) -> ClosureElement:
    """Collapse a closure element whose base is itself a closure ring.

    Lifts the outer matrix and all inner entries to a common diagonal
    level t, flattens blocks outer-major, applies the digit interleave,
    and normalizes.  The result is a ring isomorphism onto the closure of
    the underlying base, with :func:`closure_section` as exact two-sided
    inverse.
    """
    cring = x.ring
    if not isinstance(cring, ClosureRing):
        raise RingError("flatten_closure needs a closure-ring base")
    if cring.n != x.n:
        raise RingMismatchError("mixed n between the two closure layers")
    base, n = cring.base, cring.n
    t = max([x.level] + [c.payload.level for c in x.body.cells])
    outer_body = diag_repeat(x.body, n ** (t - x.level))
    size = n**t
    inner_ring = MatrixRing(base, size)
    wrapped = tuple(inner_ring.element(lift(c.payload, t)) for c in outer_body.cells)
    flat = flatten(Matrix(inner_ring, size, size, wrapped))
    perm = _interleave_positions(t, n)
    total = size * size
    cells = [base.zero] * (total * total)
    for i in range(total):
        pi = perm[i] * total
        row = flat.cells[i * total : (i + 1) * total]
        for j in range(total):
            cells[pi + perm[j]] = row[j]
    return inject(base, n, 2 * t, Matrix(base, total, total, tuple(cells)))


def closure_section(y: ClosureElement) -> ClosureElement:
    """The exact inverse of :func:`flatten_closure`.

    Lifts to an even level 2t, undoes the interleave, splits into t-outer
    blocks of t-inner matrices, and rewraps the blocks as closure classes.
    """
    base, n = y.ring, y.n
    t = (y.level + 1) // 2
    target = lift(y, 2 * t)
    size = n**t
    total = size * size
    perm = _interleave_positions(t, n)
    cells = [base.zero] * (total * total)
    for i in range(total):
        pi = perm[i] * total
        for j in range(total):
            cells[i * total + j] = target.cells[pi + perm[j]]
    unshuffled = Matrix(base, total, total, tuple(cells))
    blocks = unflatten(unshuffled, size)
    cring = ClosureRing(base, n)
    outer_cells = tuple(
        cring.element(inject(base, n, t, b.payload)) for b in blocks.cells
    )
    return inject(cring, n, t, Matrix(cring, size, size, outer_cells))


def embed_section(y: ClosureElement) -> ClosureElement:
    """Embed MC_n(R) into MC_n(MC_n(R)) with level-0 entries.

    An injective ring morphism (the body's entries become level-0 closure
    classes); unlike :func:`closure_section` it is not surjective, so it
    cannot invert the flattening.
    """
    cring = ClosureRing(y.ring, y.n)
    wrapped = tuple(cring.element(embed(c, y.n)) for c in y.body.cells)
    return inject(cring, y.n, y.level, Matrix(cring, y.body.rows, y.body.cols, wrapped))


# ---------------------------------------------------------------------------
# enumeration and sampling


def enumerate_closure_classes(ring: Ring, n: int, max_level: int) -> Iterator[ClosureElement]:
    """All canonical classes with level <= max_level, level-major order.

    A level-k body represents a canonical class iff it is not a single
    block-diagonal repeat; one strip test suffices since the class of a
    reducible body is already listed at a lower level.
    """
    for a in ring.elements():
        yield embed(a, n)
    for level in range(1, max_level + 1):
        k = n**level
        for cells in _iproduct(ring.elements(), repeat=k * k):
            body = Matrix(ring, k, k, cells)
            if block_scalar_strip(body, n) is None:
                yield ClosureElement(ring, n, level, body)


def random_closure_element(
    ring: Ring, n: int, rng, max_level: int = 2, entry_size: int = 2
) -> ClosureElement:
    level = rng.randrange(max_level + 1)
    k = n**level
    cells = tuple(ring.sample(rng, entry_size) for _ in range(k * k))
    return inject(ring, n, level, Matrix(ring, k, k, cells))
