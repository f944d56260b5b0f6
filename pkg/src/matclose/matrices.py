"""Matrices over a ring, the matrix-ring construction, and ring morphisms.

Index convention is zero-based everywhere, including matrix units and the
block/flatten bijection: outer pair (a, b) with inner pair (r, s) maps to
(a*m + r, b*m + s) for inner size m.  This single convention is what makes
the block-diagonal transition maps compose on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as _iproduct
from typing import Callable, Optional

from .rings import (
    BoundExceededError,
    NotDecidableError,
    ProductRing,
    Ring,
    RingElement,
    RingError,
    RingMismatchError,
    field_characteristic,
)

# Documented desk-scale bounds for the brute-force inverse search.
BRUTE_INVERSE_MAX_ORDER = 8
BRUTE_INVERSE_MAX_SIZE = 4


class Matrix:
    """An r x s array of ring elements, row-major, immutable.

    The constructor trusts its arguments (hot path); use ``from_rows`` for
    a validating build.  Square matrices over R form the ring M_k(R),
    exposed as :class:`MatrixRing`.
    """

    __slots__ = ("ring", "rows", "cols", "cells", "_hash")

    def __init__(self, ring: Ring, rows: int, cols: int, cells: tuple):
        if len(cells) != rows * cols:
            raise ValueError("cell count does not match dimensions")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.cells = cells
        self._hash = None

    @classmethod
    def from_rows(cls, ring: Ring, rows: list) -> "Matrix":
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and column")
        width = len(rows[0])
        cells = []
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged rows")
            for e in row:
                if not isinstance(e, RingElement) or e.ring != ring:
                    raise RingMismatchError("entry not in the base ring")
                cells.append(e)
        return cls(ring, len(rows), width, tuple(cells))

    def entry(self, i: int, j: int) -> RingElement:
        return self.cells[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.cells[i * self.cols : (i + 1) * self.cols]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.ring == other.ring
            and self.cells == other.cells
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.ring, self.rows, self.cols, self.cells))
        return h

    def _mate(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._mate(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix addition")
        add = self.ring.add
        cells = tuple(add(x, y) for x, y in zip(self.cells, other.cells))
        return Matrix(self.ring, self.rows, self.cols, cells)

    def __neg__(self):
        neg = self.ring.neg
        return Matrix(self.ring, self.rows, self.cols, tuple(neg(x) for x in self.cells))

    def __sub__(self, other):
        return self + (-self._mate(other))

    def __mul__(self, other):
        other = self._mate(other)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        ring = self.ring
        add, mul = ring.add, ring.mul
        n, m, k = self.rows, self.cols, other.cols
        a, b = self.cells, other.cells
        out = []
        for i in range(n):
            arow = a[i * m : (i + 1) * m]
            for j in range(k):
                acc = mul(arow[0], b[j])
                for t in range(1, m):
                    acc = add(acc, mul(arow[t], b[t * k + j]))
                out.append(acc)
        return Matrix(ring, n, k, tuple(out))

    def map_entries(self, fn: Callable[[RingElement], RingElement], target: Ring) -> "Matrix":
        return Matrix(target, self.rows, self.cols, tuple(fn(x) for x in self.cells))

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(c == z for c in self.cells)

    def __str__(self):
        fmt = self.ring.format_element
        rows = []
        for i in range(self.rows):
            rows.append("[" + ",".join(fmt(c) for c in self.row(i)) + "]")
        return "[" + ",".join(rows) + "]"

    def __repr__(self):
        return f"<{self.rows}x{self.cols} over {self.ring}: {self}>"


def mat_zero(ring: Ring, rows: int, cols: Optional[int] = None) -> Matrix:
    cols = rows if cols is None else cols
    z = ring.zero
    return Matrix(ring, rows, cols, (z,) * (rows * cols))


def mat_identity(ring: Ring, k: int) -> Matrix:
    z, o = ring.zero, ring.one
    cells = tuple(o if i == j else z for i in range(k) for j in range(k))
    return Matrix(ring, k, k, cells)


def mat_unit(ring: Ring, k: int, i: int, j: int) -> Matrix:
    """Matrix unit with a single 1 at zero-based (i, j)."""
    if not (0 <= i < k and 0 <= j < k):
        raise IndexError(f"matrix unit index ({i},{j}) out of range for size {k}")
    z = ring.zero
    cells = [z] * (k * k)
    cells[i * k + j] = ring.one
    return Matrix(ring, k, k, tuple(cells))


def scalar_matrix(ring: Ring, k: int, a: RingElement) -> Matrix:
    z = ring.zero
    cells = tuple(a if i == j else z for i in range(k) for j in range(k))
    return Matrix(ring, k, k, cells)


def diag_repeat(a: Matrix, t: int) -> Matrix:
    """Block-diagonal repeat: I_t (x) A with the zero-based block convention."""
    if t == 1:
        return a
    ring, r, c = a.ring, a.rows, a.cols
    z = ring.zero
    cells = [z] * (t * r * t * c)
    width = t * c
    for blk in range(t):
        for i in range(r):
            base = (blk * r + i) * width + blk * c
            row = a.cells[i * c : (i + 1) * c]
            for j in range(c):
                cells[base + j] = row[j]
    return Matrix(ring, t * r, t * c, tuple(cells))


def block_scalar_strip(a: Matrix, n: int) -> Optional[Matrix]:
    """Return B when ``a`` equals I_n (x) B, else None.  ``a`` square."""
    if not a.is_square() or a.rows % n != 0:
        return None
    m = a.rows // n
    z = a.ring.zero
    cells = a.cells
    width = a.cols
    first = tuple(cells[i * width + j] for i in range(m) for j in range(m))
    for bi in range(n):
        for bj in range(n):
            if bi == bj == 0:
                continue
            off = bi * m * width + bj * m
            if bi == bj:
                for i in range(m):
                    if cells[off + i * width : off + i * width + m] != first[i * m : (i + 1) * m]:
                        return None
            else:
                for i in range(m):
                    for j in range(m):
                        if cells[off + i * width + j] != z:
                            return None
    return Matrix(a.ring, m, m, first)


# ---------------------------------------------------------------------------
# the matrix ring M_k(R)


@dataclass(frozen=True)
class MatrixRing(Ring):
    """M_k(R); payloads are square :class:`Matrix` values of size k over R."""

    inner: Ring
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("matrix size must be positive")

    @property
    def enumerable(self):
        return self.inner.enumerable

    def order(self):
        io = self.inner.order()
        return None if io is None else io ** (self.size * self.size)

    @cached_property
    def zero(self):
        return self.element(mat_zero(self.inner, self.size))

    @cached_property
    def one(self):
        return self.element(mat_identity(self.inner, self.size))

    def add(self, a, b):
        return self.element(a.payload + b.payload)

    def mul(self, a, b):
        return self.element(a.payload * b.payload)

    def neg(self, a):
        return self.element(-a.payload)

    def _iter_elements(self):
        k = self.size
        for cells in _iproduct(self.inner.elements(), repeat=k * k):
            yield self.element(Matrix(self.inner, k, k, cells))

    def unit_inverse(self, a):
        inv = mat_inverse(a.payload)
        return None if inv is None else self.element(inv)

    def sample(self, rng, size: int = 2):
        k = self.size
        cells = tuple(self.inner.sample(rng, size) for _ in range(k * k))
        return self.element(Matrix(self.inner, k, k, cells))

    def format_element(self, a):
        return str(a.payload)

    def spec(self):
        return f"M{self.size}({self.inner.spec()})"


# ---------------------------------------------------------------------------
# flatten / unflatten: M_n(M_m(R)) <-> M_{nm}(R)


def flatten(a: Matrix) -> Matrix:
    """Collapse a matrix over M_m(R) to a matrix over R.

    Entry (i, j) of block (a, b) lands at (a*m + i, b*m + j); for square
    inputs this is the standard ring isomorphism M_n(M_m(R)) -> M_{nm}(R).
    Rectangular block matrices flatten the same way.
    """
    mring = a.ring
    if not isinstance(mring, MatrixRing):
        raise RingError("flatten needs entries in a matrix ring")
    inner, m = mring.inner, mring.size
    rows, cols = a.rows * m, a.cols * m
    z = inner.zero
    cells = [z] * (rows * cols)
    for bi in range(a.rows):
        for bj in range(a.cols):
            block = a.entry(bi, bj).payload
            for i in range(m):
                base = (bi * m + i) * cols + bj * m
                brow = block.cells[i * m : (i + 1) * m]
                for j in range(m):
                    cells[base + j] = brow[j]
    return Matrix(inner, rows, cols, tuple(cells))


def unflatten(b: Matrix, m: int) -> Matrix:
    """Inverse of :func:`flatten` for inner block size ``m``."""
    if b.rows % m or b.cols % m:
        raise ValueError(f"dimensions {b.rows}x{b.cols} not divisible by block size {m}")
    mring = MatrixRing(b.ring, m)
    orows, ocols = b.rows // m, b.cols // m
    out = []
    for bi in range(orows):
        for bj in range(ocols):
            cells = tuple(
                b.entry(bi * m + i, bj * m + j) for i in range(m) for j in range(m)
            )
            out.append(mring.element(Matrix(b.ring, m, m, cells)))
    return Matrix(mring, orows, ocols, tuple(out))


def split_product_matrix(a: Matrix) -> tuple[Matrix, Matrix]:
    """Componentwise split of a matrix over a product ring."""
    pring = a.ring
    if not isinstance(pring, ProductRing):
        raise RingError("split needs entries in a product ring")
    lcells = tuple(c.payload[0] for c in a.cells)
    rcells = tuple(c.payload[1] for c in a.cells)
    return (
        Matrix(pring.left, a.rows, a.cols, lcells),
        Matrix(pring.right, a.rows, a.cols, rcells),
    )


def zip_product_matrix(l: Matrix, r: Matrix, pring: ProductRing) -> Matrix:
    if (l.rows, l.cols) != (r.rows, r.cols):
        raise ValueError("dimension mismatch in product zip")
    cells = tuple(pring.element((x, y)) for x, y in zip(l.cells, r.cells))
    return Matrix(pring, l.rows, l.cols, cells)


# ---------------------------------------------------------------------------
# invertibility


def _field_inverse(a: Matrix, p: int) -> Optional[Matrix]:
    """Gauss-Jordan inverse over a prime-modulus base; None when singular."""
    k = a.rows
    ring = a.ring
    m = [[a.entry(i, j).payload for j in range(k)] for i in range(k)]
    inv = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    for col in range(k):
        piv = next((r for r in range(col, k) if m[r][col] % p), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = pow(m[col][col], -1, p)
        m[col] = [(x * scale) % p for x in m[col]]
        inv[col] = [(x * scale) % p for x in inv[col]]
        for r in range(k):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[col])]
                inv[r] = [(x - f * y) % p for x, y in zip(inv[r], inv[col])]
    el = ring.el  # type: ignore[attr-defined]
    cells = tuple(el(inv[i][j]) for i in range(k) for j in range(k))
    return Matrix(ring, k, k, cells)


def _brute_inverse(a: Matrix) -> Optional[Matrix]:
    """Column-wise right-inverse search; one-sided suffices by finiteness."""
    ring, k = a.ring, a.rows
    if not ring.enumerable:
        raise NotDecidableError(f"invertibility not decidable over {ring}")
    o = ring.order()
    if o > BRUTE_INVERSE_MAX_ORDER or k > BRUTE_INVERSE_MAX_SIZE:
        raise BoundExceededError(
            f"brute-force inverse bounded to order<={BRUTE_INVERSE_MAX_ORDER}, "
            f"size<={BRUTE_INVERSE_MAX_SIZE}; got order {o}, size {k}"
        )
    els = ring.elements()
    add, mul = ring.add, ring.mul
    zero_, one_ = ring.zero, ring.one
    cols = []
    for j in range(k):
        target = tuple(one_ if i == j else zero_ for i in range(k))
        found = None
        for cand in _iproduct(els, repeat=k):
            ok = True
            for i in range(k):
                arow = a.row(i)
                acc = mul(arow[0], cand[0])
                for t in range(1, k):
                    acc = add(acc, mul(arow[t], cand[t]))
                if acc != target[i]:
                    ok = False
                    break
            if ok:
                found = cand
                break
        if found is None:
            return None
        cols.append(found)
    cells = tuple(cols[j][i] for i in range(k) for j in range(k))
    return Matrix(ring, k, k, cells)


def mat_inverse(a: Matrix) -> Optional[Matrix]:
    """Two-sided inverse of a square matrix, or None.

    Fast paths: Gauss-Jordan over prime-modulus bases, flatten reduction
    over matrix-ring bases, componentwise over products.  Otherwise a
    bounded brute-force column search (order <= 8, size <= 4).
    """
    if not a.is_square():
        raise ValueError("inversion needs a square matrix")
    ring = a.ring
    p = field_characteristic(ring)
    if p is not None:
        return _field_inverse(a, p)
    if isinstance(ring, MatrixRing):
        inv = mat_inverse(flatten(a))
        return None if inv is None else unflatten(inv, ring.size)
    if isinstance(ring, ProductRing):
        l, r = split_product_matrix(a)
        li = mat_inverse(l)
        if li is None:
            return None
        ri = mat_inverse(r)
        if ri is None:
            return None
        return zip_product_matrix(li, ri, ring)
    inv = _brute_inverse(a)
    if inv is not None:
        prod = a * inv
        if prod != mat_identity(ring, a.rows) or inv * a != prod:
            raise RingError("one-sided matrix inverse not two-sided")
    return inv


def mat_is_invertible(a: Matrix) -> tuple[bool, Optional[Matrix]]:
    inv = mat_inverse(a)
    return (inv is not None), inv


# ---------------------------------------------------------------------------
# ring morphisms


class RingMorphism:
    """A 1-preserving ring map given by a total element function."""

    __slots__ = ("source", "target", "fn", "name")

    def __init__(self, source: Ring, target: Ring, fn: Callable, name: str = ""):
        self.source = source
        self.target = target
        self.fn = fn
        self.name = name or f"{source}->{target}"

    def __call__(self, a: RingElement) -> RingElement:
        if a.ring != self.source:
            raise RingMismatchError(f"{a.ring} is not the source of {self.name}")
        out = self.fn(a)
        if out.ring != self.target:
            raise RingMismatchError(f"{self.name} produced a value outside {self.target}")
        return out

    def then(self, g: "RingMorphism") -> "RingMorphism":
        if g.source != self.target:
            raise RingMismatchError("morphisms do not compose")
        return RingMorphism(
            self.source, g.target, lambda a: g(self(a)), f"{g.name}.{self.name}"
        )

    def __repr__(self):
        return f"<morphism {self.name}>"


def identity_morphism(ring: Ring) -> RingMorphism:
    return RingMorphism(ring, ring, lambda a: a, f"id_{ring}")


def check_morphism(f: RingMorphism, rng=None, pairs: int = 500) -> list[str]:
    """Verify 1 -> 1, additivity and multiplicativity; list the failures.

    Exhaustive over all pairs for enumerable sources of order <= 64,
    otherwise over ``pairs`` sampled pairs.
    """
    failures = []
    if f(f.source.one) != f.target.one:
        failures.append("does not preserve 1")
    src = f.source
    o = src.order() if src.enumerable else None
    if o is not None and o <= 64:
        it = _iproduct(src.elements(), src.elements())
    else:
        if rng is None:
            raise ValueError("rng required for sampled morphism checking")
        it = ((src.sample(rng), src.sample(rng)) for _ in range(pairs))
    for a, b in it:
        if f(a + b) != f(a) + f(b):
            failures.append(f"not additive at ({a},{b})")
            break
        if f(a * b) != f(a) * f(b):
            failures.append(f"not multiplicative at ({a},{b})")
            break
    return failures


def mat_map(f: RingMorphism, a: Matrix) -> Matrix:
    """Apply a morphism entry-wise; the matrix functor on morphisms."""
    if a.ring != f.source:
        raise RingMismatchError("matrix is not over the morphism source")
    return a.map_entries(f, f.target)
