"""Exact arithmetic over a zoo of finitely-representable unital rings.

A ring is an immutable, hashable description (modular integers, prime
fields, binary products, matrix rings, cyclic group rings, polynomial and
Laurent rings); an element is a thin wrapper around a canonical payload.
Canonical payloads make element equality structural, so every higher layer
reduces its own equality question to ``==`` on elements.

All values are immutable after construction and every operation is a pure
function; the module is safe for concurrent use without synchronization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as _iproduct
from typing import Iterator, Optional


class RingError(Exception):
    """Base class for ring arithmetic errors."""


class RingMismatchError(RingError):
    """Operands belong to different rings."""


class NotEnumerableError(RingError):
    """Operation requires enumerating an infinite (or unbounded) ring."""


class NotDecidableError(RingError):
    """No decision procedure for this ring (no enumeration, no fast path)."""


class BoundExceededError(RingError):
    """A documented desk-scale bound (order or candidate budget) was exceeded."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class RingElement:
    """An element of a ring: handle plus canonical payload.

    Immutable by convention; hash is cached.  Arithmetic operators check
    that both operands live in the same ring and raise
    ``RingMismatchError`` otherwise.
    """

    __slots__ = ("ring", "payload", "_hash")

    def __init__(self, ring: "Ring", payload):
        self.ring = ring
        self.payload = payload
        self._hash = None

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, RingElement)
            and self.ring == other.ring
            and self.payload == other.payload
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.ring, self.payload))
        return h

    def _mate(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            raise TypeError(f"cannot combine RingElement with {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        return self.ring.add(self, self._mate(other))

    def __sub__(self, other):
        return self.ring.sub(self, self._mate(other))

    def __mul__(self, other):
        return self.ring.mul(self, self._mate(other))

    def __neg__(self):
        return self.ring.neg(self)

    def is_zero(self) -> bool:
        return self == self.ring.zero

    def __str__(self):
        return self.ring.format_element(self)

    def __repr__(self):
        return f"<{self.ring.format_element(self)} : {self.ring}>"


class Ring:
    """Abstract base for ring handles.

    Subclasses are frozen dataclasses, so handles compare and hash
    structurally.  Payload conventions are documented per subclass; the
    shared contract is that payloads are canonical and hashable.
    """

    enumerable: bool = False

    # -- hooks -----------------------------------------------------------
    def order(self) -> Optional[int]:
        """Number of elements, or None when infinite."""
        raise NotImplementedError

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        raise NotImplementedError

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        raise NotImplementedError

    def neg(self, a: RingElement) -> RingElement:
        raise NotImplementedError

    def _iter_elements(self) -> Iterator[RingElement]:
        raise NotEnumerableError(f"ring not enumerable: {self}")

    def format_element(self, a: RingElement) -> str:
        raise NotImplementedError

    def spec(self) -> str:
        """Canonical ring-spec string (round-trips through the parser)."""
        raise NotImplementedError

    # -- shared API ------------------------------------------------------
    def element(self, payload) -> RingElement:
        return RingElement(self, payload)

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        return self.add(a, self.neg(b))

    @cached_property
    def zero(self) -> RingElement:
        raise NotImplementedError

    @cached_property
    def one(self) -> RingElement:
        raise NotImplementedError

    @cached_property
    def _element_tuple(self) -> tuple:
        if not self.enumerable:
            raise NotEnumerableError(f"ring not enumerable: {self}")
        return tuple(self._iter_elements())

    def elements(self) -> tuple:
        """All elements, each exactly once, in a fixed deterministic order."""
        return self._element_tuple

    @cached_property
    def element_index(self) -> dict:
        """Element -> position in elements(); canonical sort key for sets."""
        return {a: i for i, a in enumerate(self.elements())}

    def unit_inverse(self, a: RingElement) -> Optional[RingElement]:
        """Two-sided inverse of ``a``, or None if ``a`` is not a unit.

        Default is a one-sided brute-force search over an enumerable ring;
        in a finite ring a one-sided inverse is automatically two-sided
        (left multiplication by a left-invertible element is injective,
        hence bijective), which halves the search.
        """
        if not self.enumerable:
            raise NotDecidableError(f"unit test not decidable for {self}")
        one = self.one
        for b in self.elements():
            if self.mul(a, b) == one:
                if self.mul(b, a) != one:
                    raise RingError(f"one-sided inverse not two-sided in {self}")
                return b
        return None

    @cached_property
    def units(self) -> frozenset:
        return frozenset(a for a in self.elements() if self.unit_inverse(a) is not None)

    @cached_property
    def central_elements(self) -> tuple:
        """Elements commuting with everything, in enumeration order."""
        els = self.elements()
        return tuple(a for a in els if all(self.mul(a, r) == self.mul(r, a) for r in els))

    def sample(self, rng, size: int = 2) -> RingElement:
        """Seeded random element; ``size`` bounds formal-ring supports."""
        els = self.elements()
        return els[rng.randrange(len(els))]

    def __str__(self):
        return self.spec()


# ---------------------------------------------------------------------------
# modular rings and prime fields


@dataclass(frozen=True)
class ModularRing(Ring):
    """Z/m with payloads the reduced residues 0..m-1.

    m = 1 is the zero ring and is permitted only as an explicit degenerate
    case (its one equals its zero).
    """

    m: int

    enumerable = True

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("modulus must be a positive integer")

    @cached_property
    def _els(self) -> tuple:
        return tuple(RingElement(self, i) for i in range(self.m))

    def el(self, i: int) -> RingElement:
        return self._els[i % self.m]

    def order(self):
        return self.m

    @cached_property
    def zero(self):
        return self._els[0]

    @cached_property
    def one(self):
        return self._els[1 % self.m]

    def add(self, a, b):
        return self._els[(a.payload + b.payload) % self.m]

    def mul(self, a, b):
        return self._els[(a.payload * b.payload) % self.m]

    def neg(self, a):
        return self._els[-a.payload % self.m]

    def _iter_elements(self):
        return iter(self._els)

    def unit_inverse(self, a):
        try:
            return self._els[pow(a.payload, -1, self.m)]
        except ValueError:
            return None

    def format_element(self, a):
        return str(a.payload)

    def spec(self):
        return f"Z/{self.m}"


@dataclass(frozen=True)
class PrimeField(ModularRing):
    """GF(p) for prime p; same payloads as Z/p, distinct handle."""

    def __post_init__(self):
        if not is_prime(self.m):
            raise ValueError(f"non-prime modulus for GF: {self.m}")

    @property
    def p(self) -> int:
        return self.m

    def spec(self):
        return f"GF({self.m})"


def field_characteristic(ring: Ring) -> Optional[int]:
    """p when ``ring`` is a prime field or a prime-modulus Z/p, else None."""
    if isinstance(ring, ModularRing) and is_prime(ring.m):
        return ring.m
    return None


# ---------------------------------------------------------------------------
# products


@dataclass(frozen=True)
class ProductRing(Ring):
    """Binary product; payloads are (left element, right element) pairs."""

    left: Ring
    right: Ring

    @property
    def enumerable(self):
        return self.left.enumerable and self.right.enumerable

    def order(self):
        lo, ro = self.left.order(), self.right.order()
        if lo is None or ro is None:
            return None
        return lo * ro

    @cached_property
    def zero(self):
        return self.element((self.left.zero, self.right.zero))

    @cached_property
    def one(self):
        return self.element((self.left.one, self.right.one))

    def add(self, a, b):
        return self.element(
            (self.left.add(a.payload[0], b.payload[0]), self.right.add(a.payload[1], b.payload[1]))
        )

    def mul(self, a, b):
        return self.element(
            (self.left.mul(a.payload[0], b.payload[0]), self.right.mul(a.payload[1], b.payload[1]))
        )

    def neg(self, a):
        return self.element((self.left.neg(a.payload[0]), self.right.neg(a.payload[1])))

    def _iter_elements(self):
        for l in self.left.elements():
            for r in self.right.elements():
                yield self.element((l, r))

    def unit_inverse(self, a):
        li = self.left.unit_inverse(a.payload[0])
        if li is None:
            return None
        ri = self.right.unit_inverse(a.payload[1])
        if ri is None:
            return None
        return self.element((li, ri))

    def sample(self, rng, size: int = 2):
        return self.element((self.left.sample(rng, size), self.right.sample(rng, size)))

    def format_element(self, a):
        return f"({self.left.format_element(a.payload[0])},{self.right.format_element(a.payload[1])})"

    def spec(self):
        return f"{self.left.spec()}x{self.right.spec()}"


# ---------------------------------------------------------------------------
# formal-sum rings: cyclic group rings, Laurent rings, polynomial rings
#
# Payloads are tuples of (exponent, coefficient) pairs, sorted by exponent,
# with no zero coefficients (the canonical finite-support table).


class _FormalRing(Ring):
    inner: Ring

    @property
    def symbol(self) -> str:
        raise NotImplementedError

    def _reduce_exp(self, e: int) -> int:
        return e

    def _check_exp(self, e: int):
        pass

    def _canon(self, table: dict) -> tuple:
        return tuple(
            (e, c) for e, c in sorted(table.items()) if c != self.inner.zero
        )

    def from_table(self, table: dict) -> RingElement:
        """Element from {exponent: coefficient}; exponents get reduced."""
        acc: dict = {}
        for e, c in table.items():
            self._check_exp(e)
            e = self._reduce_exp(e)
            acc[e] = self.inner.add(acc[e], c) if e in acc else c
        return self.element(self._canon(acc))

    def monomial(self, exp: int, coeff: Optional[RingElement] = None) -> RingElement:
        return self.from_table({exp: self.inner.one if coeff is None else coeff})

    def coefficient(self, a: RingElement, exp: int) -> RingElement:
        exp = self._reduce_exp(exp)
        for e, c in a.payload:
            if e == exp:
                return c
        return self.inner.zero

    def support(self, a: RingElement) -> tuple:
        return tuple(e for e, _ in a.payload)

    @cached_property
    def zero(self):
        return self.element(())

    @cached_property
    def one(self):
        return self.from_table({0: self.inner.one})

    def add(self, a, b):
        acc = dict(a.payload)
        inner = self.inner
        for e, c in b.payload:
            acc[e] = inner.add(acc[e], c) if e in acc else c
        return self.element(self._canon(acc))

    def mul(self, a, b):
        acc: dict = {}
        inner = self.inner
        for e1, c1 in a.payload:
            for e2, c2 in b.payload:
                e = self._reduce_exp(e1 + e2)
                p = inner.mul(c1, c2)
                acc[e] = inner.add(acc[e], p) if e in acc else p
        return self.element(self._canon(acc))

    def neg(self, a):
        inner = self.inner
        return self.element(tuple((e, inner.neg(c)) for e, c in a.payload))

    def format_element(self, a):
        if not a.payload:
            return "0"
        inner, sym = self.inner, self.symbol
        parts = []
        for e, c in a.payload:
            cs = inner.format_element(c)
            if e == 0:
                parts.append(cs)
            else:
                power = sym if e == 1 else f"{sym}^{e}"
                parts.append(power if c == inner.one else f"{cs}*{power}")
        return "+".join(parts)


@dataclass(frozen=True)
class GroupRing(_FormalRing):
    """R[G] for G cyclic of order m (symbol g) or infinite cyclic (symbol x).

    ``group_order`` None means the infinite cyclic group, i.e. the Laurent
    ring R[x, x^-1]; exponents then range over all integers.
    """

    inner: Ring
    group_order: Optional[int]

    def __post_init__(self):
        if self.group_order is not None and self.group_order < 1:
            raise ValueError("cyclic group order must be positive")

    @property
    def symbol(self):
        return "g" if self.group_order is not None else "x"

    @property
    def enumerable(self):
        return self.group_order is not None and self.inner.enumerable

    def _reduce_exp(self, e):
        return e % self.group_order if self.group_order is not None else e

    def order(self):
        if self.group_order is None:
            return None
        io = self.inner.order()
        return None if io is None else io**self.group_order

    def generator(self) -> RingElement:
        return self.monomial(1)

    def _iter_elements(self):
        if self.group_order is None:
            raise NotEnumerableError(f"ring not enumerable: {self}")
        exps = range(self.group_order)
        for coeffs in _iproduct(self.inner.elements(), repeat=self.group_order):
            yield self.from_table(dict(zip(exps, coeffs)))

    def sample(self, rng, size: int = 2):
        if self.group_order is not None:
            exps = range(self.group_order)
        else:
            exps = range(-size, size + 1)
        return self.from_table({e: self.inner.sample(rng, size) for e in exps})

    def spec(self):
        inner = _group_inner_spec(self.inner)
        if self.group_order is None:
            return f"{inner}[x,x^-1]"
        return f"{inner}[C{self.group_order}]"


@dataclass(frozen=True)
class PolynomialRing(_FormalRing):
    """R[x]: finite-support tables over exponents >= 0; never enumerable."""

    inner: Ring

    enumerable = False

    @property
    def symbol(self):
        return "x"

    def _check_exp(self, e):
        if e < 0:
            raise ValueError("polynomial exponents must be nonnegative")

    def order(self):
        io = self.inner.order()
        return 1 if io == 1 else None

    def variable(self) -> RingElement:
        return self.monomial(1)

    def sample(self, rng, size: int = 2):
        return self.from_table({e: self.inner.sample(rng, size) for e in range(size + 1)})

    def spec(self):
        return f"{_group_inner_spec(self.inner)}[x]"


def _group_inner_spec(inner: Ring) -> str:
    # postfixes bind tighter than the product combinator
    s = inner.spec()
    return f"({s})" if isinstance(inner, ProductRing) else s


# ---------------------------------------------------------------------------
# spec-level operation wrappers


def zero(ring: Ring) -> RingElement:
    return ring.zero


def one(ring: Ring) -> RingElement:
    return ring.one


def enumerate_elements(ring: Ring) -> tuple:
    """All elements of an enumerable ring, exactly once each."""
    return ring.elements()


def is_unit(a: RingElement) -> tuple[bool, Optional[RingElement]]:
    """(True, inverse witness) when ``a`` is a unit, else (False, None)."""
    inv = a.ring.unit_inverse(a)
    return (inv is not None), inv


def center(ring: Ring) -> tuple:
    """The central elements {a : ar = ra for all r}, enumeration-ordered."""
    return ring.central_elements


def random_element(ring: Ring, rng, size: int = 2) -> RingElement:
    return ring.sample(rng, size)


def check_ring_axioms(ring: Ring, rng=None, samples: int = 1000) -> list[str]:
    """Spot-check the ring axioms; returns a list of failure descriptions.

    Exhaustive over all triples for rings of order <= 16, otherwise over
    ``samples`` seeded random triples (``rng`` required in that case).
    """
    failures: list[str] = []
    o = ring.order() if ring.enumerable else None
    if o is not None and o <= 16:
        els = ring.elements()
        triples = _iproduct(els, els, els)
    else:
        if rng is None:
            raise ValueError("rng required for sampled axiom checking")
        triples = (
            (ring.sample(rng), ring.sample(rng), ring.sample(rng)) for _ in range(samples)
        )
    zero_, one_ = ring.zero, ring.one
    for a, b, c in triples:
        if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)):
            failures.append(f"add not associative at ({a},{b},{c})")
        if ring.add(a, b) != ring.add(b, a):
            failures.append(f"add not commutative at ({a},{b})")
        if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)):
            failures.append(f"mul not associative at ({a},{b},{c})")
        if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)):
            failures.append(f"left distributivity fails at ({a},{b},{c})")
        if ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)):
            failures.append(f"right distributivity fails at ({a},{b},{c})")
        if ring.mul(one_, a) != a or ring.mul(a, one_) != a:
            failures.append(f"identity law fails at {a}")
        if ring.add(a, ring.neg(a)) != zero_:
            failures.append(f"additive inverse fails at {a}")
        if failures:
            break
    return failures
