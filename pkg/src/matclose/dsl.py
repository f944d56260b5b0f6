"""Textual interfaces: ring specs, element literals, closure expressions.

Ring-spec grammar (UTF-8, whitespace-insensitive; errors carry byte offsets):

    ring    := item ('x' item)*                 -- binary product, left-assoc
    item    := atom postfix*
    atom    := 'Z/' int | 'GF(' int ')' | 'M' int '(' ring ')' | '(' ring ')'
    postfix := '[C' int ']' | '[x]' | '[x,x^-1]'

Element literals follow the ring shape: integers for Z/m and GF(p),
``(a,b)`` for products, ``[[a,b],[c,d]]`` for matrix rings, and sums of
``coeff*sym^exp`` terms for group/polynomial/Laurent rings (symbol ``g``
for finite cyclic groups, ``x`` otherwise).  Closure elements are written
``@k [[...]]`` with a bare base literal as the level-0 shorthand.
"""

from __future__ import annotations

from typing import Optional

from .closure import ClosureElement, ClosureRing, embed, inject
from .matrices import Matrix, MatrixRing
from .modules import FiniteModule, direct_sum, quotient_module, regular_module, zero_module
from .rings import (
    GroupRing,
    ModularRing,
    PolynomialRing,
    PrimeField,
    ProductRing,
    Ring,
    RingElement,
    is_prime,
)


class ParseError(ValueError):
    """Syntax error with the byte offset of the offending position."""

    def __init__(self, message: str, text: str, pos: int):
        self.offset = len(text[:pos].encode("utf-8"))
        super().__init__(f"{message} (byte {self.offset})")


class _Cursor:
    __slots__ = ("text", "i")

    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self, lit: str) -> bool:
        self.skip_ws()
        if self.text.startswith(lit, self.i):
            self.i += len(lit)
            return True
        return False

    def expect(self, lit: str):
        if not self.take(lit):
            self.fail(f"expected {lit!r}")

    def integer(self, signed: bool = False) -> int:
        self.skip_ws()
        start = self.i
        if signed and self.i < len(self.text) and self.text[self.i] == "-":
            self.i += 1
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start or self.text[start:self.i] == "-":
            self.fail("expected an integer")
        return int(self.text[start:self.i])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.i >= len(self.text)

    def fail(self, message: str):
        raise ParseError(message, self.text, self.i)


# ---------------------------------------------------------------------------
# ring specs


def build_ring(spec: str) -> Ring:
    """Parse a ring-spec string into a ring handle."""
    cur = _Cursor(spec)
    ring = _ring(cur)
    if not cur.at_end():
        cur.fail("unexpected trailing input")
    return ring


def _ring(cur: _Cursor) -> Ring:
    left = _item(cur)
    while cur.peek() == "x":
        cur.take("x")
        left = ProductRing(left, _item(cur))
    return left


def _item(cur: _Cursor) -> Ring:
    ring = _atom(cur)
    while cur.peek() == "[":
        cur.take("[")
        if cur.take("C"):
            m = cur.integer()
            cur.expect("]")
            ring = GroupRing(ring, m)
        elif cur.take("x"):
            if cur.take("]"):
                ring = PolynomialRing(ring)
            else:
                cur.expect(",")
                cur.expect("x")
                cur.expect("^")
                cur.expect("-")
                cur.expect("1")
                cur.expect("]")
                ring = GroupRing(ring, None)
        else:
            cur.fail("expected 'C<m>', 'x' or 'x,x^-1' after '['")
    return ring


def _atom(cur: _Cursor) -> Ring:
    c = cur.peek()
    if c == "Z":
        cur.expect("Z")
        cur.expect("/")
        pos = cur.i
        m = cur.integer()
        if m < 1:
            raise ParseError("modulus must be positive", cur.text, pos)
        return ModularRing(m)
    if c == "G":
        cur.expect("GF")
        cur.expect("(")
        pos = cur.i
        p = cur.integer()
        if not is_prime(p):
            raise ParseError("non-prime modulus for GF", cur.text, pos)
        cur.expect(")")
        return PrimeField(p)
    if c == "M":
        cur.expect("M")
        k = cur.integer()
        cur.expect("(")
        inner = _ring(cur)
        cur.expect(")")
        return MatrixRing(inner, k)
    if c == "(":
        cur.expect("(")
        inner = _ring(cur)
        cur.expect(")")
        return inner
    cur.fail("expected a ring atom (Z/m, GF(p), M<k>(...), or parentheses)")


# ---------------------------------------------------------------------------
# element literals


def parse_element(ring: Ring, text: str) -> RingElement:
    cur = _Cursor(text)
    el = _element(cur, ring)
    if not cur.at_end():
        cur.fail("unexpected trailing input")
    return el


def _element(cur: _Cursor, ring: Ring) -> RingElement:
    if isinstance(ring, ModularRing):
        return ring.el(cur.integer(signed=True))
    if isinstance(ring, ProductRing):
        cur.expect("(")
        left = _element(cur, ring.left)
        cur.expect(",")
        right = _element(cur, ring.right)
        cur.expect(")")
        return ring.element((left, right))
    if isinstance(ring, MatrixRing):
        return ring.element(_matrix(cur, ring.inner, ring.size, ring.size))
    if isinstance(ring, (GroupRing, PolynomialRing)):
        return _formal_sum(cur, ring)
    if isinstance(ring, ClosureRing):
        return ring.element(_closure_literal(cur, ring.base, ring.n))
    cur.fail(f"no element literal syntax for {ring}")


def _matrix(cur: _Cursor, ring: Ring, rows: int, cols: int) -> Matrix:
    cur.expect("[")
    cells = []
    for i in range(rows):
        if i:
            cur.expect(",")
        cur.expect("[")
        for j in range(cols):
            if j:
                cur.expect(",")
            cells.append(_element(cur, ring))
        cur.expect("]")
    cur.expect("]")
    return Matrix(ring, rows, cols, tuple(cells))


def _formal_sum(cur: _Cursor, ring) -> RingElement:
    acc = ring.zero
    first = True
    while True:
        negate = False
        if cur.take("+"):
            pass
        elif cur.take("-"):
            negate = True
        elif not first:
            break
        first = False
        term = _formal_term(cur, ring)
        acc = ring.add(acc, ring.neg(term) if negate else term)
        nxt = cur.peek()
        if nxt not in "+-":
            break
    return acc


def _formal_term(cur: _Cursor, ring) -> RingElement:
    sym = ring.symbol
    if cur.peek() == sym:
        return ring.monomial(_sym_power(cur, ring))
    coeff = _element(cur, ring.inner)
    if cur.take("*"):
        return ring.monomial(_sym_power(cur, ring), coeff)
    if cur.peek() == sym:
        cur.fail(f"use '*' between coefficient and {sym}")
    return ring.from_table({0: coeff})


def _sym_power(cur: _Cursor, ring) -> int:
    cur.expect(ring.symbol)
    if cur.take("^"):
        return cur.integer(signed=True)
    return 1


# ---------------------------------------------------------------------------
# closure-element literals and expressions


def _closure_literal(cur: _Cursor, base: Ring, n: int) -> ClosureElement:
    if cur.take("@"):
        level = cur.integer()
        size = n**level
        return inject(base, n, level, _matrix(cur, base, size, size))
    return embed(_element(cur, base), n)


def parse_closure_element(base: Ring, n: int, text: str) -> ClosureElement:
    cur = _Cursor(text)
    el = _closure_literal(cur, base, n)
    if not cur.at_end():
        cur.fail("unexpected trailing input")
    return el


def eval_closure_expr(base: Ring, n: int, text: str) -> ClosureElement:
    """One-shot evaluation of a +,-,* expression over MC_n(base).

    Literals are ``@k [[...]]`` injections and bare base-element literals
    (level-0 shorthand); parentheses group subexpressions.
    """
    cur = _Cursor(text)
    val = _cexpr(cur, base, n)
    if not cur.at_end():
        cur.fail("unexpected trailing input")
    return val


def _cexpr(cur: _Cursor, base: Ring, n: int) -> ClosureElement:
    acc = _cterm(cur, base, n)
    while True:
        if cur.take("+"):
            acc = acc + _cterm(cur, base, n)
        elif cur.take("-"):
            acc = acc - _cterm(cur, base, n)
        else:
            return acc


def _cterm(cur: _Cursor, base: Ring, n: int) -> ClosureElement:
    acc = _cfactor(cur, base, n)
    while cur.take("*"):
        acc = acc * _cfactor(cur, base, n)
    return acc


def _cfactor(cur: _Cursor, base: Ring, n: int) -> ClosureElement:
    if cur.take("-"):
        return -_cfactor(cur, base, n)
    if cur.peek() == "(":
        # A '(' opens either a grouped expression or a product-ring literal;
        # try the literal first and fall back on backtracking.
        mark = cur.i
        try:
            return _closure_literal(cur, base, n)
        except ParseError:
            cur.i = mark
        cur.expect("(")
        val = _cexpr(cur, base, n)
        cur.expect(")")
        return val
    return _closure_literal(cur, base, n)


# ---------------------------------------------------------------------------
# module specs


def parse_module(ring: Ring, text: str) -> FiniteModule:
    """Parse a module spec over ``ring``: R^k, Z/d, GF(p), 0, and (+) sums.

    An optional ``over <ringspec>`` suffix is accepted and must match the
    ambient ring.
    """
    cur = _Cursor(text)
    mods = _module_summands(cur, ring)
    out = mods[0]
    for m in mods[1:]:
        out = direct_sum(out, m)
    return out


def parse_module_pair(ring: Ring, text: str) -> tuple[FiniteModule, FiniteModule]:
    """Split a (+)-sum spec into (first summand, fold of the rest)."""
    cur = _Cursor(text)
    mods = _module_summands(cur, ring)
    if len(mods) < 2:
        raise ParseError("expected at least two (+) summands", text, 0)
    right = mods[1]
    for m in mods[2:]:
        right = direct_sum(right, m)
    return mods[0], right


def _module_summands(cur: _Cursor, ring: Ring) -> list[FiniteModule]:
    mods = [_module_atom(cur, ring)]
    while cur.take("(+)"):
        mods.append(_module_atom(cur, ring))
    if cur.take("over"):
        pos = cur.i
        ambient = _ring(cur)
        if ambient != ring:
            raise ParseError(
                f"module base {ambient} does not match the ambient ring {ring}", cur.text, pos
            )
    if not cur.at_end():
        cur.fail("unexpected trailing input")
    return mods


def _module_atom(cur: _Cursor, ring: Ring) -> FiniteModule:
    c = cur.peek()
    if c == "R":
        cur.expect("R")
        k = 1
        if cur.take("^"):
            k = cur.integer()
        if k == 0:
            return zero_module(ring)
        out = regular_module(ring)
        for _ in range(k - 1):
            out = direct_sum(out, regular_module(ring))
        return out
    if c == "0":
        cur.expect("0")
        return zero_module(ring)
    if c == "Z":
        cur.expect("Z")
        cur.expect("/")
        pos = cur.i
        d = cur.integer()
        return _quotient(cur, ring, d, pos)
    if c == "G":
        cur.expect("GF")
        cur.expect("(")
        pos = cur.i
        p = cur.integer()
        if not is_prime(p):
            raise ParseError("non-prime modulus for GF", cur.text, pos)
        cur.expect(")")
        return _quotient(cur, ring, p, pos)
    cur.fail("expected a module atom (R^k, Z/d, GF(p), or 0)")


def _quotient(cur: _Cursor, ring: Ring, d: int, pos: int) -> FiniteModule:
    if not isinstance(ring, ModularRing) or ring.m % d != 0:
        raise ParseError(
            f"quotient module Z/{d} needs a Z/m base with {d} | m", cur.text, pos
        )
    return quotient_module(ring, d)
