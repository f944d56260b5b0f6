"""Element-level natural isomorphisms between closures of built rings.

All three formal-ring isomorphisms (polynomial, cyclic group, Laurent)
are the same kernel: lift every coefficient to a common level and swap
the order of (matrix index) and (formal symbol).  The product iso splits
and zips entries componentwise.  Each comes with both directions and a
driver that checks round-trips and ring-morphism behavior on seeded
samples, reporting failures rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .closure import (
    ClosureElement,
    ClosureRing,
    cadd,
    cmul,
    cone,
    inject,
    lift,
    random_closure_element,
)
from .matrices import Matrix, RingMorphism, split_product_matrix, zip_product_matrix
from .rings import (
    GroupRing,
    PolynomialRing,
    ProductRing,
    Ring,
    RingElement,
    RingError,
    RingMismatchError,
)


@dataclass
class IsoWitnessReport:
    """Sampled evidence that a map is an isomorphism of rings."""

    name: str
    rings: tuple[str, ...]
    samples: int
    directions: tuple[str, ...]
    failures: list[str] = field(default_factory=list)

    def passed(self) -> bool:
        return not self.failures

    def note(self, direction: str, detail: str):
        self.failures.append(f"{direction}: {detail}")


# ---------------------------------------------------------------------------
# products


def product_split(x: ClosureElement) -> tuple[ClosureElement, ClosureElement]:
    """Componentwise split at x's level; each side normalizes on its own."""
    pring = x.ring
    if not isinstance(pring, ProductRing):
        raise RingMismatchError("split needs a product base ring")
    l, r = split_product_matrix(x.body)
    return (
        inject(pring.left, x.n, x.level, l),
        inject(pring.right, x.n, x.level, r),
    )


def product_merge(xl: ClosureElement, xr: ClosureElement, pring: ProductRing) -> ClosureElement:
    """Zip the two components at a common level."""
    if xl.ring != pring.left or xr.ring != pring.right:
        raise RingMismatchError("components do not match the product ring")
    if xl.n != xr.n:
        raise RingMismatchError("mixed n between components")
    m = max(xl.level, xr.level)
    body = zip_product_matrix(lift(xl, m), lift(xr, m), pring)
    return inject(pring, xl.n, m, body)


# ---------------------------------------------------------------------------
# formal rings: shared transpose kernel


def formal_to_closure(p: RingElement) -> ClosureElement:
    """MC_n(R)-coefficient formal element -> closure element over F(R).

    Lifts the coefficients to a common level m and forms the single
    n^m-size matrix whose (i, j) entry collects the (i, j) slots of every
    coefficient against its symbol power.
    """
    fring = p.ring
    if not isinstance(fring, (GroupRing, PolynomialRing)):
        raise RingMismatchError("expected a group-ring or polynomial element")
    cring = fring.inner
    if not isinstance(cring, ClosureRing):
        raise RingMismatchError("coefficients must live in a closure ring")
    base, n = cring.base, cring.n
    target = _matching_formal_ring(fring, base)
    if not p.payload:
        return inject(target, n, 0, Matrix(target, 1, 1, (target.zero,)))
    coeffs = [(e, c.payload) for e, c in p.payload]
    m = max(c.level for _, c in coeffs)
    size = n**m
    lifted = [(e, lift(c, m)) for e, c in coeffs]
    cells = []
    for i in range(size):
        for j in range(size):
            cells.append(target.from_table({e: mat.entry(i, j) for e, mat in lifted}))
    return inject(target, n, m, Matrix(target, size, size, tuple(cells)))


def closure_to_formal(x: ClosureElement) -> RingElement:
    """Closure element over F(R) -> F-element with closure coefficients."""
    fring = x.ring
    if not isinstance(fring, (GroupRing, PolynomialRing)):
        raise RingMismatchError("expected a closure element over a formal ring")
    base = fring.inner
    n = x.n
    cring = ClosureRing(base, n)
    outer = _matching_formal_ring(fring, cring)
    size = x.body.rows
    exponents = sorted({e for cell in x.body.cells for e, _ in cell.payload})
    table = {}
    for e in exponents:
        cells = tuple(fring.coefficient(cell, e) for cell in x.body.cells)
        coeff = inject(base, n, x.level, Matrix(base, size, size, cells))
        table[e] = cring.element(coeff)
    return outer.from_table(table)


def _matching_formal_ring(model, inner: Ring):
    if isinstance(model, GroupRing):
        return GroupRing(inner, model.group_order)
    return PolynomialRing(inner)


def poly_iso(p: RingElement) -> ClosureElement:
    """MC_n(R)[x] -> MC_n(R[x]) on elements."""
    if not isinstance(p.ring, PolynomialRing):
        raise RingMismatchError("expected a polynomial over a closure ring")
    return formal_to_closure(p)


def group_iso(p: RingElement) -> ClosureElement:
    """MC_n(R)[G] -> MC_n(R[G]) on elements, G cyclic or infinite cyclic."""
    if not isinstance(p.ring, GroupRing):
        raise RingMismatchError("expected a group-ring combination over a closure ring")
    return formal_to_closure(p)


def laurent_iso(p: RingElement) -> ClosureElement:
    """The infinite-cyclic case of :func:`group_iso`."""
    if not isinstance(p.ring, GroupRing) or p.ring.group_order is not None:
        raise RingMismatchError("expected a Laurent combination over a closure ring")
    return formal_to_closure(p)


# ---------------------------------------------------------------------------
# sampled verification drivers


def _sample_formal(outer, rng, max_level: int, degree: int) -> RingElement:
    cring = outer.inner
    table = {}
    if isinstance(outer, GroupRing) and outer.group_order is not None:
        exponents = range(outer.group_order)
    elif isinstance(outer, GroupRing):
        exponents = range(-degree, degree + 1)
    else:
        exponents = range(degree + 1)
    for e in exponents:
        if rng.random() < 0.5:
            table[e] = cring.element(
                random_closure_element(cring.base, cring.n, rng, max_level)
            )
    return outer.from_table(table)


def run_formal_iso(
    kind: str,
    ring: Ring,
    n: int,
    rng,
    samples: int = 300,
    max_level: int = 1,
    degree: int = 3,
) -> IsoWitnessReport:
    """Round-trips, additivity, multiplicativity, unitality on samples."""
    cring = ClosureRing(ring, n)
    if kind == "poly":
        outer = PolynomialRing(cring)
        target_name = PolynomialRing(ring).spec()
        forward = poly_iso
    elif kind == "group":
        outer = GroupRing(cring, 2)
        target_name = GroupRing(ring, 2).spec()
        forward = group_iso
    elif kind == "laurent":
        outer = GroupRing(cring, None)
        target_name = GroupRing(ring, None).spec()
        forward = laurent_iso
    else:
        raise ValueError(f"unknown formal iso kind {kind!r}")
    report = IsoWitnessReport(
        kind,
        (outer.spec(), f"MC{n}({target_name})"),
        samples,
        ("forward", "backward", "roundtrip", "add", "mul", "one"),
    )
    if forward(outer.one) != cone(_matching_formal_ring(outer, ring), n):
        report.note("one", "image of 1 is not 1")
    for i in range(samples):
        p = _sample_formal(outer, rng, max_level, degree)
        q = _sample_formal(outer, rng, max_level, degree)
        fp, fq = forward(p), forward(q)
        if closure_to_formal(fp) != p:
            report.note("roundtrip", f"sample {i}: backward(forward(p)) != p")
            break
        if forward(closure_to_formal(fp)) != fp:
            report.note("roundtrip", f"sample {i}: forward(backward(x)) != x")
            break
        if forward(outer.add(p, q)) != cadd(fp, fq):
            report.note("add", f"sample {i}: images of p+q disagree")
            break
        if forward(outer.mul(p, q)) != cmul(fp, fq):
            report.note("mul", f"sample {i}: images of p*q disagree")
            break
    return report


def run_product_iso(
    pring: ProductRing,
    n: int,
    rng,
    samples: int = 300,
    max_level: int = 1,
    naturality: Optional[tuple[RingMorphism, RingMorphism]] = None,
) -> IsoWitnessReport:
    """Split/merge round-trips and morphism behavior on samples.

    ``naturality`` optionally provides componentwise morphisms (f, h);
    splitting then commutes with the induced map on the product.
    """
    report = IsoWitnessReport(
        "product",
        (f"MC{n}({pring.spec()})", f"MC{n}({pring.left.spec()})xMC{n}({pring.right.spec()})"),
        samples,
        ("forward", "backward", "roundtrip", "add", "mul", "one"),
    )
    one_l, one_r = product_split(cone(pring, n))
    if one_l != cone(pring.left, n) or one_r != cone(pring.right, n):
        report.note("one", "split of 1 is not (1, 1)")
    pair_morphism = None
    if naturality is not None:
        f, h = naturality
        target = ProductRing(f.target, h.target)
        pair_morphism = RingMorphism(
            pring,
            target,
            lambda a: target.element((f(a.payload[0]), h(a.payload[1]))),
            "pairwise",
        )
    for i in range(samples):
        x = random_closure_element(pring, n, rng, max_level)
        y = random_closure_element(pring, n, rng, max_level)
        xl, xr = product_split(x)
        yl, yr = product_split(y)
        if product_merge(xl, xr, pring) != x:
            report.note("roundtrip", f"sample {i}: merge(split(x)) != x")
            break
        sl, sr = product_split(cadd(x, y))
        if sl != cadd(xl, yl) or sr != cadd(xr, yr):
            report.note("add", f"sample {i}: split does not add componentwise")
            break
        ml, mr = product_split(cmul(x, y))
        if ml != cmul(xl, yl) or mr != cmul(xr, yr):
            report.note("mul", f"sample {i}: split does not multiply componentwise")
            break
        rl = random_closure_element(pring.left, n, rng, max_level)
        rr = random_closure_element(pring.right, n, rng, max_level)
        ml2, mr2 = product_split(product_merge(rl, rr, pring))
        if ml2 != rl or mr2 != rr:
            report.note("backward", f"sample {i}: split(merge(a,b)) != (a,b)")
            break
        if pair_morphism is not None:
            from .closure import cmap

            f, h = naturality
            il, ir = product_split(cmap(pair_morphism, x))
            if il != cmap(f, xl) or ir != cmap(h, xr):
                report.note("naturality", f"sample {i}: square does not commute")
                break
    return report


def degree_zero_consistency(ring: Ring, n: int, rng, samples: int = 50) -> bool:
    """Constant polynomials map exactly as the constant-inclusion does."""
    cring = ClosureRing(ring, n)
    outer = PolynomialRing(cring)
    pring = PolynomialRing(ring)
    inc = RingMorphism(ring, pring, lambda a: pring.from_table({0: a}), "const")
    from .closure import cmap

    for _ in range(samples):
        c = random_closure_element(ring, n, rng, max_level=1)
        p = outer.from_table({0: cring.element(c)})
        if poly_iso(p) != cmap(inc, c):
            return False
    return True
