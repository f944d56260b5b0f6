"""Named verification suites: configuration, registry, and runners.

Each suite verifies one mathematical claim about the matrix closure over
a configurable base ring at configurable level/sample bounds.  Runners
are generators of Outcome values so the driver can attach per-check
timing; all sampling is drawn from a Random seeded by (seed, suite,
ring), making reports reproducible byte-for-byte.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from itertools import product as _iproduct
from typing import Callable, Iterator, Optional

from . import closure as cl
from . import ideals as il
from . import isos
from . import modules as md
from . import properties as pr
from .dsl import build_ring, parse_module, parse_module_pair
from .matrices import Matrix, MatrixRing, RingMorphism, check_morphism, identity_morphism
from .report import FAIL, PASS, UNDECIDED, VACUOUS, CheckRecord, Outcome, SuiteReport
from .rings import (
    BoundExceededError,
    ModularRing,
    PolynomialRing,
    ProductRing,
    Ring,
    check_ring_axioms,
)

DEFAULT_BUDGET = 1 << 24
DEFAULT_ZOO = (
    "Z/4",
    "Z/6",
    "GF(2)",
    "GF(3)",
    "GF(2)xZ/3",
    "GF(2)[C2]",
    "M2(GF(2))",
)
SMALL_ZOO = ("Z/4", "Z/6", "GF(2)", "GF(3)", "GF(2)xZ/3", "GF(2)[C2]")


@dataclass
class SuiteConfig:
    suite: str
    ring: Optional[str] = None
    n: int = 2
    levels: Optional[int] = None
    seed: int = 0
    samples: Optional[int] = None
    budget: Optional[int] = None
    depth: Optional[int] = None
    rmax: int = 2
    smax: int = 2
    module: Optional[str] = None


@dataclass
class SuiteContext:
    ring: Ring
    ring_spec: str
    n: int
    levels: int
    samples: int
    seed: int
    budget: int
    rng: random.Random
    depth: int
    rmax: int
    smax: int
    module_spec: str


@dataclass(frozen=True)
class SuiteDef:
    name: str
    claim: str
    runner: Callable[[SuiteContext], Iterator[Outcome]]
    default_rings: tuple[str, ...]
    default_levels: int = 1
    default_samples: int = 200
    level_overrides: dict = field(default_factory=dict)
    module_defaults: dict = field(default_factory=dict)


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


# ---------------------------------------------------------------------------
# runners


def run_axioms(ctx: SuiteContext) -> Iterator[Outcome]:
    laws = {
        "add_assoc": lambda x, y, z: (x + y) + z == x + (y + z),
        "add_comm": lambda x, y, z: x + y == y + x,
        "add_inverse": lambda x, y, z: x + (-x) == cl.czero(ctx.ring, ctx.n),
        "distrib_left": lambda x, y, z: x * (y + z) == x * y + x * z,
        "distrib_right": lambda x, y, z: (x + y) * z == x * z + y * z,
        "mul_assoc": lambda x, y, z: (x * y) * z == x * (y * z),
        "mul_identity": lambda x, y, z: x * cl.cone(ctx.ring, ctx.n) == x
        and cl.cone(ctx.ring, ctx.n) * x == x,
    }
    bad: dict[str, str] = {}
    for _ in range(ctx.samples):
        x = cl.random_closure_element(ctx.ring, ctx.n, ctx.rng, ctx.levels)
        y = cl.random_closure_element(ctx.ring, ctx.n, ctx.rng, ctx.levels)
        z = cl.random_closure_element(ctx.ring, ctx.n, ctx.rng, ctx.levels)
        for name, law in laws.items():
            if name not in bad and not law(x, y, z):
                bad[name] = f"({x},{y},{z})"
    for name in laws:
        yield Outcome(
            f"axioms.{name}",
            _verdict(name not in bad),
            witness=bad.get(name, f"{ctx.samples} seeded triples"),
            level=ctx.levels,
        )


def run_transition(ctx: SuiteContext) -> Iterator[Outcome]:
    from .matrices import diag_repeat

    ring, n = ctx.ring, ctx.n
    bad = None
    for a in ring.elements():
        x = cl.embed(a, n)
        stepwise = diag_repeat(diag_repeat(x.body, n), n)
        if stepwise != cl.lift(x, 2):
            bad = a
            break
    yield Outcome(
        "transition.compose",
        _verdict(bad is None),
        witness=f"all {ring.order()} base elements, level 0->2" if bad is None else str(bad),
        level=2,
    )
    x = cl.random_closure_element(ring, n, ctx.rng, ctx.levels)
    yield Outcome(
        "transition.identity",
        _verdict(cl.lift(x, x.level) == x.body),
        witness="lift to own level is the body",
        level=x.level,
    )


def _fixed_morphisms():
    z4, z2 = ModularRing(4), ModularRing(2)
    z2sq = ProductRing(z2, z2)
    red = RingMorphism(z4, z2, lambda a: z2.el(a.payload), "mod2")
    diag = RingMorphism(z2, z2sq, lambda a: z2sq.element((a, a)), "diag")
    return z4, z2, red, diag


def run_functor(ctx: SuiteContext) -> Iterator[Outcome]:
    n = ctx.n
    z4, z2, red, diag = _fixed_morphisms()
    for f in (red, diag):
        yield Outcome(
            f"functor.morphism.{f.name}",
            _verdict(not check_morphism(f)),
            witness="preserves 1, +, * on all pairs",
        )
    bad = None
    for x in cl.enumerate_closure_classes(z4, n, 1):
        if cl.cmap(identity_morphism(z4), x) != x:
            bad = x
            break
        if cl.cmap(red.then(diag), x) != cl.cmap(diag, cl.cmap(red, x)):
            bad = x
            break
    yield Outcome(
        "functor.identity_compose",
        _verdict(bad is None),
        witness="exhaustive over level<=1 classes of the fixed source" if bad is None else str(bad),
        level=1,
    )
    # identity law on the configured ring as well
    bad = None
    ident = identity_morphism(ctx.ring)
    for _ in range(ctx.samples):
        x = cl.random_closure_element(ctx.ring, n, ctx.rng, ctx.levels)
        if cl.cmap(ident, x) != x:
            bad = x
            break
    yield Outcome(
        "functor.identity_ring",
        _verdict(bad is None),
        witness=f"{ctx.samples} samples over {ctx.ring_spec}" if bad is None else str(bad),
    )
    # injectivity for the two 1-preserving injective test morphisms
    from .rings import PrimeField

    f2 = PrimeField(2)
    for src, name in ((f2, "GF(2)"), (z4, "Z/4")):
        poly = PolynomialRing(src)
        const = RingMorphism(src, poly, lambda a, _p=poly: _p.from_table({0: a}), "const")
        prod = ProductRing(src, src)
        dg = RingMorphism(src, prod, lambda a, _p=prod: _p.element((a, a)), "diag")
        for mor, kind in ((const, "poly_const"), (dg, "diagonal")):
            seen: dict = {}
            collision = None
            for x in cl.enumerate_closure_classes(src, n, 1):
                img = cl.cmap(mor, x)
                if img in seen:
                    collision = (seen[img], x)
                    break
                seen[img] = x
            yield Outcome(
                f"functor.injective.{kind}.{name}",
                _verdict(collision is None),
                witness=f"{len(seen)} classes map injectively"
                if collision is None
                else f"{collision[0]} and {collision[1]} collide",
                level=1,
            )
    # naturality: morphism application commutes with lifting
    bad = None
    for _ in range(ctx.samples):
        x = cl.random_closure_element(z4, n, ctx.rng, 1)
        lifted = cl.inject(z4, n, x.level + 1, cl.lift(x, x.level + 1), allow_n1=True)
        if cl.cmap(red, lifted) != cl.cmap(red, x):
            bad = x
            break
    yield Outcome(
        "functor.naturality",
        _verdict(bad is None),
        witness="maps of lifted representatives agree" if bad is None else str(bad),
    )


def _sample_nested(ctx: SuiteContext, cring: cl.ClosureRing) -> cl.ClosureElement:
    level = ctx.rng.randrange(ctx.levels + 1)
    k = ctx.n**level
    cells = tuple(
        cring.element(cl.random_closure_element(ctx.ring, ctx.n, ctx.rng, ctx.levels))
        for _ in range(k * k)
    )
    return cl.inject(cring, ctx.n, level, Matrix(cring, k, k, cells))


def run_idempotent(ctx: SuiteContext) -> Iterator[Outcome]:
    cring = cl.ClosureRing(ctx.ring, ctx.n)
    bad: dict[str, str] = {}
    images: dict = {}
    for i in range(ctx.samples):
        x = _sample_nested(ctx, cring)
        y = _sample_nested(ctx, cring)
        fx, fy = cl.flatten_closure(x), cl.flatten_closure(y)
        if "additive" not in bad and cl.flatten_closure(x + y) != fx + fy:
            bad["additive"] = f"sample {i}"
        if "multiplicative" not in bad and cl.flatten_closure(x * y) != fx * fy:
            bad["multiplicative"] = f"sample {i}"
        prev = images.get(fx)
        if "injective" not in bad and prev is not None and prev != x:
            bad["injective"] = f"sample {i}: two outer classes share an image"
        images[fx] = x
        z = cl.random_closure_element(ctx.ring, ctx.n, ctx.rng, ctx.levels)
        if "section" not in bad and cl.flatten_closure(cl.closure_section(z)) != z:
            bad["section"] = f"sample {i}"
    unital = cl.flatten_closure(cl.cone(cring, ctx.n))
    yield Outcome(
        "idempotent.unital",
        _verdict(unital == cl.cone(ctx.ring, ctx.n)),
        witness="outer 1 flattens to 1",
    )
    for name in ("additive", "multiplicative", "injective", "section"):
        yield Outcome(
            f"idempotent.{name}",
            _verdict(name not in bad),
            witness=bad.get(name, f"{ctx.samples} seeded samples"),
            level=ctx.levels,
        )


def run_units(ctx: SuiteContext) -> Iterator[Outcome]:
    classes = list(cl.enumerate_closure_classes(ctx.ring, ctx.n, ctx.levels))
    via_cunit = {}
    bad_witness = None
    for x in classes:
        ok, inv = cl.cunit(x)
        if ok:
            via_cunit[x] = inv
            one = cl.cone(ctx.ring, ctx.n)
            if x * inv != one or inv * x != one:
                bad_witness = x
    yield Outcome(
        "units.witnesses",
        _verdict(bad_witness is None),
        witness=f"{len(via_cunit)} units among {len(classes)} classes"
        if bad_witness is None
        else str(bad_witness),
        level=ctx.levels,
    )
    if len(classes) ** 2 <= ctx.budget and len(classes) <= 512:
        one = cl.cone(ctx.ring, ctx.n)
        via_search = set()
        for x in classes:
            for y in classes:
                if x * y == one and y * x == one:
                    via_search.add(x)
                    break
        agree = via_search == set(via_cunit)
        yield Outcome(
            "units.agreement",
            _verdict(agree),
            witness=f"both methods find {len(via_search)} units"
            if agree
            else f"methods differ by {via_search.symmetric_difference(via_cunit)}",
            level=ctx.levels,
        )
    else:
        bad = None
        nonunits = [x for x in classes if x not in via_cunit]
        for _ in range(min(ctx.samples, len(nonunits))):
            x = nonunits[ctx.rng.randrange(len(nonunits))]
            one = cl.cone(ctx.ring, ctx.n)
            for _ in range(200):
                y = cl.random_closure_element(ctx.ring, ctx.n, ctx.rng, ctx.levels)
                if x * y == one and y * x == one:
                    bad = x
                    break
            if bad:
                break
        yield Outcome(
            "units.agreement",
            _verdict(bad is None),
            witness="sampled: no inverse found for any claimed non-unit"
            if bad is None
            else f"claimed non-unit {bad} has an inverse",
            level=ctx.levels,
        )


def run_center(ctx: SuiteContext) -> Iterator[Outcome]:
    ring, n = ctx.ring, ctx.n
    expected = {cl.embed(a, n) for a in ring.central_elements}
    order = ring.order()
    if order is not None and order ** ((n**ctx.levels) ** 2) <= 4096:
        found = {x for x in cl.enumerate_closure_classes(ring, n, ctx.levels) if cl.center_check(x)}
        ok = found == expected
        yield Outcome(
            "center.level_classes",
            _verdict(ok),
            witness=f"exactly the {len(expected)} level-0 central classes"
            if ok
            else f"mismatch of sizes {len(found)} vs {len(expected)}",
            level=ctx.levels,
        )
    else:
        bad = None
        for x in sorted(expected, key=str):
            if not cl.center_check(x):
                bad = x
                break
        for _ in range(ctx.samples):
            x = cl.random_closure_element(ring, n, ctx.rng, ctx.levels)
            if cl.center_check(x) != (x in expected):
                bad = x
                break
        yield Outcome(
            "center.level_classes",
            _verdict(bad is None),
            witness="sampled agreement with the level-0 image" if bad is None else str(bad),
            level=ctx.levels,
        )
    bad = None
    for a in ring.central_elements:
        if cl.center_section(cl.embed(a, n)) != a:
            bad = a
            break
    yield Outcome(
        "center.section_roundtrip",
        _verdict(bad is None),
        witness=f"sections recover all {len(expected)} central elements"
        if bad is None
        else str(bad),
    )


def run_product(ctx: SuiteContext) -> Iterator[Outcome]:
    if not isinstance(ctx.ring, ProductRing):
        yield Outcome("product.precondition", VACUOUS, witness="base is not a product ring")
        return
    f2 = ctx.ring.left
    diag_l = RingMorphism(
        f2, ProductRing(f2, f2), lambda a, _p=ProductRing(f2, f2): _p.element((a, a)), "diagL"
    )
    r3 = ctx.ring.right
    diag_r = RingMorphism(
        r3, ProductRing(r3, r3), lambda a, _p=ProductRing(r3, r3): _p.element((a, a)), "diagR"
    )
    report = isos.run_product_iso(
        ctx.ring, ctx.n, ctx.rng, ctx.samples, ctx.levels, naturality=(diag_l, diag_r)
    )
    for direction in report.directions + ("naturality",):
        fails = [f for f in report.failures if f.startswith(direction)]
        yield Outcome(
            f"product.{direction}",
            _verdict(not fails),
            witness=fails[0] if fails else f"{report.samples} seeded samples",
            level=ctx.levels,
        )


def _run_formal(kind: str, ctx: SuiteContext) -> Iterator[Outcome]:
    report = isos.run_formal_iso(kind, ctx.ring, ctx.n, ctx.rng, ctx.samples, ctx.levels)
    for direction in report.directions:
        fails = [f for f in report.failures if f.startswith(direction)]
        yield Outcome(
            f"{kind}.{direction}",
            _verdict(not fails),
            witness=fails[0] if fails else f"{report.samples} seeded samples",
            level=ctx.levels,
        )
    if kind == "poly":
        yield Outcome(
            "poly.degree0_consistency",
            _verdict(isos.degree_zero_consistency(ctx.ring, ctx.n, ctx.rng)),
            witness="constants map as the constant inclusion",
        )


def run_poly(ctx):
    return _run_formal("poly", ctx)


def run_group(ctx):
    return _run_formal("group", ctx)


def run_laurent(ctx):
    return _run_formal("laurent", ctx)


def _module_for(ctx: SuiteContext) -> md.FiniteModule:
    mod = parse_module(ctx.ring, ctx.module_spec)
    problems = md.check_module_axioms(mod, ctx.rng)
    if problems:
        raise RuntimeError(f"module spec violates the axioms: {problems[0]}")
    return mod


def run_delta_generator(ctx: SuiteContext) -> Iterator[Outcome]:
    mod = _module_for(ctx)
    yield from md.delta_generator_check(mod, ctx.n, max(ctx.levels, 1), ctx.budget)


def run_delta_simple(ctx: SuiteContext) -> Iterator[Outcome]:
    mod = _module_for(ctx)
    yield from md.delta_simple_check(mod, ctx.n, ctx.levels, ctx.budget)


def run_delta_faithful(ctx: SuiteContext) -> Iterator[Outcome]:
    mod = _module_for(ctx)
    yield from md.delta_faithful_check(mod, ctx.n, ctx.levels, ctx.budget)


def run_delta_coproduct(ctx: SuiteContext) -> Iterator[Outcome]:
    m1, m2 = parse_module_pair(ctx.ring, ctx.module_spec)
    yield from md.delta_coproduct_check(m1, m2, ctx.n, ctx.levels, ctx.rng, ctx.samples)


def run_lattice(ctx: SuiteContext) -> Iterator[Outcome]:
    yield from il.lattice_iso_roundtrip(ctx.ring, ctx.n, ctx.levels)


def run_maxunion(ctx: SuiteContext) -> Iterator[Outcome]:
    family = il.default_maximal_family(ctx.ring, ctx.n)
    yield Outcome(
        "maxunion.family",
        PASS,
        witness=f"first-column family over maximal left ideal {family.base.format()}",
    )
    yield from il.maximal_family_union(
        ctx.ring, ctx.n, family, ctx.levels, ctx.rng, ctx.samples, ctx.budget
    )


def run_chain(ctx: SuiteContext) -> Iterator[Outcome]:
    yield from il.idempotent_chain(ctx.ring, ctx.n, ctx.depth)


RADICAL_MAX_BASE_ORDER = 8
RADICAL_MAX_LEVEL = 2


def run_radical(ctx: SuiteContext) -> Iterator[Outcome]:
    ring = ctx.ring
    order = ring.order()
    if order is None or order > RADICAL_MAX_BASE_ORDER:
        raise BoundExceededError(
            f"radical level checks bounded to base order <= {RADICAL_MAX_BASE_ORDER}"
        )
    if ctx.levels > RADICAL_MAX_LEVEL:
        raise BoundExceededError(f"radical level checks bounded to K <= {RADICAL_MAX_LEVEL}")
    radical = pr.jacobson_radical(ring)
    yield Outcome("radical.base", PASS, witness=radical.format())
    problems = il.validate_ideal(radical)
    yield Outcome(
        "radical.ideal",
        _verdict(not problems),
        witness="two-sided ideal" if not problems else problems[0],
    )
    bad = None
    units = ring.units
    one = ring.one
    for x in radical.sorted_members():
        for r in ring.elements():
            if ring.sub(one, ring.mul(r, x)) not in units:
                bad = (r, x)
                break
        if bad:
            break
    yield Outcome(
        "radical.quasiregular",
        _verdict(bad is None),
        witness="1 - rx is a unit for all r, x" if bad is None else f"fails at {bad}",
    )
    cross = pr.radical_via_maximal_left(ring)
    yield Outcome(
        "radical.crosscheck",
        _verdict(cross == radical.members),
        witness="maximal-left-ideal intersection agrees",
    )
    for level, ok, witness in pr.matrix_levels_radical_check(ring, ctx.n, ctx.levels, ctx.budget):
        yield Outcome(f"radical.level.k{level}", _verdict(ok), witness=witness, level=level)
    yield Outcome(
        "radical.z_commentary",
        PASS,
        witness=(
            "level identities verified; the colimit-level intersection "
            "claim has no finite certificate and is not asserted"
        ),
    )


SEMIPRIME_MAX_ORDER = 6


def run_semiprime(ctx: SuiteContext) -> Iterator[Outcome]:
    base = pr.is_semiprime(ctx.ring)
    yield Outcome(
        "semiprime.base",
        PASS if base.verdict != pr.FAILS else VACUOUS,
        witness=base.witness_text() if base.verdict == pr.FAILS else "base is semiprime",
    )
    if not base.holds():
        yield Outcome("semiprime.levels", VACUOUS, witness="base not semiprime")
        return
    if ctx.ring.order() > SEMIPRIME_MAX_ORDER:
        raise BoundExceededError(f"level checks bounded to order <= {SEMIPRIME_MAX_ORDER}")
    verdict = pr.closure_semiprime_check(ctx.ring, ctx.n, ctx.levels, ctx.budget)
    yield Outcome(
        "semiprime.levels",
        _verdict(verdict.holds()),
        witness=verdict.witness_text(),
        level=ctx.levels,
    )


def run_prime(ctx: SuiteContext) -> Iterator[Outcome]:
    base = pr.is_prime(ctx.ring)
    yield Outcome(
        "prime.base",
        PASS if base.verdict != pr.FAILS else VACUOUS,
        witness=base.witness_text() if base.verdict == pr.FAILS else "base is prime",
    )
    if not base.holds():
        yield Outcome("prime.levels", VACUOUS, witness="base not prime")
        return
    if ctx.ring.order() > SEMIPRIME_MAX_ORDER:
        raise BoundExceededError(f"level checks bounded to order <= {SEMIPRIME_MAX_ORDER}")
    verdict = pr.closure_prime_check(ctx.ring, ctx.n, ctx.levels, ctx.budget)
    yield Outcome(
        "prime.levels", _verdict(verdict.holds()), witness=verdict.witness_text(), level=ctx.levels
    )
    semi = pr.is_semiprime(ctx.ring)
    yield Outcome(
        "prime.implies_semiprime",
        _verdict(semi.holds()),
        witness="prime base is semiprime",
    )


def run_vnr(ctx: SuiteContext) -> Iterator[Outcome]:
    base = pr.is_von_neumann_regular(ctx.ring)
    if not base.holds():
        yield Outcome("vnr.base", VACUOUS, witness=base.witness_text())
        return
    yield Outcome("vnr.base", PASS, witness="every element has a quasi-inverse")
    bad = None
    for _ in range(ctx.samples):
        x = cl.random_closure_element(ctx.ring, ctx.n, ctx.rng, ctx.levels)
        w = pr.closure_vnr_witness(x, ctx.budget)
        if (x * w) * x != x or w.level > x.level:
            bad = x
            break
    yield Outcome(
        "vnr.witnesses",
        _verdict(bad is None),
        witness=f"{ctx.samples} same-level witnesses re-verified" if bad is None else str(bad),
        level=ctx.levels,
    )


def run_ibn(ctx: SuiteContext) -> Iterator[Outcome]:
    verdict = pr.ibn_check(ctx.ring, ctx.n, ctx.rmax, ctx.smax, ctx.levels, ctx.budget)
    mapping = {pr.HOLDS: PASS, pr.FAILS: FAIL, pr.UNDECIDED_AT_BOUND: UNDECIDED}
    yield Outcome(
        f"ibn.pairs.r{ctx.rmax}s{ctx.smax}",
        mapping[verdict.verdict],
        witness=verdict.witness_text(),
        level=ctx.levels,
    )
    yield Outcome(
        "ibn.flatten_reduction",
        _verdict(pr.ibn_flatten_consistency(ctx.ring, ctx.n, max(ctx.levels, 1), ctx.rng)),
        witness="rectangular block collapse respects products",
    )
    yield Outcome(
        "ibn.square_accepts",
        _verdict(_square_identity_ok(ctx)),
        witness="r = s identity pair accepted",
    )


def _square_identity_ok(ctx: SuiteContext) -> bool:
    from .matrices import mat_identity

    base = ctx.ring
    i1 = mat_identity(base, 1)
    return i1 * i1 == mat_identity(base, 1)


# ---------------------------------------------------------------------------
# the registry


SUITES: dict[str, SuiteDef] = {}


def _register(*defs: SuiteDef):
    for d in defs:
        SUITES[d.name] = d


_register(
    SuiteDef(
        "axioms",
        "closure arithmetic satisfies the unital ring axioms exactly",
        run_axioms,
        DEFAULT_ZOO,
        default_levels=2,
        default_samples=2000,
    ),
    SuiteDef(
        "transition",
        "single-step block-diagonal lifts compose into the direct two-level lift",
        run_transition,
        DEFAULT_ZOO,
        default_levels=2,
    ),
    SuiteDef(
        "functor",
        "morphism application is functorial and preserves injectivity",
        run_functor,
        ("Z/4",),
        default_samples=200,
    ),
    SuiteDef(
        "idempotent",
        "closing twice collapses: entry-level flattening is a ring isomorphism",
        run_idempotent,
        ("GF(2)", "Z/4"),
        default_levels=2,
        default_samples=500,
    ),
    SuiteDef(
        "units",
        "units are exactly the level-wise invertible bodies",
        run_units,
        DEFAULT_ZOO,
    ),
    SuiteDef(
        "center",
        "the center is the level-0 image of the base ring's center",
        run_center,
        DEFAULT_ZOO,
    ),
    SuiteDef(
        "product",
        "the closure of a product ring splits componentwise",
        run_product,
        ("GF(2)xZ/3",),
        default_samples=300,
    ),
    SuiteDef(
        "poly",
        "the closure commutes with polynomial extension",
        run_poly,
        ("GF(2)",),
        default_samples=300,
    ),
    SuiteDef(
        "group",
        "the closure commutes with cyclic group-ring extension",
        run_group,
        ("GF(2)",),
        default_samples=300,
    ),
    SuiteDef(
        "laurent",
        "the closure commutes with Laurent extension",
        run_laurent,
        ("GF(2)",),
        default_samples=300,
    ),
    SuiteDef(
        "delta-generator",
        "standard level vectors generate the column-vector module",
        run_delta_generator,
        ("GF(2)", "Z/4"),
        default_levels=2,
    ),
    SuiteDef(
        "delta-simple",
        "simple modules stay simple under the column-vector functor",
        run_delta_simple,
        ("GF(2)", "Z/6"),
        level_overrides={"GF(2)": 2},
        module_defaults={"Z/6": "Z/3"},
    ),
    SuiteDef(
        "delta-faithful",
        "faithful modules stay faithful under the column-vector functor",
        run_delta_faithful,
        ("GF(2)", "Z/4"),
    ),
    SuiteDef(
        "delta-coproduct",
        "the column-vector functor preserves finite direct sums",
        run_delta_coproduct,
        ("GF(2)",),
        default_samples=500,
        module_defaults={"GF(2)": "R^1 (+) R^1"},
    ),
    SuiteDef(
        "lattice",
        "two-sided ideal lattices of the base and its closure are isomorphic",
        run_lattice,
        DEFAULT_ZOO,
    ),
    SuiteDef(
        "maxunion",
        "ascending unions of level-wise maximal ideals stay maximal level-wise",
        run_maxunion,
        SMALL_ZOO,
        default_samples=100,
    ),
    SuiteDef(
        "chain",
        "corner idempotents give a strictly descending chain of left summands",
        run_chain,
        DEFAULT_ZOO,
    ),
    SuiteDef(
        "radical",
        "the radical of the closure is the closure of the radical, level-wise",
        run_radical,
        SMALL_ZOO,
    ),
    SuiteDef(
        "semiprime",
        "semiprime bases give semiprime closures, level-wise",
        run_semiprime,
        SMALL_ZOO,
    ),
    SuiteDef(
        "prime",
        "prime bases give prime closures, level-wise",
        run_prime,
        SMALL_ZOO,
    ),
    SuiteDef(
        "vnr",
        "regular bases give regular closures, with same-level witnesses",
        run_vnr,
        DEFAULT_ZOO,
        default_levels=2,
        default_samples=500,
    ),
    SuiteDef(
        "ibn",
        "basis invariance passes to the closure, by level-wise search",
        run_ibn,
        SMALL_ZOO,
        default_levels=0,
    ),
)


def list_suites() -> list[tuple[str, str]]:
    """(suite, claim) rows for every registered proposition suite."""
    return [(name, SUITES[name].claim) for name in sorted(SUITES)]


def default_budget() -> int:
    raw = os.environ.get("MATCLOSE_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError("MATCLOSE_BUDGET must be a positive integer")
    return value


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Run one suite over its configured or default rings."""
    if config.suite not in SUITES:
        raise KeyError(f"unknown suite {config.suite!r}")
    sdef = SUITES[config.suite]
    budget = config.budget if config.budget is not None else default_budget()
    if budget <= 0:
        raise ValueError("budget must be a positive integer")
    ring_specs = (config.ring,) if config.ring else sdef.default_rings
    report = SuiteReport(
        config.suite,
        {
            "n": config.n,
            "levels": config.levels if config.levels is not None else "default",
            "seed": config.seed,
            "samples": config.samples if config.samples is not None else sdef.default_samples,
            "budget": budget,
            "rings": ",".join(ring_specs),
        },
    )
    for spec in ring_specs:
        ring = build_ring(spec)
        canonical = ring.spec()
        levels = config.levels
        if levels is None:
            levels = sdef.level_overrides.get(canonical, sdef.default_levels)
        depth = config.depth if config.depth is not None else max(levels, 3)
        module_spec = config.module or sdef.module_defaults.get(canonical, "R^1")
        ctx = SuiteContext(
            ring=ring,
            ring_spec=canonical,
            n=config.n,
            levels=levels,
            samples=config.samples if config.samples is not None else sdef.default_samples,
            seed=config.seed,
            budget=budget,
            rng=random.Random(f"{config.seed}|{config.suite}|{canonical}"),
            depth=depth,
            rmax=config.rmax,
            smax=config.smax,
            module_spec=module_spec,
        )
        mark = time.monotonic()
        for outcome in sdef.runner(ctx):
            now = time.monotonic()
            report.records.append(
                CheckRecord(
                    check=outcome.check,
                    ring=canonical,
                    n=config.n,
                    level=str(outcome.level) if outcome.level is not None else "-",
                    verdict=outcome.verdict,
                    witness=outcome.witness,
                    elapsed_ms=(now - mark) * 1000.0,
                )
            )
            mark = now
    return report
