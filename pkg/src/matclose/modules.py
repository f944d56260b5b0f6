"""Finite left modules and the level-wise column-vector functor.

A closure element acts on level-tagged column vectors of module elements:
level-k vectors have length n^k, the transition map is the n-fold repeat
v |-> (v, ..., v), and the action is the standard matrix-on-column product
computed at a common level.  The repeat is the unique transition choice
compatible with the ring transition a |-> I_n (x) a.
"""

from __future__ import annotations

from itertools import product as _iproduct
from typing import Callable, Iterator, Optional

from .closure import ClosureElement, lift
from .matrices import Matrix, MatrixRing
from .rings import ModularRing, Ring, RingElement, RingError, RingMismatchError


class FiniteModule:
    """Explicit finite left module: element set, addition, ring action."""

    __slots__ = ("ring", "name", "elements", "zero", "_add", "_act")

    def __init__(self, ring: Ring, name: str, elements: tuple, zero, add: Callable, act: Callable):
        self.ring = ring
        self.name = name
        self.elements = elements
        self.zero = zero
        self._add = add
        self._act = act

    def add(self, x, y):
        return self._add(x, y)

    def act(self, r: RingElement, x):
        if r.ring != self.ring:
            raise RingMismatchError(f"scalar from {r.ring}, module over {self.ring}")
        return self._act(r, x)

    def format(self, x) -> str:
        if isinstance(x, RingElement):
            return str(x)
        if isinstance(x, tuple):
            return "(" + ",".join(self.format(c) for c in x) + ")"
        return str(x)

    def __repr__(self):
        return f"<module {self.name} over {self.ring}, {len(self.elements)} elements>"


def regular_module(ring: Ring) -> FiniteModule:
    """The ring acting on itself by left multiplication."""
    return FiniteModule(
        ring, "R^1", ring.elements(), ring.zero, ring.add, ring.mul
    )


def quotient_module(ring: ModularRing, d: int) -> FiniteModule:
    """Z/d as a Z/m module (d | m), the action running through the quotient."""
    if ring.m % d != 0:
        raise ValueError(f"{d} does not divide {ring.m}")
    carrier = ModularRing(d)
    return FiniteModule(
        ring,
        f"Z/{d}",
        carrier.elements(),
        carrier.zero,
        carrier.add,
        lambda r, x: carrier.el(r.payload * x.payload),
    )


def zero_module(ring: Ring) -> FiniteModule:
    z = ()
    return FiniteModule(ring, "0", (z,), z, lambda x, y: z, lambda r, x: z)


def direct_sum(m: FiniteModule, n: FiniteModule) -> FiniteModule:
    if m.ring != n.ring:
        raise RingMismatchError("direct sum needs modules over the same ring")
    elements = tuple((a, b) for a in m.elements for b in n.elements)
    return FiniteModule(
        m.ring,
        f"{m.name}(+){n.name}",
        elements,
        (m.zero, n.zero),
        lambda x, y: (m.add(x[0], y[0]), n.add(x[1], y[1])),
        lambda r, x: (m.act(r, x[0]), n.act(r, x[1])),
    )


def check_module_axioms(mod: FiniteModule, rng=None, samples: int = 500) -> list[str]:
    """Unital-module axioms; exhaustive when |R|*|M| <= 2^12, else sampled."""
    ring = mod.ring
    failures: list[str] = []
    o = ring.order() if ring.enumerable else None
    exhaustive = o is not None and o * len(mod.elements) <= 4096
    if exhaustive:
        rs = ring.elements()
        ms = mod.elements
        pair_iter = _iproduct(rs, rs, ms, ms)
    else:
        if rng is None:
            raise ValueError("rng required for sampled module checking")
        ms = mod.elements
        pair_iter = (
            (
                ring.sample(rng),
                ring.sample(rng),
                ms[rng.randrange(len(ms))],
                ms[rng.randrange(len(ms))],
            )
            for _ in range(samples)
        )
    one = ring.one
    for r, s, x, y in pair_iter:
        if mod.act(one, x) != x:
            failures.append(f"1*{mod.format(x)} != {mod.format(x)}")
        if mod.act(r, mod.add(x, y)) != mod.add(mod.act(r, x), mod.act(r, y)):
            failures.append("action not additive in the module argument")
        if mod.act(ring.add(r, s), x) != mod.add(mod.act(r, x), mod.act(s, x)):
            failures.append("action not additive in the scalar argument")
        if mod.act(ring.mul(r, s), x) != mod.act(r, mod.act(s, x)):
            failures.append("action not associative over ring multiplication")
        if failures:
            break
    return failures


def submodule_generated(mod: FiniteModule, gens) -> frozenset:
    """Closure of ``gens`` under addition and the ring action."""
    ring = mod.ring
    seen = {mod.zero}
    frontier = [mod.zero]
    for ginit in gens:
        if ginit not in seen:
            seen.add(ginit)
            frontier.append(ginit)
    while frontier:
        x = frontier.pop()
        new = [mod.act(r, x) for r in ring.elements()]
        new.extend(mod.add(x, y) for y in list(seen))
        for y in new:
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def is_simple(mod: FiniteModule) -> bool:
    """Nonzero, and every nonzero element generates the whole module."""
    if len(mod.elements) <= 1:
        return False
    full = frozenset(mod.elements)
    return all(
        submodule_generated(mod, [x]) == full for x in mod.elements if x != mod.zero
    )


def annihilator(mod: FiniteModule) -> frozenset:
    return frozenset(
        r
        for r in mod.ring.elements()
        if all(mod.act(r, x) == mod.zero for x in mod.elements)
    )


def is_faithful(mod: FiniteModule) -> bool:
    return annihilator(mod) == frozenset({mod.ring.zero})


# ---------------------------------------------------------------------------
# level-tagged column vectors


class DeltaElement:
    """A canonical (level, vector) pair: vector length n^level.

    Normalization strips n-fold repeats, mirroring the ring closure's
    minimal-level form; construct through :func:`inject_vector`.
    """

    __slots__ = ("module", "n", "level", "vec", "_hash")

    def __init__(self, module: FiniteModule, n: int, level: int, vec: tuple):
        self.module = module
        self.n = n
        self.level = level
        self.vec = vec
        self._hash = None

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, DeltaElement)
            and self.n == other.n
            and self.level == other.level
            and self.module is other.module
            and self.vec == other.vec
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((id(self.module), self.n, self.level, self.vec))
        return h

    def is_zero(self) -> bool:
        return all(x == self.module.zero for x in self.vec)

    def __str__(self):
        return "@%d(%s)" % (self.level, ",".join(self.module.format(x) for x in self.vec))

    def __repr__(self):
        return f"<{self} in Delta({self.module.name})>"


def inject_vector(module: FiniteModule, n: int, level: int, vec: tuple) -> DeltaElement:
    if len(vec) != n**level:
        raise ValueError(f"vector length {len(vec)} is not {n}^{level}")
    while level > 0:
        m = len(vec) // n
        head = vec[:m]
        if all(vec[b * m : (b + 1) * m] == head for b in range(1, n)):
            vec, level = head, level - 1
        else:
            break
    return DeltaElement(module, n, level, vec)


def delta_lift(v: DeltaElement, level: int) -> tuple:
    """The level-``level`` representative: the n^(level-k)-fold repeat."""
    if level < v.level:
        raise ValueError(f"cannot lift level {v.level} down to {level}")
    return v.vec * (v.n ** (level - v.level))


def delta_act(a: ClosureElement, v: DeltaElement) -> DeltaElement:
    """Matrix-on-column action at a common level, then normalization."""
    if a.n != v.n:
        raise RingMismatchError("mixed n between scalar and vector")
    if a.ring != v.module.ring:
        raise RingMismatchError("scalar base does not match module base")
    m = max(a.level, v.level)
    mat = lift(a, m)
    vec = delta_lift(v, m)
    mod = v.module
    size = len(vec)
    out = []
    for i in range(size):
        row = mat.row(i)
        acc = mod.zero
        for j in range(size):
            acc = mod.add(acc, mod.act(row[j], vec[j]))
        out.append(acc)
    return inject_vector(mod, v.n, m, tuple(out))


def enumerate_vectors(module: FiniteModule, n: int, level: int) -> Iterator[tuple]:
    """All raw level-``level`` vectors (not classes)."""
    return _iproduct(module.elements, repeat=n**level)


def enumerate_delta_classes(module: FiniteModule, n: int, max_level: int) -> Iterator[DeltaElement]:
    """All canonical classes with level <= max_level, level-major order."""
    for x in module.elements:
        yield DeltaElement(module, n, 0, (x,))
    for level in range(1, max_level + 1):
        size = n**level
        m = size // n
        for vec in _iproduct(module.elements, repeat=size):
            head = vec[:m]
            if all(vec[b * m : (b + 1) * m] == head for b in range(1, n)):
                continue
            yield DeltaElement(module, n, level, vec)


def generates_at_level(v: DeltaElement, budget: int = 1 << 24) -> bool:
    """True iff matrices at v's level sweep it across the whole level.

    {A v : A in M_N(R)} equals W^N where W = {sum_j r_j v_j} because the
    rows of A are independent, so the sweep is exhaustive iff W is the
    whole module.  W is the submodule generated by the coordinates.
    """
    mod = v.module
    o = mod.ring.order()
    if o is not None and o ** len(v.vec) > budget:
        raise RingError("coefficient sweep exceeds the candidate budget")
    reach = submodule_generated(mod, v.vec)
    return reach == frozenset(mod.elements)


# ---------------------------------------------------------------------------
# level-wise verification drivers


def delta_generator_check(
    mod: FiniteModule, n: int, max_level: int, budget: int = 1 << 24
) -> list["Outcome"]:
    """The lifted level-k vectors generate the whole next level.

    Reachability closure under addition and elementary matrix actions
    r*e_{ij} (matrices decompose as sums of those, so this is the full
    module closure over the level-(k+1) matrix ring).
    """
    from .report import FAIL, PASS, UNDECIDED, Outcome

    ring = mod.ring
    els = ring.elements()
    outcomes = []
    for k in range(max_level):
        size = n ** (k + 1)
        full = len(mod.elements) ** size
        if full > budget:
            outcomes.append(Outcome(f"delta.generator.k{k}", UNDECIDED, "level too large", k))
            continue
        reach = {
            delta_lift(inject_vector(mod, n, k, vec), k + 1)
            for vec in enumerate_vectors(mod, n, k)
        }
        reach.add((mod.zero,) * size)
        frontier = list(reach)
        while frontier:
            vec = frontier.pop()
            new = [tuple(mod.add(a, b) for a, b in zip(vec, other)) for other in list(reach)]
            for r in els:
                for i in range(size):
                    for j in range(size):
                        hit = mod.act(r, vec[j])
                        if hit == mod.zero:
                            continue
                        single = [mod.zero] * size
                        single[i] = hit
                        new.append(tuple(single))
            for cand in new:
                if cand not in reach:
                    reach.add(cand)
                    frontier.append(cand)
        ok = len(reach) == full
        outcomes.append(
            Outcome(
                f"delta.generator.k{k}",
                PASS if ok else FAIL,
                witness=f"reached {len(reach)}/{full} level-{k + 1} vectors",
                level=k,
            )
        )
    return outcomes


def delta_simple_check(
    mod: FiniteModule, n: int, max_level: int, budget: int = 1 << 24
) -> list["Outcome"]:
    """Every nonzero vector at every level <= max_level generates."""
    from .report import FAIL, PASS, VACUOUS, Outcome

    if not is_simple(mod):
        return [
            Outcome(
                "delta.simple.precondition",
                VACUOUS,
                witness=f"{mod.name} is not a simple module",
            )
        ]
    outcomes = []
    zero_vec = mod.zero
    for k in range(max_level + 1):
        bad = None
        count = 0
        for vec in enumerate_vectors(mod, n, k):
            if all(x == zero_vec for x in vec):
                continue
            count += 1
            v = inject_vector(mod, n, k, vec)
            if not generates_at_level(v, budget):
                bad = v
                break
        outcomes.append(
            Outcome(
                f"delta.simple.k{k}",
                PASS if bad is None else FAIL,
                witness=f"all {count} nonzero vectors generate" if bad is None else str(bad),
                level=k,
            )
        )
    return outcomes


def delta_faithful_check(
    mod: FiniteModule, n: int, max_level: int, budget: int = 1 << 24
) -> list["Outcome"]:
    """No nonzero level matrix annihilates the whole level."""
    from .report import FAIL, PASS, VACUOUS, Outcome

    if not is_faithful(mod):
        ann = sorted(annihilator(mod), key=mod.ring.element_index.__getitem__)
        bad = next(a for a in ann if a != mod.ring.zero)
        return [
            Outcome(
                "delta.faithful.precondition",
                VACUOUS,
                witness=f"{bad} annihilates {mod.name}",
            )
        ]
    ring = mod.ring
    outcomes = []
    for k in range(max_level + 1):
        size = n**k
        o = ring.order()
        total = o ** (size * size)
        if total > budget:
            outcomes.append(Outcome(f"delta.faithful.k{k}", "undecided", "level too large", k))
            continue
        mring = MatrixRing(ring, size)
        zero_mat = mring.zero
        vectors = list(enumerate_vectors(mod, n, k))
        bad = None
        for a in mring.elements():
            if a == zero_mat:
                continue
            mat = a.payload
            hits = False
            for vec in vectors:
                out = []
                for i in range(size):
                    row = mat.row(i)
                    acc = mod.zero
                    for j in range(size):
                        acc = mod.add(acc, mod.act(row[j], vec[j]))
                    out.append(acc)
                if any(x != mod.zero for x in out):
                    hits = True
                    break
            if not hits:
                bad = a
                break
        outcomes.append(
            Outcome(
                f"delta.faithful.k{k}",
                PASS if bad is None else FAIL,
                witness=f"no nonzero annihilator among {total - 1} matrices"
                if bad is None
                else str(bad),
                level=k,
            )
        )
    return outcomes


def interleave(v: DeltaElement, w: DeltaElement, summod: FiniteModule) -> DeltaElement:
    """The canonical map Delta(M) (+) Delta(N) -> Delta(M (+) N)."""
    if v.n != w.n:
        raise RingMismatchError("mixed n between interleave components")
    m = max(v.level, w.level)
    vv, ww = delta_lift(v, m), delta_lift(w, m)
    return inject_vector(summod, v.n, m, tuple(zip(vv, ww)))


def delta_coproduct_check(
    m1: FiniteModule,
    m2: FiniteModule,
    n: int,
    max_level: int,
    rng,
    samples: int = 500,
) -> list["Outcome"]:
    """Interleaving is an action-preserving bijection on bounded classes."""
    from .closure import random_closure_element
    from .report import FAIL, PASS, Outcome

    summod = direct_sum(m1, m2)
    outcomes = []
    pairs = {}
    for v in enumerate_delta_classes(m1, n, max_level):
        for w in enumerate_delta_classes(m2, n, max_level):
            pairs[(v, w)] = interleave(v, w, summod)
    images = set(pairs.values())
    targets = set(enumerate_delta_classes(summod, n, max_level))
    ok = len(images) == len(pairs) and images == targets
    outcomes.append(
        Outcome(
            f"delta.coproduct.bijection.k{max_level}",
            PASS if ok else FAIL,
            witness=f"{len(pairs)} pairs onto {len(targets)} classes",
            level=max_level,
        )
    )
    ring = m1.ring
    bad = None
    for _ in range(samples):
        a = random_closure_element(ring, n, rng, max_level)
        vs = list(enumerate_delta_classes(m1, n, max_level))
        ws = list(enumerate_delta_classes(m2, n, max_level))
        v = vs[rng.randrange(len(vs))]
        w = ws[rng.randrange(len(ws))]
        left = interleave(delta_act(a, v), delta_act(a, w), summod)
        right = delta_act(a, interleave(v, w, summod))
        if left != right:
            bad = (a, v, w)
            break
    outcomes.append(
        Outcome(
            "delta.coproduct.action",
            PASS if bad is None else FAIL,
            witness="-" if bad is None else f"at {bad[0]}",
            level=max_level,
        )
    )
    return outcomes
