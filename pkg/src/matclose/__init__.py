"""matclose: exact matrix-closure arithmetic and proposition verification.

The library side exposes the ring zoo, matrices, the closure construction
and its verification procedures; the CLI side (``matclose``) runs named
proposition suites over finite rings and writes deterministic reports.
"""

from .rings import (
    BoundExceededError,
    GroupRing,
    ModularRing,
    NotDecidableError,
    NotEnumerableError,
    PolynomialRing,
    PrimeField,
    ProductRing,
    Ring,
    RingElement,
    RingError,
    RingMismatchError,
    center,
    check_ring_axioms,
    enumerate_elements,
    is_unit,
    one,
    random_element,
    zero,
)
from .matrices import (
    Matrix,
    MatrixRing,
    RingMorphism,
    check_morphism,
    diag_repeat,
    flatten,
    identity_morphism,
    mat_identity,
    mat_inverse,
    mat_is_invertible,
    mat_map,
    mat_unit,
    mat_zero,
    scalar_matrix,
    unflatten,
)
from .closure import (
    ClosureElement,
    ClosureRing,
    NotCentralError,
    cadd,
    center_check,
    center_section,
    closure_section,
    cmap,
    cmul,
    cneg,
    cone,
    cunit,
    czero,
    embed,
    enumerate_closure_classes,
    flatten_closure,
    format_closure,
    inject,
    lift,
    random_closure_element,
)

__version__ = "0.1.0"
