"""Mobi algebras: a ternary operation p with constants 0, 1/2, 1.

The defining laws (law ids used throughout reports):

  A0  closure: p(a,b,c) lands in the carrier
  A1  p(1, 1/2, 0) = 1/2
  A2  p(0, a, 1) = a
  A3  p(a, b, a) = a
  A4  p(a, 0, b) = a
  A5  p(b, 1, a) = a
  A6  p(a, 1/2, b) = p(a, 1/2, c)  =>  b = c
  A7  p(a, p(b1,b2,b3), c) = p(p(a,b1,c), b2, p(a,b3,c))
  A8  p(p(a1,b,c1), 1/2, p(a2,b,c2)) = p(p(a1,1/2,a2), b, p(c1,1/2,c2))

Derived operations: complement(a) = p(1,a,0), product(a,b) = p(0,a,b),
oplus(a,b) = p(a,1/2,b), circ(a,b) = p(a,b,1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .carriers import Carrier, CarrierError, MembershipError, sample
from .report import (CheckReport, Sampled, check_equation,
                     check_implication, check_predicate, law_seed)
from .ringmod import RingWithHalf


@dataclass(frozen=True)
class MobiAlgebra:
    carrier: Carrier
    p: Callable  # ternary operation
    zero: object
    half: object
    one: object
    two: object | None = None  # declared doubler, if the carrier has one
    name: str = ""


class AmbiguousTwoError(CarrierError):
    """Multiple doublers found in a finite carrier: an axiom is suspect."""


class NoHalfError(CarrierError):
    """The ring has no element h with h + h = 1."""


def eval_p(algebra: MobiAlgebra, a, b, c):
    """Apply p after validating membership of all three arguments."""
    for name, v in (("a", a), ("b", b), ("c", c)):
        if not algebra.carrier.contains(v):
            raise MembershipError(
                f"{name}={v!r} is not in {algebra.carrier.describe()}")
    return algebra.p(a, b, c)


def complement(algebra: MobiAlgebra, a):
    return algebra.p(algebra.one, a, algebra.zero)


def product(algebra: MobiAlgebra, a, b):
    return algebra.p(algebra.zero, a, b)


def oplus(algebra: MobiAlgebra, a, b):
    return algebra.p(a, algebra.half, b)


def circ(algebra: MobiAlgebra, a, b):
    return algebra.p(a, b, algebra.one)


_DERIVED = {"complement": (complement, 1), "product": (product, 2),
            "oplus": (oplus, 2), "circ": (circ, 2)}


def eval_derived(algebra: MobiAlgebra, op: str, *args):
    """Evaluate a named derived operation with membership validation."""
    if op not in _DERIVED:
        raise ValueError(f"unknown derived op {op!r} (choose from {sorted(_DERIVED)})")
    fn, arity = _DERIVED[op]
    if len(args) != arity:
        raise ValueError(f"{op} takes {arity} argument(s), got {len(args)}")
    for v in args:
        if not algebra.carrier.contains(v):
            raise MembershipError(f"{v!r} is not in {algebra.carrier.describe()}")
    return fn(algebra, *args)


def check_algebra(algebra: MobiAlgebra, strategy=Sampled()) -> list[CheckReport]:
    """Closure plus A1..A8."""
    c = algebra.carrier
    e = c.eq
    p = algebra.p
    zero, half, one = algebra.zero, algebra.half, algebra.one
    return [
        check_predicate("A0", ("a", "b", "c"), (c, c, c),
                        lambda a, b, cc: p(a, b, cc), c.contains, strategy),
        check_equation("A1", (), (), e,
                       lambda: p(one, half, zero), lambda: half, strategy),
        check_equation("A2", ("a",), (c,), e,
                       lambda a: p(zero, a, one), lambda a: a, strategy),
        check_equation("A3", ("a", "b"), (c, c), e,
                       lambda a, b: p(a, b, a), lambda a, b: a, strategy),
        check_equation("A4", ("a", "b"), (c, c), e,
                       lambda a, b: p(a, zero, b), lambda a, b: a, strategy),
        check_equation("A5", ("a", "b"), (c, c), e,
                       lambda a, b: p(b, one, a), lambda a, b: a, strategy),
        check_implication("A6", ("a", "b", "c"), (c, c, c),
                          lambda a, b, cc: e(p(a, half, b), p(a, half, cc)),
                          e, lambda a, b, cc: b, lambda a, b, cc: cc, strategy,
                          construct=lambda t: (t[0], t[1], t[1])),
        check_equation("A7", ("a", "b1", "b2", "b3", "c"), (c, c, c, c, c), e,
                       lambda a, b1, b2, b3, cc: p(a, p(b1, b2, b3), cc),
                       lambda a, b1, b2, b3, cc: p(p(a, b1, cc), b2, p(a, b3, cc)),
                       strategy),
        check_equation("A8", ("a1", "b", "c1", "a2", "c2"), (c, c, c, c, c), e,
                       lambda a1, b, c1, a2, c2: p(p(a1, b, c1), half, p(a2, b, c2)),
                       lambda a1, b, c1, a2, c2: p(p(a1, half, a2), b, p(c1, half, c2)),
                       strategy),
    ]


def check_properties(algebra: MobiAlgebra, strategy=Sampled()) -> list[CheckReport]:
    """Consequences eq(6)..eq(14) of the axioms, checked directly."""
    A = algebra
    c = A.carrier
    e = c.eq
    p = A.p
    zero, half = A.zero, A.half

    def pair_eq(x, y):
        return e(x[0], y[0]) and e(x[1], y[1])

    return [
        check_equation("eq(6)", (), (), e,
                       lambda: complement(A, half), lambda: half, strategy),
        # both product orders against 0 (+) a, sides shown as pairs
        check_equation("eq(7)", ("a",), (c,), pair_eq,
                       lambda a: (product(A, a, half), product(A, half, a)),
                       lambda a: (oplus(A, zero, a), oplus(A, zero, a)), strategy),
        check_implication("eq(8)", ("a", "b"), (c, c),
                          lambda a, b: e(product(A, a, half), product(A, b, half)),
                          e, lambda a, b: a, lambda a, b: b, strategy,
                          construct=lambda t: (t[0], t[0])),
        check_equation("eq(9)", ("a",), (c,), e,
                       lambda a: p(complement(A, a), half, a), lambda a: half, strategy),
        check_implication("eq(10)", ("a",), (c,),
                          lambda a: e(complement(A, a), a),
                          e, lambda a: a, lambda a: half, strategy,
                          construct=lambda t: (half,)),
        check_equation("eq(11)", ("a", "b", "c"), (c, c, c), e,
                       lambda a, b, cc: complement(A, p(a, b, cc)),
                       lambda a, b, cc: p(complement(A, a), b, complement(A, cc)),
                       strategy),
        check_equation("eq(12)", ("a", "b", "c"), (c, c, c), e,
                       lambda a, b, cc: p(cc, b, a),
                       lambda a, b, cc: p(a, complement(A, b), cc), strategy),
        check_equation("eq(13)", ("a", "b"), (c, c), e,
                       lambda a, b: complement(A, circ(A, a, b)),
                       lambda a, b: product(A, complement(A, b), complement(A, a)),
                       strategy),
        check_equation("eq(14)", ("a", "b", "c"), (c, c, c), e,
                       lambda a, b, cc: product(A, half, p(a, b, cc)),
                       lambda a, b, cc: oplus(A, product(A, complement(A, b), a),
                                              product(A, b, cc)), strategy),
    ]


@dataclass(frozen=True)
class TwoResult:
    """Outcome of solving p(0, 1/2, x) = 1."""

    value: object | None
    status: str  # "declared" | "found" | "proven-absent" | "absent-after-search"

    @property
    def exists(self) -> bool:
        return self.value is not None


def solve_two(algebra: MobiAlgebra, strategy=Sampled()) -> TwoResult:
    """Find the doubler: the solution of p(0, 1/2, x) = 1, if any.

    Finite carriers are scanned exhaustively, so absence is proven and
    multiple solutions raise AmbiguousTwoError.  Infinite carriers honor a
    declared value, else report absent-after-search.
    """
    A = algebra
    c = A.carrier

    def is_two(x):
        return c.eq(A.p(A.zero, A.half, x), A.one)

    if A.two is not None:
        if not is_two(A.two):
            raise CarrierError(f"declared two={A.two!r} does not satisfy p(0,1/2,x)=1")
        return TwoResult(A.two, "declared")
    if c.finite:
        hits = [x for x in c.elements() if is_two(x)]
        if len(hits) > 1:
            raise AmbiguousTwoError(f"multiple doublers found: {hits!r}")
        if hits:
            return TwoResult(hits[0], "found")
        return TwoResult(None, "proven-absent")
    n = strategy.samples if isinstance(strategy, Sampled) else 500
    seed = strategy.seed if isinstance(strategy, Sampled) else 0
    for x in sample(c, law_seed(seed, "solve-two"), n):
        if is_two(x):
            return TwoResult(x, "found")
    return TwoResult(None, "absent-after-search")


def _resolve_two(algebra: MobiAlgebra, two):
    if two is not None:
        return two
    result = solve_two(algebra)
    if result.value is None:
        raise CarrierError(
            f"algebra {algebra.name or algebra.carrier.describe()} has no doubler "
            f"({result.status}); pass one explicitly")
    return result.value


def ring_from_algebra(algebra: MobiAlgebra, two=None) -> RingWithHalf:
    """The ring with a + b = p(0, 2, p(a,1/2,b)) and a * b = p(0, a, b)."""
    t = _resolve_two(algebra, two)
    p = algebra.p
    zero, half = algebra.zero, algebra.half
    return RingWithHalf(
        carrier=algebra.carrier,
        add=lambda a, b: p(zero, t, p(a, half, b)),
        mul=lambda a, b: p(zero, a, b),
        neg=lambda a: p(a, t, zero),
        zero=zero,
        one=algebra.one,
        half=half,
        name=f"ring({algebra.name})" if algebra.name else "ring",
    )


def algebra_from_ring(ring: RingWithHalf) -> MobiAlgebra:
    """The algebra with p(a, b, c) = a + b*c - b*a; requires half+half = one."""
    if not ring.carrier.eq(ring.add(ring.half, ring.half), ring.one):
        raise NoHalfError(f"{ring.name or 'ring'}: half + half != one")
    add, mul, neg = ring.add, ring.mul, ring.neg
    return MobiAlgebra(
        carrier=ring.carrier,
        p=lambda a, b, c: add(a, add(mul(b, c), neg(mul(b, a)))),
        zero=ring.zero,
        half=ring.half,
        one=ring.one,
        two=ring.two,
        name=f"algebra({ring.name})" if ring.name else "algebra",
    )


def check_commutativity_condition(algebra: MobiAlgebra, strategy=Sampled()) -> CheckReport:
    """p(0,a,b) = p(0,b,a): exactly when the induced multiplication commutes."""
    c = algebra.carrier
    return check_equation("commutativity", ("a", "b"), (c, c), c.eq,
                          lambda a, b: product(algebra, a, b),
                          lambda a, b: product(algebra, b, a), strategy)


def check_algebra_morphism(f: Callable, source: MobiAlgebra, target: MobiAlgebra,
                           strategy=Sampled()) -> list[CheckReport]:
    """f preserves constants and p.

    When p-preservation passes, an extra report `half-iff-ends` asserts that
    preserving {0, 1} and preserving 1/2 have the same verdict (they are
    equivalent for p-preserving maps).
    """
    sc, tc = source.carrier, target.carrier
    e = tc.eq
    reports = [
        check_equation("f(0)", (), (), e, lambda: f(source.zero),
                       lambda: target.zero, strategy),
        check_equation("f(half)", (), (), e, lambda: f(source.half),
                       lambda: target.half, strategy),
        check_equation("f(1)", (), (), e, lambda: f(source.one),
                       lambda: target.one, strategy),
        check_equation("f(p)", ("a", "b", "c"), (sc, sc, sc), e,
                       lambda a, b, c: f(source.p(a, b, c)),
                       lambda a, b, c: target.p(f(a), f(b), f(c)), strategy),
    ]
    by_law = {r.law: r for r in reports}
    if by_law["f(p)"].passed:
        ends = by_law["f(0)"].passed and by_law["f(1)"].passed
        halves = by_law["f(half)"].passed
        verdict = "pass" if ends == halves else "fail"
        witness = None
        if verdict == "fail":
            from .report import Witness
            witness = Witness({"f(0) and f(1)": ends, "f(half)": halves},
                              ends, halves, None)
        reports.append(CheckReport("half-iff-ends", by_law["f(p)"].strategy,
                                   verdict, witness))
    return reports
