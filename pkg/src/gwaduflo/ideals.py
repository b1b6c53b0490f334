"""Primitive ideals through supports of simple weight modules.

The annihilator of ``L(m_a)`` is ``A * I(C) * A`` where ``C`` is the Zariski
closure of the support of ``L(m_a)`` and ``I(C)`` its vanishing ideal in
``R``.  Closures here are products of finite coordinate sets and full lines,
so ``I(C)`` is generated by one polynomial per finite coordinate, and the
closure determines the ideal.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .algebra import GwaElement, GwaSpec
from .exactnum import GaussianRational, UnivariateFactored, lattice_offset
from .geometry import (ClosedSet, WeightPoint, as_point, break_positions,
                       closed_equal, closed_intersect, support_intersect,
                       support_of_simple, support_translate, zariski_closure)
from .modules import (SizeError, apply_element, cells, realize_window)
from .sampling import random_point


@dataclass(frozen=True)
class PrimitiveIdeal:
    closure: ClosedSet
    generators: Tuple[UnivariateFactored, ...] = field(compare=False, default=())

    @classmethod
    def from_closure(cls, closure: ClosedSet) -> "PrimitiveIdeal":
        if closure.is_empty():
            raise ValueError("closure of a support is never empty")
        gens = tuple(UnivariateFactored(i, closure.coords[i]) for i in closure.constrained())
        return cls(closure, gens)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def sort_key(self):
        key = []
        for c in self.closure.coords:
            key.append((0, ()) if c is None else (1, tuple(z.sort_key() for z in c)))
        return (len(self.closure.constrained()), tuple(key))

    def describe(self) -> str:
        if self.is_zero:
            return "(0)"
        rank1 = self.closure.n == 1
        return "A*<" + ", ".join(g.format("T" if rank1 else None) for g in self.generators) + ">*A"


@dataclass(frozen=True)
class DirectionOption:
    """A closure coordinate: unbounded (``pair is None``) or spanned by two adjacent roots."""

    pair: Optional[Tuple[GaussianRational, GaussianRational]] = None
    values: Optional[tuple] = None


def adjacent_zero_pairs(spec: GwaSpec, i: int) -> List[Tuple[GaussianRational, GaussianRational]]:
    roots = spec.t[i].root_set()
    b = spec.b[i]
    pairs = []
    for zl, zu in itertools.permutations(roots, 2):
        m = lattice_offset(zu, zl, b)
        if m is None or m <= 0:
            continue
        between = False
        for z in roots:
            k = lattice_offset(z, zl, b)
            if k is not None and 0 < k < m:
                between = True
                break
        if not between:
            pairs.append((zl, zu))
    return pairs


def direction_options(spec: GwaSpec, i: int) -> List[DirectionOption]:
    out = [DirectionOption()]
    b = spec.b[i]
    for zl, zu in adjacent_zero_pairs(spec, i):
        m = lattice_offset(zu, zl, b)
        out.append(DirectionOption((zl, zu), tuple(zl + k * b for k in range(1, m + 1))))
    return out


def annihilator_of_simple(spec: GwaSpec, a: Sequence) -> PrimitiveIdeal:
    return PrimitiveIdeal.from_closure(zariski_closure(spec, support_of_simple(spec, a)))


def enumerate_primitive_ideals(spec: GwaSpec) -> List[PrimitiveIdeal]:
    per_dir = [direction_options(spec, i) for i in range(spec.n)]
    seen = {}
    for combo in itertools.product(*per_dir):
        cs = ClosedSet(tuple(opt.values for opt in combo))
        seen.setdefault(cs, PrimitiveIdeal.from_closure(cs))
    return sorted(seen.values(), key=PrimitiveIdeal.sort_key)


def duflo_refine(spec: GwaSpec, a: Sequence) -> WeightPoint:
    """A point whose simple module has a highest weight generator and the same annihilator."""
    a = as_point(spec, a)
    br = break_positions(spec, a)
    out = []
    for i in range(spec.n):
        ku = br.k_up(i)
        if ku is not None:
            out.append(a[i] + ku * spec.b[i])
        else:
            out.append(lowest_root_in_class(spec, i))
    return tuple(out)


def lowest_root_in_class(spec: GwaSpec, i: int) -> GaussianRational:
    """First root (canonical order) with no other root below it on its lattice line."""
    roots = spec.t[i].root_set()
    for z in roots:
        if not any((k := lattice_offset(w, z, spec.b[i])) is not None and k < 0 for w in roots):
            return z
    raise AssertionError("a finite root set always has a lowest element per class")


def window_annihilates(spec: GwaSpec, ideal: PrimitiveIdeal, a: Sequence, box=None) -> bool:
    """Apply every generator to every basis vector of an ``L(m_a)`` window."""
    w = realize_window(spec, a, box, "simple")
    for g in ideal.generators:
        u = GwaElement.ring(spec, g.expand(spec.n))
        for alpha in w.basis:
            if apply_element(w, u, {alpha: GaussianRational(1)}):
                return False
    return True


def verify_annihilation(spec: GwaSpec, ideal: PrimitiveIdeal, a: Sequence, box=None) -> bool:
    a = as_point(spec, a)
    supp = support_of_simple(spec, a)
    finite_ok = True
    for g in ideal.generators:
        vals = supp.coordinate_values(g.var)
        # a nonzero polynomial vanishes at finitely many points only
        if vals is None or any(g(x) for x in vals):
            finite_ok = False
            break
    return finite_ok and window_annihilates(spec, ideal, a, box)


# ---------------------------------------------------------------------------
# hypothesis checks

@dataclass
class Check:
    name: str
    passed: bool
    detail: str
    witness: Optional[dict] = None


def _fmt_point(p):
    return [str(x) for x in p]


def check_conditions(spec: GwaSpec, sample_count: int = 100, seed: int = 0) -> List[Check]:
    if sample_count < 1:
        raise ValueError("sample_count must be at least 1")
    rng = random.Random(seed)
    points = [random_point(rng, spec) for _ in range(sample_count)]
    checks = [
        Check("A1", True, "grading by the adjoint action of span(T_i); degree 0 part is R"),
        Check("A2", True, "translations give a free Z^n action, so each A_alpha = R*a^alpha"),
        Check("A3", True, "R is a polynomial ring, hence noetherian, hence so is A"),
    ]

    bound = spec.length_bound()
    worst, worst_pt, bad = 0, None, None
    for p in points:
        length = len(cells(spec, p).cells)
        if length > worst:
            worst, worst_pt = length, p
        if length > bound and bad is None:
            bad = {"point": _fmt_point(p), "length": length}
    checks.append(Check("A4", bad is None,
                        f"composition length <= {bound}; max sampled {worst}",
                        bad or {"bound": bound, "max_length": worst,
                                "attained_at": _fmt_point(worst_pt)}))

    ideals = enumerate_primitive_ideals(spec)
    closures = {I.closure for I in ideals}
    missing = None
    for p in points:
        if annihilator_of_simple(spec, p).closure not in closures:
            missing = {"point": _fmt_point(p)}
            break
    checks.append(Check("A5", missing is None,
                        f"{len(ideals)} distinct closures", missing or {"count": len(ideals)}))

    fail = None
    for p in points:
        s = support_of_simple(spec, p)
        cl = zariski_closure(spec, s)
        for _ in range(3):
            tau = tuple(rng.randint(-6, 6) for _ in range(spec.n))
            st = support_translate(s, tau)
            lhs_support = support_intersect(st, s)
            rhs = closed_intersect(zariski_closure(spec, st), cl)
            if lhs_support is None:
                ok = rhs.is_empty()
            else:
                ok = closed_equal(zariski_closure(spec, lhs_support), rhs)
            if not ok and fail is None:
                fail = {"point": _fmt_point(p), "tau": list(tau)}
    checks.append(Check("A6", fail is None,
                        "closure of (tau + S) meet S equals the meet of the closures", fail))
    return checks


__all__ = [
    "PrimitiveIdeal", "DirectionOption", "adjacent_zero_pairs", "direction_options",
    "annihilator_of_simple", "enumerate_primitive_ideals", "duflo_refine",
    "lowest_root_in_class", "verify_annihilation", "window_annihilates",
    "check_conditions", "Check", "SizeError",
]
