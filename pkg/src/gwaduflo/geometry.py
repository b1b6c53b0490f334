"""Weights, break offsets, support rectangles and their Zariski closures.

A weight is a point ``a`` of ``k^n``, standing for the maximal ideal
``(T_1 - a_1, ..., T_n - a_n)``.  Supports are handled in integer offsets
``alpha`` relative to a base point: the weight of ``alpha`` is
``a + alpha * b`` (componentwise).  Interval ends are ``None`` when infinite.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .algebra import GwaSpec
from .exactnum import GaussianRational, gr, lattice_offset, sorted_unique

WeightPoint = Tuple[GaussianRational, ...]


def as_point(spec: GwaSpec, a: Sequence) -> WeightPoint:
    pt = tuple(gr(x) for x in a)
    if len(pt) != spec.n:
        raise ValueError(f"point needs {spec.n} coordinates, got {len(pt)}")
    return pt


def shift_point(spec: GwaSpec, a: WeightPoint, alpha: Sequence[int]) -> WeightPoint:
    """The weight of ``sigma^alpha(m_a)``, i.e. ``a + alpha*b``."""
    return tuple(x + k * bi for x, k, bi in zip(a, alpha, spec.b))


@dataclass(frozen=True)
class BreakData:
    """Per direction, sorted offsets k with ``t_i(a_i + k*b_i) = 0``."""

    offsets: Tuple[Tuple[int, ...], ...]

    def k_up(self, i: int) -> Optional[int]:
        up = [k for k in self.offsets[i] if k >= 0]
        return min(up) if up else None

    def k_low(self, i: int) -> Optional[int]:
        low = [k for k in self.offsets[i] if k < 0]
        return max(low) if low else None

    def is_break(self, i: int, k: int) -> bool:
        return k in self.offsets[i]


def break_positions(spec: GwaSpec, a: Sequence) -> BreakData:
    a = as_point(spec, a)
    offsets = []
    for i in range(spec.n):
        ks = set()
        for z in spec.t[i].root_set():
            k = lattice_offset(z, a[i], spec.b[i])
            if k is not None:
                ks.add(k)
        offsets.append(tuple(sorted(ks)))
    return BreakData(tuple(offsets))


@dataclass(frozen=True)
class SupportRect:
    """Lattice points ``base + alpha*step`` with ``lo_i <= alpha_i <= hi_i``."""

    base: WeightPoint
    step: Tuple[GaussianRational, ...]
    lo: Tuple[Optional[int], ...]
    hi: Tuple[Optional[int], ...]

    def __post_init__(self):
        for l, h in zip(self.lo, self.hi):
            if l is not None and h is not None and l > h:
                raise ValueError(f"empty interval [{l}, {h}]")

    @property
    def n(self) -> int:
        return len(self.base)

    def contains(self, alpha: Sequence[int]) -> bool:
        for k, l, h in zip(alpha, self.lo, self.hi):
            if (l is not None and k < l) or (h is not None and k > h):
                return False
        return True

    def is_finite(self) -> bool:
        return all(l is not None for l in self.lo) and all(h is not None for h in self.hi)

    def size(self) -> Optional[int]:
        if not self.is_finite():
            return None
        out = 1
        for l, h in zip(self.lo, self.hi):
            out *= h - l + 1
        return out

    def coordinate_values(self, i: int) -> Optional[tuple]:
        """Field values of coordinate i, or None if the interval is unbounded."""
        l, h = self.lo[i], self.hi[i]
        if l is None or h is None:
            return None
        return tuple(self.base[i] + k * self.step[i] for k in range(l, h + 1))

    def weights(self) -> list:
        """All weights (finite rectangles only), in lexicographic offset order."""
        if not self.is_finite():
            raise ValueError("support is infinite")
        pts = [()]
        for i in range(self.n):
            vals = self.coordinate_values(i)
            pts = [p + (v,) for p in pts for v in vals]
        return pts

    def weight(self, alpha: Sequence[int]) -> WeightPoint:
        return tuple(x + k * s for x, k, s in zip(self.base, alpha, self.step))


def support_of_verma(spec: GwaSpec, a: Sequence) -> SupportRect:
    a = as_point(spec, a)
    return SupportRect(a, spec.b, (None,) * spec.n, (None,) * spec.n)


def support_of_simple(spec: GwaSpec, a: Sequence, breaks: BreakData | None = None) -> SupportRect:
    a = as_point(spec, a)
    br = breaks or break_positions(spec, a)
    lo, hi = [], []
    for i in range(spec.n):
        kl = br.k_low(i)
        lo.append(None if kl is None else kl + 1)
        hi.append(br.k_up(i))
    return SupportRect(a, spec.b, tuple(lo), tuple(hi))


@dataclass(frozen=True)
class ClosedSet:
    """Product of coordinate sets; ``None`` is the full line, else a sorted tuple.

    An empty tuple in any coordinate makes the whole set empty.
    """

    coords: Tuple[Optional[tuple], ...]

    def __post_init__(self):
        canon = tuple(None if c is None else sorted_unique(gr(x) for x in c) for c in self.coords)
        object.__setattr__(self, "coords", canon)

    @property
    def n(self) -> int:
        return len(self.coords)

    def constrained(self) -> tuple:
        """The directions with a finite coordinate set."""
        return tuple(i for i, c in enumerate(self.coords) if c is not None)

    def is_empty(self) -> bool:
        return any(c is not None and not c for c in self.coords)

    def is_full(self) -> bool:
        return all(c is None for c in self.coords)

    def contains_point(self, x: Sequence) -> bool:
        return all(c is None or gr(v) in c for c, v in zip(self.coords, x))

    def issubset(self, other: "ClosedSet") -> bool:
        if self.is_empty():
            return True
        for c, d in zip(self.coords, other.coords):
            if d is None:
                continue
            if c is None or not set(c) <= set(d):
                return False
        return True

    def translate(self, shift: Sequence) -> "ClosedSet":
        return ClosedSet(tuple(None if c is None else tuple(x + gr(s) for x in c)
                               for c, s in zip(self.coords, shift)))


def zariski_closure(spec: GwaSpec, s: SupportRect) -> ClosedSet:
    """Closure of a support rectangle: finite where both ends are finite."""
    if s.n != spec.n:
        raise ValueError("rank mismatch")
    coords = []
    for i in range(spec.n):
        l, h = s.lo[i], s.hi[i]
        if l is not None and h is not None and l > h:
            raise ValueError("empty support has no closure here")
        coords.append(s.coordinate_values(i))
    return ClosedSet(tuple(coords))


def closed_intersect(x: ClosedSet, y: ClosedSet) -> ClosedSet:
    if x.n != y.n:
        raise ValueError("rank mismatch")
    out = []
    for c, d in zip(x.coords, y.coords):
        if c is None:
            out.append(d)
        elif d is None:
            out.append(c)
        else:
            out.append(tuple(v for v in c if v in set(d)))
    return ClosedSet(tuple(out))


def closed_equal(x: ClosedSet, y: ClosedSet) -> bool:
    if x.is_empty() and y.is_empty():
        return True
    return x == y


def support_translate(s: SupportRect, tau: Sequence[int]) -> SupportRect:
    """Shift the support by ``tau*b``: the base point moves, offsets stay."""
    return SupportRect(s.weight(tau), s.step, s.lo, s.hi)


def support_intersect(s1: SupportRect, s2: SupportRect) -> Optional[SupportRect]:
    """Intersection expressed relative to ``s1.base``; None if empty or on different cosets."""
    if s1.n != s2.n or s1.step != s2.step:
        raise ValueError("supports live on different lattices")
    lo, hi = [], []
    for i in range(s1.n):
        d = lattice_offset(s2.base[i], s1.base[i], s1.step[i])
        if d is None:
            return None
        l2 = None if s2.lo[i] is None else s2.lo[i] + d
        h2 = None if s2.hi[i] is None else s2.hi[i] + d
        l = _max_opt(s1.lo[i], l2)
        h = _min_opt(s1.hi[i], h2)
        if l is not None and h is not None and l > h:
            return None
        lo.append(l)
        hi.append(h)
    return SupportRect(s1.base, s1.step, tuple(lo), tuple(hi))


def _max_opt(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return max(x, y)


def _min_opt(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return min(x, y)
