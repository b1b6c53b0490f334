"""Weight modules ``M(m_a) = A/A m_a`` and their simple tops ``L(m_a)``.

Every weight space of ``M(m_a)`` is one-dimensional, spanned by ``v_alpha``
(the class of ``a^alpha``) of weight ``a + alpha*b``.  A submodule is therefore
fixed by its support, and supports are unions of *cells*: the rectangles cut
out of ``Z^n`` by the break offsets.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import GwaElement, GwaSpec, generator_word
from .exactnum import ONE, ZERO, GaussianRational, RingElement, gr
from .geometry import (BreakData, SupportRect, WeightPoint, as_point,
                       break_positions, shift_point, support_of_simple)

MAX_CELLS = 20
DEFAULT_RADIUS = 10
DEFAULT_PAD = 2

Offset = Tuple[int, ...]
Cell = Tuple[int, ...]
Vector = Dict[Offset, GaussianRational]


class SizeError(ValueError):
    """The requested computation exceeds the exhaustive-enumeration limit."""


class WindowOverflow(ValueError):
    """An action produced a nonzero component outside the window box."""


# ---------------------------------------------------------------------------
# action coefficients

def action_coefficient(spec: GwaSpec, a: Sequence, alpha: Sequence[int], i: int,
                       raising: bool) -> GaussianRational:
    """Scalar c with ``X_i v_alpha = c v_{alpha+e_i}`` (or ``Y_i v_alpha = c v_{alpha-e_i}``)."""
    a = as_point(spec, a)
    k = alpha[i]
    if raising:
        if k >= 0:
            return ONE
        return spec.t[i](a[i] + k * spec.b[i])
    if k <= 0:
        return ONE
    return spec.t[i](a[i] + (k - 1) * spec.b[i])


# ---------------------------------------------------------------------------
# cells and submodules

@dataclass(frozen=True)
class CellDecomposition:
    breaks: BreakData
    segments: Tuple[Tuple[Tuple[Optional[int], Optional[int]], ...], ...]
    cells: Tuple[Cell, ...]
    center: Cell

    def segment_of(self, i: int, k: int) -> int:
        for j, (lo, hi) in enumerate(self.segments[i]):
            if (lo is None or k >= lo) and (hi is None or k <= hi):
                return j
        raise AssertionError("segments cover Z")

    def cell_of(self, alpha: Sequence[int]) -> Cell:
        return tuple(self.segment_of(i, k) for i, k in enumerate(alpha))

    def successors(self, c: Cell) -> List[Cell]:
        """Cells reachable from ``c`` by one allowed break crossing."""
        out = []
        for i, j in enumerate(c):
            ks = self.breaks.offsets[i]
            # upward across the break at the top of segment j
            if j < len(ks) and ks[j] >= 0:
                out.append(c[:i] + (j + 1,) + c[i + 1:])
            # downward across the break at the bottom of segment j
            if j > 0 and ks[j - 1] < 0:
                out.append(c[:i] + (j - 1,) + c[i + 1:])
        return out

    def reach(self, c: Cell) -> frozenset:
        seen = {c}
        todo = deque([c])
        while todo:
            x = todo.popleft()
            for y in self.successors(x):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return frozenset(seen)

    def is_closed(self, cellset: Iterable[Cell]) -> bool:
        s = set(cellset)
        return all(y in s for x in s for y in self.successors(x))

    def rect(self, base: WeightPoint, step, c: Cell) -> SupportRect:
        lo = tuple(self.segments[i][j][0] for i, j in enumerate(c))
        hi = tuple(self.segments[i][j][1] for i, j in enumerate(c))
        return SupportRect(base, step, lo, hi)


def cells(spec: GwaSpec, a: Sequence) -> CellDecomposition:
    a = as_point(spec, a)
    br = break_positions(spec, a)
    segments = []
    for ks in br.offsets:
        bounds = [None] + [k for k in ks] + [None]
        seg = []
        for j in range(len(ks) + 1):
            lo = None if bounds[j] is None else bounds[j] + 1
            seg.append((lo, bounds[j + 1]))
        segments.append(tuple(seg))
    all_cells = tuple(itertools.product(*(range(len(s)) for s in segments)))
    dec = CellDecomposition(br, tuple(segments), all_cells, ())
    center = dec.cell_of((0,) * spec.n)
    return CellDecomposition(br, tuple(segments), all_cells, center)


@dataclass
class SubmoduleLattice:
    decomposition: CellDecomposition
    submodules: List[frozenset]

    def __len__(self):
        return len(self.submodules)

    @property
    def length(self) -> int:
        return len(self.decomposition.cells)

    def covers(self) -> List[Tuple[int, int]]:
        """Hasse diagram of inclusion as index pairs (smaller, larger)."""
        subs = self.submodules
        out = []
        for i, s in enumerate(subs):
            for j, t in enumerate(subs):
                if s < t and not any(s < u < t for u in subs):
                    out.append((i, j))
        return out


def _sort_cellsets(sets: Iterable[frozenset]) -> List[frozenset]:
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def enumerate_submodules(spec: GwaSpec, a: Sequence) -> SubmoduleLattice:
    """All reachability-closed cell sets of ``M(m_a)``."""
    dec = cells(spec, a)
    if len(dec.cells) > MAX_CELLS:
        raise SizeError(f"{len(dec.cells)} cells exceed the enumeration limit of {MAX_CELLS}")
    principal = {dec.reach(c) for c in dec.cells}
    found = {frozenset()}
    frontier = [frozenset()]
    # every closed set is a union of principal closures
    while frontier:
        nxt = []
        for s in frontier:
            for p in principal:
                u = s | p
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    return SubmoduleLattice(dec, _sort_cellsets(found))


def simple_subquotients(spec: GwaSpec, a: Sequence) -> List[SupportRect]:
    a = as_point(spec, a)
    dec = cells(spec, a)
    return [dec.rect(a, spec.b, c) for c in dec.cells]


# ---------------------------------------------------------------------------
# highest weight tests

def is_highest_weight_module(spec: GwaSpec, a: Sequence) -> bool:
    br = break_positions(spec, a)
    return all(br.k_up(i) is not None for i in range(spec.n))


def has_highest_weight_generator(spec: GwaSpec, a: Sequence) -> bool:
    a = as_point(spec, a)
    return all(not spec.t[i](a[i]) for i in range(spec.n))


def top_offset(spec: GwaSpec, a: Sequence) -> Optional[Offset]:
    br = break_positions(spec, a)
    top = tuple(br.k_up(i) for i in range(spec.n))
    return None if None in top else top


# ---------------------------------------------------------------------------
# windows

Box = Tuple[Tuple[int, int], ...]


def default_box(spec: GwaSpec, a: Sequence, variant: str = "verma") -> Box:
    """Support box padded by 2 where finite, radius 10 where infinite; covers all breaks."""
    br = break_positions(spec, a)
    box = []
    for i in range(spec.n):
        ks = br.offsets[i]
        kmin = min(ks + (0,))
        kmax = max(ks + (0,))
        if variant == "simple":
            lo = br.k_low(i)
            hi = br.k_up(i)
            lo = (lo + 1 - DEFAULT_PAD) if lo is not None else min(-DEFAULT_RADIUS, kmin - DEFAULT_PAD)
            hi = (hi + DEFAULT_PAD) if hi is not None else max(DEFAULT_RADIUS, kmax + DEFAULT_PAD)
        else:
            lo = min(kmin - DEFAULT_PAD, -DEFAULT_RADIUS) if not ks else kmin - DEFAULT_PAD
            hi = max(kmax + DEFAULT_PAD, DEFAULT_RADIUS) if not ks else kmax + DEFAULT_PAD
        box.append((lo, hi))
    return tuple(box)


@dataclass
class WindowModule:
    """Finite box of weight vectors of ``M(m_a)`` (``verma``) or ``L(m_a)`` (``simple``)."""

    spec: GwaSpec
    a: WeightPoint
    box: Box
    variant: str
    support: Optional[SupportRect] = None
    basis: List[Offset] = field(default_factory=list)

    def in_box(self, alpha: Sequence[int]) -> bool:
        return all(lo <= k <= hi for k, (lo, hi) in zip(alpha, self.box))

    def in_module(self, alpha: Sequence[int]) -> bool:
        return self.support is None or self.support.contains(alpha)

    def weight(self, alpha: Sequence[int]) -> WeightPoint:
        return shift_point(self.spec, self.a, alpha)

    def coefficient(self, alpha: Offset, i: int, raising: bool) -> GaussianRational:
        target = list(alpha)
        target[i] += 1 if raising else -1
        if not self.in_module(target):
            return ZERO
        return action_coefficient(self.spec, self.a, alpha, i, raising)

    def apply_generator(self, vec: Vector, i: int, raising: bool) -> Vector:
        out: Vector = {}
        for alpha, c in vec.items():
            coef = self.coefficient(alpha, i, raising)
            if not coef:
                continue
            target = list(alpha)
            target[i] += 1 if raising else -1
            target = tuple(target)
            if not self.in_box(target):
                raise WindowOverflow(f"offset {target} leaves the window {self.box}")
            out[target] = out.get(target, ZERO) + c * coef
        return {k: v for k, v in out.items() if v}

    def apply_ring(self, vec: Vector, r: RingElement) -> Vector:
        out = {}
        for alpha, c in vec.items():
            v = c * r.evaluate(self.weight(alpha))
            if v:
                out[alpha] = v
        return out

    def basis_vector(self, alpha: Sequence[int]) -> Vector:
        alpha = tuple(alpha)
        if alpha not in set(self.basis):
            raise ValueError(f"{alpha} is not a basis offset of this window")
        return {alpha: ONE}


def realize_window(spec: GwaSpec, a: Sequence, box: Box | None = None,
                   variant: str = "verma") -> WindowModule:
    if variant not in ("verma", "simple"):
        raise ValueError("variant must be 'verma' or 'simple'")
    a = as_point(spec, a)
    if box is None:
        box = default_box(spec, a, variant)
    box = tuple((int(lo), int(hi)) for lo, hi in box)
    if len(box) != spec.n or any(lo > hi for lo, hi in box):
        raise ValueError("box must give one nonempty range per direction")
    support = support_of_simple(spec, a) if variant == "simple" else None
    basis = [alpha for alpha in itertools.product(*(range(lo, hi + 1) for lo, hi in box))
             if support is None or support.contains(alpha)]
    return WindowModule(spec, a, box, variant, support, basis)


def apply_element(w: WindowModule, u: GwaElement, vec: Vector) -> Vector:
    """Act by ``u = sum r_alpha a^alpha`` on a window vector."""
    if u.spec != w.spec:
        raise ValueError("element and module belong to different algebras")
    total: Vector = {}
    for alpha, r in u.components.items():
        v = dict(vec)
        for i, raising in reversed(generator_word(alpha)):
            v = w.apply_generator(v, i, raising)
        v = w.apply_ring(v, r)
        for k, c in v.items():
            total[k] = total.get(k, ZERO) + c
    return {k: c for k, c in total.items() if c}


def joint_kernel_dimension(w: WindowModule, generators: Sequence[Tuple[int, bool]]) -> Tuple[int, List[Offset]]:
    """Dimension of the common kernel of the given generators on the window.

    Exact sparse elimination on the stacked matrix; a component leaving the
    box counts as a nonzero row so boundary vectors are not spuriously killed.
    Returns the dimension and the offsets of pivot-free columns.
    """
    rows: Dict[tuple, Dict[Offset, GaussianRational]] = {}
    for alpha in w.basis:
        for g, (i, raising) in enumerate(generators):
            coef = w.coefficient(alpha, i, raising)
            if coef:
                target = list(alpha)
                target[i] += 1 if raising else -1
                rows.setdefault((g, tuple(target)), {})[alpha] = coef
    pivots = _row_reduce([dict(r) for r in rows.values()])
    free = [alpha for alpha in w.basis if alpha not in pivots]
    return len(free), free


def _row_reduce(rows: List[Dict[Offset, GaussianRational]]) -> set:
    pivots: Dict[Offset, Dict[Offset, GaussianRational]] = {}
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            if col in pivots:
                prow = pivots[col]
                f = row[col] / prow[col]
                for k, v in prow.items():
                    nv = row.get(k, ZERO) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                pivots[col] = row
                break
    return set(pivots)


def find_top_vector(spec: GwaSpec, a: Sequence, w: WindowModule, vec: Vector) -> WeightPoint:
    """Weight of the vector reached by X-saturation and trailing root factors."""
    return _top_vector(spec, a, w, vec)[0]


def _top_vector(spec, a, w, vec):
    a = as_point(spec, a)
    if w.variant != "simple":
        raise ValueError("top vector search needs the simple-module window")
    top = top_offset(spec, a)
    if top is None:
        raise ValueError("L(m_a) is not a highest weight module")
    if not w.in_box(top):
        raise ValueError("window does not contain the top of the support")
    vec = {k: c for k, c in vec.items() if c}
    if not vec:
        raise ValueError("start vector must be nonzero")
    # X-saturation
    for i in range(spec.n):
        while True:
            nxt = w.apply_generator(vec, i, True)
            if not nxt:
                break
            vec = nxt
    # peel trailing linear factors of each t_i
    n = spec.n
    for i in range(n):
        roots = spec.t[i].roots
        for z in reversed(roots):
            factor = RingElement.variable(n, i) - z
            nxt = w.apply_ring(vec, factor)
            if not nxt:
                break
            vec = nxt
        else:
            raise AssertionError("t_i does not kill the saturated vector")
    if len(vec) != 1:
        raise AssertionError("result is not a weight vector")
    alpha = next(iter(vec))
    return w.weight(alpha), vec


# ---------------------------------------------------------------------------
# brute-force oracle

def window_submodule_supports(w: WindowModule) -> List[frozenset]:
    """Submodule supports found by closing weight vectors under all generators in the box.

    Independent of the cell machinery: uses only action coefficients.
    """
    n = w.spec.n
    basis = set(w.basis)
    edges = {}
    for x in w.basis:
        out = []
        for i in range(n):
            for raising in (True, False):
                if not w.coefficient(x, i, raising):
                    continue
                y = list(x)
                y[i] += 1 if raising else -1
                y = tuple(y)
                if y in basis:
                    out.append(y)
        edges[x] = out
    closures = set()
    for alpha in w.basis:
        seen = {alpha}
        todo = [alpha]
        while todo:
            for y in edges[todo.pop()]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        closures.add(frozenset(seen))
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for s in frontier:
            for p in closures:
                u = s | p
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    return _sort_cellsets(found)


def cellsets_in_window(lattice: SubmoduleLattice, w: WindowModule) -> List[frozenset]:
    dec = lattice.decomposition
    out = []
    for s in lattice.submodules:
        out.append(frozenset(alpha for alpha in w.basis if dec.cell_of(alpha) in s))
    return _sort_cellsets(out)
