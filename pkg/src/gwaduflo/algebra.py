"""Generalized Weyl algebras over ``k[T_1..T_n]`` with translation automorphisms.

An algebra is fixed by a :class:`GwaSpec`: steps ``b_i`` (``sigma_i(T_i) = T_i - b_i``)
and monic one-variable polynomials ``t_i`` given by their roots.  Elements are
kept in the normal form ``sum_alpha r_alpha * a^alpha`` where ``a^alpha`` is
``X_i^alpha_i`` or ``Y_i^-alpha_i`` per direction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .exactnum import (GaussianRational, RingElement, UnivariateFactored,
                       format_poly, gr)

Degree = Tuple[int, ...]


@dataclass(frozen=True)
class GwaSpec:
    b: tuple
    t: tuple

    def __post_init__(self):
        b = tuple(gr(x) for x in self.b)
        t = tuple(self.t)
        if not b:
            raise ValueError("rank must be positive")
        if len(t) != len(b):
            raise ValueError(f"need one t_i per direction: got {len(b)} steps, {len(t)} polynomials")
        for i, bi in enumerate(b):
            if not bi:
                raise ValueError(f"b_{i + 1} must be nonzero")
        for i, ti in enumerate(t):
            if not isinstance(ti, UnivariateFactored):
                raise TypeError("t_i must be UnivariateFactored")
            if ti.var != i:
                raise ValueError(f"t_{i + 1} must be a polynomial in T_{i + 1}")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "t", t)

    @classmethod
    def from_roots(cls, b: Sequence, roots: Sequence[Sequence]) -> "GwaSpec":
        return cls(tuple(b), tuple(UnivariateFactored(i, tuple(r)) for i, r in enumerate(roots)))

    @property
    def n(self) -> int:
        return len(self.b)

    def t_poly(self, i: int) -> RingElement:
        return self.t[i].expand(self.n)

    def sigma(self, r: RingElement, alpha: Sequence[int]) -> RingElement:
        """Apply ``sigma^alpha``: ``T_i -> T_i - alpha_i * b_i``."""
        for i, k in enumerate(alpha):
            if k:
                r = r.shift(i, self.b[i] * k)
        return r

    def length_bound(self) -> int:
        out = 1
        for ti in self.t:
            out *= 1 + ti.degree
        return out


def _unit(n: int, i: int, sign: int = 1) -> Degree:
    e = [0] * n
    e[i] = sign
    return tuple(e)


class GwaElement:
    """Element ``sum r_alpha a^alpha`` of the algebra of ``spec``."""

    __slots__ = ("spec", "components")

    def __init__(self, spec: GwaSpec, components: Dict[Degree, RingElement] | None = None):
        self.spec = spec
        clean = {}
        for alpha, r in (components or {}).items():
            if len(alpha) != spec.n:
                raise ValueError("degree has wrong length")
            if not isinstance(r, RingElement):
                r = RingElement.constant(spec.n, r)
            if r:
                clean[tuple(alpha)] = r
        self.components = clean

    # constructors
    @classmethod
    def zero(cls, spec):
        return cls(spec)

    @classmethod
    def ring(cls, spec, r) -> "GwaElement":
        if not isinstance(r, RingElement):
            r = RingElement.constant(spec.n, r)
        return cls(spec, {(0,) * spec.n: r})

    @classmethod
    def monomial(cls, spec, alpha: Sequence[int], r=1) -> "GwaElement":
        if not isinstance(r, RingElement):
            r = RingElement.constant(spec.n, r)
        return cls(spec, {tuple(alpha): r})

    @classmethod
    def X(cls, spec, i: int) -> "GwaElement":
        return cls.monomial(spec, _unit(spec.n, i, 1))

    @classmethod
    def Y(cls, spec, i: int) -> "GwaElement":
        return cls.monomial(spec, _unit(spec.n, i, -1))

    @classmethod
    def T(cls, spec, i: int) -> "GwaElement":
        return cls.ring(spec, RingElement.variable(spec.n, i))

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self):
        return bool(self.components)

    def _check(self, other: "GwaElement"):
        if other.spec != self.spec:
            raise ValueError("elements belong to different algebras")

    def _lift(self, other) -> "GwaElement":
        if isinstance(other, GwaElement):
            self._check(other)
            return other
        return GwaElement.ring(self.spec, other)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.components)
        for alpha, r in o.components.items():
            out[alpha] = out[alpha] + r if alpha in out else r
        return GwaElement(self.spec, out)

    __radd__ = __add__

    def __neg__(self):
        return GwaElement(self.spec, {a: -r for a, r in self.components.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        return multiply(self.spec, self, self._lift(other))

    def __rmul__(self, other):
        return multiply(self.spec, self._lift(other), self)

    def __pow__(self, k: int):
        out = GwaElement.ring(self.spec, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GwaElement):
            return NotImplemented
        return self.spec == other.spec and self.components == other.components

    def __hash__(self):
        return hash(frozenset(self.components.items()))

    def __repr__(self):
        return f"GwaElement({format_element(self)})"

    def __str__(self):
        return format_element(self)


def _left_generator(spec: GwaSpec, i: int, raising: bool, v: GwaElement) -> GwaElement:
    """Compute ``X_i * v`` (raising) or ``Y_i * v`` in normal form."""
    n = spec.n
    step = 1 if raising else -1
    out: Dict[Degree, RingElement] = {}
    for beta, r in v.components.items():
        # move the generator past the coefficient
        r2 = spec.sigma(r, _unit(n, i, step))
        k = beta[i]
        new = list(beta)
        new[i] = k + step
        new = tuple(new)
        if raising and k < 0:
            # X_i Y_i^m = sigma_i(t_i) Y_i^(m-1)
            r2 = r2 * spec.sigma(spec.t_poly(i), _unit(n, i, 1))
        elif not raising and k > 0:
            # Y_i X_i^m = t_i X_i^(m-1)
            r2 = r2 * spec.t_poly(i)
        out[new] = out[new] + r2 if new in out else r2
    return GwaElement(spec, out)


def generator_word(alpha: Sequence[int]) -> list:
    """The word ``a^alpha`` as a list of (direction, raising) pairs, left to right."""
    word = []
    for i, k in enumerate(alpha):
        word.extend([(i, k > 0)] * abs(k))
    return word


def multiply(spec: GwaSpec, u: GwaElement, v: GwaElement) -> GwaElement:
    """Normal-form product ``u * v``, reduced one generator at a time."""
    if u.spec != spec or v.spec != spec:
        if u.spec.n != v.spec.n:
            raise ValueError("rank mismatch between factors")
        raise ValueError("factors belong to a different algebra")
    result = GwaElement.zero(spec)
    for alpha, r in u.components.items():
        w = v
        for i, raising in reversed(generator_word(alpha)):
            w = _left_generator(spec, i, raising, w)
        w = GwaElement(spec, {beta: r * s for beta, s in w.components.items()})
        result = result + w
    return result


def homogeneous_component(u: GwaElement, alpha: Sequence[int]) -> GwaElement:
    alpha = tuple(alpha)
    r = u.components.get(alpha)
    return GwaElement(u.spec, {alpha: r} if r is not None else {})


def degree(u: GwaElement) -> Optional[Degree]:
    """Degree of a nonzero homogeneous element, else None."""
    if len(u.components) != 1:
        return None
    return next(iter(u.components))


@dataclass
class RelationCheck:
    name: str
    passed: bool


def verify_relations(spec: GwaSpec) -> list:
    """Evaluate every defining relation as a normal-form identity."""
    n = spec.n
    X = [GwaElement.X(spec, i) for i in range(n)]
    Y = [GwaElement.Y(spec, i) for i in range(n)]
    T = [GwaElement.T(spec, i) for i in range(n)]
    report = []

    def add(name, expr):
        report.append(RelationCheck(name, expr.is_zero()))

    for i in range(n):
        k = i + 1
        sig_t = GwaElement.ring(spec, spec.sigma(spec.t_poly(i), _unit(n, i)))
        add(f"X{k}*Y{k} - sigma{k}(t{k})", X[i] * Y[i] - sig_t)
        add(f"Y{k}*X{k} - t{k}", Y[i] * X[i] - GwaElement.ring(spec, spec.t_poly(i)))
        for j in range(n):
            tj = RingElement.variable(n, j)
            add(f"X{k}*T{j + 1} - sigma{k}(T{j + 1})*X{k}",
                X[i] * T[j] - GwaElement.ring(spec, spec.sigma(tj, _unit(n, i))) * X[i])
            add(f"Y{k}*T{j + 1} - sigma{k}^-1(T{j + 1})*Y{k}",
                Y[i] * T[j] - GwaElement.ring(spec, spec.sigma(tj, _unit(n, i, -1))) * Y[i])
            if i != j:
                add(f"[X{k},X{j + 1}]", X[i] * X[j] - X[j] * X[i])
                add(f"[Y{k},Y{j + 1}]", Y[i] * Y[j] - Y[j] * Y[i])
                add(f"[X{k},Y{j + 1}]", X[i] * Y[j] - Y[j] * X[i])
    return report


def _format_monomial(alpha: Degree) -> str:
    parts = []
    single = len(alpha) == 1
    for i, k in enumerate(alpha):
        if k == 0:
            continue
        g = ("X" if k > 0 else "Y") + ("" if single else str(i + 1))
        parts.append(g if abs(k) == 1 else f"{g}^{abs(k)}")
    return "*".join(parts)


def format_element(u: GwaElement) -> str:
    if not u.components:
        return "0"
    parts = []
    for alpha in sorted(u.components):
        r = u.components[alpha]
        mono = _format_monomial(alpha)
        coeff = format_poly(r)
        if not mono:
            parts.append(coeff)
        elif r == 1:
            parts.append(mono)
        else:
            parts.append(f"({coeff})*{mono}")
    return " + ".join(parts)


def words(spec: GwaSpec, max_len: int) -> Iterable[GwaElement]:
    """All products of generators X_i, Y_i of length at most ``max_len``."""
    gens = [GwaElement.X(spec, i) for i in range(spec.n)] + \
           [GwaElement.Y(spec, i) for i in range(spec.n)]
    layer = [GwaElement.ring(spec, 1)]
    yield layer[0]
    for _ in range(max_len):
        layer = [w * g for w in layer for g in gens]
        yield from layer
