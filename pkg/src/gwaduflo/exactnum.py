"""Exact arithmetic over Q and Q(i).

Rationals are :class:`fractions.Fraction`.  On top of that this module has
Gaussian rationals, monic one-variable polynomials given by their roots,
sparse multivariate polynomials, and the coordinate translation
``T_i -> T_i - c`` used for the automorphisms of the base ring.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Optional, Sequence, Union

Number = Union[int, Fraction, "GaussianRational"]


@dataclass(frozen=True)
class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        # normalize ints so equality and hashing stay canonical
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x: Number) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(Fraction(x))
        if isinstance(x, str):
            return parse_gauss(x)
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_rational_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def sort_key(self):
        """Lexicographic (re, im); a display order, not a field order."""
        return (self.re, self.im)

    def __str__(self):
        return format_gauss(self)

    def __repr__(self):
        return f"GaussianRational({format_gauss(self)!r})"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))

_RAT = r"-?\d+(?:/\d+)?"
_UNSIGNED_RAT = r"\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^(?:(?P<real>{_RAT})"
    rf"|(?P<re>{_RAT})?(?P<sign>[+-])(?P<im>{_UNSIGNED_RAT})i"
    rf"|(?P<pure>{_RAT})i"
    rf"|(?P<unit>-?)i)$"
)


def _parse_rat(s: str) -> Fraction:
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {s!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def parse_gauss(text: str) -> GaussianRational:
    """Parse a number literal such as ``3/2``, ``2+1i``, ``-1i`` or ``i``."""
    s = text.strip()
    m = _GAUSS_RE.match(s)
    if m is None:
        raise ValueError(f"invalid number literal: {text!r}")
    if m.group("real") is not None:
        return GaussianRational(_parse_rat(m.group("real")))
    if m.group("sign") is not None:
        re_part = _parse_rat(m.group("re")) if m.group("re") is not None else Fraction(0)
        im_part = _parse_rat(m.group("im"))
        if m.group("sign") == "-":
            im_part = -im_part
        return GaussianRational(re_part, im_part)
    if m.group("pure") is not None:
        return GaussianRational(Fraction(0), _parse_rat(m.group("pure")))
    return GaussianRational(Fraction(0), Fraction(-1 if m.group("unit") else 1))


def _format_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_gauss(z: GaussianRational) -> str:
    """Canonical literal: ``0``, ``-3/2``, ``1i``, ``2+1i``, ``1/2-1i``."""
    if z.im == 0:
        return _format_rat(z.re)
    if z.re == 0:
        return _format_rat(z.im) + "i"
    sign = "+" if z.im > 0 else "-"
    return f"{_format_rat(z.re)}{sign}{_format_rat(abs(z.im))}i"


def gr(x: Number | str) -> GaussianRational:
    """Shorthand constructor accepting ints, Fractions, literals."""
    return GaussianRational.coerce(x)


def gr_arith(a: GaussianRational, b: GaussianRational, op: str) -> GaussianRational:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def lattice_offset(z: GaussianRational, base: GaussianRational,
                   step: GaussianRational) -> Optional[int]:
    """Return k with ``z == base + k*step``, or None if there is no such integer."""
    if not step:
        raise ValueError("lattice step must be nonzero")
    q = (z - base) / step
    if q.is_rational_integer():
        return q.re.numerator
    return None


def sorted_unique(values: Iterable[GaussianRational]) -> tuple:
    return tuple(sorted(set(values), key=GaussianRational.sort_key))


class RingElement:
    """Sparse polynomial in ``nvars`` commuting variables over Q(i).

    ``terms`` maps exponent tuples to nonzero coefficients.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, Number] | None = None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            c = GaussianRational.coerce(c)
            if len(exp) != nvars:
                raise ValueError("exponent vector has wrong length")
            if c:
                clean[tuple(exp)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def constant(cls, nvars: int, c: Number) -> "RingElement":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "RingElement":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.nvars != self.nvars:
                raise ValueError("ring elements over different numbers of variables")
            return other
        return RingElement.constant(self.nvars, other)

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.terms)
        for exp, c in o.terms.items():
            out[exp] = out.get(exp, ZERO) + c
        return RingElement(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return RingElement(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RingElement.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.terms == RingElement.constant(self.nvars, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def leading_coefficient_in(self, i: int) -> RingElement:
        d = self.degree_in(i)
        out = {}
        for e, c in self.terms.items():
            if e[i] == d:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return RingElement(self.nvars, out)

    def evaluate(self, point: Sequence[Number]) -> GaussianRational:
        if len(point) != self.nvars:
            raise ValueError(f"point needs {self.nvars} coordinates, got {len(point)}")
        pt = [GaussianRational.coerce(x) for x in point]
        total = ZERO
        for exp, c in self.terms.items():
            term = c
            for x, k in zip(pt, exp):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def shift(self, i: int, c: Number) -> "RingElement":
        """Substitute ``T_i -> T_i - c``."""
        c = GaussianRational.coerce(c)
        if not c:
            return self
        out: dict = {}
        for exp, coeff in self.terms.items():
            k = exp[i]
            for j in range(k + 1):
                e = list(exp)
                e[i] = j
                e = tuple(e)
                out[e] = out.get(e, ZERO) + coeff * comb(k, j) * (-c) ** (k - j)
        return RingElement(self.nvars, out)

    def __repr__(self):
        return f"RingElement({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


def shift_substitute(p: RingElement, i: int, c: Number) -> RingElement:
    """``p`` with ``T_i`` replaced by ``T_i - c`` (``i`` is 0-based)."""
    if not 0 <= i < p.nvars:
        raise ValueError(f"direction {i} out of range for {p.nvars} variables")
    return p.shift(i, c)


def _format_coeff(c: GaussianRational) -> str:
    s = format_gauss(c)
    if c.im != 0 and c.re != 0:
        return f"({s})"
    return s


def format_poly(p: RingElement, names: Sequence[str] | None = None) -> str:
    if not p.terms:
        return "0"
    if names is None:
        names = ["T"] if p.nvars == 1 else [f"T{k + 1}" for k in range(p.nvars)]

    def key(item):
        exp, _ = item
        return (-sum(exp), tuple(-x for x in exp))

    parts = []
    for exp, c in sorted(p.terms.items(), key=key):
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, exp) if k)
        if not mono:
            parts.append(_format_coeff(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{_format_coeff(c)}*{mono}")
    out = parts[0]
    for s in parts[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


@dataclass(frozen=True)
class UnivariateFactored:
    """Monic polynomial ``prod (T_var - z)`` over a nonempty root multiset.

    ``var`` is a 0-based variable index.  Roots are stored in canonical order.
    """

    var: int
    roots: tuple

    def __post_init__(self):
        roots = tuple(sorted((GaussianRational.coerce(z) for z in self.roots),
                             key=GaussianRational.sort_key))
        if not roots:
            raise ValueError("a factored polynomial needs at least one root")
        if self.var < 0:
            raise ValueError("variable index must be nonnegative")
        object.__setattr__(self, "roots", roots)

    @property
    def degree(self) -> int:
        return len(self.roots)

    def root_set(self) -> tuple:
        return sorted_unique(self.roots)

    def __call__(self, x: Number) -> GaussianRational:
        x = GaussianRational.coerce(x)
        out = ONE
        for z in self.roots:
            out = out * (x - z)
        return out

    def expand(self, nvars: int) -> RingElement:
        if self.var >= nvars:
            raise ValueError("variable index exceeds ring rank")
        t = RingElement.variable(nvars, self.var)
        out = RingElement.constant(nvars, 1)
        for z in self.roots:
            out = out * (t - z)
        return out

    def evaluate(self, point: Sequence[Number]) -> GaussianRational:
        return self(point[self.var])

    def format(self, name: str | None = None) -> str:
        name = name or f"T{self.var + 1}"
        factors = []
        for z in self.roots:
            if not z:
                factors.append(name)
            elif z.im == 0:
                op = "-" if z.re > 0 else "+"
                factors.append(f"({name}{op}{_format_rat(abs(z.re))})")
            else:
                factors.append(f"({name}-({format_gauss(z)}))")
        return "*".join(factors)

    def __str__(self):
        return self.format()


def expand(f: UnivariateFactored, nvars: int) -> RingElement:
    return f.expand(nvars)


def evaluate(p: RingElement | UnivariateFactored, point: Sequence[Number]) -> GaussianRational:
    return p.evaluate(point)
