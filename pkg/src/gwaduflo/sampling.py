"""Seeded random algebras and weights for property checks."""
from __future__ import annotations

import random
from fractions import Fraction

from .algebra import GwaSpec
from .exactnum import GaussianRational, lattice_offset

_STEPS = [Fraction(1), Fraction(-1), Fraction(2), Fraction(3, 2), Fraction(-1, 2)]


def random_gauss(rng: random.Random, bound: int = 6, denominators=(1, 1, 2, 3)) -> GaussianRational:
    re = Fraction(rng.randint(-bound, bound), rng.choice(denominators))
    im = Fraction(rng.randint(-2, 2), rng.choice(denominators)) if rng.random() < 0.4 else Fraction(0)
    return GaussianRational(re, im)


def random_step(rng: random.Random) -> GaussianRational:
    if rng.random() < 0.15:
        return GaussianRational(Fraction(rng.choice([1, -1])), Fraction(rng.choice([1, -1])))
    return GaussianRational(rng.choice(_STEPS))


def random_roots(rng: random.Random, step: GaussianRational, degree: int) -> list:
    """Roots drawn from one or two lattice classes plus occasional strays."""
    classes = [random_gauss(rng) for _ in range(rng.choice([1, 1, 2]))]
    roots = []
    for _ in range(degree):
        if rng.random() < 0.8:
            roots.append(rng.choice(classes) + step * rng.randint(-4, 4))
        else:
            roots.append(random_gauss(rng))
    return roots


def random_spec(rng: random.Random, rank: int | None = None, max_degree: int = 3) -> GwaSpec:
    rank = rank or rng.randint(1, 3)
    b = [random_step(rng) for _ in range(rank)]
    roots = [random_roots(rng, bi, rng.randint(1, max_degree)) for bi in b]
    return GwaSpec.from_roots(b, roots)


def _off_lattice(rng: random.Random, roots, step) -> GaussianRational:
    for _ in range(100):
        z = rng.choice(roots) + step * Fraction(rng.choice([1, 1, 2, 3]), rng.choice([2, 3, 5]))
        if rng.random() < 0.3:
            z = z + GaussianRational(0, Fraction(1, 7))
        if all(lattice_offset(r, z, step) is None for r in roots):
            return z
    raise RuntimeError("could not find an off-lattice point")


def random_point(rng: random.Random, spec: GwaSpec, off_lattice: float = 0.15) -> tuple:
    """Lattice offsets in [-5, 5] from random roots, sometimes off every root lattice."""
    pt = []
    for i in range(spec.n):
        roots = list(spec.t[i].roots)
        if rng.random() < off_lattice:
            pt.append(_off_lattice(rng, roots, spec.b[i]))
        else:
            pt.append(rng.choice(roots) + spec.b[i] * rng.randint(-5, 5))
    return tuple(pt)
