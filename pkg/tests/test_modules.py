import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from gwaduflo.algebra import GwaElement, GwaSpec, multiply
from gwaduflo.exactnum import ONE, ZERO, gr
from gwaduflo.geometry import break_positions, support_of_simple
from gwaduflo.modules import (MAX_CELLS, SizeError, WindowOverflow, action_coefficient,
                              apply_element, cells, cellsets_in_window, default_box,
                              enumerate_submodules, find_top_vector, has_highest_weight_generator,
                              is_highest_weight_module, joint_kernel_dimension, realize_window,
                              simple_subquotients, top_offset, window_submodule_supports)
from gwaduflo.sampling import random_point, random_spec


def _samples(count, seed, max_degree=3):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        spec = random_spec(rng, max_degree=max_degree)
        out.append((spec, random_point(rng, spec)))
    return out


SAMPLES = _samples(120, 11)


# -- coefficients ------------------------------------------------------------

def test_coefficient_examples(weyl, two_breaks):
    assert action_coefficient(weyl, [2], (-2,), 0, True) == 0
    assert action_coefficient(weyl, [2], (-1,), 0, True) == 1   # t(1)
    assert action_coefficient(weyl, [2], (5,), 0, True) == 1
    assert action_coefficient(two_breaks, ["1i"], (3,), 0, False) == 0
    assert action_coefficient(two_breaks, ["1i"], (5,), 0, False) == 0
    assert action_coefficient(two_breaks, ["1i"], (4,), 0, False) != 0
    assert action_coefficient(two_breaks, ["1i"], (-7,), 0, False) == 1


@pytest.mark.parametrize("spec,a", SAMPLES[:50])
def test_coefficient_zero_exactly_at_breaks(spec, a):
    br = break_positions(spec, a)
    for i in range(spec.n):
        ks = set(br.offsets[i])
        for k in range(-12, 13):
            alpha = tuple(k if j == i else 0 for j in range(spec.n))
            up_from_k = action_coefficient(spec, a, alpha, i, True)
            assert (up_from_k == 0) == (k < 0 and k in ks)
            beta = tuple(k + 1 if j == i else 0 for j in range(spec.n))
            down_to_k = action_coefficient(spec, a, beta, i, False)
            assert (down_to_k == 0) == (k >= 0 and k in ks)


# -- cells and submodules -----------------------------------------------------

def test_weyl_submodules(weyl):
    lat = enumerate_submodules(weyl, [2])
    assert lat.length == 2 and len(lat) == 3
    dec = lat.decomposition
    proper = [s for s in lat.submodules if s and len(s) < 2]
    assert proper == [frozenset({dec.cell_of((-2,))})]
    assert dec.segments[0] == ((None, -2), (-1, None))
    assert lat.covers() == [(0, 1), (1, 2)]


def test_two_breaks_submodules(two_breaks):
    lat = enumerate_submodules(two_breaks, ["1i"])
    assert lat.length == 3 and len(lat) == 4
    # chain: each submodule contains the previous
    assert all(a < b for a, b in zip(lat.submodules, lat.submodules[1:]))
    lat = enumerate_submodules(two_breaks, ["3+1i"])
    assert lat.length == 3 and len(lat) == 5
    dec = lat.decomposition
    low, mid, up = dec.cell_of((-1,)), dec.cell_of((0,)), dec.cell_of((2,))
    assert set(lat.submodules) == {frozenset(), frozenset({low}), frozenset({up}),
                                  frozenset({low, up}), frozenset({low, mid, up})}


def test_rank2_subquotients(rank2):
    rects = simple_subquotients(rank2, [0, 0])
    assert len(rects) == 9
    dec = cells(rank2, [0, 0])
    assert dec.breaks.offsets == ((-2, 1), (-2, 2))
    center = rects[dec.cells.index(dec.center)]
    assert center == support_of_simple(rank2, [0, 0])


def test_weyl_subquotients(weyl):
    rects = simple_subquotients(weyl, [2])
    assert [(r.lo, r.hi) for r in rects] == [((None,), (-2,)), ((-1,), (None,))]
    assert [r.weight((-2,)) for r in rects[:1]] == [(gr(0),)]
    assert len(simple_subquotients(weyl, ["1/2"])) == 1


@pytest.mark.parametrize("spec,a", SAMPLES)
def test_cells_reachable_and_bounded(spec, a):
    dec = cells(spec, a)
    assert dec.reach(dec.center) == frozenset(dec.cells)
    bound = 1
    for f in spec.t:
        bound *= 1 + len(f.root_set())
    assert len(dec.cells) <= bound <= spec.length_bound()


@pytest.mark.parametrize("spec,a", [s for s in SAMPLES if len(cells(*s).cells) <= 8][:40])
def test_submodules_are_closed_and_exhaustive(spec, a):
    lat = enumerate_submodules(spec, a)
    dec = lat.decomposition
    closed = [frozenset(s) for r in range(len(dec.cells) + 1)
              for s in itertools.combinations(dec.cells, r) if dec.is_closed(s)]
    assert set(closed) == set(lat.submodules)
    assert len(lat) <= 2 ** len(dec.cells)


def test_size_limit():
    spec = GwaSpec.from_roots([1, 1, 1], [[0, 3], [0, 3], [0, 3, 6]])
    assert len(cells(spec, [1, 1, 1]).cells) == 36 > MAX_CELLS
    with pytest.raises(SizeError):
        enumerate_submodules(spec, [1, 1, 1])


@pytest.mark.parametrize("spec,a", [s for s in _samples(60, 5, max_degree=2)
                                    if len(cells(*s).cells) <= 8][:25])
def test_window_oracle_matches_cells(spec, a):
    w = realize_window(spec, a, variant="verma")
    if len(w.basis) > 2000:
        pytest.skip("window too large for the brute-force oracle")
    lat = enumerate_submodules(spec, a)
    assert window_submodule_supports(w) == cellsets_in_window(lat, w)


def test_window_oracle_named(two_breaks, rank2):
    for spec, a in [(two_breaks, ["1i"]), (two_breaks, ["3+1i"]), (rank2, [0, 0])]:
        w = realize_window(spec, a, variant="verma")
        lat = enumerate_submodules(spec, a)
        assert window_submodule_supports(w) == cellsets_in_window(lat, w)


# -- highest weight tests ------------------------------------------------------

def test_highest_weight_examples(weyl, two_breaks):
    assert is_highest_weight_module(weyl, [0]) and has_highest_weight_generator(weyl, [0])
    assert not is_highest_weight_module(weyl, [2])
    assert not has_highest_weight_generator(weyl, [2])
    assert is_highest_weight_module(two_breaks, ["3+1i"])
    assert not has_highest_weight_generator(two_breaks, ["3+1i"])
    assert top_offset(two_breaks, ["3+1i"]) == (1,)


@pytest.mark.parametrize("spec,a", SAMPLES[:60])
def test_highest_weight_generator_iff_top_at_zero(spec, a):
    assert has_highest_weight_generator(spec, a) == (top_offset(spec, a) == (0,) * spec.n)


# -- windows -------------------------------------------------------------------

def test_default_box_covers_breaks(two_breaks, weyl):
    assert default_box(two_breaks, ["1i"]) == ((-2, 6),)
    assert default_box(weyl, ["1/2"]) == ((-10, 10),)
    assert default_box(two_breaks, ["3+1i"], "simple") == ((-2, 3),)


def test_window_basis_restricts_to_support(two_breaks):
    w = realize_window(two_breaks, ["3+1i"], variant="simple")
    assert w.basis == [(0,), (1,)]
    assert w.apply_generator({(1,): ONE}, 0, True) == {}
    assert w.apply_generator({(0,): ONE}, 0, False) == {}


def test_window_overflow(weyl):
    w = realize_window(weyl, ["1/2"], box=((-1, 1),))
    with pytest.raises(WindowOverflow):
        w.apply_generator({(1,): ONE}, 0, True)
    with pytest.raises(ValueError):
        realize_window(weyl, [0], box=((2, 1),))


def _interior(w):
    return [al for al in w.basis if all(lo + 2 <= k <= hi - 2 for k, (lo, hi) in zip(al, w.box))]


def test_YX_and_XY_on_weight_vectors(rank2):
    w = realize_window(rank2, ["1/2", 1])
    spec = rank2
    YX = GwaElement.Y(spec, 0) * GwaElement.X(spec, 0)
    XY = GwaElement.X(spec, 0) * GwaElement.Y(spec, 0)
    for alpha in _interior(w):
        x = w.weight(alpha)
        assert apply_element(w, YX, {alpha: ONE}) == _scaled(alpha, spec.t[0](x[0]))
        assert apply_element(w, XY, {alpha: ONE}) == _scaled(alpha, spec.t[0](x[0] - spec.b[0]))


def _scaled(alpha, c):
    return {alpha: c} if c else {}


def test_mixed_commutator_kills(rank2):
    w = realize_window(rank2, [0, 0])
    X1, Y2 = GwaElement.X(rank2, 0), GwaElement.Y(rank2, 1)
    comm = X1 * Y2 - Y2 * X1
    assert not comm.components
    for alpha in _interior(w):
        v = {alpha: ONE}
        assert apply_element(w, X1, apply_element(w, Y2, v)) == \
            apply_element(w, Y2, apply_element(w, X1, v))


def test_relations_in_random_windows():
    rng = random.Random(3)
    for _ in range(25):
        spec = random_spec(rng, rank=rng.randint(1, 2))
        a = random_point(rng, spec)
        w = realize_window(spec, a, box=tuple((-4, 4) for _ in range(spec.n)))
        for alpha in _interior(w):
            v = {alpha: ONE}
            x = w.weight(alpha)
            for i in range(spec.n):
                X = lambda u, j=i: w.apply_generator(u, j, True)
                Y = lambda u, j=i: w.apply_generator(u, j, False)
                assert Y(X(v)) == _scaled(alpha, spec.t[i](x[i]))
                assert X(Y(v)) == _scaled(alpha, spec.t[i](x[i] - spec.b[i]))
                for j in range(spec.n):
                    if j == i:
                        continue
                    for ri, rj in itertools.product((True, False), repeat=2):
                        lhs = w.apply_generator(w.apply_generator(v, j, rj), i, ri)
                        rhs = w.apply_generator(w.apply_generator(v, i, ri), j, rj)
                        assert lhs == rhs


@given(st.lists(st.tuples(st.integers(0, 1), st.booleans()), max_size=4),
       st.integers(-2, 2), st.integers(-2, 2))
@settings(max_examples=80, deadline=None)
def test_apply_element_matches_sequential_word(rank2, word, k1, k2):
    """Acting by a product equals acting by its factors one after the other."""
    w = realize_window(rank2, ["1/3", 0], box=((-8, 8), (-8, 8)))
    elems = [GwaElement.X(rank2, i) if r else GwaElement.Y(rank2, i) for i, r in word]
    elems.append(GwaElement.T(rank2, 1))
    prod = elems[0]
    for e in elems[1:]:
        prod = multiply(rank2, prod, e)
    v = {(k1, k2): ONE}
    seq = dict(v)
    for e in reversed(elems):
        seq = apply_element(w, e, seq)
    assert apply_element(w, prod, v) == seq


def test_apply_element_linear(rank2):
    w = realize_window(rank2, [1, 1])
    u = GwaElement.X(rank2, 0) * GwaElement.Y(rank2, 1) + GwaElement.T(rank2, 0)
    v1, v2 = {(0, 0): gr(2)}, {(1, -1): gr("1i")}
    both = {(0, 0): gr(2), (1, -1): gr("1i")}
    r1, r2 = apply_element(w, u, v1), apply_element(w, u, v2)
    total = {k: r1.get(k, ZERO) + r2.get(k, ZERO) for k in set(r1) | set(r2)}
    assert apply_element(w, u, both) == {k: c for k, c in total.items() if c}


# -- top vectors ---------------------------------------------------------------

def test_find_top_vector_examples(weyl, two_breaks, rank2):
    w = realize_window(weyl, [0], variant="simple")
    assert find_top_vector(weyl, [0], w, {(-3,): ONE}) == (gr(0),)
    assert find_top_vector(weyl, [0], w, {(0,): ONE}) == (gr(0),)
    w = realize_window(two_breaks, ["3+1i"], variant="simple")
    assert find_top_vector(two_breaks, ["3+1i"], w, {(0,): ONE}) == (gr("4+1i"),)
    w = realize_window(rank2, [0, 0], variant="simple")
    vec = {alpha: gr(k + 1) for k, alpha in enumerate(w.basis)}
    assert find_top_vector(rank2, [0, 0], w, vec) == (gr(1), gr(3))


def test_find_top_vector_preconditions(weyl):
    with pytest.raises(ValueError):
        find_top_vector(weyl, [2], realize_window(weyl, [2], variant="simple"), {(0,): ONE})
    with pytest.raises(ValueError):
        find_top_vector(weyl, [0], realize_window(weyl, [0]), {(0,): ONE})
    with pytest.raises(ValueError):
        find_top_vector(weyl, [0], realize_window(weyl, [0], variant="simple"), {})


HW_SAMPLES = [s for s in _samples(300, 17) if is_highest_weight_module(*s)][:40]


@pytest.mark.parametrize("spec,a", HW_SAMPLES)
def test_top_vector_and_kernel(spec, a):
    w = realize_window(spec, a, variant="simple")
    if len(w.basis) > 4000:
        pytest.skip("window too large")
    top = top_offset(spec, a)
    rng = random.Random(len(w.basis))
    for _ in range(5):
        vec = {al: gr(rng.randint(-3, 3)) for al in rng.sample(w.basis, min(4, len(w.basis)))}
        vec = {k: c for k, c in vec.items() if c} or {w.basis[0]: ONE}
        m = find_top_vector(spec, a, w, vec)
        assert m == w.weight(top)
        assert all(spec.t[i](m[i]) == 0 for i in range(spec.n))
    dim, free = joint_kernel_dimension(w, [(i, True) for i in range(spec.n)])
    assert (dim, free) == (1, [top])


@pytest.mark.parametrize("spec,a", HW_SAMPLES)
def test_raising_nilpotent(spec, a):
    w = realize_window(spec, a, variant="simple")
    if len(w.basis) > 4000:
        pytest.skip("window too large")
    supp = w.support
    for i in range(spec.n):
        lo = supp.lo[i] if supp.lo[i] is not None else w.box[i][0]
        d = supp.hi[i] - lo
        for alpha in w.basis:
            v = {alpha: ONE}
            for _ in range(d + 1):
                v = w.apply_generator(v, i, True)
            assert v == {}
