"""Schur and hook Schur functions, characters, dimensions."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from glmn.characters import (
    LaurentSymPoly,
    char_induced,
    dim_even,
    dim_induced,
    factorization_check,
    hook_schur,
    schur,
    schur_count,
)
from glmn.weights import HookPartition, Weight, hook_to_weight

import naive_reference as naive


@st.composite
def partitions(draw, max_part=5, max_rows=4):
    parts = sorted(draw(st.lists(st.integers(1, max_part), min_size=0,
                                 max_size=max_rows)), reverse=True)
    return tuple(parts)


# -- ordinary Schur polynomials ----------------------------------------------

def test_schur_hand_values():
    assert schur((1,), 2).render() == "x2 + x1"
    assert schur((1, 1), 2).render() == "x1*x2"
    assert schur((2, 1), 2).render() == "x1*x2^2 + x1^2*x2"
    assert schur((1, 1), 1).is_zero()
    assert schur((), 2) == LaurentSymPoly.one(2, 0)


@settings(max_examples=40, deadline=None)
@given(partitions(max_part=4, max_rows=3), st.integers(1, 3))
def test_schur_matches_jacobi_trudi(mu, nvars):
    assert schur(mu, nvars).terms == naive.schur_jacobi_trudi(mu, nvars)


def test_schur_symmetry():
    s = schur((3, 1), 3)
    assert s.permute_blocks((1, 2, 0), ()) == s
    assert s.permute_blocks((1, 0, 2), ()) == s


def test_schur_count_known_dimensions():
    # GL_2 weight (a, 0) has dimension a + 1
    for a in range(5):
        assert schur_count((a,), 2) == a + 1
    # adjoint-like (2, 1, 0) of GL_3 has dimension 8
    assert schur_count((2, 1, 0), 3) == 8


def test_schur_negative_tail_shifts():
    # a uniform shift of the partition multiplies by the determinant power
    shifted = schur((1, -1), 2)
    base = schur((2, 0), 2)
    pts = (3, 5)
    assert (naive.eval_sym(shifted.terms, pts)
            == naive.eval_sym(base.terms, pts) / (3 * 5))
    assert min(e for exps in shifted.terms for e in exps) == -1


# -- hook Schur functions ----------------------------------------------------

def test_hook_schur_hand_values():
    assert hook_schur((1,), 1, 1).render() == "y1 + x1"
    # only the mixed and pure-x fillings survive in a row
    assert hook_schur((2,), 1, 1).render() == "x1*y1 + x1^2"
    # columns allow repeated primed letters
    assert hook_schur((1, 1), 1, 1).render() == "y1^2 + x1*y1"
    assert hook_schur((2, 2), 1, 1).is_zero()


def test_hook_schur_vanishes_exactly_off_hooks():
    for parts, m, n in [((2, 2), 1, 1), ((3, 3, 3), 2, 2), ((1, 1, 1), 1, 2)]:
        hp = HookPartition(parts)
        assert hp.is_hook(m, n) != hook_schur(parts, m, n).is_zero()


@settings(max_examples=30, deadline=None)
@given(partitions(max_part=4, max_rows=4), st.integers(1, 2), st.integers(1, 2))
def test_hook_schur_supersymmetry(parts, m, n):
    # substituting x_m = t, y_n = -t must kill all dependence on t
    hs = hook_schur(parts, m, n)
    rng = random.Random(hash((parts, m, n)) & 0xFFFF)
    xs = [rng.randint(2, 9) for _ in range(m - 1)]
    ys = [rng.randint(2, 9) for _ in range(n - 1)]
    vals = []
    for t in (2, 7):
        vals.append(naive.eval_sym(hs.terms, tuple(xs + [t] + ys + [-t])))
    assert vals[0] == vals[1]


def test_hook_schur_restricts_to_schur():
    # with all y set to zero only unprimed tableaux survive
    for parts in [(2, 1), (3,), (2, 2)]:
        hs = hook_schur(parts, 2, 2)
        s = schur(parts, 2)
        restricted = {}
        for exps, c in hs.terms.items():
            if exps[2] == 0 and exps[3] == 0:
                restricted[exps[:2]] = c
        assert restricted == s.terms


def test_hook_schur_symmetry_in_both_blocks():
    hs = hook_schur((2, 1), 2, 2)
    assert hs.permute_blocks((1, 0), (0, 1)) == hs
    assert hs.permute_blocks((0, 1), (1, 0)) == hs


# -- induced characters ------------------------------------------------------

def test_char_induced_hand_value():
    ch = char_induced(Weight((1,), (0,)))
    assert ch.render() == "y1 + x1"
    ch = char_induced(Weight((0,), (0,)))
    assert ch.render() == "x1^-1*y1 + 1"


def test_char_induced_at_ones_is_dim():
    for lam in [Weight((1, 0), (1,)), Weight((2, 1), (1, 0)),
                Weight((1, -1), (0,)), Weight((0, 0), (0, 0))]:
        assert char_induced(lam).eval_ones() == dim_induced(lam)


def test_char_induced_equals_hook_schur_in_good_range():
    # lambda_m >= n: the induced module is irreducible, characters agree
    cases = [((2, 1), 1, 1), ((2, 2, 1), 2, 2), ((3, 1, 1), 2, 1)]
    for parts, m, n in cases:
        hp = HookPartition(parts)
        assert hp.part(m) >= n
        lam = hook_to_weight(hp, m, n)
        assert char_induced(lam) == hook_schur(hp, m, n)


def test_char_induced_differs_from_hook_schur_otherwise():
    hp = HookPartition((1,))
    lam = hook_to_weight(hp, 1, 1)   # lambda_1 = 1 >= 1: equal
    assert char_induced(lam) == hook_schur(hp, 1, 1)
    hp = HookPartition((1, 1, 1))
    lam = hook_to_weight(hp, 2, 1)   # lambda_2 = 1 >= 1 still equal
    assert char_induced(lam) == hook_schur(hp, 2, 1)
    hp = HookPartition((2,))
    lam = hook_to_weight(hp, 2, 1)   # lambda_2 = 0 < 1: differs
    assert char_induced(lam) != hook_schur(hp, 2, 1)


# -- factorization -----------------------------------------------------------

def test_factorization_good_cases():
    assert factorization_check((1,), 1, 1)
    assert factorization_check((2, 1), 2, 1)
    assert factorization_check((2, 2), 2, 2)
    assert factorization_check((3, 2, 1), 2, 1)


def test_factorization_requires_deep_partitions():
    with pytest.raises(ValueError):
        factorization_check((1,), 2, 1)


# -- dimensions --------------------------------------------------------------

def test_dimension_identity():
    for lam in [Weight((1,), (0,)), Weight((2, 0), (1,)), Weight((1, 1), (1, 1))]:
        m, n = lam.m, lam.n
        assert dim_induced(lam) == 2 ** (m * n) * dim_even(lam)


def test_dim_even_is_product_of_schur_counts():
    lam = Weight((2, 0), (1,))
    assert dim_even(lam) == schur_count((2, 0), 2) * schur_count((1,), 1)


# -- Laurent polynomial plumbing ---------------------------------------------

def test_laurent_arithmetic():
    a = schur((1,), 2)
    assert a + a == 2 * a
    assert a - a == LaurentSymPoly(2, 0, {})
    assert (a * a).eval_ones() == 4
    with pytest.raises(ValueError):
        a + schur((1,), 3)


def test_laurent_render_order():
    # ascending lexicographic on exponent tuples, x block then y block
    ch = char_induced(Weight((0,), (0,)))
    assert list(ch.render().split(" + ")) == ["x1^-1*y1", "1"]
