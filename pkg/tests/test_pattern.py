from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st
from helpers import S, pat

from mmproof.equations import derive
from mmproof.pattern import (
    ADD,
    STAR,
    Game,
    MasetPattern,
    count_secrets,
    extend,
    format_pattern,
    instantiate,
    instantiate_clause,
    normalize,
    tighten,
)
from mmproof.polynomial import Polynomial

M23 = pat((0, 0), (0, S), (1, 1), (S, 1))


# -- validation ------------------------------------------------------------


def test_clause_length_checked():
    with pytest.raises(ValueError):
        MasetPattern(2, Game.MM, 0, ((STAR,),))


def test_additional_color_rejected_in_clauses():
    with pytest.raises(ValueError):
        MasetPattern(2, Game.MM, 1, ((0, ADD),))


def test_explicit_colors_below_deficit():
    with pytest.raises(ValueError):
        MasetPattern(2, Game.MM, 1, ((0, 1),))


def test_ab_clause_may_not_repeat():
    with pytest.raises(ValueError):
        pat((0, 0), game=Game.AB)
    pat((0, S), (S, 0), game=Game.AB)


def test_rendering():
    assert format_pattern(pat((1, S), (S, 0), deficit=2)) == "(1,*_{n-2}) | (*_{n-2},0)"
    assert format_pattern(MasetPattern.full(Game.MM, 2)) == "(*_{n},*_{n})"
    assert format_pattern(pat()) == "\\emptyset"


# -- normalize / tighten ---------------------------------------------------


def test_normalize_examples():
    assert normalize(pat((1, S), deficit=2)) == pat((0, S), deficit=2)
    assert normalize(pat((S, 1), deficit=3)) == pat((S, 0), deficit=3)
    already = pat((0, S), deficit=2)
    assert normalize(already) is already


def test_normalize_keeps_relative_order():
    # already consecutive colors are left alone even if 1 occurs first
    p = pat((1, S), (S, 0), deficit=2)
    assert normalize(p) is p
    assert normalize(pat((3, S), (S, 1), deficit=4)).clauses == ((1, S), (S, 0))


def test_tighten_examples():
    assert tighten(pat((0, S), deficit=2)) == (pat((0, S), deficit=1), 1)
    tight = pat((S, 0))
    assert tighten(tight) == (tight, 0)
    assert tighten(normalize(pat((1, S), deficit=3))) == (pat((0, S), deficit=1), 2)


def test_tighten_needs_normalized():
    with pytest.raises(ValueError):
        tighten(pat((1, S), deficit=2))


# -- extend ----------------------------------------------------------------


def test_extend_all_stars_by_one_color():
    out = extend(MasetPattern.full(Game.MM, 2), 1)
    assert set(out.clauses) == {(0, 0), (0, S), (S, 0), (S, S)}
    assert out.deficit == 1


def test_extend_m23_to_four():
    out = extend(M23, 4)
    assert out.clauses == ((0, 0), (0, 2), (0, 3), (0, S), (1, 1), (2, 1), (3, 1), (S, 1))
    assert out.deficit == 4


def test_extend_needs_new_colors():
    with pytest.raises(ValueError):
        extend(M23, 2)


def test_extend_ab_skips_repeats():
    out = extend(MasetPattern.full(Game.AB, 2), 2)
    assert (0, 0) not in out.clauses and (1, 1) not in out.clauses
    assert (0, 1) in out.clauses and (S, S) in out.clauses


def test_extend_preserves_secrets_example():
    p = pat((S, 0))
    assert instantiate(extend(p, 3), 6).secrets == instantiate(p, 6).secrets


# -- counting and instantiation ----------------------------------------------


def test_count_secrets_examples():
    n = Polynomial.n_minus(0)
    assert count_secrets(MasetPattern.full(Game.MM, 2)) == n * n
    assert count_secrets(MasetPattern.full(Game.AB, 2)) == n * n - n
    assert count_secrets(M23) == Polynomial([-2, 2])
    assert count_secrets(pat()).is_zero()


def test_instantiate_examples():
    assert instantiate(pat((S, 0)), 3).secrets == {(1, 0), (2, 0)}
    assert instantiate(MasetPattern.full(Game.MM, 2), 2).secrets == set(itertools.product(range(2), repeat=2))
    assert instantiate(M23, 4).secrets == {(0, 0), (0, 2), (0, 3), (1, 1), (2, 1), (3, 1)}


def test_instantiate_below_deficit_fails():
    with pytest.raises(ValueError):
        instantiate(M23, 1)


# -- properties over generated patterns --------------------------------------


@st.composite
def patterns(draw, game=None):
    game = draw(st.sampled_from([Game.MM, Game.AB])) if game is None else game
    p = draw(st.integers(1, 3))
    u = draw(st.integers(0, 3))
    t = u + draw(st.integers(0, 2))
    symbol = st.sampled_from(list(range(u)) + [STAR]) if u else st.just(STAR)
    clause = st.tuples(*[symbol] * p)
    if game is Game.AB:
        clause = clause.filter(lambda c: len({x for x in c if x != STAR}) == sum(x != STAR for x in c))
    clauses = draw(st.lists(clause, max_size=4, unique=True))
    return MasetPattern(p, game, t, tuple(clauses))


@given(patterns())
def test_normalize_is_idempotent(p):
    assert normalize(normalize(p)) == normalize(p)
    assert normalize(p).is_normalized()


@given(patterns(), st.integers(0, 7))
def test_count_matches_instantiation_per_clause(p, extra):
    # clauses of a generated pattern may overlap, so count clause by clause
    n = p.deficit + extra
    for clause in p.clauses:
        single = MasetPattern(p.p, p.game, p.deficit, (clause,))
        assert len(instantiate(single, n).secrets) == count_secrets(single)(n)


@given(patterns(), st.integers(1, 2), st.integers(0, 4))
def test_extend_preserves_semantics(p, grow, extra):
    p = normalize(p)
    if p.has_star():
        p, _ = tighten(p)
    v = p.num_colors + grow
    ext = extend(p, v)
    n = ext.deficit + extra
    assert instantiate(ext, n).secrets == instantiate(p, n).secrets


@given(patterns(), st.integers(0, 4))
def test_tighten_shift_is_a_color_bijection(p, extra):
    norm = normalize(p)
    tight, r = tighten(norm)
    n = norm.deficit + extra
    u = norm.num_colors
    # delete the r dead colors u..u+r-1
    squeeze = lambda x: x if x < u else x - r
    image = {tuple(squeeze(x) for x in s) for s in instantiate(norm, n).secrets}
    assert image == instantiate(tight, n - r).secrets


@given(patterns(game=Game.AB), st.integers(0, 5))
def test_ab_secrets_have_distinct_pegs(p, extra):
    for s in instantiate(p, p.deficit + extra).secrets:
        assert len(set(s)) == len(s)


@pytest.mark.parametrize("game", [Game.MM, Game.AB])
def test_queue_clauses_are_disjoint(game):
    out = derive(game, 2)
    for pattern in out.queue:
        for n in range(pattern.deficit, 9):
            images = [set(instantiate_clause(c, game, pattern.deficit, n)) for c in pattern.clauses]
            assert sum(map(len, images)) == len(set().union(*images)) if images else True
            assert len(instantiate(pattern, n).secrets) == count_secrets(pattern)(n)
