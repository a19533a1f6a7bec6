from __future__ import annotations

import itertools
import random

import pytest
from helpers import A, S, brute_isomorphic, concrete, pat, permute_pattern, permute_secrets
from hypothesis import given, settings
from hypothesis import strategies as st

from mmproof.canon import canonical_concrete, canonical_pattern, canonical_with_question
from mmproof.equations import derive
from mmproof.pattern import STAR, ConcreteMaset, Game, MasetPattern, normalize
from mmproof.questions import candidate_questions

M23 = pat((0, 0), (0, S), (1, 1), (S, 1))
FULL = MasetPattern.full(Game.MM, 2)


def test_pattern_examples():
    assert canonical_pattern(pat((0, S), deficit=2)) == canonical_pattern(pat((S, 0), deficit=2))
    assert canonical_pattern(FULL) == canonical_pattern(FULL.with_deficit(1))
    assert canonical_pattern(pat((0, 0), (S, 0), deficit=2)) == canonical_pattern(pat((0, 0), (0, S), deficit=2))
    assert canonical_pattern(pat((0, 0), deficit=2)) != canonical_pattern(pat((0, 1)))


def test_question_examples():
    assert canonical_with_question(FULL, (0, 1)) == canonical_with_question(FULL, (1, 0))
    keys = {canonical_with_question(FULL, q) for q in [(0, 0), (0, 1), (0, A)]}
    assert len(keys) == 3


def _brute_with_question(p: MasetPattern, q1, q2) -> bool:
    """Is there a column/color permutation fixing p and mapping q1 to q2?"""
    colors = sorted(p.colors | {x for x in q1 + q2 if x < STAR})
    target = sorted(p.clauses)
    for cols in itertools.permutations(range(p.p)):
        for image in itertools.permutations(colors):
            cmap = dict(zip(colors, image))
            move = lambda row: tuple(cmap.get(row[j], row[j]) for j in cols)
            if sorted(map(move, p.clauses)) == target and move(q1) == q2:
                return True
    return False


def test_m23_question_pairs_match_brute_force():
    qs = candidate_questions(Game.MM, 2, 2)
    for q1, q2 in itertools.combinations(qs, 2):
        same = canonical_with_question(M23, q1) == canonical_with_question(M23, q2)
        assert same == _brute_with_question(M23, q1, q2), (q1, q2)
    assert canonical_with_question(M23, (2, 3)) == canonical_with_question(M23, (3, 2))


def test_additional_color_never_identified_with_a_color():
    for p in derive(Game.MM, 2).queue:
        qs = candidate_questions(Game.MM, 2, p.num_colors)
        with_a = {canonical_with_question(p, q) for q in qs if A in q}
        without = {canonical_with_question(p, q) for q in qs if A not in q}
        assert not with_a & without


def test_concrete_examples():
    assert canonical_concrete(concrete([(0, 1)], 2)) == canonical_concrete(concrete([(1, 0)], 2))
    assert canonical_concrete(concrete([(0, 0), (1, 1)], 2)) != canonical_concrete(concrete([(0, 1), (1, 0)], 2))
    full = ConcreteMaset.full(Game.MM, 2, 3)
    rng = random.Random(5)
    key = canonical_concrete(full)
    for _ in range(100):
        assert canonical_concrete(permute_secrets(full, rng)) == key


def test_concrete_key_separates_games_and_additional():
    a = concrete([(0, 1)], 3)
    assert canonical_concrete(a) != canonical_concrete(concrete([(0, 1)], 3, game=Game.AB))
    assert canonical_concrete(a) != canonical_concrete(concrete([(0, 1)], 3, additional=False))


FIXTURES = {
    "m23": M23,
    "m22": pat((1, S), (S, 0)),
    "three pegs": pat((0, 1, S), (S, 0, 2), (2, S, S), (1, 1, 0)),
    "ab three pegs": pat((0, 1, S), (S, 2, 0), (2, S, 1), game=Game.AB),
    "star free": pat((0, 1, 2), (1, 2, 0), (0, 0, 3), (3, 3, 3)),
}


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_invariant_under_random_permutations(name):
    p = FIXTURES[name]
    key = canonical_pattern(p)
    rng = random.Random(name)
    for _ in range(1000):
        assert canonical_pattern(permute_pattern(p, rng)) == key


@st.composite
def small_patterns(draw):
    p = draw(st.integers(1, 3))
    u = draw(st.integers(0, 4))
    symbol = st.sampled_from(list(range(u)) + [STAR])
    clauses = draw(st.lists(st.tuples(*[symbol] * p), min_size=1, max_size=3, unique=True))
    raw = MasetPattern(p, Game.MM, u, tuple(clauses))
    return normalize(raw).with_deficit(normalize(raw).num_colors)


@settings(max_examples=300, deadline=None)
@given(small_patterns(), small_patterns(), st.randoms(use_true_random=False))
def test_key_equality_is_exactly_isomorphism(a, b, rng):
    # half the time compare against a scrambled copy so positives get exercised
    if rng.random() < 0.5:
        b = permute_pattern(a, rng)
    same = canonical_pattern(a) == canonical_pattern(b)
    assert same == brute_isomorphic(a, b)
