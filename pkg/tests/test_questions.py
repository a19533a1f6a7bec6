from __future__ import annotations

import itertools
import random

import pytest
from helpers import A, S, concrete, pat

from mmproof.answers import answer_count, split_concrete, split_pattern
from mmproof.canon import canonical_with_question
from mmproof.equations import derive
from mmproof.pattern import ADD, ConcreteMaset, Game, MasetPattern
from mmproof.questions import gen_questions, gen_questions_concrete, is_splitting, legal_question
from mmproof.solver import ConcreteSolver

M23 = pat((0, 0), (0, S), (1, 1), (S, 1))


def test_full_mm():
    assert gen_questions(MasetPattern.full(Game.MM, 2)) == [(0, 0), (0, 1), (0, A)]


def test_full_ab():
    assert gen_questions(MasetPattern.full(Game.AB, 2)) == [(0, 1), (0, A)]


def test_m23_ten_questions():
    assert gen_questions(M23) == [
        (0, 0), (0, 1), (0, 2), (0, A), (1, 0), (1, 2), (1, A), (2, 2), (2, 3), (2, A)
    ]


def test_m24_nine_questions():
    assert gen_questions(pat((S, 0))) == [
        (0, 0), (0, 1), (0, A), (1, 0), (1, 1), (1, 2), (1, A), (A, 0), (A, 1)
    ]


def test_determinism():
    assert gen_questions(M23) == gen_questions(M23)


def _patterns_up_to_three_colors():
    yield from derive(Game.MM, 2).queue
    yield from derive(Game.AB, 2).queue
    yield pat((0, 1), (1, 2), (S, 2))
    yield pat((0, S), (2, 1), (S, S), deficit=3)
    yield pat((0, 1), (S, 2), game=Game.AB)


@pytest.mark.parametrize("pattern", list(_patterns_up_to_three_colors()), ids=str)
def test_questions_are_complete_and_distinct(pattern):
    qs = gen_questions(pattern)
    keys = [canonical_with_question(pattern, q) for q in qs]
    assert len(set(keys)) == len(keys)
    symbols = list(range(pattern.num_colors + pattern.p)) + [ADD]
    for q in itertools.product(symbols, repeat=pattern.p):
        if not legal_question(pattern.game, q):
            continue
        assert canonical_with_question(pattern, q) in keys, q


@pytest.mark.parametrize("game", [Game.MM, Game.AB])
def test_additional_color_never_reaches_a_clause(game):
    for pattern in derive(game, 2).queue:
        for q in gen_questions(pattern):
            for child in split_pattern(pattern, q):
                assert all(ADD not in c for c in child.clauses)


def test_ab_questions_may_repeat_only_the_additional_color():
    qs = gen_questions(MasetPattern.full(Game.AB, 3))
    assert qs == [(0, 1, 2), (0, 1, A), (0, A, A)]
    assert not legal_question(Game.AB, (0, 0, A))
    assert not legal_question(Game.MM, (A, A, A))


def test_questions_never_all_additional():
    for q in gen_questions(pat((S, 0))):
        assert q != (A, A)


def test_concrete_examples():
    two = concrete([(0, 0), (1, 1)], 2)
    qs = gen_questions_concrete(two)
    assert any(set(q) == {0} or set(q) == {1} for q in qs)
    assert len(gen_questions_concrete(ConcreteMaset.full(Game.MM, 2, 2))) <= 5
    for q in gen_questions_concrete(ConcreteMaset.full(Game.AB, 2, 3)):
        assert len(set(q)) == 2


def _solve_by_symmetry_classes(maset: ConcreteMaset, memo: dict) -> int:
    """Reference solver that only expands gen_questions_concrete output."""
    size = len(maset)
    if size <= 1:
        return size
    if maset.secrets in memo:
        return memo[maset.secrets]
    last = answer_count(maset.p) - 1
    best = None
    for q in gen_questions_concrete(maset):
        buckets = split_concrete(maset, q)
        assert is_splitting(buckets, size, maset.p)
        total = size + sum(
            _solve_by_symmetry_classes(maset.with_secrets(b), memo) for k, b in enumerate(buckets) if k != last
        )
        best = total if best is None else min(best, total)
    memo[maset.secrets] = best
    return best


@pytest.mark.parametrize("seed", range(6))
def test_symmetry_dedupe_agrees_with_partition_dedupe(seed):
    rng = random.Random(seed)
    game = Game.MM if seed % 2 else Game.AB
    full = sorted(ConcreteMaset.full(game, 2, 3).secrets)
    maset = ConcreteMaset(2, game, 3, frozenset(rng.sample(full, rng.randint(3, 5))))
    assert _solve_by_symmetry_classes(maset, {}) == ConcreteSolver().solve(maset)


def test_full_games_agree_with_partition_dedupe():
    for game, n in ((Game.MM, 3), (Game.AB, 3), (Game.MM, 2)):
        full = ConcreteMaset.full(game, 2, n)
        assert _solve_by_symmetry_classes(full, {}) == ConcreteSolver().solve(full)
