"""Computer-aided derivation of optimal expected-case strategies for
Mastermind-like games with few pegs."""

from __future__ import annotations

from .equations import DerivationOutput, Equation, Term, derive, eval_system, verify_fixpoint
from .pattern import ADD, STAR, ConcreteMaset, Game, MasetPattern
from .solver import solve_concrete, solve_star_free

__version__ = "0.1.0"

__all__ = [
    "ADD",
    "STAR",
    "ConcreteMaset",
    "DerivationOutput",
    "Equation",
    "Game",
    "MasetPattern",
    "Term",
    "derive",
    "eval_system",
    "solve_concrete",
    "solve_star_free",
    "verify_fixpoint",
]
