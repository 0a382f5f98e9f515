"""Executable witnesses for the coherence of free monoids."""

from .automata import FiniteAutomaton
from .closure import (
    ClosureResult,
    class_automaton,
    closure_automaton,
    ideal_closure,
    intersect_right_ideal,
    member,
)
from .coherence import (
    AnnihilatorGenerators,
    BudgetExceeded,
    CoherenceBounds,
    IntersectionGenerators,
    annihilator_generators,
    compute_bounds,
    generated_member,
    intersection_generators,
    witness_report,
)
from .presentation import Presentation, make_presentation, pair_count
from .sequences import (
    Branch1,
    Branch2,
    EmptyU,
    Factorization,
    HSequence,
    InvariantViolation,
    PreconditionError,
    Quadruple,
    factorize,
    find_sequence,
    is_irreducible_quadruple,
    is_irreducible_sequence,
    reduce_step,
    verify_sequence,
)
from .words import Alphabet, AlphabetError, concat, longest_common_suffix, strip_suffix

__version__ = "0.1.0"
