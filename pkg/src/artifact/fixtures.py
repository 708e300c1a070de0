"""Small named automata used across the tests and the docs.

Each constant is a fully validated, trim automaton.  The EX_FIN2/EX_POLY1/
EX_POLY2/EX_EXP family walks up the ambiguity hierarchy; EX_EPS is EX_POLY1
with one transition split through an ε-edge, so the two must classify
identically.  The weighted ones are probability distributions (total mass 1).
"""

from .core import EPSILON, validate
from .weighted import validate_weighted

# two parallel paths for "ab": finitely ambiguous, max 2 paths per string
EX_FIN2 = validate(
    alphabet=("a", "b"),
    num_states=4,
    initial=(0,),
    final=(3,),
    transitions=[(0, "a", 1), (0, "a", 2), (1, "b", 3), (2, "b", 3)],
)

# a* loop, one exit, a* loop again: da(aⁿ) = n, linearly ambiguous
EX_POLY1 = validate(
    alphabet=("a",),
    num_states=2,
    initial=(0,),
    final=(1,),
    transitions=[(0, "a", 0), (0, "a", 1), (1, "a", 1)],
)

# EX_POLY1 chained once more: da(aⁿ) grows quadratically
EX_POLY2 = validate(
    alphabet=("a",),
    num_states=3,
    initial=(0,),
    final=(2,),
    transitions=[(0, "a", 0), (0, "a", 1), (1, "a", 1), (1, "a", 2), (2, "a", 2)],
)

# complete two-state graph on a single symbol: da(aⁿ) = 2^(n-1)
EX_EXP = validate(
    alphabet=("a",),
    num_states=2,
    initial=(0,),
    final=(0,),
    transitions=[(0, "a", 0), (0, "a", 1), (1, "a", 0), (1, "a", 1)],
)

# EX_POLY1 with the exit transition split through an ε-edge
EX_EPS = validate(
    alphabet=("a",),
    num_states=3,
    initial=(0,),
    final=(1,),
    transitions=[(0, "a", 0), (0, EPSILON, 2), (1, "a", 1), (2, "a", 1)],
)

# uniform coin flip on {a, b}: H = ln 2, unambiguous
EX_UNIF = validate_weighted(
    alphabet=("a", "b"),
    num_states=2,
    initial={0: 1.0},
    final={1: 1.0},
    transitions=[(0, "a", 1, 0.5), (0, "b", 1, 0.5)],
)

# geometric distribution: ⟦A⟧(aⁿ) = 2^−(n+1), H = 2·ln 2, expected length 1
EX_GEO = validate_weighted(
    alphabet=("a",),
    num_states=1,
    initial={0: 1.0},
    final={0: 0.5},
    transitions=[(0, "a", 0, 0.5)],
)

# EX_FIN2 as a distribution: both strings are "ab"-shaped with two paths
# each of weight 1/2, so H = 0 while the path entropy S is ln 2 — the
# finite-ambiguity gap at its exact worst
EX_FIN2U = validate_weighted(
    alphabet=("a", "b"),
    num_states=4,
    initial={0: 1.0},
    final={3: 1.0},
    transitions=[
        (0, "a", 1, 0.5),
        (0, "a", 2, 0.5),
        (1, "b", 3, 1.0),
        (2, "b", 3, 1.0),
    ],
)

# EX_POLY1 with every weight 1/2: ⟦A⟧(aⁿ) = n·2^−(n+1), mass 1,
# S = 4·ln 2, expected length 3
EX_POLY1P = validate_weighted(
    alphabet=("a",),
    num_states=2,
    initial={0: 1.0},
    final={1: 0.5},
    transitions=[(0, "a", 0, 0.5), (0, "a", 1, 0.5), (1, "a", 1, 0.5)],
)

# EX_POLY2 with every weight 1/2: ⟦A⟧(aⁿ) = C(n,2)·2^−(n+1) (a negative
# binomial over path lengths), mass 1, S = 6·ln 2, expected length 5
EX_POLY2P = validate_weighted(
    alphabet=("a",),
    num_states=3,
    initial={0: 1.0},
    final={2: 0.5},
    transitions=[
        (0, "a", 0, 0.5),
        (0, "a", 1, 0.5),
        (1, "a", 1, 0.5),
        (1, "a", 2, 0.5),
        (2, "a", 2, 0.5),
    ],
)
