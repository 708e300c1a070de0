"""Ambiguity analysis and entropy of finite automata.

The library answers three questions about a finite automaton with
ε-transitions: whether the number of accepting paths per string is bounded,
polynomial, or exponential in the string length; what the polynomial degree
is; and — for probabilistic automata — what the entropy of the induced
distribution is, with explicit error brackets derived from the ambiguity
class.
"""

from .analysis import (
    AmbiguityClass,
    AmbiguityReport,
    DPAWitness,
    EDAWitness,
    IDAWitness,
    classify,
    dpa,
    dpa_with_witness,
    eda_witness,
    ida_pairs,
    ida_witness,
    test_eda,
    test_ida,
    verify_dpa_witness,
    verify_eda_witness,
    verify_ida_witness,
    verify_witness,
)
from .core import (
    EPSILON,
    EPSILON_TOKEN,
    FiniteAutomaton,
    Transition,
    has_epsilon_cycle,
    is_trim,
    is_valid_path,
    path_label,
    path_source,
    path_target,
    trim,
    useful_states,
    validate,
)
from .entropy import (
    EntropyReport,
    brute_entropy,
    entropy_report,
    entropy_semiring_estimate,
    expected_length,
    total_mass,
    validate_probabilistic,
)
from .errors import (
    AlphabetTooLarge,
    AutomatonError,
    DanglingStateId,
    DuplicateTransition,
    EpsilonCycleInput,
    EpsilonInput,
    ExponentiallyAmbiguousInput,
    InternalInvariantViolation,
    MassNotOne,
    MixedWeightedness,
    NonConvergent,
    NonPositiveWeight,
    NotEpsilon,
    NotTrim,
    ParseError,
    ReservedLabelInAlphabet,
    SymbolNotInAlphabet,
    WeightOutOfRange,
)
from .fileformat import parse, serialize
from .oracle import (
    GrowthRow,
    GrowthTable,
    count_paths,
    count_paths_between,
    eliminate_epsilon_transition,
    growth_table,
    random_automaton,
    relabel_states,
    reverse,
    split_transition,
)
from .product import (
    EpsMove,
    FilterState,
    MatchSymbol,
    ProductAutomaton,
    cube,
    filter_step,
    intersect,
    square,
)
from .semiring import (
    PairWeight,
    SemiringSpec,
    entropy_semiring,
    map_entropy,
    map_expectation,
    shortest_distance,
)
from .weighted import WeightedAutomaton, trim_weighted, validate_weighted

__all__ = [
    "AlphabetTooLarge",
    "AmbiguityClass",
    "AmbiguityReport",
    "AutomatonError",
    "DPAWitness",
    "DanglingStateId",
    "DuplicateTransition",
    "EDAWitness",
    "EPSILON",
    "EPSILON_TOKEN",
    "EntropyReport",
    "EpsMove",
    "EpsilonCycleInput",
    "EpsilonInput",
    "ExponentiallyAmbiguousInput",
    "FilterState",
    "FiniteAutomaton",
    "GrowthRow",
    "GrowthTable",
    "IDAWitness",
    "InternalInvariantViolation",
    "MassNotOne",
    "MatchSymbol",
    "MixedWeightedness",
    "NonConvergent",
    "NonPositiveWeight",
    "NotEpsilon",
    "NotTrim",
    "PairWeight",
    "ParseError",
    "ProductAutomaton",
    "ReservedLabelInAlphabet",
    "SemiringSpec",
    "SymbolNotInAlphabet",
    "Transition",
    "WeightOutOfRange",
    "WeightedAutomaton",
    "brute_entropy",
    "classify",
    "count_paths",
    "count_paths_between",
    "cube",
    "dpa",
    "dpa_with_witness",
    "eda_witness",
    "eliminate_epsilon_transition",
    "entropy_report",
    "entropy_semiring",
    "entropy_semiring_estimate",
    "expected_length",
    "filter_step",
    "growth_table",
    "has_epsilon_cycle",
    "ida_pairs",
    "ida_witness",
    "intersect",
    "is_trim",
    "is_valid_path",
    "map_entropy",
    "map_expectation",
    "parse",
    "path_label",
    "path_source",
    "path_target",
    "random_automaton",
    "relabel_states",
    "reverse",
    "serialize",
    "shortest_distance",
    "split_transition",
    "square",
    "test_eda",
    "test_ida",
    "total_mass",
    "trim",
    "trim_weighted",
    "useful_states",
    "validate",
    "validate_probabilistic",
    "validate_weighted",
    "verify_dpa_witness",
    "verify_eda_witness",
    "verify_ida_witness",
    "verify_witness",
]
