"""Deterministic omega-automata toolkit.

Parses and serializes Muller and Buchi automata, analyzes their SCC and loop
structure, classifies languages topologically (open, meagre, dense, nowhere
dense), constructs open and meagre-complement witness automata in polynomial
time, translates maximal-loop Muller automata into quadratic-size Buchi
automata, and verifies every construction against brute-force oracles at
desk scale.
"""

from .automaton import (
    BuchiSet,
    DetAutomaton,
    LassoWord,
    MullerTable,
    accepts_buchi,
    accepts_muller,
    inf_set,
    run,
    step,
)
from .baire import (
    BaireWitness,
    LoopDensity,
    OpenWitness,
    TopoClass,
    TriState,
    WeakBuchiWitness,
    build_baire_witness,
    build_meagre_complement,
    build_open_witness,
    build_weak_buchi_open,
    classify_loop_density,
    classify_meagre,
    classify_openness,
)
from .errors import (
    AlphabetMismatch,
    AutomataError,
    BadHeader,
    BadLoop,
    BadStateIndex,
    DuplicateTransition,
    FormatError,
    MissingTransition,
    PreconditionViolated,
    SizeGuard,
    UnknownSymbol,
)
from .fileformat import (
    format_lasso,
    format_word,
    parse_automaton,
    parse_lasso_text,
    serialize_automaton,
)
from .loops import (
    LassoDecomposition,
    SccAnalysis,
    analyze,
    decompose_lasso,
    enumerate_loops,
    is_loop,
    iter_loops,
    loop_completing_words,
    words_to_state,
)
from .oracle import (
    CheckResult,
    ProductAutomaton,
    RandomSpec,
    SubsetVerdict,
    WitnessReport,
    accepts,
    boolean_table_op,
    bounded_lasso_scan,
    exhaustive_lassos,
    language_subset_oracle,
    lasso_sampler,
    loop_lasso,
    maximal_muller_buchi_equiv,
    product,
    random_instance,
    table_subset_same_automaton,
    verify_baire_witness,
)
from .to_buchi import (
    BuchiTranslation,
    MaximalLoopReport,
    buchi_state_bound,
    check_maximal_loops,
    muller_to_buchi_maximal,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatch",
    "AutomataError",
    "BadHeader",
    "BadLoop",
    "BadStateIndex",
    "BaireWitness",
    "BuchiSet",
    "BuchiTranslation",
    "CheckResult",
    "DetAutomaton",
    "DuplicateTransition",
    "FormatError",
    "LassoDecomposition",
    "LassoWord",
    "LoopDensity",
    "MaximalLoopReport",
    "MissingTransition",
    "MullerTable",
    "OpenWitness",
    "PreconditionViolated",
    "ProductAutomaton",
    "RandomSpec",
    "SccAnalysis",
    "SizeGuard",
    "SubsetVerdict",
    "TopoClass",
    "TriState",
    "UnknownSymbol",
    "WeakBuchiWitness",
    "WitnessReport",
    "accepts",
    "accepts_buchi",
    "accepts_muller",
    "analyze",
    "boolean_table_op",
    "bounded_lasso_scan",
    "buchi_state_bound",
    "build_baire_witness",
    "build_meagre_complement",
    "build_open_witness",
    "build_weak_buchi_open",
    "check_maximal_loops",
    "classify_loop_density",
    "classify_meagre",
    "classify_openness",
    "decompose_lasso",
    "enumerate_loops",
    "exhaustive_lassos",
    "format_lasso",
    "format_word",
    "inf_set",
    "is_loop",
    "iter_loops",
    "language_subset_oracle",
    "lasso_sampler",
    "loop_completing_words",
    "loop_lasso",
    "maximal_muller_buchi_equiv",
    "muller_to_buchi_maximal",
    "parse_automaton",
    "parse_lasso_text",
    "product",
    "random_instance",
    "run",
    "serialize_automaton",
    "step",
    "table_subset_same_automaton",
    "verify_baire_witness",
    "words_to_state",
]
