"""Perception-based reaction automata and graph-based reaction systems."""

from .automata import (
    EPSILON,
    Automaton,
    Relabeling,
    RunResult,
    accepts,
    determinize,
    distinguishing_words,
    enzyme_perception,
    epsilon_closure,
    language_equivalent,
    minimize,
    perception_map,
    relabel,
    run,
)
from .dot import export_dot
from .equivalence import (
    Embedding,
    find_relabeling_isomorphism,
    is_perception_based_reaction,
    simulation_embedding,
)
from .errors import (
    AlphabetError,
    CatalogError,
    DomainError,
    FormatError,
    MolPerceptionError,
    NotAPerceptionReactionError,
    PerceptionUndefinedError,
    PreconditionError,
)
from .lgraph import Extraction, LabelledGraph, Selector, extraction, graph_union, is_subgraph, pair_intersect
from .perception import (
    Environment,
    compile_environment,
    is_inhibited,
    perception_enabled,
    perception_selector,
    result_by_perception,
    resp_set,
)
from .reactions import Reaction, ReactionSystem, enabled, result, result_set, validate_reaction

__version__ = "0.1.0"
