"""Interlinked-cycle structures for index coding.

Recognize the structure, build its XOR broadcast code, run the per-tree
combined-symbol decoder, evaluate the cancellation conditions that
characterize when that decoder works, and decide linear decodability
outright by exhaustion or rank.
"""

from .conditions import (
    ConditionReport,
    DomainError,
    check_conditions,
    count_a,
    count_b,
    theorem1_predict,
)
from .construction import (
    CodeSymbol,
    IndexCode,
    bitvector_to_string,
    build_code,
    encode_messages,
    symbol_as_bitvector,
)
from .decoding import (
    DecodeOutcome,
    DecodeReport,
    decode_all,
    recover_messages,
    side_information_from_messages,
    z_of,
)
from .digraph import (
    Digraph,
    GraphError,
    cycles_through_exactly_one,
    find_cycle_through_exactly_one,
    has_cycle_within,
    simple_paths_avoiding,
)
from .fileio import ParseError, parse_graph, relabel_inner, serialize_graph
from .fixtures import FIXTURE_NAMES, fixture_text, load_fixture
from .generate import (
    GenerationFailedError,
    GenParams,
    SplitMix64,
    gen_random_ic,
    gen_theorem2_family,
)
from .oracle import (
    SIZE_CAP_DEFAULT,
    OracleOutcome,
    SizeLimitError,
    enumerate_decodability,
    full_table,
    oracle_report,
    rank_decodability,
    write_full_table_csv,
)
from .reporting import analyze, to_json
from .structure import (
    ICStructure,
    ICycleFound,
    IPathDuplicated,
    IPathMissing,
    MissingIPathError,
    NotATreeError,
    NotICStructureError,
    RootedTree,
    UncoveredArc,
    UncoveredVertex,
    ValidationReport,
    build_rooted_tree,
    ic_structure,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "CodeSymbol",
    "ConditionReport",
    "DecodeOutcome",
    "DecodeReport",
    "Digraph",
    "DomainError",
    "FIXTURE_NAMES",
    "GenParams",
    "GenerationFailedError",
    "GraphError",
    "ICStructure",
    "ICycleFound",
    "IPathDuplicated",
    "IPathMissing",
    "IndexCode",
    "MissingIPathError",
    "NotATreeError",
    "NotICStructureError",
    "OracleOutcome",
    "ParseError",
    "RootedTree",
    "SIZE_CAP_DEFAULT",
    "SizeLimitError",
    "SplitMix64",
    "UncoveredArc",
    "UncoveredVertex",
    "ValidationReport",
    "analyze",
    "bitvector_to_string",
    "build_code",
    "build_rooted_tree",
    "check_conditions",
    "count_a",
    "count_b",
    "cycles_through_exactly_one",
    "decode_all",
    "encode_messages",
    "enumerate_decodability",
    "find_cycle_through_exactly_one",
    "fixture_text",
    "full_table",
    "gen_random_ic",
    "gen_theorem2_family",
    "has_cycle_within",
    "ic_structure",
    "load_fixture",
    "oracle_report",
    "parse_graph",
    "rank_decodability",
    "relabel_inner",
    "recover_messages",
    "serialize_graph",
    "side_information_from_messages",
    "simple_paths_avoiding",
    "symbol_as_bitvector",
    "theorem1_predict",
    "to_json",
    "validate",
    "write_full_table_csv",
    "z_of",
]
