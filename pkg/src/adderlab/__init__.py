"""Gate-level adder generators with simulation-based PPA comparison.

Typical flow: describe an architecture ("rca:2,ccla:3x10"), compose it
into a netlist, verify it against integer addition, then measure area,
longest-path delay and switching power against a cell library and rank
designs by figure of merit.
"""

from .arch import ArchitectureSpec, BlockKind, BlockSpec, PRESETS, parse_arch_spec, preset
from .analyze import (
    AnalysisReport,
    Comparison,
    Improvement,
    analyze_design,
    area,
    compare,
    comparison_csv,
    critical_path,
    fom,
    format_comparison,
    metrics_report,
    net_capacitance,
    power,
    power_components,
    report_json,
)
from .cells import (
    CellLibrary,
    CellModel,
    default_library,
    load_library,
    parse_library,
    serialize_library,
)
from .generate import (
    BlockNets,
    PGBundle,
    block_netlist,
    carry_terms,
    compose,
    gen_ccla_block,
    gen_cclg,
    gen_full_adder,
    gen_pg,
    gen_rca_block,
    gen_scbcla_block,
    gen_scclg,
)
from .netio import from_text, read_text, to_text, to_verilog, write_text
from .netlist import (
    ARITY,
    CellKind,
    Census,
    Gate,
    Net,
    Netlist,
    NetlistBuilder,
    census,
    new_netlist,
    topo_order,
    validate,
)
from .simulate import (
    Counterexample,
    InputVector,
    ToggleStats,
    collect_toggles,
    dump_trace,
    evaluate,
    prng_word,
    random_vectors,
    run_vectors,
    verify_exhaustive,
    verify_exhaustive_netlist,
    verify_random,
)

__version__ = "0.1.0"

__all__ = [
    "ARITY",
    "AnalysisReport",
    "ArchitectureSpec",
    "BlockKind",
    "BlockNets",
    "BlockSpec",
    "CellKind",
    "CellLibrary",
    "CellModel",
    "Census",
    "Comparison",
    "Counterexample",
    "Gate",
    "Improvement",
    "InputVector",
    "Net",
    "Netlist",
    "NetlistBuilder",
    "PRESETS",
    "PGBundle",
    "ToggleStats",
    "analyze_design",
    "area",
    "block_netlist",
    "carry_terms",
    "census",
    "collect_toggles",
    "compare",
    "comparison_csv",
    "compose",
    "critical_path",
    "default_library",
    "dump_trace",
    "evaluate",
    "fom",
    "format_comparison",
    "from_text",
    "gen_ccla_block",
    "gen_cclg",
    "gen_full_adder",
    "gen_pg",
    "gen_rca_block",
    "gen_scbcla_block",
    "gen_scclg",
    "load_library",
    "metrics_report",
    "net_capacitance",
    "new_netlist",
    "parse_arch_spec",
    "parse_library",
    "power",
    "power_components",
    "preset",
    "prng_word",
    "random_vectors",
    "read_text",
    "report_json",
    "run_vectors",
    "serialize_library",
    "to_text",
    "to_verilog",
    "topo_order",
    "validate",
    "verify_exhaustive",
    "verify_exhaustive_netlist",
    "verify_random",
    "write_text",
]
