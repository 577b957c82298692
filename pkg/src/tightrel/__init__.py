"""Exact verification, construction, and parameter scanning for block
designs and for weighted two-shell subsets of the binary Hamming cube
that are balanced against low-degree functions."""

from .analysis import (
    KageyamaReport,
    ShellReport,
    check_via_thm34,
    complement_lambda_t,
    complementary_pair,
    is_tight,
    kageyama_constituents,
    p_ell_formula,
    p_ell_t_formula,
    prop44_check,
    tight_size,
)
from .designs import (
    Design,
    DesignParams,
    FormatError,
    bits_of,
    complement,
    construct_paley_hadamard,
    construct_witt_23,
    coverage_map,
    derived,
    design_text,
    extend_pair,
    is_regular_twise_balanced,
    is_t_design,
    lambda_count,
    load_design,
    mask_of,
    residual,
    save_design,
)
from .feasibility import (
    FeasibleRow,
    NonexistenceVerdict,
    annotate_existence,
    brc_test,
    driessen_test,
    legendre_solvable,
    row_ruled_out,
    rows_to_tsv,
    scan_relative3,
    scan_relative4,
    symmetric_square_test,
)
from .hamming import (
    RelativeCandidate,
    krawtchouk,
    load_candidate,
    relative_design_oracle,
    save_candidate,
    shell_moment,
)
from .profiles import (
    LambdaSequence,
    MultiplicityGraph,
    conjecture2_scan,
    lambda_sequence,
    multiplicity_graph,
    sequences_equal,
)

__version__ = "0.1.0"

__all__ = [
    "Design",
    "DesignParams",
    "FormatError",
    "FeasibleRow",
    "KageyamaReport",
    "LambdaSequence",
    "MultiplicityGraph",
    "NonexistenceVerdict",
    "RelativeCandidate",
    "ShellReport",
    "annotate_existence",
    "bits_of",
    "brc_test",
    "check_via_thm34",
    "complement",
    "complement_lambda_t",
    "complementary_pair",
    "conjecture2_scan",
    "construct_paley_hadamard",
    "construct_witt_23",
    "coverage_map",
    "derived",
    "design_text",
    "driessen_test",
    "extend_pair",
    "is_regular_twise_balanced",
    "is_t_design",
    "is_tight",
    "kageyama_constituents",
    "krawtchouk",
    "lambda_count",
    "lambda_sequence",
    "legendre_solvable",
    "load_candidate",
    "load_design",
    "mask_of",
    "multiplicity_graph",
    "p_ell_formula",
    "p_ell_t_formula",
    "prop44_check",
    "relative_design_oracle",
    "residual",
    "row_ruled_out",
    "rows_to_tsv",
    "save_candidate",
    "save_design",
    "scan_relative3",
    "scan_relative4",
    "sequences_equal",
    "shell_moment",
    "symmetric_square_test",
    "tight_size",
]
