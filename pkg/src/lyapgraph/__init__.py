"""Lyapunov graphs of flows on 3-manifolds: models, invariants, verdicts.

The library decides whether an abstract Lyapunov graph is realizable by a
nonsingular Smale flow on the 3-sphere or on the twisted product
S1 x S2 (and by a Smale flow on the 3-sphere), with per-condition
violations; computes the mod-2 matrix invariants those conditions use;
manipulates saddle matrices by certified state splittings; enumerates and
classifies all small graphs; and reads/writes the ``.lgd`` text format.
"""

from .analysis import (
    CutBalance,
    CutBalanceReport,
    CycleData,
    CycleStep,
    DownSetCut,
    betti1,
    down_set_cuts,
    euler_cut_balance,
    is_tree,
    sample_down_set_cuts,
    unique_cycle,
)
from .census import (
    CensusBounds,
    CensusResult,
    CensusRow,
    CensusSummary,
    canonical_key,
    census_csv_lines,
    classify_graph,
    enumerate_graphs,
    iter_census,
    run_census,
    ssft_universe,
)
from .dynamics import (
    ReplayResult,
    SplitCertificate,
    SplitStep,
    in_split,
    is_irreducible,
    matrix_literal,
    normalize_matrix,
    out_split,
    parse_matrix_literal,
    verify_certificate,
)
from .errors import (
    BadMatrixShapeError,
    BoundsTooLargeError,
    BudgetExhaustedError,
    DisconnectedGraphError,
    DuplicateVertexIdError,
    EmptyBlockError,
    IndexOutOfRangeError,
    LgdParseError,
    LgdSyntaxError,
    LyapgraphError,
    NegativeDimensionError,
    NegativeEntryError,
    NonSquareError,
    NotAPartitionError,
    NotBettiOneError,
    NotIrreducibleError,
    OrientedCycleError,
    SelfLoopError,
    TooLargeError,
    UnknownKindError,
    UnknownVertexRefError,
)
from .gf2 import (
    Gf2Matrix,
    Gf2Summary,
    as_matrix,
    bowen_franks_mod2,
    k_invariant,
    rank_gf2,
    reduce_mod2,
)
from .lgd import (
    LgdDocument,
    MachineVerdict,
    emit_report,
    parse_lgd,
    parse_lgd_document,
    parse_machine_report,
    serialize_lgd,
)
from .model import (
    Edge,
    LyapunovGraph,
    Singularity,
    SinkOrbit,
    SourceOrbit,
    Ssft,
    VertexContext,
    VertexLabel,
    build_graph,
    label_code,
    vertex_context,
)
from .realizability import (
    BoundCheck,
    BoundsReport,
    CONDITION_CODES,
    HomologyBoundsInput,
    Model,
    Regime,
    Verdict,
    Violation,
    WeightBoundReport,
    check_ns_s1s2,
    check_ns_s1s2_s2,
    check_ns_s1s2_separable,
    check_ns_s1s2_t2,
    check_ns_s3,
    check_smale_s3,
    classify_singular_vertices,
    homological_bounds,
    knot_complement_bounds,
    knot_complement_input,
    singular_forced_count,
    weight_bound_check,
)

__version__ = "0.1.0"
