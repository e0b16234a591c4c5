"""Exact workbench for B_h[g] sets: counting, verification, games, density."""

from .core import (
    DEFAULT_BUDGET,
    BoundExhaustedError,
    Budget,
    HorizonRegressionError,
    InvalidCylinderError,
    MoveError,
    NaturalSet,
    OutOfTurnError,
    Params,
    RefinementViolationError,
    ResourceBudgetError,
    SessionStateError,
    SidonlabError,
    UnsupportedArityError,
    canonical_json,
)
from .repcount import (
    CONVOLUTION_MAX_H,
    ENGINES,
    RepTable,
    enumerate_representations,
    partitions_at_most,
    rep_count,
    rep_table,
    rep_table_convolution,
    rep_table_dp,
    rep_table_oracle,
)
from .points import (
    ConfigVerdict,
    ExponentVector,
    GenericityReport,
    PointConfig,
    TrialFailure,
    genericity_experiment,
    is_bhg_config,
    multiset_sums,
    violating_hyperplane,
)
from .game import (
    AuditCheckA,
    AuditCheckB,
    AuditReport,
    Cylinder,
    GameSession,
    GrowthFunction,
    Round,
    audit_transcript,
    check_refinement,
    limit_prefix,
    open_session,
    player1_move,
    respond_strategy_a,
    respond_strategy_b,
)
from .density import (
    CountingBoundCertificate,
    PrefixDensityReport,
    counting_bound_certificate,
    prefix_density,
    symdiff_density,
)
from .verify import Verdict, Witness, gadget_target, greedy_bhg, is_bhg, violation_gadget

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BUDGET",
    "BoundExhaustedError",
    "Budget",
    "HorizonRegressionError",
    "InvalidCylinderError",
    "MoveError",
    "NaturalSet",
    "OutOfTurnError",
    "Params",
    "RefinementViolationError",
    "ResourceBudgetError",
    "SessionStateError",
    "SidonlabError",
    "UnsupportedArityError",
    "canonical_json",
    "CONVOLUTION_MAX_H",
    "ENGINES",
    "RepTable",
    "enumerate_representations",
    "partitions_at_most",
    "rep_count",
    "rep_table",
    "rep_table_convolution",
    "rep_table_dp",
    "rep_table_oracle",
    "AuditCheckA",
    "AuditCheckB",
    "AuditReport",
    "Cylinder",
    "GameSession",
    "GrowthFunction",
    "Round",
    "audit_transcript",
    "check_refinement",
    "limit_prefix",
    "open_session",
    "player1_move",
    "respond_strategy_a",
    "respond_strategy_b",
    "CountingBoundCertificate",
    "PrefixDensityReport",
    "counting_bound_certificate",
    "prefix_density",
    "symdiff_density",
    "ConfigVerdict",
    "ExponentVector",
    "GenericityReport",
    "PointConfig",
    "TrialFailure",
    "genericity_experiment",
    "is_bhg_config",
    "multiset_sums",
    "violating_hyperplane",
    "Verdict",
    "Witness",
    "gadget_target",
    "greedy_bhg",
    "is_bhg",
    "violation_gadget",
    "__version__",
]
