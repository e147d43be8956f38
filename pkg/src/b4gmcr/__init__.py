"""Graph-model conflict analysis over Belnap's four-valued logic."""
from .b4 import B, F, N, T, TruthValue, conj, disj, entails, move_allowed, negate
from .cases import CASE_IDS, load_case
from .errors import MissingPreferences, ModelError, ParseError
from .model import (
    ConflictModel,
    DecisionMaker,
    Logic,
    OptionDef,
    PreferenceOrder,
    Relation,
    State,
    StateSpace,
    binary_to_b4,
    compare_preference,
    enumerate_states,
    phi_less_or_equal,
    restrict_states,
    validate_model,
)
from .modelfile import parse_mapping, parse_model, serialize_model
from .oracle import oracle_check
from .reachability import (
    MovePolicy,
    PolicyKind,
    Reachability,
    coalition_improvements,
    coalition_reachable,
    coalition_ui_reachable,
    export_graph,
    reachable,
    unilateral_improvements,
)
from .stability import (
    Concept,
    Mark,
    StabilityReport,
    analyze,
    compare_reports,
    is_cgmr,
    is_cnash,
    is_cseq,
    is_csmr,
    is_gmr,
    is_nash,
    is_pareto_optimal,
    is_seq,
    is_smr,
)

__version__ = "0.1.0"
