"""Exact simulation and verification of joint remote state preparation
for four-level quantum systems.

Two senders each hold a multiplicative share of a target state and steer
the receiver's particles onto it by measuring their halves of a shared
entangled channel in share-built bases; the receiver finishes with one
permutation correction per particle.  This package simulates the three
standard channel configurations exactly, re-derives the correction
tables by brute force, and audits the published closed forms against
that derivation.
"""

from .linalg import (
    DIM,
    DensityMatrix,
    PureState,
    apply_local,
    basis_state,
    fidelity,
    inner,
    project,
    reduced_density,
    tensor_product,
)
from .bases import (
    MeasurementBasis,
    ShareVector,
    gram,
    is_generic,
    parse_share_text,
    random_generic_share,
    sign_pattern,
    single_particle_basis,
    two_particle_basis,
)
from .channels import (
    ChannelSpec,
    Protocol,
    build_channel,
    epr_state,
    ghz_state,
    joint_outcomes,
    sender_bases,
)
from .corrections import (
    CORRECTIONS,
    CorrectionTable,
    correction_unitary,
    diff_tables,
    outcome_key_str,
    published_table,
    regenerate_table,
    search_correction,
)
from .engine import (
    OutcomeRecord,
    ProtocolReport,
    RunConfig,
    TargetState,
    classical_cost,
    derived_table,
    enumerate_outcomes,
    report_csv,
    report_doc,
    report_json,
    run_sampled,
    target_state,
)
from .verify import (
    KNOWN_DISCREPANCY_LOCATIONS,
    Discrepancy,
    full_audit,
    verify_decomposition,
    verify_group_states,
    verify_tables,
)

__version__ = "0.1.0"

__all__ = [
    "DIM",
    "PureState",
    "DensityMatrix",
    "basis_state",
    "tensor_product",
    "apply_local",
    "project",
    "inner",
    "fidelity",
    "reduced_density",
    "ShareVector",
    "MeasurementBasis",
    "parse_share_text",
    "sign_pattern",
    "single_particle_basis",
    "two_particle_basis",
    "gram",
    "is_generic",
    "random_generic_share",
    "Protocol",
    "ChannelSpec",
    "ghz_state",
    "epr_state",
    "build_channel",
    "sender_bases",
    "joint_outcomes",
    "CORRECTIONS",
    "correction_unitary",
    "CorrectionTable",
    "published_table",
    "search_correction",
    "regenerate_table",
    "diff_tables",
    "outcome_key_str",
    "TargetState",
    "OutcomeRecord",
    "ProtocolReport",
    "RunConfig",
    "target_state",
    "classical_cost",
    "derived_table",
    "enumerate_outcomes",
    "run_sampled",
    "report_doc",
    "report_json",
    "report_csv",
    "Discrepancy",
    "KNOWN_DISCREPANCY_LOCATIONS",
    "verify_decomposition",
    "verify_group_states",
    "verify_tables",
    "full_audit",
    "__version__",
]
