"""Protocol runs: exact outcome enumeration and seeded sampling.

The engine composes the channel, the sender bases, and a correction table
into a full protocol report.  Enumeration is exhaustive and exact; the
sampling mode overlays multinomial draws on the exact distribution using
a counter-based generator, so the i-th shot is a pure function of
(seed, i) no matter how the shots are batched.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bases import ShareVector
from .channels import Protocol, build_channel, joint_outcomes, sender_bases
from .corrections import (
    PROB_FLOOR,
    CorrectionTable,
    assignment_fidelities,
    correction_unitary,
    outcome_key_str,
    published_table,
    regenerate_table,
)
from .linalg import DIM, PureState, apply_local, fidelity

__all__ = [
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
]

# Fixed generic shares used to derive the reference correction tables.
# Any generic pair gives the same tables (asserted by the verification
# suite); these are pinned so that derivation never depends on run input.
_REFERENCE_SHARE_1 = (1.0, 2.0, 3.0, 4.0)
_REFERENCE_SHARE_2 = (2.0, 3.0, 5.0, 9.0)


@dataclass(frozen=True)
class TargetState:
    """What the senders jointly encode, on the receiver's register."""

    arity: int
    state: PureState
    product_norm: float


def target_state(share1: ShareVector, share2: ShareVector, arity: int, labels) -> TargetState:
    """Componentwise share product, renormalized, on the receiver labels.

    For arity 1 the target is sum_t T(t)|t>; for arity 2 it is the
    diagonal embedding sum_t T(t)|tt>.  The recorded product_norm is the
    raw product's length, whose square is the ideal success probability.
    """
    labels = tuple(labels)
    if arity not in (1, 2) or len(labels) != arity:
        raise ValueError(f"arity {arity} does not fit labels {labels}")
    raw = share1.components * share2.components
    pn = float(np.linalg.norm(raw))
    if pn < 1e-12:
        raise ValueError("degenerate factorization: protocol undefined")
    coeffs = raw / pn
    if arity == 1:
        state = PureState(labels, coeffs)
    else:
        amps = np.zeros(DIM * DIM)
        for t in range(DIM):
            amps[t * DIM + t] = coeffs[t]
        state = PureState(labels, amps)
    return TargetState(arity, state, pn)


def classical_cost(protocol: Protocol | str) -> int:
    """Bits both senders broadcast: log2 of each announced basis size."""
    spec = build_channel(protocol)
    b1, b2 = sender_bases(spec, _reference_share(1), _reference_share(2))
    return round(math.log2(len(b1)) + math.log2(len(b2)))


@lru_cache(maxsize=2)
def _reference_share(sender_id: int) -> ShareVector:
    raw = np.array(_REFERENCE_SHARE_1 if sender_id == 1 else _REFERENCE_SHARE_2)
    return ShareVector(raw / np.linalg.norm(raw), sender_id)


@lru_cache(maxsize=4)
def derived_table(protocol: Protocol | str) -> CorrectionTable:
    """The re-derived correction table, pinned to the reference shares."""
    return regenerate_table(Protocol(protocol), _reference_share(1), _reference_share(2))


@dataclass(frozen=True)
class OutcomeRecord:
    """One joint measurement outcome of a protocol run."""

    key: tuple
    probability: float
    collapsed: PureState | None  # normalized; None for probability-zero branches
    success: bool
    correction: tuple[tuple[int, int], ...] | None
    post_fidelity: float  # vs target, after the table correction if any
    best_fidelity: float  # max over every alphabet assignment


@dataclass(frozen=True)
class ProtocolReport:
    protocol: Protocol
    share1: ShareVector
    share2: ShareVector
    target: TargetState
    records: tuple[OutcomeRecord, ...]
    success_probability: float
    classical_cost_bits: int
    table_provenance: str
    seed: int | None = None
    shots: int | None = None
    empirical_counts: dict[tuple, int] | None = None


@dataclass(frozen=True)
class RunConfig:
    protocol: Protocol
    share1: ShareVector
    share2: ShareVector
    mode: str = "enumerate"  # "enumerate" or "sample"
    seed: int | None = None
    shots: int | None = None
    table_provenance: str = "derived"

    def __post_init__(self):
        if self.mode not in ("enumerate", "sample"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.table_provenance not in ("derived", "transcribed"):
            raise ValueError(f"unknown table provenance {self.table_provenance!r}")
        if self.mode == "sample":
            if self.seed is None:
                raise ValueError("sample mode requires a seed")
            if self.shots is None or self.shots < 1:
                raise ValueError("sample mode requires shots >= 1")


def enumerate_outcomes(config: RunConfig) -> ProtocolReport:
    """Exact report over every joint outcome, lexicographic key order."""
    protocol = Protocol(config.protocol)
    spec = build_channel(protocol)
    tgt = target_state(config.share1, config.share2, spec.arity, spec.receiver_labels)
    if config.table_provenance == "derived":
        table = derived_table(protocol)
    else:
        table = published_table(protocol)

    records = []
    for key, residual, prob in joint_outcomes(spec, config.share1, config.share2):
        if prob <= PROB_FLOOR:
            records.append(OutcomeRecord(key, 0.0, None, False, None, 0.0, 0.0))
            continue
        collapsed = residual.normalized()
        best = float(assignment_fidelities(collapsed, tgt.state).max())
        ops = table.rules.get(key)
        if ops is not None:
            corrected = collapsed
            for label, idx in ops:
                corrected = apply_local(correction_unitary(idx), label, corrected)
            post = fidelity(corrected, tgt.state)
            records.append(OutcomeRecord(key, prob, collapsed, True, ops, post, best))
        else:
            post = fidelity(collapsed, tgt.state)
            records.append(OutcomeRecord(key, prob, collapsed, False, None, post, best))

    success_probability = float(sum(r.probability for r in records if r.success))
    return ProtocolReport(
        protocol=protocol,
        share1=config.share1,
        share2=config.share2,
        target=tgt,
        records=tuple(records),
        success_probability=success_probability,
        classical_cost_bits=classical_cost(protocol),
        table_provenance=config.table_provenance,
    )


def run_sampled(config: RunConfig) -> ProtocolReport:
    """Exact enumeration plus seeded shot counts.

    Sampling inverts the CDF over the lexicographically ordered outcomes.
    The generator is Philox keyed by the seed, so draw i is determined by
    (seed, i) alone.
    """
    if config.mode != "sample":
        raise ValueError("run_sampled needs a sample-mode config")
    base = enumerate_outcomes(config)
    probs = np.array([r.probability for r in base.records])
    cdf = np.cumsum(probs)
    gen = np.random.Generator(np.random.Philox(key=config.seed))
    draws = gen.random(config.shots)
    idx = np.searchsorted(cdf, draws, side="right")
    idx = np.minimum(idx, len(probs) - 1)  # guard the p=1 edge of the CDF
    counts: dict[tuple, int] = {}
    for i, n in zip(*np.unique(idx, return_counts=True)):
        counts[base.records[int(i)].key] = int(n)
    return ProtocolReport(
        protocol=base.protocol,
        share1=base.share1,
        share2=base.share2,
        target=base.target,
        records=base.records,
        success_probability=base.success_probability,
        classical_cost_bits=base.classical_cost_bits,
        table_provenance=base.table_provenance,
        seed=config.seed,
        shots=config.shots,
        empirical_counts=counts,
    )


# --------------------------------------------------------------------------
# serialization

def _complex_pairs(amps: np.ndarray) -> list[list[float]]:
    return [[float(a.real), float(a.imag)] for a in amps]


def _correction_str(ops) -> str | None:
    if ops is None:
        return None
    return ";".join(f"U{idx}@{label}" for label, idx in ops)


def report_doc(report: ProtocolReport) -> dict:
    """JSON-ready dictionary; key order is fixed by serialization."""
    doc = {
        "protocol": report.protocol.value,
        "shares": {
            "share1": [float(x) for x in report.share1.components],
            "share2": [float(x) for x in report.share2.components],
        },
        "target": {
            "amplitudes": _complex_pairs(report.target.state.amps),
            "labels": list(report.target.state.labels),
            "product_norm": report.target.product_norm,
        },
        "records": [
            {
                "outcome": outcome_key_str(r.key),
                "probability": r.probability,
                "success": r.success,
                "correction": _correction_str(r.correction),
                "post_fidelity": r.post_fidelity,
                "best_fidelity": r.best_fidelity,
                "collapsed": None if r.collapsed is None else _complex_pairs(r.collapsed.amps),
            }
            for r in report.records
        ],
        "success_probability": report.success_probability,
        "classical_cost_bits": report.classical_cost_bits,
        "table_provenance": report.table_provenance,
    }
    if report.empirical_counts is not None:
        doc["seed"] = report.seed
        doc["shots"] = report.shots
        doc["empirical_counts"] = {
            outcome_key_str(k): v for k, v in sorted(report.empirical_counts.items())
        }
    return doc


def report_json(report: ProtocolReport) -> str:
    return json.dumps(report_doc(report), sort_keys=True, indent=2) + "\n"


def report_csv(report: ProtocolReport) -> str:
    """One row per outcome; counts column appears only for sampled runs."""
    sampled = report.empirical_counts is not None
    header = ["outcome_key", "probability", "success", "correction", "fidelity"]
    if sampled:
        header.append("count")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for r in report.records:
        row = [
            outcome_key_str(r.key),
            repr(r.probability),
            str(r.success).lower(),
            _correction_str(r.correction) or "",
            repr(r.post_fidelity),
        ]
        if sampled:
            row.append(str(report.empirical_counts.get(r.key, 0)))
        writer.writerow(row)
    return buf.getvalue()
