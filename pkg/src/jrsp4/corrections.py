"""Receiver-side correction unitaries and the outcome -> correction tables.

The correction alphabet is eight signless permutation matrices U0..U7 in
column-action convention (U|t> is column t).  U0..U3 are the two-by-two
block forms built from the identity and the bit flip; U4..U7 extend the
alphabet with the two four-cycles and the two remaining transpositions.

Two sources of correction tables exist side by side:

* ``published_table``   the outcome -> correction assignments as published
                        for each protocol, transcribed verbatim;
* ``regenerate_table``  the same mapping re-derived from scratch by
                        exhaustive search over the alphabet.

``diff_tables`` reports where the two disagree.  The derived table is the
authority; disagreements are surfaced, never patched by hand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .bases import ShareVector, is_generic
from .channels import ChannelSpec, Protocol, build_channel, joint_outcomes
from .linalg import DIM, PureState

__all__ = [
    "CORRECTIONS",
    "correction_unitary",
    "CorrectionTable",
    "published_table",
    "search_correction",
    "regenerate_table",
    "diff_tables",
    "outcome_key_str",
]

# Fidelity must reach 1 - SEARCH_TOL for a correction to count as exact.
SEARCH_TOL = 1e-10

# Branches with squared norm at or below this floor carry no state to
# correct and are excluded from table derivation.
PROB_FLOOR = 1e-14

_I2 = np.eye(2)
_SX = np.array([[0.0, 1.0], [1.0, 0.0]])
_Z2 = np.zeros((2, 2))

CORRECTIONS: tuple[np.ndarray, ...] = tuple(
    m.copy() for m in (
        np.block([[_I2, _Z2], [_Z2, _I2]]),
        np.block([[_SX, _Z2], [_Z2, _SX]]),
        np.block([[_Z2, _I2], [_I2, _Z2]]),
        np.block([[_Z2, _SX], [_SX, _Z2]]),
        np.array([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]], dtype=float),
        np.array([[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]], dtype=float),
        np.array([[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], dtype=float),
        np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=float),
    )
)
for _m in CORRECTIONS:
    _m.setflags(write=False)
del _m


def correction_unitary(index: int) -> np.ndarray:
    """The 4x4 correction matrix U(index), index in 0..7."""
    if not 0 <= index < len(CORRECTIONS):
        raise ValueError(f"correction index {index} outside 0..{len(CORRECTIONS) - 1}")
    return CORRECTIONS[index]


# --------------------------------------------------------------------------
# published tables, transcribed verbatim

# p1: four rows, diagonal outcomes only.  Keys are (sender1 row, sender2 row),
# values are alphabet indices per receiver particle.
_PUBLISHED_P1: dict[tuple, tuple[int, ...]] = {
    (0, 0): (0,),
    (1, 1): (1,),
    (2, 2): (2,),
    (3, 3): (3,),
}

# p2: sixteen rows, both senders seeing the same (g, h).  Values are the
# printed (u on first receiver particle, v on second) index pairs.
_PUBLISHED_P2: dict[tuple, tuple[int, ...]] = {
    ((0, 0), (0, 0)): (0, 0),
    ((1, 0), (1, 0)): (1, 1),
    ((2, 0), (2, 0)): (2, 2),
    ((3, 0), (3, 0)): (3, 3),
    ((0, 1), (0, 1)): (1, 4),
    ((1, 1), (1, 1)): (1, 5),
    ((2, 1), (2, 1)): (2, 6),
    ((3, 1), (3, 1)): (3, 7),
    ((0, 2), (0, 2)): (0, 2),
    ((1, 2), (1, 2)): (1, 3),
    ((2, 2), (2, 2)): (2, 0),
    ((3, 2), (3, 2)): (3, 1),
    ((0, 3), (0, 3)): (0, 6),
    ((1, 3), (1, 3)): (1, 7),
    ((2, 3), (2, 3)): (2, 4),
    ((3, 3), (3, 3)): (3, 5),
}

# p3: thirty-two printed rows, each covering a primary outcome and one
# alternate outcome that collapses the receiver pair identically.
_PUBLISHED_P3_ROWS: tuple[tuple[tuple, tuple, tuple[int, int]], ...] = (
    (((0, 0), (0, 0)), ((2, 2), (2, 2)), (0, 0)),
    (((0, 0), (0, 1)), ((2, 2), (2, 3)), (0, 4)),
    (((0, 0), (0, 2)), ((2, 2), (2, 0)), (0, 2)),
    (((0, 0), (0, 3)), ((2, 2), (2, 1)), (0, 6)),
    (((1, 0), (1, 0)), ((3, 2), (3, 2)), (1, 1)),
    (((1, 0), (1, 1)), ((3, 2), (3, 3)), (1, 5)),
    (((1, 0), (1, 2)), ((3, 2), (3, 0)), (1, 3)),
    (((1, 0), (1, 3)), ((3, 2), (3, 1)), (1, 7)),
    (((2, 0), (2, 0)), ((0, 2), (0, 2)), (2, 2)),
    (((2, 0), (2, 1)), ((0, 2), (0, 3)), (2, 6)),
    (((2, 0), (2, 2)), ((0, 2), (0, 0)), (2, 0)),
    (((2, 0), (2, 3)), ((0, 2), (0, 1)), (2, 4)),
    (((3, 0), (3, 0)), ((1, 2), (1, 2)), (3, 3)),
    (((3, 0), (3, 1)), ((1, 2), (1, 3)), (3, 7)),
    (((3, 0), (3, 2)), ((1, 2), (1, 0)), (3, 1)),
    (((3, 0), (3, 3)), ((1, 2), (1, 1)), (3, 5)),
    (((0, 1), (0, 0)), ((2, 3), (2, 2)), (4, 0)),
    (((0, 1), (0, 1)), ((2, 3), (2, 3)), (4, 4)),
    (((0, 1), (0, 2)), ((2, 3), (2, 0)), (4, 2)),
    (((0, 1), (0, 3)), ((2, 3), (2, 1)), (4, 6)),
    (((1, 1), (1, 0)), ((3, 3), (3, 2)), (5, 1)),
    (((1, 1), (1, 1)), ((3, 3), (3, 3)), (5, 5)),
    (((1, 1), (1, 2)), ((3, 3), (3, 0)), (5, 3)),
    (((1, 1), (1, 3)), ((3, 3), (3, 1)), (5, 7)),
    (((2, 1), (2, 0)), ((0, 3), (0, 2)), (6, 2)),
    (((2, 1), (2, 1)), ((0, 3), (0, 3)), (6, 6)),
    (((2, 1), (2, 2)), ((0, 3), (0, 0)), (6, 0)),
    (((2, 1), (2, 3)), ((0, 3), (0, 1)), (6, 4)),
    (((3, 1), (3, 0)), ((1, 3), (1, 2)), (7, 3)),
    (((3, 1), (3, 1)), ((1, 3), (1, 3)), (7, 7)),
    (((3, 1), (3, 2)), ((1, 3), (1, 0)), (7, 1)),
    (((3, 1), (3, 3)), ((1, 3), (1, 1)), (7, 5)),
)


def _published_p3() -> dict[tuple, tuple[int, ...]]:
    rules: dict[tuple, tuple[int, ...]] = {}
    for primary, alternate, ops in _PUBLISHED_P3_ROWS:
        rules[primary] = ops
        rules[alternate] = ops
    return rules


def outcome_key_str(key) -> str:
    """Canonical text form of an outcome key: 'l|m' or 'gh|mn'."""
    k1, k2 = key
    if isinstance(k1, tuple):
        return "".join(str(d) for d in k1) + "|" + "".join(str(d) for d in k2)
    return f"{k1}|{k2}"


@dataclass(frozen=True)
class CorrectionTable:
    """Outcome -> per-particle correction assignments for one protocol."""

    protocol: Protocol
    provenance: str  # "transcribed" or "derived"
    rules: dict[tuple, tuple[tuple[int, int], ...]]
    warnings: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.provenance not in ("transcribed", "derived"):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        receiver = set(build_channel(self.protocol).receiver_labels)
        for key, ops in self.rules.items():
            touched = {label for label, _ in ops}
            if not touched <= receiver:
                raise ValueError(f"rule for {key} touches non-receiver labels {touched - receiver}")

    def to_doc(self) -> dict:
        """JSON-ready form with canonical string keys."""
        return {
            "protocol": self.protocol.value,
            "provenance": self.provenance,
            "rules": {
                outcome_key_str(key): [[label, idx] for label, idx in ops]
                for key, ops in sorted(self.rules.items())
            },
            "warnings": list(self.warnings),
        }


def published_table(protocol: Protocol | str) -> CorrectionTable:
    """The transcribed published table for a protocol."""
    protocol = Protocol(protocol)
    spec = build_channel(protocol)
    raw = {
        Protocol.P1: _PUBLISHED_P1,
        Protocol.P2: _PUBLISHED_P2,
        Protocol.P3: _published_p3(),
    }[protocol]
    rules = {
        key: tuple(zip(spec.receiver_labels, ops))
        for key, ops in raw.items()
    }
    return CorrectionTable(protocol, "transcribed", rules)


@lru_cache(maxsize=4)
def _op_stack(arity: int) -> tuple[np.ndarray, tuple[tuple[int, ...], ...]]:
    """All alphabet assignments for an arity, lexicographic in indices.

    Returns the stacked operators, shape (8**arity, 4**arity, 4**arity),
    and the matching index tuples.
    """
    combos = tuple(itertools.product(range(len(CORRECTIONS)), repeat=arity))
    mats = []
    for combo in combos:
        m = np.ones((1, 1))
        for idx in combo:
            m = np.kron(m, CORRECTIONS[idx])
        mats.append(m)
    stack = np.array(mats, dtype=np.complex128)
    stack.setflags(write=False)
    return stack, combos


def assignment_fidelities(collapsed: PureState, target: PureState) -> np.ndarray:
    """Fidelity with the target after every alphabet assignment.

    Both states must be normalized and share the same register.  Entry k
    corresponds to the k-th lexicographic index combination.
    """
    if collapsed.labels != target.labels:
        raise ValueError(f"layout mismatch: {collapsed.labels} vs {target.labels}")
    stack, _ = _op_stack(collapsed.n_particles)
    overlaps = np.conj(target.amps) @ (stack @ collapsed.amps).T
    return np.abs(overlaps) ** 2


def search_correction(collapsed: PureState, target: PureState):
    """First alphabet assignment mapping collapsed onto target exactly.

    Iterates assignments in lexicographic index order and returns
    ``((label, index), ...)`` over the register's labels, or None when no
    assignment reaches fidelity 1 - SEARCH_TOL.  Fidelity is used, so a
    global sign flip still counts as exact.
    """
    if abs(collapsed.norm - 1.0) > 1e-9:
        raise ValueError("collapsed state must be normalized before searching")
    fids = assignment_fidelities(collapsed, target)
    hits = np.flatnonzero(fids >= 1.0 - SEARCH_TOL)
    if hits.size == 0:
        return None
    _, combos = _op_stack(collapsed.n_particles)
    combo = combos[int(hits[0])]
    return tuple(zip(collapsed.labels, combo))


def regenerate_table(protocol: Protocol | str, share1: ShareVector, share2: ShareVector) -> CorrectionTable:
    """Re-derive the correction table by exhaustive search.

    Every joint outcome with nonvanishing probability is collapsed and
    searched; a rule is included exactly when some assignment corrects the
    branch.  For generic shares the result is independent of the shares
    used, which callers can and do assert by regenerating with fresh
    draws.
    """
    protocol = Protocol(protocol)
    spec = build_channel(protocol)
    warnings = []
    for name, share in (("share1", share1), ("share2", share2)):
        if not is_generic(share):
            warnings.append(f"{name} is degenerate; derived rules may not transfer")
    target = _product_target(spec, share1, share2)
    rules = {}
    for key, residual, prob in joint_outcomes(spec, share1, share2):
        if prob <= PROB_FLOOR:
            continue
        ops = search_correction(residual.normalized(), target)
        if ops is not None:
            rules[key] = ops
    return CorrectionTable(protocol, "derived", rules, tuple(warnings))


def _product_target(spec: ChannelSpec, share1: ShareVector, share2: ShareVector) -> PureState:
    # Local import keeps engine -> corrections the only dependency direction.
    from .engine import target_state

    return target_state(share1, share2, spec.arity, spec.receiver_labels).state


def diff_tables(derived: CorrectionTable, transcribed: CorrectionTable) -> list[dict]:
    """Rows where the two tables disagree, as JSON-ready records."""
    if derived.protocol != transcribed.protocol:
        raise ValueError("tables belong to different protocols")
    out = []
    for key in sorted(set(derived.rules) | set(transcribed.rules)):
        d = derived.rules.get(key)
        t = transcribed.rules.get(key)
        if d != t:
            out.append(
                {
                    "outcome": outcome_key_str(key),
                    "derived": None if d is None else [[l, i] for l, i in d],
                    "transcribed": None if t is None else [[l, i] for l, i in t],
                }
            )
    return out
