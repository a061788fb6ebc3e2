"""Entangled channels and particle ownership for the three protocols.

Protocol p1 prepares one four-level particle for the receiver through a
single three-party channel; p2 prepares a two-particle state through two
such channels; p3 does the same job through three two-party channels.
Particle labels follow the fixed numbering below, with the leftmost label
the most significant digit:

    p1: (1,2,3)             sender1 measures 1, sender2 measures 2, receiver holds 3
    p2: (1,2,3)+(4,5,6)     sender1 measures (1,4), sender2 (2,5), receiver (3,6)
    p3: (1,2)+(3,4)+(5,6)   sender1 measures (1,3), sender2 (2,5), receiver (4,6)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .bases import MeasurementBasis, single_particle_basis, two_particle_basis
from .linalg import DIM, PureState, project, tensor_product

__all__ = [
    "Protocol",
    "ChannelSpec",
    "ghz_state",
    "epr_state",
    "build_channel",
    "sender_bases",
    "joint_outcomes",
]

SENDER_1 = "sender1"
SENDER_2 = "sender2"
RECEIVER = "receiver"


class Protocol(str, Enum):
    P1 = "p1"
    P2 = "p2"
    P3 = "p3"


def ghz_state(labels) -> PureState:
    """(1/2) sum_j |jjj> on three labelled particles."""
    labels = tuple(labels)
    if len(labels) != 3:
        raise ValueError(f"three labels required, got {labels}")
    amps = np.zeros(DIM ** 3)
    for j in range(DIM):
        amps[j * DIM * DIM + j * DIM + j] = 0.5
    return PureState(labels, amps)


def epr_state(labels) -> PureState:
    """(1/2) sum_j |jj> on two labelled particles."""
    labels = tuple(labels)
    if len(labels) != 2:
        raise ValueError(f"two labels required, got {labels}")
    amps = np.zeros(DIM * DIM)
    for j in range(DIM):
        amps[j * DIM + j] = 0.5
    return PureState(labels, amps)


@dataclass(frozen=True)
class ChannelSpec:
    """Channel state plus who measures what and who keeps what."""

    protocol: Protocol
    state: PureState
    sender1_labels: tuple[int, ...]
    sender2_labels: tuple[int, ...]
    receiver_labels: tuple[int, ...]

    @property
    def ownership(self) -> dict[int, str]:
        owners = {}
        for l in self.sender1_labels:
            owners[l] = SENDER_1
        for l in self.sender2_labels:
            owners[l] = SENDER_2
        for l in self.receiver_labels:
            owners[l] = RECEIVER
        return owners

    @property
    def arity(self) -> int:
        """Particles per sender measurement (equals the receiver count)."""
        return len(self.receiver_labels)


def build_channel(protocol: Protocol | str) -> ChannelSpec:
    protocol = Protocol(protocol)
    if protocol is Protocol.P1:
        state = ghz_state((1, 2, 3))
        return ChannelSpec(protocol, state, (1,), (2,), (3,))
    if protocol is Protocol.P2:
        state = tensor_product(ghz_state((1, 2, 3)), ghz_state((4, 5, 6)))
        return ChannelSpec(protocol, state, (1, 4), (2, 5), (3, 6))
    state = tensor_product(epr_state((1, 2)), epr_state((3, 4)), epr_state((5, 6)))
    return ChannelSpec(protocol, state, (1, 3), (2, 5), (4, 6))


def sender_bases(spec: ChannelSpec, share1, share2) -> tuple[MeasurementBasis, MeasurementBasis]:
    """Measurement bases both senders announce for this channel."""
    if spec.arity == 1:
        return (
            single_particle_basis(share1, spec.sender1_labels[0]),
            single_particle_basis(share2, spec.sender2_labels[0]),
        )
    return (
        two_particle_basis(share1, spec.sender1_labels),
        two_particle_basis(share2, spec.sender2_labels),
    )


def joint_outcomes(spec: ChannelSpec, share1, share2):
    """Iterate all joint measurement outcomes in lexicographic key order.

    Yields ``((key1, key2), residual, probability)`` where the residual is
    the unnormalized state left on the receiver's particles after both
    projections and the probability is its squared norm.  Projection
    order is sender1 then sender2; the projectors act on disjoint
    particles, so the order cannot matter.
    """
    basis1, basis2 = sender_bases(spec, share1, share2)
    for key1, vec1 in zip(basis1.keys, basis1.vectors):
        partial, _ = project(spec.state, basis1.labels, vec1)
        for key2, vec2 in zip(basis2.keys, basis2.vectors):
            residual, prob = project(partial, basis2.labels, vec2)
            yield (key1, key2), residual, prob
