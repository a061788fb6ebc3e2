"""Sender-side measurement bases built from a share of the target state.

Each sender holds four real coefficients (a "share").  From those the
sender builds an orthonormal measurement basis: four vectors for a single
measured particle, sixteen for a measured pair.  The constructions are
exact sign/permutation rearrangements of the share components, so the
Gram matrix is the identity up to floating point roundoff whenever the
share has unit norm.
"""

from __future__ import annotations

import re

import numpy as np

from .linalg import DIM, PureState

__all__ = [
    "ShareVector",
    "MeasurementBasis",
    "parse_share_text",
    "sign_pattern",
    "single_particle_basis",
    "two_particle_basis",
    "gram",
    "is_generic",
    "random_generic_share",
]

# |sum of squares - 1| must stay below this for a share to be accepted.
UNIT_TOLERANCE = 1e-9

# Minimum gap between component magnitudes for a share to count as generic.
GENERIC_GAP = 1e-3


class ShareVector:
    """One sender's four real coefficients, unit norm enforced.

    Input within UNIT_TOLERANCE of unit norm is renormalized exactly so
    that downstream constructions are clean; anything further away is
    rejected.
    """

    __slots__ = ("components", "sender_id")

    def __init__(self, components, sender_id: int = 1) -> None:
        v = np.array(components, dtype=np.float64).reshape(-1)
        if v.size != DIM:
            raise ValueError(f"share needs exactly {DIM} components, got {v.size}")
        if not np.all(np.isfinite(v)):
            raise ValueError("share components must be finite")
        ss = float(v @ v)
        if abs(ss - 1.0) > UNIT_TOLERANCE:
            raise ValueError(f"share not normalized: sum of squares {ss!r}")
        if sender_id not in (1, 2):
            raise ValueError(f"sender_id must be 1 or 2, got {sender_id}")
        v = v / np.sqrt(ss)
        v.setflags(write=False)
        self.components = v
        self.sender_id = sender_id

    def __repr__(self) -> str:
        vals = ", ".join(f"{x:.6g}" for x in self.components)
        return f"ShareVector(({vals}), sender_id={self.sender_id})"


def parse_share_text(text: str, sender_id: int = 1) -> ShareVector:
    """Parse four decimal numbers, comma or whitespace separated."""
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    if len(parts) != DIM:
        raise ValueError(f"share text needs exactly {DIM} numbers, got {len(parts)}")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise ValueError(f"could not parse share text {text!r}") from None
    return ShareVector(values, sender_id)


def sign_pattern(components) -> np.ndarray:
    """4x4 signed rearrangement matrix underlying both basis arities.

    Row r is the coefficient pattern of the r-th basis vector.  Every
    entry is plus or minus one share component, and each component shows
    up exactly once per row and per column, so the matrix is orthogonal
    for any unit-norm input.
    """
    s = np.asarray(components, dtype=np.float64).reshape(-1)
    if s.size != DIM:
        raise ValueError(f"expected {DIM} components, got {s.size}")
    s0, s1, s2, s3 = s
    return np.array(
        [
            [s0, s1, s2, s3],
            [s1, -s0, s3, -s2],
            [-s2, s3, s0, -s1],
            [-s3, -s2, s1, s0],
        ]
    )


class MeasurementBasis:
    """Ordered set of measurement vectors over one or two particles."""

    __slots__ = ("labels", "keys", "vectors")

    def __init__(self, labels, keys, vectors) -> None:
        self.labels = tuple(labels)
        self.keys = tuple(keys)
        self.vectors = tuple(vectors)
        if len(self.keys) != len(self.vectors):
            raise ValueError("one key per vector required")
        for v in self.vectors:
            if v.labels != self.labels:
                raise ValueError(f"vector register {v.labels} != basis register {self.labels}")

    @property
    def arity(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.vectors)

    def __repr__(self) -> str:
        return f"MeasurementBasis(labels={self.labels}, size={len(self)})"


def _components_of(share) -> np.ndarray:
    # ShareVector goes through the normalization gate; a raw 4-sequence is
    # taken verbatim for callers that manage normalization themselves.
    if isinstance(share, ShareVector):
        return share.components
    return np.asarray(share, dtype=np.float64).reshape(-1)


def single_particle_basis(share, label: int) -> MeasurementBasis:
    """Four-vector basis on one particle, keys 0..3."""
    m = sign_pattern(_components_of(share))
    vectors = [PureState((label,), m[r]) for r in range(DIM)]
    return MeasurementBasis((label,), tuple(range(DIM)), vectors)


def two_particle_basis(share, labels) -> MeasurementBasis:
    """Sixteen-vector basis on a particle pair, keys (g, h) lexicographic.

    Vector (g, h) carries sign-pattern row g over the kets |t, t+h mod 4>,
    i.e. h fixes the digit offset between the two measured particles and g
    picks the coefficient rearrangement.
    """
    labels = tuple(labels)
    if len(labels) != 2:
        raise ValueError(f"need exactly two labels, got {labels}")
    m = sign_pattern(_components_of(share))
    keys = []
    vectors = []
    for g in range(DIM):
        for h in range(DIM):
            amps = np.zeros(DIM * DIM)
            for t in range(DIM):
                amps[t * DIM + (t + h) % DIM] = m[g, t]
            keys.append((g, h))
            vectors.append(PureState(labels, amps))
    return MeasurementBasis(labels, tuple(keys), vectors)


def gram(basis: MeasurementBasis) -> np.ndarray:
    """Matrix of pairwise inner products, row order = basis order."""
    v = np.array([vec.amps for vec in basis.vectors])
    return v.conj() @ v.T


def is_generic(share) -> bool:
    """True when all component magnitudes are nonzero and pairwise distinct.

    Degenerate shares (ties or zeros among |components|) make the
    brute-force correction search ambiguous, so table derivation insists
    on generic ones.
    """
    a = np.sort(np.abs(_components_of(share)))
    if a[0] <= GENERIC_GAP:
        return False
    return bool(np.min(np.diff(a)) > GENERIC_GAP)


def random_generic_share(rng: np.random.Generator, sender_id: int = 1) -> ShareVector:
    """Draw unit-norm shares until one passes the genericity gate."""
    while True:
        v = rng.standard_normal(DIM)
        v /= np.linalg.norm(v)
        if is_generic(v):
            return ShareVector(v, sender_id)
