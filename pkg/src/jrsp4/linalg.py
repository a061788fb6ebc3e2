"""Exact dense linear algebra for small registers of four-level particles.

States live on named particles rather than positional wires: a register
layout is a tuple of distinct integer labels, and the leftmost label is
the most significant base-4 digit of the amplitude index.  Everything is
kept as explicit complex128 vectors; no sparsity, no approximation.
"""

from __future__ import annotations

import numpy as np

DIM = 4

# Amplitudes below this are treated as an exactly-zero branch.
ZERO_NORM = 1e-15

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
]


class PureState:
    """Dense state vector over a labelled register of four-level particles.

    Parameters
    ----------
    labels : iterable of int
        Distinct particle labels, most significant digit first.
    amps : array_like
        ``DIM ** len(labels)`` complex amplitudes.
    """

    __slots__ = ("labels", "amps")

    def __init__(self, labels, amps) -> None:
        labels = tuple(int(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate particle labels: {labels}")
        amps = np.array(amps, dtype=np.complex128).reshape(-1)
        if amps.size != DIM ** len(labels):
            raise ValueError(
                f"got {amps.size} amplitudes for {len(labels)} particles, "
                f"expected {DIM ** len(labels)}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        amps.setflags(write=False)
        self.labels = labels
        self.amps = amps

    @property
    def n_particles(self) -> int:
        return len(self.labels)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def axis(self, label: int) -> int:
        """Tensor axis of a particle label."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"label {label} not in register {self.labels}") from None

    def tensor_view(self) -> np.ndarray:
        """Amplitudes reshaped to one axis of length DIM per particle."""
        return self.amps.reshape((DIM,) * self.n_particles)

    def normalized(self) -> "PureState":
        n = self.norm
        if n < ZERO_NORM:
            raise ValueError("cannot normalize a zero state")
        return PureState(self.labels, self.amps / n)

    def __repr__(self) -> str:
        return f"PureState(labels={self.labels}, norm={self.norm:.6g})"


class DensityMatrix:
    """Reduced density operator on a labelled register.

    Constructed from normalized pure states only, so the usual defining
    properties are enforced outright: Hermitian to 1e-12, unit trace to
    1e-12, eigenvalues above -1e-10.
    """

    __slots__ = ("labels", "matrix")

    def __init__(self, labels, matrix) -> None:
        labels = tuple(int(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate particle labels: {labels}")
        matrix = np.array(matrix, dtype=np.complex128)
        dim = DIM ** len(labels)
        if matrix.shape != (dim, dim):
            raise ValueError(f"matrix shape {matrix.shape} does not match labels {labels}")
        if not np.allclose(matrix, matrix.conj().T, atol=1e-12, rtol=0.0):
            raise ValueError("density matrix must be Hermitian")
        tr = complex(np.trace(matrix))
        if abs(tr - 1.0) > 1e-12:
            raise ValueError(f"density matrix trace {tr} is not 1")
        if float(np.linalg.eigvalsh(matrix).min()) < -1e-10:
            raise ValueError("density matrix has a negative eigenvalue")
        matrix.setflags(write=False)
        self.labels = labels
        self.matrix = matrix

    def __repr__(self) -> str:
        return f"DensityMatrix(labels={self.labels})"


def basis_state(labels, digits) -> PureState:
    """Computational basis vector |digits> on the given register."""
    labels = tuple(labels)
    digits = tuple(int(d) for d in digits)
    if len(digits) != len(labels):
        raise ValueError("one digit per particle required")
    if any(d < 0 or d >= DIM for d in digits):
        raise ValueError(f"digits must lie in 0..{DIM - 1}")
    amps = np.zeros(DIM ** len(labels), dtype=np.complex128)
    amps[int(np.ravel_multi_index(digits, (DIM,) * len(labels)))] = 1.0
    return PureState(labels, amps)


def tensor_product(*states: PureState) -> PureState:
    """Join registers; labels concatenate and must stay disjoint."""
    if not states:
        raise ValueError("tensor_product needs at least one state")
    labels: tuple[int, ...] = ()
    amps = np.ones(1, dtype=np.complex128)
    for s in states:
        if set(labels) & set(s.labels):
            raise ValueError(f"label collision joining {labels} with {s.labels}")
        labels = labels + s.labels
        amps = np.kron(amps, s.amps)
    return PureState(labels, amps)


def apply_local(op, label: int, state: PureState) -> PureState:
    """Apply a 4x4 operator to one particle, identity elsewhere."""
    op = np.asarray(op, dtype=np.complex128)
    if op.shape != (DIM, DIM):
        raise ValueError(f"operator shape {op.shape}, expected ({DIM}, {DIM})")
    ax = state.axis(label)
    out = np.tensordot(op, state.tensor_view(), axes=([1], [ax]))
    out = np.moveaxis(out, 0, ax)
    return PureState(state.labels, out.reshape(-1))


def project(state: PureState, measured_labels, basis_vector: PureState):
    """Project a subset of particles onto one measurement basis vector.

    Parameters
    ----------
    state : PureState
    measured_labels : iterable of int
        Which particles are measured.  Must equal the basis vector's
        register as a set.
    basis_vector : PureState
        Unit vector on the measured particles.

    Returns
    -------
    (residual, probability)
        Unnormalized residual on the remaining particles (in their
        original order) and the squared norm of that residual.  Chaining
        calls therefore accumulates the joint outcome probability.
    """
    measured = tuple(int(x) for x in measured_labels)
    if sorted(measured) != sorted(basis_vector.labels):
        raise ValueError(
            f"basis vector register {basis_vector.labels} must cover exactly "
            f"the measured labels {measured}"
        )
    axes = tuple(state.axis(l) for l in basis_vector.labels)
    bra = basis_vector.amps.conj().reshape((DIM,) * len(measured))
    residual = np.tensordot(bra, state.tensor_view(), axes=(tuple(range(len(measured))), axes))
    remaining = tuple(l for l in state.labels if l not in set(measured))
    out = PureState(remaining, residual.reshape(-1))
    return out, float(np.vdot(out.amps, out.amps).real)


def inner(a: PureState, b: PureState) -> complex:
    """<a|b>, conjugate linear in the first argument.

    Defined only for identical register layouts (same labels, same order).
    """
    if a.labels != b.labels:
        raise ValueError(f"layout mismatch: {a.labels} vs {b.labels}")
    return complex(np.vdot(a.amps, b.amps))


def fidelity(a: PureState, b: PureState) -> float:
    """|<a|b>|^2 for unit-norm states."""
    return abs(inner(a, b)) ** 2


def reduced_density(state: PureState, keep_labels) -> DensityMatrix:
    """Partial trace of |state><state| down to the kept particles.

    The input must be normalized; row/column order of the result follows
    ``keep_labels``.
    """
    keep = tuple(int(x) for x in keep_labels)
    axs = tuple(state.axis(l) for l in keep)
    rest = tuple(i for i in range(state.n_particles) if i not in axs)
    m = state.tensor_view().transpose(axs + rest).reshape(DIM ** len(keep), -1)
    return DensityMatrix(keep, m @ m.conj().T)
