"""Brute-force verification of the published protocol algebra.

Everything the published protocol description states in closed form is
transcribed here as data (branch coefficient patterns, outcome groupings,
correction tables) and then re-derived from scratch by direct projection
of the channel states.  Wherever transcription and derivation disagree, a
Discrepancy is emitted; the stable set of such locations is pinned in
KNOWN_DISCREPANCY_LOCATIONS and shipped with the package.  Derived values
always come from the computation, never from hand edits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .bases import gram, random_generic_share, sign_pattern, single_particle_basis, two_particle_basis
from .channels import Protocol, build_channel, joint_outcomes, sender_bases
from .corrections import diff_tables, outcome_key_str, published_table, regenerate_table
from .engine import RunConfig, enumerate_outcomes, target_state
from .linalg import DIM, fidelity, project, reduced_density

__all__ = [
    "Discrepancy",
    "KNOWN_DISCREPANCY_LOCATIONS",
    "verify_decomposition",
    "verify_group_states",
    "verify_tables",
    "full_audit",
]

MATCH_TOL = 1e-10

# Locations the audit reproduces on every generic share draw.  These are
# the published statements our derivation contradicts; they stay listed
# here (and in docs/discrepancies.json, generated from an audit run)
# rather than being silently corrected.
KNOWN_DISCREPANCY_LOCATIONS: frozenset[str] = frozenset(
    {
        "p1.expansion[0|1].component[0]",
        "p2.table[01|01]",
        "p3.groups.line[p=3].pattern",
        "p3.groups.line[p=4].shift",
        "p3.groups.line[p=5].shift",
        "p3.groups.line[p=6].shift",
        "p3.groups.line[p=7].shift",
    }
)


@dataclass(frozen=True)
class Discrepancy:
    """One disagreement between the transcription and the derivation."""

    location: str
    stated: str
    derived: str
    severity: str  # "typo-suspected" for stable rows, "unexpected" otherwise

    def to_doc(self) -> dict:
        return {
            "location": self.location,
            "stated": self.stated,
            "derived": self.derived,
            "severity": self.severity,
        }


# --------------------------------------------------------------------------
# transcribed branch patterns
#
# A diagonal success line is a permutation: component t of the branch is
# the share product at _LINE[t].  An explicit coefficient is written as
# (sign, (sender, index), (sender, index)).

_P1_LINES: dict[int, tuple[int, ...]] = {
    0: (0, 1, 2, 3),
    1: (1, 0, 3, 2),
    2: (2, 3, 0, 1),
    3: (3, 2, 1, 0),
}

# The one off-diagonal branch of the single-particle expansion that is
# printed in full, outcome (0, 1).
_P1_OFFDIAG_PRINTED = (
    (1, (1, 0), (1, 1)),
    (-1, (1, 1), (2, 0)),
    (1, (1, 2), (2, 3)),
    (-1, (1, 3), (2, 2)),
)

_P2_LINES: dict[tuple[int, int], tuple[int, ...]] = {
    (0, 0): (0, 1, 2, 3),
    (1, 0): (1, 0, 3, 2),
    (2, 0): (2, 3, 0, 1),
    (3, 0): (3, 2, 1, 0),
    (0, 1): (0, 1, 2, 3),
    (1, 1): (1, 0, 3, 2),
    (2, 1): (2, 3, 0, 1),
    (3, 1): (3, 2, 1, 0),
    (0, 2): (0, 1, 2, 3),
    (1, 2): (1, 0, 3, 2),
    (2, 2): (2, 3, 0, 1),
    (3, 2): (3, 2, 1, 0),
    (0, 3): (0, 1, 2, 3),
    (1, 3): (1, 0, 3, 2),
    (2, 3): (2, 3, 0, 1),
    (3, 3): (3, 2, 1, 0),
}

# Printed off-diagonal example branch of the two-channel expansion,
# outcome ((0, 0), (1, 0)), diagonal kets |tt>.
_P2_OFFDIAG_PRINTED = (
    (1, (1, 0), (2, 1)),
    (-1, (2, 0), (1, 1)),
    (1, (1, 2), (2, 3)),
    (-1, (2, 2), (1, 3)),
)

# Printed off-diagonal example branch of the three-pair expansion,
# same outcome key, receiver kets |tt>.
_P3_OFFDIAG_PRINTED = (
    (1, (1, 0), (2, 1)),
    (-1, (1, 1), (2, 0)),
    (1, (1, 2), (2, 3)),
    (-1, (1, 3), (2, 2)),
)

# --------------------------------------------------------------------------
# transcribed outcome groups for the three-pair protocol
#
# Each printed group covers two joint outcomes that collapse the receiver
# pair identically.  Keys are ((g, h), (m, n)) for sender1 and sender2.

_GROUP_MEMBERS: dict[tuple[int, int], tuple[tuple, tuple]] = {
    (0, 0): (((0, 0), (0, 0)), ((2, 2), (2, 2))),
    (0, 1): (((0, 0), (0, 1)), ((2, 2), (2, 3))),
    (0, 2): (((0, 0), (0, 2)), ((2, 2), (2, 0))),
    (0, 3): (((0, 0), (0, 3)), ((2, 2), (2, 1))),
    (1, 0): (((1, 0), (1, 0)), ((3, 2), (3, 2))),
    (1, 1): (((1, 0), (1, 1)), ((3, 2), (3, 3))),
    (1, 2): (((1, 0), (1, 2)), ((3, 2), (3, 0))),
    (1, 3): (((1, 0), (1, 3)), ((3, 2), (3, 1))),
    (2, 0): (((2, 0), (2, 0)), ((0, 2), (0, 2))),
    (2, 1): (((2, 0), (2, 1)), ((0, 2), (0, 3))),
    (2, 2): (((2, 0), (2, 2)), ((0, 2), (0, 0))),
    (2, 3): (((2, 0), (2, 3)), ((0, 2), (0, 1))),
    (3, 0): (((3, 0), (3, 0)), ((1, 2), (1, 2))),
    (3, 1): (((3, 0), (3, 1)), ((1, 2), (1, 3))),
    (3, 2): (((3, 0), (3, 2)), ((1, 2), (1, 0))),
    (3, 3): (((3, 0), (3, 3)), ((1, 2), (1, 1))),
    (4, 0): (((0, 1), (0, 0)), ((2, 3), (2, 2))),
    (4, 1): (((0, 1), (0, 1)), ((2, 3), (2, 3))),
    (4, 2): (((0, 1), (0, 2)), ((2, 3), (2, 0))),
    (4, 3): (((0, 1), (0, 3)), ((2, 3), (2, 1))),
    (5, 0): (((1, 1), (1, 0)), ((3, 3), (3, 2))),
    (5, 1): (((1, 1), (1, 1)), ((3, 3), (3, 3))),
    (5, 2): (((1, 1), (1, 2)), ((3, 3), (3, 0))),
    (5, 3): (((1, 1), (1, 3)), ((3, 3), (3, 1))),
    (6, 0): (((2, 1), (2, 0)), ((0, 3), (0, 2))),
    (6, 1): (((2, 1), (2, 1)), ((0, 3), (0, 3))),
    (6, 2): (((2, 1), (2, 2)), ((0, 3), (0, 0))),
    (6, 3): (((2, 1), (2, 3)), ((0, 3), (0, 1))),
    (7, 0): (((3, 1), (3, 0)), ((1, 3), (1, 2))),
    (7, 1): (((3, 1), (3, 1)), ((1, 3), (1, 3))),
    (7, 2): (((3, 1), (3, 2)), ((1, 3), (1, 0))),
    (7, 3): (((3, 1), (3, 3)), ((1, 3), (1, 1))),
}

# Printed collapse patterns per group line p, as (coefficient index,
# first lambda index) pairs over lambda kets |i, i+shift mod 4>, with the
# printed shift equal to the group column index j.  The p=3 line is
# transcribed exactly as printed, including its repeated lambda index.
_GROUP_LINES_PRINTED: dict[int, tuple[tuple[int, int], ...]] = {
    0: ((0, 0), (1, 1), (2, 2), (3, 3)),
    1: ((1, 0), (0, 1), (3, 2), (2, 3)),
    2: ((2, 0), (3, 1), (0, 2), (1, 3)),
    3: ((3, 0), (2, 2), (1, 2), (0, 3)),
    4: ((0, 1), (1, 2), (2, 3), (3, 0)),
    5: ((1, 1), (0, 2), (3, 3), (2, 0)),
    6: ((2, 1), (3, 2), (0, 3), (1, 0)),
    7: ((3, 1), (2, 2), (1, 3), (0, 0)),
}


# --------------------------------------------------------------------------
# helpers

def _eval_printed(coeffs, share1, share2) -> np.ndarray:
    comp = {1: share1.components, 2: share2.components}
    return np.array(
        [sign * comp[a_s][a_i] * comp[b_s][b_i] for sign, (a_s, a_i), (b_s, b_i) in coeffs]
    )


def _match_product(value: float, share1, share2) -> str:
    """Express a residual component as a signed share product, by search.

    Candidates are sign * x[i] * y[j] over both shares; the first match in
    canonical order is reported.  Falls back to the bare number if nothing
    matches, which only happens for degenerate shares.
    """
    comp = {"s1": share1.components, "s2": share2.components}
    seen = set()
    for (an, bn) in (("s1", "s1"), ("s1", "s2"), ("s2", "s2")):
        for i, j in itertools.product(range(DIM), repeat=2):
            key = frozenset(((an, i), (bn, j)))
            if key in seen:
                continue
            seen.add(key)
            prod = comp[an][i] * comp[bn][j]
            for sign, tag in ((1.0, ""), (-1.0, "-")):
                if abs(value - sign * prod) < MATCH_TOL:
                    return f"{tag}{an}[{i}]*{bn}[{j}]"
    return f"{value!r}"


def _perm_str(perm) -> str:
    return "(" + ", ".join(f"t[{p}]" for p in perm) + ")"


def _pairs_str(pairs) -> str:
    return ", ".join(f"T[{c}]@{i}" for c, i in pairs)


def _ops_str(ops) -> str:
    if ops is None:
        return "no rule"
    return ";".join(f"U{idx}@{label}" for label, idx in ops)


def _residual_map(protocol: Protocol, share1, share2) -> dict:
    return {
        key: (residual, prob)
        for key, residual, prob in joint_outcomes(build_channel(protocol), share1, share2)
    }


# --------------------------------------------------------------------------
# verifications

def verify_decomposition(protocol: Protocol | str, share1, share2) -> list[Discrepancy]:
    """Check every printed branch of a channel expansion by projection.

    Diagonal success lines are checked for all outcomes; the one fully
    printed off-diagonal branch of each expansion is checked coefficient
    by coefficient.  Components that disagree beyond MATCH_TOL are
    reported with the printed product next to the derived one.
    """
    protocol = Protocol(protocol)
    spec = build_channel(protocol)
    residuals = _residual_map(protocol, share1, share2)
    raw = share1.components * share2.components
    discs: list[Discrepancy] = []

    if protocol is Protocol.P1:
        prefactor = 0.5
        for l, perm in _P1_LINES.items():
            got = residuals[(l, l)][0].amps
            want = prefactor * raw[list(perm)]
            if np.max(np.abs(got - want)) > MATCH_TOL:
                discs.append(
                    Discrepancy(
                        f"p1.expansion[{l}|{l}]",
                        f"coefficients {_perm_str(perm)}",
                        "projection disagrees with the printed line",
                        "unexpected",
                    )
                )
        printed = prefactor * _eval_printed(_P1_OFFDIAG_PRINTED, share1, share2)
        got = residuals[(0, 1)][0].amps
        for t in range(DIM):
            if abs(got[t] - printed[t]) > MATCH_TOL:
                sign, (a_s, a_i), (b_s, b_i) = _P1_OFFDIAG_PRINTED[t]
                stated = f"{'-' if sign < 0 else ''}s{a_s}[{a_i}]*s{b_s}[{b_i}]"
                derived = _match_product(float(got[t].real) / prefactor, share1, share2)
                discs.append(
                    Discrepancy(
                        f"p1.expansion[0|1].component[{t}]",
                        stated,
                        derived,
                        "typo-suspected",
                    )
                )
        return discs

    if protocol is Protocol.P2:
        prefactor = 0.25
        for (g, h), perm in _P2_LINES.items():
            got = residuals[((g, h), (g, h))][0].amps.reshape(DIM, DIM)
            want = np.zeros((DIM, DIM))
            for t in range(DIM):
                want[t, (t + h) % DIM] = prefactor * raw[perm[t]]
            if np.max(np.abs(got - want)) > MATCH_TOL:
                discs.append(
                    Discrepancy(
                        f"p2.expansion[{g}{h}|{g}{h}]",
                        f"coefficients {_perm_str(perm)} on kets |t,t+{h}>",
                        "projection disagrees with the printed line",
                        "unexpected",
                    )
                )
        discs += _check_offdiag_diagonal_kets(
            protocol, residuals[((0, 0), (1, 0))][0], prefactor,
            _P2_OFFDIAG_PRINTED, share1, share2,
        )
        return discs

    prefactor = 0.125
    discs += _check_offdiag_diagonal_kets(
        protocol, residuals[((0, 0), (1, 0))][0], prefactor,
        _P3_OFFDIAG_PRINTED, share1, share2,
    )
    return discs


def _check_offdiag_diagonal_kets(protocol, residual, prefactor, printed_coeffs, share1, share2):
    printed = prefactor * _eval_printed(printed_coeffs, share1, share2)
    got = residual.amps.reshape(DIM, DIM)
    discs = []
    off_support = np.max(np.abs(got - np.diag(np.diag(got))))
    if off_support > MATCH_TOL:
        discs.append(
            Discrepancy(
                f"{protocol.value}.expansion[00|10]",
                "branch supported on diagonal kets |tt>",
                "projection has off-diagonal support",
                "unexpected",
            )
        )
        return discs
    for t in range(DIM):
        if abs(got[t, t] - printed[t]) > MATCH_TOL:
            sign, (a_s, a_i), (b_s, b_i) = printed_coeffs[t]
            stated = f"{'-' if sign < 0 else ''}s{a_s}[{a_i}]*s{b_s}[{b_i}]"
            derived = _match_product(float(got[t, t].real) / prefactor, share1, share2)
            discs.append(
                Discrepancy(
                    f"{protocol.value}.expansion[00|10].component[{t}]",
                    stated,
                    derived,
                    "typo-suspected",
                )
            )
    return discs


def verify_group_states(share1, share2) -> list[Discrepancy]:
    """Check the printed outcome groups of the three-pair protocol.

    Confirms that each group's two member outcomes collapse the receiver
    pair onto the same state, extracts the collapsed state's lambda
    pattern (coefficient permutation plus digit shift), and compares both
    against the printed group line.  Mismatches that are uniform across a
    line are reported once per line.
    """
    protocol = Protocol.P3
    spec = build_channel(protocol)
    residuals = _residual_map(protocol, share1, share2)
    tgt = target_state(share1, share2, spec.arity, spec.receiver_labels)
    coeffs = np.array([tgt.state.amps[t * DIM + t].real for t in range(DIM)])

    discs: list[Discrepancy] = []
    member_keys = set()
    derived_pairs_by_p: dict[int, set] = {}
    shifts_by_p: dict[int, dict[int, int]] = {}

    for (p, j), (key_a, key_b) in sorted(_GROUP_MEMBERS.items()):
        member_keys.update((key_a, key_b))
        res_a, prob_a = residuals[key_a]
        res_b, prob_b = residuals[key_b]
        if abs(prob_a - prob_b) > MATCH_TOL or fidelity(res_a.normalized(), res_b.normalized()) < 1.0 - MATCH_TOL:
            discs.append(
                Discrepancy(
                    f"p3.groups[p={p},j={j}].members",
                    "both member outcomes collapse the receiver identically",
                    "member collapses differ",
                    "unexpected",
                )
            )
            continue
        state = res_a.normalized().amps.reshape(DIM, DIM)
        support = np.argwhere(np.abs(state) > 1e-8)
        shifts = {(int(k) - int(i)) % DIM for i, k in support}
        if len(shifts) != 1:
            discs.append(
                Discrepancy(
                    f"p3.groups[p={p},j={j}].support",
                    "collapse supported on one lambda family |i,i+shift>",
                    f"support spans shifts {sorted(shifts)}",
                    "unexpected",
                )
            )
            continue
        shift = shifts.pop()
        q = np.array([state[i, (i + shift) % DIM].real for i in range(DIM)])
        pairs, pattern_ok = _match_lambda_pattern(q, coeffs)
        if not pattern_ok:
            discs.append(
                Discrepancy(
                    f"p3.groups[p={p},j={j}].pattern",
                    "collapse is a signed permutation of the target coefficients",
                    "no consistent permutation found",
                    "unexpected",
                )
            )
            continue
        derived_pairs_by_p.setdefault(p, set()).add(pairs)
        shifts_by_p.setdefault(p, {})[j] = shift

    if member_keys != set(published_table(protocol).rules):
        discs.append(
            Discrepancy(
                "p3.groups.coverage",
                "groups cover exactly the table's success outcomes",
                "coverage mismatch",
                "unexpected",
            )
        )

    for p in sorted(derived_pairs_by_p):
        derived_sets = derived_pairs_by_p[p]
        if len(derived_sets) != 1:
            discs.append(
                Discrepancy(
                    f"p3.groups.line[p={p}].pattern",
                    "one coefficient pattern per line",
                    f"patterns vary across the line: {sorted(derived_sets)}",
                    "unexpected",
                )
            )
            continue
        derived_pairs = next(iter(derived_sets))
        printed_pairs = tuple(sorted(_GROUP_LINES_PRINTED[p]))
        if derived_pairs != printed_pairs:
            discs.append(
                Discrepancy(
                    f"p3.groups.line[p={p}].pattern",
                    _pairs_str(_GROUP_LINES_PRINTED[p]),
                    _pairs_str(sorted(derived_pairs, key=lambda ci: ci[1])),
                    "typo-suspected",
                )
            )
        shifts = shifts_by_p.get(p, {})
        if any(shifts[j] != j for j in shifts):
            observed = [shifts[j] for j in sorted(shifts)]
            discs.append(
                Discrepancy(
                    f"p3.groups.line[p={p}].shift",
                    "lambda shift equals the group column index j",
                    f"lambda shift observed {observed} for j={sorted(shifts)}",
                    "typo-suspected",
                )
            )
    return discs


def _match_lambda_pattern(q: np.ndarray, coeffs: np.ndarray):
    """Match collapse coefficients to +/- a permutation of the target's.

    Returns (pairs, ok) with pairs the sorted (coefficient index, lambda
    first index) assignment.  Requires a uniform global sign.
    """
    pairs = []
    signs = []
    for i in range(DIM):
        hits = np.flatnonzero(np.abs(np.abs(coeffs) - abs(q[i])) < 1e-8)
        if hits.size != 1:
            return (), False
        k = int(hits[0])
        pairs.append((k, i))
        signs.append(np.sign(q[i]) * np.sign(coeffs[k]))
    if len({s for s in signs}) != 1:
        return (), False
    return tuple(sorted(pairs)), True


def verify_tables(protocol: Protocol | str, share1, share2) -> list[Discrepancy]:
    """Diff the re-derived correction table against the transcription."""
    protocol = Protocol(protocol)
    derived = regenerate_table(protocol, share1, share2)
    transcribed = published_table(protocol)
    discs = []
    for row in diff_tables(derived, transcribed):
        ops = lambda v: None if v is None else tuple((l, i) for l, i in v)
        discs.append(
            Discrepancy(
                f"{protocol.value}.table[{row['outcome']}]",
                _ops_str(ops(row["transcribed"])),
                _ops_str(ops(row["derived"])),
                "typo-suspected",
            )
        )
    return discs


# --------------------------------------------------------------------------
# full audit

def _structural_checks(share1, share2) -> list[dict]:
    """Per-draw checks that have a pass/fail answer rather than a diff."""
    checks = []

    for sender, share in (("sender1", share1), ("sender2", share2)):
        for arity, basis in (
            (1, single_particle_basis(share, 1)),
            (2, two_particle_basis(share, (1, 2))),
        ):
            g = gram(basis)
            err = float(np.max(np.abs(g - np.eye(len(basis)))))
            checks.append(
                {
                    "name": f"orthonormality[{sender},arity={arity}]",
                    "passed": err <= 1e-12,
                    "detail": f"max |G - I| = {err:.3e}",
                }
            )

    expected_successes = {Protocol.P1: 4, Protocol.P2: 16, Protocol.P3: 64}
    for protocol in Protocol:
        report = enumerate_outcomes(
            RunConfig(protocol, share1, share2, table_provenance="derived")
        )
        total = float(sum(r.probability for r in report.records))
        n_success = sum(1 for r in report.records if r.success)
        worst_success = min(
            (r.post_fidelity for r in report.records if r.success), default=0.0
        )
        failure_ceiling = max(
            (r.best_fidelity for r in report.records if not r.success), default=0.0
        )
        ideal = report.target.product_norm ** 2
        checks.append(
            {
                "name": f"completeness[{protocol.value}]",
                "passed": abs(total - 1.0) <= 1e-10,
                "detail": f"sum of branch probabilities = {total!r}",
            }
        )
        checks.append(
            {
                "name": f"success_count[{protocol.value}]",
                "passed": n_success == expected_successes[protocol],
                "detail": f"{n_success} correctable outcomes",
            }
        )
        checks.append(
            {
                "name": f"success_fidelity[{protocol.value}]",
                "passed": worst_success >= 1.0 - 1e-10,
                "detail": f"min corrected fidelity = {worst_success!r}",
            }
        )
        checks.append(
            {
                "name": f"failure_ceiling[{protocol.value}]",
                "passed": failure_ceiling < 1.0 - 1e-6,
                "detail": f"best failure fidelity over the alphabet = {failure_ceiling!r}",
            }
        )
        checks.append(
            {
                "name": f"success_probability[{protocol.value}]",
                "passed": abs(report.success_probability - ideal) <= 1e-10,
                "detail": f"{report.success_probability!r} vs squared product norm {ideal!r}",
            }
        )

    checks.append(_collaboration_check(share1, share2))
    return checks


def _collaboration_check(share1, share2) -> dict:
    """One sender's measurement alone must tell the receiver nothing.

    After sender1's projection the receiver's reduced state is diagonal
    in sender1's squared pattern row, independent of share2, and averages
    to the maximally mixed state over outcomes.
    """
    spec = build_channel(Protocol.P1)
    basis1, _ = sender_bases(spec, share1, share2)
    m = sign_pattern(share1.components)
    avg = np.zeros((DIM, DIM), dtype=complex)
    worst = 0.0
    for row, vec in enumerate(basis1.vectors):
        residual, prob = project(spec.state, basis1.labels, vec)
        rho = reduced_density(residual.normalized(), spec.receiver_labels).matrix
        expected = np.diag(m[row] ** 2)
        worst = max(worst, float(np.max(np.abs(rho - expected))))
        avg += prob * rho
    worst_avg = float(np.max(np.abs(avg - np.eye(DIM) / DIM)))
    return {
        "name": "collaboration[p1]",
        "passed": worst <= 1e-10 and worst_avg <= 1e-10,
        "detail": f"max deviation per outcome {worst:.3e}, averaged {worst_avg:.3e}",
    }


def full_audit(seed: int = 0, share_draws: int = 20, structural_draws: int = 3) -> dict:
    """Run every verification over fresh generic share draws.

    The discrepancy location set must be identical across draws to count
    as stable.  The audit is ok when it is stable, all structural checks
    pass, and every location is in KNOWN_DISCREPANCY_LOCATIONS.
    """
    if share_draws < 1:
        raise ValueError("share_draws must be >= 1")
    rng = np.random.default_rng(seed)
    checks: list[dict] = []
    location_sets: list[tuple[str, ...]] = []
    last_discs: list[Discrepancy] = []

    for draw in range(share_draws):
        share1 = random_generic_share(rng, 1)
        share2 = random_generic_share(rng, 2)
        discs: list[Discrepancy] = []
        for protocol in Protocol:
            discs += verify_decomposition(protocol, share1, share2)
            discs += verify_tables(protocol, share1, share2)
        discs += verify_group_states(share1, share2)
        location_sets.append(tuple(sorted(d.location for d in discs)))
        last_discs = discs
        if draw < structural_draws:
            checks.extend(_structural_checks(share1, share2))

    stable = all(locs == location_sets[0] for locs in location_sets)
    found = set(location_sets[0]) if location_sets else set()
    unresolved = sorted(found - KNOWN_DISCREPANCY_LOCATIONS)
    checks_ok = all(c["passed"] for c in checks)
    ok = stable and checks_ok and not unresolved
    return {
        "seed": seed,
        "share_draws": share_draws,
        "stable": stable,
        "checks": checks,
        "discrepancies": [d.to_doc() for d in sorted(last_discs, key=lambda d: d.location)],
        "known_locations": sorted(KNOWN_DISCREPANCY_LOCATIONS),
        "unresolved": unresolved,
        "ok": ok,
    }
