"""The judge's deduction engine.

Given a transcript, the judge enumerates every fake-set hypothesis that is
consistent with what the scale showed, under a two-point prior on the fake
count: either ``d`` or ``f``.  A proof is valid when at least one size-f set
survives, no size-d set does, and the lawyer's actual placement is among the
survivors.

Counting is done over itinerary classes rather than individual subsets.  All
coins sharing an itinerary are interchangeable: a weighing's outcome depends
only on how many fakes each class contributes to each pan.  So the consistent
size-s sets are exactly the unions of per-class choices described by a small
set of "class count vectors", and their number is a sum of products of
binomials.  That keeps counting at t = 80 (and beyond) instant without ever
materializing subsets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .model import (
    Outcome,
    ProblemInstance,
    Transcript,
    ValidationError,
    partition_by_itinerary,
    validate_plan,
)

_OUTCOME_CODE = {Outcome.BALANCED: 0, Outcome.LEFT_LIGHTER: 1, Outcome.RIGHT_LIGHTER: -1}

_ASSIGNMENT_CHUNK = 1 << 16


class InvalidProofError(RuntimeError):
    """Privacy classification was requested for a transcript that does not
    constitute a valid proof."""


@dataclass(frozen=True)
class ProofVerdict:
    valid: bool
    consistent_count_f: int
    consistent_count_d: int

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "consistent_f": self.consistent_count_f,
            "consistent_d": self.consistent_count_d,
        }


@dataclass(frozen=True)
class PrivacyReport:
    discreet: bool
    revealed_real: frozenset
    revealed_fake: frozenset

    def to_json(self) -> dict:
        return {
            "discreet": self.discreet,
            "revealed_real": sorted(self.revealed_real),
            "revealed_fake": sorted(self.revealed_fake),
        }


def _checked_plan(t: int, transcript: Transcript):
    if t != transcript.plan.t:
        raise ValueError(f"t={t} does not match the plan's t={transcript.plan.t}")
    problems = validate_plan(transcript.plan)
    if problems:
        raise ValidationError("; ".join(problems))
    return transcript.plan


def _classes(transcript: Transcript) -> list:
    """(itinerary, coins) pairs for the plan, sorted by itinerary."""
    return list(partition_by_itinerary(transcript.plan).items())


def consistent_count_vectors(symbols, sizes, codes, size: int) -> list:
    """All ways to spread `size` fakes over itinerary classes so that every
    weighing shows the given outcome sign.

    `symbols[j]` is class j's itinerary, `sizes[j]` its coin count, and
    `codes[i]` the sign of (fakes on left - fakes on right) in weighing i.
    """
    k = len(symbols)
    suffix = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        suffix[j] = suffix[j + 1] + sizes[j]
    num_weighings = len(codes)

    def matches(vec) -> bool:
        for i in range(num_weighings):
            diff = 0
            for j in range(k):
                s = symbols[j][i]
                if s == "L":
                    diff += vec[j]
                elif s == "R":
                    diff -= vec[j]
            if (diff > 0) - (diff < 0) != codes[i]:
                return False
        return True

    found = []
    vec = [0] * k

    def assign(j: int, remaining: int) -> None:
        if remaining > suffix[j]:
            return
        if j == k:
            if matches(vec):
                found.append(tuple(vec))
            return
        for c in range(min(remaining, sizes[j]) + 1):
            vec[j] = c
            assign(j + 1, remaining - c)
        vec[j] = 0

    assign(0, size)
    return found


def _consistent_class_vectors(classes, codes, size: int) -> list:
    return consistent_count_vectors(
        [itin for itin, _ in classes], [len(coins) for _, coins in classes], codes, size
    )


def count_consistent(t: int, s: int, transcript: Transcript) -> int:
    """Number of size-s fake sets consistent with the transcript, computed
    from class count vectors without storing any subset."""
    _checked_plan(t, transcript)
    if not 0 <= s <= t:
        raise ValueError(f"hypothesis size {s} outside 0..{t}")
    classes = _classes(transcript)
    codes = tuple(_OUTCOME_CODE[o] for o in transcript.outcomes)
    total = 0
    for vec in _consistent_class_vectors(classes, codes, s):
        product = 1
        for (_, coins), c in zip(classes, vec):
            product *= comb(len(coins), c)
        total += product
    return total


def consistent_assignments(t: int, s: int, transcript: Transcript) -> list:
    """All size-s fake sets consistent with the transcript, in lexicographic
    order of their sorted coin indices."""
    plan = _checked_plan(t, transcript)
    if not 0 <= s <= t:
        raise ValueError(f"hypothesis size {s} outside 0..{t}")
    if s == 0:
        empty_ok = all(o is Outcome.BALANCED for o in transcript.outcomes)
        return [frozenset()] if empty_ok else []
    if not plan.weighings:
        return [frozenset(c) for c in itertools.combinations(range(t), s)]

    num_weighings = len(plan.weighings)
    contrib = np.zeros((t, num_weighings), dtype=np.int16)
    for i, w in enumerate(plan.weighings):
        for c in w.left:
            contrib[c, i] = 1
        for c in w.right:
            contrib[c, i] = -1
    target = np.array([_OUTCOME_CODE[o] for o in transcript.outcomes], dtype=np.int16)

    result = []
    combos = itertools.combinations(range(t), s)
    while True:
        chunk = list(itertools.islice(combos, _ASSIGNMENT_CHUNK))
        if not chunk:
            break
        idx = np.array(chunk, dtype=np.intp)
        signs = np.sign(contrib[idx].sum(axis=1))
        keep = np.flatnonzero((signs == target).all(axis=1))
        result.extend(frozenset(chunk[i]) for i in keep)
    return result


def verify_proof(
    instance: ProblemInstance, transcript: Transcript, placement
) -> ProofVerdict:
    """Decide whether the transcript proves "exactly f fakes" to a judge whose
    prior allows only the counts d and f."""
    placement = frozenset(placement)
    if len(placement) != instance.f:
        raise ValueError(
            f"placement has {len(placement)} coins but the instance has f={instance.f}"
        )
    _checked_plan(instance.t, transcript)
    stray = [c for c in placement if not 0 <= c < instance.t]
    if stray:
        raise ValidationError(f"placement coins {sorted(stray)} out of range")

    count_f = count_consistent(instance.t, instance.f, transcript)
    count_d = count_consistent(instance.t, instance.d, transcript)
    placement_consistent = all(
        _OUTCOME_CODE[o] == _simulated_code(w, placement)
        for w, o in zip(transcript.plan.weighings, transcript.outcomes)
    )
    valid = placement_consistent and count_f >= 1 and count_d == 0
    return ProofVerdict(valid, count_f, count_d)


def _simulated_code(weighing, fakes) -> int:
    diff = len(fakes & weighing.left) - len(fakes & weighing.right)
    return (diff > 0) - (diff < 0)


def classify_privacy(instance: ProblemInstance, transcript: Transcript) -> PrivacyReport:
    """Split coins into revealed-real (in no consistent set), revealed-fake
    (in all of them), and undetermined.  Discreet means neither set is
    inhabited.  Only meaningful after a valid proof."""
    _checked_plan(instance.t, transcript)
    classes = _classes(transcript)
    codes = tuple(_OUTCOME_CODE[o] for o in transcript.outcomes)
    vectors_f = _consistent_class_vectors(classes, codes, instance.f)
    if not vectors_f or _consistent_class_vectors(classes, codes, instance.d):
        raise InvalidProofError(
            "privacy classification is only defined for a valid proof"
        )
    revealed_real = []
    revealed_fake = []
    for j, (_, coins) in enumerate(classes):
        if all(vec[j] == 0 for vec in vectors_f):
            revealed_real.extend(coins)
        elif all(vec[j] == len(coins) for vec in vectors_f):
            revealed_fake.extend(coins)
    report = PrivacyReport(
        discreet=not revealed_real and not revealed_fake,
        revealed_real=frozenset(revealed_real),
        revealed_fake=frozenset(revealed_fake),
    )
    return report
