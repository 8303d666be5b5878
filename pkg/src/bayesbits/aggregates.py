"""Shannon information functions assembled from per-model transfers.

The KL divergence of the posterior from the prior is the posterior-
weighted average of the per-model TICs for one observation; mutual
information is that average taken again over the evidence distribution
of observations. Both come with classical-form twins computed directly
from probabilities, so the TIC route is always cross-checkable.

Individual TIC terms can be negative or ``-inf``; the expectations stay
nonnegative because a refuted model carries posterior weight 0 and
``0 * (+/-inf)`` counts as 0 inside these sums.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Bits, Distribution, Probability, entropy, info_content
from .engine import (
    ModelSpace,
    ObservationModel,
    _check_pairing,
    evidence,
    posterior_prob_oracle,
    tic,
)

__all__ = [
    "KlResult",
    "KlTerm",
    "MiResult",
    "MiTerm",
    "kl_classical",
    "kl_expected_tic",
    "mutual_information",
    "mutual_information_classical",
]


@dataclass(frozen=True)
class KlTerm:
    """One model's contribution: posterior weight times its TIC."""

    model: str
    weight: Probability
    tic: Bits


@dataclass(frozen=True)
class KlResult:
    """KL(posterior || prior) for one observation, with its term breakdown.

    ``value`` is the raw sum and may dip a hair below 0 from float noise;
    ``clamped`` is the display form pinned at 0.
    """

    observation: str
    value: Bits
    terms: tuple[KlTerm, ...]

    @property
    def clamped(self) -> Bits:
        return max(0.0, self.value)


def kl_expected_tic(ms: ModelSpace, om: ObservationModel, x: str) -> KlResult:
    """KL divergence as the posterior-weighted expected TIC of ``x``.

    Zero-weight terms contribute exactly 0 even when their TIC is
    ``-inf``, so refuted models drop out of the sum.
    """
    terms = []
    value = 0.0
    for theta in ms.labels:
        weight = posterior_prob_oracle(ms, om, x, theta)
        t = tic(ms, om, x, theta)
        terms.append(KlTerm(model=theta, weight=weight, tic=t))
        if weight != 0:
            value += float(weight) * t
    return KlResult(observation=x, value=value, terms=tuple(terms))


def kl_classical(ms: ModelSpace, om: ObservationModel, x: str) -> Bits:
    """KL(posterior || prior) summed directly over posterior log-odds."""
    value = 0.0
    for theta in ms.labels:
        post = posterior_prob_oracle(ms, om, x, theta)
        if post == 0:
            continue
        value += float(post) * (info_content(ms.prior_of(theta)) - info_content(post))
    return value


@dataclass(frozen=True)
class MiTerm:
    """One observation's contribution: evidence weight times its KL."""

    observation: str
    evidence: Probability
    kl: KlResult


@dataclass(frozen=True)
class MiResult:
    """Mutual information between models and observations, with breakdown."""

    value: Bits
    per_observation: tuple[MiTerm, ...]

    @property
    def clamped(self) -> Bits:
        return max(0.0, self.value)


def mutual_information(ms: ModelSpace, om: ObservationModel) -> MiResult:
    """Mutual information as the evidence-weighted average per-observation KL.

    Observations with zero evidence cannot occur and are skipped; they
    would contribute weight 0 anyway.
    """
    _check_pairing(ms, om)
    terms = []
    value = 0.0
    for x in om.observation_labels:
        ev = evidence(ms, om, x)
        if ev == 0:
            continue
        kl = kl_expected_tic(ms, om, x)
        terms.append(MiTerm(observation=x, evidence=ev, kl=kl))
        value += float(ev) * kl.value
    return MiResult(value=value, per_observation=tuple(terms))


def mutual_information_classical(ms: ModelSpace, om: ObservationModel) -> Bits:
    """Mutual information as prior entropy minus expected posterior entropy."""
    _check_pairing(ms, om)
    conditional = 0.0
    for x in om.observation_labels:
        ev = evidence(ms, om, x)
        if ev == 0:
            continue
        posterior = Distribution(
            ms.labels, [posterior_prob_oracle(ms, om, x, theta) for theta in ms.labels]
        )
        conditional += float(ev) * entropy(posterior)
    return entropy(ms.prior) - conditional
