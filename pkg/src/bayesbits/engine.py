"""Single-observation Bayesian updating carried out in information space.

A Bayes update can be written entirely in bits. Taking -log2 of Bayes'
rule splits one observation's effect on a hypothesis into two opposing
surprisal terms:

* the evidence term ``info_content(P(x))``, which always lowers the
  posterior information content (raises the probability), and
* the likelihood term ``info_content(P(x | theta))``, which always
  raises it (lowers the probability).

Their difference is the transfer information content,

    tic(x -> theta) = info_content(P(x)) - info_content(P(x | theta)),

the net signed bits the observation delivers to that one hypothesis.
Positive TIC informs, negative TIC misleads, and the posterior falls out
as ``posterior_info = prior_info - tic``. The probability-space Bayes
rule is kept alongside as :func:`posterior_prob_oracle` so the two
routes can always be checked against each other.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    Bits,
    Distribution,
    Probability,
    _log2_positive,
    as_probability,
    info_content,
    prob_from_info,
    probability_repr,
)
from .errors import (
    ImpossibleObservationError,
    InvariantViolation,
    UndefinedLogError,
    UnknownLabelError,
    ZeroLikelihoodRatioError,
)

__all__ = [
    "BayesFactor",
    "ModelSpace",
    "ModelTransfer",
    "ObservationModel",
    "SignClass",
    "TIC_NEUTRAL_TOL",
    "TransferReport",
    "bayes_factor",
    "classify_tic",
    "evidence",
    "local_transfer_entropy",
    "log2_bayes_factor",
    "posterior_info",
    "posterior_prob_info_form",
    "posterior_prob_oracle",
    "tic",
    "transfer_report",
]

# Band around zero inside which a TIC counts as neutral; float-form
# scenarios cannot hit 0 exactly.
TIC_NEUTRAL_TOL = 1e-12


@dataclass(frozen=True)
class ModelSpace:
    """The hypothesis space: a prior distribution over model labels."""

    prior: Distribution

    @property
    def labels(self) -> tuple[str, ...]:
        return self.prior.labels

    def prior_of(self, theta: str) -> Probability:
        return self.prior.prob_of(theta)


@dataclass(frozen=True)
class ObservationModel:
    """Likelihood matrix P(x | theta), rows = observations, columns = models.

    Every column is itself a distribution over the observation space: for
    each model the likelihoods must sum to 1 (exactly when the column is
    all rationals, within the float tolerance otherwise).
    """

    observation_labels: tuple[str, ...]
    model_labels: tuple[str, ...]
    likelihood: tuple[tuple[Probability, ...], ...]

    def __init__(
        self,
        observation_labels: Sequence[str],
        model_labels: Sequence[str],
        likelihood: Iterable[Iterable[Probability | int | str]],
    ) -> None:
        object.__setattr__(self, "observation_labels", tuple(observation_labels))
        object.__setattr__(self, "model_labels", tuple(model_labels))
        object.__setattr__(
            self,
            "likelihood",
            tuple(tuple(as_probability(p) for p in row) for row in likelihood),
        )
        self._check()

    def _check(self) -> None:
        if not self.observation_labels or not self.model_labels:
            raise InvariantViolation("observation model needs >= 1 observation and >= 1 model")
        if len(set(self.observation_labels)) != len(self.observation_labels):
            raise InvariantViolation(f"duplicate observation labels in {self.observation_labels}")
        if len(set(self.model_labels)) != len(self.model_labels):
            raise InvariantViolation(f"duplicate model labels in {self.model_labels}")
        if len(self.likelihood) != len(self.observation_labels):
            raise InvariantViolation(
                f"{len(self.likelihood)} likelihood rows for "
                f"{len(self.observation_labels)} observations"
            )
        for x, row in zip(self.observation_labels, self.likelihood):
            if len(row) != len(self.model_labels):
                raise InvariantViolation(
                    f"likelihood row {x!r} has {len(row)} entries for "
                    f"{len(self.model_labels)} models"
                )
        for j, theta in enumerate(self.model_labels):
            column = [row[j] for row in self.likelihood]
            total = sum(column)
            if all(isinstance(p, Fraction) for p in column):
                if total != 1:
                    raise InvariantViolation(
                        f"likelihood column for model {theta!r} sums to "
                        f"{probability_repr(Fraction(total))}, expected 1"
                    )
            elif abs(float(total) - 1.0) > 1e-9:
                raise InvariantViolation(
                    f"likelihood column for model {theta!r} sums to {float(total)!r}, expected 1"
                )

    @property
    def is_exact(self) -> bool:
        return all(isinstance(p, Fraction) for row in self.likelihood for p in row)

    def _x_index(self, x: str) -> int:
        try:
            return self.observation_labels.index(x)
        except ValueError:
            raise UnknownLabelError(
                f"unknown observation {x!r}; have {list(self.observation_labels)}"
            ) from None

    def _theta_index(self, theta: str) -> int:
        try:
            return self.model_labels.index(theta)
        except ValueError:
            raise UnknownLabelError(
                f"unknown model {theta!r}; have {list(self.model_labels)}"
            ) from None

    def likelihood_of(self, x: str, theta: str) -> Probability:
        return self.likelihood[self._x_index(x)][self._theta_index(theta)]


class SignClass(enum.Enum):
    """Three-way effect of an observation on one hypothesis."""

    INFORMS = "informs"
    NEUTRAL = "neutral"
    MISLEADS = "misleads"


def _check_pairing(ms: ModelSpace, om: ObservationModel) -> None:
    if ms.labels != om.model_labels:
        raise InvariantViolation(
            f"model space labels {list(ms.labels)} do not match "
            f"observation model columns {list(om.model_labels)}"
        )


def evidence(ms: ModelSpace, om: ObservationModel, x: str) -> Probability:
    """Marginal probability of observation ``x`` under the prior mixture.

    Always computed by marginalizing the likelihood against the prior;
    exact when both are rational. Never supplied externally, so the
    evidence can never disagree with the prior and likelihood.
    """
    _check_pairing(ms, om)
    row = om.likelihood[om._x_index(x)]
    return sum(lik * p for lik, p in zip(row, ms.prior.probs))


def _require_possible(ev: Probability, x: str) -> None:
    if ev == 0:
        raise ImpossibleObservationError(
            f"observation {x!r} has zero evidence; cannot condition on it"
        )


def tic(ms: ModelSpace, om: ObservationModel, x: str, theta: str) -> Bits:
    """Transfer information content from observation ``x`` to model ``theta``.

    ``info_content(P(x)) - info_content(P(x | theta))`` in bits. Negative
    values mean the observation misleads about the model; ``-inf`` means
    the model is refuted outright (likelihood 0 for an observation that
    happened).
    """
    ev = evidence(ms, om, x)
    _require_possible(ev, x)
    return info_content(ev) - info_content(om.likelihood_of(x, theta))


def classify_tic(t: Bits, tolerance: float = TIC_NEUTRAL_TOL) -> SignClass:
    """Sign classification of a TIC value with a neutral band around zero."""
    if math.isnan(t):
        raise InvariantViolation("TIC value must not be NaN")
    if t > tolerance:
        return SignClass.INFORMS
    if t < -tolerance:
        return SignClass.MISLEADS
    return SignClass.NEUTRAL


def posterior_info(ms: ModelSpace, om: ObservationModel, x: str, theta: str) -> Bits:
    """Posterior information content of ``theta`` after seeing ``x``.

    ``prior_info - tic``, the information-space form of the Bayes update.
    ``+inf`` means the posterior probability is 0.
    """
    return info_content(ms.prior_of(theta)) - tic(ms, om, x, theta)


def posterior_prob_info_form(ms: ModelSpace, om: ObservationModel, x: str, theta: str) -> float:
    """Posterior probability recovered from the information-space route."""
    return prob_from_info(posterior_info(ms, om, x, theta))


def posterior_prob_oracle(ms: ModelSpace, om: ObservationModel, x: str, theta: str) -> Probability:
    """Posterior probability straight from Bayes' rule in probability space.

    Exact when the inputs are rational. This is the in-engine check the
    information-space route is validated against.
    """
    ev = evidence(ms, om, x)
    _require_possible(ev, x)
    return om.likelihood_of(x, theta) * ms.prior_of(theta) / ev


@dataclass(frozen=True)
class ModelTransfer:
    """One model's row of a transfer report.

    ``tic`` and ``sign_class`` are None when the prior is 0: the transfer
    to an already-impossible model has no defined meaning, and recording
    None keeps NaN out of the report.
    """

    model: str
    prior_prob: Probability
    prior_info: Bits
    evidence_info: Bits
    likelihood_info: Bits
    tic: Bits | None
    sign_class: SignClass | None
    posterior_info: Bits
    posterior_prob: float


@dataclass(frozen=True)
class TransferReport:
    """Per-model decomposition of one observation's effect."""

    observation: str
    evidence: Probability
    entries: tuple[ModelTransfer, ...]

    def entry_for(self, theta: str) -> ModelTransfer:
        for entry in self.entries:
            if entry.model == theta:
                return entry
        raise UnknownLabelError(f"no entry for model {theta!r}")


def transfer_report(ms: ModelSpace, om: ObservationModel, x: str) -> TransferReport:
    """Full information-transfer decomposition of observation ``x``.

    One entry per model: both surprisal sources, the TIC, its sign class,
    and the posterior computed via the information-space route.
    """
    ev = evidence(ms, om, x)
    _require_possible(ev, x)
    ev_info = info_content(ev)
    entries = []
    for theta in ms.labels:
        prior_p = ms.prior_of(theta)
        prior_i = info_content(prior_p)
        lik_i = info_content(om.likelihood_of(x, theta))
        if prior_p == 0:
            entries.append(
                ModelTransfer(
                    model=theta,
                    prior_prob=prior_p,
                    prior_info=prior_i,
                    evidence_info=ev_info,
                    likelihood_info=lik_i,
                    tic=None,
                    sign_class=None,
                    posterior_info=math.inf,
                    posterior_prob=0.0,
                )
            )
            continue
        t = ev_info - lik_i
        post_i = prior_i - t
        entries.append(
            ModelTransfer(
                model=theta,
                prior_prob=prior_p,
                prior_info=prior_i,
                evidence_info=ev_info,
                likelihood_info=lik_i,
                tic=t,
                sign_class=classify_tic(t),
                posterior_info=post_i,
                posterior_prob=prob_from_info(post_i),
            )
        )
    return TransferReport(observation=x, evidence=ev, entries=tuple(entries))


@dataclass(frozen=True)
class BayesFactor:
    """Likelihood ratio of two models for one observation, plus its log."""

    ratio: Probability
    log2: Bits


def log2_bayes_factor(om: ObservationModel, x: str, theta1: str, theta2: str) -> Bits:
    """log2 of the Bayes factor K = P(x|theta1) / P(x|theta2).

    Returns ``+inf`` when only the denominator likelihood is 0 and
    ``-inf`` when only the numerator is; rejects 0/0. Equals the TIC
    difference ``tic(x -> theta1) - tic(x -> theta2)``.
    """
    lik1 = om.likelihood_of(x, theta1)
    lik2 = om.likelihood_of(x, theta2)
    if lik1 == 0 and lik2 == 0:
        raise ZeroLikelihoodRatioError(
            f"Bayes factor for {x!r} is 0/0: both {theta1!r} and {theta2!r} are refuted"
        )
    return info_content(lik2) - info_content(lik1)


def bayes_factor(om: ObservationModel, x: str, theta1: str, theta2: str) -> BayesFactor:
    """Bayes factor of ``theta1`` over ``theta2`` on observation ``x``.

    The ratio form requires a nonzero denominator likelihood; use
    :func:`log2_bayes_factor` when an infinite log form is acceptable.
    """
    lik1 = om.likelihood_of(x, theta1)
    lik2 = om.likelihood_of(x, theta2)
    if lik2 == 0:
        raise ZeroLikelihoodRatioError(
            f"Bayes factor ratio for {x!r} undefined: P(x|{theta2!r}) = 0"
        )
    return BayesFactor(ratio=lik1 / lik2, log2=log2_bayes_factor(om, x, theta1, theta2))


def local_transfer_entropy(ms: ModelSpace, om: ObservationModel, x: str, theta: str) -> Bits:
    """Log-odds update ``log2(P(theta|x) / P(theta))`` of a single model.

    Computed from the probability-space posterior, so it is an
    independent route to the same number as :func:`tic`. Undefined for a
    model with zero prior.
    """
    prior_p = ms.prior_of(theta)
    if prior_p == 0:
        raise UndefinedLogError(
            f"log-odds update of {theta!r} undefined: prior probability is 0"
        )
    post = posterior_prob_oracle(ms, om, x, theta)
    ratio = post / prior_p
    if ratio == 0:
        return -math.inf
    return _log2_positive(ratio)
