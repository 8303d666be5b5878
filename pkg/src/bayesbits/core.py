"""Arithmetic between probabilities and information contents.

A probability is either an exact rational (``fractions.Fraction``) or a
binary64 float. Exact values survive sums and products unchanged, which
keeps hand-authored fixtures like 7/12 exact all the way to the single
log that converts them to bits. Information contents are always floats:
logarithms of rationals are irrational, so nothing is gained by wrapping
them.

Conventions, fixed once for the whole package:

* all information quantities are base-2 (bits); there is no nats mode
* probability 0 maps to ``+inf`` bits and back, never to an error, so
  refuted hypotheses flow through updates and land at posterior 0
* bits values are never NaN
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError, InvariantViolation, UnknownLabelError

__all__ = [
    "Bits",
    "Distribution",
    "Probability",
    "FLOAT_SUM_TOL",
    "NEG_BITS_NOISE_TOL",
    "as_probability",
    "entropy",
    "info_content",
    "is_exact",
    "prob_from_info",
    "probability_repr",
]

# Exact rationals keep fixture arithmetic exact; floats cover everything else.
Probability = Union[Fraction, float]

# Bits values are plain binary64 floats (possibly +/-inf, never NaN).
Bits = float

# Float-form distributions must sum to 1 within this; worse sums are
# rejected rather than renormalized, so authoring errors surface.
FLOAT_SUM_TOL = 1e-9


def as_probability(value: Probability | int | str) -> Probability:
    """Validate and normalize one probability value.

    Accepts a Fraction, an int (exact), a float, or a string ``"num/den"``
    which parses to an exact rational. Rejects values outside [0, 1] and
    non-finite floats.
    """
    if isinstance(value, str):
        try:
            value = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse probability from {value!r}") from exc
    if isinstance(value, bool):
        raise DomainError(f"probability must be numeric, got {value!r}")
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction):
        if not 0 <= value <= 1:
            raise DomainError(f"probability {value} outside [0, 1]")
        return value
    if isinstance(value, float):
        if math.isnan(value) or not 0.0 <= value <= 1.0:
            raise DomainError(f"probability {value!r} outside [0, 1]")
        return value
    raise DomainError(f"probability must be Fraction, int, or float, got {type(value).__name__}")


def is_exact(p: Probability) -> bool:
    """True when ``p`` is held as an exact rational."""
    return isinstance(p, Fraction)


def probability_repr(p: Probability) -> str:
    """Stable text form: ``"num/den"`` for exact values, repr for floats."""
    if isinstance(p, Fraction):
        return f"{p.numerator}/{p.denominator}"
    return repr(p)


def _log2_positive(p: Probability) -> float:
    """log2 of a probability known to be > 0.

    For rationals whose float image would underflow to 0, fall back to
    integer logs so adversarial denominators still give a finite answer.
    """
    if isinstance(p, Fraction):
        try:
            x = float(p)
        except OverflowError:
            x = 0.0
        if x > 0.0:
            return math.log2(x)
        return math.log2(p.numerator) - math.log2(p.denominator)
    return math.log2(p)


def info_content(p: Probability | int | str) -> Bits:
    """Information content (self-information) of one event, in bits.

    Returns ``-log2(p)``: 0 bits for certainty, ``+inf`` for an
    impossible event. Rejects values outside [0, 1].
    """
    p = as_probability(p)
    if p == 0:
        return math.inf
    lg = _log2_positive(p)
    return 0.0 if lg == 0.0 else -lg


# Bit-space subtraction of two independently rounded logs can land a
# hair below 0 when the true value is 0 (posterior probability 1); such
# dips are noise, not negative surprisals, and map to probability 1.
NEG_BITS_NOISE_TOL = 1e-9


def prob_from_info(bits: Bits) -> float:
    """Probability of the event whose information content is ``bits``.

    Inverse of :func:`info_content`: returns ``2**-bits``. Requires
    ``bits >= 0`` (a surprisal cannot be negative) except for float
    noise within :data:`NEG_BITS_NOISE_TOL` of 0, which clamps to
    probability 1; ``+inf`` maps to 0.
    """
    if math.isnan(bits):
        raise DomainError("bits value must not be NaN")
    if bits < 0:
        if bits >= -NEG_BITS_NOISE_TOL:
            return 1.0
        raise DomainError(f"information content must be >= 0, got {bits}")
    if math.isinf(bits):
        return 0.0
    return 2.0 ** (-bits)


@dataclass(frozen=True)
class Distribution:
    """A finite distribution over labeled events.

    Labels are unique and ordered; probabilities line up with them. A
    distribution made of exact rationals must sum to exactly 1; one with
    any float entries must sum to 1 within :data:`FLOAT_SUM_TOL`.
    """

    labels: tuple[str, ...]
    probs: tuple[Probability, ...]

    def __init__(
        self,
        labels: Sequence[str],
        probs: Iterable[Probability | int | str],
    ) -> None:
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "probs", tuple(as_probability(p) for p in probs))
        self._check()

    def _check(self) -> None:
        if len(self.labels) == 0:
            raise InvariantViolation("distribution needs at least one event")
        if len(self.labels) != len(self.probs):
            raise InvariantViolation(
                f"{len(self.labels)} labels but {len(self.probs)} probabilities"
            )
        if len(set(self.labels)) != len(self.labels):
            raise InvariantViolation(f"duplicate labels in {self.labels}")
        total = sum(self.probs)
        if self.is_exact:
            if total != 1:
                raise InvariantViolation(
                    f"probabilities sum to {probability_repr(Fraction(total))}, expected 1"
                )
        elif abs(float(total) - 1.0) > FLOAT_SUM_TOL:
            raise InvariantViolation(f"probabilities sum to {float(total)!r}, expected 1")

    @property
    def is_exact(self) -> bool:
        """True when every probability is an exact rational."""
        return all(isinstance(p, Fraction) for p in self.probs)

    def __len__(self) -> int:
        return len(self.labels)

    def prob_of(self, label: str) -> Probability:
        try:
            return self.probs[self.labels.index(label)]
        except ValueError:
            raise UnknownLabelError(f"unknown event {label!r}; have {list(self.labels)}") from None

    @classmethod
    def uniform(cls, labels: Sequence[str]) -> "Distribution":
        n = len(labels)
        return cls(labels, [Fraction(1, n)] * n)


def entropy(d: Distribution) -> Bits:
    """Average information content of a distribution, in bits.

    Sum of ``p * info_content(p)`` over the events, with the usual
    convention that zero-probability events contribute nothing. Bounded
    by 0 and log2(n).
    """
    total = 0.0
    for p in d.probs:
        if p == 0:
            continue
        total += float(p) * info_content(p)
    return total
