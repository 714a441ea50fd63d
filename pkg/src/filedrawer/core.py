"""Two-parameter step selection model for publication bias.

A study reporting a standard score z is published with certainty when z
falls beyond a significance threshold and with constant probability
``beta`` otherwise. Writing ``alpha`` for the probability mass of the
score distribution beyond the threshold, a random study is rejected with
probability ``(1 - alpha) * (1 - beta)``, so the overall publication
probability is

    p = 1 - (1 - alpha) * (1 - beta)

and the expected number of unpublished studies per published study is

    r = (1 - p) / p.

Both quantities depend on the score distribution only through ``alpha``,
so nothing in this module assumes any particular distribution (the
normal special case lives in :mod:`filedrawer.gaussian`). Contours of
constant ``r = r0`` in the (alpha, beta) unit square are the rectangular
hyperbolae

    (1 - alpha) * (1 - beta) = r0 / (r0 + 1).

All functions are pure and all values immutable; the module is safe to
use from any number of threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

RatioLabel = Literal["not-large", "large", "very-large"]

#: r above this counts as "large" (strict inequality).
LARGE_THRESHOLD = 50.0
#: r above this counts as "very-large" (strict inequality).
VERY_LARGE_THRESHOLD = 100.0


class OffContourError(ValueError):
    """The requested contour does not pass through the given coordinate.

    Raised when solving ``(1 - alpha)(1 - beta) = r0 / (r0 + 1)`` for the
    missing coordinate yields a value outside [0, 1]. The solution is
    reported as-is in the message; it is never clamped, because a clamped
    point would not lie on the ``r = r0`` contour.
    """

    def __init__(self, r0: float, fixed_name: str, fixed: float, solved: float):
        self.r0 = r0
        self.solved = solved
        super().__init__(
            f"contour r={r0!r} does not intersect {fixed_name}={fixed!r} "
            f"inside the unit square (solved value {solved!r})"
        )


def _require_unit(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return value


@dataclass(frozen=True)
class StepSelectionModel:
    """Step selection function with tail mass ``alpha`` and step size ``beta``.

    ``alpha`` is the probability mass of the score distribution beyond the
    publication threshold (where studies are always published); ``beta``
    is the publication probability below it.
    """

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _require_unit("alpha", self.alpha))
        object.__setattr__(self, "beta", _require_unit("beta", self.beta))


@dataclass(frozen=True)
class PublicationStats:
    """Publication probability ``p`` with the derived ratio ``r`` and label.

    ``r`` is ``(1 - p) / p``; the degenerate case ``p == 0`` is carried as
    ``math.inf`` rather than an error so that parameter grids and plots
    degrade gracefully.
    """

    p: float
    r: float
    label: RatioLabel

    @classmethod
    def from_p(cls, p: float) -> "PublicationStats":
        p = _require_unit("p", p)
        r = math.inf if p == 0.0 else (1.0 - p) / p
        return cls(p=p, r=r, label=classify_ratio(r))

    @property
    def unbounded(self) -> bool:
        """True when no studies are ever published (p = 0, r infinite)."""
        return math.isinf(self.r)


def classify_ratio(r: float) -> RatioLabel:
    """Label a ratio of unpublished to published studies.

    "large" means r exceeds 50 and "very-large" means r exceeds 100, both
    strictly; the infinite ratio classifies as "very-large".
    """
    if math.isnan(r) or r < 0.0:
        raise ValueError(f"r must be >= 0, got {r!r}")
    if r > VERY_LARGE_THRESHOLD:
        return "very-large"
    if r > LARGE_THRESHOLD:
        return "large"
    return "not-large"


def publication_probability_step(model: StepSelectionModel) -> float:
    """Overall publication probability 1 - (1 - alpha)(1 - beta)."""
    return 1.0 - (1.0 - model.alpha) * (1.0 - model.beta)


def ratio_step(model: StepSelectionModel) -> PublicationStats:
    """Publication probability and unpublished/published ratio of a step model.

    ``alpha = beta = 0`` yields the unbounded state (nothing is ever
    published), not an error.
    """
    return PublicationStats.from_p(publication_probability_step(model))


def unpublished_fraction(r: float) -> float:
    """Fraction of all studies that stay unpublished: 1 - p = r / (r + 1).

    Accepts the infinite ratio, for which the fraction is exactly 1.
    """
    if math.isnan(r) or r < 0.0:
        raise ValueError(f"r must be >= 0, got {r!r}")
    if math.isinf(r):
        return 1.0
    return r / (r + 1.0)


def contour_beta(r0: float, alpha: float) -> float:
    """Solve (1 - alpha)(1 - beta) = r0/(r0 + 1) for beta.

    Raises :class:`OffContourError` when the solution falls outside
    [0, 1], i.e. the hyperbola r = r0 does not intersect that alpha line
    within the unit square. Round-trip guarantee: feeding the result back
    through :func:`ratio_step` recovers r0 to within 1e-10.
    """
    if math.isnan(r0) or math.isinf(r0) or r0 < 0.0:
        raise ValueError(f"r0 must be a finite value >= 0, got {r0!r}")
    alpha = _require_unit("alpha", alpha)
    if alpha == 1.0:
        raise ValueError("alpha must be < 1 (the contour equation degenerates)")
    beta = 1.0 - r0 / ((r0 + 1.0) * (1.0 - alpha))
    if not 0.0 <= beta <= 1.0:
        raise OffContourError(r0, "alpha", alpha, beta)
    return beta


def contour_alpha(r0: float, beta: float) -> float:
    """Solve (1 - alpha)(1 - beta) = r0/(r0 + 1) for alpha.

    The contour equation is symmetric in (1 - alpha) and (1 - beta), so
    this is :func:`contour_beta` with the roles swapped.
    """
    if math.isnan(r0) or math.isinf(r0) or r0 < 0.0:
        raise ValueError(f"r0 must be a finite value >= 0, got {r0!r}")
    beta = _require_unit("beta", beta)
    if beta == 1.0:
        raise ValueError("beta must be < 1 (the contour equation degenerates)")
    alpha = 1.0 - r0 / ((r0 + 1.0) * (1.0 - beta))
    if not 0.0 <= alpha <= 1.0:
        raise OffContourError(r0, "beta", beta, alpha)
    return alpha
