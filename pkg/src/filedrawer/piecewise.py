"""Piecewise-constant selection functions over an m-interval partition.

The score axis is split into intervals Q_1..Q_m. A model stores the
interval masses A_k = Prob(z in Q_k) and the conditional publication
probabilities B_k = Prob(published | z in Q_k); the overall publication
probability is the dot product

    p = sum_k A_k * B_k.

Only the masses enter the math, so the partition's breakpoints are not
stored here. Converting breakpoints plus a density into masses is the
job of :func:`filedrawer.gaussian.discretize_density`, which keeps this
module free of distribution assumptions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import PublicationStats, StepSelectionModel

#: Masses usually arise from CDF differences, so exact unity cannot be
#: demanded of their sum; 1e-9 is far below any statistical resolution here.
MASS_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class PiecewiseSelectionModel:
    """Interval masses and conditional publication probabilities."""

    masses: tuple[float, ...]
    probs: tuple[float, ...]

    def __post_init__(self) -> None:
        masses = tuple(float(a) for a in self.masses)
        probs = tuple(float(b) for b in self.probs)
        object.__setattr__(self, "masses", masses)
        object.__setattr__(self, "probs", probs)
        if len(masses) != len(probs):
            raise ValueError(
                f"masses and probs must have equal length, "
                f"got {len(masses)} and {len(probs)}"
            )
        if not masses:
            raise ValueError("a model needs at least one interval")
        for k, a in enumerate(masses):
            if not 0.0 <= a <= 1.0:
                raise ValueError(f"masses[{k}] must lie in [0, 1], got {a!r}")
        for k, b in enumerate(probs):
            if not 0.0 <= b <= 1.0:
                raise ValueError(f"probs[{k}] must lie in [0, 1], got {b!r}")
        total = math.fsum(masses)
        if abs(total - 1.0) > MASS_SUM_TOLERANCE:
            raise ValueError(
                f"masses must sum to 1 within {MASS_SUM_TOLERANCE}, got {total!r}"
            )

    @property
    def m(self) -> int:
        """Number of intervals in the partition."""
        return len(self.masses)


def publication_probability_piecewise(model: PiecewiseSelectionModel) -> float:
    """Overall publication probability sum_k A_k B_k."""
    p = math.fsum(a * b for a, b in zip(model.masses, model.probs))
    # the mass-sum tolerance can push the dot product past [0, 1] by ~1e-9
    return min(1.0, max(0.0, p))


def ratio_piecewise(model: PiecewiseSelectionModel) -> PublicationStats:
    """Publication stats of a piecewise model; p = 0 yields the unbounded state."""
    return PublicationStats.from_p(publication_probability_piecewise(model))


def diagonal_model(m: int) -> PiecewiseSelectionModel:
    """Discrete approximation to the unit-square diagonal: A_k = 1/m, B_k = k/m."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    return PiecewiseSelectionModel(
        masses=(1.0 / m,) * m,
        probs=tuple(k / m for k in range(1, m + 1)),
    )


def diagonal_ratio_closed_form(m: int) -> float:
    """Ratio of the diagonal family in closed form: (m - 1) / (m + 1).

    Follows from p = (m + 1) / (2m) for the diagonal model; tends to 1 as
    m grows, matching the selection function's convergence to the
    diagonal of the unit square.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    return (m - 1) / (m + 1)


def step_as_piecewise(model: StepSelectionModel) -> PiecewiseSelectionModel:
    """Express a step model as the two-interval partition below/above the threshold.

    Below the threshold the mass is 1 - alpha and publication probability
    beta; above it the mass is alpha and publication is certain.
    """
    return PiecewiseSelectionModel(
        masses=(1.0 - model.alpha, model.alpha),
        probs=(model.beta, 1.0),
    )
