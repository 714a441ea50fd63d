"""Historical estimators of the hidden-study count, and the model bridge.

Three answers to "how many unpublished studies are out there?" live here:

* the fail-safe number of Rosenthal (1979): the number of mean-zero
  studies that would drag the Stouffer-combined z of the published set
  below a criterion,
* the all-nulls-true total k / alpha (if only the chance-significant
  fraction alpha gets published, k published studies imply k / alpha
  performed),
* the selection-model estimate k * r, which scales the observed
  published count by the model's unpublished/published ratio.

The fail-safe number solves (sum z) / sqrt(k + X) = z_crit, giving
X = (sum z)^2 / z_crit^2 - k, floored at zero. It is kept as a real
number and additionally reported floored, so near-boundary behaviour is
not silently hidden.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import RatioLabel, StepSelectionModel, classify_ratio, ratio_step

#: One-sided 5% criterion, the conventional default.
DEFAULT_Z_CRIT = 1.645


class ZScoreFileError(ValueError):
    """A z-score file could not be parsed; carries the offending line number."""

    def __init__(self, path: str, line_number: int, message: str):
        self.path = path
        self.line_number = line_number
        super().__init__(f"{path}, line {line_number}: {message}")


@dataclass(frozen=True)
class StudySet:
    """Ordered z-scores of the published studies."""

    z_scores: tuple[float, ...]

    def __post_init__(self) -> None:
        scores = tuple(float(z) for z in self.z_scores)
        object.__setattr__(self, "z_scores", scores)
        if not scores:
            raise ValueError("a study set needs at least one z-score")
        for i, z in enumerate(scores):
            if not math.isfinite(z):
                raise ValueError(f"z_scores[{i}] must be finite, got {z!r}")

    @property
    def k(self) -> int:
        """Number of published studies."""
        return len(self.z_scores)


def load_study_set(path: str) -> StudySet:
    """Parse a study set from a text file.

    One ASCII decimal z-score per line; blank lines and lines starting
    with '#' are ignored.
    """
    scores: list[float] = []
    with open(path, encoding="ascii") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                scores.append(float(line))
            except ValueError:
                raise ZScoreFileError(
                    path, line_number, f"not a decimal z-score: {line!r}"
                ) from None
    if not scores:
        raise ZScoreFileError(path, 0, "no z-scores found")
    return StudySet(tuple(scores))


def stouffer_z(studies: StudySet) -> float:
    """Stouffer combination (sum of z-scores) / sqrt(k)."""
    return math.fsum(studies.z_scores) / math.sqrt(studies.k)


@dataclass(frozen=True)
class FsnReport:
    """Fail-safe number with its Stouffer statistic and model-scale reading.

    ``implied_r`` is fsn / k: the unpublished/published ratio the fail-safe
    number asserts, directly comparable with the selection model's r.
    """

    fsn: float
    fsn_floor: int
    stouffer_z: float
    implied_r: float
    implied_label: RatioLabel


def fail_safe_number(studies: StudySet, z_crit: float = DEFAULT_Z_CRIT) -> FsnReport:
    """Fail-safe number of a study set at criterion ``z_crit``.

    X = (sum z)^2 / z_crit^2 - k, floored at zero.
    """
    z_crit = float(z_crit)
    if not math.isfinite(z_crit) or z_crit <= 0.0:
        raise ValueError(f"z_crit must be > 0, got {z_crit!r}")
    total = math.fsum(studies.z_scores)
    fsn = max(0.0, (total * total) / (z_crit * z_crit) - studies.k)
    implied = fsn / studies.k
    return FsnReport(
        fsn=fsn,
        fsn_floor=math.floor(fsn),
        stouffer_z=stouffer_z(studies),
        implied_r=implied,
        implied_label=classify_ratio(implied),
    )


def implied_ratio(fsn: float, k: int) -> float:
    """Ratio fsn / k implied by an already-reported fail-safe number.

    Useful when a published (k, fsn) pair is known but the underlying
    z-scores are not.
    """
    fsn = float(fsn)
    if not math.isfinite(fsn) or fsn < 0.0:
        raise ValueError(f"fsn must be >= 0, got {fsn!r}")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return fsn / k


def darlington_total(k: int, alpha: float) -> float:
    """Total study count k / alpha if every null were true.

    Published studies are then exactly the fraction alpha that reached
    significance by chance, so k published imply k / alpha performed;
    alpha = 0 would make the total infinite and is rejected.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    alpha = float(alpha)
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha!r}")
    return k / alpha


@dataclass(frozen=True)
class UnpublishedEstimate:
    """Model-implied unpublished count and total, given k published studies."""

    unpublished: float
    total: float

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.total)


def model_unpublished(k: int, model: StepSelectionModel) -> UnpublishedEstimate:
    """Scale a step model's ratio by the observed published count.

    Returns k * r unpublished and k * (1 + r) total. The unbounded ratio
    (alpha = beta = 0) propagates as infinite estimates rather than an
    error. With beta = 0 the total k * (1 + r) coincides with
    :func:`darlington_total`, since 1 + r = 1/p = 1/alpha there.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    stats = ratio_step(model)
    if stats.unbounded:
        return UnpublishedEstimate(unpublished=math.inf, total=math.inf)
    return UnpublishedEstimate(
        unpublished=k * stats.r,
        total=k * (1.0 + stats.r),
    )
