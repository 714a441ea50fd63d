"""Seeded Monte Carlo oracle for the selection models.

Each simulated study draws a score from the configured density and is
published with the selection function's probability at that score. The
density only matters through the interval it assigns the score to, so
the draw is carried out in probability space: the score z = quantile(u)
of a uniform u lands in interval k exactly when u lands between the
interval's cumulative-mass cut points, which are the CDF values of its
breakpoints. One position uniform and one acceptance uniform are
consumed per study, always, which keeps the stream layout fixed and the
outcome reproducible bit-for-bit for a given seed.

Two interchangeable backends execute the loop: a compiled kernel
(``filedrawer._mc_kernel``, Cython) and a vectorized numpy fallback.
They implement the identical protocol (:mod:`filedrawer._rng`) and
return identical counts; the kernel is preferred when importable, and
``FILEDRAWER_PURE=1`` in the environment forces the fallback.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace
from typing import Sequence, Union

import numpy as np

from ._rng import normalize_seed, subseed
from .core import StepSelectionModel
from .gaussian import DensitySpec, TailConvention, discretize_density
from .piecewise import MASS_SUM_TOLERANCE, PiecewiseSelectionModel

SelectionModel = Union[StepSelectionModel, PiecewiseSelectionModel]

#: Column order of the CSV emitted for outcomes.
CSV_COLUMNS = ("n", "seed", "published", "unpublished", "p_hat", "r_hat", "se_p")


def _load_backend():
    if not os.environ.get("FILEDRAWER_PURE"):
        try:
            from . import _mc_kernel

            return _mc_kernel
        except ImportError:
            pass
    from . import _mc_fallback

    return _mc_fallback


_backend = _load_backend()


def active_backend() -> str:
    """Name of the Monte Carlo backend in use: "cython" or "numpy"."""
    return _backend.BACKEND_NAME


@dataclass(frozen=True)
class SimulationConfig:
    """One reproducible run: sample size, seed, selection and density.

    A step selection is located through its tail mass and the tail
    convention; a piecewise selection may carry explicit breakpoints, in
    which case the density discretized at those breakpoints must
    reproduce the model's masses.
    """

    n_studies: int
    seed: int
    selection: SelectionModel
    tails: TailConvention = TailConvention.ONE_SIDED_UPPER
    breakpoints: tuple[float, ...] | None = None
    density: DensitySpec = field(default_factory=DensitySpec.standard_normal)

    def __post_init__(self) -> None:
        if not isinstance(self.n_studies, int) or self.n_studies < 1:
            raise ValueError(f"n_studies must be >= 1, got {self.n_studies!r}")
        if not isinstance(self.seed, int):
            raise ValueError(f"seed must be an integer, got {self.seed!r}")
        if self.breakpoints is not None:
            object.__setattr__(
                self, "breakpoints", tuple(float(b) for b in self.breakpoints)
            )
        if isinstance(self.selection, StepSelectionModel):
            if self.breakpoints is not None:
                raise ValueError(
                    "a step selection takes no breakpoints; "
                    "its threshold is located by alpha and the tail convention"
                )
        elif isinstance(self.selection, PiecewiseSelectionModel):
            if self.breakpoints is not None:
                m = self.selection.m
                if len(self.breakpoints) != m - 1:
                    raise ValueError(
                        f"{m} intervals need {m - 1} breakpoints, "
                        f"got {len(self.breakpoints)}"
                    )
                derived = discretize_density(self.density, self.breakpoints)
                drift = max(
                    abs(a - b) for a, b in zip(derived, self.selection.masses)
                )
                if drift > MASS_SUM_TOLERANCE:
                    raise ValueError(
                        "density discretized at the breakpoints does not "
                        f"reproduce the model masses (max drift {drift:.3g})"
                    )
        else:
            raise ValueError(f"unsupported selection model: {self.selection!r}")


@dataclass(frozen=True)
class SimulationOutcome:
    """Counts and empirical rates of one run."""

    published: int
    unpublished: int
    p_hat: float
    r_hat: float
    se_p: float

    @property
    def n_studies(self) -> int:
        return self.published + self.unpublished


def _partition(config: SimulationConfig) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Cumulative-probability cut points and per-interval acceptance probs."""
    selection = config.selection
    if isinstance(selection, StepSelectionModel):
        alpha, beta = selection.alpha, selection.beta
        if config.tails is TailConvention.ONE_SIDED_UPPER:
            return (1.0 - alpha,), (beta, 1.0)
        return (0.5 * alpha, 1.0 - 0.5 * alpha), (1.0, beta, 1.0)
    if config.breakpoints is not None:
        if config.density.is_standard_normal:
            from .gaussian import phi_cdf

            cuts = tuple(phi_cdf(b) for b in config.breakpoints)
        else:
            cuts = tuple(config.density.cdf_values or ())
        return cuts, selection.probs
    running = 0.0
    cuts = []
    for mass in selection.masses[:-1]:
        running += mass
        cuts.append(running)
    return tuple(cuts), selection.probs


def analytic_p(config: SimulationConfig) -> float:
    """Exact publication probability of the configured selection."""
    cuts, probs = _partition(config)
    edges = (0.0, *cuts, 1.0)
    p = math.fsum(
        (edges[k + 1] - edges[k]) * probs[k] for k in range(len(probs))
    )
    return min(1.0, max(0.0, p))


def run_simulation(config: SimulationConfig) -> SimulationOutcome:
    """Simulate the configured run; deterministic for a fixed config."""
    cuts, probs = _partition(config)
    published = int(
        _backend.count_published(
            normalize_seed(config.seed),
            config.n_studies,
            np.asarray(cuts, dtype=np.float64),
            np.asarray(probs, dtype=np.float64),
        )
    )
    n = config.n_studies
    p_hat = published / n
    return SimulationOutcome(
        published=published,
        unpublished=n - published,
        p_hat=p_hat,
        r_hat=math.inf if published == 0 else (n - published) / published,
        se_p=math.sqrt(p_hat * (1.0 - p_hat) / n),
    )


@dataclass(frozen=True)
class SweepPoint:
    """One sweep element: the outcome, its seed, and the accuracy picture."""

    outcome: SimulationOutcome
    seed: int
    abs_error: float
    reference: float  # 1/sqrt(n), the expected error scale


def convergence_sweep(
    config: SimulationConfig, sizes: Sequence[int]
) -> list[SweepPoint]:
    """Run the configuration at each size with per-size derived sub-seeds.

    Element j runs with seed ``subseed(config.seed, j)`` so the streams
    are independent; the absolute error |p_hat - p| against the analytic
    publication probability is reported alongside the 1/sqrt(n) scale.
    """
    sizes = list(sizes)
    if not sizes:
        raise ValueError("sizes must be non-empty")
    p_true = analytic_p(config)
    points = []
    for j, size in enumerate(sizes):
        seed_j = subseed(config.seed, j)
        outcome = run_simulation(
            replace(config, n_studies=int(size), seed=seed_j)
        )
        points.append(
            SweepPoint(
                outcome=outcome,
                seed=seed_j,
                abs_error=abs(outcome.p_hat - p_true),
                reference=1.0 / math.sqrt(size),
            )
        )
    return points
