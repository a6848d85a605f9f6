"""Numerical blow-up time extraction by threshold crossing and grid doubling.

The crossing time is the first grid point where the component-magnitude sum
exceeds the configured overflow threshold. The grid is doubled until two
successive crossing times agree to within the coarser step or the refinement
budget runs out; the finest crossing and its step size are reported.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

import numpy as np

from .errors import DomainError, NonConvergenceError
from .solver import NonFinite, SolverConfig, SystemSpec, Trajectory, solve

__all__ = [
    "RefinementPolicy",
    "DetectionReport",
    "NoCrossing",
    "crossing_time",
    "detect",
]


@dataclass(frozen=True)
class RefinementPolicy:
    """budget = maximum number of grid doublings after the base run."""

    budget: int = 5

    def __post_init__(self):
        if not isinstance(self.budget, int) or self.budget < 0:
            raise DomainError(f"refinement budget must be a nonnegative int, got {self.budget}")


@dataclass(frozen=True)
class DetectionReport:
    t_num: float
    uncertainty: float
    runs: tuple[tuple[int, Optional[float]], ...]
    converged: bool


@dataclass(frozen=True)
class NoCrossing:
    horizon: float
    finest_n: int
    runs: tuple[tuple[int, Optional[float]], ...]


DetectionResult = Union[DetectionReport, NoCrossing]


def crossing_time(trajectory: Trajectory, threshold: float) -> Optional[float]:
    """First grid time where sum_i |x_i| exceeds threshold, None if never."""
    sums = np.abs(trajectory.states).sum(axis=1)
    hit = sums > threshold
    if not np.any(hit):
        return None
    k = int(np.argmax(hit))
    if k == 0:
        raise DomainError("initial state already exceeds the detection threshold")
    return float(trajectory.times[k])


def detect(
    spec: SystemSpec,
    base_config: SolverConfig,
    policy: RefinementPolicy = RefinementPolicy(),
) -> DetectionResult:
    """Estimate the blow-up time of spec's system on [0, T].

    Runs solve at N, 2N, 4N, ... and stops once two successive crossing
    times differ by less than the coarser run's step size. A completed
    finest run with no crossing yields NoCrossing rather than an error.
    """
    threshold = base_config.overflow_threshold
    runs: list[tuple[int, Optional[float]]] = []
    prev_crossing: Optional[float] = None
    crossing = None
    trajectory = None

    for level in range(policy.budget + 1):
        n = base_config.N * 2 ** level
        config = replace(base_config, N=n)
        trajectory = solve(spec, config)
        crossing = crossing_time(trajectory, threshold)
        runs.append((n, crossing))
        if crossing is not None and prev_crossing is not None:
            coarser_h = base_config.T / (n // 2)
            if abs(crossing - prev_crossing) < coarser_h:
                return DetectionReport(
                    t_num=crossing,
                    uncertainty=base_config.T / n,
                    runs=tuple(runs),
                    converged=True,
                )
        prev_crossing = crossing

    if crossing is None:
        if isinstance(trajectory.status, NonFinite):
            raise NonConvergenceError(
                "trajectory lost finiteness before any threshold crossing; "
                "the system may be outside the representable range"
            )
        return NoCrossing(
            horizon=base_config.T,
            finest_n=runs[-1][0],
            runs=tuple(runs),
        )
    return DetectionReport(
        t_num=crossing,
        uncertainty=base_config.T / runs[-1][0],
        runs=tuple(runs),
        converged=False,
    )
