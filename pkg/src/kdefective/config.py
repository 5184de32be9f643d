"""Run parameters and result containers for the solver."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class SolverConfig:
    """Knobs for one solve.

    The enable_* toggles exist so the solver can be run with individual
    techniques switched off (for ablation runs and the matching CLI flags);
    every combination returns the same optimal size, only the work differs.
    ``seed`` is carried for randomized test harnesses and never read by the
    solver itself.
    """

    k: int
    time_limit: float | None = None
    enable_ub1: bool = True
    enable_ub2: bool = True
    enable_ub3: bool = True
    enable_rr3: bool = True
    enable_rr4: bool = True
    enable_rr6: bool = True
    use_degen_opt: bool = True
    node_check_interval: int = 1024
    seed: int | None = None
    debug_checks: bool = False

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if self.node_check_interval < 1:
            raise ValueError("node_check_interval must be at least 1")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive when set")


@dataclass
class PreprocessReport:
    """Outcome of the initial-solution and global-shrink phase."""

    initial_clique: list[int]
    initial_size: int
    reduced_n: int
    reduced_m: int
    elapsed: float


@dataclass
class SearchStats:
    """Counters gathered during one solve."""

    nodes: int = 0
    max_depth: int = 0
    rule_fires: dict[str, int] = field(
        default_factory=lambda: {
            "rr1": 0,
            "rr2": 0,
            "rr3": 0,
            "rr4": 0,
            "rr5": 0,
            "prune_bound": 0,
            "prune_rr5": 0,
        }
    )
    improvements: list[int] = field(default_factory=list)
    elapsed: float = 0.0
    preprocess: PreprocessReport | None = None


@dataclass
class SolverResult:
    """Best solution found plus how the search went.

    ``optimal`` is False only when the time limit expired; in that case
    ``best`` is still a valid solution, just not necessarily a maximum one.
    """

    best: list[int]
    size: int
    optimal: bool
    stats: SearchStats
