"""Upper bounds on the largest solution inside an instance.

Three bounds are used for pruning, evaluated cheapest first:

* ub2: min degree over S, plus one, plus the budget.
* ub3: |S| plus the longest prefix of candidates, ordered by non-neighbor
  count toward S, whose counts fit in the leftover budget.
* ub1: the coloring bound.  Candidates are partitioned into independent
  sets by a greedy coloring; within a class the j-th member (by
  non-neighbor count) is charged weight nn + j - 1, because picking j
  members of an independent set forces j(j-1)/2 internal non-edges on top
  of the ones toward S.  The bound is |S| plus the longest weight-sorted
  prefix that fits the leftover budget.

``ub_coloring_basic`` is the older per-class capped bound; it is kept only
for comparison (a dominance test and an optional CLI flag), never for
pruning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import SolverConfig
from .graph import DegeneracyInfo
from .instance import Instance

INF = math.inf


@dataclass
class ColoringPartition:
    """Disjoint independent-set classes covering the candidate set."""

    classes: list[list[int]]
    color_of: dict[int, int]

    @property
    def c(self) -> int:
        return len(self.classes)


def greedy_coloring(inst: Instance, info: DegeneracyInfo) -> ColoringPartition:
    """Color the candidate subgraph greedily in reverse peeling order.

    Each vertex takes the smallest color unused by its already-colored
    candidate neighbors; processing in reverse degeneracy order keeps the
    class count within degeneracy + 1.
    """
    rank = info.rank
    order = sorted(inst.cand, key=lambda v: -rank[v])
    color_of: dict[int, int] = {}
    classes: list[list[int]] = []
    adj = inst.graph.adj
    for v in order:
        used = {color_of[w] for w in adj[v] if w in color_of}
        color = 0
        while color in used:
            color += 1
        color_of[v] = color
        if color == len(classes):
            classes.append([v])
        else:
            classes[color].append(v)
    return ColoringPartition(classes=classes, color_of=color_of)


def max_clique_size_within_budget(k: int) -> int:
    """Largest s with s(s-1)/2 <= k, in exact integer arithmetic."""
    s = (1 + math.isqrt(8 * k + 1)) // 2
    while s * (s - 1) // 2 > k:
        s -= 1
    return s


def ub_coloring_basic(s_size: int, k: int, partition: ColoringPartition) -> int:
    """Per-class capped coloring bound (comparison only, not used to prune)."""
    cap = max_clique_size_within_budget(k)
    return s_size + sum(min(cap, len(cls)) for cls in partition.classes)


def ub1(inst: Instance, partition: ColoringPartition, k: int) -> int:
    """Improved coloring bound; linear in the candidate count plus k."""
    s_size = len(inst.s_stack)
    budget = k - inst.nonedges_in_s
    if budget < 0:
        return s_size
    deg_to_s = inst.deg_to_s
    # Weights above the budget can never extend the prefix, so they collapse
    # into one overflow bucket and the counting sort stays O(k) wide.
    overflow = budget + 1
    counts = [0] * (overflow + 1)
    for cls in partition.classes:
        nns = sorted(s_size - deg_to_s[v] for v in cls)
        for j, nn in enumerate(nns):
            w = nn + j
            if w > budget:
                # The rest of this class is at least as heavy.
                counts[overflow] += len(nns) - j
                break
            counts[w] += 1
    taken = 0
    remaining = budget
    for w in range(overflow):
        if not counts[w]:
            continue
        if w == 0:
            taken += counts[w]
            continue
        fit = min(counts[w], remaining // w)
        taken += fit
        remaining -= fit * w
        if fit < counts[w]:
            break
    return s_size + taken


def ub2(inst: Instance, k: int) -> float:
    """Min S-degree bound; +inf sentinel when S is empty (no constraint)."""
    if not inst.s_stack:
        return INF
    live_degree = inst.live_degree
    return min(live_degree[u] for u in inst.s_stack) + 1 + k


def ub3(inst: Instance, k: int) -> int:
    """Non-neighbor-prefix bound over candidates sorted by nn toward S."""
    s_size = len(inst.s_stack)
    budget = k - inst.nonedges_in_s
    if budget < 0:
        return s_size
    deg_to_s = inst.deg_to_s
    overflow = budget + 1
    counts = [0] * (overflow + 1)
    for v in inst.cand:
        nn = s_size - deg_to_s[v]
        counts[nn if nn <= budget else overflow] += 1
    taken = 0
    remaining = budget
    for nn in range(overflow):
        if not counts[nn]:
            continue
        if nn == 0:
            taken += counts[nn]
            continue
        fit = min(counts[nn], remaining // nn)
        taken += fit
        remaining -= fit * nn
        if fit < counts[nn]:
            break
    return s_size + taken


def combined_upper_bound(
    inst: Instance,
    config: SolverConfig,
    lb: int = -1,
    info: DegeneracyInfo | None = None,
) -> float:
    """Minimum over the enabled bounds, cheapest first.

    ub1 needs a fresh coloring of the candidate set, so it only runs when
    the cheaper bounds failed to drop at or below lb.
    """
    k = config.k
    best: float = INF
    if config.enable_ub2:
        best = min(best, ub2(inst, k))
    if config.enable_ub3:
        best = min(best, ub3(inst, k))
    if config.enable_ub1 and best > lb and info is not None and inst.cand:
        best = min(best, ub1(inst, greedy_coloring(inst, info), k))
    return best
