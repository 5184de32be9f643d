"""Instance-level reduction rules applied at every search node.

Rule vocabulary (lb is the size of the best solution found so far):

* rr1  excess removal: drop a candidate whose addition would push the
  partial solution past the non-edge budget.
* rr2  high-degree absorption: greedily move into S a candidate adjacent to
  all but at most one live vertex, provided it stays within budget.
* rr3  degree-sequence rule: drop candidates that cannot appear in any
  solution larger than lb, judged by their non-neighbor counts toward S.
* rr4  second-order rule: drop a candidate v when a pairwise bound with the
  most recently absorbed S member u already caps solutions through v at lb.
* rr5  low-degree rule: peel the live graph to its (lb - k)-core; if a
  member of S peels away the whole instance is hopeless and gets pruned.

After :func:`rr1_rr2_fixpoint` every surviving candidate stays within budget
and has at least two live non-neighbors; the search engine's complexity
argument leans on that post-state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .instance import CANDIDATE, IN_S, REMOVED, Instance


@dataclass
class ReductionLog:
    """Replayable record of rule effects: (rule, action, vertex) triples."""

    actions: list[tuple[str, str, int]] = field(default_factory=list)
    pruned: bool = False

    def removed(self, rule: str | None = None) -> list[int]:
        return [v for r, a, v in self.actions if a == "remove" and (rule is None or r == rule)]

    def absorbed(self) -> list[int]:
        return [v for _, a, v in self.actions if a == "add"]

    def replay(self, inst: Instance) -> None:
        """Apply the logged actions to an equivalent pre-state instance."""
        for _, action, v in self.actions:
            if action == "add":
                inst.add_to_s(v)
            elif action == "remove":
                inst.remove_vertex(v)


@dataclass(frozen=True)
class PairCounters:
    """Candidate split relative to a pair (u in S, v candidate): common
    neighbors, common non-neighbors, and exclusive neighbors of one side,
    all counted over the candidates other than v."""

    cn: int
    cnon: int
    xn: int


def pair_counters(inst: Instance, u: int, v: int) -> PairCounters:
    """Reference computation of the rr4 counters via explicit set algebra."""
    others = inst.cand - {v}
    nu = {w for w in inst.graph.adj[u] if w in others}
    nv = {w for w in inst.graph.adj[v] if w in others}
    cn = len(nu & nv)
    xn = len(nu ^ nv)
    cnon = len(others) - cn - xn
    return PairCounters(cn=cn, cnon=cnon, xn=xn)


def rr1_rr2_fixpoint(inst: Instance, k: int, log: ReductionLog | None = None) -> ReductionLog:
    """Run rr1 and rr2 until neither fires.

    rr2 absorbs one vertex per round, preferring the candidate with the most
    non-neighbors already in S (ties to the smallest id) so the budget is
    consumed early and rr1 strengthens sooner.
    """
    log = log if log is not None else ReductionLog()
    actions = log.actions
    deg_to_s = inst.deg_to_s
    live_degree = inst.live_degree
    while True:
        changed = False
        s_size = len(inst.s_stack)
        budget = k - inst.nonedges_in_s
        violators = [v for v in inst.cand if s_size - deg_to_s[v] > budget]
        if violators:
            violators.sort()
            for v in violators:
                inst.remove_vertex(v)
                actions.append(("rr1", "remove", v))
            changed = True
        n_live = inst.n_live()
        s_size = len(inst.s_stack)
        budget = k - inst.nonedges_in_s
        best = None
        best_key = None
        for v in inst.cand:
            if live_degree[v] >= n_live - 2:
                nn = s_size - deg_to_s[v]
                if nn <= budget:
                    key = (-nn, v)
                    if best is None or key < best_key:
                        best = v
                        best_key = key
        if best is not None:
            inst.add_to_s(best)
            actions.append(("rr2", "add", best))
            changed = True
        if not changed:
            return log


def rr3(inst: Instance, k: int, lb: int, log: ReductionLog | None = None) -> ReductionLog:
    """One linear pass of the degree-sequence rule.

    Candidates are ordered by non-neighbor count toward S (counting sort,
    ties by id).  Beyond position lb - |S|, a candidate whose count exceeds
    the leftover budget after the prefix cannot join any solution of size
    > lb and is removed.
    """
    log = log if log is not None else ReductionLog()
    s_size = len(inst.s_stack)
    r = lb - s_size
    if r < 0:
        raise ValueError("rr3 requires lb >= |S|")
    num = len(inst.cand)
    if r >= num or num == 0:
        return log
    deg_to_s = inst.deg_to_s
    buckets: list[list[int]] = [[] for _ in range(s_size + 1)]
    for v in inst.candidates_sorted():
        buckets[s_size - deg_to_s[v]].append(v)
    ordered: list[int] = []
    for bucket in buckets:
        ordered.extend(bucket)
    prefix = sum(s_size - deg_to_s[v] for v in ordered[:r])
    budget = k - inst.nonedges_in_s - prefix
    doomed = [v for v in ordered[r:] if s_size - deg_to_s[v] > budget]
    for v in doomed:
        inst.remove_vertex(v)
        log.actions.append(("rr3", "remove", v))
    return log


def rr4(inst: Instance, k: int, lb: int, u: int, log: ReductionLog | None = None) -> ReductionLog:
    """One pass of the second-order rule against u, the most recently
    absorbed member of S.

    Every candidate is judged once against the entry snapshot (removals are
    collected first, then applied), which keeps the pass linear and makes
    the outcome independent of iteration order.
    """
    log = log if log is not None else ReductionLog()
    if inst.status[u] != IN_S:
        raise ValueError(f"rr4 pivot {u} is not in S")
    cand = inst.cand
    num = len(cand)
    if num == 0:
        return log
    status = inst.status
    deg_to_s = inst.deg_to_s
    live_degree = inst.live_degree
    s_size = len(inst.s_stack)
    base_nonedges = inst.nonedges_in_s
    umark = {w for w in inst.graph.adj[u] if status[w] == CANDIDATE}
    cu_all = len(umark)
    adj = inst.graph.adj
    doomed = []
    for v in cand:
        nn_v = s_size - deg_to_s[v]
        budget = k - base_nonedges - nn_v
        if budget < 0:
            continue  # rr1 territory; only reachable when called standalone
        cn = 0
        for w in adj[v]:
            if w in umark:
                cn += 1
        a_size = cu_all - (1 if v in umark else 0)
        deg_cand_v = live_degree[v] - deg_to_s[v]
        xn = (a_size - cn) + (deg_cand_v - cn)
        cnon = (num - 1) - cn - xn
        bound = (s_size + 1) + cn + min(budget, xn) + min(cnon, max(0, (budget - xn) // 2))
        if bound <= lb:
            doomed.append(v)
    doomed.sort()
    for v in doomed:
        inst.remove_vertex(v)
        log.actions.append(("rr4", "remove", v))
    return log


def rr5(inst: Instance, k: int, lb: int, log: ReductionLog | None = None) -> ReductionLog:
    """Peel live vertices of degree below lb - k.

    Candidates are removed outright; if a member of S falls below the
    threshold the instance cannot reach size lb + 1 and is marked pruned.
    """
    log = log if log is not None else ReductionLog()
    threshold = lb - k
    if threshold <= 0:
        return log
    status = inst.status
    live_degree = inst.live_degree
    queue = [v for v in inst.live_vertices() if live_degree[v] < threshold]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        if status[v] == IN_S:
            log.actions.append(("rr5", "prune", v))
            log.pruned = True
            return log
        if status[v] != CANDIDATE:
            continue
        inst.remove_vertex(v)
        log.actions.append(("rr5", "remove", v))
        for w in inst.graph.adj[v]:
            if status[w] != REMOVED and live_degree[w] == threshold - 1:
                queue.append(w)
    return log


def apply_all(
    inst: Instance,
    k: int,
    lb: int,
    last_added: int | None = None,
    *,
    use_rr3: bool = True,
    use_rr4: bool = True,
    log: ReductionLog | None = None,
) -> ReductionLog:
    """Per-node reduction schedule.

    rr1/rr2 run to fixpoint first so the cheap rules see a consistent
    instance, then rr4 (if a pivot is available), rr3, rr5, and a final
    rr1/rr2 fixpoint because the lb-based rules can re-enable the cheap
    ones.  A prune short-circuits the rest.  Rules that need lb use
    max(lb, |S|): S is itself a valid solution the engine records, so
    solutions no larger than it are never interesting.
    """
    log = log if log is not None else ReductionLog()
    rr1_rr2_fixpoint(inst, k, log)
    effective_lb = max(lb, len(inst.s_stack))
    if use_rr4 and last_added is not None and inst.status[last_added] == IN_S:
        rr4(inst, k, effective_lb, last_added, log)
    if use_rr3:
        rr3(inst, k, effective_lb, log)
    rr5(inst, k, effective_lb, log)
    if log.pruned:
        return log
    rr1_rr2_fixpoint(inst, k, log)
    return log
