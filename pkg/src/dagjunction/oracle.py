"""Ground truth for junction and LCA queries.

Two independent routes:

* a unit-vertex-capacity max-flow (node splitting), which is polynomial and
  used for sweeps;
* brute-force enumeration of path pairs, exponential, used only to check
  the flow route on tiny graphs.

Neither shares code with the arborescence / representative machinery.
"""

from __future__ import annotations

from collections import deque

from .graph import Digraph, descendants


class SplitFlowNet:
    """Flow network for "two paths from s to u and v sharing only s".

    Every vertex ``x`` becomes ``x_in -> x_out`` with capacity 1; the source
    is only ``s_out`` and carries unlimited flow.  Arc ``a -> b`` becomes
    ``a_out -> b_in`` with capacity 1, and ``u_out``, ``v_out`` each feed the
    sink with capacity 1.  Sinking from the ``out`` side makes an endpoint
    consume its own unit of vertex capacity, so it can not also sit inside
    the other path.
    """

    def __init__(self, g: Digraph, s: int, u: int, v: int):
        self.n = g.n
        self.source = 2 * s + 1
        self.sink = 2 * g.n
        cap: dict[int, dict[int, int]] = {}
        self.cap = cap

        def add(a: int, b: int, c: int) -> None:
            cap.setdefault(a, {})
            cap.setdefault(b, {})
            cap[a][b] = cap[a].get(b, 0) + c
            cap[b].setdefault(a, 0)

        # only vertices reachable from s can carry flow
        live = descendants(g, s)
        for x in live:
            if x != s:
                add(2 * x, 2 * x + 1, 1)
            for y in g.out_adj[x]:
                if y != s:
                    add(2 * x + 1, 2 * y, 1)
        for t in (u, v):
            if t in live:
                add(2 * t + 1, self.sink, 1)
        cap.setdefault(self.source, {})
        cap.setdefault(self.sink, {})

    def _augment(self) -> bool:
        cap = self.cap
        prev = {self.source: self.source}
        queue = deque([self.source])
        while queue and self.sink not in prev:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if self.sink not in prev:
            return False
        b = self.sink
        while b != self.source:
            a = prev[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        return True

    def max_flow(self, limit: int = 2) -> int:
        flow = 0
        while flow < limit and self._augment():
            flow += 1
        return flow


def oracle_is_junction(g: Digraph, s: int, u: int, v: int) -> bool:
    if u == v:
        return False
    if s == u:
        return v in descendants(g, s)
    if s == v:
        return u in descendants(g, s)
    return SplitFlowNet(g, s, u, v).max_flow() == 2


def oracle_junction_set(g: Digraph, u: int, v: int) -> set[int]:
    if u == v:
        return set()
    return {s for s in range(g.n) if oracle_is_junction(g, s, u, v)}


def oracle_lca_set(g: Digraph, u: int, v: int) -> set[int]:
    junc = oracle_junction_set(g, u, v)
    return {s for s in junc if not (descendants(g, s) - {s}) & junc}


class InstanceTooLarge(ValueError):
    pass


def _all_paths(g: Digraph, s: int, t: int) -> list[tuple[int, ...]]:
    paths = []
    stack = [(s,)]
    while stack:
        path = stack.pop()
        last = path[-1]
        if last == t:
            paths.append(path)
            continue
        for w in g.out_adj[last]:
            stack.append(path + (w,))
    return paths


def enumerate_disjoint_path_pair(
    g: Digraph, s: int, u: int, v: int, max_size: int = 12
) -> bool:
    """Exhaustively search for paths ``s~>u`` and ``s~>v`` meeting only at ``s``.

    Paths of length zero count, so ``s == u`` reduces to reachability of
    ``v``.  Refuses graphs where ``s`` has more than ``max_size`` descendants.
    """
    if u == v:
        return False
    below = descendants(g, s)
    if len(below) > max_size:
        raise InstanceTooLarge(f"{len(below)} descendants exceeds limit {max_size}")
    to_u = [set(P) for P in _all_paths(g, s, u)]
    to_v = [set(Q) for Q in _all_paths(g, s, v)]
    return any(P & Q == {s} for P in to_u for Q in to_v)
