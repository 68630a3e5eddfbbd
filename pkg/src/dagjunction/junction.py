"""Single-source junction index and the k-pairs-all-junctions driver.

A vertex ``s`` is a junction of ``u != v`` when two directed paths, one from
``s`` to ``u`` and one from ``s`` to ``v``, share no vertex other than ``s``.
For a fixed ``s`` the index partitions the descendants of ``s`` into
disjoint sets so that ``s`` is a junction of ``u, v`` exactly when they fall
in different sets.  Building it touches each arc at most once.
"""

from __future__ import annotations

import os
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arborescence import Arborescence, build_arborescence
from .graph import Digraph, validate_dag



class RepresentativeInvariantError(AssertionError):
    """A debug check on the representative array failed during a build."""


@dataclass
class BuildStats:
    arcs_examined: int = 0
    representatives: int = 0


@dataclass(eq=False)
class JunctionIndex:
    source: int
    arb: Arborescence
    p: list[int]
    stats: BuildStats = field(default_factory=BuildStats)


def init_representatives(arb: Arborescence) -> list[int]:
    """Tree-parent pointers, with the root and each of its children as roots."""
    p = list(arb.tree_parent)
    s = arb.root
    p[s] = s
    for c in arb.children[s]:
        p[c] = c
    return p


def find(p: list[int], x: int) -> int:
    root = x
    while p[root] != root:
        root = p[root]
    while p[x] != root:
        p[x], x = root, p[x]
    return root


def single_junction_all_pairs(
    g: Digraph, idx: JunctionIndex, s: int, z: int, debug: bool = False
) -> None:
    """Assign representatives to every vertex below ``z`` in the arborescence.

    Scans the subtree of ``z`` by decreasing post number.  A scanned vertex
    ``w`` becomes a new representative when some in-neighbour sits in a
    different set than ``z``; its subtree is then handled by a nested scan
    rooted at ``w`` and skipped by the current one.  Otherwise ``w`` joins
    ``z``'s set.  The recursion runs on an explicit stack.
    """
    arb = idx.arb
    p = idx.p
    post, minpost = arb.post, arb.minpost
    in_tree = arb.in_tree
    vop = arb.vertex_of_post
    in_adj = g.in_adj
    stats = idx.stats
    examined = 0
    if debug:
        top_child = _root_child(arb, z)

    # frame: [scan root, post number of the next vertex to scan]
    stack = [[z, post[z] - 1]]
    while stack:
        frame = stack[-1]
        zz, pw = frame
        if pw < minpost[zz]:
            stack.pop()
            continue
        w = vop[pw]
        if debug:
            _check_scan_state(g, idx, top_child, zz, pw)
        pz = p[zz]
        split = False
        for t in in_adj[w]:
            examined += 1
            if not in_tree[t]:
                continue
            rt = p[t]
            if p[rt] != rt:
                if debug and t != s:
                    raise RepresentativeInvariantError(
                        f"in-neighbour {g.labels[t]} of {g.labels[w]} not yet resolved"
                    )
                rt = find(p, t)
            if rt != pz:
                split = True
                break
        if split:
            p[w] = w
            stats.representatives += 1
            frame[1] = minpost[w] - 1
            stack.append([w, pw - 1])
        else:
            p[w] = zz
            frame[1] = pw - 1
    stats.arcs_examined += examined


def build_junction_index(g: Digraph, s: int, debug: bool = False) -> JunctionIndex:
    arb = build_arborescence(g, s)
    idx = JunctionIndex(source=s, arb=arb, p=init_representatives(arb))
    kids = sorted(arb.children[s], key=arb.post.__getitem__, reverse=True)
    idx.stats.representatives = len(kids) + 1
    for c in kids:
        single_junction_all_pairs(g, idx, s, c, debug=debug)
    # flatten so queries are read-only
    p = idx.p
    for v in arb.vertex_of_post:
        find(p, v)
    if debug:
        _check_final(g, idx)
    return idx


def is_junction(idx: JunctionIndex, u: int, v: int) -> bool:
    if u == v:
        return False
    arb = idx.arb
    if not (arb.in_tree[u] and arb.in_tree[v]):
        return False
    s = idx.source
    if u == s or v == s:
        return True
    return idx.p[u] != idx.p[v]


def pairs_with_junction(idx: JunctionIndex) -> list[list[int]]:
    """Partition of the proper descendants of the source into sets.

    Classes come ordered by the post number of their representative; members
    of a class by decreasing post number.
    """
    arb = idx.arb
    p = idx.p
    groups: dict[int, list[int]] = {}
    for v in reversed(arb.vertex_of_post):
        if v != idx.source:
            groups.setdefault(p[v], []).append(v)
    return [groups[r] for r in sorted(groups, key=arb.post.__getitem__)]


def iter_junction_pairs(
    idx: JunctionIndex, labels: Sequence[str] | None = None
) -> Iterator[tuple[int, int]]:
    """Yield every pair ``(u, v)`` that has the source as a junction.

    Pairs come in lexicographic order of ``(key(u), key(v))`` with
    ``key(u) < key(v)``, where the key is the label if ``labels`` is given
    and the vertex index otherwise.  After an ``O(size log size)`` sort the
    cost is linear in the number of pairs produced.
    """
    members = list(idx.arb.vertex_of_post)
    if labels is None:
        members.sort()
    else:
        members.sort(key=labels.__getitem__)
    # the source is in a class of its own, which yields the (s, v) pairs
    cls = [idx.p[v] for v in members]
    k = len(members)
    # next_other[j]: first position after j whose class differs from cls[j]
    next_other = [k] * k
    for j in range(k - 2, -1, -1):
        next_other[j] = j + 1 if cls[j + 1] != cls[j] else next_other[j + 1]
    for i in range(k):
        ci = cls[i]
        j = i + 1
        while j < k:
            if cls[j] == ci:
                j = next_other[j]
                continue
            yield members[i], members[j]
            j += 1


@dataclass
class PairReport:
    u: str
    v: str
    junctions: list[str] | None = None
    error: str | None = None


def _resolve_pairs(g: Digraph, pairs: Sequence[tuple[str, str]]):
    reports = []
    resolved = []
    for i, (a, b) in enumerate(pairs):
        if a not in g.index or b not in g.index:
            missing = a if a not in g.index else b
            reports.append(PairReport(a, b, error=f"unknown vertex label {missing!r}"))
        else:
            reports.append(PairReport(a, b, junctions=[]))
            if a != b:
                resolved.append((i, g.index[a], g.index[b]))
    return reports, resolved


def _junction_hits(g: Digraph, resolved, sources) -> list[tuple[int, int]]:
    hits = []
    for s in sources:
        idx = build_junction_index(g, s)
        # is_junction inlined; this loop runs n * k times
        in_tree = idx.arb.in_tree
        p = idx.p
        for i, u, v in resolved:
            if in_tree[u] and in_tree[v] and (u == s or v == s or p[u] != p[v]):
                hits.append((i, s))
    return hits


def _worker(args):
    labels, arcs, resolved, sources = args
    return _junction_hits(Digraph(labels, arcs), resolved, sources)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("DAGJUNCTION_JOBS", "1")))
    except ValueError:
        return 1


def junctions_of_pairs(
    g: Digraph, pairs: Sequence[tuple[str, str]], jobs: int | None = None
) -> list[PairReport]:
    """All junctions of each labelled pair, one index build per source.

    Reports follow input order; each junction list is sorted by label.
    Unknown labels produce an error entry for that pair only.  ``jobs > 1``
    spreads the per-source builds over worker processes.
    """
    validate_dag(g)
    reports, resolved = _resolve_pairs(g, pairs)
    if resolved:
        jobs = default_jobs() if jobs is None else max(1, jobs)
        sources = list(range(g.n))
        if jobs == 1 or g.n < 2 * jobs:
            hits = _junction_hits(g, resolved, sources)
        else:
            chunks = [sources[k::jobs] for k in range(jobs)]
            payload = [(g.labels, g.arcs(), resolved, c) for c in chunks]
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                hits = [h for part in ex.map(_worker, payload) for h in part]
        for i, s in hits:
            reports[i].junctions.append(g.labels[s])
    for r in reports:
        if r.junctions:
            r.junctions.sort()
    return reports


def _root_child(arb: Arborescence, z: int) -> int:
    x = z
    while arb.tree_parent[x] != arb.root:
        x = arb.tree_parent[x]
    return x


def _check_scan_state(g: Digraph, idx: JunctionIndex, top_child: int, z: int, pw: int) -> None:
    arb = idx.arb
    p = idx.p
    lab = g.labels
    if p[z] != z:
        raise RepresentativeInvariantError(f"scan root {lab[z]} is not a representative")
    lo, hi = arb.minpost[top_child], arb.post[top_child]
    for q in range(lo, hi + 1):
        x = arb.vertex_of_post[q]
        if q > pw:
            r = p[x]
            if p[r] != r:
                raise RepresentativeInvariantError(
                    f"{lab[x]} points at {lab[r]}, which is not a representative"
                )
            if not arb.contains(r, x):
                raise RepresentativeInvariantError(
                    f"representative {lab[r]} of {lab[x]} is not its tree ancestor"
                )
        if not arb.contains(z, x) and p[x] == p[z]:
            raise RepresentativeInvariantError(
                f"{lab[x]} outside the subtree of {lab[z]} shares its set"
            )


def _check_final(g: Digraph, idx: JunctionIndex) -> None:
    arb = idx.arb
    p = idx.p
    top = arb.root_child_of()
    s = idx.source
    for v in arb.vertex_of_post:
        r = p[v]
        if p[r] != r or not arb.contains(r, v):
            raise RepresentativeInvariantError(f"bad final pointer for {g.labels[v]}")
        if v != s and top[r] != top[v]:
            raise RepresentativeInvariantError(
                f"{g.labels[v]} shares a set across root-child subtrees"
            )
