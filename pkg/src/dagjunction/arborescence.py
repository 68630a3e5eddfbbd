"""Depth-first arborescence from a source vertex, with post-order bookkeeping
and classification of the arcs that stay inside it."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Digraph


class ArcClass(enum.Enum):
    TREE = "tree"
    EXTERNAL_DESCENDANT = "external-descendant"
    INTERNAL_DESCENDANT = "internal-descendant"
    EXTERNAL_CROSSING = "external-crossing"
    INTERNAL_CROSSING = "internal-crossing"
    OUTSIDE = "outside"


@dataclass(eq=False)
class Arborescence:
    """DFS tree rooted at ``root`` spanning every descendant of it.

    Per-vertex arrays have length ``n``; entries for vertices outside the
    tree are ``-1`` (``in_tree`` is False).  ``post`` numbers are local to
    this tree and run ``0..size-1``, with ``post[root] == size - 1``.
    """

    root: int
    in_tree: list[bool]
    tree_parent: list[int]
    children: list[list[int]]
    post: list[int]
    minpost: list[int]
    vertex_of_post: list[int]

    @property
    def size(self) -> int:
        return len(self.vertex_of_post)

    def contains(self, u: int, v: int) -> bool:
        """True iff ``v`` lies in the subtree rooted at ``u`` (inclusive)."""
        pv = self.post[v]
        return self.in_tree[u] and self.in_tree[v] and self.minpost[u] <= pv <= self.post[u]

    def root_child_of(self) -> list[int]:
        """Map each tree vertex to the child of the root whose subtree holds it.

        The root maps to itself; vertices outside the tree map to -1.
        """
        top = [-1] * len(self.post)
        root = self.root
        top[root] = root
        vop = self.vertex_of_post
        # parents carry larger post numbers, so descending order is top-down
        for p in range(len(vop) - 2, -1, -1):
            v = vop[p]
            par = self.tree_parent[v]
            top[v] = v if par == root else top[par]
        return top


def build_arborescence(g: Digraph, s: int) -> Arborescence:
    n = g.n
    out_adj = g.out_adj
    in_tree = [False] * n
    tree_parent = [-1] * n
    post = [-1] * n
    minpost = [-1] * n
    children: list[list[int]] = [[] for _ in range(n)]
    vertex_of_post: list[int] = []

    in_tree[s] = True
    tree_parent[s] = s
    minpost[s] = 0
    stack = [(s, iter(out_adj[s]))]
    while stack:
        u, it = stack[-1]
        for w in it:
            if not in_tree[w]:
                in_tree[w] = True
                tree_parent[w] = u
                children[u].append(w)
                # subtree posts are contiguous, so the first one handed out
                # below w is the counter value at discovery
                minpost[w] = len(vertex_of_post)
                stack.append((w, iter(out_adj[w])))
                break
        else:
            stack.pop()
            post[u] = len(vertex_of_post)
            vertex_of_post.append(u)

    return Arborescence(
        root=s,
        in_tree=in_tree,
        tree_parent=tree_parent,
        children=children,
        post=post,
        minpost=minpost,
        vertex_of_post=vertex_of_post,
    )


def vertex_of(arb: Arborescence, p: int) -> int | None:
    """Vertex with post number ``p``; ``None`` stands for the dummy (post -1)."""
    if 0 <= p < len(arb.vertex_of_post):
        return arb.vertex_of_post[p]
    return None


def classify_arc(arb: Arborescence, top: list[int], u: int, v: int) -> ArcClass:
    if not (arb.in_tree[u] and arb.in_tree[v]):
        return ArcClass.OUTSIDE
    if arb.tree_parent[v] == u and v != arb.root:
        return ArcClass.TREE
    if u == arb.root:
        return ArcClass.EXTERNAL_DESCENDANT
    if arb.contains(u, v):
        return ArcClass.INTERNAL_DESCENDANT
    if top[u] != top[v]:
        return ArcClass.EXTERNAL_CROSSING
    return ArcClass.INTERNAL_CROSSING


def classify_arcs(g: Digraph, arb: Arborescence) -> dict[tuple[int, int], ArcClass]:
    top = arb.root_child_of()
    return {(u, v): classify_arc(arb, top, u, v) for u, v in g.arcs()}


def check_property1(g: Digraph, arb: Arborescence) -> list[str]:
    """Report violations of the post-order guarantees of a DFS arborescence.

    Checks, using only ``tree_parent`` for subtree membership (so a corrupted
    ``post`` array is caught rather than trusted):

    * every arc inside the tree goes from larger to smaller post number;
    * no arc leads from the subtree of a root child into the subtree of a
      root child with larger post number;
    * sibling subtrees under the root occupy disjoint post ranges ordered
      like their roots.
    """
    out: list[str] = []
    lab = g.labels
    members = [v for v in range(g.n) if arb.in_tree[v]]
    if len(members) <= 1:
        return out

    for u, v in g.arcs():
        if arb.in_tree[u] and arb.in_tree[v] and not arb.post[u] > arb.post[v]:
            out.append(f"arc {lab[u]}->{lab[v]}: post {arb.post[u]} <= {arb.post[v]}")

    root = arb.root
    top = {root: root}
    pending = [root]
    while pending:
        x = pending.pop()
        for c in arb.children[x]:
            top[c] = c if x == root else top[x]
            pending.append(c)

    for u, v in g.arcs():
        if u == root or u not in top or v not in top:
            continue
        a, b = top[u], top[v]
        if a != b and arb.post[a] < arb.post[b]:
            out.append(
                f"arc {lab[u]}->{lab[v]} enters subtree of {lab[b]} from "
                f"earlier-finished subtree of {lab[a]}"
            )

    span: dict[int, list[int]] = {}
    for v, c in top.items():
        if v == root:
            continue
        lo_hi = span.setdefault(c, [arb.post[v], arb.post[v]])
        lo_hi[0] = min(lo_hi[0], arb.post[v])
        lo_hi[1] = max(lo_hi[1], arb.post[v])
    kids = sorted(span, key=lambda c: arb.post[c])
    for c1, c2 in zip(kids, kids[1:]):
        if not span[c1][1] < span[c2][0]:
            out.append(
                f"post ranges of subtrees {lab[c1]} {span[c1]} and {lab[c2]} {span[c2]} overlap"
            )
    return out
