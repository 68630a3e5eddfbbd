"""Directed graph container, edge-list I/O, acyclicity check and reachability."""

from __future__ import annotations

from collections.abc import Iterable, Sequence


class ParseError(ValueError):
    """Raised for malformed edge-list input; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CycleError(ValueError):
    """Raised by :func:`validate_dag` when the graph has a directed cycle.

    ``cycle`` is a closed vertex sequence ``v0, v1, ..., v0``.
    """

    def __init__(self, cycle: list[int], labels: Sequence[str]):
        self.cycle = cycle
        self.labels = [labels[v] for v in cycle]
        super().__init__("cycle: " + " -> ".join(self.labels))


class Digraph:
    """Immutable simple digraph on vertices ``0..n-1`` with string labels.

    Adjacency lists keep arc insertion order, which fixes the DFS visit order
    used downstream.
    """

    __slots__ = ("labels", "index", "out_adj", "in_adj", "m")

    def __init__(self, labels: Iterable[str], arcs: Iterable[tuple[int, int]]):
        self.labels: tuple[str, ...] = tuple(labels)
        self.index: dict[str, int] = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("duplicate vertex label")
        n = len(self.labels)
        out_adj: list[list[int]] = [[] for _ in range(n)]
        in_adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {self.labels[u]!r}")
            if (u, v) in seen:
                continue
            seen.add((u, v))
            out_adj[u].append(v)
            in_adj[v].append(u)
        self.out_adj: tuple[tuple[int, ...], ...] = tuple(map(tuple, out_adj))
        self.in_adj: tuple[tuple[int, ...], ...] = tuple(map(tuple, in_adj))
        self.m = len(seen)

    @classmethod
    def from_labelled_arcs(cls, arcs: Iterable[tuple[str, str]]) -> Digraph:
        """Build from label pairs; vertices are numbered by first appearance."""
        index: dict[str, int] = {}
        idx_arcs = []
        for a, b in arcs:
            ia = index.setdefault(a, len(index))
            ib = index.setdefault(b, len(index))
            idx_arcs.append((ia, ib))
        return cls(index, idx_arcs)

    @property
    def n(self) -> int:
        return len(self.labels)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.out_adj[u]]

    def labelled_arcs(self) -> set[tuple[str, str]]:
        lab = self.labels
        return {(lab[u], lab[v]) for u, v in self.arcs()}

    def vertex(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise KeyError(f"unknown vertex label {label!r}") from None

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> Digraph:
    """Parse ``"<src> <dst>"`` lines; ``#`` lines and blank lines are skipped."""
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected '<src> <dst>', got {raw!r}")
        if parts[0] == parts[1]:
            raise ParseError(lineno, f"self-loop on {parts[0]!r}")
        arcs.append((parts[0], parts[1]))
    return Digraph.from_labelled_arcs(arcs)


def serialize_edge_list(g: Digraph) -> str:
    lines = sorted(f"{a} {b}" for a, b in g.labelled_arcs())
    return "".join(line + "\n" for line in lines)


def validate_dag(g: Digraph) -> list[int]:
    """Return a topological order of ``g`` or raise :class:`CycleError`."""
    n = g.n
    indeg = [len(g.in_adj[v]) for v in range(n)]
    order = [v for v in range(n) if indeg[v] == 0]
    i = 0
    while i < len(order):
        for w in g.out_adj[order[i]]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
        i += 1
    if len(order) == n:
        return order
    raise CycleError(_find_cycle(g, [d > 0 for d in indeg]), g.labels)


def _find_cycle(g: Digraph, alive: list[bool]) -> list[int]:
    # Every vertex left by Kahn's pass has a live in-neighbour, so walking
    # backwards must eventually revisit a vertex.
    start = next(v for v in range(g.n) if alive[v])
    pos: dict[int, int] = {}
    walk = []
    v = start
    while v not in pos:
        pos[v] = len(walk)
        walk.append(v)
        v = next(t for t in g.in_adj[v] if alive[t])
    cycle = walk[pos[v]:]
    cycle.reverse()
    k = cycle.index(min(cycle))
    cycle = cycle[k:] + cycle[:k]
    return cycle + [cycle[0]]


class ReachabilityMatrix:
    """Transitive closure stored as one Python-int bitset per vertex.

    Bit ``v`` of ``rows[u]`` is set iff ``v`` is reachable from ``u``
    (every vertex reaches itself).
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[int]):
        self.rows = tuple(rows)

    def reaches(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1

    def __getitem__(self, uv: tuple[int, int]) -> bool:
        return self.reaches(*uv)

    def row(self, u: int) -> int:
        return self.rows[u]

    def members(self, u: int) -> list[int]:
        bits = self.rows[u]
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def __len__(self) -> int:
        return len(self.rows)


def reachability(g: Digraph, order: Sequence[int] | None = None) -> ReachabilityMatrix:
    if order is None:
        order = validate_dag(g)
    rows = [0] * g.n
    for u in reversed(order):
        bits = 1 << u
        for v in g.out_adj[u]:
            bits |= rows[v]
        rows[u] = bits
    return ReachabilityMatrix(rows)


def descendants(g: Digraph, s: int) -> set[int]:
    seen = {s}
    stack = [s]
    while stack:
        for w in g.out_adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen
