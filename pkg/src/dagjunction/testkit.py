"""Seeded graph generators and the small fixture graphs used by the suites.

All randomness goes through :class:`SplitMix64` so a ``(family, n, params,
seed)`` tuple yields the same graph on any platform.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from .graph import Digraph

_MASK = (1 << 64) - 1


class SplitMix64:
    """Steele, Lea and Flood's SplitMix64 generator."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``; rejection keeps it unbiased."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, population: Sequence, k: int) -> list:
        pool = list(population)
        out = []
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
            out.append(pool[i])
        return out


def _labels(prefix: str, n: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(n)]


def gen_random_dag(n: int, arc_prob: float, seed: int) -> Digraph:
    """Random DAG: each forward arc of a random ranking kept with ``arc_prob``."""
    if not 0.0 <= arc_prob <= 1.0:
        raise ValueError("arc_prob must lie in [0, 1]")
    rng = SplitMix64(seed)
    rank = list(range(n))
    rng.shuffle(rank)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < arc_prob:
                arcs.append((rank[i], rank[j]))
    return Digraph(_labels("v", n), arcs)


def gen_random_dag_m(n: int, m: int, seed: int) -> Digraph:
    """Random DAG with exactly ``m`` forward arcs of a random ranking.

    Used by the benchmarks, where enumerating all ``n^2/2`` candidate arcs
    would dominate the run.
    """
    total = n * (n - 1) // 2
    if m > total:
        raise ValueError(f"m={m} exceeds {total} possible arcs")
    rng = SplitMix64(seed)
    rank = list(range(n))
    rng.shuffle(rank)
    chosen: set[tuple[int, int]] = set()
    arcs = []
    while len(arcs) < m:
        i, j = rng.below(n), rng.below(n)
        if i == j:
            continue
        if i > j:
            i, j = j, i
        if (i, j) not in chosen:
            chosen.add((i, j))
            arcs.append((rank[i], rank[j]))
    return Digraph(_labels("v", n), arcs)


def gen_worst_case(a: int, b: int) -> Digraph:
    """Complete bipartite layering: every top vertex points at every bottom one."""
    if a < 1 or b < 1:
        raise ValueError("layer sizes must be positive")
    labels = _labels("a", a) + _labels("b", b)
    return Digraph(labels, [(x, a + y) for x in range(a) for y in range(b)])


def gen_kinship(n: int, seed: int) -> Digraph:
    """Parent -> child network in birth order, at most two parents each."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = SplitMix64(seed)
    arcs = []
    for child in range(1, n):
        k = min(rng.below(3), child)
        for parent in sorted(rng.sample(range(child), k)):
            arcs.append((parent, child))
    return Digraph(_labels("p", n), arcs)


def gen_arborescence(n: int, seed: int, roots: int = 1) -> Digraph:
    """Random recursive forest; the first ``roots`` vertices are the roots."""
    rng = SplitMix64(seed)
    roots = max(1, min(roots, n))
    # each later vertex gets exactly one earlier parent, so trees never merge
    arcs = [(rng.below(i), i) for i in range(roots, n)]
    return Digraph(_labels("t", n), arcs)


def gen_path(n: int) -> Digraph:
    return Digraph(_labels("v", n), [(i, i + 1) for i in range(n - 1)])


def gen_star(n: int) -> Digraph:
    """One centre ``v0`` pointing at ``n - 1`` leaves."""
    return Digraph(_labels("v", n), [(0, i) for i in range(1, n)])


FAMILIES = ("random-dag", "worst-case-fig1", "kinship", "arborescence", "path", "star")


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    seed: int = 0
    params: dict = field(default_factory=dict, hash=False)

    def build(self) -> Digraph:
        return generate(self)


def generate(spec: GenSpec) -> Digraph:
    fam, n, seed, params = spec.family, spec.n, spec.seed, spec.params
    if fam == "random-dag":
        if "m" in params:
            return gen_random_dag_m(n, int(params["m"]), seed)
        return gen_random_dag(n, float(params.get("arc_prob", 0.3)), seed)
    if fam == "worst-case-fig1":
        a = int(params.get("a", n // 2))
        return gen_worst_case(a, int(params.get("b", n - a)))
    if fam == "kinship":
        return gen_kinship(n, seed)
    if fam == "arborescence":
        return gen_arborescence(n, seed, int(params.get("roots", 1)))
    if fam == "path":
        return gen_path(n)
    if fam == "star":
        return gen_star(n)
    raise ValueError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")


def shuffled(g: Digraph, seed: int) -> Digraph:
    """Same labelled graph with vertex numbering and arc order permuted."""
    rng = SplitMix64(seed)
    perm = list(range(g.n))
    rng.shuffle(perm)
    arcs = [(perm[u], perm[v]) for u, v in g.arcs()]
    rng.shuffle(arcs)
    labels = [""] * g.n
    for old, new in enumerate(perm):
        labels[new] = g.labels[old]
    return Digraph(labels, arcs)


# fixtures ------------------------------------------------------------------

def diamond() -> Digraph:
    return Digraph.from_labelled_arcs([("s", "a"), ("s", "b"), ("a", "t"), ("b", "t")])


def chain() -> Digraph:
    return Digraph.from_labelled_arcs([("s", "a"), ("a", "b")])


def star() -> Digraph:
    return Digraph.from_labelled_arcs([("s", "x"), ("s", "y"), ("s", "z")])


def stacked_diamond() -> Digraph:
    return Digraph.from_labelled_arcs(
        [("s", "a"), ("s", "b"), ("a", "t"), ("b", "t"),
         ("t", "c"), ("t", "d"), ("c", "q"), ("d", "q")]
    )


def two_junction_lca() -> Digraph:
    """``r`` and ``s`` are both junctions of ``(a, b)``; only ``s`` is lowest."""
    return Digraph.from_labelled_arcs(
        [("r", "s"), ("s", "a"), ("s", "b"), ("r", "a'"), ("a'", "a"),
         ("r", "b'"), ("b'", "b")]
    )


def fixtures() -> dict[str, Digraph]:
    return {
        "diamond": diamond(),
        "chain": chain(),
        "star": star(),
        "fig1-3x4": gen_worst_case(3, 4),
        "stacked-diamond": stacked_diamond(),
        "two-junction-lca": two_junction_lca(),
    }


SUITE_PROBS = (0.15, 0.3, 0.5)


def small_suite(count: int = 300, max_n: int = 10, seed: int = 2024) -> Iterator[tuple[str, Digraph]]:
    """Seeded random DAGs with ``2 <= n <= max_n`` cycling through SUITE_PROBS."""
    rng = SplitMix64(seed)
    for i in range(count):
        n = 2 + rng.below(max_n - 1)
        prob = SUITE_PROBS[i % len(SUITE_PROBS)]
        gseed = rng.next_u64()
        yield f"random-dag n={n} p={prob} seed={gseed}", gen_random_dag(n, prob, gseed)
