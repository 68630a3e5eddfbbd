"""All lowest common ancestors of k pairs, obtained by pruning junction sets."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Digraph, ReachabilityMatrix, reachability, validate_dag
from .junction import junctions_of_pairs


@dataclass
class LcaReport:
    u: str
    v: str
    lcas: list[str] | None = None
    junctions: list[str] | None = None
    error: str | None = None


def lowest_junctions(junctions: Sequence[int], reach: ReachabilityMatrix) -> list[int]:
    """Keep the junctions from which no other junction is reachable."""
    mask = 0
    for s in junctions:
        mask |= 1 << s
    return [s for s in junctions if reach.row(s) & mask == 1 << s]


def lcas_of_pairs(
    g: Digraph, pairs: Sequence[tuple[str, str]], jobs: int | None = None
) -> list[LcaReport]:
    reach = reachability(g, validate_dag(g))
    out = []
    for rep in junctions_of_pairs(g, pairs, jobs=jobs):
        if rep.error is not None:
            out.append(LcaReport(rep.u, rep.v, error=rep.error))
            continue
        ids = [g.index[lab] for lab in rep.junctions]
        lcas = sorted(g.labels[s] for s in lowest_junctions(ids, reach))
        out.append(LcaReport(rep.u, rep.v, lcas=lcas, junctions=rep.junctions))
    return out
