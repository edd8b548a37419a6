"""Vertex coverings of a forbidden graph and the induced-cover family they
generate, plus the minimum independent-cover size and color-criticality.

For a graph F and a bound p, the cover family collects the subgraphs F[S]
induced on every covering S (a set whose removal leaves F edgeless) with
|S| <= p, deduplicated up to isomorphism.  When no such covering exists the
family falls back to the single clique on p+1 vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .containment import GraphFamily
from .graphs import Graph, canonical_form, complete, induced, remove_edge, to_graph6
from .invariants import chromatic_number, connected_components

INFINITE = math.inf


def all_coverings(f: Graph, p: int) -> list[tuple[int, ...]]:
    """All vertex sets S with |S| <= p whose removal leaves f edgeless,
    ordered by (size, lexicographic).  S = V(f) counts when |V(f)| <= p."""
    if p < 0:
        raise ValueError(f"cover bound must be >= 0, got {p}")
    full = f.vertex_mask()
    out = []
    for size in range(min(p, f.n) + 1):
        for s in combinations(range(f.n), size):
            smask = 0
            for v in s:
                smask |= 1 << v
            rest = full & ~smask
            if all(f.adj[v] & rest == 0 for v in range(f.n) if rest >> v & 1):
                out.append(s)
    return out


def family_fp(f: Graph, p: int, label: str = "") -> GraphFamily:
    """The family {f[S] : S a covering of f, |S| <= p}, deduplicated up to
    isomorphism; {K_{p+1}} when f has no covering of size <= p."""
    covers = all_coverings(f, p)
    if not label:
        label = f"fp({to_graph6(canonical_form(f).graph)},{p})"
    if not covers:
        return GraphFamily([complete(p + 1)], label=label)
    return GraphFamily((induced(f, s) for s in covers), label=label)


@dataclass(frozen=True)
class CoveringReport:
    """Covers of size <= p of one graph and the family they induce."""

    graph: Graph
    p: int
    covers: tuple[tuple[int, ...], ...]
    family: GraphFamily
    fallback_used: bool

    def to_payload(self) -> dict:
        return {
            "graph": to_graph6(self.graph),
            "p": self.p,
            "covers": [list(s) for s in self.covers],
            "family_label": self.family.label,
            "family": [to_graph6(m) for m in self.family],
            "fallback_used": self.fallback_used,
        }


def covering_report(f: Graph, p: int, label: str = "") -> CoveringReport:
    covers = all_coverings(f, p)
    return CoveringReport(
        graph=f,
        p=p,
        covers=tuple(covers),
        family=family_fp(f, p, label=label),
        fallback_used=not covers,
    )


def p_of_f(f: Graph) -> int | float:
    """Minimum size of an independent covering: for bipartite f this is the
    smallest colour-class size summed per component; INFINITE when the
    chromatic number is at least 3."""
    color = [-1] * f.n
    total = 0
    for comp in connected_components(f):
        members = [v for v in range(f.n) if comp >> v & 1]
        if len(members) == 1:
            continue  # isolated vertices never need covering
        seed = members[0]
        color[seed] = 0
        frontier = [seed]
        sides = [0, 0]
        sides[0] += 1
        while frontier:
            v = frontier.pop()
            for u in range(f.n):
                if f.adj[v] >> u & 1:
                    if color[u] == -1:
                        color[u] = color[v] ^ 1
                        sides[color[u]] += 1
                        frontier.append(u)
                    elif color[u] == color[v]:
                        return INFINITE  # odd cycle
        total += min(sides)
    return total


def is_color_critical(f: Graph) -> bool:
    """True iff deleting some single edge lowers the chromatic number."""
    edges = list(f.edges())
    if not edges:
        return False
    chi = chromatic_number(f)
    return any(chromatic_number(remove_edge(f, u, v)) < chi for u, v in edges)
