"""Isomorph-free exhaustive enumeration of forbidden-family-free graphs and
exact generalized Turán values with extremal witnesses.

Enumeration is level-synchronous over the edge count: the children of a
level are all one-edge extensions of its members, kept only when the new
edge creates no forbidden subgraph (freeness is monotone under edge
deletion, so this pruning is exact), then deduplicated by canonical form.
Each level is processed in sorted canonical order, so the stream - and
everything derived from it - is deterministic, with or without workers.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Iterator

from .containment import (
    GraphFamily,
    contains_subgraph,
    contains_subgraph_using_edge,
    minimalize,
)
from .covering import family_fp, p_of_f
from .graphs import Graph, _raw, canonical_form, from_graph6, to_graph6
from .invariants import count_cliques

HARD_CEILING = 10
ENV_CEILING = "MATCHTURAN_CEILING"


class CeilingError(ValueError):
    """Raised when an enumeration would exceed the configured ceiling."""


def resolve_ceiling(family: GraphFamily, ceiling: int | None = None) -> int:
    """Explicit argument, else the MATCHTURAN_CEILING env var, else 10 when
    the family prunes hard (some member on <= 4 vertices), else 9."""
    if ceiling is not None:
        return ceiling
    env = os.environ.get(ENV_CEILING)
    if env:
        return int(env)
    if any(m.n <= 4 for m in family):
        return 10
    return 9


def _is_plain_matching(m: Graph) -> bool:
    return m.edge_count() > 0 and all(row.bit_count() == 1 for row in m.adj)


def _has_matching(adj: tuple[int, ...], avail: int, k: int) -> bool:
    # early-exit search for k disjoint edges inside avail
    if k == 0:
        return True
    if avail.bit_count() < 2 * k:
        return False
    m = avail
    v = -1
    while m:
        b = m & -m
        c = b.bit_length() - 1
        if adj[c] & avail:
            v = c
            break
        m ^= b
    if v < 0:
        return False
    rest = avail & ~(1 << v)
    nb = adj[v] & avail
    while nb:
        b = nb & -nb
        nb ^= b
        if _has_matching(adj, rest & ~b, k - 1):
            return True
    return _has_matching(adj, rest, k)


def _edge_creates_member(
    child: Graph, members: list[Graph], u: int, v: int
) -> bool:
    for m in members:
        if m.n > child.n:
            continue
        if _is_plain_matching(m):
            # a new copy must use edge uv; the rest is a matching avoiding u, v
            rest = child.vertex_mask() & ~(1 << u) & ~(1 << v)
            if _has_matching(child.adj, rest, m.edge_count() - 1):
                return True
        elif contains_subgraph_using_edge(child, m, u, v):
            return True
    return False


def _expand_parents(
    n: int, parent_rows: list[tuple[int, ...]], member_rows: list[tuple[int, ...]]
) -> set[tuple[int, ...]]:
    members = [_raw(len(rows), rows) for rows in member_rows]
    # MATCHTURAN_DEBUG_PRUNING=1 cross-checks the incremental new-edge test
    # against a full containment scan on every child (slow, exact)
    debug = os.environ.get("MATCHTURAN_DEBUG_PRUNING") == "1"
    out: set[tuple[int, ...]] = set()
    for rows in parent_rows:
        for u in range(n):
            row_u = rows[u]
            for v in range(u + 1, n):
                if row_u >> v & 1:
                    continue
                child_rows = list(rows)
                child_rows[u] |= 1 << v
                child_rows[v] |= 1 << u
                child = _raw(n, child_rows)
                created = bool(members) and _edge_creates_member(child, members, u, v)
                if debug:
                    full = any(contains_subgraph(child, m) for m in members)
                    assert created == full, (
                        f"incremental pruning diverged on edge ({u},{v})"
                    )
                if created:
                    continue
                out.add(canonical_form(child).graph.adj)
    return out


def _expand_chunk(args: tuple) -> list[tuple[int, ...]]:
    n, parent_rows, member_rows = args
    return list(_expand_parents(n, parent_rows, member_rows))


def enumerate_free(
    n: int,
    family: GraphFamily,
    *,
    ceiling: int | None = None,
    workers: int = 1,
) -> Iterator[Graph]:
    """Yield exactly one representative per isomorphism class of
    family-free n-vertex graphs, in deterministic order (by edge count,
    then canonical adjacency)."""
    limit = resolve_ceiling(family, ceiling)
    if n > limit:
        raise CeilingError(f"n={n} exceeds enumeration ceiling {limit}")
    reduced = minimalize(family)
    if any(m.edge_count() == 0 and m.n <= n for m in reduced):
        return  # an edgeless member embeds into every n-vertex graph
    member_rows = [m.adj for m in reduced if m.n <= n]

    pool = None
    ctx = get_context("fork")
    if workers > 1:
        pool = ctx.Pool(workers)
    try:
        level: list[tuple[int, ...]] = [tuple([0] * n)]
        while level:
            for rows in level:
                yield _raw(n, rows)
            if pool is not None and len(level) >= 4 * workers:
                chunk = (len(level) + workers - 1) // workers
                args = [
                    (n, level[i : i + chunk], member_rows)
                    for i in range(0, len(level), chunk)
                ]
                merged: set[tuple[int, ...]] = set()
                for part in pool.map(_expand_chunk, args):
                    merged.update(part)
            else:
                merged = _expand_parents(n, level, member_rows)
            level = sorted(merged)
    finally:
        if pool is not None:
            pool.close()
            pool.join()


@dataclass(frozen=True)
class ExResult:
    """Exact maximum r-clique count over family-free n-vertex graphs,
    with every extremal graph up to isomorphism (as graph6)."""

    n: int
    r: int
    family_label: str
    value: int | None
    witnesses: tuple[str, ...]
    enumerated_count: int
    elapsed: float

    def to_payload(self) -> dict:
        # elapsed is a sidecar measurement, excluded from the deterministic payload
        return {
            "n": self.n,
            "r": self.r,
            "family": self.family_label,
            "value": self.value,
            "witnesses": list(self.witnesses),
            "enumerated_classes": self.enumerated_count,
        }

    def payload_bytes(self) -> bytes:
        return json.dumps(self.to_payload(), sort_keys=True).encode()

    def witness_graphs(self) -> list[Graph]:
        return [from_graph6(w) for w in self.witnesses]


def ex_general(
    n: int,
    r: int,
    family: GraphFamily,
    *,
    ceiling: int | None = None,
    workers: int = 1,
) -> ExResult:
    """ex(n, K_r, family): exact value plus all extremal witnesses.

    value is None when no family-free n-vertex graph exists (the family
    contains an edgeless graph on at most n vertices)."""
    if r < 1:
        raise ValueError(f"clique order must be >= 1, got {r}")
    t0 = time.perf_counter()
    best: int | None = None
    witnesses: list[str] = []
    count = 0
    for g in enumerate_free(n, family, ceiling=ceiling, workers=workers):
        count += 1
        c = count_cliques(g, r)
        if best is None or c > best:
            best = c
            witnesses = [to_graph6(g)]
        elif c == best:
            witnesses.append(to_graph6(g))
    return ExResult(
        n=n,
        r=r,
        family_label=family.label,
        value=best,
        witnesses=tuple(sorted(witnesses)),
        enumerated_count=count,
        elapsed=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class ExProfile:
    """Values of ex(p, K_{r-1}, cover-family(F, p)) over the admissible
    range p < min(s+1, p(F)), and the smallest maximizing p."""

    r: int
    s: int
    p_limit: int | float
    points: tuple[tuple[int, int], ...]
    t: int | None

    def to_payload(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "p_limit": self.p_limit if self.p_limit != float("inf") else "inf",
            "points": [list(pt) for pt in self.points],
            "t": self.t,
        }


def ex_profile(
    f: Graph,
    r: int,
    s: int,
    *,
    ceiling: int | None = None,
    workers: int = 1,
) -> ExProfile:
    """Profile p -> ex(p, K_{r-1}, cover-family(F, p)) for the p admissible
    under the matching bound s, with the argmax t (smallest on ties)."""
    pf = p_of_f(f)
    p_limit = min(s + 1, pf)
    points = []
    for p in range(1, int(p_limit) if p_limit != float("inf") else s + 1):
        fam = family_fp(f, p)
        value = ex_general(p, r - 1, fam, ceiling=ceiling, workers=workers).value
        assert value is not None  # within the admissible range a free graph exists
        points.append((p, value))
    t = None
    if points:
        best = max(v for _, v in points)
        t = min(p for p, v in points if v == best)
    return ExProfile(r=r, s=s, p_limit=p_limit, points=tuple(points), t=t)
