"""Exact graph invariants: clique counts, chromatic number, matching number,
and matching-duality certificates.

Everything here is exhaustive and exact; the algorithms are tuned for the
desk-scale graphs (n <= ~10 for searches, n <= 64 for structured
constructions) that the rest of the package produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, _bits


def count_cliques(g: Graph, r: int) -> int:
    """Number of r-vertex subsets inducing a complete graph."""
    if r < 1:
        raise ValueError(f"clique order must be >= 1, got {r}")
    if r > g.n:
        return 0
    if r == 1:
        return g.n
    adj = g.adj

    def rec(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand:
            b = cand & -cand
            cand ^= b
            sub = cand & adj[b.bit_length() - 1]
            if sub:
                total += rec(sub, need - 1)
        return total

    return rec((1 << g.n) - 1, r)


def clique_number(g: Graph) -> int:
    """Largest r with count_cliques(g, r) > 0 (0 for the null graph)."""
    if g.n == 0:
        return 0
    adj = g.adj
    best = 1

    def rec(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        while cand:
            b = cand & -cand
            cand ^= b
            if size + 1 + cand.bit_count() <= best:
                return
            if size + 1 > best:
                best = size + 1
            rec(cand & adj[b.bit_length() - 1], size + 1)

    rec((1 << g.n) - 1, 0)
    return best


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number via branch and bound: clique lower bound,
    greedy upper bound, then k-colourability backtracking in between."""
    if g.n == 0:
        return 0
    if all(row == 0 for row in g.adj):
        return 1
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    lower = clique_number(g)
    upper = _greedy_colors(g, order)
    for k in range(lower, upper):
        if _colorable(g, order, k):
            return k
    return upper


def _greedy_colors(g: Graph, order: list[int]) -> int:
    color = [-1] * g.n
    used = 0
    for v in order:
        taken = 0
        for u in _bits(g.adj[v]):
            if color[u] >= 0:
                taken |= 1 << color[u]
        c = 0
        while taken >> c & 1:
            c += 1
        color[v] = c
        used = max(used, c + 1)
    return used


def _colorable(g: Graph, order: list[int], k: int) -> bool:
    color = [-1] * g.n

    def rec(i: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        taken = 0
        for u in _bits(g.adj[v]):
            if color[u] >= 0:
                taken |= 1 << color[u]
        # trying more than one fresh colour only relabels the palette
        for c in range(min(k, used + 1)):
            if taken >> c & 1:
                continue
            color[v] = c
            if rec(i + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return rec(0, 0)


def matching_number(g: Graph) -> int:
    """Maximum matching size, by memoized branch and bound over the set of
    still-available vertices.  No blossom machinery: exponential worst case,
    fine at this scale."""
    adj = g.adj
    memo: dict[int, int] = {}

    def rec(avail: int) -> int:
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
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        cap = avail.bit_count() // 2
        best = 0
        nb = adj[v] & avail
        rest = avail & ~(1 << v)
        while nb:
            b = nb & -nb
            nb ^= b
            val = 1 + rec(rest & ~b)
            if val > best:
                best = val
                if best == cap:
                    break
        if best < cap:
            val = rec(rest)  # v left unmatched
            if val > best:
                best = val
        memo[avail] = best
        return best

    return rec((1 << g.n) - 1)


def is_msplus1_free(g: Graph, s: int) -> bool:
    """True iff g has no matching of s+1 edges."""
    if s < 0:
        raise ValueError(f"s must be >= 0, got {s}")
    return matching_number(g) <= s


def connected_components(g: Graph, within: int | None = None) -> list[int]:
    """Vertex bitmasks of the connected components of g (restricted to the
    `within` mask when given), ordered by lowest vertex."""
    remaining = g.vertex_mask() if within is None else within
    adj = g.adj
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v] & remaining
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


@dataclass(frozen=True)
class TutteBergeCertificate:
    """Vertex set B minimizing |B| + sum(floor(|C|/2)) over the components C
    of G - B; that minimum equals the matching number."""

    b: tuple[int, ...]
    component_sizes: tuple[int, ...]
    value: int


def tutte_berge_certificate(g: Graph) -> TutteBergeCertificate:
    """Exhaustive search for the minimizing set, by increasing |B| with the
    cut |B| >= best value; ties broken by lexicographically least B."""
    n = g.n
    full = g.vertex_mask()
    best_val: int | None = None
    best_b: tuple[int, ...] = ()
    best_sizes: tuple[int, ...] = ()
    for size in range(n + 1):
        if best_val is not None and size > best_val:
            break
        for b in combinations(range(n), size):
            bmask = 0
            for v in b:
                bmask |= 1 << v
            sizes = sorted(
                comp.bit_count() for comp in connected_components(g, full & ~bmask)
            )
            val = size + sum(c // 2 for c in sizes)
            if best_val is None or val < best_val or (val == best_val and b < best_b):
                best_val = val
                best_b = b
                best_sizes = tuple(sizes)
    assert best_val is not None
    return TutteBergeCertificate(b=best_b, component_sizes=best_sizes, value=best_val)
