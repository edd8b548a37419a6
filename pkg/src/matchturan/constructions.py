"""Extremal candidate constructions: the split construction (a clique-side
part fully joined to an independent part, with an optimal forbidden-family-
free filling), odd cliques, and forest-theorem composites.

Fillings are found exhaustively by the solver, so at desk scale the returned
objective values are true maxima, and every tying filling is reported (the
verifier compares brute-force witness sets against all of them).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .containment import GraphFamily
from .graphs import (
    Graph,
    GraphCapacityError,
    MAX_VERTICES,
    complete,
    disjoint_union,
    from_graph6,
    join_all,
    to_graph6,
    turan_graph,
)
from .invariants import count_cliques
from .solver import enumerate_free


def assemble_gns(n: int, s: int, filling: Graph) -> Graph:
    """K_{s,n-s} with `filling` (a graph on s vertices) placed inside the
    s-part; vertices 0..s-1 form that part."""
    if filling.n != s:
        raise ValueError(f"filling has {filling.n} vertices, expected {s}")
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n, got s={s}, n={n}")
    if n > MAX_VERTICES:
        raise GraphCapacityError(f"{n} vertices exceeds capacity")
    return join_all(filling, Graph(n - s))


@dataclass(frozen=True)
class GnsBuild:
    """Result of optimizing the split construction's filling."""

    n: int
    s: int
    objective: str
    graph: Graph
    filling: Graph
    fillings: tuple[Graph, ...]
    value: int

    def witness_graphs(self) -> list[Graph]:
        return [assemble_gns(self.n, self.s, q) for q in self.fillings]


def _objective_value(q: Graph, n: int, s: int, objective: str, r: int | None) -> int:
    if objective == "edges":
        return s * (n - s) + q.edge_count()
    if objective == "kr_count":
        assert r is not None
        return count_cliques(q, r - 1) * (n - s) + count_cliques(q, r)
    raise ValueError(f"unknown objective {objective!r}")


def build_g_n_s(
    n: int,
    s: int,
    family: GraphFamily,
    objective: str = "edges",
    r: int | None = None,
    *,
    ceiling: int | None = None,
    workers: int = 1,
) -> GnsBuild:
    """Split construction with the family-free filling maximizing the stated
    objective: total edges, or the r-clique count
    N_{r-1}(filling)*(n-s) + N_r(filling).

    All maximizing fillings are kept (deterministically ordered); `graph`
    and `value` use the first."""
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n, got s={s}, n={n}")
    if n > MAX_VERTICES:
        raise GraphCapacityError(f"{n} vertices exceeds capacity")
    if objective == "kr_count" and r is None:
        raise ValueError("objective 'kr_count' needs r")
    best: int | None = None
    fillings: list[Graph] = []
    for q in enumerate_free(s, family, ceiling=ceiling, workers=workers):
        val = _objective_value(q, n, s, objective, r)
        if best is None or val > best:
            best = val
            fillings = [q]
        elif val == best:
            fillings.append(q)
    if best is None:
        raise ValueError(
            f"no {family.label or 'family'}-free filling exists on {s} vertices"
        )
    fillings.sort(key=lambda g: g.adj)
    return GnsBuild(
        n=n,
        s=s,
        objective=objective if objective == "edges" else f"kr_count(r={r})",
        graph=assemble_gns(n, s, fillings[0]),
        filling=fillings[0],
        fillings=tuple(fillings),
        value=best,
    )


def build_clique_candidate(s: int) -> Graph:
    """The odd clique on 2s+1 vertices (matching number exactly s)."""
    if 2 * s + 1 > MAX_VERTICES:
        raise GraphCapacityError(f"K_{2 * s + 1} exceeds capacity")
    return complete(2 * s + 1)


def build_forest_extremal(
    n: int,
    p: int,
    t: int,
    family: GraphFamily,
    *,
    ceiling: int | None = None,
    workers: int = 1,
) -> Graph:
    """Disjoint union of the split construction on n - t(2p-1) vertices with
    part size p-1 and t copies of K_{2p-1}."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    rest = n - t * (2 * p - 1)
    if rest < p - 1:
        raise ValueError(
            f"n={n} too small for p={p}, t={t}: needs at least {p - 1 + t * (2 * p - 1)}"
        )
    g = build_g_n_s(rest, p - 1, family, "edges", ceiling=ceiling, workers=workers).graph
    for _ in range(t):
        g = disjoint_union(g, complete(2 * p - 1))
    return g


@dataclass(frozen=True)
class ConstructionSpec:
    """Serializable description of a candidate construction; round-trips
    through the CLI report format."""

    kind: str  # "gns" | "clique" | "forest_extremal" | "turan"
    n: int | None = None
    s: int | None = None
    p: int | None = None
    t: int | None = None
    parts: int | None = None
    r: int | None = None
    objective: str = "edges"
    family_graph6: tuple[str, ...] = field(default_factory=tuple)
    family_label: str = ""

    def validate(self) -> None:
        if self.kind == "gns":
            if self.n is None or self.s is None:
                raise ValueError("gns needs n and s")
            if not 0 <= self.s <= self.n:
                raise ValueError(f"need 0 <= s <= n, got s={self.s}, n={self.n}")
            if self.objective == "kr_count" and self.r is None:
                raise ValueError("kr_count objective needs r")
        elif self.kind == "clique":
            if self.s is None or self.s < 0:
                raise ValueError("clique needs s >= 0")
        elif self.kind == "forest_extremal":
            if self.n is None or self.p is None or self.t is None:
                raise ValueError("forest_extremal needs n, p, t")
            if self.n < (self.p - 1) + self.t * (2 * self.p - 1):
                raise ValueError("forest_extremal sizes inconsistent")
        elif self.kind == "turan":
            if self.p is None or self.parts is None:
                raise ValueError("turan needs p and parts")
        else:
            raise ValueError(f"unknown construction kind {self.kind!r}")

    def family(self) -> GraphFamily:
        return GraphFamily(
            [from_graph6(s) for s in self.family_graph6], label=self.family_label
        )

    def to_payload(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "s": self.s,
            "p": self.p,
            "t": self.t,
            "parts": self.parts,
            "r": self.r,
            "objective": self.objective,
            "family": list(self.family_graph6),
            "family_label": self.family_label,
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "ConstructionSpec":
        return cls(
            kind=payload["kind"],
            n=payload.get("n"),
            s=payload.get("s"),
            p=payload.get("p"),
            t=payload.get("t"),
            parts=payload.get("parts"),
            r=payload.get("r"),
            objective=payload.get("objective", "edges"),
            family_graph6=tuple(payload.get("family", ())),
            family_label=payload.get("family_label", ""),
        )


def realize(
    spec: ConstructionSpec, *, ceiling: int | None = None, workers: int = 1
) -> tuple[Graph, dict]:
    """Build the graph a spec describes; returns it with a payload of
    construction details."""
    spec.validate()
    if spec.kind == "gns":
        build = build_g_n_s(
            spec.n,
            spec.s,
            spec.family(),
            spec.objective,
            spec.r,
            ceiling=ceiling,
            workers=workers,
        )
        return build.graph, {
            "value": build.value,
            "objective": build.objective,
            "filling": to_graph6(build.filling),
            "tying_fillings": [to_graph6(q) for q in build.fillings],
        }
    if spec.kind == "clique":
        g = build_clique_candidate(spec.s)
        return g, {"edges": g.edge_count()}
    if spec.kind == "forest_extremal":
        g = build_forest_extremal(
            spec.n, spec.p, spec.t, spec.family(), ceiling=ceiling, workers=workers
        )
        return g, {"edges": g.edge_count()}
    g = turan_graph(spec.p, spec.parts)
    return g, {"edges": g.edge_count()}
