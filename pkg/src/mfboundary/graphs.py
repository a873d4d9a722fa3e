"""Core graph data model: decorated dual graphs and plumbing graphs.

Two graph flavors are used throughout:

* :class:`GammaCGraph` -- the decorated dual graph of a curve configuration.
  Non-arrowhead vertices carry an ordered triple ``(m; n, nu)`` and a genus,
  arrowheads carry the implicit triple ``(1; 0, 1)``, and every edge carries
  a weight in ``{1, 2}``.

* :class:`PlumbGraph` -- an oriented plumbing graph.  Vertices carry an Euler
  number (possibly absent), a genus and optionally a multiplicity; edges carry
  a sign; arrowheads mark link components and dash-arrows mark deleted solid
  tori (boundary components).

All values are immutable after construction; every operation in this package
is a pure function of its inputs.

Conventions fixed here and used by every other module:

* A loop contributes 1 to the count of vertex-vertex edges, 2 to the leg
  count of its vertex, and 0 to the multiplicity relation at its vertex.
* An absent Euler number is ``None``, never 0.
* Multi-edges are kept as distinct entries of the edge tuple; edge identity
  is positional (the index in the tuple), and that insertion order drives all
  deterministic iterations.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence


class GraphError(ValueError):
    """Structurally invalid graph input."""


class DecorationError(GraphError):
    """A required decoration (Euler number, multiplicity) is missing."""


class InconsistentMultiplicities(GraphError):
    """The multiplicity relations cannot be satisfied."""


# ---------------------------------------------------------------------------
# Decorated dual graphs
# ---------------------------------------------------------------------------

#: weight triple of every arrowhead
ARROW_TRIPLE = (1, 0, 1)


@dataclass(frozen=True)
class GammaCVertex:
    id: str
    m: int
    n: int
    nu: int
    genus: int = 0

    def __post_init__(self) -> None:
        if self.m < 1 or self.nu < 1 or self.n < 0 or self.genus < 0:
            raise GraphError(f"vertex {self.id}: invalid triple ({self.m};{self.n},{self.nu})[{self.genus}]")
        if self.m >= 2 and self.genus != 0:
            raise GraphError(f"vertex {self.id}: m >= 2 forces genus 0")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.nu)


@dataclass(frozen=True)
class GammaCArrow:
    id: str


@dataclass(frozen=True)
class GammaCEdge:
    a: str
    b: str
    weight: int

    def __post_init__(self) -> None:
        if self.weight not in (1, 2):
            raise GraphError(f"edge {self.a}-{self.b}: weight must be 1 or 2")

    @property
    def is_loop(self) -> bool:
        return self.a == self.b

    def other(self, v: str) -> str:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise KeyError(v)

    def touches(self, v: str) -> bool:
        return v == self.a or v == self.b


@dataclass(frozen=True)
class Star:
    """The star of a vertex: its decorations plus one leg per edge-end.

    Every non-loop edge at the vertex contributes one leg, every loop two;
    a leg records the edge weight, the triple at the far end (arrowheads
    report ``(1;0,1)``, loops the vertex's own triple) and the index of the
    supporting edge.
    """

    center: GammaCVertex
    legs: tuple[tuple[int, tuple[int, int, int], int], ...]  # (weight, far triple, edge index)

    @property
    def s(self) -> int:
        return sum(1 for w, _, _ in self.legs if w == 1)

    @property
    def t(self) -> int:
        return sum(1 for w, _, _ in self.legs if w == 2)


@dataclass(frozen=True)
class GammaCGraph:
    vertices: tuple[GammaCVertex, ...]
    arrows: tuple[GammaCArrow, ...]
    edges: tuple[GammaCEdge, ...]

    def __post_init__(self) -> None:
        ids = [v.id for v in self.vertices] + [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate ids")
        known = set(ids)
        for e in self.edges:
            if e.a not in known or e.b not in known:
                raise GraphError(f"edge {e.a}-{e.b}: unknown endpoint")
        arrow_ids = {a.id for a in self.arrows}
        for aid in arrow_ids:
            deg = sum(1 for e in self.edges if e.touches(aid)) + sum(
                1 for e in self.edges if e.is_loop and e.a == aid
            )
            if deg != 1:
                raise GraphError(f"arrowhead {aid} must have exactly one incident edge")
        if self.vertices and not self._is_connected():
            raise GraphError("graph is not connected")

    def _is_connected(self) -> bool:
        ids = [v.id for v in self.vertices] + [a.id for a in self.arrows]
        if not ids:
            return True
        adj: dict[str, set[str]] = {i: set() for i in ids}
        for e in self.edges:
            adj[e.a].add(e.b)
            adj[e.b].add(e.a)
        seen = {ids[0]}
        stack = [ids[0]]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(ids)

    # -- lookups ----------------------------------------------------------

    def vertex(self, vid: str) -> GammaCVertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @property
    def arrow_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.arrows)

    def is_arrow(self, vid: str) -> bool:
        return any(a.id == vid for a in self.arrows)

    def triple_of(self, vid: str) -> tuple[int, int, int]:
        if self.is_arrow(vid):
            return ARROW_TRIPLE
        return self.vertex(vid).triple

    def edges_at(self, vid: str) -> list[tuple[int, GammaCEdge]]:
        """Incident edges (with index); loops are listed once."""
        return [(i, e) for i, e in enumerate(self.edges) if e.touches(vid)]

    def degree(self, vid: str) -> int:
        """Number of edge-ends at ``vid`` (a loop counts twice)."""
        return sum(2 if e.is_loop else 1 for _, e in self.edges_at(vid))


def star_of(g: GammaCGraph, vid: str) -> Star:
    """The star of a non-arrowhead vertex of a decorated dual graph."""
    center = g.vertex(vid)
    legs: list[tuple[int, tuple[int, int, int], int]] = []
    for i, e in g.edges_at(vid):
        if e.is_loop:
            legs.append((e.weight, center.triple, i))
            legs.append((e.weight, center.triple, i))
        else:
            legs.append((e.weight, g.triple_of(e.other(vid)), i))
    return Star(center=center, legs=tuple(legs))


@dataclass(frozen=True)
class ValidationReport:
    assumption_a_violations: tuple[int, ...]
    assumption_b_violations: tuple[int, ...]
    compatibility_errors: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not (
            self.assumption_a_violations
            or self.assumption_b_violations
            or self.compatibility_errors
        )


def is_vanishing_2_edge(g: GammaCGraph, e: GammaCEdge) -> bool:
    """A weight-2 edge whose both endpoint middle weights are zero."""
    if e.weight != 2:
        return False
    return g.triple_of(e.a)[1] == 0 and g.triple_of(e.b)[1] == 0


def validate_gammaC(g: GammaCGraph) -> ValidationReport:
    """Report (by edge index) the structural defects of a decorated graph.

    * Assumption A violations: weight-2 edges with both endpoint first
      weights equal to 1 (arrowheads count as m = 1; loops included).
    * Assumption B violations: vanishing 2-edges (both middle weights 0).
    * Compatibility errors: edges breaking the weight-compatibility rules --
      on a weight-2 edge the endpoint pairs (n, nu) must agree, on a
      weight-1 edge the first weights m must agree, and for endpoints with
      m != m' the weight must be 2 while (n, nu) != (n', nu') forces 1.
    """
    bad_a: list[int] = []
    bad_b: list[int] = []
    bad_c: list[int] = []
    for i, e in enumerate(g.edges):
        (m1, n1, nu1) = g.triple_of(e.a)
        (m2, n2, nu2) = g.triple_of(e.b)
        if m1 != m2 and ((n1, nu1) != (n2, nu2) or e.weight != 2):
            bad_c.append(i)
        elif (n1, nu1) != (n2, nu2) and e.weight != 1:
            bad_c.append(i)
        if e.weight == 2 and m1 == 1 and m2 == 1:
            bad_a.append(i)
        if is_vanishing_2_edge(g, e):
            bad_b.append(i)
    return ValidationReport(tuple(bad_a), tuple(bad_b), tuple(bad_c))


# ---------------------------------------------------------------------------
# Plumbing graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlumbVertex:
    id: str
    euler: Optional[int] = None
    genus: int = 0
    mult: Optional[int] = None

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise GraphError(f"vertex {self.id}: negative genus")


@dataclass(frozen=True)
class PlumbArrow:
    id: str
    mult: Optional[int] = None


@dataclass(frozen=True)
class DashArrow:
    id: str
    attached_to: str


@dataclass(frozen=True)
class PlumbEdge:
    a: str
    b: str
    sign: int  # +1 or -1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise GraphError("edge sign must be +1 or -1")

    @property
    def is_loop(self) -> bool:
        return self.a == self.b

    def other(self, v: str) -> str:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise KeyError(v)

    def touches(self, v: str) -> bool:
        return v == self.a or v == self.b


@dataclass(frozen=True)
class PlumbGraph:
    vertices: tuple[PlumbVertex, ...] = ()
    arrows: tuple[PlumbArrow, ...] = ()
    dasharrows: tuple[DashArrow, ...] = ()
    edges: tuple[PlumbEdge, ...] = ()

    def __post_init__(self) -> None:
        ids = (
            [v.id for v in self.vertices]
            + [a.id for a in self.arrows]
            + [d.id for d in self.dasharrows]
        )
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate ids")
        vset = {v.id for v in self.vertices}
        aset = {a.id for a in self.arrows}
        for e in self.edges:
            for end in (e.a, e.b):
                if end not in vset and end not in aset:
                    raise GraphError(f"edge {e.a}-{e.b}: unknown endpoint {end}")
        for d in self.dasharrows:
            if d.attached_to not in vset:
                raise GraphError(f"dash-arrow {d.id}: unknown vertex {d.attached_to}")
        dashed = {d.attached_to for d in self.dasharrows}
        for v in self.vertices:
            if v.id in dashed and v.euler is not None:
                raise GraphError(
                    f"vertex {v.id} supports a dash-arrow; its Euler number must be absent"
                )
        for a in self.arrows:
            deg = sum(1 for e in self.edges if e.touches(a.id))
            if deg != 1:
                raise GraphError(f"arrowhead {a.id} must have exactly one incident edge")

    # -- lookups ----------------------------------------------------------

    def vertex(self, vid: str) -> PlumbVertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def is_arrow(self, vid: str) -> bool:
        return any(a.id == vid for a in self.arrows)

    def mult_of(self, vid: str) -> Optional[int]:
        for v in self.vertices:
            if v.id == vid:
                return v.mult
        for a in self.arrows:
            if a.id == vid:
                return a.mult
        raise KeyError(vid)

    def edges_at(self, vid: str) -> list[tuple[int, PlumbEdge]]:
        return [(i, e) for i, e in enumerate(self.edges) if e.touches(vid)]

    def degree(self, vid: str) -> int:
        return sum(2 if e.is_loop else 1 for _, e in self.edges_at(vid))

    def dashes_at(self, vid: str) -> list[DashArrow]:
        return [d for d in self.dasharrows if d.attached_to == vid]

    def components(self) -> list[set[str]]:
        """Connected components over all vertices and arrowheads."""
        ids = [v.id for v in self.vertices] + [a.id for a in self.arrows]
        adj: dict[str, set[str]] = {i: set() for i in ids}
        for e in self.edges:
            adj[e.a].add(e.b)
            adj[e.b].add(e.a)
        comps: list[set[str]] = []
        seen: set[str] = set()
        for i in ids:
            if i in seen:
                continue
            comp = {i}
            stack = [i]
            while stack:
                for u in adj[stack.pop()]:
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


# ---------------------------------------------------------------------------
# Shared statistics and the multiplicity relations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphStats:
    c: int
    g_sum: int
    n_w: int
    n_ew: int
    n_a: int
    n_dash: int = 0


def graph_stats(g: GammaCGraph | PlumbGraph) -> GraphStats:
    """Cycle count, total genus and element counts of a connected graph.

    ``c = n_EW - n_W + 1`` where ``n_EW`` counts vertex-vertex edges (a loop
    counts once) and ``n_W`` the non-arrowhead vertices.
    """
    if isinstance(g, GammaCGraph):
        if not g._is_connected():
            raise GraphError("graph_stats requires a connected graph")
        wids = {v.id for v in g.vertices}
        n_ew = sum(1 for e in g.edges if e.a in wids and e.b in wids)
        g_sum = sum(v.genus for v in g.vertices)
        n_a = len(g.arrows)
        n_dash = 0
    else:
        if not g.is_connected():
            raise GraphError("graph_stats requires a connected graph")
        wids = {v.id for v in g.vertices}
        n_ew = sum(1 for e in g.edges if e.a in wids and e.b in wids)
        g_sum = sum(v.genus for v in g.vertices)
        n_a = len(g.arrows)
        n_dash = len(g.dasharrows)
    n_w = len(wids)
    c = n_ew - n_w + 1
    return GraphStats(c=c, g_sum=g_sum, n_w=n_w, n_ew=n_ew, n_a=n_a, n_dash=n_dash)


@dataclass(frozen=True)
class MultCheck:
    ok: bool
    failures: tuple[str, ...]


def _relation_terms(p: PlumbGraph, vid: str) -> Optional[list[int]]:
    """Signed neighbor multiplicities at ``vid``; ``None`` if any is missing.

    Loops are excluded, dash-arrows contribute nothing.
    """
    terms: list[int] = []
    for _, e in p.edges_at(vid):
        if e.is_loop:
            continue
        other = e.other(vid)
        m = p.mult_of(other)
        if m is None:
            return None
        terms.append(e.sign * m)
    return terms


def check_multiplicity_system(p: PlumbGraph) -> MultCheck:
    """Check ``e_w m_w + sum(eps_e m_v(e)) = 0`` at every eligible vertex.

    Vertices supporting a dash-arrow are skipped (their Euler number is
    absent by convention).  Loops are excluded from the sum.  A missing
    decoration at a checked vertex raises :class:`DecorationError`.
    """
    dashed = {d.attached_to for d in p.dasharrows}
    failures: list[str] = []
    for v in p.vertices:
        if v.id in dashed:
            continue
        if v.euler is None or v.mult is None:
            raise DecorationError(f"vertex {v.id}: missing euler or mult")
        terms = _relation_terms(p, v.id)
        if terms is None:
            raise DecorationError(f"vertex {v.id}: a neighbor has no multiplicity")
        if v.euler * v.mult + sum(terms) != 0:
            failures.append(v.id)
    return MultCheck(ok=not failures, failures=tuple(failures))


def solve_euler_numbers(p: PlumbGraph) -> PlumbGraph:
    """Fill in the missing Euler numbers from the multiplicity relations.

    For every vertex with absent Euler number (and no dash-arrow) set
    ``e_w = -(sum eps_e m_v(e)) / m_w``; existing Euler numbers are verified
    against the same relation, never overwritten.
    """
    dashed = {d.attached_to for d in p.dasharrows}
    new_vertices: list[PlumbVertex] = []
    for v in p.vertices:
        if v.id in dashed:
            new_vertices.append(v)
            continue
        terms = _relation_terms(p, v.id)
        if v.euler is None:
            if v.mult is None:
                raise DecorationError(f"vertex {v.id}: cannot solve euler without mult")
            if v.mult == 0:
                raise InconsistentMultiplicities(f"vertex {v.id}: mult 0 cannot carry an euler")
            if terms is None:
                raise DecorationError(f"vertex {v.id}: a neighbor has no multiplicity")
            s = sum(terms)
            if s % v.mult != 0:
                raise InconsistentMultiplicities(
                    f"vertex {v.id}: sum {s} not divisible by mult {v.mult}"
                )
            new_vertices.append(replace(v, euler=-s // v.mult))
        else:
            if v.mult is not None and terms is not None:
                if v.euler * v.mult + sum(terms) != 0:
                    raise InconsistentMultiplicities(
                        f"vertex {v.id}: given euler {v.euler} breaks the relation"
                    )
            new_vertices.append(v)
    return replace(p, vertices=tuple(new_vertices))
