"""Finite windows of the module graphs of M(omega) and their submodule closures.

Vertices are canonical tableaux on one orbit.  For every ordered pair of
tableaux whose points differ by 0 or 1 there is an edge slot; the slot is an
edge iff the target lies in the C[u]1 + C[u]v + C[u]w span of the source.
Each slot also carries the label drawn in the pictures of these modules
(q(l), q(-l), q'(+-l), q(0), q(-1/2), or 2l on vertical arrows), which lets
the caption's "label nonzero iff edge present" be tested slot by slot.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import networkx as nx

from .dq import DqParams
from .errors import WindowTooSmall
from .exact import as_fraction, format_rational, rational_roots
from .hc import Tableau, canonical, reaches, span_generators_hitting

HALF = Fraction(1, 2)

GENERIC, INTEGRAL, HALF_INTEGRAL = "generic", "integral", "half_integral"


def classify_orbit(lambda0) -> str:
    two = 2 * as_fraction(lambda0)
    if two.denominator != 1:
        return GENERIC
    return INTEGRAL if two.numerator % 2 == 0 else HALF_INTEGRAL


def root_bound(params: DqParams) -> Fraction:
    roots = list(rational_roots(params.q))
    dq = params.q.derivative()
    if dq:
        roots += list(rational_roots(dq))
    return max((abs(r) for r in roots), default=Fraction(0))


def minimal_window(params: DqParams, lambda0) -> int:
    """Smallest N with N > max|root of q or q'| + |lambda0| + 2."""
    bound = root_bound(params) + abs(as_fraction(lambda0)) + 2
    return int(bound // 1) + 1


@dataclass(frozen=True)
class Slot:
    src: Tableau
    dst: Tableau
    kind: str
    label: Fraction
    symbol: str
    present: bool
    generators: tuple = ()

    @property
    def consistent(self) -> bool:
        return (self.label == 0) == (not self.present)


@dataclass
class ModuleGraph:
    orbit_class: str
    lambda0: Fraction
    window: int
    vertices: list
    positions: dict  # Tableau -> signed coordinate on the orbit line
    slots: list = field(default_factory=list)

    @property
    def edges(self) -> list:
        return [s for s in self.slots if s.present]

    def edge(self, src: Tableau, dst: Tableau) -> Optional[Slot]:
        for s in self.slots:
            if s.src == src and s.dst == dst:
                return s
        return None

    def inconsistent_slots(self) -> list:
        return [s for s in self.slots if not s.consistent]

    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((s.src, s.dst) for s in self.edges)
        return g

    def boundary(self) -> set:
        """Vertices at the edge of the window, where infinite rays are cut."""
        coords = [self.positions[v] for v in self.vertices]
        ends = {max(coords)}
        if self.orbit_class == GENERIC:
            ends.add(min(coords))
        return {v for v in self.vertices if self.positions[v] in ends}


def _vertices(orbit_class: str, lambda0: Fraction, window: int, full: bool):
    positions = {}
    if orbit_class == GENERIC:
        base = lambda0 - (lambda0.numerator // lambda0.denominator)
        points = []
        k = -window - 1
        while True:
            mu = base + k
            if mu > window:
                break
            if abs(mu) <= window:
                points.append(mu)
            k += 1
        orders = (0, 1) if full else (0,)
    elif orbit_class == INTEGRAL:
        points = [Fraction(k) for k in range(window + 1)]
        orders = (0, 1)
    else:
        points = [HALF + k for k in range(window)]
        orders = (0, 1)
    vertices = []
    for order in orders:
        for mu in points:
            c = canonical(order, mu)
            if c is None:
                continue
            vertices.append(c[1])
            positions[c[1]] = mu
    return vertices, positions


def figure_label(src_order: int, src_pos: Fraction, dst_order: int, dst_pos: Fraction,
                 params: DqParams) -> tuple:
    """(value, symbol) drawn on the arrow between two tableaux, 0 if none."""
    q = params.q
    dq = q.derivative()
    lam = src_pos
    step = dst_pos - src_pos
    same_point = abs(src_pos) == abs(dst_pos)
    if src_order == 0 and src_pos == 0 and dst_pos == 1:
        # the apex of the integral orbit
        if dst_order == 1:
            return q(0), "q(0)"
        return dq(0), "q'(0)"
    if src_order == 1 and dst_order == 0 and same_point:
        return 2 * abs(lam), "2l"
    if src_order == 0 and dst_order == 1 and same_point:
        if abs(lam) == HALF:
            return q(-HALF), "q(-1/2)"
        return Fraction(0), "0"
    if src_order == dst_order:
        if step == 1:
            return q(lam), f"q({format_rational(lam)})"
        if step == -1:
            return q(-lam), f"q({format_rational(-lam)})"
    if src_order == 1 and dst_order == 0:
        if step == 1:
            return dq(lam), f"q'({format_rational(lam)})"
        if step == -1:
            return dq(-lam), f"q'({format_rational(-lam)})"
    return Fraction(0), "0"


def _kind(src: Tableau, dst: Tableau) -> str:
    if src.point == dst.point:
        return "vertical" if src.order == 1 else "back"
    return "horizontal" if src.order == dst.order else "diagonal"


def _slot_pairs(vertices: list, positions: dict):
    for src in vertices:
        for dst in vertices:
            if src != dst and abs(positions[src] - positions[dst]) <= 1:
                yield src, dst


def module_graph(params: DqParams, lambda0, window: int, full: bool = False) -> ModuleGraph:
    lambda0 = as_fraction(lambda0)
    minimal = minimal_window(params, lambda0)
    if window < minimal:
        raise WindowTooSmall(window, minimal)
    orbit_class = classify_orbit(lambda0)
    vertices, positions = _vertices(orbit_class, lambda0, window, full)
    graph = ModuleGraph(orbit_class, lambda0, window, vertices, positions)
    for src, dst in _slot_pairs(vertices, positions):
        label, symbol = figure_label(src.order, positions[src], dst.order, positions[dst], params)
        present = reaches(src, dst, params)
        gens = tuple(span_generators_hitting(src, dst, params)) if present else ()
        graph.slots.append(Slot(src, dst, _kind(src, dst), label, symbol, present, gens))
    return graph


@dataclass(frozen=True)
class Closure:
    members: frozenset
    truncated: bool
    seed: Optional[Tableau] = None  # None for intersections of principal closures

    @property
    def principal(self) -> bool:
        return self.seed is not None


def submodule_closures(graph: ModuleGraph) -> tuple:
    """Reachability closures, closed under intersection, with their Hasse diagram.

    Each vertex contributes its closure (a principal submodule); nonempty
    intersections of these are added as well, since they are submodules that
    need not be generated by a single tableau.  Returns (closures,
    inclusions) where (i, j) means closures[i] is a maximal proper subset of
    closures[j].
    """
    g = graph.digraph()
    boundary = graph.boundary()
    seeds: dict = {}
    for v in graph.vertices:
        members = frozenset(nx.descendants(g, v) | {v})
        seeds.setdefault(members, v)
    family = set(seeds)
    frontier = set(family)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in family:
                meet = a & b
                if meet and meet not in family:
                    fresh.add(meet)
        family |= fresh
        frontier = fresh
    closures = sorted(
        (Closure(m, bool(m & boundary), seeds.get(m)) for m in family),
        key=lambda c: (len(c.members), sorted(c.members)),
    )
    order = nx.DiGraph()
    order.add_nodes_from(range(len(closures)))
    for i, a in enumerate(closures):
        for j, b in enumerate(closures):
            if i != j and a.members < b.members:
                order.add_edge(i, j)
    hasse = nx.transitive_reduction(order) if order.number_of_edges() else order
    return closures, sorted(hasse.edges())


def closure_of(graph: ModuleGraph, v: Tableau) -> frozenset:
    return frozenset(nx.descendants(graph.digraph(), v) | {v})


# -- output -------------------------------------------------------------------------

def to_json(graph: ModuleGraph) -> dict:
    index = {v: i for i, v in enumerate(graph.vertices)}
    closures, inclusions = submodule_closures(graph)
    return {
        "orbit_class": graph.orbit_class,
        "lambda0": format_rational(graph.lambda0),
        "window": graph.window,
        "vertices": [v.to_json() for v in graph.vertices],
        "edges": [
            {
                "src": index[s.src],
                "dst": index[s.dst],
                "label": format_rational(s.label),
                "symbol": s.symbol,
                "kind": s.kind,
                "generators": list(s.generators),
            }
            for s in graph.edges
        ],
        "closures": [sorted(index[v] for v in c.members) for c in closures],
        "closure_truncated": [c.truncated for c in closures],
        "closure_seeds": [None if c.seed is None else index[c.seed] for c in closures],
        "inclusions": [list(p) for p in inclusions],
        "inconsistent_slots": [
            {"src": index[s.src], "dst": index[s.dst], "label": format_rational(s.label),
             "symbol": s.symbol, "present": s.present}
            for s in graph.inconsistent_slots()
        ],
    }


def dumps_json(graph: ModuleGraph) -> str:
    return json.dumps(to_json(graph), indent=2)


def _node_id(v: Tableau) -> str:
    return f'"{v}"'


def to_dot(graph: ModuleGraph, symbolic: bool = False) -> str:
    lines = ["digraph M {", "  rankdir=LR;", "  node [shape=plaintext];"]
    for order in (0, 1):
        row = [v for v in graph.vertices if v.order == order]
        if not row:
            continue
        lines.append(f"  subgraph cluster_T{order} {{")
        lines.append(f'    label="T{order}"; rank=same;')
        for v in sorted(row, key=lambda v: graph.positions[v]):
            lines.append(f"    {_node_id(v)};")
        lines.append("  }")
    for s in graph.edges:
        label = s.symbol if symbolic else format_rational(s.label)
        style = "solid" if s.src.order == 0 and s.dst.order == 0 else "dashed"
        lines.append(
            f'  {_node_id(s.src)} -> {_node_id(s.dst)} [label="{label}", style={style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
