"""The bound-variable digraph of a formula and its matrix.

Vertices are bound variables.  Every atomic subformula with bound
variables is read cyclically: consecutive bound-variable letters ``y -> y'``
are joined by an edge labelled with the exponent sums of the free variables
between them.  Zero-labelled loops are dropped.  Rows of the formula matrix
are the signed label sums over a cycle basis of this graph, followed by the
exponent-sum vectors of atomic subformulas without bound variables.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .formula import BOUND, FREE, Formula
from .linalg import IntMatrix

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Edge:
    tail: str
    head: str
    label: Vector
    atom: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class FormulaGraph:
    m: int
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    qf_rows: tuple[Vector, ...]

    def components(self) -> int:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.edges:
            parent[find(e.tail)] = find(e.head)
        return len({find(v) for v in self.vertices})


def _add(a: Vector, b: Vector, sign: int = 1) -> Vector:
    return tuple(x + sign * y for x, y in zip(a, b))


def build_graph(phi: Formula) -> FormulaGraph:
    """Build the digraph; boolean connectives are ignored.

    Each word is rotated to start at a bound-variable letter before it is
    walked.  ``u = 1`` holds exactly when a cyclic conjugate of ``u`` equals 1,
    so the rotation does not change what the atom says.
    """
    m = phi.m
    vertices = tuple(v.name for v in phi.bound_variables())
    edges: list[Edge] = []
    qf_rows: list[Vector] = []
    for k, word in enumerate(phi.atoms()):
        units = word.unit_letters()
        marks = [i for i, (s, _) in enumerate(units) if s.kind == BOUND]
        if not marks:
            qf_rows.append(tuple(word.exponent_sum(x) for x in phi.free_symbols))
            continue
        start = marks[0]
        units = units[start:] + units[:start]
        marks = [i - start for i in marks]
        for a, b in zip(marks, marks[1:] + [len(units)]):
            label = [0] * m
            for s, e in units[a + 1:b]:
                if s.kind == FREE:
                    label[s.index] += e
            tail = units[a][0].name
            head = units[b % len(units)][0].name
            if tail == head and not any(label):
                continue
            edges.append(Edge(tail, head, tuple(label), k))
    return FormulaGraph(m, vertices, tuple(edges), tuple(qf_rows))


def cycle_basis_rows(g: FormulaGraph, forest_seed: int = 0) -> list[Vector]:
    """Signed label sums of the fundamental cycles of a spanning forest.

    Seed 0 scans edges in construction order and keeps the traversal
    direction of each non-forest edge.  Other seeds shuffle the scan order
    and reverse some cycles; the row lattice is the same for every seed.
    """
    order = list(range(len(g.edges)))
    rng = random.Random(forest_seed) if forest_seed else None
    if rng:
        rng.shuffle(order)

    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    adjacency: dict[str, list[tuple[str, Vector]]] = {v: [] for v in g.vertices}
    chords = []
    for k in order:
        e = g.edges[k]
        ra, rb = find(e.tail), find(e.head)
        if ra != rb:
            parent[ra] = rb
            adjacency[e.tail].append((e.head, e.label))
            adjacency[e.head].append((e.tail, tuple(-x for x in e.label)))
        else:
            chords.append(e)

    # potential(v) = label sum along the forest path from the root to v
    zero = (0,) * g.m
    potential: dict[str, Vector] = {}
    roots = list(g.vertices)
    if rng:
        rng.shuffle(roots)
    for root in roots:
        if root in potential:
            continue
        potential[root] = zero
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, label in adjacency[v]:
                if w not in potential:
                    potential[w] = _add(potential[v], label)
                    queue.append(w)

    rows = []
    for e in chords:
        row = _add(_add(e.label, potential[e.tail]), potential[e.head], -1)
        row = tuple(-x for x in row) if rng and rng.random() < 0.5 else row
        rows.append(row)
    return rows


def assemble_matrix(phi: Formula, forest_seed: int = 0, graph: FormulaGraph | None = None) -> IntMatrix:
    g = graph if graph is not None else build_graph(phi)
    return IntMatrix.from_rows(cycle_basis_rows(g, forest_seed) + list(g.qf_rows), cols=phi.m)


def export_dot(g: FormulaGraph) -> str:
    lines = ["digraph formula {"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for e in g.edges:
        label = "(" + ", ".join(map(str, e.label)) + ")"
        lines.append(f'  "{e.tail}" -> "{e.head}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
