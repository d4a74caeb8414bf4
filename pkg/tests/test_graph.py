import pytest

from formdiv.corpus import INTRO_EXAMPLE, corpus
from formdiv.formula import BOUND, CONST, FREE, And, Atomic, Not, Or
from formdiv.graph import Edge, FormulaGraph, assemble_matrix, build_graph, cycle_basis_rows, export_dot
from formdiv.linalg import smith_normal_form
from formdiv.parser import parse_formula


def test_worked_example_graph(worked):
    g = build_graph(worked)
    assert g.vertices == ("y", "z")
    assert [(e.tail, e.head, e.label) for e in g.edges] == [
        ("y", "y", (2, 2)),
        ("y", "z", (1, 2)),
        ("z", "y", (3, 0)),
        ("z", "z", (6, 1)),
    ]
    assert g.qf_rows == ((2, 1),)


def test_worked_example_matrix(worked):
    A = assemble_matrix(worked)
    assert A.rows == ((2, 2), (4, 2), (6, 1), (2, 1))
    assert smith_normal_form(A) == [1, 2]


def test_intro_example():
    phi = parse_formula(INTRO_EXAMPLE, ["x1", "x2"])
    g = build_graph(phi)
    assert g.vertices == () and g.edges == ()
    assert g.qf_rows == ((3, 1), (1, 3))
    assert assemble_matrix(phi).rows == ((3, 1), (1, 3))


def test_zero_loop_excluded():
    g = build_graph(parse_formula("forall y (y = 1)", ["x1"]))
    assert g.vertices == ("y",) and g.edges == () and g.qf_rows == ()
    assert assemble_matrix(parse_formula("forall y (y = 1)", ["x1"])).nrows == 0


def test_frobenius_matrix():
    assert assemble_matrix(parse_formula("x1^7 = 1", ["x1"])).rows == ((7,),)


def test_zero_labelled_non_loop_edges_kept():
    g = build_graph(parse_formula("forall y exists z (y*z = a)", ["x1"]))
    assert {(e.tail, e.head, e.label) for e in g.edges} == {("y", "z", (0,)), ("z", "y", (0,))}


def test_rotation_is_irrelevant():
    # cyclic conjugates of the same word give the same edges
    a = build_graph(parse_formula("exists y (x1*y*x2^2*y*x1 = 1)", ["x1", "x2"]))
    b = build_graph(parse_formula("exists y (y*x2^2*y*x1^2 = 1)", ["x1", "x2"]))
    assert sorted((e.tail, e.head, e.label) for e in a.edges) == sorted((e.tail, e.head, e.label) for e in b.edges)


def test_forest_graph_has_no_rows():
    g = FormulaGraph(1, ("u", "v", "w"), (Edge("u", "v", (1,), 0), Edge("v", "w", (2,), 0)), ())
    assert cycle_basis_rows(g) == []
    for seed in range(1, 6):
        assert cycle_basis_rows(g, seed) == []


def test_parallel_edges():
    g = FormulaGraph(2, ("u", "v"), (Edge("u", "v", (1, 0), 0), Edge("u", "v", (0, 5), 0)), ())
    assert cycle_basis_rows(g) == [(-1, 5)]
    seen = {cycle_basis_rows(g, seed)[0] for seed in range(1, 20)}
    assert seen <= {(-1, 5), (1, -5)}


def test_row_count_formula():
    for phi in corpus():
        g = build_graph(phi)
        rows = cycle_basis_rows(g)
        assert len(rows) == len(g.edges) - len(g.vertices) + g.components()


def test_forest_seed_invariance():
    for phi in corpus():
        d0 = smith_normal_form(assemble_matrix(phi))
        for seed in range(1, 6):
            assert smith_normal_form(assemble_matrix(phi, seed)) == d0


def test_boolean_restructuring_does_not_matter():
    p, q, r = (Atomic(parse_formula(t, ["x1", "x2"], ["a"]).atoms()[0]) for t in ["x1^2*a = 1", "x1*x2 = a", "x2^3 = 1"])
    base = parse_formula("x1 = 1", ["x1", "x2"], ["a"])
    one = build_graph(base.with_body(And(And(p, q), r)))
    two = build_graph(base.with_body(Or(p, Not(And(q, Not(r))))))
    assert one == two


def merged_block_graph(phi):
    """Alternative builder: each maximal run of one bound variable and
    constants is a single vertex occurrence."""
    edges = []
    for k, word in enumerate(phi.atoms()):
        units = word.unit_letters()
        marks = [i for i, (s, _) in enumerate(units) if s.kind == BOUND]
        if not marks:
            continue
        units = units[marks[0]:] + units[:marks[0]]
        blocks = []  # (variable, start, end)
        i = 0
        while i < len(units):
            s = units[i][0]
            if s.kind != BOUND:
                i += 1
                continue
            j = i + 1
            while j < len(units) and (units[j][0] == s or units[j][0].kind == CONST):
                j += 1
            blocks.append((s.name, i, j))
            i = j
        for (y, _, end), (y2, start, _) in zip(blocks, blocks[1:] + [(blocks[0][0], len(units), None)]):
            label = [0] * phi.m
            for s, e in units[end:start]:
                if s.kind == FREE:
                    label[s.index] += e
            if y != y2 or any(label):
                edges.append(Edge(y, y2, tuple(label), k))
    g = build_graph(phi)
    return FormulaGraph(phi.m, g.vertices, tuple(edges), g.qf_rows)


def same_lattice(rows_a, rows_b, m):
    """Equal invariant factors for A, B and A+B imply L(A) = L(A+B) = L(B)."""
    if not rows_a or not rows_b:
        return not any(any(r) for r in rows_a + rows_b)
    da = [d for d in smith_normal_form(rows_a) if d]
    db = [d for d in smith_normal_form(rows_b) if d]
    dab = [d for d in smith_normal_form(rows_a + rows_b) if d]
    return da == db == dab


def test_block_splitting_matches_merged_blocks():
    checked = 0
    for phi in corpus():
        g = build_graph(phi)
        per_letter = cycle_basis_rows(g) + list(g.qf_rows)
        h = merged_block_graph(phi)
        merged = cycle_basis_rows(h) + list(h.qf_rows)
        assert same_lattice(per_letter, merged, phi.m), str(phi)
        checked += bool(g.edges)
    assert checked >= 10


def test_same_lattice_helper_detects_difference():
    assert not same_lattice([(2, 0)], [(1, 0)], 2)
    assert not same_lattice([(1, 0)], [(0, 1)], 2)
    assert same_lattice([(1, 1), (0, 2)], [(1, -1), (2, 0)], 2)


def test_export_dot(worked):
    empty = build_graph(parse_formula("x1 = 1", ["x1"]))
    assert export_dot(empty) == "digraph formula {\n}\n"
    dot = export_dot(build_graph(worked))
    assert dot.count("->") == 4
    assert '"y";' in dot and '"z";' in dot
    assert '"z" -> "z" [label="(6, 1)"];' in dot
