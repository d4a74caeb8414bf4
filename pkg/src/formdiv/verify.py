"""Predicted divisors and verification reports.

For a formula with ``m`` free variables the predicted divisor in a finite
group ``G`` is ``gcd(|C|, n)`` where ``C`` is the centralizer of the values
of the non-isolated constants and ``n`` is the ``m``-th invariant factor of
the formula matrix (0 when its rank is below ``m``).  The weaker variant
centralizes every constant; both are reported.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field
from typing import Iterable, Mapping, Sequence

from .counting import DEFAULT_BUDGET, BudgetExceeded, compile_formula, count_solutions, resolve_binding
from .formula import Formula, Isolation, detect_isolated
from .graph import FormulaGraph, assemble_matrix, build_graph
from .groups import GroupTable, centralizer, gcd_group_int
from .linalg import IntMatrix, minors_gcd, smith_normal_form

EXHAUSTIVE_BINDINGS = 10**4
SAMPLED_BINDINGS = 100


@dataclass(frozen=True)
class Analysis:
    """Group-free invariants of a formula."""

    formula: Formula
    graph: FormulaGraph
    matrix: IntMatrix
    invariant_factors: tuple[int, ...]
    deltas: tuple[int, ...]  # Delta_0 .. Delta_m
    n: int
    isolation: Isolation


def analyze(phi: Formula, forest_seed: int = 0) -> Analysis:
    g = build_graph(phi)
    A = assemble_matrix(phi, forest_seed, graph=g)
    d = smith_normal_form(A)
    deltas = tuple(minors_gcd(A, i) for i in range(phi.m + 1))
    n = d[phi.m - 1] if len(d) >= phi.m else 0
    return Analysis(phi, g, A, tuple(d), deltas, n, detect_isolated(phi))


@dataclass(frozen=True)
class Divisors:
    centralizer_order: int
    divisor: int
    centralizer_order_all: int
    divisor_all: int


def divisors(analysis: Analysis, G: GroupTable, binding: Mapping[str, int]) -> Divisors:
    iso = analysis.isolation
    every = set(iso.isolated | iso.non_isolated)
    C = centralizer(G, (binding[c] for c in iso.non_isolated))
    C_all = centralizer(G, (binding[c] for c in every))
    return Divisors(
        len(C), gcd_group_int(len(C), analysis.n), len(C_all), gcd_group_int(len(C_all), analysis.n)
    )


def predicted_divisor(
    phi: Formula, G: GroupTable, binding: Mapping[str, int | str], all_coefficients: bool = False
) -> int:
    d = divisors(analyze(phi), G, resolve_binding(G, binding))
    return d.divisor_all if all_coefficients else d.divisor


def default_bindings(
    constants: Sequence[str], G: GroupTable, seed: int = 0, limit: int = EXHAUSTIVE_BINDINGS,
    samples: int = SAMPLED_BINDINGS,
) -> list[dict[str, int]]:
    """Every binding when there are at most ``limit``, else a seeded sample."""
    constants = list(constants)
    if G.order ** len(constants) <= limit:
        return [dict(zip(constants, vals)) for vals in itertools.product(range(G.order), repeat=len(constants))]
    rng = random.Random(f"{seed}:{G.name}")
    return [{c: rng.randrange(G.order) for c in constants} for _ in range(samples)]


@dataclass
class GroupResult:
    group: str
    order: int
    binding: dict[str, str]
    centralizer_order: int
    divisor: int
    centralizer_order_all: int
    divisor_all: int
    count: int | None
    verdict: bool | None
    status: str  # "ok", "failed", "skipped"


@dataclass
class AnalysisReport:
    formula: str
    signature: list[str]
    constants: list[str]
    vertices: list[str]
    edges: list[dict]
    qf_rows: list[list[int]]
    matrix: list[list[int]]
    deltas: list[int]
    invariant_factors: list[int]
    n: int
    isolating_variables: list[str]
    isolated_constants: list[str]
    non_isolated_constants: list[str]
    results: list[GroupResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "failed" for r in self.results)

    def failures(self) -> list[GroupResult]:
        return [r for r in self.results if r.status == "failed"]

    def to_json(self) -> dict:
        """Integers that can grow (matrix, deltas, factors, n) become decimal strings."""
        doc = asdict(self)
        doc["matrix"] = [[str(x) for x in row] for row in self.matrix]
        doc["deltas"] = [str(x) for x in self.deltas]
        doc["invariant_factors"] = [str(x) for x in self.invariant_factors]
        doc["n"] = str(self.n)
        for e in doc["edges"]:
            e["label"] = [str(x) for x in e["label"]]
        doc["qf_rows"] = [[str(x) for x in row] for row in self.qf_rows]
        return doc


def report_for(analysis: Analysis) -> AnalysisReport:
    phi, iso = analysis.formula, analysis.isolation
    return AnalysisReport(
        formula=str(phi),
        signature=list(phi.signature),
        constants=sorted(phi.constants),
        vertices=list(analysis.graph.vertices),
        edges=[
            {"tail": e.tail, "head": e.head, "label": list(e.label), "atom": e.atom}
            for e in analysis.graph.edges
        ],
        qf_rows=[list(r) for r in analysis.graph.qf_rows],
        matrix=analysis.matrix.tolist(),
        deltas=list(analysis.deltas),
        invariant_factors=list(analysis.invariant_factors),
        n=analysis.n,
        isolating_variables=sorted(iso.isolating),
        isolated_constants=sorted(iso.isolated),
        non_isolated_constants=sorted(iso.non_isolated),
    )


def verify(
    phi: Formula,
    groups: Iterable[GroupTable],
    bindings: Mapping[str, Sequence[Mapping[str, int | str]]] | None = None,
    *,
    seed: int = 0,
    budget: int | None = DEFAULT_BUDGET,
    backend: str | None = None,
    workers: int = 1,
) -> AnalysisReport:
    """Count solutions in each group for each binding and check divisibility.

    ``bindings`` maps group names to binding lists; groups without an entry
    use :func:`default_bindings` over the formula's constants.
    """
    analysis = analyze(phi)
    report = report_for(analysis)
    program = compile_formula(phi)
    constants = list(program.constants)
    for G in groups:
        if bindings is not None and G.name in bindings:
            group_bindings = [resolve_binding(G, b) for b in bindings[G.name]]
        else:
            group_bindings = default_bindings(constants, G, seed)
        for b in group_bindings:
            d = divisors(analysis, G, b)
            try:
                count = count_solutions(
                    phi, G, b, budget=budget, backend=backend, program=program,
                    workers=workers, chunks=workers,
                )  # fmt: skip
            except BudgetExceeded:
                count, verdict, status = None, None, "skipped"
            else:
                verdict = count % d.divisor == 0
                status = "ok" if verdict else "failed"
            report.results.append(
                GroupResult(
                    G.name, G.order, {c: G.element_names[v] for c, v in sorted(b.items())},
                    d.centralizer_order, d.divisor, d.centralizer_order_all, d.divisor_all,
                    count, verdict, status,
                )  # fmt: skip
            )
    return report
