"""Classical divisibility theorems as special cases of the main check.

* Frobenius: ``#{x : x^k = 1}`` is divisible by ``gcd(|G|, k)``.
* Solomon: a coefficient-free system with fewer equations than unknowns
  has a solution count divisible by ``|G|``.
* Gordon-Rodriguez-Villegas: the same when the exponent-sum matrix has
  rank below the number of unknowns.
* random: seeded random formulas against the general divisor.

Each case also checks that the general divisor specializes correctly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .counting import count_solutions
from .generate import FormulaParams, random_formula
from .groups import GroupTable
from .linalg import integer_rank
from .parser import parse_formula
from .verify import analyze, verify

SOLOMON_SYSTEMS = [
    ("[x1,x2] = 1", ("x1", "x2")),
    ("x1^2*x2^3 = 1", ("x1", "x2")),
    ("x1*x2*x3 = x3*x2*x1 & x1^2 = x2^2", ("x1", "x2", "x3")),
]
GRV_SYSTEMS = [
    ("x1^2*x2^2 = 1 & x1*x2*x1*x2 = 1 & x1^4 = x2^-4", ("x1", "x2")),
    ("x1*x2*x3 = 1 & x1^2*x2 = x3^-1*x2^-1*x1^-1*x2^2*x1", ("x1", "x2", "x3")),
    ("x1*x2*x3 = x3*x2*x1 & x1^2 = x2^2", ("x1", "x2", "x3")),
    ("x1^3*x2^-3 = 1 & x2*x1^2 = x1^2*x2 & [x1,x2]^2 = 1", ("x1", "x2")),
]


@dataclass
class CaseResult:
    suite: str
    formula: str
    group: str
    binding: dict[str, str]
    count: int | None
    divisor: int
    expected_divisor: int
    ok: bool
    seed: int | None = None


def frobenius(groups: Iterable[GroupTable], kmax: int = 24) -> list[CaseResult]:
    out = []
    for k in range(1, kmax + 1):
        phi = parse_formula(f"x1^{k} = 1", ["x1"])
        n = analyze(phi).n
        for G in groups:
            count = count_solutions(phi, G, {})
            divisor = math.gcd(G.order, n)
            expected = math.gcd(G.order, k)
            ok = divisor == expected and count % expected == 0
            out.append(CaseResult("frobenius", str(phi), G.name, {}, count, divisor, expected, ok))
    return out


def _coefficient_free(suite: str, systems, groups: Iterable[GroupTable]) -> list[CaseResult]:
    out = []
    groups = list(groups)
    for text, names in systems:
        phi = parse_formula(text, names, constants=())
        a = analyze(phi)
        if suite == "solomon" and len(phi.atoms()) >= phi.m:
            raise ValueError(f"not a Solomon system: {text}")
        if integer_rank(a.matrix) >= phi.m:
            raise ValueError(f"exponent matrix has full column rank: {text}")
        for G in groups:
            count = count_solutions(phi, G, {})
            divisor = math.gcd(G.order, a.n)
            ok = divisor == G.order and count % G.order == 0
            out.append(CaseResult(suite, str(phi), G.name, {}, count, divisor, G.order, ok))
    return out


def solomon(groups: Iterable[GroupTable]) -> list[CaseResult]:
    return _coefficient_free("solomon", SOLOMON_SYSTEMS, groups)


def grv(groups: Iterable[GroupTable]) -> list[CaseResult]:
    return _coefficient_free("grv", GRV_SYSTEMS, groups)


def random_suite(
    groups: Iterable[GroupTable],
    seed: int = 0,
    trials: int = 50,
    params: FormulaParams | None = None,
    max_bindings: int | None = None,
) -> list[CaseResult]:
    """``trials`` random formulas with seeds ``seed, seed+1, ...``."""
    groups = list(groups)
    out = []
    for s in range(seed, seed + trials):
        phi = random_formula(s, params)
        bindings = None
        if max_bindings is not None:
            from .verify import default_bindings

            consts = sorted(phi.constants)
            bindings = {G.name: default_bindings(consts, G, s)[:max_bindings] for G in groups}
        report = verify(phi, groups, bindings, seed=s)
        for r in report.results:
            out.append(
                CaseResult(
                    "random", report.formula, r.group, r.binding, r.count, r.divisor, r.divisor,
                    r.status != "failed", s,
                )  # fmt: skip
            )
    return out


SUITES = {"frobenius": frobenius, "solomon": solomon, "grv": grv, "random": random_suite}
