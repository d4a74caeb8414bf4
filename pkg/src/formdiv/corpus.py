"""A fixed set of formulas used by the property suites and the benchmark."""

from __future__ import annotations

from .formula import Formula
from .generate import FormulaParams, random_formula
from .parser import parse_formula

WORKED_EXAMPLE = (
    "forall y exists z (a*y*x1*x2^2*x1*y^3*x1*x2^2*b^z*x1^3 = 1"
    " & b^z*x1^6*x2*b^z = 1 | !(x1^2*x2 = 1))"
)
INTRO_EXAMPLE = "!(x1^3*x2 = a) | x1*x2^3 = b"

HANDWRITTEN: list[tuple[str, tuple[str, ...]]] = [
    (WORKED_EXAMPLE, ("x1", "x2")),
    (INTRO_EXAMPLE, ("x1", "x2")),
    ("x1^2 = 1", ("x1",)),
    ("x1^6 = 1 & x2^4 = 1", ("x1", "x2")),
    ("[x1,x2] = 1", ("x1", "x2")),
    ("forall y (y*x1 = x1*y)", ("x1",)),
    ("exists y (y^2 = x1)", ("x1",)),
    ("exists y (x1 = a^y)", ("x1",)),
    ("exists t (t^-1*g*t = x1^2)", ("x1",)),
    ("forall y (y*x1*y^-1 = x2) | x1^3 = x2^2", ("x1", "x2")),
    ("exists y (y*x1*y = x2*a)", ("x1", "x2")),
    ("forall y exists z (y*z*x1 = z*y*x2)", ("x1", "x2")),
    ("x1*x2*x3 = 1 & x1^2 = x3*x2", ("x1", "x2", "x3")),
    ("!(x1*a = b*x2) & x1^4*x2^2 = 1", ("x1", "x2")),
    ("exists y (y^-1*a*y*x1 = x2*y^-1*b*y)", ("x1", "x2")),
    ("forall y (y*x1^2*y^-1*x2 = x2*y*x1^2*y^-1)", ("x1", "x2")),
    ("exists y exists z (y*x1*z = z*x2*y & y^2 = z^3)", ("x1", "x2")),
    ("x1^3*x2 = a -> x1*x2^3 = b", ("x1", "x2")),
    ("forall y (x1*a^y = a^y*x1)", ("x1",)),
    ("exists y (y*x1*y^-1 = x1^-1)", ("x1",)),
    ("exists y (a^y*x1^2 = x2*b^y) & !(x1 = x2)", ("x1", "x2")),
    ("forall y (y^2 = 1 -> (y*x1)^2 = x1*x2)", ("x1", "x2")),
]

CORPUS_SIZE = 50


def corpus(size: int = CORPUS_SIZE) -> list[Formula]:
    """The handwritten formulas, then seeded random ones up to ``size``."""
    out = [parse_formula(text, names) for text, names in HANDWRITTEN][:size]
    seed = 1000
    while len(out) < size:
        out.append(random_formula(seed, FormulaParams(m=1 + seed % 2)))
        seed += 1
    return out
