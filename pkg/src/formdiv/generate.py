"""Seeded random formulas for property testing."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .formula import And, Atomic, Exists, Forall, Formula, Node, Not, Or, Word, bound, const, free


@dataclass(frozen=True)
class FormulaParams:
    m: int = 2
    max_quantifiers: int = 2
    max_atoms: int = 3
    max_word_length: int = 8
    constants: tuple[str, ...] = ("a", "b")
    max_exponent: int = 3
    # probability that a bound variable is made isolating
    isolating_rate: float = 0.25

    def __post_init__(self):
        if not 1 <= self.m <= 3:
            raise ValueError("m must be between 1 and 3")
        if not 0 <= self.max_quantifiers <= 2:
            raise ValueError("at most 2 quantifiers")
        if not 1 <= self.max_atoms <= 4:
            raise ValueError("between 1 and 4 atoms")
        if not 1 <= self.max_word_length <= 12:
            raise ValueError("word length between 1 and 12")


def random_formula(seed: int, params: FormulaParams | None = None) -> Formula:
    """Deterministic in ``seed``; bound variables are always governed.

    Roughly a quarter of the bound variables only ever appear as
    ``t^-1 * c * t`` with ``c`` a constant, so isolation is exercised.
    """
    p = params or FormulaParams()
    rng = random.Random(seed)
    signature = tuple(f"x{i + 1}" for i in range(p.m))
    xs = [free(n, i) for i, n in enumerate(signature)]
    cs = [const(c) for c in p.constants]
    q = rng.randint(0, p.max_quantifiers)
    ys = [bound(name) for name in ("y", "z")[:q]]
    isolating = {y for y in ys if cs and rng.random() < p.isolating_rate}
    plain = xs + [y for y in ys if y not in isolating] + cs

    def exponent() -> int:
        e = rng.randint(1, p.max_exponent)
        return e if rng.random() < 0.7 else -e

    def word() -> Word:
        letters = []
        length = rng.randint(1, p.max_word_length)
        while len(letters) < length:
            if isolating and rng.random() < 0.3 and length - len(letters) >= 3:
                t = rng.choice(sorted(isolating))
                letters += [(t, -1), (rng.choice(cs), exponent()), (t, 1)]
            else:
                letters.append((rng.choice(plain), exponent()))
        return Word(tuple(letters))

    atoms: list[Node] = [Atomic(word()) for _ in range(rng.randint(1, p.max_atoms))]
    while len(atoms) > 1:
        i = rng.randrange(len(atoms) - 1)
        left, right = atoms[i], atoms.pop(i + 1)
        atoms[i] = And(left, right) if rng.random() < 0.5 else Or(left, right)
        if rng.random() < 0.2:
            atoms[i] = Not(atoms[i])
    body = atoms[0]
    if rng.random() < 0.2:
        body = Not(body)
    for y in reversed(ys):
        body = Forall(y, body) if rng.random() < 0.5 else Exists(y, body)
        if rng.random() < 0.15:
            body = Not(body)
    return Formula(signature, frozenset(p.constants), body)
