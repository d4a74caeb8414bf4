"""Brute-force semantics: evaluate formulas in finite groups and count solutions.

Two interchangeable kernels run the same interpreter over a flat program
(see :mod:`._program`).  The compiled one is used when the extension is
importable; set ``FORMDIV_BACKEND=python`` to force the fallback.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Mapping, Sequence

from ..formula import CONST, FREE, Formula, Word
from ..groups import GroupTable
from . import _pykernel
from ._program import BoundProgram, Program, bind, compile_formula

try:
    from . import _kernel
except ImportError:  # extension not built
    _kernel = None

DEFAULT_BUDGET = 10**8

BACKENDS = ("python",) + (("cython",) if _kernel is not None else ())
BACKEND = os.environ.get("FORMDIV_BACKEND") or ("cython" if _kernel is not None else "python")
if BACKEND not in BACKENDS:
    raise ImportError(f"FORMDIV_BACKEND={BACKEND!r} is not available (have {', '.join(BACKENDS)})")


class BudgetExceeded(RuntimeError):
    def __init__(self, estimate: int, budget: int):
        self.estimate = estimate
        self.budget = budget
        super().__init__(f"estimated {estimate} evaluations exceeds the budget of {budget}")


def resolve_binding(G: GroupTable, binding: Mapping[str, int | str]) -> dict[str, int]:
    """Accept element indices or element names."""
    return {c: (v if isinstance(v, int) else G.element(v)) for c, v in binding.items()}


def evaluate_word(
    w: Word,
    G: GroupTable,
    binding: Mapping[str, int],
    free_values: Sequence[int] = (),
    bound_values: Mapping[str, int] | None = None,
) -> int:
    """Left-to-right fold of ``letter^exponent`` through the Cayley table."""
    bound_values = bound_values or {}
    acc = G.identity
    for sym, e in w.letters:
        if sym.kind == CONST:
            value = binding.get(sym.name)
        elif sym.kind == FREE:
            value = free_values[sym.index] if sym.index < len(free_values) else None
        else:
            value = bound_values.get(sym.name)
        if value is None:
            raise KeyError(f"no value for symbol {sym.name!r}")
        acc = G.mult[acc][G.power(value, e)]
    return acc


def _run(bp: BoundProgram, lo: int, hi: int, backend: str) -> int:
    if backend == "python":
        return _pykernel.count_range(bp, lo, hi)
    if backend != "cython" or _kernel is None:
        raise ValueError(f"backend {backend!r} is not available")
    p = bp.program
    return _kernel.count_range(
        *p.arrays,
        bp.mult, bp.powtab, bp.env0,
        bp.order, bp.identity, p.m, p.free_base, p.root, lo, hi,
    )  # fmt: skip


def evaluate(
    phi: Formula,
    G: GroupTable,
    binding: Mapping[str, int | str],
    free_values: Sequence[int],
    backend: str | None = None,
) -> bool:
    if len(free_values) != phi.m:
        raise ValueError(f"expected {phi.m} free values, got {len(free_values)}")
    bp = bind(compile_formula(phi), G, resolve_binding(G, binding))
    idx = 0
    for v in free_values:
        idx = idx * G.order + v
    return bool(_run(bp, idx, idx + 1, backend or BACKEND))


def estimate_work(phi: Formula, G: GroupTable) -> int:
    return G.order ** (phi.m + len(phi.quantifiers()))


def count_solutions(
    phi: Formula,
    G: GroupTable,
    binding: Mapping[str, int | str],
    *,
    budget: int | None = DEFAULT_BUDGET,
    backend: str | None = None,
    chunks: int = 1,
    workers: int = 1,
    program: Program | None = None,
) -> int:
    """Number of free-variable tuples in ``G^m`` satisfying ``phi``.

    The tuple space may be split into ``chunks`` contiguous ranges, counted
    on ``workers`` threads (the compiled kernel releases the GIL); the total
    does not depend on the split.
    """
    if phi.m < 1:
        raise ValueError("counting needs at least one free variable")
    estimate = estimate_work(phi, G)
    if budget is not None and estimate > budget:
        raise BudgetExceeded(estimate, budget)
    bp = bind(program or compile_formula(phi), G, resolve_binding(G, binding))
    backend = backend or BACKEND
    total = bp.total
    chunks = max(1, min(chunks, total))
    bounds = [total * k // chunks for k in range(chunks + 1)]
    ranges = list(zip(bounds, bounds[1:]))
    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(workers) as pool:
            return sum(pool.map(lambda r: _run(bp, r[0], r[1], backend), ranges))
    return sum(_run(bp, lo, hi, backend) for lo, hi in ranges)


__all__ = [
    "BACKEND",
    "BACKENDS",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "compile_formula",
    "count_solutions",
    "estimate_work",
    "evaluate",
    "evaluate_word",
    "resolve_binding",
]
