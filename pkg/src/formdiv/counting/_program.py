"""Flat integer encoding of a formula, shared by both counting kernels.

Every symbol gets a slot in an environment array: constants first, then
free variables in signature order, then bound variables.  Nodes are stored
in parallel arrays ``op``/``a``/``b``:

=========  ===================  =====================
op         a                    b
=========  ===================  =====================
ATOM       word index           unused
NOT        child                unused
AND, OR    left child           right child
FORALL     body                 slot of the variable
EXISTS     body                 slot of the variable
=========  ===================  =====================

Letters of word ``w`` are ``wstart[w] <= l < wstart[w + 1]``; letter ``l``
reads ``env[lslot[l]]`` raised to the power ``exps[lpow[l]]``.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import cached_property

from ..formula import CONST, FREE, And, Atomic, Exists, Forall, Formula, Not, Or
from ..groups import GroupTable

ATOM, NOT, AND, OR, FORALL, EXISTS = range(6)


@dataclass(frozen=True)
class Program:
    constants: tuple[str, ...]
    m: int
    quantifiers: int
    op: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    root: int
    wstart: tuple[int, ...]
    lslot: tuple[int, ...]
    lpow: tuple[int, ...]
    exps: tuple[int, ...]

    @cached_property
    def arrays(self) -> tuple[array, ...]:
        """``op, a, b, wstart, lslot, lpow`` as C-int buffers."""
        return tuple(array("i", xs) for xs in (self.op, self.a, self.b, self.wstart, self.lslot, self.lpow))

    @property
    def free_base(self) -> int:
        return len(self.constants)

    @property
    def env_size(self) -> int:
        return len(self.constants) + self.m + self.quantifiers


def compile_formula(phi: Formula) -> Program:
    constants = tuple(sorted(phi.constants | set(phi.occurring_constants())))
    slots = {("c", name): k for k, name in enumerate(constants)}
    base = len(constants)
    for i in range(phi.m):
        slots[("f", i)] = base + i
    for k, v in enumerate(phi.bound_variables()):
        slots[("b", v.name)] = base + phi.m + k

    op, a, b = [], [], []
    wstart, lslot, lpow = [0], [], []
    exps: dict[int, int] = {}

    def slot_of(sym):
        if sym.kind == CONST:
            return slots[("c", sym.name)]
        if sym.kind == FREE:
            return slots[("f", sym.index)]
        return slots[("b", sym.name)]

    def emit(code, x=0, y=0):
        op.append(code)
        a.append(x)
        b.append(y)
        return len(op) - 1

    def walk(node) -> int:
        if isinstance(node, Atomic):
            for sym, e in node.word.letters:
                lslot.append(slot_of(sym))
                lpow.append(exps.setdefault(e, len(exps)))
            wstart.append(len(lslot))
            return emit(ATOM, len(wstart) - 2)
        if isinstance(node, Not):
            return emit(NOT, walk(node.body))
        if isinstance(node, (And, Or)):
            left = walk(node.left)
            right = walk(node.right)
            return emit(AND if isinstance(node, And) else OR, left, right)
        body = walk(node.body)
        code = FORALL if isinstance(node, Forall) else EXISTS
        return emit(code, body, slots[("b", node.var.name)])

    root = walk(phi.body)
    return Program(
        constants,
        phi.m,
        len(phi.bound_variables()),
        tuple(op),
        tuple(a),
        tuple(b),
        root,
        tuple(wstart),
        tuple(lslot),
        tuple(lpow),
        tuple(sorted(exps, key=exps.get)),
    )


@dataclass(frozen=True)
class BoundProgram:
    """A program together with a group and values for its constants."""

    program: Program
    order: int
    identity: int
    mult: array  # flat N*N, row-major
    powtab: array  # flat len(exps)*N
    env0: array  # constants filled, the rest zero

    @property
    def total(self) -> int:
        return self.order ** self.program.m


def bind(program: Program, G: GroupTable, binding: dict[str, int]) -> BoundProgram:
    missing = [c for c in program.constants if c not in binding]
    if missing:
        raise KeyError(f"no value bound for constant(s) {', '.join(missing)}")
    N = G.order
    for c in program.constants:
        if not 0 <= binding[c] < N:
            raise ValueError(f"constant {c} bound to invalid element index {binding[c]}")
    mult = array("i", (x for row in G.mult for x in row))
    powtab = array("i", (G.power(g, e) for e in program.exps for g in range(N)))
    env0 = array("i", [0] * program.env_size)
    for k, c in enumerate(program.constants):
        env0[k] = binding[c]
    return BoundProgram(program, N, G.identity, mult, powtab, env0)
