"""Formula AST over the group language with constants.

A :class:`Word` is a freely reduced product of ``(Symbol, exponent)``
letters.  An atomic formula asserts that its word equals the identity;
equations ``u = v`` are stored as ``u * v^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Iterator, Sequence, Union

CONST = "const"
FREE = "free"
BOUND = "bound"


@dataclass(frozen=True, order=True)
class Symbol:
    kind: str
    name: str
    # signature position for free variables, -1 otherwise
    index: int = -1

    def __str__(self) -> str:
        return self.name


def const(name: str) -> Symbol:
    return Symbol(CONST, name)


def free(name: str, index: int) -> Symbol:
    return Symbol(FREE, name, index)


def bound(name: str) -> Symbol:
    return Symbol(BOUND, name)


Letter = tuple[Symbol, int]


def reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Merge adjacent equal symbols and drop letters with exponent 0."""
    out: list[Letter] = []
    for sym, e in letters:
        if e == 0:
            continue
        if out and out[-1][0] == sym:
            e += out[-1][1]
            out.pop()
            if e == 0:
                continue
        out.append((sym, e))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", reduce_letters(self.letters))

    @classmethod
    def of(cls, sym: Symbol, e: int = 1) -> "Word":
        return cls(((sym, e),))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((s, -e) for s, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "Word":
        if len(self.letters) == 1:
            s, e = self.letters[0]
            return Word(((s, e * k),))
        base = self if k >= 0 else self.inverse()
        return Word(base.letters * abs(k))

    def conjugate(self, by: "Word") -> "Word":
        """``self^by = by^-1 * self * by``."""
        return by.inverse() * self * by

    def symbols(self) -> set[Symbol]:
        return {s for s, _ in self.letters}

    def exponent_sum(self, sym: Symbol) -> int:
        return sum(e for s, e in self.letters if s == sym)

    def unit_letters(self) -> list[Letter]:
        """Expand ``s^e`` into ``|e|`` letters ``s^(+-1)``."""
        return [(s, 1 if e > 0 else -1) for s, e in self.letters for _ in range(abs(e))]

    def substitute(self, mapping: Callable[[Symbol], "Word | None"]) -> "Word":
        """Replace each symbol ``s`` by ``mapping(s)`` (``None`` keeps it)."""
        out: list[Letter] = []
        for s, e in self.letters:
            image = mapping(s)
            if image is None:
                out.append((s, e))
            else:
                out.extend((image ** e).letters)
        return Word(tuple(out))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "*".join(s.name if e == 1 else f"{s.name}^{e}" for s, e in self.letters)


IDENTITY = Word()


# -- formula nodes ---------------------------------------------------------


@dataclass(frozen=True)
class Atomic:
    word: Word


@dataclass(frozen=True)
class Not:
    body: "Node"


@dataclass(frozen=True)
class And:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Or:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Forall:
    var: Symbol
    body: "Node"


@dataclass(frozen=True)
class Exists:
    var: Symbol
    body: "Node"


Node = Union[Atomic, Not, And, Or, Forall, Exists]
Quantifier = (Forall, Exists)


@dataclass(frozen=True)
class Formula:
    signature: tuple[str, ...]
    constants: frozenset[str]
    body: Node
    # free-variable symbols in signature order
    free_symbols: tuple[Symbol, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.signature)) != len(self.signature):
            raise ValueError("signature names must be distinct")
        object.__setattr__(
            self, "free_symbols", tuple(free(n, i) for i, n in enumerate(self.signature))
        )

    @property
    def m(self) -> int:
        return len(self.signature)

    def atoms(self) -> list[Word]:
        return [a.word for a in iter_nodes(self.body) if isinstance(a, Atomic)]

    def quantifiers(self) -> list[Node]:
        return [q for q in iter_nodes(self.body) if isinstance(q, Quantifier)]

    def bound_variables(self) -> list[Symbol]:
        return [q.var for q in self.quantifiers()]

    def occurring_constants(self) -> list[str]:
        names = {s.name for w in self.atoms() for s in w.symbols() if s.kind == CONST}
        return sorted(names)

    def with_body(self, body: Node, constants: Iterable[str] | None = None) -> "Formula":
        return Formula(
            self.signature, self.constants if constants is None else frozenset(constants), body
        )

    def __str__(self) -> str:
        return pretty(self.body)


def iter_nodes(node: Node) -> Iterator[Node]:
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        if isinstance(n, (And, Or)):
            stack.append(n.right)
            stack.append(n.left)
        elif isinstance(n, (Not, Forall, Exists)):
            stack.append(n.body)


def map_words(node: Node, fn: Callable[[Word], Word]) -> Node:
    if isinstance(node, Atomic):
        return Atomic(fn(node.word))
    if isinstance(node, (And, Or)):
        return type(node)(map_words(node.left, fn), map_words(node.right, fn))
    if isinstance(node, Not):
        return Not(map_words(node.body, fn))
    return type(node)(node.var, map_words(node.body, fn))


# -- printing --------------------------------------------------------------

_PREC = {Or: 1, And: 2}


def pretty(node: Node) -> str:
    """Render in the concrete grammar accepted by :func:`formdiv.parser.parse_formula`."""
    if isinstance(node, Atomic):
        return f"{node.word} = 1"
    if isinstance(node, Not):
        return "!" + _wrap(node.body, 4)
    if isinstance(node, (And, Or)):
        op = " & " if isinstance(node, And) else " | "
        p = _PREC[type(node)]
        # left-associative: the right operand needs parentheses at equal precedence
        return _wrap(node.left, p) + op + _wrap(node.right, p + 1)
    kw = "forall" if isinstance(node, Forall) else "exists"
    return f"{kw} {node.var.name} ({pretty(node.body)})"


def _wrap(node: Node, min_prec: int) -> str:
    text = pretty(node)
    if isinstance(node, (And, Or)) and _PREC[type(node)] < min_prec:
        return f"({text})"
    if isinstance(node, Quantifier) or (isinstance(node, Atomic) and min_prec >= 4):
        return f"({text})"
    return text


# -- analysis and transformations -------------------------------------------


def classify_variables(phi: Formula) -> tuple[set[str], set[str]]:
    """Free variables that occur, and all quantified variables."""
    occurring = {s.name for w in phi.atoms() for s in w.symbols() if s.kind == FREE}
    return occurring, {v.name for v in phi.bound_variables()}


@dataclass(frozen=True)
class Isolation:
    isolating: frozenset[str]
    isolated: frozenset[str]
    non_isolated: frozenset[str]


def _isolating_spans(word: Word, t: Symbol) -> list[tuple[int, int]] | None:
    """Spans ``(i, j)`` of letters ``t^-1 g... t``; ``None`` if ``t`` occurs otherwise."""
    letters = word.letters
    spans = []
    i = 0
    while i < len(letters):
        s, e = letters[i]
        if s != t:
            i += 1
            continue
        if e != -1:
            return None
        j = i + 1
        while j < len(letters) and letters[j][0].kind == CONST:
            j += 1
        if j == i + 1 or j == len(letters) or letters[j] != (t, 1):
            return None
        spans.append((i, j))
        i = j + 1
    return spans


def detect_isolated(phi: Formula) -> Isolation:
    """Isolating bound variables and isolated coefficients.

    A bound variable ``t`` is isolating when every occurrence has the exact
    shape ``t^-1 * g1^e1 * ... * t`` with only constants inside.  A constant is
    isolated when each of its occurrences lies inside such a span.
    """
    words = phi.atoms()
    isolating = set()
    spans_by_word: list[list[tuple[int, int]]] = [[] for _ in words]
    for t in phi.bound_variables():
        found = [_isolating_spans(w, t) for w in words]
        if any(sp is None for sp in found):
            continue
        isolating.add(t.name)
        for acc, sp in zip(spans_by_word, found):
            acc.extend(sp)

    inside: set[str] = set()
    outside: set[str] = set()
    for w, spans in zip(words, spans_by_word):
        covered = {k for i, j in spans for k in range(i + 1, j)}
        for k, (s, _) in enumerate(w.letters):
            if s.kind == CONST:
                (inside if k in covered else outside).add(s.name)
    return Isolation(frozenset(isolating), frozenset(inside - outside), frozenset(outside))


def _find_bound(phi: Formula, name: str) -> Symbol:
    for v in phi.bound_variables():
        if v.name == name:
            return v
    raise ValueError(f"{name!r} is not a bound variable of the formula")


def substitute_bound(phi: Formula, y: str, mode: str, c: str) -> Formula:
    """Rewrite bound ``y`` as ``c^-1 y c`` (``mode="conjugate"``) or ``y c``
    (``mode="right"``) in every atomic subformula.

    Quantifiers range over the whole group, so the solution set is unchanged.
    """
    var = _find_bound(phi, y)
    cw = Word.of(const(c))
    yw = Word.of(var)
    if mode == "conjugate":
        image = yw.conjugate(cw)
    elif mode == "right":
        image = yw * cw
    else:
        raise ValueError(f"unknown substitution mode {mode!r}")
    body = map_words(phi.body, lambda w: w.substitute(lambda s: image if s == var else None))
    return phi.with_body(body, phi.constants | {c})


def change_free_variable(phi: Formula, i: int, j: int, k: int) -> Formula:
    """Replace ``x_i`` by ``x_i * x_j^k`` (0-based signature positions).

    An invertible change of variables: solution counts are preserved and
    column ``j`` of the formula matrix gains ``k`` times column ``i``.
    """
    if i == j:
        raise ValueError("change_free_variable needs i != j")
    xi, xj = phi.free_symbols[i], phi.free_symbols[j]
    image = Word.of(xi) * Word.of(xj, k)
    body = map_words(phi.body, lambda w: w.substitute(lambda s: image if s == xi else None))
    return phi.with_body(body)


def exponent_vector(word: Word, free_symbols: Sequence[Symbol]) -> tuple[int, ...]:
    return tuple(word.exponent_sum(x) for x in free_symbols)


def rename_bound(phi: Formula, renames: dict[str, str]) -> Formula:
    """Alpha-rename bound variables; used to test name independence."""

    def ren(s: Symbol) -> Symbol:
        return replace(s, name=renames[s.name]) if s.kind == BOUND and s.name in renames else s

    def go(node: Node) -> Node:
        if isinstance(node, Atomic):
            return Atomic(Word(tuple((ren(s), e) for s, e in node.word.letters)))
        if isinstance(node, (And, Or)):
            return type(node)(go(node.left), go(node.right))
        if isinstance(node, Not):
            return Not(go(node.body))
        return type(node)(ren(node.var), go(node.body))

    return phi.with_body(go(phi.body))
