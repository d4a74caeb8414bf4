"""Recursive-descent parser for formulas.

Grammar::

    formula  := quant* impl
    impl     := disj ("->" impl)?
    disj     := conj ("|" conj)*
    conj     := lit ("&" lit)*
    lit      := "!" lit | quant lit | "(" formula ")" | equation
    quant    := ("forall" | "exists") ident
    equation := word "=" word
    word     := factor ("*" factor)*
    factor   := base ("^" exponent)*
    base     := ident | "1" | "(" word ")" | "[" word "," word "]"
    exponent := "-"? (integer | base)

``u^t`` with a non-integer exponent is conjugation ``t^-1 u t``; ``u^-t`` is
``t^-1 u^-1 t``; ``[u,v]`` is ``u^-1 v^-1 u v``.  A leading quantifier prefix scopes over the whole formula,
a quantifier in literal position scopes over that literal only.  Unicode
``∀ ∃ ¬ ∧ ∨ →`` are accepted as synonyms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .formula import (
    IDENTITY,
    And,
    Atomic,
    Exists,
    Forall,
    Formula,
    Node,
    Not,
    Or,
    Word,
    bound,
    const,
    free,
)


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        super().__init__(f"{message} at position {pos}" + (f": {text[pos:pos + 20]!r}" if text else ""))


_TOKEN = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<int>\d+)|(?P<op>->|→|[()\[\],*^=!&|\-∀∃¬∧∨]))"
)
_SYNONYMS = {"∀": "forall", "∃": "exists", "¬": "!", "∧": "&", "∨": "|", "→": "->"}
_KEYWORDS = {"forall", "exists"}


@dataclass(frozen=True)
class Token:
    kind: str  # ident, int, op, end
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise FormulaSyntaxError("unexpected character", start, text)
        kind = m.lastgroup
        start = m.start(kind)
        value = _SYNONYMS.get(m.group(kind), m.group(kind))
        if value in _KEYWORDS:
            kind = "kw"
        tokens.append(Token(kind, value, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Backtrack(Exception):
    pass


class _Parser:
    def __init__(self, text: str, free_vars: list[str], constants: set[str] | None):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.free_index = {n: k for k, n in enumerate(free_vars)}
        self.declared = constants
        self.used_constants: set[str] = set()
        self.scopes: list[tuple[str, str]] = []  # (source name, unique name)
        self.quantified = {
            self.toks[k + 1].value
            for k, t in enumerate(self.toks[:-1])
            if t.kind == "kw" and self.toks[k + 1].kind == "ident"
        }
        self.taken = set(free_vars) | set(constants or ()) | {
            t.value for t in self.toks if t.kind == "ident"
        }
        self.assigned: set[str] = set()

    # token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise FormulaSyntaxError(message, tok.pos, self.text)

    def accept(self, value: str) -> bool:
        if self.tok.kind in ("op", "kw") and self.tok.value == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str):
        if not self.accept(value):
            self.error(f"expected {value!r}")

    # formulas
    def formula(self) -> Node:
        if self.tok.kind == "kw":
            return self.quantified_node(self.formula)
        return self.impl()

    def quantified_node(self, parse_body) -> Node:
        kw = self.tok.value
        self.i += 1
        tok = self.tok
        if tok.kind != "ident":
            self.error("expected a variable after quantifier")
        name = tok.value
        if name in self.free_index:
            self.error(f"quantifier shadows free variable {name!r}", tok)
        if self.declared is not None and name in self.declared:
            self.error(f"quantifier shadows constant {name!r}", tok)
        self.i += 1
        unique = self.fresh(name)
        self.scopes.append((name, unique))
        try:
            body = parse_body()
        finally:
            self.scopes.pop()
        var = bound(unique)
        return Forall(var, body) if kw == "forall" else Exists(var, body)

    def fresh(self, name: str) -> str:
        if name not in self.assigned:
            self.assigned.add(name)
            return name
        k = 2
        while f"{name}_{k}" in self.taken or f"{name}_{k}" in self.assigned:
            k += 1
        unique = f"{name}_{k}"
        self.assigned.add(unique)
        return unique

    def impl(self) -> Node:
        left = self.disj()
        if self.accept("->"):
            return Or(Not(left), self.impl())
        return left

    def disj(self) -> Node:
        node = self.conj()
        while self.accept("|"):
            node = Or(node, self.conj())
        return node

    def conj(self) -> Node:
        node = self.lit()
        while self.accept("&"):
            node = And(node, self.lit())
        return node

    def lit(self) -> Node:
        if self.accept("!"):
            return Not(self.lit())
        if self.tok.kind == "kw":
            return self.quantified_node(self.lit)
        if self.tok.value == "(" and self.tok.kind == "op":
            start = self.i
            try:
                return self.equation(strict=True)
            except (_Backtrack, FormulaSyntaxError):
                self.i = start
            self.expect("(")
            node = self.formula()
            self.expect(")")
            return node
        return self.equation()

    def equation(self, strict: bool = False) -> Node:
        lhs = self.word()
        if strict and self.tok.value != "=":
            raise _Backtrack
        self.expect("=")
        rhs = self.word()
        return Atomic(lhs * rhs.inverse())

    # words
    def word(self) -> Word:
        w = self.factor()
        while self.accept("*"):
            w = w * self.factor()
        return w

    def factor(self) -> Word:
        w = self.base()
        while self.accept("^"):
            negate = self.accept("-")
            if self.tok.kind == "int":
                k = int(self.tok.value)
                self.i += 1
                w = w ** (-k if negate else k)
            else:
                by = self.base()
                w = (w.inverse() if negate else w).conjugate(by)
        return w

    def base(self) -> Word:
        tok = self.tok
        if tok.kind == "int":
            if tok.value != "1":
                self.error("only the integer 1 may stand for a group element")
            self.i += 1
            return IDENTITY
        if tok.kind == "ident":
            self.i += 1
            return Word.of(self.resolve(tok))
        if self.accept("("):
            w = self.word()
            self.expect(")")
            return w
        if self.accept("["):
            u = self.word()
            self.expect(",")
            v = self.word()
            self.expect("]")
            return u.inverse() * v.inverse() * u * v
        self.error("expected a group element")

    def resolve(self, tok: Token):
        name = tok.value
        for source, unique in reversed(self.scopes):
            if source == name:
                return bound(unique)
        if name in self.free_index:
            return free(name, self.free_index[name])
        if self.declared is None:
            if name in self.quantified:
                self.error(f"{name!r} used outside the scope of its quantifier", tok)
            self.used_constants.add(name)
            return const(name)
        if name in self.declared:
            return const(name)
        self.error(f"undeclared identifier {name!r}", tok)


def parse_formula(
    text: str, free_vars: Iterable[str], constants: Iterable[str] | None = None
) -> Formula:
    """Parse ``text`` with the ordered free-variable signature ``free_vars``.

    With ``constants=None`` every identifier that is neither free nor
    quantified is taken as a constant; otherwise undeclared names are errors.
    """
    free_vars = list(free_vars)
    if not free_vars:
        raise ValueError("a formula needs at least one free variable")
    if len(set(free_vars)) != len(free_vars):
        raise ValueError("free variable names must be distinct")
    for name in free_vars:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", name) or name in _KEYWORDS:
            raise ValueError(f"invalid free variable name {name!r}")
    declared = None if constants is None else set(constants)
    if declared is not None and declared & set(free_vars):
        raise ValueError("a name cannot be both a constant and a free variable")
    p = _Parser(text, free_vars, declared)
    body = p.formula()
    if p.tok.kind != "end":
        p.error("unexpected trailing input")
    consts = p.used_constants if declared is None else declared
    return Formula(tuple(free_vars), frozenset(consts), body)
