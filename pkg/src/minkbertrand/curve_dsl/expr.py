"""Expressions in one variable ``v``: tokenizer, recursive-descent parser,
serializer and a compiler to jet-valued closures.

Grammar::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := primary ("^" unary)?
    primary := NUMBER | "v" | "pi" | "e" | FUNC "(" expr ")" | "(" expr ")"

so ``-v^2`` is ``-(v^2)``, ``2^-1`` is legal and ``^`` is right-associative.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from ..errors import ParseError
from ..jets import ELEMENTARY, Jet3, jet_pow, jet_variable

FUNCTIONS = ("sin", "cos", "sinh", "cosh", "tan", "tanh", "exp", "ln", "sqrt")
CONSTANTS = {"pi": math.pi, "e": math.e}


@dataclass(frozen=True)
class Number:
    value: float
    name: Optional[str] = None


@dataclass(frozen=True)
class Variable:
    pass


@dataclass(frozen=True)
class Unary:
    op: str  # "neg" or a function tag
    child: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str  # one of + - * / ^
    left: "Expr"
    right: "Expr"


Expr = Union[Number, Variable, Unary, Binary]

_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()])"
    r")"
)


@dataclass(frozen=True)
class _Token:
    kind: str  # num, name, op, end
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    # offsets are reported in bytes of the UTF-8 encoding
    byte_at = lambda i: len(text[:i].encode("utf-8"))  # noqa: E731
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            tokens.append(_Token("end", "", byte_at(pos)))
            return tokens
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", byte_at(pos))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(_Token(kind, m.group(kind), byte_at(start)))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def _advance(self) -> _Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def _expect_op(self, op: str) -> None:
        t = self.tok
        if t.kind != "op" or t.text != op:
            found = "end of input" if t.kind == "end" else repr(t.text)
            raise ParseError(f"expected {op!r}, found {found}", t.offset)
        self.i += 1

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"expected operator or end of input, found {self.tok.text!r}", self.tok.offset)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self._advance().text
            node = Binary(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self._advance().text
            node = Binary(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.tok.kind == "op" and self.tok.text == "-":
            self._advance()
            return Unary("neg", self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.primary()
        if self.tok.kind == "op" and self.tok.text == "^":
            self._advance()
            return Binary("^", base, self.unary())
        return base

    def primary(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self._advance()
            return Number(float(t.text))
        if t.kind == "name":
            if t.text == "v":
                self._advance()
                return Variable()
            if t.text in CONSTANTS:
                self._advance()
                return Number(CONSTANTS[t.text], t.text)
            if t.text in FUNCTIONS:
                self._advance()
                self._expect_op("(")
                arg = self.expr()
                self._expect_op(")")
                return Unary(t.text, arg)
            raise ParseError(f"unknown identifier {t.text!r}", t.offset)
        if t.kind == "op" and t.text == "(":
            self._advance()
            node = self.expr()
            self._expect_op(")")
            return node
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"expected number, 'v', constant, function or '(', found {found}", t.offset)


def parse_expression(text: str) -> Expr:
    """Parse ``text`` into an expression tree; raises :class:`ParseError`."""
    return _Parser(text).parse()


def serialize(node: Expr) -> str:
    """Fully parenthesised text that parses back to an equal tree."""
    if isinstance(node, Number):
        return node.name if node.name else repr(node.value)
    if isinstance(node, Variable):
        return "v"
    if isinstance(node, Unary):
        if node.op == "neg":
            return f"(-{serialize(node.child)})"
        return f"{node.op}({serialize(node.child)})"
    return f"({serialize(node.left)}{node.op}{serialize(node.right)})"


def contains_variable(node: Expr) -> bool:
    if isinstance(node, Variable):
        return True
    if isinstance(node, Unary):
        return contains_variable(node.child)
    if isinstance(node, Binary):
        return contains_variable(node.left) or contains_variable(node.right)
    return False


JetFn = Callable[[Jet3], Jet3]


def compile_expression(node: Expr) -> JetFn:
    """Compile a tree into a closure mapping a parameter jet to a jet.

    Constant subtrees are folded to floats first.
    """
    fn = _compile(node)
    if callable(fn):
        return fn
    const = fn
    return lambda v: Jet3(const)


def _compile(node: Expr):
    # returns either a float (constant subtree) or a callable
    if isinstance(node, Number):
        return node.value
    if isinstance(node, Variable):
        return lambda v: v
    if not contains_variable(node):
        r = _compile_callable(node)(jet_variable(0.0))
        return r.c0 if isinstance(r, Jet3) else float(r)
    return _compile_callable(node)


def _compile_callable(node: Expr) -> JetFn:
    if isinstance(node, Variable):
        return lambda v: v
    if isinstance(node, Number):
        value = node.value
        return lambda v: value
    if isinstance(node, Unary):
        child = _compile(node.child)
        if node.op == "neg":
            if not callable(child):
                return lambda v: -child
            return lambda v: -child(v)
        impl = ELEMENTARY[node.op]
        if not callable(child):
            const = child
            return lambda v: impl(Jet3(const))
        return lambda v: impl(child(v))
    left = _compile(node.left)
    right = _compile(node.right)
    lf = left if callable(left) else (lambda v, c=left: Jet3(c))
    if node.op == "^":
        if callable(right):
            return lambda v: jet_pow(lf(v), right(v))
        return lambda v: jet_pow(lf(v), right)
    rf = right if callable(right) else (lambda v, c=right: c)
    op = node.op
    if op == "+":
        return lambda v: lf(v) + rf(v)
    if op == "-":
        return lambda v: lf(v) - rf(v)
    if op == "*":
        return lambda v: lf(v) * rf(v)
    return lambda v: lf(v) / rf(v)


def evaluate(node: Expr, v: float) -> float:
    return compile_expression(node)(jet_variable(v)).c0


def compile_many(nodes: Sequence[Expr]) -> Callable[[Jet3], list[Jet3]]:
    """Compile several trees into one straight-line program.

    Structurally equal subtrees (within and across the trees) are computed
    once per call, and constant subtrees are folded at compile time.
    """
    slots: dict[Expr, int] = {}
    program: list[tuple] = []
    consts: dict[int, float] = {}

    def emit(node: Expr) -> int:
        if node in slots:
            return slots[node]
        if not contains_variable(node):
            program.append(("const", _compile(node)))
            consts[len(program) - 1] = program[-1][1]
        elif isinstance(node, Variable):
            program.append(("var",))
        elif isinstance(node, Unary):
            i = emit(node.child)
            program.append(("neg", i) if node.op == "neg" else ("fn", ELEMENTARY[node.op], i))
        else:
            i, j = emit(node.left), emit(node.right)
            if node.op == "^":
                program.append(("powc", i, consts[j]) if j in consts else ("pow", i, j))
            else:
                program.append((node.op, i, j))
        slots[node] = len(program) - 1
        return slots[node]

    outputs = [emit(n) for n in nodes]

    def run(v: Jet3) -> list[Jet3]:
        vals: list = []
        push = vals.append
        for ins in program:
            op = ins[0]
            if op == "+":
                push(vals[ins[1]] + vals[ins[2]])
            elif op == "*":
                push(vals[ins[1]] * vals[ins[2]])
            elif op == "-":
                push(vals[ins[1]] - vals[ins[2]])
            elif op == "/":
                push(vals[ins[1]] / vals[ins[2]])
            elif op == "fn":
                push(ins[1](vals[ins[2]]))
            elif op == "const":
                push(ins[1])
            elif op == "var":
                push(v)
            elif op == "neg":
                push(-vals[ins[1]])
            elif op == "powc":
                x = vals[ins[1]]
                push(jet_pow(x if isinstance(x, Jet3) else Jet3(x), ins[2]))
            else:
                x = vals[ins[1]]
                push(jet_pow(x if isinstance(x, Jet3) else Jet3(x), vals[ins[2]]))
        out = []
        for k in outputs:
            x = vals[k]
            out.append(x if isinstance(x, Jet3) else Jet3(x))
        return out

    return run
