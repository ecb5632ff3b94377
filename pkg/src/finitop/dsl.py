"""Query language for counterexample search.

Grammar (``!`` binds tightest, then ``&``, ``|``, ``->``)::

    expr    := implies
    implies := or ("->" or)?
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "!" unary | pred | "(" expr ")"
    pred    := NAME "(" space ("," space)? ")"
    space   := VAR | NAME "(" space ("," space | "," INT)? ")"

Predicates: normal, vacnormal, t0, t1, irreducible, trivcompact (one space)
and homeo (two).  Space constructors: prod, sum (two spaces), star, t0q (one)
and power (space and exponent).  Variables are an uppercase letter optionally
followed by digits; all lowercase names are reserved.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import construct, props
from .core import is_homeomorphic
from .errors import QuerySyntaxError, UnboundVariable
from .maps import t0_quotient

UNARY_PREDICATES = ("normal", "vacnormal", "t0", "t1", "irreducible", "trivcompact")
BINARY_PREDICATES = ("homeo",)
PREDICATES = UNARY_PREDICATES + BINARY_PREDICATES
CONSTRUCTORS = {"prod": "ss", "sum": "ss", "star": "s", "t0q": "s", "power": "si"}


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Cons:
    op: str
    args: tuple

    def __str__(self):
        return f"{self.op}({', '.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class Pred:
    name: str
    args: tuple

    def __str__(self):
        return f"{self.name}({', '.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class Not:
    arg: object

    def __str__(self):
        return "!" + _wrap(self.arg, 3)


@dataclass(frozen=True)
class And:
    args: tuple

    def __str__(self):
        return " & ".join(_wrap(a, 2) for a in self.args)


@dataclass(frozen=True)
class Or:
    args: tuple

    def __str__(self):
        return " | ".join(_wrap(a, 1) for a in self.args)


@dataclass(frozen=True)
class Implies:
    lhs: object
    rhs: object

    def __str__(self):
        return f"{_wrap(self.lhs, 1)} -> {_wrap(self.rhs, 1)}"


def _level(node):
    if isinstance(node, Implies):
        return 0
    if isinstance(node, Or):
        return 1
    if isinstance(node, And):
        return 2
    return 3


def _wrap(node, level):
    s = str(node)
    return f"({s})" if _level(node) < level else s


def pretty(ast):
    return str(ast)


# -- lexer -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(->)|([!&|(),])|([A-Z][0-9]*)(?![A-Za-z_])|([a-z][a-z0-9_]*)|(\d+))")


@dataclass(frozen=True)
class Token:
    kind: str  # op, var, name, int, eof
    text: str
    pos: int   # 0-based


def tokenize(text):
    out = []
    i = 0
    while True:
        while i < len(text) and text[i].isspace():
            i += 1
        if i >= len(text):
            out.append(Token("eof", "", i))
            return out
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            raise QuerySyntaxError(i + 1, {"token"}, text)
        arrow, op, var, name, num = m.groups()
        start = m.start(m.lastindex)
        if arrow or op:
            out.append(Token("op", arrow or op, start))
        elif var:
            out.append(Token("var", var, start))
        elif name:
            out.append(Token("name", name, start))
        else:
            out.append(Token("int", num, start))
        i = m.end()


# -- parser ------------------------------------------------------------------

class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, expected):
        raise QuerySyntaxError(self.tok.pos + 1, expected, self.text)

    def accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            self.fail({text})

    def parse(self):
        node = self.implies()
        if self.tok.kind != "eof":
            self.fail({"&", "|", "->", "end of input"})
        return node

    def implies(self):
        lhs = self.or_()
        if self.accept("->"):
            return Implies(lhs, self.or_())
        return lhs

    def or_(self):
        items = [self.and_()]
        while self.accept("|"):
            items.append(self.and_())
        return items[0] if len(items) == 1 else Or(tuple(items))

    def and_(self):
        items = [self.unary()]
        while self.accept("&"):
            items.append(self.unary())
        return items[0] if len(items) == 1 else And(tuple(items))

    def unary(self):
        if self.accept("!"):
            return Not(self.unary())
        if self.accept("("):
            node = self.implies()
            self.expect(")")
            return node
        tok = self.tok
        if tok.kind == "name" and tok.text in PREDICATES:
            self.i += 1
            self.expect("(")
            args = [self.space()]
            if tok.text in BINARY_PREDICATES:
                self.expect(",")
                args.append(self.space())
            self.expect(")")
            return Pred(tok.text, tuple(args))
        self.fail({"!", "("} | set(PREDICATES))

    def space(self):
        tok = self.tok
        if tok.kind == "var":
            self.i += 1
            return Var(tok.text)
        if tok.kind == "name" and tok.text in CONSTRUCTORS:
            self.i += 1
            sig = CONSTRUCTORS[tok.text]
            self.expect("(")
            args = [self.space()]
            if len(sig) == 2:
                self.expect(",")
                if sig[1] == "i":
                    if self.tok.kind != "int":
                        self.fail({"integer"})
                    args.append(int(self.tok.text))
                    self.i += 1
                else:
                    args.append(self.space())
            self.expect(")")
            return Cons(tok.text, tuple(args))
        self.fail({"variable"} | set(CONSTRUCTORS))


def parse(text):
    return _Parser(text).parse()


# -- analysis and evaluation ------------------------------------------------

def free_vars(ast):
    if isinstance(ast, Var):
        return frozenset({ast.name})
    if isinstance(ast, (Cons, Pred, And, Or)):
        out = frozenset()
        for a in ast.args:
            if not isinstance(a, int):
                out |= free_vars(a)
        return out
    if isinstance(ast, Not):
        return free_vars(ast.arg)
    if isinstance(ast, Implies):
        return free_vars(ast.lhs) | free_vars(ast.rhs)
    raise TypeError(f"not a query node: {ast!r}")


def build_space(node, binding):
    if isinstance(node, Var):
        try:
            return binding[node.name]
        except KeyError:
            raise UnboundVariable(node.name) from None
    op = node.op
    if op == "prod":
        return construct.product(build_space(node.args[0], binding), build_space(node.args[1], binding))
    if op == "sum":
        return construct.sum_(build_space(node.args[0], binding), build_space(node.args[1], binding))
    if op == "star":
        return construct.star_extension(build_space(node.args[0], binding))
    if op == "t0q":
        return t0_quotient(build_space(node.args[0], binding))[0]
    if op == "power":
        return construct.power(build_space(node.args[0], binding), node.args[1])
    raise ValueError(f"unknown constructor {op!r}")


def evaluate(ast, binding):
    """Truth value of ``ast`` with variables bound to spaces."""
    if isinstance(ast, Pred):
        spaces = [build_space(a, binding) for a in ast.args]
        if ast.name == "homeo":
            return is_homeomorphic(*spaces)
        return bool(props.PREDICATES[ast.name](spaces[0]))
    if isinstance(ast, Not):
        return not evaluate(ast.arg, binding)
    if isinstance(ast, And):
        return all(evaluate(a, binding) for a in ast.args)
    if isinstance(ast, Or):
        return any(evaluate(a, binding) for a in ast.args)
    if isinstance(ast, Implies):
        return (not evaluate(ast.lhs, binding)) or evaluate(ast.rhs, binding)
    raise TypeError(f"not a formula: {ast!r}")


eval_query = evaluate
