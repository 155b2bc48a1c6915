"""A tiny expression language for eta quotients.

Grammar (whitespace insignificant):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ['^' ['-'] INT]
    atom   := INT | 'q' | 'f'INT | theta | spt2 | '(' expr ')'
    theta  := ('phi' | 'psi') '(' ['-'] 'q' ')'
    spt2   := 'spt2' '(' INT ',' INT ')'

'f12' is the eta product (q^12; q^12)_inf.  phi/psi are the classical theta
series; lowering rewrites them as eta quotients.  The spt2 atom names the
coefficient series sum spt2(a*n + b) q^n and only fixture runners accept it;
it has no eta-quotient form.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .products import ProductExpr
from .series import CoeffRing, Series, ZZ


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class LoweringError(ValueError):
    """Raised when an expression has no eta-quotient normal form."""


# -- AST ----------------------------------------------------------------

@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Q:
    pass


@dataclass(frozen=True)
class Eta:
    level: int


@dataclass(frozen=True)
class Theta:
    kind: str   # "phi" or "psi"
    sign: int   # +1 for f(q), -1 for f(-q)


@dataclass(frozen=True)
class Spt2:
    step: int
    offset: int


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Div:
    num: "Node"
    den: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


Node = Union[Lit, Q, Eta, Theta, Spt2, Neg, Add, Sub, Mul, Div, Pow]


# -- tokens -------------------------------------------------------------

_PUNCT = set("+-*/^(),")


@dataclass(frozen=True)
class _Token:
    kind: str   # NUMBER, NAME, one of _PUNCT, END
    text: str
    pos: int


def tokenize(text: str) -> list[_Token]:
    toks = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("NUMBER", text[i:j], i))
            i = j
        elif c.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            toks.append(_Token("NAME", text[i:j], i))
            i = j
        elif c in _PUNCT:
            toks.append(_Token(c, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    toks.append(_Token("END", "", n))
    return toks


class _Parser:
    def __init__(self, toks: list[_Token], allow_spt2: bool):
        self.toks = toks
        self.i = 0
        self.allow_spt2 = allow_spt2

    def peek(self) -> _Token:
        return self.toks[self.i]

    def next(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> _Token:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(f"expected {kind!r}, found {t.text or 'end of input'!r}", t.pos)
        return self.next()

    def parse(self) -> Node:
        node = self.expr()
        t = self.peek()
        if t.kind != "END":
            raise ParseError(f"unexpected trailing input {t.text!r}", t.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.next().kind
            rhs = self.factor()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def factor(self) -> Node:
        if self.peek().kind == "-":
            self.next()
            return Neg(self.factor())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek().kind == "^":
            self.next()
            sign = 1
            if self.peek().kind == "-":
                self.next()
                sign = -1
            t = self.peek()
            if t.kind != "NUMBER":
                raise ParseError("expected integer exponent", t.pos)
            self.next()
            return Pow(base, sign * int(t.text))
        return base

    def atom(self) -> Node:
        t = self.peek()
        if t.kind == "NUMBER":
            self.next()
            return Lit(int(t.text))
        if t.kind == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "NAME":
            return self.name_atom()
        raise ParseError(f"expected a value, found {t.text or 'end of input'!r}", t.pos)

    def name_atom(self) -> Node:
        t = self.next()
        name = t.text
        if name == "q":
            return Q()
        if name.startswith("f") and name[1:].isdigit():
            level = int(name[1:])
            if level >= 1:
                return Eta(level)
            raise ParseError(f"unknown name {name!r}", t.pos)
        if name in ("phi", "psi"):
            self.expect("(")
            sign = 1
            if self.peek().kind == "-":
                self.next()
                sign = -1
            arg = self.expect("NAME")
            if arg.text != "q":
                raise ParseError(f"expected 'q', found {arg.text!r}", arg.pos)
            self.expect(")")
            return Theta(name, sign)
        if name == "spt2" and self.allow_spt2:
            self.expect("(")
            a = self.expect("NUMBER")
            self.expect(",")
            b = self.expect("NUMBER")
            self.expect(")")
            return Spt2(int(a.text), int(b.text))
        raise ParseError(f"unknown name {name!r}", t.pos)


def parse_expression(text: str, allow_spt2: bool = False) -> Node:
    """Parse source text to an AST; errors carry the character offset."""
    return _Parser(tokenize(text), allow_spt2).parse()


# -- lowering to eta quotients -------------------------------------------

_THETA_FORMS = {
    # classical product forms, as {level: exponent}
    ("phi", 1): {2: 5, 1: -2, 4: -2},
    ("phi", -1): {1: 2, 2: -1},
    ("psi", 1): {2: 2, 1: -1},
    ("psi", -1): {1: 1, 4: 1, 2: -1},
}


def lower_to_product(node: Node) -> ProductExpr:
    """Rewrite an AST as a normalized sum of eta monomials."""
    if isinstance(node, Lit):
        return ProductExpr.single(node.value)
    if isinstance(node, Q):
        return ProductExpr.single(1, 1)
    if isinstance(node, Eta):
        return ProductExpr.single(1, 0, {node.level: 1})
    if isinstance(node, Theta):
        return ProductExpr.single(1, 0, _THETA_FORMS[(node.kind, node.sign)])
    if isinstance(node, Spt2):
        raise LoweringError("spt2 series atom has no eta-quotient form")
    if isinstance(node, Neg):
        return -lower_to_product(node.arg)
    if isinstance(node, Add):
        return lower_to_product(node.left) + lower_to_product(node.right)
    if isinstance(node, Sub):
        return lower_to_product(node.left) - lower_to_product(node.right)
    if isinstance(node, Mul):
        return lower_to_product(node.left) * lower_to_product(node.right)
    if isinstance(node, (Div, Pow)):
        if isinstance(node, Div):
            num, den, exp = node.num, node.den, -1
        else:
            num, den, exp = None, node.base, node.exp
        try:
            powered = lower_to_product(den) ** exp
        except ValueError as e:
            raise LoweringError(str(e)) from None
        if num is None:
            return powered
        return lower_to_product(num) * powered
    raise TypeError(f"not an expression node: {node!r}")


def expr_series(source: Union[str, Node], order: int, ring: CoeffRing = ZZ) -> Series:
    """Parse (if needed), lower, and expand to a Series."""
    from .products import expand_expr
    node = parse_expression(source) if isinstance(source, str) else source
    return expand_expr(lower_to_product(node), order, ring)


# -- pretty-printing ------------------------------------------------------

def _prec(node: Node) -> int:
    if isinstance(node, (Add, Sub)):
        return 1
    if isinstance(node, (Mul, Div)):
        return 2
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def pretty(node: Node) -> str:
    """Canonical source form; parse(pretty(t)) is structurally equal to t."""
    def wrap(child: Node, minimum: int) -> str:
        s = pretty(child)
        return f"({s})" if _prec(child) < minimum else s

    if isinstance(node, Lit):
        return str(node.value)
    if isinstance(node, Q):
        return "q"
    if isinstance(node, Eta):
        return f"f{node.level}"
    if isinstance(node, Theta):
        return f"{node.kind}({'q' if node.sign == 1 else '-q'})"
    if isinstance(node, Spt2):
        return f"spt2({node.step},{node.offset})"
    if isinstance(node, Neg):
        return f"-{wrap(node.arg, 3)}"
    if isinstance(node, Add):
        return f"{wrap(node.left, 1)} + {wrap(node.right, 2)}"
    if isinstance(node, Sub):
        return f"{wrap(node.left, 1)} - {wrap(node.right, 2)}"
    if isinstance(node, Mul):
        return f"{wrap(node.left, 2)}*{wrap(node.right, 3)}"
    if isinstance(node, Div):
        return f"{wrap(node.num, 2)}/{wrap(node.den, 3)}"
    if isinstance(node, Pow):
        return f"{wrap(node.base, 5)}^{node.exp}"
    raise TypeError(f"not an expression node: {node!r}")
