"""Parser for a2 expressions such as ``13*sqrt(2)``, ``2^(3/4)`` or
``-10+2*sqrt(178)``.

Grammar (loosest binding first)::

    expr   := term (("+" | "-") term)*
    term   := power (("*" | "/") power)*
    power  := unary ("^" exponent)?
    unary  := "-" unary | atom
    atom   := INT | "(" expr ")" | "sqrt" "(" ["-"] INT ")"
            | "root2" "(" ["-"] INT "," INT ")" | "zeta3"
    exponent := ["-"] INT | "(" ["-"] INT ["/" INT] ")"

Unary minus binds tighter than ``^``, so ``-2^2`` is 4.  A rational exponent
is only accepted on the literal base 2.  All irrational
atoms of one expression must come from a single family: one ``sqrt(d)``, the
powers of 2, or ``zeta3``.  The field they generate is built as an extension
tower and the expression is evaluated there.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import NonSquareFree, ParseError, UnsupportedCompositum, UnsupportedDegree
from .field2adic import DEFAULT_PRECISION, ExtElement, ExtensionTower, build_tower, sqrt_2adic_integer

PRECISION_ENV = "MOD2RED_PRECISION"
MIN_PRECISION = 16


def default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if not raw:
        return DEFAULT_PRECISION
    try:
        prec = int(raw)
    except ValueError as exc:
        raise ValueError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from exc
    if prec < MIN_PRECISION:
        raise ValueError(f"precision must be at least {MIN_PRECISION}")
    return prec


# ---------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sqrt:
    d: int


@dataclass(frozen=True)
class Root2:
    p: int
    q: int


@dataclass(frozen=True)
class Zeta3:
    pass


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


# ---------------------------------------------------------------------------
# tokenizer and parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:  # only trailing whitespace is left
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^(),":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append(("op", ch, start))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.take()
        if text != value or kind == "end":
            raise ParseError(f"expected {value!r}, found {text or 'end of input'!r}", pos)

    def accept(self, value: str) -> bool:
        if self.peek()[1] == value and self.peek()[0] == "op":
            self.i += 1
            return True
        return False

    def parse(self):
        node = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.power()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.power())
        return node

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        return self.atom()

    def signed_int(self) -> int:
        neg = self.accept("-")
        kind, text, pos = self.take()
        if kind != "int":
            raise ParseError(f"expected an integer, found {text or 'end of input'!r}", pos)
        return -int(text) if neg else int(text)

    def power(self):
        base_pos = self.peek()[2]
        base = self.unary()
        if not self.accept("^"):
            return base
        exp_pos = self.peek()[2]
        if self.accept("("):
            num = self.signed_int()
            den = 1
            if self.accept("/"):
                den = self.signed_int()
            self.expect(")")
        else:
            num, den = self.signed_int(), 1
        if den == 0:
            raise ParseError("zero denominator in exponent", exp_pos)
        e = Fraction(num, den)
        if e.denominator == 1:
            return Pow(base, e.numerator)
        if base != Num(2):
            raise ParseError("rational exponents are only allowed on the base 2", base_pos)
        return Root2(e.numerator, e.denominator)

    def atom(self):
        kind, text, pos = self.take()
        if kind == "int":
            return Num(int(text))
        if kind == "op" and text == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "name":
            if text == "zeta3":
                return Zeta3()
            if text == "sqrt":
                self.expect("(")
                d_pos = self.peek()[2]
                d = self.signed_int()
                self.expect(")")
                _check_squarefree(d, d_pos)
                return Sqrt(d)
            if text == "root2":
                self.expect("(")
                p = self.signed_int()
                self.expect(",")
                q_pos = self.peek()[2]
                q = self.signed_int()
                self.expect(")")
                if q <= 0:
                    raise ParseError("root2 needs a positive denominator", q_pos)
                return Root2(p, q)
            raise ParseError(f"unknown name {text!r}", pos)
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)


def _check_squarefree(d: int, pos: int) -> None:
    if d == 0:
        raise NonSquareFree("sqrt(0) is not allowed")
    n = abs(d)
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            raise NonSquareFree(f"{d} is divisible by {f * f}")
        f += 1


def parse_expr(src: str):
    """Parse ``src`` into a syntax tree (no evaluation)."""
    return _Parser(src).parse()


# ---------------------------------------------------------------------------
# pretty printing

_PREC = {BinOp: 1, Neg: 3, Pow: 4}


def _level(node) -> int:
    if isinstance(node, BinOp):
        return 1 if node.op in "+-" else 2
    if isinstance(node, Pow):
        return 3
    if isinstance(node, Neg):
        return 4
    return 5


def format_expr(node) -> str:
    """Canonical text for a syntax tree; parsing it gives back the same tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sqrt):
        return f"sqrt({node.d})"
    if isinstance(node, Root2):
        return f"root2({node.p},{node.q})"
    if isinstance(node, Zeta3):
        return "zeta3"
    if isinstance(node, Neg):
        inner = format_expr(node.arg)
        return f"-{inner}" if _level(node.arg) >= 4 else f"-({inner})"
    if isinstance(node, Pow):
        base = format_expr(node.base)
        if _level(node.base) < 5 or isinstance(node.base, Num) and node.base.value < 0:
            base = f"({base})"
        return f"{base}^({node.exp})" if node.exp < 0 else f"{base}^{node.exp}"
    if isinstance(node, BinOp):
        lvl = _level(node)
        left = format_expr(node.left)
        if _level(node.left) < lvl:
            left = f"({left})"
        right = format_expr(node.right)
        # the right operand of a left-associative operator needs brackets at equal level
        if _level(node.right) <= lvl:
            right = f"({right})"
        return f"{left}{node.op}{right}"
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# towers and evaluation


def _atoms(node, acc: list) -> list:
    if isinstance(node, (Sqrt, Root2, Zeta3)):
        acc.append(node)
    elif isinstance(node, Neg):
        _atoms(node.arg, acc)
    elif isinstance(node, Pow):
        _atoms(node.base, acc)
    elif isinstance(node, BinOp):
        _atoms(node.left, acc)
        _atoms(node.right, acc)
    return acc


def _family(atom) -> tuple:
    if isinstance(atom, Sqrt):
        return ("sqrt", atom.d)
    if isinstance(atom, Root2):
        return ("root2",)
    return ("zeta3",)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def sqrt_tower(d: int, precision: int) -> tuple[ExtensionTower, ExtElement]:
    """The field Q_2(sqrt d) and the canonical square root of ``d``."""
    if d == 1:
        tw = build_tower(1, 1, precision=precision, label="Q2")
        return tw, tw.one()
    if d % 4 == 2:
        tw = build_tower(1, 2, [-d, 0, 1], precision, label=f"Q2(sqrt({d}))")
        return tw, tw.pi()
    if d % 4 == 3:
        # pi = 1 + sqrt(d) is a root of x^2 - 2x + (1 - d)
        tw = build_tower(1, 2, [1 - d, -2, 1], precision, label=f"Q2(sqrt({d}))")
        return tw, tw.pi() - 1
    if d % 8 == 1:
        tw = build_tower(1, 1, precision=precision, label="Q2")
        root = sqrt_2adic_integer(d, precision + 2)
        return tw, tw.element([root], prec=precision)
    # d = 5 mod 8: sqrt(d) = sqrt(-3) * sqrt(-d/3) and sqrt(-3) = 2w + 1
    tw = build_tower(2, 1, precision=precision, label=f"Q2(sqrt({d}))")
    w = tw.omega()
    sqrt_m3 = w.scale(2) + 1
    if d == -3:
        return tw, sqrt_m3
    mod = 1 << (precision + 4)
    s = (-d * pow(3, -1, mod)) % mod
    root = sqrt_2adic_integer(s, precision + 2)
    return tw, sqrt_m3 * tw.element([root, 0], prec=precision)


def _root2_tower(atoms: list[Root2], precision: int) -> ExtensionTower:
    e = 1
    for a in atoms:
        e = _lcm(e, Fraction(a.p, a.q).denominator)
    if e > 8:
        raise UnsupportedDegree(f"2-power roots need a degree {e} extension")
    label = "Q2" if e == 1 else f"Q2(2^(1/{e}))"
    return build_tower(1, e, precision=precision, label=label)


def _root2_value(tw: ExtensionTower, atom: Root2) -> ExtElement:
    n = Fraction(atom.p, atom.q) * tw.e
    assert n.denominator == 1
    n = int(n)
    whole, rest = divmod(n, tw.e)
    val = tw.pi() ** rest if rest else tw.one()
    return val.scale(Fraction(2) ** whole)


def tower_for(node, precision: int | None = None) -> ExtensionTower:
    """The smallest supported tower containing every atom of ``node``."""
    precision = precision or default_precision()
    atoms = _atoms(node, [])
    families = {_family(a) for a in atoms}
    if len(families) > 1:
        names = sorted(" ".join(map(str, f)) for f in families)
        raise UnsupportedCompositum(f"atoms from different fields: {', '.join(names)}")
    if not atoms:
        return build_tower(1, 1, precision=precision, label="Q2")
    first = atoms[0]
    if isinstance(first, Sqrt):
        return sqrt_tower(first.d, precision)[0]
    if isinstance(first, Root2):
        return _root2_tower(atoms, precision)
    return build_tower(2, 1, precision=precision, label="Q2(zeta3)")


def evaluate(node, tw: ExtensionTower) -> ExtElement:
    if isinstance(node, Num):
        return tw.from_int(node.value)
    if isinstance(node, Sqrt):
        return sqrt_tower(node.d, tw.working_precision)[1]
    if isinstance(node, Root2):
        return _root2_value(tw, node)
    if isinstance(node, Zeta3):
        return tw.omega()
    if isinstance(node, Neg):
        return -evaluate(node.arg, tw)
    if isinstance(node, Pow):
        return evaluate(node.base, tw) ** node.exp
    if isinstance(node, BinOp):
        a, b = evaluate(node.left, tw), evaluate(node.right, tw)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        return a / b
    raise TypeError(f"not an expression node: {node!r}")


def parse_a2(src: str, precision: int | None = None) -> tuple[ExtensionTower, ExtElement]:
    """Parse and evaluate an a2 expression in its natural tower."""
    node = parse_expr(src)
    tw = tower_for(node, precision)
    return tw, evaluate(node, tw)


def pretty(src: str) -> str:
    return format_expr(parse_expr(src))
