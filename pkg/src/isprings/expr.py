"""The ring expression language: tokenizer, recursive-descent parser, printer, elaborator.

    ring   := Zmod(INT) | Zint | prod(ring, ring, ...) | trivext(ring, module)
            | dup(ring, ideal) | quot(ring, ideal) | loc(ring, ideal)
    module := mod(INT, ...)
    ideal  := ideal(elem, ...)
    elem   := INT | (elem, elem, ...)

An integer element ``k`` denotes ``k * 1`` of the ring the ideal lives in;
a tuple denotes the element with that structured value.
"""

import re
from dataclasses import dataclass, field

from .ring import FiniteRing, format_value


class ExprError(Exception):
    exit_code = 1


class ParseError(ExprError):
    exit_code = 2

    def __init__(self, message, line, column):
        super().__init__(f"syntax error at line {line}, column {column}: {message}")
        self.line, self.column = line, column


class SemanticError(ExprError):
    exit_code = 3


# AST; positions are (line, column) and do not take part in equality


@dataclass(frozen=True)
class Zmod:
    n: int
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Zint:
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Prod:
    factors: tuple
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class ModuleLit:
    orders: tuple
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class IdealLit:
    elems: tuple
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Trivext:
    ring: object
    module: ModuleLit
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Dup:
    ring: object
    ideal: IdealLit
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Quot:
    ring: object
    ideal: IdealLit
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Loc:
    ring: object
    ideal: IdealLit
    pos: tuple = field(default=None, compare=False, repr=False)


_BINARY = {"dup": Dup, "quot": Quot, "loc": Loc}

_TOKEN = re.compile(r"\s+|(?P<int>-?\d+)|(?P<name>[A-Za-z_]\w*)|(?P<punct>[(),])")


def tokenize(text):
    """List of ``(kind, value, line, column)``, ending with an ``end`` token."""
    out, i, line, col = [], 0, 1, 1
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r}", line, col)
        kind = m.lastgroup
        if kind:
            out.append((kind, m.group(), line, col))
        for ch in m.group():
            line, col = (line + 1, 1) if ch == "\n" else (line, col + 1)
        i = m.end()
    out.append(("end", "", line, col))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], tok[3])

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            self.fail(f"expected {want}, found {got}")
        self.i += 1
        return tok

    def integer(self):
        return int(self.take("int")[1])

    def ring(self):
        tok = self.take("name")
        name, pos = tok[1], (tok[2], tok[3])
        if name == "Zint":
            return Zint(pos)
        if name == "Zmod":
            self.take("punct", "(")
            n = self.integer()
            self.take("punct", ")")
            return Zmod(n, pos)
        if name == "prod":
            self.take("punct", "(")
            factors = [self.ring()]
            while self.peek()[1] == ",":
                self.i += 1
                factors.append(self.ring())
            self.take("punct", ")")
            if len(factors) < 2:
                self.fail("prod needs at least two factors", tok)
            return Prod(tuple(factors), pos)
        if name == "trivext":
            self.take("punct", "(")
            base = self.ring()
            self.take("punct", ",")
            module = self.module()
            self.take("punct", ")")
            return Trivext(base, module, pos)
        if name in _BINARY:
            self.take("punct", "(")
            base = self.ring()
            self.take("punct", ",")
            ideal = self.ideal()
            self.take("punct", ")")
            return _BINARY[name](base, ideal, pos)
        self.fail(f"unknown ring constructor {name!r}", tok)

    def module(self):
        tok = self.take("name", "mod")
        self.take("punct", "(")
        orders = [self.integer()]
        while self.peek()[1] == ",":
            self.i += 1
            orders.append(self.integer())
        self.take("punct", ")")
        return ModuleLit(tuple(orders), (tok[2], tok[3]))

    def ideal(self):
        tok = self.take("name", "ideal")
        self.take("punct", "(")
        elems = [self.elem()]
        while self.peek()[1] == ",":
            self.i += 1
            elems.append(self.elem())
        self.take("punct", ")")
        return IdealLit(tuple(elems), (tok[2], tok[3]))

    def elem(self):
        if self.peek()[0] == "int":
            return self.integer()
        opening = self.take("punct", "(")
        parts = [self.elem()]
        while self.peek()[1] == ",":
            self.i += 1
            parts.append(self.elem())
        self.take("punct", ")")
        if len(parts) < 2:
            self.fail("a tuple element needs at least two components", opening)
        return tuple(parts)

    def finish(self, node):
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r} after expression")
        return node


def parse(text):
    p = _Parser(text)
    return p.finish(p.ring())


def parse_ideal(text):
    p = _Parser(text)
    return p.finish(p.ideal())


def parse_module(text):
    p = _Parser(text)
    return p.finish(p.module())


def to_text(node):
    """Canonical text; ``parse(to_text(t)) == t``."""
    if isinstance(node, Zmod):
        return f"Zmod({node.n})"
    if isinstance(node, Zint):
        return "Zint"
    if isinstance(node, Prod):
        return "prod(" + ", ".join(map(to_text, node.factors)) + ")"
    if isinstance(node, ModuleLit):
        return "mod(" + ", ".join(map(str, node.orders)) + ")"
    if isinstance(node, IdealLit):
        return "ideal(" + ", ".join(format_value(e) for e in node.elems) + ")"
    if isinstance(node, Trivext):
        return f"trivext({to_text(node.ring)}, {to_text(node.module)})"
    for name, cls in _BINARY.items():
        if isinstance(node, cls):
            return f"{name}({to_text(node.ring)}, {to_text(node.ideal)})"
    raise TypeError(f"not an expression node: {node!r}")


# elaboration


def _where(node):
    return f" (line {node.pos[0]}, column {node.pos[1]})" if node.pos else ""


def _guard(size, node, max_size):
    if max_size is not None and size > max_size:
        raise SemanticError(f"{to_text(node)} would have {size} elements, above the limit {max_size}{_where(node)}")


def elaborate_element(A, e):
    if isinstance(e, int):
        return A.multiple(e % A.characteristic, A.one)
    try:
        return A.lookup(e)
    except KeyError:
        raise SemanticError(f"{format_value(e)} is not an element of {A.provenance}") from None


def elaborate_ideal(A, lit):
    from .ideals import generated_ideal
    from .integers import IntegerRing, integer_ideal

    if isinstance(A, IntegerRing):
        if not all(isinstance(e, int) for e in lit.elems):
            raise SemanticError(f"elements of Zint are integers{_where(lit)}")
        return integer_ideal(*lit.elems)
    return generated_ideal(A, [elaborate_element(A, e) for e in lit.elems])


def elaborate_module(A, lit):
    from .module import make_module

    try:
        return make_module(A, lit.orders)
    except ValueError as exc:
        raise SemanticError(f"{exc}{_where(lit)}") from None


def _finite(node, max_size):
    R = elaborate(node, max_size)
    if not isinstance(R, FiniteRing):
        raise SemanticError(f"Zint cannot be used inside a construction{_where(node)}")
    return R


def elaborate(node, max_size=None):
    """Build the ring an AST denotes (``ZINT`` for ``Zint``); ``SemanticError`` on ill-typed input."""
    from .constructions import direct_product, dup, trivext
    from .integers import ZINT
    from .ring import localize_at_prime, make_zmod, quotient

    if isinstance(node, Zint):
        return ZINT
    if isinstance(node, Zmod):
        if node.n < 2:
            raise SemanticError(f"Zmod({node.n}) is not a ring with 1 != 0; need n >= 2{_where(node)}")
        _guard(node.n, node, max_size)
        return make_zmod(node.n)
    if isinstance(node, Prod):
        rings = [_finite(f, max_size) for f in node.factors]
        size = 1
        for R in rings:
            size *= R.size
        _guard(size, node, max_size)
        return direct_product(*rings)
    if isinstance(node, Trivext):
        A = _finite(node.ring, max_size)
        size = A.size
        for d in node.module.orders:
            size *= max(d, 1)
        _guard(size, node, max_size)
        return trivext(A, elaborate_module(A, node.module))
    A = _finite(node.ring, max_size)
    I = elaborate_ideal(A, node.ideal)
    if isinstance(node, Dup):
        _guard(A.size * I.size, node, max_size)
        return dup(A, I)
    if not I.is_proper:
        raise SemanticError(f"{to_text(node.ideal)} is the unit ideal of {A.provenance}{_where(node.ideal)}")
    if isinstance(node, Quot):
        return quotient(A, I)[0]
    try:
        return localize_at_prime(A, I)[0]
    except ValueError as exc:
        raise SemanticError(f"cannot localize: {exc}{_where(node.ideal)}") from None


def ring_from_text(text, max_size=None):
    return elaborate(parse(text), max_size)


def ideal_from_text(A, text):
    return elaborate_ideal(A, parse_ideal(text))


def module_from_text(A, text):
    return elaborate_module(A, parse_module(text))
