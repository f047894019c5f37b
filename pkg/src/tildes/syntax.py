"""Recursive-descent parsers for formulae and extended expressions.

Formula syntax::

    iff     := implies ('<->' implies)*          left associative
    implies := or ('->' implies)?                 right associative
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '!' unary | primary
    primary := INT | '0' | 'true' | 'false' | 'mirror' '(' INT ')' | '(' iff ')'

Integers >= 1 are atoms; ``0`` and ``false`` are the false constant,
``true`` the true constant.

Expression syntax::

    sum     := cat ('+' cat)*
    cat     := post ('.'? post)*
    post    := atom ('*' | '+')*
    atom    := 'a'..'z' | '0' | '1' | '(' sum ')' | 'T' '[' iff ']' '(' [sum (',' sum)*] ')'

``+`` is postfix unless the next non-blank character can start an operand.
"""

from __future__ import annotations

from . import expr as ex
from . import formula as fm
from .errors import AtomOutOfRange, ParseError

_OPERAND_START = set("abcdefghijklmnopqrstuvwxyz01(T")


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def startswith(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def accept(self, token: str) -> bool:
        if self.startswith(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            found = self.peek() or "end of input"
            self.fail(f"expected {token!r}, found {found!r}")

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def word(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]

    def done(self):
        if self.peek():
            self.fail(f"unexpected {self.peek()!r}")


# -- formulae ---------------------------------------------------------------


def _iff(r: _Reader) -> fm.Formula:
    phi = _implies(r)
    while r.accept("<->"):
        phi = fm.Iff(phi, _implies(r))
    return phi


def _implies(r: _Reader) -> fm.Formula:
    lhs = _or(r)
    if r.accept("->"):
        return fm.Implies(lhs, _implies(r))
    return lhs


def _or(r: _Reader) -> fm.Formula:
    parts = [_and(r)]
    while r.accept("|"):
        parts.append(_and(r))
    return parts[0] if len(parts) == 1 else fm.Or(tuple(parts))


def _and(r: _Reader) -> fm.Formula:
    parts = [_unary(r)]
    while r.accept("&"):
        parts.append(_unary(r))
    return parts[0] if len(parts) == 1 else fm.And(tuple(parts))


def _unary(r: _Reader) -> fm.Formula:
    if r.accept("!"):
        return fm.Not(_unary(r))
    return _primary(r)


def _primary(r: _Reader) -> fm.Formula:
    c = r.peek()
    if c == "(":
        r.pos += 1
        phi = _iff(r)
        r.expect(")")
        return phi
    if c.isdigit():
        start = r.pos
        value = r.integer()
        if value == 0:
            return fm.FALSE
        if str(value) != r.text[start:r.pos]:
            r.pos = start
            r.fail("atoms are written without leading zeros")
        return fm.Atom(value)
    if c.isalpha():
        start = r.pos
        name = r.word()
        if name == "true":
            return fm.TRUE
        if name == "false":
            return fm.FALSE
        if name == "mirror":
            r.expect("(")
            n = r.integer()
            r.expect(")")
            return fm.mirror(n)
        r.pos = start
        r.fail(f"unknown name {name!r}")
    r.fail(f"unexpected {c!r}" if c else "unexpected end of input")


def parse_formula(text: str) -> fm.Formula:
    """Parse formula text; no reduction is applied."""
    r = _Reader(text)
    phi = _iff(r)
    r.done()
    return phi


# -- expressions -------------------------------------------------------------


def _sum(r: _Reader) -> ex.ExtExpr:
    e = _cat(r)
    while r.peek() == "+":
        r.pos += 1
        e = ex.smart_sum(e, _cat(r))
    return e


def _cat(r: _Reader) -> ex.ExtExpr:
    e = _post(r)
    while True:
        if r.accept("."):
            e = ex.smart_concat(e, _post(r))
        elif r.peek() in _OPERAND_START and r.peek():
            e = ex.smart_concat(e, _post(r))
        else:
            return e


def _postfix_plus(r: _Reader) -> bool:
    """True if the '+' under the cursor is the postfix operator."""
    save = r.pos
    r.pos += 1
    nxt = r.peek()
    r.pos = save
    return not (nxt and nxt in _OPERAND_START)


def _post(r: _Reader) -> ex.ExtExpr:
    e = _atom(r)
    while True:
        c = r.peek()
        if c == "*":
            r.pos += 1
            e = ex.Star(e)
        elif c == "+" and _postfix_plus(r):
            r.pos += 1
            e = ex.plus(e)
        else:
            return e


def _atom(r: _Reader) -> ex.ExtExpr:
    c = r.peek()
    if not c:
        r.fail("unexpected end of input")
    if "a" <= c <= "z":
        r.pos += 1
        return ex.Sym(c)
    if c == "0":
        r.pos += 1
        return ex.EMPTY
    if c == "1":
        r.pos += 1
        return ex.EPS
    if c == "(":
        r.pos += 1
        if r.peek() == ")":
            r.fail("empty group")
        e = _sum(r)
        r.expect(")")
        return e
    if c == "T":
        start = r.pos
        r.pos += 1
        r.expect("[")
        phi = _iff(r)
        r.expect("]")
        r.expect("(")
        operands = []
        if not r.accept(")"):
            operands.append(_sum(r))
            while r.accept(","):
                operands.append(_sum(r))
            r.expect(")")
        try:
            return ex.smart_tilde(phi, operands)
        except AtomOutOfRange as err:
            raise AtomOutOfRange(f"{err} (tilde at position {start})") from None
    r.fail(f"unexpected {c!r}")


def parse(text: str) -> ex.ExtExpr:
    """Parse an extended expression into smart-constructed form."""
    r = _Reader(text)
    e = _sum(r)
    r.done()
    return e
