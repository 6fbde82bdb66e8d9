"""Text grammar for statistics.

    stat     := term ("+" term | "-" term)*
    term     := rational "*" term | rational | factor
    factor   := atom ("^" int)*
    atom     := builtin | "N(" word [";A=" intset] ")"
              | "biv(" word ";A=" intset ";B=" intset ";f=" poly ";g=" poly ")"
              | "T(U=" inttuple ";V=" inttuple ";C=" intset ";f=" poly ")"
    builtin  := "exc" | "des" | "maj" | "inv" | "fix" | "cyc2"
    poly     := arithmetic in x1..xm with rationals and + - * ^

Errors carry the offending position and what was expected.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .partial import PartialPermutation
from .patterns import BivincularPattern, builtin, BUILTINS, compile_bivincular, pattern_count
from .poly import Poly
from .translates import ConstrainedTranslate, RegularStatistic

_SYMBOLS = "+-*/^(){},;="


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.items.append(("INT", text[i:j], i))
                i = j
            elif ch.isalpha():
                j = i
                while j < len(text) and (text[j].isalnum()):
                    j += 1
                self.items.append(("NAME", text[i:j], i))
                i = j
            elif ch in _SYMBOLS:
                self.items.append((ch, ch, i))
                i += 1
            else:
                raise ParseError(i, "a token", ch)
        self.pos = 0

    def peek(self, ahead: int = 0):
        idx = self.pos + ahead
        if idx < len(self.items):
            return self.items[idx]
        return ("EOF", "", len(self.text))

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str | None = None):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(tok[2], what or repr(kind), tok[1])
        return self.next()


def parse_statistic(text: str) -> RegularStatistic:
    toks = _Tokens(text)
    stat = _parse_stat(toks)
    tok = toks.peek()
    if tok[0] != "EOF":
        raise ParseError(tok[2], "end of input or '+'", tok[1])
    return stat


def _parse_stat(toks: _Tokens) -> RegularStatistic:
    out = _parse_term(toks)
    while toks.peek()[0] in ("+", "-"):
        op = toks.next()[0]
        term = _parse_term(toks)
        out = out + term if op == "+" else out - term
    return out


def _parse_term(toks: _Tokens) -> RegularStatistic:
    if toks.peek()[0] in ("INT", "-"):
        coef = _parse_rational(toks)
        if toks.peek()[0] == "*":
            toks.next()
            return coef * _parse_term(toks)
        return RegularStatistic.constant(coef)
    return _parse_factor(toks)


def _parse_factor(toks: _Tokens) -> RegularStatistic:
    out = _parse_atom(toks)
    while toks.peek()[0] == "^":
        toks.next()
        tok = toks.expect("INT", "a positive integer exponent")
        d = int(tok[1])
        if d < 1:
            raise ParseError(tok[2], "an exponent >= 1", tok[1])
        out = out**d
    return out


def _parse_atom(toks: _Tokens) -> RegularStatistic:
    tok = toks.peek()
    if tok[0] != "NAME":
        raise ParseError(tok[2], "a statistic name, 'N', 'biv' or 'T'", tok[1])
    name = tok[1]
    if name in BUILTINS:
        toks.next()
        return builtin(name)
    if name == "N":
        return _parse_pattern(toks)
    if name == "biv":
        return _parse_bivincular(toks)
    if name == "T":
        return _parse_translate(toks)
    raise ParseError(tok[2], "one of " + ", ".join(sorted(BUILTINS)) + ", N, biv, T", name)


def _parse_pattern(toks: _Tokens) -> RegularStatistic:
    toks.expect("NAME")
    toks.expect("(")
    word = toks.expect("INT", "a pattern word like 132")[1]
    A: tuple[int, ...] = ()
    if toks.peek()[0] == ";":
        toks.next()
        _expect_name(toks, "A")
        toks.expect("=")
        A = _parse_intset(toks)
    toks.expect(")")
    return pattern_count(word, A=A)


def _parse_bivincular(toks: _Tokens) -> RegularStatistic:
    toks.expect("NAME")
    toks.expect("(")
    word = toks.expect("INT", "a pattern word like 21")[1]
    toks.expect(";")
    _expect_name(toks, "A")
    toks.expect("=")
    A = _parse_intset(toks)
    toks.expect(";")
    _expect_name(toks, "B")
    toks.expect("=")
    B = _parse_intset(toks)
    toks.expect(";")
    _expect_name(toks, "f")
    toks.expect("=")
    f = _parse_poly(toks)
    toks.expect(";")
    _expect_name(toks, "g")
    toks.expect("=")
    g = _parse_poly(toks)
    toks.expect(")")
    sigma = tuple(int(ch) for ch in word)
    return compile_bivincular(
        BivincularPattern(sigma, frozenset(A), frozenset(B), f, g)
    )


def _parse_translate(toks: _Tokens) -> RegularStatistic:
    toks.expect("NAME")
    toks.expect("(")
    _expect_name(toks, "U")
    toks.expect("=")
    U = _parse_inttuple(toks)
    toks.expect(";")
    _expect_name(toks, "V")
    toks.expect("=")
    V = _parse_inttuple(toks)
    toks.expect(";")
    _expect_name(toks, "C")
    toks.expect("=")
    C = _parse_intset(toks)
    toks.expect(";")
    _expect_name(toks, "f")
    toks.expect("=")
    f = _parse_poly(toks)
    toks.expect(")")
    translate = ConstrainedTranslate(PartialPermutation(U, V), frozenset(C), f)
    return RegularStatistic((translate,))


def _expect_name(toks: _Tokens, name: str):
    tok = toks.peek()
    if tok[0] != "NAME" or tok[1] != name:
        raise ParseError(tok[2], f"'{name}='", tok[1])
    toks.next()


def _parse_rational(toks: _Tokens) -> Fraction:
    sign = 1
    if toks.peek()[0] == "-":
        toks.next()
        sign = -1
    tok = toks.expect("INT", "a number")
    num = int(tok[1])
    if toks.peek()[0] == "/":
        toks.next()
        den_tok = toks.expect("INT", "a denominator")
        den = int(den_tok[1])
        if den == 0:
            raise ParseError(den_tok[2], "a nonzero denominator", "0")
        return Fraction(sign * num, den)
    return Fraction(sign * num)


def _parse_intlist(toks: _Tokens, close: str) -> tuple[int, ...]:
    out = []
    if toks.peek()[0] == "INT":
        out.append(int(toks.next()[1]))
        while toks.peek()[0] == ",":
            toks.next()
            out.append(int(toks.expect("INT", "an integer")[1]))
    toks.expect(close)
    return tuple(out)


def _parse_intset(toks: _Tokens) -> tuple[int, ...]:
    toks.expect("{")
    return _parse_intlist(toks, "}")


def _parse_inttuple(toks: _Tokens) -> tuple[int, ...]:
    toks.expect("(")
    return _parse_intlist(toks, ")")


# -- weight polynomials ------------------------------------------------


def _parse_poly(toks: _Tokens) -> Poly:
    out = _parse_poly_term(toks)
    while toks.peek()[0] in ("+", "-"):
        op = toks.next()[0]
        term = _parse_poly_term(toks)
        out = out + term if op == "+" else out - term
    return out


def _parse_poly_term(toks: _Tokens) -> Poly:
    out = _parse_poly_factor(toks)
    while toks.peek()[0] == "*":
        toks.next()
        out = out * _parse_poly_factor(toks)
    return out


def _parse_poly_factor(toks: _Tokens) -> Poly:
    out = _parse_poly_atom(toks)
    if toks.peek()[0] == "^":
        toks.next()
        tok = toks.expect("INT", "a nonnegative exponent")
        out = out ** int(tok[1])
    return out


def _parse_poly_atom(toks: _Tokens) -> Poly:
    tok = toks.peek()
    if tok[0] == "(":
        toks.next()
        out = _parse_poly(toks)
        toks.expect(")")
        return out
    if tok[0] == "-":
        toks.next()
        return -_parse_poly_factor(toks)
    if tok[0] == "INT":
        return Poly.const(_parse_rational(toks))
    if tok[0] == "NAME" and tok[1][0] == "x" and tok[1][1:].isdigit():
        toks.next()
        index = int(tok[1][1:])
        if index < 1:
            raise ParseError(tok[2], "a variable x1, x2, ...", tok[1])
        return Poly.variable(index - 1)
    raise ParseError(tok[2], "a number, variable or '('", tok[1])
