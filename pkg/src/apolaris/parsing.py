"""Text format for polynomials: a small recursive-descent parser and printer.

Grammar (whitespace is ignored between tokens)::

    poly     := sign? term (('+'|'-') term)*
    term     := coeff ('*'? mono)? | mono
    mono     := var ('^' uint)? ('*'? var ('^' uint)?)*
    var      := 'x' uint | 'w' uint
    coeff    := rational | rational? 'i' | '(' sign? part (('+'|'-') part)? ')'
    part     := rational | rational? 'i'
    rational := uint ('/' uint)?

``x`` variables are numbered 1..arity; ``w`` variables are homogenization
variables and are appended after the ``x`` block.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .gaussian import GaussianRational
from .poly import Poly


class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        self.message = message
        super().__init__(f"{message} at position {position}: {text!r}")


_VarRef = Tuple[str, int]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: Optional[int] = None):
        raise PolySyntaxError(msg, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str) -> None:
        if not self.eat(ch):
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an unsigned integer")
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        num = self.uint()
        if self.eat("/"):
            at = self.pos
            den = self.uint()
            if den == 0:
                self.error("zero denominator", at)
            return Fraction(num, den)
        return Fraction(num)

    def part(self) -> GaussianRational:
        """rational | rational? 'i'"""
        if self.eat("i"):
            return GaussianRational(0, 1)
        r = self.rational()
        if self.eat("i"):
            return GaussianRational(0, r)
        return GaussianRational(r)

    def coeff(self) -> GaussianRational:
        if self.eat("("):
            negate = self.eat("-")
            if not negate:
                self.eat("+")
            value = -self.part() if negate else self.part()
            while self.peek() in ("+", "-"):
                op = self.text[self.pos]
                self.pos += 1
                nxt = self.part()
                value = value + nxt if op == "+" else value - nxt
            self.expect(")")
            return value
        return self.part()

    def var(self) -> _VarRef:
        ch = self.peek()
        if ch not in ("x", "w"):
            self.error("expected a variable 'x<k>' or 'w<k>'")
        self.pos += 1
        at = self.pos
        k = self.uint()
        if k < 1:
            self.error("variable indices start at 1", at)
        return ch, k

    def mono(self) -> List[Tuple[_VarRef, int, int]]:
        factors = []
        while True:
            at = self.pos
            v = self.var()
            e = self.uint() if self.eat("^") else 1
            factors.append((v, e, at))
            save = self.pos
            if self.eat("*"):
                if self.peek() not in ("x", "w"):
                    self.error("expected a variable after '*'")
                continue
            self.pos = save
            if self.peek() not in ("x", "w"):
                return factors

    def term(self):
        ch = self.peek()
        if ch in ("x", "w"):
            return GaussianRational(1), self.mono()
        if ch.isdigit() or ch in ("i", "("):
            c = self.coeff()
            if self.eat("*"):
                return c, self.mono()
            if self.peek() in ("x", "w"):
                return c, self.mono()
            return c, []
        self.error(f"unexpected {ch!r}" if ch else "unexpected end of input")

    def poly(self):
        terms = []
        sign = 1
        if self.eat("-"):
            sign = -1
        else:
            self.eat("+")
        while True:
            c, m = self.term()
            terms.append((c * sign, m))
            ch = self.peek()
            if ch == "":
                return terms
            if ch not in ("+", "-"):
                self.error(f"unexpected {ch!r}")
            self.pos += 1
            sign = 1 if ch == "+" else -1


def parse(text: str, arity: int, fresh: Optional[int] = None) -> Poly:
    """Parse ``text`` into a :class:`Poly`.

    ``arity`` counts the ``x`` variables.  ``fresh`` is the number of ``w``
    variables; when omitted it is the largest ``w`` index in the text.  The
    result has arity ``arity + fresh``.
    """
    if arity < 1:
        raise ValueError("arity must be a positive integer")
    p = _Parser(text)
    terms = p.poly()
    max_w = max((v[1] for _, m in terms for v, _, _ in m if v[0] == "w"), default=0)
    nw = max_w if fresh is None else fresh
    total = arity + nw
    out: Dict[tuple, GaussianRational] = {}
    for c, m in terms:
        alpha = [0] * total
        for (kind, k), e, at in m:
            if kind == "x":
                if k > arity:
                    p.error(f"variable x{k} out of range for arity {arity}", at)
                alpha[k - 1] += e
            else:
                if k > nw:
                    p.error(f"variable w{k} out of range for {nw} fresh variables", at)
                alpha[arity + k - 1] += e
        key = tuple(alpha)
        s = out.get(key)
        out[key] = c if s is None else s + c
    return Poly(out, total, nw)


def _mono_str(p: Poly, alpha) -> str:
    parts = []
    for k, e in enumerate(alpha):
        if e:
            name = p.var_name(k)
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _term_str(c: GaussianRational, mono: str) -> Tuple[str, str]:
    """(sign, body) for one term."""
    if c.im == 0 or c.re == 0:
        val = c.re if c.im == 0 else c.im
        sign = "-" if val < 0 else "+"
        mag = abs(val)
        if c.im == 0:
            text = "" if (mag == 1 and mono) else str(mag)
        else:
            text = "i" if mag == 1 else f"{mag}i"
        if not mono:
            return sign, text
        return sign, f"{text}*{mono}" if text else mono
    body = str(c)
    return "+", f"{body}*{mono}" if mono else body


def format_poly(p: Poly) -> str:
    """Canonical text: descending lexicographic term order, exact coefficients."""
    if p.is_zero():
        return "0"
    out = []
    for alpha, c in p.sorted_terms():
        sign, body = _term_str(c, _mono_str(p, alpha))
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
