"""Text grammars shared by the CLI.

Polynomials over prime fields are sums of terms ``c*T^e`` (also ``T``,
``c``, ``T^e``) with decimal integer coefficients reduced mod p, e.g.
``T^3+2*T+1``.  Extension-field polynomials are JSON arrays of
u-coefficient arrays (ascending T-powers).  Curves are sums of terms
``(<poly>)*X^i*Y^j`` with optional parts, e.g. ``Y^2-X^3-(T)*X-(1)``.

Canonical printing reduces every coefficient, joins terms with '+', and
sorts curve terms by (i, j) descending; parse(print(x)) == x.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .ffield import FiniteField
from .poly import Poly

_WS = " \t"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in _WS:
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def fail(self, message: str):
        self.skip_ws()
        raise ParseError(message, self.pos)


# -- polynomials --

def parse_poly(field: FiniteField, text: str) -> Poly:
    """Parse the polynomial grammar (prime field) or JSON form (extension)."""
    text = text.strip()
    if field.k > 1:
        return _poly_from_json(field, text)
    s = _Scanner(text)
    coeffs: dict[int, int] = {}
    sign = -1 if s.take("-") else 1
    if s.peek() == "" :
        s.fail("empty polynomial")
    while True:
        c, e = _poly_term(s, field)
        coeffs[e] = (coeffs.get(e, 0) + sign * c) % field.p
        ch = s.peek()
        if ch == "+":
            s.take("+")
            sign = 1
        elif ch == "-":
            s.take("-")
            sign = -1
        elif ch == "":
            break
        else:
            s.fail(f"unexpected character {ch!r}")
    size = max(coeffs) + 1 if coeffs else 0
    out = [0] * size
    for e, c in coeffs.items():
        out[e] = c
    return Poly(field, out)


def _poly_term(s: _Scanner, field: FiniteField):
    """One term -> (coefficient int, exponent int)."""
    ch = s.peek()
    if ch.isdigit():
        c = s.expect_int() % field.p
        if s.take("*"):
            if s.peek() != "T":
                s.fail("expected T after '*'")
            e = _t_part(s)
            return c, e
        return c, 0
    if ch == "T":
        return 1, _t_part(s)
    s.fail("expected a coefficient or T")


def _t_part(s: _Scanner) -> int:
    s.take("T")
    if s.take("^"):
        return s.expect_int()
    return 1


def _poly_from_json(field: FiniteField, text: str) -> Poly:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON polynomial: {exc.msg}", exc.pos)
    if not isinstance(data, list):
        raise ParseError("JSON polynomial must be an array", 0)
    coeffs = []
    for entry in data:
        if isinstance(entry, int):
            entry = [entry]
        if not (isinstance(entry, list)
                and all(isinstance(v, int) for v in entry)):
            raise ParseError("coefficients must be integer arrays", 0)
        coeffs.append(field.element_from_coeffs([v % field.p for v in entry]))
    return Poly(field, coeffs)


def poly_text(a: Poly) -> str:
    """Canonical text form; inverse of parse_poly on its own output."""
    field = a.field
    if field.k > 1:
        return json.dumps([list(field.element_coeffs(c)) for c in a.coeffs],
                          separators=(",", ":"))
    if not a.coeffs:
        return "0"
    parts = []
    for e in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[e]
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
        elif e == 1:
            parts.append("T" if c == 1 else f"{c}*T")
        else:
            parts.append(f"T^{e}" if c == 1 else f"{c}*T^{e}")
    return "+".join(parts)


# -- curves --

def parse_curve(field: FiniteField, text: str):
    """Parse a bivariate curve; returns a BivarPoly."""
    from .curves import BivarPoly
    text = text.rstrip()
    s = _Scanner(text)
    terms: dict[tuple[int, int], Poly] = {}
    sign = -1 if s.take("-") else 1
    if s.peek() == "":
        s.fail("empty curve")
    while True:
        coeff, i, j = _curve_term(s, field)
        if sign < 0:
            coeff = -coeff
        key = (i, j)
        acc = terms.get(key)
        coeff = coeff if acc is None else acc + coeff
        if coeff:
            terms[key] = coeff
        elif key in terms:
            del terms[key]
        ch = s.peek()
        if ch == "+":
            s.take("+")
            sign = 1
        elif ch == "-":
            s.take("-")
            sign = -1
        elif ch == "":
            break
        else:
            s.fail(f"unexpected character {ch!r}")
    return BivarPoly(field, terms)


def _curve_term(s: _Scanner, field: FiniteField):
    """One curve term -> (Poly coefficient, exponent i, exponent j)."""
    coeff = None
    ch = s.peek()
    if ch == "(":
        start = s.pos
        s.take("(")
        depth_pos = s.text.find(")", s.pos)
        if depth_pos < 0:
            raise ParseError("unclosed '('", start)
        inner = s.text[s.pos:depth_pos]
        try:
            coeff = parse_poly(field, inner)
        except ParseError as exc:
            raise ParseError(str(exc), s.pos + exc.offset)
        s.pos = depth_pos + 1
        if s.take("*") and s.peek() not in ("X", "Y"):
            s.fail("expected X or Y after '*'")
    elif ch.isdigit():
        c = s.expect_int()
        coeff = Poly(field, (c % field.p if field.k == 1 else
                             field.element_from_coeffs([c % field.p]),))
        if s.take("*") and s.peek() not in ("X", "Y"):
            s.fail("expected X or Y after '*'")
    i = j = 0
    if s.peek() == "X":
        s.take("X")
        i = s.expect_int() if s.take("^") else 1
        if s.take("*") and s.peek() != "Y":
            s.fail("expected Y after '*'")
    if s.peek() == "Y":
        s.take("Y")
        j = s.expect_int() if s.take("^") else 1
    if coeff is None:
        if i == 0 and j == 0:
            s.fail("expected a term")
        coeff = Poly(field, (field.one,))
    return coeff, i, j


def curve_text(F) -> str:
    """Canonical curve text: terms sorted by (i, j) descending."""
    items = sorted(F.terms.items(), key=lambda kv: kv[0], reverse=True)
    if not items:
        return "0"
    parts = []
    for (i, j), coeff in items:
        mono = []
        if i:
            mono.append("X" if i == 1 else f"X^{i}")
        if j:
            mono.append("Y" if j == 1 else f"Y^{j}")
        is_one = coeff.coeffs == (coeff.field.one,)
        if not mono:
            parts.append(f"({poly_text(coeff)})")
        elif is_one:
            parts.append("*".join(mono))
        else:
            parts.append("*".join([f"({poly_text(coeff)})"] + mono))
    return "+".join(parts)
