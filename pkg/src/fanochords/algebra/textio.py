"""Plain-text polynomial and ideal files.

A file starts with a ring header::

    ring vars=z00,z01,z02,z10,z11,z12 field=Fp:32003 order=grevlex

followed by one polynomial per line.  Ideal files put an ``ideal`` line
between the header and the generators.  Whitespace is ignored inside
polynomials; ``#`` starts a comment.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .field import field_from_spec
from .monomial import OrderKind
from .polynomial import Polynomial, PolynomialRing


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\^|\*\*|\*|\+|-|/))")


def _tokenize(text: str, line: int):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), start))
        else:
            tok = m.group(3)
            tokens.append(("^" if tok == "**" else tok, tok, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def parse_polynomial(ring: PolynomialRing, text: str, line: int = 1) -> Polynomial:
    toks = _tokenize(text, line)
    i = 0

    def peek():
        return toks[i][0]

    def take(kind):
        nonlocal i
        t = toks[i]
        if t[0] != kind:
            what = "end of input" if t[0] == "end" else repr(t[1])
            raise ParseError(f"expected {kind}, found {what}", line, t[2] + 1)
        i += 1
        return t

    def number():
        n = Fraction(take("num")[1])
        if peek() == "/":
            take("/")
            d = take("num")
            if d[1] == 0:
                raise ParseError("zero denominator", line, d[2] + 1)
            n /= d[1]
        return n

    def factor(exps):
        t = toks[i]
        if t[0] == "num":
            return number()
        if t[0] == "var":
            take("var")
            try:
                j = ring.index(t[1])
            except KeyError:
                raise ParseError(f"unknown variable {t[1]!r}", line, t[2] + 1) from None
            e = 1
            if peek() == "^":
                take("^")
                e = take("num")[1]
            exps[j] += e
            return Fraction(1)
        what = "end of input" if t[0] == "end" else repr(t[1])
        raise ParseError(f"expected a coefficient or variable, found {what}", line, t[2] + 1)

    terms: dict = {}
    sign = 1
    if peek() in ("+", "-"):
        sign = -1 if take(peek())[0] == "-" else 1
    while True:
        exps = [0] * ring.nvars
        coeff = factor(exps)
        while peek() == "*":
            take("*")
            coeff *= factor(exps)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + sign * coeff
        if peek() == "end":
            break
        if peek() not in ("+", "-"):
            t = toks[i]
            raise ParseError(f"unexpected {t[1]!r}", line, t[2] + 1)
        sign = -1 if take(peek())[0] == "-" else 1
    return ring.from_dict(terms)


def _coeff_text(ring: PolynomialRing, c) -> tuple[int, str]:
    F = ring.field
    if F.is_prime_field:
        v = F.signed(c)
        return (-1 if v < 0 else 1), str(abs(v))
    c = Fraction(c)
    return (-1 if c < 0 else 1), str(abs(c))


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: terms in decreasing monomial order."""
    ring = f.ring
    if not f.terms:
        return "0"
    parts = []
    for exps, c in f.sorted_terms():
        sign, mag = _coeff_text(ring, c)
        factors = []
        for name, e in zip(ring.names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = mag
        elif mag == "1":
            body = "*".join(factors)
        else:
            body = "*".join([mag] + factors)
        parts.append(("-" if sign < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        text += f" {s} {body}"
    return text


def parse_ring_header(line: str, lineno: int = 1) -> PolynomialRing:
    fields = line.split()
    if not fields or fields[0] != "ring":
        raise ParseError("expected a 'ring' header", lineno, 1)
    opts = {}
    for item in fields[1:]:
        if "=" not in item:
            raise ParseError(f"malformed header item {item!r}", lineno, line.find(item) + 1)
        k, v = item.split("=", 1)
        opts[k] = v
    if "vars" not in opts:
        raise ParseError("ring header lacks vars=", lineno, 1)
    names = [v for v in opts["vars"].split(",") if v]
    field = field_from_spec(opts.get("field", "Fp:32003"))
    order = OrderKind.parse(opts.get("order", "grevlex"))
    return PolynomialRing(names, field, order)


def _content_lines(text: str):
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield n, line


def parse_ideal_text(text: str) -> tuple[PolynomialRing, list[Polynomial]]:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty ideal file", 1, 1)
    n0, header = lines[0]
    ring = parse_ring_header(header.strip(), n0)
    body = lines[1:]
    if body and body[0][1].strip() == "ideal":
        body = body[1:]
    gens = []
    for n, line in body:
        gens.append(parse_polynomial(ring, line, n))
    return ring, gens


def format_ideal_text(ring: PolynomialRing, gens) -> str:
    out = [ring.header(), "ideal"]
    out.extend(format_polynomial(g) for g in gens)
    return "\n".join(out) + "\n"
