"""Tiny expression language for function-algebra elements.

Atoms x, y, E, Z, q, s and integers combine by juxtaposition, ^ with an
integer exponent, + and -, and / (right factor inverted).  star() and
haar() apply the involution and the invariant state.  The printer emits
the same language and round-trips through the parser; scalars print in
q whenever every power of s is even.
"""

from __future__ import annotations

import re

from .funcalg import AlgElement
from .haar import haar_state
from .scalars import Scalar
from .zfunc import ZFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(.))")

_ATOMS = {
    "x": AlgElement.x,
    "y": AlgElement.y,
    "E": lambda: AlgElement.e_power(1),
    "Z": AlgElement.zeta,
    "q": lambda: AlgElement.from_coeff(ZFunc.const(Scalar.q_power(1))),
    "s": lambda: AlgElement.from_coeff(ZFunc.const(Scalar.s_power(1))),
}


def tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        if m.group(1):
            out.append(("int", int(m.group(1))))
        elif m.group(2):
            out.append(("name", m.group(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ValueError(f"stray character {ch!r}")
            out.append((ch, ch))
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def next(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        if self.peek() != kind:
            raise ValueError(f"expected {kind!r} at token {self.pos}")
        return self.next()

    def parse_expr(self):
        negate = False
        if self.peek() == "-":
            self.next()
            negate = True
        out = self.parse_term()
        if negate:
            out = -out
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            t = self.parse_term()
            out = out + t if op == "+" else out - t
        return out

    def parse_term(self):
        out = self.parse_factor()
        while True:
            nxt = self.peek()
            if nxt in ("*", "/"):
                op = self.next()[0]
                f = self.parse_factor()
                out = out * f if op == "*" else out * f.inverse()
            elif nxt in ("int", "name", "("):
                out = out * self.parse_factor()
            else:
                return out

    def parse_factor(self):
        base = self.parse_atom()
        if self.peek() == "^":
            self.next()
            sign = 1
            if self.peek() in ("-", "+"):
                sign = -1 if self.next()[0] == "-" else 1
            n = self.expect("int")[1]
            base = base ** (sign * n)
        return base

    def parse_atom(self):
        kind, val = self.next()
        if kind == "int":
            return AlgElement.from_coeff(val)
        if kind == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if kind == "name":
            if val in _ATOMS:
                return _ATOMS[val]()
            if val in ("star", "haar"):
                self.expect("(")
                inner = self.parse_expr()
                self.expect(")")
                if val == "star":
                    return inner.star()
                return AlgElement.from_coeff(ZFunc.const(haar_state(inner)))
            raise ValueError(f"unknown name {val!r}")
        raise ValueError(f"unexpected token {val!r}")


def parse(text):
    p = _Parser(tokenize(text))
    out = p.parse_expr()
    if p.pos != len(p.toks):
        raise ValueError("trailing input")
    return out


# ---------------------------------------------------------------------------
# printing


def _poly_str(coeffs, var):
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if abs(c) == 1 else f"{abs(c)} "
            if c < 0:
                head = "-" + head
            parts.append(head + (var if i == 1 else f"{var}^{i}"))
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:].lstrip() if p.startswith("-") else " + " + p
    return out


def _halved(coeffs):
    if any(c for i, c in enumerate(coeffs) if i % 2):
        return None
    return coeffs[::2]


def scalar_str(c):
    num, den = c.num, c.den
    hn, hd = _halved(num), _halved(den)
    var = "q" if hn is not None and hd is not None else "s"
    if var == "q":
        num, den = hn, hd
    n = _poly_str(num, var)
    if len(den) == 1 and den[0] == 1:
        return n
    d = _poly_str(den, var)
    if _needs_parens(n):
        n = f"({n})"
    if _needs_parens(d) or "/" in d:
        d = f"({d})"
    return f"{n}/{d}"


def _needs_parens(text):
    return " " in text or text.startswith("-")


def _unsafe_operand(text):
    """True when juxtaposing this string would regroup or split terms."""
    if text.startswith("-"):
        return True
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == " " and depth == 0:
            return True
    return False


def _zterm_str(c, i):
    cs = scalar_str(c)
    if i == 0:
        return cs
    z = "Z" if i == 1 else f"Z^{i}"
    if cs == "1":
        return z
    if cs == "-1":
        return "-" + z
    if _needs_parens(cs) or "/" in cs:
        cs = f"({cs})"
    return f"{cs} {z}"


def zfunc_str(r):
    parts = [_zterm_str(c, i) for i, c in enumerate(r.num) if not c.is_zero()]
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    if _unsafe_operand(out):
        out = f"({out})"
    for alpha, e in r.den:
        astr = scalar_str(alpha)
        sign = "-"
        if astr.startswith("-"):
            sign, astr = "+", astr[1:]
        if _needs_parens(astr) or "/" in astr:
            astr = f"({astr})"
        az = "Z" if astr == "1" else f"{astr} Z"
        fac = f"(1 {sign} {az})"
        out += f"/{fac}^{e}" if e > 1 else f"/{fac}"
    return out


def _word_str(k, n, m):
    parts = []
    if k:
        parts.append("x" if k == 1 else f"x^{k}")
    if n:
        parts.append("E" if n == 1 else f"E^{n}")
    if m:
        parts.append("y" if m == 1 else f"y^{m}")
    return " ".join(parts)


def element_str(el):
    if el.is_zero():
        return "0"
    parts = []
    for key in sorted(el.terms, key=lambda w: (w[0] + w[2], w)):
        k, n, m = key
        r = el.terms[key]
        word = _word_str(k, n, m)
        sc = r.as_scalar() if r.is_constant() else None
        if sc is not None:
            cs = scalar_str(sc)
            if not word:
                parts.append(cs)
            elif cs == "1":
                parts.append(word)
            elif cs == "-1":
                parts.append("-" + word)
            else:
                if _needs_parens(cs) or "/" in cs:
                    cs = f"({cs})"
                parts.append(f"{cs} {word}")
        else:
            zs = zfunc_str(r)
            parts.append(f"{word} {zs}" if word else zs)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out
