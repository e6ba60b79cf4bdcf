"""Parsing and printing of polynomials, plus certificate (de)serialization.

Surface syntax, whitespace-insensitive:

    poly    = [sign] term { sign term }
    term    = factor { "*" factor }
    factor  = INT [ "/" INT ] | variable [ "^" INT ]

Variables: e[n], z, x[i1,...,in]d[k], SA[i,...], SB[i,...;k], DH[i,...],
DK[i,...], E[p], F[p], H[p], X[n], Y.  The printer emits terms in
descending monomial order with coefficients in lowest terms, so printing
then parsing is the identity.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebras import (
    AlgebraSpec,
    algebra_to_str,
    degree,
    element_to_str,
    parse_algebra,
    validate_element,
)
from .elim import CertTerm, MultiplierExp, ReductionCertificate
from .poly import DTuple, MINUS, PLUS, Polynomial, mono_sort_key


class ParseError(ValueError):
    """Syntax or validity error, with source position."""

    def __init__(self, msg, pos):
        super().__init__("%s (at position %d)" % (msg, pos))
        self.pos = pos


class SchemaError(ValueError):
    """Certificate document does not match the schema."""


_TOKEN = re.compile(r"\s*(\d+|[A-Za-z]+|[][,;*^/+-])")


def _tokenize(s):
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip():
                raise ParseError("unexpected character %r" % s[pos], pos)
            break
        out.append((m.group(1), m.start(1)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, alg, s):
        self.alg = alg
        self.toks = _tokenize(s)
        self.i = 0
        self.end = len(s)

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self):
        return self.toks[self.i][1] if self.i < len(self.toks) else self.end

    def take(self, expect=None):
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of input", self.end)
        tok, pos = self.toks[self.i]
        if expect is not None and tok != expect:
            raise ParseError("expected %r, found %r" % (expect, tok), pos)
        self.i += 1
        return tok, pos

    def int_tok(self):
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        tok, pos = self.take()
        if not tok.isdigit():
            raise ParseError("expected an integer, found %r" % tok, pos)
        return -int(tok) if neg else int(tok)

    def int_list(self, stop):
        out = [self.int_tok()]
        while self.peek() == ",":
            self.take()
            out.append(self.int_tok())
        self.take(stop)
        return out

    def element(self):
        tok, pos = self.take()
        alg = self.alg
        try:
            if tok == "e":
                self.take("[")
                b = ("e", self.int_tok())
                self.take("]")
            elif tok == "z":
                b = ("z",)
            elif tok == "x":
                self.take("[")
                i = self.int_list("]")
                name, npos = self.take()
                if name != "d":
                    raise ParseError("expected 'd' after x[...]", npos)
                self.take("[")
                k = self.int_tok()
                self.take("]")
                b = ("w", tuple(i), k)
            elif tok in ("SA", "DH", "DK"):
                self.take("[")
                i = self.int_list("]")
                b = ({"SA": "sa", "DH": "dh", "DK": "dk"}[tok], tuple(i))
            elif tok == "SB":
                self.take("[")
                i = [self.int_tok()]
                while self.peek() == ",":
                    self.take()
                    i.append(self.int_tok())
                self.take(";")
                k = self.int_tok()
                self.take("]")
                b = ("sb", tuple(i), k)
            elif tok in ("E", "F", "H"):
                self.take("[")
                b = (tok, self.int_tok())
                self.take("]")
            elif tok == "X":
                self.take("[")
                b = ("x", self.int_tok())
                self.take("]")
            elif tok == "Y":
                b = ("y",)
            else:
                raise ParseError("unknown variable %r" % tok, pos)
            validate_element(alg, b)
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), pos) from exc
        return b

    def factor(self):
        """(coefficient, element or None, exponent)."""
        tok = self.peek()
        if tok is not None and tok.isdigit():
            num, _ = self.take()
            c = Fraction(int(num))
            if self.peek() == "/":
                self.take()
                den, dpos = self.take()
                if not den.isdigit() or int(den) == 0:
                    raise ParseError("bad denominator %r" % den, dpos)
                c /= int(den)
            return c, None, 0
        b = self.element()
        exp = 1
        if self.peek() == "^":
            self.take()
            tok, pos = self.take()
            if not tok.isdigit() or int(tok) == 0:
                raise ParseError("exponent must be a positive integer", pos)
            exp = int(tok)
        return Fraction(1), b, exp

    def term(self):
        c, b, exp = self.factor()
        pairs = [] if b is None else [(b, exp)]
        while self.peek() == "*":
            self.take()
            c2, b2, e2 = self.factor()
            c *= c2
            if b2 is not None:
                pairs.append((b2, e2))
        return Polynomial.var(self.alg, pairs[0][0], c, pairs[0][1]) * _mono_poly(
            self.alg, pairs[1:]
        ) if pairs else Polynomial.const(self.alg, c)

    def poly(self):
        sign = 1
        if self.peek() in ("+", "-"):
            tok, _ = self.take()
            sign = -1 if tok == "-" else 1
        out = self.term() * sign
        while self.peek() in ("+", "-"):
            tok, _ = self.take()
            sign = -1 if tok == "-" else 1
            out = out + self.term() * sign
        if self.i < len(self.toks):
            raise ParseError("trailing input %r" % self.peek(), self.pos())
        return out


def _mono_poly(alg, pairs):
    out = Polynomial.const(alg, 1)
    for b, exp in pairs:
        out = out * Polynomial.var(alg, b, 1, exp)
    return out


def parse_poly(alg, s):
    """Parse a polynomial over alg, validating every variable."""
    p = _Parser(alg, s)
    if not p.toks:
        raise ParseError("empty input", 0)
    return p.poly()


def parse_element(alg, s):
    """Parse a single basis element name."""
    p = _Parser(alg, s)
    b = p.element()
    if p.i < len(p.toks):
        raise ParseError("trailing input %r" % p.peek(), p.pos())
    return b


def print_poly(f):
    """Canonical form: descending monomial order, lowest-terms coefficients."""
    if f.is_zero():
        return "0"
    alg = f.alg
    items = sorted(
        f.terms.items(), key=lambda it: mono_sort_key(alg, it[0]), reverse=True
    )
    parts = []
    for m, c in items:
        body = "*".join(
            element_to_str(alg, b) + ("^%d" % x if x > 1 else "")
            for b, x in reversed(m)
        )
        mag = abs(c)
        if not body:
            chunk = str(mag)
        elif mag == 1:
            chunk = body
        else:
            chunk = "%s*%s" % (mag, body)
        if not parts:
            parts.append(("-" if c < 0 else "") + chunk)
        else:
            parts.append((" - " if c < 0 else " + ") + chunk)
    return "".join(parts)


# ---------------------------------------------------------------------------
# Certificate JSON


def _dtuple_to_json(alg, t):
    return [element_to_str(alg, b) for b in t.entries]


def cert_to_json(cert):
    """Serialize a reduction certificate to a JSON string."""
    alg = cert.alg
    doc = {
        "format": 1,
        "algebra": algebra_to_str(alg),
        "input": print_poly(cert.input),
        "remainder": print_poly(cert.remainder),
        "generators": [print_poly(f) for f in cert.generators],
        "multipliers": [
            {
                "generator": i,
                "initial_exp": ex.initial,
                "sep_plus_exp": ex.sep_plus,
                "sep_minus_exp": ex.sep_minus,
            }
            for i, ex in enumerate(cert.multipliers)
        ],
        "terms": [
            {
                "coeff": print_poly(t.coeff),
                "generator": t.gen,
                "tuple": None if t.dtuple is None else _dtuple_to_json(alg, t.dtuple),
            }
            for t in cert.terms
        ],
    }
    return json.dumps(doc, indent=2)


def cert_from_json(s):
    """Parse and validate a certificate document."""
    try:
        doc = json.loads(s)
    except json.JSONDecodeError as exc:
        raise SchemaError("not valid JSON: %s" % exc) from exc
    if not isinstance(doc, dict) or doc.get("format") != 1:
        raise SchemaError("missing or unsupported format marker")
    try:
        alg = parse_algebra(doc["algebra"])
        gens = tuple(parse_poly(alg, g) for g in doc["generators"])
        mults = [MultiplierExp(0, 0, 0)] * len(gens)
        for entry in doc["multipliers"]:
            mults[entry["generator"]] = MultiplierExp(
                entry["initial_exp"], entry["sep_plus_exp"], entry["sep_minus_exp"]
            )
        terms = []
        for entry in doc["terms"]:
            gi = entry["generator"]
            if not 0 <= gi < len(gens):
                raise SchemaError("term generator index out of range")
            dt = None
            if entry["tuple"] is not None:
                entries = tuple(parse_element(alg, n) for n in entry["tuple"])
                if not entries:
                    raise SchemaError("empty tuple")
                sign = PLUS if degree(alg, entries[0]) > 0 else MINUS
                dt = DTuple(entries, sign).validate(alg)
            terms.append(CertTerm(parse_poly(alg, entry["coeff"]), gi, dt))
        return ReductionCertificate(
            alg=alg,
            input=parse_poly(alg, doc["input"]),
            remainder=parse_poly(alg, doc["remainder"]),
            generators=gens,
            multipliers=tuple(mults),
            terms=tuple(terms),
        )
    except SchemaError:
        raise
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise SchemaError("malformed certificate: %s" % exc) from exc
