"""Polynomials in Chern classes c_1..c_k, the human-facing result format."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator


def weighted_degree(exps: tuple) -> int:
    return sum((i + 1) * a for i, a in enumerate(exps))


def chern_monomials(k: int, d: int) -> list[tuple]:
    """Exponent vectors (a_1..a_k) with sum i*a_i = d, in canonical order.

    Canonical order: c_1-degree descending, then c_2-degree descending, and so
    on, e.g. c1^3, c1*c2, c3.
    """
    out = []

    def rec(i, left, acc):
        # i counts down from k so that larger generators are fixed first
        if i == 0:
            if left == 0:
                out.append(tuple(acc))
            return
        for a in range(left // i, -1, -1):
            acc[i - 1] = a
            rec(i - 1, left - a * i, acc)
        acc[i - 1] = 0

    rec(k, d, [0] * k)
    out.sort(key=lambda e: tuple(-a for a in e))
    return out


def format_monomial(exps: tuple, symbol: str = "c") -> str:
    parts = []
    for i, a in enumerate(exps):
        if a == 1:
            parts.append(f"{symbol}{i + 1}")
        elif a > 1:
            parts.append(f"{symbol}{i + 1}^{a}")
    return "*".join(parts) if parts else "1"


_TERM = re.compile(r"\s*([+-]?)\s*([0-9]+(?:/[0-9]+)?)?\s*\*?\s*((?:c[0-9]+(?:\^[0-9]+)?\s*\*?\s*)*)")


class ChernPolynomial:
    """Rational polynomial in c_1..c_k, with c_i = c_i(E*) by convention."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps) + (0,) * (nvars - len(exps))
            if len(exps) != nvars:
                raise ValueError(f"monomial {exps} has more than {nvars} variables")
            c = Fraction(c)
            if c:
                self.terms[exps] = self.terms.get(exps, 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def parse(cls, text: str, nvars: int, convention: str = "dual") -> "ChernPolynomial":
        """Parse strings like ``"-20*c1^3 + 110*c1*c2 + 49*c3"``.

        With ``convention="sub"`` the symbols are read as c_i(E) of the
        tautological subbundle and converted, via c_i(E) = (-1)^i c_i(E*).
        """
        if convention not in ("dual", "sub"):
            raise ValueError("convention must be 'dual' or 'sub'")
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty polynomial")
        terms: dict = {}
        pos = 0
        while pos < len(text):
            m = _TERM.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {text[pos:]!r}")
            sign, coeff, mono = m.groups()
            if coeff is None and not mono:
                raise ValueError(f"cannot parse {text[pos:]!r}")
            c = Fraction(coeff) if coeff else Fraction(1)
            if sign == "-":
                c = -c
            exps = [0] * nvars
            for var in filter(None, mono.split("*")):
                name, _, power = var.partition("^")
                i = int(name[1:])
                if not 1 <= i <= nvars:
                    raise ValueError(f"variable {name} out of range")
                exps[i - 1] += int(power) if power else 1
            exps = tuple(exps)
            terms[exps] = terms.get(exps, 0) + c
            pos = m.end()
        poly = cls(nvars, terms)
        return poly.flip_sign_convention() if convention == "sub" else poly

    def flip_sign_convention(self) -> "ChernPolynomial":
        """Rewrite in terms of c_i of the dual bundle (an involution)."""
        return ChernPolynomial(
            self.nvars, {e: c * (-1) ** weighted_degree(e) for e, c in self.terms.items()}
        )

    def monomials(self) -> list[tuple]:
        return sorted(self.terms, key=lambda e: (weighted_degree(e), tuple(-a for a in e)))

    def __iter__(self) -> Iterator[tuple[tuple, Fraction]]:
        for e in self.monomials():
            yield e, self.terms[e]

    def coefficient(self, exps: tuple) -> Fraction:
        exps = tuple(exps) + (0,) * (self.nvars - len(exps))
        return self.terms.get(exps, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, ChernPolynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for exps, c in self:
            name = format_monomial(exps)
            mag = abs(c)
            body = str(mag) if name == "1" else (name if mag == 1 else f"{mag}*{name}")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"ChernPolynomial({str(self)!r})"
