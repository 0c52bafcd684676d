"""Exact sparse graded algebra.

Coefficients are Python ints or :class:`fractions.Fraction`; nothing in the
engine ever touches a float.  A :class:`GradedElement` is a sparse map from
basis labels of a space to rationals.  The space supplies the degree of each
label, its top degree (everything above is silently dropped) and the product
of basis elements.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from numbers import Rational
from typing import Callable, Sequence


def _norm(c):
    # keep integral values as int: int arithmetic is much cheaper than Fraction
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def as_rational(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("floating point values are not allowed")
    return Fraction(c)


class TruncatedSeries:
    """Power series a_0 + a_1 h + ... + a_D h^D with h^(D+1) = 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, degree: int | None = None):
        coeffs = [as_rational(c) for c in coeffs]
        if degree is not None:
            coeffs = (coeffs + [Fraction(0)] * (degree + 1))[: degree + 1]
        if not coeffs:
            raise ValueError("a series needs at least one coefficient")
        self.coeffs = tuple(coeffs)

    @classmethod
    def linear(cls, a0, a1, degree: int) -> "TruncatedSeries":
        return cls([a0, a1], degree)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.degree != self.degree:
            raise ValueError(f"modulus mismatch: h^{self.degree + 1} vs h^{other.degree + 1}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([a * other for a in self.coeffs])
        self._check(other)
        D = self.degree
        out = [Fraction(0)] * (D + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(D + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        D = self.degree
        inv = [Fraction(0)] * (D + 1)
        inv[0] = 1 / a0
        for k in range(1, D + 1):
            inv[k] = -sum(self.coeffs[i] * inv[k - i] for i in range(1, k + 1)) / a0
        return TruncatedSeries(inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        base = self
        if e < 0:
            if self.coeffs[0] != 1:
                raise ValueError("negative powers need a unit series (constant term 1)")
            base, e = self.inverse(), -e
        result = TruncatedSeries([1], self.degree)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    return a ** e


def newton_p_from_e(e: Sequence) -> list:
    """Power sums p_1..p_D from elementary symmetric e_1..e_D (e_0 = 1 implied).

    Works for any ring elements supporting +, - and * (numbers, sympy
    expressions, graded elements).
    """
    p: list = []
    for k in range(1, len(e) + 1):
        acc = e[k - 1] * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            term = e[i - 1] * p[k - i - 1]
            acc = acc + term if i % 2 == 1 else acc - term
        p.append(acc)
    return p


def newton_e_from_p(p: Sequence) -> list:
    """Inverse of :func:`newton_p_from_e`."""
    e: list = []
    for k in range(1, len(p) + 1):
        acc = p[k - 1] * ((-1) ** (k - 1))
        for i in range(1, k):
            term = e[k - i - 1] * p[i - 1]
            acc = acc + term if i % 2 == 1 else acc - term
        e.append(acc * Fraction(1, k))
    return e


class GradedElement:
    """Sparse exact linear combination of basis labels of a graded space."""

    __slots__ = ("space", "terms")

    def __init__(self, space, terms=None):
        self.space = space
        clean = {}
        if terms:
            admits = space.admits
            for label, c in terms.items():
                if isinstance(c, float):
                    raise TypeError("floating point coefficients are not allowed")
                if c and admits(label):
                    clean[label] = _norm(c)
        self.terms = clean

    @classmethod
    def _raw(cls, space, terms):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.space = space
        obj.terms = terms
        return obj

    # -- inspection --------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, label) -> Fraction:
        return Fraction(self.terms.get(label, 0))

    def items(self):
        return self.terms.items()

    def degrees(self) -> set[int]:
        deg = self.space.degree
        return {deg(l) for l in self.terms}

    def is_homogeneous(self, d: int | None = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (d is None or ds == {d})

    def part(self, d: int) -> "GradedElement":
        deg = self.space.degree
        return GradedElement._raw(self.space, {l: c for l, c in self.terms.items() if deg(l) == d})

    def truncate(self, d: int) -> "GradedElement":
        deg = self.space.degree
        return GradedElement._raw(self.space, {l: c for l, c in self.terms.items() if deg(l) <= d})

    def buckets(self) -> dict[int, list]:
        deg = self.space.degree
        out = defaultdict(list)
        for label, c in self.terms.items():
            out[deg(label)].append((label, c))
        return dict(out)

    def constant_term(self) -> Fraction:
        return self.coefficient(self.space.unit_label)

    # -- arithmetic --------------------------------------------------------
    def _same(self, other):
        if not isinstance(other, GradedElement):
            raise TypeError(f"expected GradedElement, got {type(other).__name__}")
        if other.space != self.space:
            raise ValueError(f"cannot combine elements of {self.space} and {other.space}")

    def _coerce(self, other):
        if isinstance(other, GradedElement):
            self._same(other)
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, float):
            return self.space.scalar(other)
        raise TypeError(f"cannot combine GradedElement with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for l, c in other.terms.items():
            v = out.get(l, 0) + c
            if v:
                out[l] = _norm(v)
            else:
                out.pop(l, None)
        return GradedElement._raw(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedElement._raw(self.space, {l: -c for l, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s) -> "GradedElement":
        if isinstance(s, float):
            raise TypeError("floating point scalars are not allowed")
        if not s:
            return GradedElement._raw(self.space, {})
        return GradedElement._raw(self.space, {l: _norm(c * s) for l, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GradedElement):
            self._same(other)
            prod = self.space.multiply(self.terms, other.terms)
            return GradedElement._raw(self.space, {l: _norm(c) for l, c in prod.items()})
        if isinstance(other, (int, Rational)) and not isinstance(other, float):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, float):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = self.space.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "GradedElement":
        """Inverse of a unit (constant term 1), truncated at the top degree."""
        if self.constant_term() != 1:
            raise ValueError("only elements with constant term 1 are inverted")
        parts = [self.part(d) for d in range(self.space.top_degree + 1)]
        inv = [self.space.one()]
        for d in range(1, self.space.top_degree + 1):
            acc = self.space.zero()
            for i in range(1, d + 1):
                if parts[i] and inv[d - i]:
                    acc = acc - parts[i] * inv[d - i]
            inv.append(acc)
        total = self.space.zero()
        for x in inv:
            total = total + x
        return total

    def map_labels(self, target_space, fn: Callable) -> "GradedElement":
        """Linear map sending label l to ``fn(l)`` (a dict label->coeff, or None)."""
        out: dict = {}
        for l, c in self.terms.items():
            image = fn(l)
            if not image:
                continue
            for m, cm in image.items():
                out[m] = out.get(m, 0) + c * cm
        return GradedElement(target_space, out)

    def __eq__(self, other):
        if isinstance(other, GradedElement):
            return self.space == other.space and self.terms == other.terms
        if isinstance(other, (int, Rational)) and not isinstance(other, float):
            return self == self.space.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        fmt = self.space.format_label
        out = ""
        for l in sorted(self.terms, key=self.space.label_key):
            c, name = self.terms[l], fmt(l)
            mag = abs(c)
            body = f"{mag}" if name == "1" else (name if mag == 1 else f"{mag}*{name}")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out
