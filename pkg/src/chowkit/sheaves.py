"""Virtual bundles and their characteristic classes.

A :class:`Sheaf` is a K-theory class on a space: an integer rank (possibly
negative) plus its Chern character.  Every operation (dual, sum, difference,
tensor, Adams operations, symmetric powers) is carried out on the Chern
character and converted back to Chern classes through the Newton
identities, so virtual differences need no splitting.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .graded import GradedElement, newton_e_from_p, newton_p_from_e
from .spaces import Grassmannian, ProjectiveBundle, ProjectiveSpace, Space


class Sheaf:
    """K-theory class ``rank + ch_1 + ch_2 + ...`` on ``space``.

    ``total_chern`` is derived lazily (and only up to the degree asked for),
    which keeps Euler classes of large virtual bundles cheap.
    """

    def __init__(self, space: Space, rank: int, ch: dict[int, GradedElement]):
        self.space = space
        self.rank = int(rank)
        self.top = space.top_degree
        self.ch = {d: x for d, x in ch.items() if 1 <= d <= self.top and x}
        self._e: list[GradedElement] = []

    @classmethod
    def from_chern(cls, space: Space, rank: int, total_chern: GradedElement) -> "Sheaf":
        if total_chern.space != space:
            raise ValueError("total Chern class lives on a different space")
        if total_chern.constant_term() != 1:
            raise ValueError("total Chern class must have constant term 1")
        top = space.top_degree
        e = [total_chern.part(d) for d in range(1, top + 1)]
        p = newton_p_from_e(e)
        ch = {d: p[d - 1].scale(Fraction(1, factorial(d))) for d in range(1, top + 1)}
        sheaf = cls(space, rank, ch)
        sheaf._e = e
        return sheaf

    def __repr__(self):
        return f"Sheaf(rank={self.rank}, c={self.total_chern!r}, on {self.space!r})"

    # -- characteristic classes ----------------------------------------------
    def ch_part(self, d: int) -> GradedElement:
        if d == 0:
            return self.space.scalar(self.rank)
        return self.ch.get(d, self.space.zero())

    def _extend_chern(self, d: int):
        d = min(d, self.top)
        k = len(self._e) + 1
        if k > d:
            return
        p = [self.ch_part(i).scale(factorial(i)) for i in range(1, d + 1)]
        # Newton: e_k = (1/k) sum_i (-1)^(i-1) e_(k-i) p_i
        while k <= d:
            acc = p[k - 1].scale((-1) ** (k - 1))
            for i in range(1, k):
                if p[i - 1] and self._e[k - i - 1]:
                    term = self._e[k - i - 1] * p[i - 1]
                    acc = acc + term if i % 2 == 1 else acc - term
            self._e.append(acc.scale(Fraction(1, k)))
            k += 1

    def chern(self, i: int) -> GradedElement:
        if i == 0:
            return self.space.one()
        if i < 0 or i > self.top:
            return self.space.zero()
        self._extend_chern(i)
        return self._e[i - 1]

    @property
    def total_chern(self) -> GradedElement:
        self._extend_chern(self.top)
        out = self.space.one()
        for x in self._e:
            out = out + x
        return out

    def chern_character(self) -> GradedElement:
        out = self.space.scalar(self.rank)
        for x in self.ch.values():
            out = out + x
        return out

    # -- K-theory operations --------------------------------------------------
    def _check(self, other: "Sheaf"):
        if not isinstance(other, Sheaf):
            raise TypeError(f"expected Sheaf, got {type(other).__name__}")
        if other.space != self.space:
            raise ValueError(f"sheaves live on different spaces: {self.space} vs {other.space}")

    def dual(self) -> "Sheaf":
        return Sheaf(self.space, self.rank, {d: x.scale(-1) if d % 2 else x for d, x in self.ch.items()})

    def __add__(self, other: "Sheaf") -> "Sheaf":
        self._check(other)
        ch = dict(self.ch)
        for d, x in other.ch.items():
            ch[d] = ch[d] + x if d in ch else x
        return Sheaf(self.space, self.rank + other.rank, ch)

    def __neg__(self) -> "Sheaf":
        return Sheaf(self.space, -self.rank, {d: x.scale(-1) for d, x in self.ch.items()})

    def __sub__(self, other: "Sheaf") -> "Sheaf":
        self._check(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Sheaf(self.space, self.rank * other, {d: x.scale(other) for d, x in self.ch.items()})
        self._check(other)
        ch = {}
        for d in range(1, self.top + 1):
            acc = self.ch_part(d).scale(other.rank) + other.ch_part(d).scale(self.rank)
            for i in range(1, d):
                a, b = self.ch.get(i), other.ch.get(d - i)
                if a and b:
                    acc = acc + a * b
            ch[d] = acc
        return Sheaf(self.space, self.rank * other.rank, ch)

    __rmul__ = __mul__

    def tensor(self, other: "Sheaf") -> "Sheaf":
        return self * other

    def pullback(self, target: Space, fn) -> "Sheaf":
        """Pull back along a ring map ``fn`` (GradedElement -> GradedElement)."""
        return Sheaf(target, self.rank, {d: fn(x) for d, x in self.ch.items()})


def trivial_bundle(space: Space, m: int) -> Sheaf:
    if m < 0:
        raise ValueError("a trivial bundle has nonnegative rank")
    return Sheaf(space, m, {})


def line_bundle(space: Space, c1: GradedElement) -> Sheaf:
    if c1.space != space:
        raise ValueError("c1 lives on a different space")
    if not c1.is_homogeneous(1):
        raise ValueError("c1 must be homogeneous of degree 1")
    ch = {}
    power = space.one()
    for d in range(1, space.top_degree + 1):
        power = power * c1
        if not power:
            break
        ch[d] = power.scale(Fraction(1, factorial(d)))
    return Sheaf(space, 1, ch)


def bundle_from_chern(space: Space, rank: int, total_chern: GradedElement) -> Sheaf:
    return Sheaf.from_chern(space, rank, total_chern)


def direct_sum(*sheaves: Sheaf) -> Sheaf:
    out = sheaves[0]
    for s in sheaves[1:]:
        out = out + s
    return out


def tautological_sub(G: Grassmannian) -> Sheaf:
    """Tautological subbundle E of rank k: c_i(E) = (-1)^i sigma_(1^i)."""
    c = G.one()
    for i in range(1, G.k + 1):
        c = c + G.chern_dual_sub(i).scale((-1) ** i)
    return Sheaf.from_chern(G, G.k, c)


def tautological_quotient(G: Grassmannian) -> Sheaf:
    """Quotient bundle Q of rank n-k: c_i(Q) = sigma_(i)."""
    c = G.one()
    for i in range(1, G.n - G.k + 1):
        c = c + G.chern_quotient(i)
    return Sheaf.from_chern(G, G.n - G.k, c)


def O(space: ProjectiveSpace, d: int) -> Sheaf:
    """Line bundle O(d) on projective space."""
    return line_bundle(space, space.hyperplane().scale(d))


def dual(E: Sheaf) -> Sheaf:
    return E.dual()


def adams(k: int, E: Sheaf) -> Sheaf:
    """Adams operation: ch_d is scaled by k^d."""
    if k not in (2, 3):
        raise ValueError(f"Adams operation psi^{k} is not supported (only 2 and 3)")
    return Sheaf(E.space, E.rank, {d: x.scale(k ** d) for d, x in E.ch.items()})


def sym(k: int, E: Sheaf) -> Sheaf:
    """Symmetric power via the cycle-index formulas in Adams operations.

    ch Sym^2 = (ch^2 + psi^2 ch) / 2
    ch Sym^3 = (ch^3 + 3 ch psi^2 ch + 2 psi^3 ch) / 6
    """
    if k == 2:
        out = E * E + adams(2, E)
        rank, div = E.rank * (E.rank + 1) // 2, 2
    elif k == 3:
        out = E * E * E + 3 * (E * adams(2, E)) + 2 * adams(3, E)
        rank, div = E.rank * (E.rank + 1) * (E.rank + 2) // 6, 6
    else:
        raise ValueError(f"Sym^{k} is not supported (only k = 2, 3)")
    assert out.rank == rank * div
    return Sheaf(E.space, rank, {d: x.scale(Fraction(1, div)) for d, x in out.ch.items()})


def segre_series(E: Sheaf) -> GradedElement:
    """s(E) = 1 / c(E), truncated at the top degree."""
    return E.total_chern.inverse()


def euler_class(E: Sheaf, expected_rank: int) -> GradedElement:
    """Top Chern class c_r(E), after checking that E has virtual rank r."""
    if expected_rank < 0:
        raise ValueError("expected rank must be nonnegative")
    if E.rank != expected_rank:
        raise ValueError(f"rank audit failed: bundle has rank {E.rank}, expected {expected_rank}")
    return E.chern(expected_rank)


def projective_bundle(F: Sheaf) -> ProjectiveBundle:
    return ProjectiveBundle(F)


def symmetric_form_degeneracy_degree(V: Sheaf, L: Sheaf) -> int:
    """Degree of the divisor where a symmetric map V -> V* (x) L degenerates.

    The determinant is a section of det(V* (x) L) (x) det(V)^-1, whose first
    Chern class is c_1(V* (x) L) - c_1(V).
    """
    space = V.space
    if not isinstance(space, ProjectiveSpace):
        raise TypeError("degree is read off against the hyperplane class of projective space")
    c1 = (V.dual() * L).chern(1) - V.chern(1)
    return int(c1.coefficient(1))


def honest_rank_check(E: Sheaf) -> bool:
    """True iff c_i(E) vanishes above the rank (holds for honest bundles)."""
    return all(not E.chern(i) for i in range(max(E.rank, 0) + 1, E.top + 1))
