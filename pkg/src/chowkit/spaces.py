"""Chow-ring presentations with integration and pushforward.

Every space exposes the same small protocol used by
:class:`~chowkit.graded.GradedElement`: ``degree(label)``, ``top_degree``,
``unit_label``, ``admits(label)`` and ``multiply(terms, terms)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .chernpoly import ChernPolynomial, chern_monomials, format_monomial
from .graded import GradedElement
from .partitions import BoxShape, _schubert_product, partitions_in_box, sort_key


class Space:
    """Base class. Subclasses define labels, degrees and basis products."""

    dimension: int

    @property
    def top_degree(self) -> int:
        return self.dimension

    unit_label = None

    def degree(self, label) -> int:
        raise NotImplementedError

    def admits(self, label) -> bool:
        return self.degree(label) <= self.top_degree

    def multiply_basis(self, a, b) -> dict:
        raise NotImplementedError

    def multiply(self, x: dict, y: dict) -> dict:
        """Product of two term dicts, bucketed by degree so that pairs
        landing above the top degree are never formed."""
        deg, top = self.degree, self.top_degree
        bx, by = _buckets(x, deg), _buckets(y, deg)
        out: dict = {}
        mul = self.multiply_basis
        for da, xa in bx.items():
            for db, yb in by.items():
                if da + db > top:
                    continue
                for a, ca in xa:
                    for b, cb in yb:
                        for z, cz in mul(a, b).items():
                            out[z] = out.get(z, 0) + ca * cb * cz
        return {z: c for z, c in out.items() if c}

    def basis(self, d: int) -> list:
        raise NotImplementedError

    def basis_size(self) -> int:
        return sum(len(self.basis(d)) for d in range(self.top_degree + 1))

    def label_key(self, label):
        return (self.degree(label), repr(label))

    def format_label(self, label) -> str:
        return repr(label)

    # -- element constructors -------------------------------------------------
    def element(self, terms: dict) -> GradedElement:
        return GradedElement(self, terms)

    def zero(self) -> GradedElement:
        return GradedElement._raw(self, {})

    def one(self) -> GradedElement:
        return GradedElement._raw(self, {self.unit_label: 1})

    def scalar(self, c) -> GradedElement:
        return GradedElement(self, {self.unit_label: c})

    def integrate(self, x: GradedElement) -> Fraction:
        raise TypeError(f"{self} has no integration functional")


def _buckets(terms: dict, deg) -> dict:
    out: dict = {}
    for label, c in terms.items():
        out.setdefault(deg(label), []).append((label, c))
    return out


class ProjectiveSpace(Space):
    """P^m with Chow ring Q[h]/(h^(m+1)); labels are exponents of h."""

    unit_label = 0

    def __init__(self, m: int):
        if m < 0:
            raise ValueError("projective space dimension must be nonnegative")
        self.m = self.dimension = m

    def __eq__(self, other):
        return isinstance(other, ProjectiveSpace) and other.m == self.m

    def __hash__(self):
        return hash(("P", self.m))

    def __repr__(self):
        return f"ProjectiveSpace({self.m})"

    def degree(self, label) -> int:
        return label

    def multiply_basis(self, a, b):
        return {a + b: 1} if a + b <= self.m else {}

    def multiply(self, x, y):
        out: dict = {}
        m = self.m
        for a, ca in x.items():
            for b, cb in y.items():
                if a + b <= m:
                    out[a + b] = out.get(a + b, 0) + ca * cb
        return {z: c for z, c in out.items() if c}

    def basis(self, d):
        return [d] if 0 <= d <= self.m else []

    def format_label(self, label):
        return "1" if label == 0 else ("h" if label == 1 else f"h^{label}")

    @property
    def point_label(self):
        return self.m

    def hyperplane(self) -> GradedElement:
        return GradedElement(self, {1: 1})

    def h_power(self, e: int) -> GradedElement:
        return GradedElement(self, {e: 1})

    def integrate(self, x):
        return Fraction(x.terms.get(self.m, 0))


class FormalChernRing(Space):
    """Free ring Q[c_1..c_k] (deg c_i = i) truncated above degree D.

    Carries no integration functional: it models universal Chern-class
    identities, e.g. the generic rank-k bundle used by splitting-principle
    oracles or one-generator bookkeeping.
    """

    def __init__(self, k: int, D: int):
        if k < 1 or D < 0:
            raise ValueError("need k >= 1 and D >= 0")
        self.k, self.D = k, D
        self.dimension = D
        self.unit_label = (0,) * k

    def __eq__(self, other):
        return isinstance(other, FormalChernRing) and (other.k, other.D) == (self.k, self.D)

    def __hash__(self):
        return hash(("C", self.k, self.D))

    def __repr__(self):
        return f"FormalChernRing({self.k}, {self.D})"

    def degree(self, label):
        return sum((i + 1) * a for i, a in enumerate(label))

    def multiply_basis(self, a, b):
        return {tuple(x + y for x, y in zip(a, b)): 1}

    def basis(self, d):
        return chern_monomials(self.k, d) if 0 <= d <= self.D else []

    def format_label(self, label):
        return format_monomial(label)

    def generator(self, i: int) -> GradedElement:
        if not 1 <= i <= self.k:
            raise ValueError(f"generator c_{i} out of range")
        e = [0] * self.k
        e[i - 1] = 1
        return GradedElement(self, {tuple(e): 1})

    def to_polynomial(self, x: GradedElement) -> ChernPolynomial:
        return ChernPolynomial(self.k, dict(x.terms))


class Grassmannian(Space):
    """Gr(k, n) of k-planes in an n-dimensional space, in the Schubert basis.

    Chern classes: c_i(E*) = sigma_(1^i) for the tautological subbundle E and
    c_i(Q) = sigma_(i) for the quotient.
    """

    unit_label = ()

    def __init__(self, k: int, n: int):
        if not 0 < k < n:
            raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
        self.k, self.n = k, n
        self.box = BoxShape(k, n - k)
        self.dimension = k * (n - k)
        self._basis = {}

    def __eq__(self, other):
        return isinstance(other, Grassmannian) and (other.k, other.n) == (self.k, self.n)

    def __hash__(self):
        return hash(("Gr", self.k, self.n))

    def __repr__(self):
        return f"Grassmannian({self.k}, {self.n})"

    def degree(self, label):
        return sum(label)

    def admits(self, label):
        return len(label) <= self.k and (not label or label[0] <= self.n - self.k)

    def multiply_basis(self, a, b):
        if (len(b), sum(b)) > (len(a), sum(a)):
            a, b = b, a
        return dict(_schubert_product(a, b, self.k, self.n - self.k))

    def multiply(self, x, y):
        deg, top = self.degree, self.top_degree
        bx, by = _buckets(x, deg), _buckets(y, deg)
        out: dict = {}
        rows, cols = self.k, self.n - self.k
        for da, xa in bx.items():
            for db, yb in by.items():
                if da + db > top:
                    continue
                for a, ca in xa:
                    la = len(a)
                    for b, cb in yb:
                        if (len(b), db) > (la, da):
                            prod = _schubert_product(b, a, rows, cols)
                        else:
                            prod = _schubert_product(a, b, rows, cols)
                        cab = ca * cb
                        for z, cz in prod:
                            out[z] = out.get(z, 0) + cab * cz
        return {z: c for z, c in out.items() if c}

    def basis(self, d):
        if d not in self._basis:
            self._basis[d] = partitions_in_box(self.box, d)
        return self._basis[d]

    def label_key(self, label):
        return sort_key(label)

    def format_label(self, label):
        return "1" if not label else "s" + ",".join(map(str, label))

    @property
    def point_label(self):
        return self.box.full

    def sigma(self, lam) -> GradedElement:
        lam = tuple(p for p in lam if p)
        if not self.admits(lam):
            raise ValueError(f"{lam} does not index a Schubert class on {self}")
        return GradedElement(self, {lam: 1})

    def point_class(self) -> GradedElement:
        return self.sigma(self.point_label)

    def chern_dual_sub(self, i: int) -> GradedElement:
        """c_i(E*) = sigma_(1^i)."""
        if i == 0:
            return self.one()
        return self.sigma((1,) * i) if 0 < i <= self.k else self.zero()

    def chern_quotient(self, i: int) -> GradedElement:
        """c_i(Q) = sigma_(i)."""
        if i == 0:
            return self.one()
        return self.sigma((i,)) if 0 < i <= self.n - self.k else self.zero()

    def chern_monomial(self, exps) -> GradedElement:
        return _grass_monomial(self.k, self.n, tuple(exps))

    def integrate(self, x):
        return Fraction(x.terms.get(self.point_label, 0))

    def express_in_chern_monomials(self, x: GradedElement, d: int) -> ChernPolynomial:
        return express_in_chern_monomials(x, d)


@lru_cache(maxsize=None)
def _grass_monomial(k, n, exps) -> GradedElement:
    G = Grassmannian(k, n)
    out = G.one()
    for i, a in enumerate(exps):
        for _ in range(a):
            out = out * G.chern_dual_sub(i + 1)
    return out


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over Q; raises on a singular matrix."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular change-of-basis matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def express_in_chern_monomials(x: GradedElement, d: int) -> ChernPolynomial:
    """Rewrite a degree-d class on Gr(k, n) as a polynomial in c_i(E*).

    Requires d <= n - k, where Chern monomials and Schubert classes of degree d
    are equinumerous and the change of basis is invertible.
    """
    G = x.space
    if not isinstance(G, Grassmannian):
        raise TypeError("Chern-monomial conversion needs a Grassmannian")
    if d > G.n - G.k:
        raise ValueError(f"degree {d} exceeds n-k = {G.n - G.k}; monomials are not independent")
    if not x.is_homogeneous(d):
        raise ValueError(f"element is not homogeneous of degree {d}")
    monos = chern_monomials(G.k, d)
    basis = G.basis(d)
    assert len(monos) == len(basis), "monomial and Schubert counts differ"
    index = {lam: i for i, lam in enumerate(basis)}
    # column j = Schubert expansion of monomial j
    matrix = [[Fraction(0)] * len(monos) for _ in basis]
    for j, e in enumerate(monos):
        for lam, c in G.chern_monomial(e).items():
            matrix[index[lam]][j] = Fraction(c)
    rhs = [x.coefficient(lam) for lam in basis]
    sol = _solve_exact(matrix, rhs)
    return ChernPolynomial(G.k, dict(zip(monos, sol)))


class ProductSpace(Space):
    """A x B with pair labels (a, b).

    ``max_first_degree`` optionally discards every term whose A-degree
    exceeds the bound.  Those terms form an ideal, so the quotient is still a
    ring; pushforward to A of a class of degree dim B + d only ever reads the
    A-degree-d part, so nothing is lost when d <= max_first_degree.
    """

    def __init__(self, A: Space, B: Space, max_first_degree: int | None = None):
        self.A, self.B = A, B
        self.cap = A.top_degree if max_first_degree is None else min(max_first_degree, A.top_degree)
        self.dimension = A.dimension + B.dimension
        self.unit_label = (A.unit_label, B.unit_label)

    def __eq__(self, other):
        return (
            isinstance(other, ProductSpace)
            and (other.A, other.B, other.cap) == (self.A, self.B, self.cap)
        )

    def __hash__(self):
        return hash(("x", self.A, self.B, self.cap))

    def __repr__(self):
        extra = "" if self.cap == self.A.top_degree else f", max_first_degree={self.cap}"
        return f"ProductSpace({self.A!r}, {self.B!r}{extra})"

    @property
    def top_degree(self):
        return self.cap + self.B.top_degree

    def degree(self, label):
        return self.A.degree(label[0]) + self.B.degree(label[1])

    def admits(self, label):
        return self.A.degree(label[0]) <= self.cap and self.B.admits(label[1])

    def multiply_basis(self, a, b):
        out = {}
        for x, cx in self.A.multiply({a[0]: 1}, {b[0]: 1}).items():
            if self.A.degree(x) > self.cap:
                continue
            for y, cy in self.B.multiply({a[1]: 1}, {b[1]: 1}).items():
                out[(x, y)] = cx * cy
        return out

    def multiply(self, x, y):
        # factor as sum_a a (x) X_a, multiply fibrewise in B
        A, B, cap = self.A, self.B, self.cap
        degA = A.degree
        gx, gy = _group_first(x), _group_first(y)
        out: dict = {}
        a_cache: dict = {}
        for a1, X in gx.items():
            d1 = degA(a1)
            for a2, Y in gy.items():
                if d1 + degA(a2) > cap:
                    continue
                key = (a1, a2)
                if key not in a_cache:
                    a_cache[key] = A.multiply({a1: 1}, {a2: 1})
                prodA = a_cache[key]
                if not prodA:
                    continue
                prodB = B.multiply(X, Y)
                if not prodB:
                    continue
                for a, ca in prodA.items():
                    for b, cb in prodB.items():
                        lab = (a, b)
                        out[lab] = out.get(lab, 0) + ca * cb
        return {z: c for z, c in out.items() if c}

    def basis(self, d):
        out = []
        for da in range(0, min(d, self.cap) + 1):
            for a in self.A.basis(da):
                for b in self.B.basis(d - da):
                    out.append((a, b))
        return out

    def label_key(self, label):
        return (self.degree(label), self.A.label_key(label[0]), self.B.label_key(label[1]))

    def format_label(self, label):
        a, b = (self.A.format_label(label[0]), self.B.format_label(label[1]))
        if a == "1":
            return "1" if b == "1" else f"pr2*({b})"
        return f"pr1*({a})" if b == "1" else f"pr1*({a})*pr2*({b})"

    def pullback_first(self, x: GradedElement) -> GradedElement:
        unit = self.B.unit_label
        return GradedElement(self, {(a, unit): c for a, c in x.items()})

    def pullback_second(self, x: GradedElement) -> GradedElement:
        unit = self.A.unit_label
        return GradedElement(self, {(unit, b): c for b, c in x.items()})

    def pushforward_to_first_factor(self, x: GradedElement) -> GradedElement:
        """Integrate over the B fibre: (a, b) -> a when b is the point of B."""
        point = self.B.point_label
        return GradedElement(self.A, {a: c for (a, b), c in x.items() if b == point})

    def integrate(self, x):
        pa, pb = self.A.point_label, self.B.point_label
        return Fraction(x.terms.get((pa, pb), 0))


def _group_first(terms: dict) -> dict:
    out: dict = {}
    for (a, b), c in terms.items():
        out.setdefault(a, {})[b] = c
    return out


def product_space(A: Space, B: Space, max_first_degree: int | None = None) -> ProductSpace:
    return ProductSpace(A, B, max_first_degree)


def grassmannian(k: int, n: int) -> Grassmannian:
    return Grassmannian(k, n)


def integrate(x: GradedElement) -> Fraction:
    return x.space.integrate(x)


def pushforward_to_first_factor(x: GradedElement) -> GradedElement:
    return x.space.pushforward_to_first_factor(x)


class ProjectiveBundle(Space):
    """P(F) of lines in a rank-r bundle F over ``base``.

    Labels are (j, b) meaning zeta^j * p^*(b) with 0 <= j < r, where zeta is
    c_1(O(1)) and zeta^r + c_1(F) zeta^(r-1) + ... + c_r(F) = 0.
    ``bundle`` is any object with ``.space``, ``.rank`` and ``.chern(i)``.
    """

    def __init__(self, bundle):
        base = bundle.space
        rank = bundle.rank
        if rank < 1:
            raise ValueError("projective bundle needs a bundle of positive rank")
        self.base, self.rank, self.bundle = base, rank, bundle
        self.dimension = base.dimension + rank - 1
        self.unit_label = (0, base.unit_label)
        self._chern = [bundle.chern(i) for i in range(rank + 1)]
        # zeta^m written as sum_j zeta^j * A[m][j], A[m][j] on the base
        self._zeta = {m: {m: base.one()} for m in range(rank)}

    def __repr__(self):
        return f"ProjectiveBundle({self.base!r}, rank={self.rank})"

    def degree(self, label):
        return label[0] + self.base.degree(label[1])

    def admits(self, label):
        return 0 <= label[0] < self.rank and self.degree(label) <= self.top_degree

    def _zeta_power(self, m: int) -> dict:
        if m not in self._zeta:
            prev = self._zeta_power(m - 1)
            r = self.rank
            out: dict = {}
            for j, coeff in prev.items():
                if j + 1 < r:
                    out[j + 1] = out.get(j + 1, self.base.zero()) + coeff
                else:
                    # zeta^r = -sum_i c_i zeta^(r-i)
                    for i in range(1, r + 1):
                        ci = self._chern[i]
                        if ci:
                            out[r - i] = out.get(r - i, self.base.zero()) - ci * coeff
            self._zeta[m] = {j: v for j, v in out.items() if v}
        return self._zeta[m]

    def zeta_power(self, m: int) -> GradedElement:
        out = {}
        for j, coeff in self._zeta_power(m).items():
            for b, c in coeff.items():
                out[(j, b)] = c
        return GradedElement(self, out)

    def zeta(self) -> GradedElement:
        return self.zeta_power(1)

    def multiply_basis(self, a, b):
        return self.multiply({a: 1}, {b: 1})

    def multiply(self, x, y):
        gx, gy = _group_first(x), _group_first(y)
        out: dict = {}
        base = self.base
        for j1, X in gx.items():
            for j2, Y in gy.items():
                prod = base.multiply(X, Y)
                if not prod:
                    continue
                prod_el = GradedElement._raw(base, prod)
                for j, coeff in self._zeta_power(j1 + j2).items():
                    for bl, c in (coeff * prod_el).items():
                        lab = (j, bl)
                        out[lab] = out.get(lab, 0) + c
        return {z: c for z, c in out.items() if c and self.degree(z) <= self.top_degree}

    def basis(self, d):
        return [(j, b) for j in range(self.rank) for b in self.base.basis(d - j)]

    def format_label(self, label):
        j, b = label
        z = "1" if j == 0 else ("z" if j == 1 else f"z^{j}")
        bb = self.base.format_label(b)
        if bb == "1":
            return z
        return bb if z == "1" else f"{z}*{bb}"

    def pullback(self, x: GradedElement) -> GradedElement:
        return GradedElement(self, {(0, b): c for b, c in x.items()})

    def pushforward(self, x: GradedElement) -> GradedElement:
        """p_*(zeta^j p^*a) = s_(j-r+1)(F) a; on reduced labels only j = r-1 survives."""
        top = self.rank - 1
        return GradedElement(self.base, {b: c for (j, b), c in x.items() if j == top})

    def integrate(self, x):
        return self.base.integrate(self.pushforward(x))


def projbundle_pushforward(x: GradedElement) -> GradedElement:
    return x.space.pushforward(x)
