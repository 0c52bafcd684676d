"""Enumerative computations for Voisin maps on Fano varieties of r-planes.

For a cubic hypersurface Y in P^n with n + 1 = C(r+3, 2), the variety X of
r-planes in Y is K-trivial, and the Voisin map sends a plane P to the
residual plane of the unique (r+1)-space tangent to Y along P.  Only the
characteristic-class shadows of X and the map are computed here.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .chernpoly import ChernPolynomial, format_monomial
from .graded import TruncatedSeries
from .sheaves import (
    O,
    direct_sum,
    euler_class,
    line_bundle,
    segre_series,
    sym,
    symmetric_form_degeneracy_degree,
    tautological_sub,
    trivial_bundle,
)
from .spaces import (
    FormalChernRing,
    Grassmannian,
    ProductSpace,
    ProjectiveBundle,
    ProjectiveSpace,
    express_in_chern_monomials,
)


class AuditError(AssertionError):
    """An internal consistency check failed (ranks, degrees, route agreement)."""


def h0_projective(a: int, d: int) -> int:
    """dim H^0(P^a, O(d))."""
    return comb(a + d, d)


@dataclass(frozen=True)
class VoisinParams:
    r: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("r must be nonnegative")

    @property
    def n(self) -> int:
        return comb(self.r + 3, 2) - 1

    @property
    def N(self) -> int:
        """Dimension of X."""
        r, n = self.r, self.n
        return (r + 1) * (n - r) - comb(r + 3, 3)


@dataclass(frozen=True)
class DimsReport:
    r: int
    n: int
    N: int
    delta: tuple[int, ...]
    dim_I: int
    m: int
    fix_codim: int

    def as_items(self) -> list[tuple[str, int]]:
        items = [("n", self.n), ("N", self.N)]
        items += [(f"delta_{k}", d) for k, d in enumerate(self.delta, start=1)]
        items += [("dim_I", self.dim_I), ("m", self.m), ("fix_codim", self.fix_codim)]
        return items


def dims_report(r: int) -> DimsReport:
    p = VoisinParams(r)
    n, N = p.n, p.N
    # fibre dimension drops of the incidence strata
    delta = tuple(2 * h0_projective(r, 3) - h0_projective(k - 1, 3) for k in range(1, r + 2))
    # cubics containing the triple plane, over the flag variety
    dim_I = N + h0_projective(n, 3) - r - 2
    # residual-quadric conditions on r-spaces through a fixed (r-1)-space
    m = n - (r + 1) * (r + 2) // 2
    if m != r + 1:
        raise AuditError(f"relative dimension {m} != r+1 for r={r}")
    return DimsReport(r=r, n=n, N=N, delta=delta, dim_I=dim_I, m=m, fix_codim=r + 1)


# -- degree of the Voisin map -------------------------------------------------

def _degree_setup(r: int):
    n = VoisinParams(r).n
    base_dim = n - r - 1
    return n, base_dim


def degree_series_route(r: int) -> int:
    """Closed form: top coefficient of a rational series in h, divided by 2^(n-r-1)."""
    n, D = _degree_setup(r)
    one_2h = TruncatedSeries.linear(1, 2, D)
    one_4h = TruncatedSeries.linear(1, 4, D)
    one_6h = TruncatedSeries.linear(1, 6, D)
    num = one_2h ** ((r + 1) * (r + 2) // 2) * one_4h ** (r + 1) * one_6h
    den = one_2h ** (r + 1) * one_6h
    top = (num / den)[D] * 2 ** (r + 1)
    return _divide_by_cover_degree(top, D)


def _divide_by_cover_degree(value: Fraction, D: int) -> int:
    # pullback along the squaring map of P^D, of degree 2^D
    q = Fraction(value) / 2 ** D
    if q.denominator != 1:
        raise AuditError(f"degree {q} is not an integer")
    return int(q)


def _pulled_back_bundle(r: int):
    n, D = _degree_setup(r)
    P = ProjectiveSpace(D)
    F = direct_sum(*([O(P, 1)] * (r + 1) + [O(P, 3)]))
    return P, F, D


def degree_segre_route(r: int) -> int:
    """2^(r+1) sum_i 2^i s_i(F) c_(D-i)(Sym^2 F) with F = O(1)^(r+1) + O(3) on P^D."""
    P, F, D = _pulled_back_bundle(r)
    s = segre_series(F)
    S2 = sym(2, F)
    total = P.zero()
    for i in range(D + 1):
        total = total + (s.part(i) * S2.chern(D - i)).scale(2 ** i)
    value = P.integrate(total.scale(2 ** (r + 1)))
    return _divide_by_cover_degree(value, D)


def degree_bundle_route(r: int) -> int:
    """Same count as a pushforward from P(F): degree-n part of p_*(c(S^2)^-1 c(Sym^2 F)).

    S is the tautological line of P(F), so c(S^(x)2) = 1 - 2 zeta.
    """
    P, F, D = _pulled_back_bundle(r)
    PF = ProjectiveBundle(F)
    S2 = line_bundle(PF, PF.zeta().scale(-2))
    cls = segre_series(S2) * PF.pullback(sym(2, F).total_chern)
    pushed = PF.pushforward(cls.part(PF.dimension))
    return _divide_by_cover_degree(P.integrate(pushed), D)


def voisin_degree(r: int) -> int:
    if r < 0:
        raise ValueError("r must be nonnegative")
    a, b = degree_series_route(r), degree_segre_route(r)
    if a != b:
        raise AuditError(f"degree routes disagree for r={r}: series {a}, Segre {b}")
    return a


def eigen_crosscheck(r: int) -> bool:
    """deg = lambda^2 for the eigenvalue lambda = (-2)^(r+1) on the top form."""
    return voisin_degree(r) == ((-2) ** (r + 1)) ** 2


# -- fixed locus -----------------------------------------------------------------

@dataclass(frozen=True)
class FixedLocusAudit:
    ranks: tuple[int, int, int]
    product_degree: int
    fibre_dimension: int


def fixed_locus_class(r: int, truncate_first_factor: bool = True, audit: list | None = None) -> ChernPolynomial:
    """Class of the fixed locus in CH^(r+1)(X), as a polynomial in c_i(E*).

    Computed on Gr(r+1, n+1) x Gr(r+2, n+1) as the pushforward of
    e(E* (x) (V - F)) e((F* - E*) (x) Sym^2 E*) e((F* - E*)^2 (x) E*).
    With ``truncate_first_factor`` the product ring drops classes of
    first-factor degree above r+1, which the pushforward never reads.
    """
    if r < 1:
        raise ValueError("fixed-locus class needs r >= 1")
    n = VoisinParams(r).n
    A, B = Grassmannian(r + 1, n + 1), Grassmannian(r + 2, n + 1)
    P = ProductSpace(A, B, r + 1 if truncate_first_factor else None)
    E = tautological_sub(A).pullback(P, P.pullback_first)
    F = tautological_sub(B).pullback(P, P.pullback_second)
    V = trivial_bundle(P, n + 1)
    Ed = E.dual()
    diff = F.dual() - Ed  # (F/E)^* in K-theory

    ranks = ((r + 1) * (n + 1 - (r + 2)), (r + 1) * (r + 2) // 2, r + 1)
    if sum(ranks) != B.dimension + r + 1:
        raise AuditError(f"codimension audit failed: {sum(ranks)} != {B.dimension} + {r + 1}")
    e1 = euler_class(Ed * (V - F), ranks[0])
    e2 = euler_class(diff * sym(2, Ed), ranks[1])
    e3 = euler_class(diff * diff * Ed, ranks[2])
    cls = e1 * e2 * e3
    if not cls.is_homogeneous(sum(ranks)):
        raise AuditError("product of Euler classes is not homogeneous of the expected degree")
    if audit is not None:
        audit.append(FixedLocusAudit(ranks, sum(ranks), B.dimension))
    pushed = P.pushforward_to_first_factor(cls)
    return express_in_chern_monomials(pushed, r + 1)


# -- divisor pullback --------------------------------------------------------------

def psi_star_h(r: int) -> int:
    """Coefficient of h in the pullback of the Plucker class h.

    Works on a one-generator ring where c_1(E) = -h; only first Chern classes
    enter.  Uses 0 -> F -> V -> Sym^2 E* -> 0 and
    0 -> Psi^*E -> F -> (F/E)* (x) (F/E)* -> 0.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    n = VoisinParams(r).n
    R = FormalChernRing(1, 1)
    h = R.generator(1)
    E = line_bundle(R, -h) + trivial_bundle(R, r)  # only c_1(E) = -h matters
    V = trivial_bundle(R, n + 1)
    F = V - sym(2, E.dual())
    if F.rank != r + 2:
        raise AuditError(f"rank of F is {F.rank}, expected {r + 2}")
    if F.chern(1) != h.scale(-(r + 2)):
        raise AuditError(f"c1(F) = {F.chern(1)!r}, expected -(r+2)h")
    quot = (F - E).dual()
    pulled = F - quot * quot
    if pulled.rank != r + 1:
        raise AuditError(f"rank of Psi^*E is {pulled.rank}, expected {r + 1}")
    ratio = pulled.chern(1).coefficient((1,)) / E.chern(1).coefficient((1,))
    if ratio.denominator != 1:
        raise AuditError(f"non-integral ratio {ratio}")
    return int(ratio)


# -- degeneracy loci of symmetric forms ------------------------------------------------

def rank_strata_codims(m: int) -> list[int]:
    """Codimensions of {rank <= rho} for rho = m-1, ..., 1 in the space of symmetric m x m forms."""
    if m < 2:
        raise ValueError("need m >= 2")
    return [comb(m - rho + 1, 2) for rho in range(m - 1, 0, -1)]


def det_degree(V, L) -> int:
    return symmetric_form_degeneracy_degree(V, L)


def determinant_degrees() -> tuple[int, int]:
    """Degrees of the degeneracy hypersurfaces of the residual quadric family on P^5.

    The 5 x 5 form acts on V = O(-1) + O^4 with values in O(1); its
    restriction to the hyperplane t = 0 acts on O^4.
    """
    P5 = ProjectiveSpace(5)
    L = O(P5, 1)
    five = det_degree(O(P5, -1) + trivial_bundle(P5, 4), L)
    four = det_degree(trivial_bundle(P5, 4), L)
    return five, four


# -- reports ----------------------------------------------------------------------

def _fmt(values) -> list[str]:
    return [str(Fraction(v)) for v in values]


@dataclass
class VerificationReport:
    """One computation with its exact result and, when known, the expected value.

    ``passed`` is exact equality of the label -> value maps; there are no
    tolerances anywhere.
    """

    case: str
    params: dict
    monomials: list[str]
    computed: list[Fraction]
    expected_monomials: list[str] | None
    expected: list[Fraction] | None
    provenance: str
    millis: int = 0
    notes: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        if self.error is not None:
            return False
        if self.expected is None:
            return True
        got = dict(zip(self.monomials, self.computed))
        want = dict(zip(self.expected_monomials, self.expected))
        return got == want

    def to_dict(self) -> dict:
        out = {
            "case": self.case,
            "params": dict(self.params),
            "result": {"monomials": list(self.monomials), "coefficients": _fmt(self.computed)},
            "expected": {
                "monomials": list(self.expected_monomials or []),
                "coefficients": _fmt(self.expected or []),
                "provenance": self.provenance,
            },
            "pass": self.passed,
            "millis": int(self.millis),
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def _params(kind: str, r: int | None) -> dict:
    if r is None:
        return {}
    if kind == "strata":
        return {"m": r}
    return {"r": r, "n": VoisinParams(r).n}


def compute(kind: str, r: int | None = None) -> tuple[list[str], list[Fraction]]:
    """Run one computation and return parallel lists (labels, exact values)."""
    if kind == "deg":
        return ["deg"], [Fraction(voisin_degree(r))]
    if kind == "eigen":
        lam = (-2) ** (r + 1)
        return ["deg", "lambda^2"], [Fraction(voisin_degree(r)), Fraction(lam * lam)]
    if kind == "fixed-locus":
        poly = fixed_locus_class(r)
        return [format_monomial(e) for e, _ in poly], [c for _, c in poly]
    if kind == "psi-h":
        return ["h"], [Fraction(psi_star_h(r))]
    if kind == "dims":
        items = dims_report(r).as_items()
        return [k for k, _ in items], [Fraction(v) for _, v in items]
    if kind == "strata":
        m = 5 if r is None else r
        return [f"rank<={rho}" for rho in range(m - 1, 0, -1)], [Fraction(c) for c in rank_strata_codims(m)]
    if kind == "det-degrees":
        return ["5x5", "4x4"], [Fraction(v) for v in determinant_degrees()]
    raise ValueError(f"unknown computation {kind!r}")


@dataclass(frozen=True)
class Case:
    name: str
    kind: str
    r: int | None
    expected: tuple | None
    provenance: str
    expected_monomials: tuple[str, ...] | None = None
    notes: tuple[str, ...] = ()


def all_cases() -> list[Case]:
    cases: list[Case] = []
    for r in range(6):
        prov = "paper" if r <= 2 else "derived"
        cases.append(Case(f"deg-r{r}", "deg", r, (4 ** (r + 1),), prov, ("deg",)))
    for r in range(6):
        lam2 = 4 ** (r + 1)
        cases.append(Case(f"eigen-r{r}", "eigen", r, (lam2, lam2), "derived", ("deg", "lambda^2")))
    cases.append(Case("fixed-locus-r1", "fixed-locus", 1, (21,), "paper", ("c2",)))
    cases.append(Case("fixed-locus-r2", "fixed-locus", 2, (-20, 110, 49), "paper", ("c1^3", "c1*c2", "c3")))
    for r in range(1, 6):
        prov = "paper" if r in (1, 2) else "derived"
        cases.append(Case(f"psi-h-r{r}", "psi-h", r, (3 * r + 4,), prov, ("h",)))
    dims1 = ("n", "N", "delta_1", "delta_2", "dim_I", "m", "fix_codim")
    dims2 = ("n", "N", "delta_1", "delta_2", "delta_3", "dim_I", "m", "fix_codim")
    cases.append(Case("dims-r1", "dims", 1, (5, 4, 7, 4, 57, 2, 2), "derived", dims1))
    cases.append(Case("dims-r2", "dims", 2, (9, 11, 19, 16, 10, 227, 3, 3), "derived", dims2))
    cases.append(
        Case("strata-m5", "strata", 5, (1, 3, 6, 10), "paper", ("rank<=4", "rank<=3", "rank<=2", "rank<=1"))
    )
    cases.append(
        Case(
            "det-degrees",
            "det-degrees",
            None,
            (7, 4),
            "paper",
            ("5x5", "4x4"),
            ("form bundle read as V = O(-1) + O^4 acting V -> V* (x) O(1)",),
        )
    )
    return cases


def case_by_name(name: str) -> Case:
    for c in all_cases():
        if c.name == name:
            return c
    raise KeyError(name)


def run_case(case: Case, timings: bool = False) -> VerificationReport:
    t0 = time.perf_counter()
    error = None
    try:
        monos, values = compute(case.kind, case.r)
    except (AuditError, ArithmeticError, ValueError) as exc:
        monos, values, error = [], [], f"{type(exc).__name__}: {exc}"
    millis = int((time.perf_counter() - t0) * 1000) if timings else 0
    return VerificationReport(
        case=case.name,
        params=_params(case.kind, case.r),
        monomials=monos,
        computed=values,
        expected_monomials=list(case.expected_monomials) if case.expected_monomials else None,
        expected=[Fraction(v) for v in case.expected] if case.expected is not None else None,
        provenance=case.provenance,
        millis=millis,
        notes=list(case.notes),
        error=error,
    )
