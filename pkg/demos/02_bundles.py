"""Chern classes of bundles built out of line bundles and tautological bundles."""
from chowkit import ProjectiveSpace, Grassmannian, O, trivial_bundle, tautological_sub, tautological_quotient
from chowkit import sym, segre_series, euler_class, integrate

P = ProjectiveSpace(4)

# tangent bundle of P^4 from the Euler sequence
T = 5 * O(P, 1) - trivial_bundle(P, 1)
print("c(T_P4) =", T.total_chern)
print("Euler characteristic:", integrate(euler_class(T, 4)))

# lines on a cubic surface: zeros of a section of Sym^3 E* on Gr(2,4)
G = Grassmannian(2, 4)
Ed = tautological_sub(G).dual()
print("lines on a cubic surface:", integrate(euler_class(sym(3, Ed), 4)))

# Whitney check for the tautological sequence
print("c(E) c(Q) =", tautological_sub(G).total_chern * tautological_quotient(G).total_chern)

# Segre series of O(-1)+O(-1): the inverse of (1-h)^2
print("s(O(-1)^2) =", segre_series(O(P, -1) + O(P, -1)))

# virtual bundles are fine too
V = O(P, 2) - O(P, 1)
print("rank", V.rank, "c =", V.total_chern)
