"""Degree of the self-map on r-planes of a cubic, three ways."""
from chowkit.voisin import (
    VoisinParams, degree_series_route, degree_segre_route, degree_bundle_route,
    psi_star_h, dims_report,
)

for r in range(5):
    p = VoisinParams(r)
    a, b = degree_series_route(r), degree_segre_route(r)
    c = degree_bundle_route(r) if r <= 3 else None
    print(f"r={r}  n={p.n:2d}  N={p.N:3d}  series={a:5d}  segre={b:5d}  bundle={c}")

# pullback of the Plucker class is a multiple of itself
print("psi^*h / h:", [psi_star_h(r) for r in range(1, 6)])

# bookkeeping for planes in a cubic 8-fold
print(dims_report(2))
