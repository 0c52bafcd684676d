"""Rank strata of symmetric forms and degrees of determinant hypersurfaces."""
from chowkit import ProjectiveSpace, O, trivial_bundle
from chowkit.sheaves import symmetric_form_degeneracy_degree
from chowkit.voisin import rank_strata_codims, determinant_degrees

for m in range(2, 7):
    print(f"{m}x{m} symmetric forms, codim of rank <= m-1, ..., 1:", rank_strata_codims(m))

print("determinant degrees:", determinant_degrees())

# same thing by hand: V = O(-1) + O^4 mapping to V* (x) O(1)
P = ProjectiveSpace(5)
V = O(P, -1) + trivial_bundle(P, 4)
print(symmetric_form_degeneracy_degree(V, O(P, 1)))
