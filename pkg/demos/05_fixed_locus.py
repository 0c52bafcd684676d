"""Class of the fixed locus, as a polynomial in Chern classes of E*."""
import time

from chowkit.voisin import fixed_locus_class

for r in (1, 2):
    t0 = time.perf_counter()
    audit = []
    cls = fixed_locus_class(r, audit=audit)
    print(f"r={r}: [Fix] = {cls}    ({time.perf_counter() - t0:.2f} s, Euler ranks {audit[0].ranks})")

# r=3 works too but takes a while (about 20 s)
# print(fixed_locus_class(3))
