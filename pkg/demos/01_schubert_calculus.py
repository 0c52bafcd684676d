"""Schubert calculus on small Grassmannians."""
from chowkit import Grassmannian, integrate, schubert_product, BoxShape

# Gr(2,4): lines in P^3.  sigma_1 is the class of lines meeting a fixed line.
G = Grassmannian(2, 4)
s1 = G.sigma((1,))
print("Gr(2,4) has dimension", G.dimension)
print("sigma_1^2 =", s1 * s1)

# four general lines in P^3 are met by exactly two lines
print("lines meeting four lines:", integrate(s1 ** 4))

# a product straight from the partition layer
print("sigma_21 * sigma_21 in a 3x3 box:", schubert_product((2, 1), (2, 1), BoxShape(3, 3)))

# degree of Gr(2,5) under the Plucker embedding
G25 = Grassmannian(2, 5)
print("deg Gr(2,5) in the Plucker embedding:", integrate(G25.sigma((1,)) ** G25.dimension))
