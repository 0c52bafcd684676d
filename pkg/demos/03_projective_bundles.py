"""Pushforward from a projective bundle picks out Segre classes."""
from chowkit import ProjectiveSpace, ProjectiveBundle, O, direct_sum, segre_series

P = ProjectiveSpace(3)
F = direct_sum(O(P, 0), O(P, 1), O(P, 3))
PF = ProjectiveBundle(F)
print("dim P(F) =", PF.dimension)

s = segre_series(F)
for k in range(2, 6):
    pushed = PF.pushforward(PF.zeta_power(k))
    print(f"p_*(zeta^{k}) =", pushed, "   s_%d(F) =" % (k - 2), s.part(k - 2))
