"""Pfaffians, determinants and which Dynkin quivers are full rank."""

# %%
# A skew-symmetric matrix has determinant equal to the square of its
# Pfaffian.  Both are computed exactly over the integers.
from clusterquant import (
    Matrix,
    det_exact,
    dynkin_exchange,
    dynkin_orientations,
    perfect_matchings,
    pfaffian,
    pfaffian_via_matchings,
)

b = Matrix([[0, 2, -1, 3], [-2, 0, 4, 1], [1, -4, 0, 5], [-3, -1, -5, 0]])
print("B =")
print(b)
print("Pf(B) =", pfaffian(b), "  det(B) =", det_exact(b))
print("pairing expansion agrees:", pfaffian_via_matchings(b) == pfaffian(b))

# %%
# Nonzero terms of the expansion correspond to perfect matchings of the
# graph whose edges are the nonzero entries.
a4 = dynkin_exchange("A", 4)
print("\nA4 quiver:")
print(a4.data)
print("perfect matchings:", perfect_matchings(a4.data))

# %%
# A path on an even number of vertices has exactly one perfect matching, so
# |Pf| = 1 whatever the orientation.  D_n has a trivalent vertex; its
# matchings cancel in pairs or do not exist, and the Pfaffian vanishes.
for kind, n in [("A", 2), ("A", 4), ("A", 6), ("D", 4), ("D", 6), ("E", 6), ("E", 8)]:
    values = sorted({pfaffian(bt.data) for bt in dynkin_orientations(kind, n)})
    print(f"{kind}{n}: Pfaffians over all orientations {values}")
