"""All quantisations at once: minor matrices and the general solution."""

# %%
# Any two compatible matrices for the same exchange matrix (and the same D')
# differ by a skew solution of Bt^T Lambda = 0.  Minor matrices supply a
# basis of those solutions.
from clusterquant import (
    build_quantisation,
    choose_frame,
    general_solution,
    homogeneous_basis,
    minor_block,
    quantisation_space_dim,
)

a = [[0, 1], [-1, 0], [2, 3], [4, 5]]
m_block = minor_block(a)
print("signed minor matrix of a 4x2 matrix:")
print(m_block)

# %%
# Five vertices, three of them frozen: three enhanced solutions, one for
# each pair of non-frame rows.
bt = [[0, 1], [-1, 0], [2, 0], [3, 0], [0, 4]]
frame = choose_frame(bt)
print("\nframe rows:", [f + 1 for f in frame.frame])
for sol in homogeneous_basis(bt, frame):
    print(f"solution for rows ({sol.i + 1},{sol.j + 1}):")
    print(sol.matrix)

print("\ndimension of the solution space:", quantisation_space_dim(5, 2))

# %%
# The general solution adds integer combinations of the basis to a
# particular quantisation.  D' does not change.
base = build_quantisation(bt)
shifted = general_solution(bt, [1, -2, 3])
print("\nparticular Lambda:")
print(base.lambda_)
print("with coefficients (1, -2, 3):")
print(shifted.lambda_)
print("D' unchanged:", shifted.dprime == base.dprime)
