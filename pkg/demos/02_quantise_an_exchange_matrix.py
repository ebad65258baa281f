"""Deciding and constructing a quantisation of an exchange matrix."""

# %%
from clusterquant import (
    ExchangeMatrix,
    NoQuantisationError,
    build_quantisation,
    check_compatible,
    complete_basis,
    dynkin_exchange,
)

# Two mutable vertices joined by an arrow, each with one frozen neighbour.
bt = ExchangeMatrix([[0, 1], [-1, 0], [1, 0], [0, 1]])
print("extended exchange matrix:")
print(bt.data)
print("fundamental skew-symmetriser:", bt.skew_symmetriser().diag)

# %%
# Completing the columns of the exchange matrix to a basis of Q^m is the
# only choice involved.  Frozen standard vectors are tried first.
completion = complete_basis(bt)
print("completion uses e_j for j =", [j + 1 for j in completion.chosen_indices])

pair = build_quantisation(bt, completion=completion)
print("Lambda =")
print(pair.lambda_)
print("D' =", pair.dprime.diag)
print("Bt^T Lambda =")
print(bt.data.T @ pair.lambda_)

# %%
# A skew-symmetrisable but non-skew-symmetric example: the skew-symmetriser
# is not the identity, and D' is a positive multiple of it.
b2 = ExchangeMatrix([[0, 2], [-1, 0], [1, 1]])
pair2 = build_quantisation(b2)
print("\nB =", b2.data.tolist(), " D =", b2.skew_symmetriser().diag)
print("Lambda =", pair2.lambda_.tolist(), " D' =", pair2.dprime.diag)
print("still compatible:", check_compatible(b2, pair2.lambda_).dprime == pair2.dprime)

# %%
# Full column rank is necessary.  D4 has a singular exchange matrix.
try:
    build_quantisation(dynkin_exchange("D", 4))
except NoQuantisationError as exc:
    print("\nD4:", exc)
