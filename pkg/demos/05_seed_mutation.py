"""Quantum seeds and their mutation."""

# %%
from clusterquant import build_quantisation, initial_seed, mutate_seed

pair = build_quantisation([[0, 1], [-1, 0], [1, 0], [0, 1]])
seed = initial_seed(pair)
print("initial cluster:", [str(x) for x in seed.cluster])

# %%
# Mutation at a mutable vertex changes all three parts of the seed.  The
# new cluster variable is a two-term element of the same torus.
once = mutate_seed(seed, 0)
print("\nafter mutating vertex 1:")
print("exchange matrix:")
print(once.exchange.data)
print("Lambda:")
print(once.lambda_)
for i, x in enumerate(once.cluster, 1):
    print(f"  X{i} = {x}")
print("pairwise q-commuting:", once.is_q_commutative())

# %%
# Mutation sequences stay compatible.  Mutating twice at the same vertex
# restores the seed exactly.
seq = mutate_seed(mutate_seed(once, 1), 0)
print("\nafter 1, 2, 1: X =", [str(x) for x in seq.cluster])
print("D' along the way:", seq.pair().dprime.diag)
print("mutating 1 twice is the identity:", mutate_seed(once, 0) == seed)
