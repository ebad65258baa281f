"""Arithmetic in a based quantum torus."""

# %%
# Basis elements X^a multiply as X^a X^b = q^beta(a,b) X^(a+b) with
# beta(a, b) = a^T Lambda b.
from clusterquant import LaurentQ, QuantumTorus, check_q_commute, normal_order

t = QuantumTorus([[0, 1, 0], [-1, 0, 2], [0, -2, 0]])
x1, x2, x3 = (t.gen(i) for i in range(3))
print("X1 X2 =", x1 * x2)
print("X2 X1 =", x2 * x1)
print("X1 and X2 q-commute with lambda_12 = 1:", check_q_commute(x1, x2, 1))

# %%
# Monomials are units, and normal ordering relates X^a to the ordered
# product of powers of the generators.
a = (2, -1, 3)
xa = t.monomial(a)
print("\nX^a X^-a =", xa * xa.inverse())
ordered = x1 ** 2 * x2 ** -1 * x3 ** 3
print("X1^2 X2^-1 X3^3 =", ordered)
print("normal-order exponent:", normal_order(a, t.lambda_))

# %%
# Coefficients are Laurent polynomials in q.
s = x1 + x3.scale(LaurentQ({2: 1, 0: -1}))
print("\ns =", s)
print("s^2 =", s * s)
