"""
Poly-Bernoulli numbers
======================

Exact tables of the two classical families and the symmetry that makes them interesting.
"""

# %%
from akzeta.classical import poly_bernoulli_B, poly_bernoulli_C, poly_bernoulli_B_series, stirling2

# %%
# B_n^(-k) for small n, k: the table is symmetric in n and k
table = [[poly_bernoulli_B(n, -k) for n in range(6)] for k in range(6)]
for row in table:
    print(" ".join(f"{v:6}" for v in row))
assert all(table[i][j] == table[j][i] for i in range(6) for j in range(6))

# %%
# the companion family C_n^(-k) is symmetric after shifting both indices by one
print([[poly_bernoulli_C(m, -k - 1) for m in range(5)] for k in range(5)])

# %%
# positive index: B_n^(1) are the Bernoulli numbers with B_1 = +1/2
print(poly_bernoulli_B_series(1, 8))

# %%
# B_n = C_n + C_{n-1}^(k-1) links the two families
n, k = 5, 3
print(poly_bernoulli_B(n, k), poly_bernoulli_C(n, k) + poly_bernoulli_C(n - 1, k - 1))

# %%
# the closed form runs through Stirling numbers of the second kind
print([stirling2(6, j) for j in range(7)])
