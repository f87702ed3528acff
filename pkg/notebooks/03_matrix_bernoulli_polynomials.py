"""
Poly-Bernoulli polynomials attached to a matrix
===============================================

Exact polynomials in (y, w) read off from a two-variable generating function,
compared with the one-variable expansion and the closed forms.
"""

# %%
from akzeta.exact import I
from akzeta.gl2 import bigen_series, closed_form_hd, gl2_bernoulli, gl2_value, transform_invert, unigen_series
from akzeta.moebius import G_ETA, G_XI, g_alpha, h_d

# %%
# the reflection family at (y, w) = (1, 0)
for alpha in (3, -2, I):
    g = g_alpha(alpha)
    print(alpha, gl2_value(g, -3, 2, 1, 0), gl2_value(g, -2, 3, 1, 0))

# %%
# full polynomial for a small index
print(gl2_bernoulli(G_ETA, 2, 2))

# %%
# the two generating functions give the same column
g = h_d(3)
grid = bigen_series(g, 6)
print(all(grid[m][2] == p for m, p in enumerate(unigen_series(g, -2, 6))))
print(closed_form_hd(4, -2, 3) == grid[4][2])

# %%
# g_xi is g_eta seen through w -> -w - 1 and a sign
print(transform_invert(gl2_bernoulli(G_ETA, 3, 2), 3) == gl2_bernoulli(G_XI, 3, 2))
