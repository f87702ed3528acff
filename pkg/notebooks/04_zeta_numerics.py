"""
Evaluating the zeta integrals
=============================

Double-exponential quadrature for Re s > 0, a Hankel contour elsewhere, and
a circle around t = 0 at the nonpositive integers.
"""

# %%
import numpy as np

from akzeta.moebius import G_ETA, G_XI, g_alpha
from akzeta.numeric import riemann_zeta_real, xi_D_at_neg_int, xi_D_hankel, xi_D_numeric, xi_relation_check

# %%
# xi(1; s) = s zeta(s + 1)
for s in (1, 2, 3):
    v = xi_D_numeric(1, s, 1, 0, G_XI)
    print(s, v, s * riemann_zeta_real(s + 1))

# %%
# the eta function is symmetric in its two arguments
print(xi_D_numeric(1.5, 2.5, 1, 0, G_ETA).value, xi_D_numeric(2.5, 1.5, 1, 0, G_ETA).value)

# %%
# continuation to the left half-plane
for s in np.linspace(-2.75, 2.25, 6):
    print(f"{s:6.2f}", xi_D_hankel(2, s, 1, 0, G_ETA))

# %%
# at s = -m the integral collapses to a Taylor coefficient; compare with the exact value 242
print(xi_D_at_neg_int(-3, 2, 1, 0, g_alpha(3)))

# %%
print(xi_relation_check("difference", G_XI, 2, 1.5, 1.3, 0.8).to_dict())
print(xi_relation_check("duality0", G_ETA, 1.5, 2.5, 1.2, 1.1).to_dict())
