"""
Which matrices give a zeta function?
====================================

The integral along the ray [1, inf] only makes sense when the image arc g([1, inf])
meets the ray in a controlled way. This script classifies a handful of matrices.
"""

# %%
import json

from akzeta.exact import I
from akzeta.moebius import G_ETA, G_XI, Matrix2, check_def_cond, classify, g_alpha, vertex_set

# %%
samples = {
    "eta": G_ETA,
    "xi": G_XI,
    "reflection at 3": g_alpha(3),
    "reflection at -2": g_alpha(-2),
    "reflection at i": g_alpha(I),
    "translation by 1": Matrix2(1, 1, 0, 1),
    "translation by i": Matrix2(1, I, 0, 1),
}

for name, g in samples.items():
    res = check_def_cond(g)
    print(f"{name:18} {str(g):22} admissible={res.admissible!s:5} vertices={vertex_set(g)}")

# %%
# the reflection T -> 3 - T maps [1, 3/2] onto [3/2, 2], so both arcs share the point 3/2
res = check_def_cond(g_alpha(3))
print(res.reason, res.witness, res.witness_image)

# %%
# translation by i fixes infinity with a zero angle: a cusp, so the vertex weights sum to 2
print(json.dumps(classify(Matrix2(1, I, 0, 1)), indent=1))
