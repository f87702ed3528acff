"""
The identity catalog
====================

Every relation is checked exactly where possible and numerically otherwise;
the report is stable from run to run.
"""

# %%
from akzeta.identities import CatalogConfig, resolve_dual_C_l1, run_catalog

# %%
report = run_catalog(CatalogConfig(max_order=3, max_n=1, include_numeric=False))
for case_id, row in report.summary().items():
    print(f"{case_id:28} pass={row['pass']:4} fail={row['fail']}")

# %%
# the shifted C-duality has an unlabelled sequence; try the candidates on a grid
res = resolve_dual_C_l1()
print(res["verdict"], res["verified_range"])
for name, info in res["candidates"].items():
    print(name, info)

# %%
numeric = run_catalog(CatalogConfig(cases=["numeric-zeta3", "numeric-eta-symmetry", "numeric-hankel"]))
print(numeric.all_passed, len(numeric.cases))
