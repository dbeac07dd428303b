# %% [markdown]
# # Reference tables and coefficient patterns
#
# The verification suite recomputes the stored reference rows exactly.

# %%
from detcsm.verify import run_verify, scan_conjectures

results = run_verify(["skew-n6", "sym-n3", "sym-n4", "skew-n7"])
for r in results:
    if not r.passed:
        print("FAIL", r.group, r.name, r.detail)
print(sum(r.passed for r in results), "of", len(results), "items agree")

# %% [markdown]
# The one disagreement is a printed coefficient of the dense skew n=7
# stratum. The strata partition forces 1316: C(21,3) minus the 14 from the
# corank-3 stratum.
#
# Positivity and log-concavity are scanned, not asserted.

# %%
for row in scan_conjectures("skew", 7):
    print(row)
