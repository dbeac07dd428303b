# %% [markdown]
# # CSM classes of rank strata
#
# Open strata, their closures, the dense stratum and Chern-Mather classes are
# integer combinations of q-polynomials.

# %%
from detcsm.exactalg import HClass
from detcsm.strata import csm_closure, csm_dense, csm_open, mather, singular_coranks

for k in singular_coranks("skew", 6):
    print(f"open corank {k}:", csm_open("skew", 6, k))
print("dense:", csm_dense("skew", 6))

# %% [markdown]
# The strata partition the projective space of matrices, so their classes
# add up to (1+H)^(N+1).

# %%
N = 14
total = csm_dense("skew", 6) + csm_open("skew", 6, 2) + csm_open("skew", 6, 4)
print(total == HClass.projective_space(N), total.coeffs[:5])

# %% [markdown]
# For odd skew-symmetric matrices generic rank is n-1, so the dense stratum is
# corank 1 and has a base-change formula of its own.

# %%
print(csm_open("skew", 7, 1) == csm_dense("skew", 7))

# %% [markdown]
# Closed locus versus Chern-Mather class: they share the leading term and
# diverge where the singularities are.

# %%
print("csm   ", csm_closure("symmetric", 3, 1))
print("mather", mather("symmetric", 3, 1))
