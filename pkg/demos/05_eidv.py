# %% [markdown]
# # Homogeneous EIDV
#
# Pull a rank stratum back along a transverse degree-d map P^N -> P(M_n).
# Only the numeric data enter; transversality is assumed.

# %%
from detcsm.eidv import EIDVSpec, eidv_csm, eidv_euler

spec = EIDVSpec("symmetric", 3, 2, map_degree=1, ambient_dim=4)
print(eidv_csm(spec), "chi =", eidv_euler(spec))

# %% [markdown]
# 2x2 determinants of quadrics on P^3: a smooth surface of degree 4, i.e. a
# K3 surface, whose Euler characteristic is 24.

# %%
k3 = EIDVSpec("ordinary", 2, 1, map_degree=2, ambient_dim=3)
print(eidv_csm(k3), "chi =", eidv_euler(k3))

# %% [markdown]
# Degeneracy loci of 3x3 matrices of linear forms on P^4.

# %%
for k in (1, 2):
    s = EIDVSpec("ordinary", 3, k, 1, 4)
    print(f"corank >= {k}:", eidv_csm(s), " chi =", eidv_euler(s))
