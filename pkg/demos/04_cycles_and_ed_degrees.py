# %% [markdown]
# # Characteristic cycles, polar degrees and ED degrees
#
# Classes in P^N lift to P^N x P^N. The conormal row gives the polar degrees,
# whose sum is the generic Euclidean distance degree.

# %%
from detcsm.cycles import characteristic, conormal, flip, ged, polar_degrees

print("Ch  ", characteristic("symmetric", 3, 1).coeffs)
print("Con ", conormal("symmetric", 3, 1).coeffs)

# %% [markdown]
# Projective duality exchanges corank k with its complementary corank and
# reverses the polar degrees.

# %%
print(polar_degrees("skew", 6, 2))
print(tuple(reversed(polar_degrees("skew", 6, 4))))

# %% [markdown]
# The 3x3 determinant and the rank-one Segre variety P^2 x P^2 are dual, so
# they have the same ED degree, 39.

# %%
print(ged("ordinary", 3, 1), ged("ordinary", 3, 2))

# %% [markdown]
# Characteristic cycles of symmetric corank-1 loci are flip-symmetric.

# %%
ch = characteristic("symmetric", 4, 1)
print(ch.coeffs, ch == flip(ch))
