# %% [markdown]
# # q-polynomials by localization
#
# Every class in this package is assembled from q-polynomials: push-forwards
# to projective space of the CSM class of a Tjurina transform. There are two
# independent localization routes over the Grassmannian.

# %%
from detcsm.qpoly import MatrixKind, q_formula_I, q_formula_II, q_polynomial

q = q_polynomial("symmetric", 3, 2)
print("q^S_{3,2} =", q)

# %% [markdown]
# The corank-2 locus of symmetric 3x3 matrices is the Veronese surface: its
# degree 4 sits at H^3 and its Euler characteristic 3 at H^5.

# %%
print("codim", q.codim, "degree", q[q.codim], "chi", q.euler)

# %% [markdown]
# The smallest nontrivial case is the smooth quadric surface P^1 x P^1 in P^3.

# %%
print("q_{2,1} =", q_polynomial("ordinary", 2, 1))

# %% [markdown]
# Both routes agree, and the answer does not depend on the torus weights.

# %%
for kind in MatrixKind:
    n, r = (6, 2) if kind is MatrixKind.SKEW else (4, 2)
    a = q_formula_I(kind, n, r)
    b = q_formula_II(kind, n, r, weights=(-5, 2, 9, 0, 17, 4)[:n])
    print(kind.value, n, r, a == b)
