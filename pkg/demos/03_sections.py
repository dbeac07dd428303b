# %% [markdown]
# # Euler characteristics of linear sections
#
# The involution J trades the (reversed) CSM class of X for the generating
# polynomial of Euler characteristics of generic linear sections.

# %%
from detcsm.exactalg import DPoly, format_poly
from detcsm.sectional import chi_poly, involution_J, sectional_euler

gamma = DPoly((3, 6, 4))
print("J(3 + 6t + 4t^2) =", format_poly(involution_J(gamma).coeffs, "t", descending=False))

# %% [markdown]
# For the Veronese surface: chi = 3, a hyperplane section is a rational
# quartic curve (chi 2), two hyperplanes cut four points.

# %%
chi = chi_poly("symmetric", 3, 2)
print([sectional_euler(chi, k) for k in range(3)])

# %% [markdown]
# Determinantal hypersurfaces carry much larger section data.

# %%
chi = chi_poly("ordinary", 3, 1)
print([sectional_euler(chi, k) for k in range(8)])
