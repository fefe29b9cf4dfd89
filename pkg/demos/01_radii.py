# %% [markdown]
# # Packing radius, covering radius and coset leaders
#
# A code with minimum distance d corrects e = (d-1)//2 errors.  Its covering
# radius R is the largest distance from any word to the code.  R = e means
# perfect; R = e + 1 means quasi-perfect (QP).

# %%
import numpy as np

from qpcodes import LinearCode, classify_radius_class, covering_radius_by_coset_reps
from qpcodes.gf import CodeMatrix, nullspace_array

# %% [markdown]
# The [7,4,3] Hamming code: every syndrome is hit by a single column, so R = 1 = e.

# %%
hamming = LinearCode.from_rows(2, ["1000110", "0100101", "0010011", "0001111"])
rep = classify_radius_class(hamming)
print(rep.n, rep.k, rep.d, "e =", rep.e, "R =", rep.R, "perfect:", rep.is_perfect)
print("weights", rep.weights.counts)
print("alpha  ", rep.cosets.alpha)

# %% [markdown]
# The extended binary Golay code is the classical QP example.  The cyclic
# [23,12,7] code comes from its generator polynomial; one parity bit extends it.

# %%
poly = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]
g = np.zeros((12, 23), dtype=np.uint8)
for i in range(12):
    g[i, i : i + 12] = poly
g = np.hstack([g, (g.sum(axis=1) % 2)[:, None]])
golay24 = LinearCode(CodeMatrix(2, g))
rep = classify_radius_class(golay24)
print(f"[{rep.n},{rep.k},{rep.d}] e={rep.e} R={rep.R} QP={rep.is_quasi_perfect}")
print("alpha", rep.cosets.alpha)

# %% [markdown]
# For a QP code the cosets not covered by the balls of radius e all have
# leaders of weight exactly e + 1:

# %%
from math import comb

alpha = rep.cosets.alpha
print(alpha[rep.e + 1] == 2**12 - sum(comb(24, i) for i in range(rep.e + 1)))

# %% [markdown]
# Two independent covering radius computations: the syndrome sweep used by
# the library, and a direct minimisation over the cosets of a systematic code.

# %%
h = np.array([[1, 0, 0, 1, 1], [0, 1, 0, 1, 0], [0, 0, 1, 0, 1]], dtype=np.uint8)
c = LinearCode(CodeMatrix(2, nullspace_array(h, 2)))
print(classify_radius_class(c).R, covering_radius_by_coset_reps(c))
