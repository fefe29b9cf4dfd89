# %% [markdown]
# # Classifying codes up to equivalence
#
# Two codes are equivalent when a coordinate permutation combined with nonzero
# scalings maps one onto the other.  The classifier builds every [n,k,d]_q
# code one row and one column at a time and keeps one canonical
# representative per class.

# %%
import numpy as np

from qpcodes import ClassificationTask, canonical_form, classify, equivalent, random_monomial

# %% [markdown]
# Binary [7,3,3]: three classes, two of them quasi-perfect.

# %%
result = classify(ClassificationTask(2, 7, 3, 3))
print(result.count_all, "classes,", result.count_qp, "quasi-perfect")
for code, rep in zip(result.representatives, result.reports):
    print(list(code.generator.to_strings()), "R =", rep.R, "alpha =", rep.cosets.alpha)

# %% [markdown]
# Canonical forms do not change under a random monomial map, so they serve as
# dictionary keys for deduplication.

# %%
rng = np.random.default_rng(0)
code = result.representatives[0]
image = random_monomial(code, rng)
print(canonical_form(code) == canonical_form(image), equivalent(code, image))
print(equivalent(result.representatives[0], result.representatives[1]))

# %% [markdown]
# A slightly larger ternary row.

# %%
result = classify(ClassificationTask(3, 8, 4, 3))
print(f"{result.task.label}: {result.count_all} classes, {result.count_qp} QP, {result.seconds:.1f}s")
