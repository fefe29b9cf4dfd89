# %% [markdown]
# # Chains of QP codes and the stored [24,12,7] / [25,12,8] corpus
#
# A QP code with d = 3 or 4 and R = 2 stays QP with R = 2 when a new
# projective point is appended to its parity-check matrix, as long as the
# length stays below (q^r - 1)/(q - 1) - 1 with r = n - k.

# %%
from qpcodes import ClassificationTask, chain_run, classify, verify_corpus

# %%
start = classify(ClassificationTask(2, 8, 4, 4)).quasi_perfect[0]
chain = chain_run(start)
for n, k, d, R in chain.parameters:
    print(f"[{n},{k},{d}]_2 R={R}")

# %% [markdown]
# The ternary chain keeps codimension 3 and stops at length 12, one short of
# the perfect ternary Hamming code of length 13.

# %%
start = classify(ClassificationTask(3, 5, 2, 3)).quasi_perfect[0]
print(chain_run(start).parameters[-1])

# %% [markdown]
# The stored generator matrices: parameters, QP status and pairwise
# inequivalence are all recomputed here.

# %%
for check in verify_corpus():
    print(check.name, (check.n, check.k, check.d, check.R), "ok" if check.ok else "FAILED")
