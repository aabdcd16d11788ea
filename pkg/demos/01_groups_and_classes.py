# # Groups as Cayley tables
#
# Every group here is a numpy table with the identity at index 0.
# The catalog builds the usual small families by name.

# %%
import numpy as np

from tensor_degree import catalog_group, centralizer, conjugacy_classes, relative_commutator

S3 = catalog_group("S3")
print(S3)
print(S3.table)

# %% [markdown]
# Element orders give a quick fingerprint of a group.

# %%
for name in ["C6", "S3", "D4", "Q8", "C4xC2"]:
    G = catalog_group(name)
    print(f"{name:6} order profile {G.order_profile()}")

# %% [markdown]
# Conjugacy classes, centralizers and the commutator subgroup.

# %%
parts = conjugacy_classes(S3, S3.whole, S3.whole)
print("classes:", parts.classes)
print("class sizes:", parts.sizes())

rot = next(g for g in range(6) if S3.element_order(g) == 3)
print("centralizer of a 3-cycle:", centralizer(S3, S3.whole, [rot]).elements)
print("[S3, S3] =", relative_commutator(S3, S3.whole, S3.whole).elements)

# %% [markdown]
# The commutativity degree is the fraction of commuting pairs.

# %%
T = S3.table
commuting = (T == T.T).sum()
print("commuting pairs:", commuting, "of", T.size, "->", commuting / T.size)
print("classes / |G| :", parts.count / S3.order)
