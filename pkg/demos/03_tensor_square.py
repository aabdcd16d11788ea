# # Tensor and exterior squares
#
# The tensor product of two normal subgroups is built from its symbol
# presentation and enumerated.  kappa sends h (x) k to the commutator.

# %%
from tensor_degree import build, catalog_group, tensor_presentation

S3 = catalog_group("S3")
pres, sym = tensor_presentation(S3, S3.whole, S3.whole)
print("generators:", pres.ngens, "relators:", len(pres.relators))

ed = build(S3, S3.whole, S3.whole)
print("|S3 (x) S3| =", ed.base.group.order)
print("|J|         =", ed.J.order)
print("|[S3,S3]|   =", ed.base.commutator_HK.order)
print("|S3 ^ S3|   =", ed.wedge_group.order, " |M| =", ed.M.order)

# %% [markdown]
# A small table of tensor squares and Schur multipliers.

# %%
print(f"{'G':9}{'|G|':>5}{'|GxG|':>8}{'|J|':>6}{'|G^G|':>7}{'|M|':>5}")
for name in ["C2", "C4", "C2xC2", "C3xC3", "C2xC2xC2", "S3", "D4", "Q8", "A4", "D6"]:
    G = catalog_group(name)
    ed = build(G, G.whole, G.whole)
    print(f"{name:9}{G.order:5}{ed.base.group.order:8}{ed.J.order:6}"
          f"{ed.wedge_group.order:7}{ed.M.order:5}")

# %% [markdown]
# Pairs of distinct normal subgroups work the same way.  Here H is the
# subgroup of index two in C4 and K is all of C4.

# %%
from tensor_degree import subgroup_closure

C4 = catalog_group("C4")
H = subgroup_closure(C4, [2])
ed = build(C4, H, C4.whole)
print("|H (x) K| =", ed.base.group.order)
