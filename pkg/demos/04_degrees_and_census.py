# # Degrees and the census
#
# All three degrees are exact fractions.  Each is computed by counting
# pairs and again as a sum over classes; the two must agree.

# %%
from tensor_degree import CensusConfig, build, catalog_group, degree_bundle
from tensor_degree.census import census_reports, render, summarize

for name in ["C2", "C2xC2", "S3", "Q8", "D4"]:
    G = catalog_group(name)
    b = degree_bundle(build(G, G.whole, G.whole))
    print(f"{name:6} d={str(b.d_comm):5} d_tensor={str(b.d_tensor):6} d_wedge={b.d_exterior}")

# %% [markdown]
# The census runs every check over each normal pair of each group.

# %%
reports = census_reports(CensusConfig(groups=("C2", "C4", "S3", "Q8"), pairs="hk"))
print(render(reports, "csv"))
print(summarize(reports))

# %% [markdown]
# Rows marked FAIL break the lower and upper bound built on the centralizer
# of H inside K.  The same bound with the centralizer taken inside H holds.

# %%
for r in reports:
    if r.failed:
        print(r.group, r.H_gens, r.K_gens)
        print("   as stated :", r.thm1a, "|", r.thm1b)
        print("   swapped   :", r.thm1a_swapped, "|", r.thm1b_swapped)
