# # Coset enumeration
#
# A finite presentation goes in; a Cayley table comes out.
# Letters are signed generator numbers, so (1, 2, -1) means a b a^-1.

# %%
from tensor_degree import CosetLimitExceeded, Presentation, catalog_group, todd_coxeter
from tensor_degree.fp_enum import evaluate_word

s3 = Presentation(2, ((1, 1), (2, 2, 2), (1, 2, 1, 2)))
print(s3.to_text())

eg = todd_coxeter(s3)
G = eg.group
print("order:", G.order)
print("images of a, b:", eg.genmap)
print("same order profile as the catalog S3:",
      sorted(G.order_profile()) == sorted(catalog_group("S3").order_profile()))

# %% [markdown]
# Words evaluate to elements of the enumerated group.

# %%
for word in [(1,), (2,), (1, 2), (2, 1), (1, 2, 1, 2)]:
    print(word, "->", evaluate_word(eg, word))

# %% [markdown]
# A few more, including the binary polyhedral relations for Q8.

# %%
examples = {
    "Q8": Presentation(2, ((1,) * 4, (1, 1, -2, -2), (-2, 1, 2, 1))),
    "A4": Presentation(2, ((1, 1), (2, 2, 2), (1, 2) * 3)),
    "S4": Presentation(2, ((1, 1), (2, 2, 2), (1, 2) * 4)),
}
for name, pres in examples.items():
    print(name, todd_coxeter(pres).group.order)

# %% [markdown]
# An infinite group never closes, so the cap stops it.

# %%
try:
    todd_coxeter(Presentation(1, ()), max_cosets=200)
except CosetLimitExceeded as exc:
    print("stopped:", exc)
