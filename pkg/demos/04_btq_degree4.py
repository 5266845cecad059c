# %% [markdown]
# # Degree-4 identities modulo power associativity
#
# Now the left block also contains the degree-4 consequences of power
# associativity.  HNF over the integers keeps the identity lattice integral.

# %%
from polyident import ops, pipeline, varieties

ib = pipeline.find_identities("btq", 4, "power-assoc", method="hnf")
print("shape", ib.shape, "split", ib.left_rank, len(ib))

# %% [markdown]
# The lifted degree-3 identities together with four degree-4 identities span
# the whole identity lattice.

# %%
closure = pipeline.btq_degree3_consequences(4)
closure.add(list(pipeline.btq_degree4_identities()))
print(closure.rank, all(closure.contains(p) for p in ib.polynomials()))

# %% [markdown]
# Which of the four expand to zero outright, and which need power
# associativity?

# %%
pa = varieties.variety_space("power-assoc", 4)
for i, f in enumerate(pipeline.btq_degree4_identities(), 1):
    e = ops.expand(f)
    print(i, "zero" if not e else f"{len(e)} terms", pa.contains(e))
