# %% [markdown]
# # Degree-4 identities of commutator, associator and both quaternators
#
# The block matrix [X | I] pairs every canonical operation monomial with its
# expansion.  Rows of the reduced matrix that start in the right block are
# identities: combinations of operation monomials that expand to zero.

# %%
from polyident import ops, pipeline, varieties

ib = pipeline.find_identities("btqq", 4, "free")
print("operation monomials:", len(ib.basis), ops.type_counts("btqq", 4))
print("matrix:", ib.shape, "identities:", len(ib))

# %% [markdown]
# Lifting the Akivis identity to degree 4 accounts for a 10-dimensional part.
# What remains is generated by three new identities.

# %%
known = pipeline.akivis_consequences(4)
gs = pipeline.new_generators(ib.polynomials(), known)
print("known rank", known.rank, "quotient", gs.quotient_dimension)
for g in gs.generators:
    print("  ", ops.render_op_polynomial(pipeline.normalize(g)))

# %% [markdown]
# They generate the same module as the three hand-written degree-4 identities.

# %%
ob = ops.operation_basis("btqq", 4)
ours = varieties.consequence_space(gs.generators, 4, ob)
theirs = varieties.consequence_space(list(pipeline.btqq_identities()[2:]), 4, ob)
print(ours.rank, theirs.rank, all(theirs.contains_module(g) for g in gs.generators))
