# %% [markdown]
# # A degree-5 identity that does not follow from lower degrees
#
# Partition 41 carries one new identity, so look at the nonlinear pattern
# aaaab.  The search reduces an integer matrix to HNF, divides rows by their
# content, LLL-reduces the identity lattice and discards everything implied by
# symmetries and liftings.

# %%
from fractions import Fraction

from polyident import ops, pipeline, symrep, varieties

res = pipeline.special_identity_search("aaaab", delta=Fraction(3, 4))
print(res.counts)
print("matrix", res.matrix_shape, "lattice rank", res.lattice_rank)
for p in res.survivors:
    print("new:", ops.render_op_polynomial(p))

# %% [markdown]
# A direct certificate: the identity's expansion is a rational combination of
# substituted third- and fourth-power associativity.

# %%
v = pipeline.verify_identity(pipeline.special_identity(), "power-assoc", pipeline.special_certificate_family())
print(v.holds)
for c, label in v.certificate:
    print(f"  {str(c * 30):>4}/30  {label}")

# %% [markdown]
# With its linearization adjoined, every partition closes up.

# %%
lin = varieties.linearize(pipeline.special_identity())
print(symrep.render_table(symrep.partition_rank_analysis(5, extra=[lin])))
