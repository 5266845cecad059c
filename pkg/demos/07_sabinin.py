# %% [markdown]
# # Degree-4 Sabinin operations versus commutator, associator, quaternators
#
# Each side can be written in terms of the other.  The checks expand both
# sides in the free algebra and compare module membership.

# %%
from polyident import ops, pipeline

for name, d in pipeline.sabinin_from_btqq().items():
    print(f"{name:6} = {ops.render_op_polynomial(d)}")

# %%
checks = pipeline.sabinin_btqq_checks()
print(sum(checks.values()), "of", len(checks), "checks pass")
