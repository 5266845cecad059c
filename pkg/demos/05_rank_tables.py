# %% [markdown]
# # Ranks per irreducible representation
#
# Instead of the full multilinear space (1680 monomials in degree 5) we work
# one partition at a time with Young's natural representation.  For every
# partition we compare all identities with the ones implied by symmetries and
# liftings of lower-degree identities.

# %%
import sys

from polyident import pipeline, symrep

reports = symrep.partition_rank_analysis(5)
print(symrep.render_table(reports))

# %% [markdown]
# The degree-6 table takes about a minute here; pass `--degree6` to run it.

# %%
if "--degree6" in sys.argv:
    print(symrep.render_table(symrep.partition_rank_analysis(6, extra=pipeline.lower_degree_extras(6))))
