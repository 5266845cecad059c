# %% [markdown]
# # The second quaternator is redundant in third-power associative algebras
#
# Feed the degree-4 liftings of third-power associativity, the six Akivis
# elements and the two quaternators into one growing S4-module and watch the
# rank.  The last step adds nothing.

# %%
from polyident import ops, pipeline, varieties
from polyident.ops import OpPolynomial

t1, t2, t3 = varieties.T_liftings()
akivis = [OpPolynomial.term(ops.akivis_element(i)) for i in range(1, 7)]
q1, q2 = (OpPolynomial.term(ops.quaternator(i)) for i in (1, 2))

space = varieties.consequence_space([], 4)
ranks = []
for g in [t1, t2, t3, *akivis, q1, q2]:
    space.add([ops.expand(g) if isinstance(g, OpPolynomial) else g])
    ranks.append(space.rank)
print(ranks)

# %% [markdown]
# An explicit formula: solve for Q2 over a column-space basis of all
# permutations of the other generators.

# %%
gens = [q1, *akivis, t1, t2, t3]
names = ["Q1"] + [f"A{i}" for i in range(1, 7)] + ["T1", "T2", "T3"]
expr = pipeline.express_over_module(q2, gens, 4)
print(len(expr), "terms")
for c, g, w in expr.terms[:8]:
    print(f"  {str(c * 4):>3} {names[g]}({''.join('abcd'[i] for i in w)})")
print("expands to Q2:", pipeline.evaluate_expression(expr, gens) == ops.expand(q2))
