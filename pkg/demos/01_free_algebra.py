# %% [markdown]
# # Monomials, operations and primitivity
#
# Monomials of the free nonassociative algebra are binary trees.  A
# multilinear monomial of degree n is an association type (a Catalan object)
# filled with a permutation of n letters.

# %%
import math

from polyident import freealg, ops

for n in range(1, 7):
    basis = freealg.multilinear_basis(n)
    print(n, len(basis), math.factorial(n) * freealg.catalan(n))

# %% [markdown]
# Operation terms use brackets for the commutator, parentheses with three
# slots for the associator, and named calls for everything else.  `expand`
# substitutes the defining polynomial of each operation.

# %%
q1 = ops.parse_op_polynomial("Q1(a,b,c,d)")
print(freealg.render_polynomial(ops.expand(q1)))

# %% [markdown]
# An element is primitive when its coproduct has no mixed terms.  The
# commutator, associator, quaternators and the Sabinin operations pass; plain
# products do not.

# %%
for name in ("comm", "assoc", "Q1", "Q2", "S3", "Phi22", "V1"):
    n = ops.REGISTRY[name].arity
    print(name, freealg.is_primitive(ops.expand((name,) + tuple(range(n)))))
print("(ab)c", freealg.is_primitive(freealg.parse_polynomial("((a b) c)")))
