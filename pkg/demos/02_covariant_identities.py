"""Commutation relations for iterated covariant derivatives.

Prints the identity for every transposition up to four slots, then checks
that the opaque torsion/curvature symbols expand to exactly the free-algebra
remainder.
"""
from framedlie import commutation_identity, render, rho_apply
from framedlie.free_lie import gen
from framedlie.identities import expand_terms
from framedlie.tensor import t_word, triple

for n in (2, 3, 4):
    for i in range(1, n):
        print(f"n={n} i={i}")
        print(render(commutation_identity(n, i)))
        print()

print(render(commutation_identity(3, 1), "latex"))
print(render(commutation_identity(3, 1), "sexp"))
print()

# slot p is generator p-1; the remainder must agree term for term
for n in range(2, 6):
    for i in range(1, n):
        doc = commutation_identity(n, i)
        g = [gen(p) for p in range(n)]
        free = rho_apply(triple(tuple(g[:i - 1]), g[i - 1], g[i]), t_word(g[i + 1:]))
        opaque = expand_terms(doc.terms[2:])
        print(f"n={n} i={i}: {len(doc.terms) - 2:2d} symbolic terms -> {len(free):4d} free terms, "
              f"match={opaque == free}")
