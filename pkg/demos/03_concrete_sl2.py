"""The theorem inside a concrete framed Lie algebra.

sl2 keeps its bracket; the diamond product is replaced by random integer
structure constants, which is allowed since nothing ties the two together.
"""
from framedlie import make_lambda, theorem_check
from framedlie.free_lie import g, gen
from framedlie.oracle import (
    ConcreteAlgebra,
    Evaluator,
    check_jacobi,
    oracle_lhs,
    random_assignment,
    random_diamond,
    sl2,
    table_to_json,
)
from framedlie.tensor import t_word

tbl = random_diamond(sl2(), seed=42)
print("Jacobi holds:", check_jacobi(tbl))
print("diamond constants, e_0 <> e_j (rows j, columns k):")
print(tbl.diamond[0].astype(int))
print("\n".join(table_to_json(tbl).splitlines()[:7]), "\n  ...")

alg = ConcreteAlgebra(tbl)
asg = random_assignment(tbl, 3, seed=42)
print()
print("generators sent to", {i: [str(c) for c in v] for i, v in asg.items()})

# u = x, pair (y, z), v = x*y: concrete left-hand side before projection
u, pair, v = (0,), (1, 2), (0, 1)
lhs = oracle_lhs(alg, asg, u, pair, v)
print(f"concrete K(u w v + rho(u w) v): {len(lhs)} nonzero index words")
print("after straightening:", alg.pbw(lhs) or 0)

# the free computation, evaluated, lands on the same tensor
x, y, z = (g(gen(i)) for i in range(3))
free = theorem_check(t_word([gen(0)]), make_lambda(y, z), t_word([gen(0), gen(1)])).lhs
print("symbolic result has", len(free), "terms; evaluation matches:", Evaluator(alg, asg).tensor(free) == lhs)
