"""A walk through the canonical maps on small inputs.

Run with ``python3 demos/01_canonical_maps.py``.
"""
from framedlie import (
    K_inverse,
    K_map,
    e_map,
    format_element,
    make_lambda,
    pbw_normal_form,
    r_apply,
    read_element,
    rho_apply,
    t_map,
    theorem_check,
)
from framedlie.exprio import read_g
from framedlie.tensor import left_multiply

show = format_element

# K trades a tensor word for its symmetrized ordering; degree is kept,
# the lower-length terms carry diamonds
for src in ["x", "x*y", "x*y*z"]:
    u = read_element(src)
    print(f"K({src}) = {show(K_map(u))}")
print("K^-1(x*y) =", show(K_inverse(read_element("x*y"))))

# maps on J(g) take a prefix u and an antisymmetrized pair w = x*y - y*x
x, y = read_g("x"), read_g("y")
omega = make_lambda(x, y)
print()
print("t(w)      =", show(t_map(omega)))
print("t(z w)    =", show(t_map(left_multiply(read_element("z"), omega))))
print("r(w) z    =", show(r_apply(omega, read_element("z"))))
print("e(w)      =", show(e_map(omega)))

# e(Q) dies in U(g); a sorted word survives unchanged
print()
print("p(e(z w)) =", show(pbw_normal_form(e_map(left_multiply(read_element("z"), omega))).value))
print("p(y*x)    =", show(pbw_normal_form(read_element("y*x")).value))

# rho is the correction that makes u w v vanish after K and p
u, v = read_element("z"), read_element("w")
print()
print("rho(z w) w has", len(rho_apply(left_multiply(u, omega), v)), "terms")
res = theorem_check(u, omega, v)
print("K(z w w + rho(z w) w) has", len(res.lhs), "terms; its PBW form is zero:", res.is_zero)
