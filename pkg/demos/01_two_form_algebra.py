"""Tour of the 2-form algebra on oriented R^4.

Walks through the package conventions: the factor-2 inner product, the
Hodge star table, the self-dual/anti-self-dual split, the circ product
basis rotation, and the sharp 2/sqrt(6) bound for trace-free operators on
the self-dual space.
"""

import numpy as np

from ymgap import forms4

rng = np.random.default_rng(0)

dx12 = forms4.basis_form(0, 1)
dx34 = forms4.basis_form(2, 3)
print("|dx12|^2 =", forms4.inner_2form(dx12, dx12), "(the factor-2 convention)")
print("star(dx12) = dx34:", np.array_equal(forms4.hodge_star(dx12), dx34))

a = rng.standard_normal(6)
plus, minus = forms4.sd_project(a)
print("\nrandom 2-form split: |a|^2 = |a+|^2 + |a-|^2 ->",
      forms4.inner_2form(a, a), "=",
      forms4.inner_2form(plus, plus) + forms4.inner_2form(minus, minus))

e = forms4.sd_basis()
print("\ncirc products of the standard self-dual basis:")
print("  e1 o e2 = e3:", np.allclose(forms4.circ(e[0], e[1]), e[2]))
print("  e2 o e3 = e1:", np.allclose(forms4.circ(e[1], e[2]), e[0]))
print("  e1 o e3 = -e2:", np.allclose(forms4.circ(e[0], e[2]), -e[1]))

basis = forms4.random_sd_basis(rng)
prods = np.stack([forms4.circ(basis[0], basis[1]),
                  forms4.circ(basis[0], basis[2]),
                  forms4.circ(basis[1], basis[2])])
gram = 2.0 * prods @ prods.T
print("\nrandom orthonormal basis: circ products are again orthonormal,")
print("  max |Gram - I| =", np.max(np.abs(gram - np.eye(3))))

print("\nsharp bound |<w, W w>| <= (2/sqrt 6)|W||w|^2:")
sup = 0.0
for _ in range(20000):
    w = forms4.random_weyl(rng)
    v = rng.standard_normal(3)
    sup = max(sup, abs(forms4.weyl_quad(w, v)) / (forms4.weyl_norm(w) * float(v @ v)))
print("  sampled supremum of the ratio:", sup)
w, v = forms4.extremal_weyl()
print("  extremal pair attains:", abs(forms4.weyl_quad(w, v)) /
      (forms4.weyl_norm(w) * float(v @ v)), "= 2/sqrt(6) =", forms4.WEYL_BOUND)
