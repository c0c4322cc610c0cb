"""The sharp bracket constants gamma0 and gamma1, found by optimization.

gamma0 bounds |[A,B]|/(|A||B|); it is sqrt(2) on su(2) (attained by Pauli
pairs) and 1 on so(3). gamma1 bounds the cubic form <w,[w,w]>/|w|^3 over
self-dual algebra-valued 2-forms: 4/sqrt(6) for su(2), 2/sqrt(3) for
so(3), and never more than 4/sqrt(6) for any skew algebra.
"""

import numpy as np

from ymgap import liealg

print("quaternion generators: |i|^2 =", liealg.ip_endo(liealg.SU2_I, liealg.SU2_I),
      " [i,j] = 2k:", np.array_equal(liealg.bracket(liealg.SU2_I, liealg.SU2_J),
                                     2 * liealg.SU2_K))

a, b = liealg.pauli_pair(1.0, 1.0)
ratio = liealg.norm_endo(liealg.bracket(a, b)) / (liealg.norm_endo(a) * liealg.norm_endo(b))
print("Pauli pair ratio |[A,B]|/(|A||B|) =", ratio, "= sqrt(2)")

for name, alg, expected in [
        ("su(2)", liealg.AlgebraSpec.su2_real(), np.sqrt(2.0)),
        ("so(3)", liealg.AlgebraSpec.so3_block(), 1.0),
        ("so(4)", liealg.AlgebraSpec.so_n(4), np.sqrt(2.0))]:
    est = liealg.gamma0_estimate(alg, restarts=32, seed=0)
    print(f"gamma0[{name}] = {est.value:.12f}  (expected {expected:.12f}, "
          f"grad norm {est.grad_norm:.1e}, converged={est.converged})")

print()
for name, alg, expected in [
        ("su(2)", liealg.AlgebraSpec.su2_real(), 4 / np.sqrt(6.0)),
        ("so(3)", liealg.AlgebraSpec.so3_block(), 2 / np.sqrt(3.0)),
        ("so(4)", liealg.AlgebraSpec.so_n(4), 4 / np.sqrt(6.0))]:
    est = liealg.gamma1_estimate(alg, restarts=16, seed=0)
    print(f"gamma1[{name}] = {est.value:.12f}  (expected {expected:.12f})")

print("\nthe maximizing configuration is the quaternionic one:")
p = liealg.lv_from_sd_coeffs(np.stack([liealg.SU2_I, liealg.SU2_J, liealg.SU2_K]))
print("  P = e1(x)i + e2(x)j + e3(x)k,  |P|^2 =", liealg.lv_norm_sq(p))
print("  [P,P] = 4P:", np.allclose(liealg.comm2form(p, p), 4 * p))
print("  <P,[P,P]> =", liealg.cubic_form(p), " = (4/sqrt 6)|P|^3 =",
      4 / np.sqrt(6) * liealg.lv_norm(p) ** 3)
print("  |[P,P]| =", liealg.lv_norm(liealg.comm2form(p, p)), " = 4 sqrt(6) =", 4 * np.sqrt(6.0))
print("  bound residual (2/sqrt3) gamma0 |P|^2 - |[P,P]| =",
      liealg.bracket_bound_check(p, liealg.GAMMA0_SU2))
