"""The modified conformal Laplacian L = -6 Lap + Phi on the round S^4.

Phi = R - 2 sqrt(6)|W+| - 3 gamma1 |F+| plays the role of a scalar
curvature; the sign of the first eigenvalue of L is a conformal
invariant. The instanton data on the round sphere gives |F+| = sqrt(6)
pointwise and hence Phi = 0: the borderline case lambda_1 = 0.
"""

import numpy as np

from ymgap import conformal, liealg

print("round S^4: R =", conformal.round_scalar_curvature(),
      " vol =", conformal.ROUND_VOLUME,
      " Yamabe invariant =", conformal.YAMABE_S4, "(= 8 sqrt(6) pi)")

lam, vec = conformal.lambda1(conformal.round_problem(12.0, n=2000))
print("\nPhi = 12 (pure scalar curvature): lambda1 =", lam,
      " eigenfunction constant:", np.max(np.abs(vec - vec[0])) < 1e-6)
prob = conformal.round_problem(12.0, n=16000)
print("Rayleigh quotient of cos(rho):", conformal.rayleigh(prob, np.cos),
      "(= 24 + 12 from the first harmonic)")

borderline = conformal.phi_of(12.0, 0.0, np.sqrt(6.0), liealg.GAMMA1_SU2, n=2000)
print("\ninstanton data: Phi = 12 - 3*(4/sqrt6)*sqrt6 -> max|Phi| =",
      np.max(np.abs(borderline.phi)))
lam0, _ = conformal.lambda1(conformal.round_problem(borderline.phi, n=2000))
print("borderline first eigenvalue:", lam0)

print("\nconformal covariance, two independent discretizations:")
field = conformal.phi_of(12.0, 0.0, 0.0, liealg.GAMMA1_SU2, n=65536)
u = 1.0 + 0.3 * np.cos(field.rho)
print("  u = 1 + 0.3 cos(rho): residual =", conformal.covariance_check(u, field))

print("\nsign invariance of lambda1 under conformal change:")
for phi_val in (12.0, -7.0):
    base = conformal.round_problem(phi_val, n=2000)
    lam_base, _ = conformal.lambda1(base)
    hat = conformal.transform_problem(base, lambda r: 1 + 0.4 * np.cos(r))
    lam_hat, _ = conformal.lambda1(hat)
    print(f"  Phi = {phi_val:5}: lambda1 = {lam_base:+.6f} -> transformed {lam_hat:+.6f}"
          f"  (same sign: {np.sign(lam_base) == np.sign(lam_hat)})")

print("\nYamabe quotient (minimized by the round metric and its conformal orbit):")
print("  u = 1:            ", conformal.yamabe_quotient(1.0))
print("  dilation factor:  ", conformal.yamabe_quotient(conformal.dilation_factor(1.5)))
print("  u = 1+0.5cos(rho):", conformal.yamabe_quotient(lambda r: 1 + 0.5 * np.cos(r)),
      " (strictly above)")
