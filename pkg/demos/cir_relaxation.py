"""CIR marginals relaxing to the stationary gamma law.

The marginal of the CIR process at time t is a scaled noncentral
chi-squared law; as t grows its entropy approaches the closed-form
entropy of the Gamma(2a/sigma^2, sigma^2/(2b)) stationary law.  As the
mean reversion b drops to zero at fixed t, the marginal approaches the
squared Bessel marginal instead.
"""

from chientropy import (
    CIRParams,
    EntropySpec,
    TimeGrid,
    b_to_zero_study,
    cir_limit_entropy,
    cir_marginal,
    entropy_curve,
)

params = CIRParams(a=1.0, b=1.0, sigma=1.0, r0=1.0)
spec = EntropySpec.shannon()

law = cir_marginal(params, 1.0)
print(f"marginal at t=1: scale {law.factor:.6f}, "
      f"k={law.base.k}, lambda={law.base.lam:.6f}")
print()

limit = cir_limit_entropy(params, spec).value
print(f"stationary Shannon entropy: {limit:.12f}")
print("t        H_S(r_t)          gap to limit")
for row in entropy_curve(params, TimeGrid((1.0, 2.0, 5.0, 10.0, 30.0)), spec):
    h = row.result.value
    print(f"{row.t:<8g} {h:.12f}   {abs(h - limit):.3e}")

print()
print("b down to 0 at t=1: gap to the squared Bessel marginal entropy")
print("b        H_S               gap")
for row in b_to_zero_study(1.0, 1.0, 1.0, 1.0,
                           [10.0 ** -j for j in range(0, 5)], spec):
    print(f"{row.b:<8g} {row.result.value:.12f}   {row.gap_to_bessel:.3e}")
