"""Squared Bessel marginals: divergence with an affine Shannon law and
the Tsallis / Sharma-Mittal dichotomy.

The marginal at time t is sigma^2 t/4 times a noncentral chi-squared
law whose noncentrality decays like 1/t.  Additive entropies therefore
grow like log t without bound, while Tsallis and Sharma-Mittal
entropies with order above one approach finite constants.
"""

import math

from chientropy import (
    BesselParams,
    EntropySpec,
    bessel_limit_entropy,
    bessel_marginal,
    entropy,
)

params = BesselParams(a=1.0, sigma=1.0, y0=1.0)

print("Shannon entropy grows like log(sigma^2 t / 4) plus a constant:")
print("t        H_S(Y_t)          H_S - log(t/4)")
for t in (1e1, 1e2, 1e3, 1e4):
    h = entropy(bessel_marginal(params, t), EntropySpec.shannon()).value
    print(f"{t:<8g} {h:<17.12f} {h - math.log(t / 4.0):.12f}")

print()
print("Tsallis alpha=2 flattens out; alpha=0.5 keeps growing:")
print("t        alpha=2           alpha=0.5")
for t in (1e1, 1e2, 1e3, 1e4):
    law = bessel_marginal(params, t)
    h2 = entropy(law, EntropySpec.tsallis(2.0)).value
    h05 = entropy(law, EntropySpec.tsallis(0.5)).value
    print(f"{t:<8g} {h2:<17.12f} {h05:.6f}")

print()
print("long-time limits by functional:")
for spec, label in [
    (EntropySpec.shannon(), "Shannon"),
    (EntropySpec.renyi(2.0), "Renyi(2)"),
    (EntropySpec.tsallis(2.0), "Tsallis(2)"),
    (EntropySpec.tsallis(0.5), "Tsallis(0.5)"),
    (EntropySpec.sharma_mittal(2.0, 3.0), "SharmaMittal(2,3)"),
]:
    res = bessel_limit_entropy(spec)
    value = "+inf" if res.is_infinite else f"{res.value:g}"
    print(f"  {label:18s} -> {value}")
