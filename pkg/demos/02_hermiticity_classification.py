# Which parameter points give a *-algebra?  G(N) must be a real function
# of N.  The classifier expands the imaginary part of G over the
# exponentials exp((+-xi +- i eta) N) and tests it against zero; a pointwise
# scan of Im G(n) cross-validates every verdict.

import math

from qhopf import (HermiticityInput, classify_hermiticity, pointwise_reality,
                   classify_family, param_map_oh_singh, OhSinghParams)

# %% Sweep a few representative points.
points = [
    ("cosh family, k=0 ", HermiticityInput(0.6, 0.0, 0.8, math.pi / 1.2)),
    ("cosh family, k=2 ", HermiticityInput(0.6, 0.0, 0.8, 5 * math.pi / 1.2)),
    ("sin branch       ", HermiticityInput(0.6, 0.0, 0.8, math.pi / 0.6)),
    ("real gamma       ", HermiticityInput(0.6, 0.0, 0.8, 0.0)),
    ("oscillating kappa", HermiticityInput(0.0, 0.3, 0.5, 0.4)),
    ("mixed kappa      ", HermiticityInput(0.6, 0.3, 0.8, 0.7)),
    ("linear G, real g ", HermiticityInput(0.0, 0.0, 0.9, 0.0)),
]

print(f"{'point':18s}  {'hermitian':9s}  {'family':28s}  max |Im G|/|G|")
for label, h in points:
    verdict = classify_hermiticity(h)
    worst, _ = pointwise_reality(h)
    print(f"{label}  {str(verdict.hermitian):9s}  {verdict.family:28s}  {worst:.2e}")

# %% The Hermitian cosh family carries a label k: gamma2 = (2k+1) pi/(2 xi).
for k in (-2, 0, 3):
    h = HermiticityInput(0.45, 0.0, 1.1, (2 * k + 1) * math.pi / 0.9)
    print(f"k = {k:+d} recovered as", classify_hermiticity(h).k)

# %% Full parameter packs dispatch on their branch; the note records whether
# the coproduct carries the extra kappa1 + kappa2 parameter.
v = classify_family(param_map_oh_singh(OhSinghParams(0.5, 1.2, 0.3, 0)))
print("\nq-oscillator point:", v.family, "--", v.notes)

from qhopf import proposition1_params
v = classify_family(proposition1_params(0.6, 0.8, 0, 1.0, kappa_sum=0.4))
print("with kappa_sum !=0:", v.family, "--", v.notes)
