# Walk through the symbolic layer: build a deformed oscillator algebra,
# normal-order a few products, apply the Hopf maps, and run the full axiom
# suite, including a deliberately broken counit as a negative control.

import math

from qhopf import HopfOscillator, build_params, g_function, proposition1_params
from qhopf.expalg import ExpPoly

# %% A Hermitian-family parameter point: xi = 0.6, gamma1 = 0.8, k = 0,
# so gamma = 0.8 + i pi/1.2 and G(N) = cosh(0.6 (N+0.8)) / cosh(0.48).
p = proposition1_params(0.6, 0.8, 0, 1.0)
print("branch:", p.branch)
print("gamma :", p.gamma)

G = g_function(p)
print("G(1)  :", G(1).real, "(= cosh(1.08)/cosh(0.48) =",
      math.cosh(1.08) / math.cosh(0.48), ")")

# %% Normal ordering in action.  Elements live in the basis adag^r f(N) a^s;
# products are rewritten with a adag = adag a + G(N) and the crossing rules.
alg = HopfOscillator(p)
a, adag, N = alg.lowering(), alg.raising(), alg.number_op()

print("\na * adag           =", a * adag)
print("N * adag           =", N * adag)
print("a * e^{0.6N}       =", a * alg.from_function(ExpPoly.exponential(0.6)))

# %% The Hopf maps on the generators.
print("\ncoproduct(N) =", dict(alg.coproduct(N).terms))
print("counit(N)    =", alg.counit(N), "  (equals -gamma)")
print("antipode(N)  =", alg.antipode(N), "  (equals -N - 2 gamma)")

# %% The Casimir C = F(N) - adag a commutes with everything.
C = alg.casimir()
print("\n[C, adag] is zero:", (C * adag - adag * C).is_zero())

# %% The full axiom suite: coassociativity, counit, antipode, compatibility
# with the defining commutators, the structure-function difference equation.
report = alg.check_axioms()
print("\naxiom suite:", report.overall,
      f"(max residual {report.max_residual():.2e}, {len(report.checks)} checks)")

# %% Negative control: nudge the counit evaluation point.  Only the counit
# and antipode identities break; coassociativity survives.
broken = HopfOscillator(p, counit_point=-p.gamma + 0.1)
report = broken.check_axioms()
print("\nwith a perturbed counit point:")
for c in report.failures()[:4]:
    print(f"  FAIL {c.name}  residual={c.residual:.3e}")
