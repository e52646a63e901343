"""
Typicality and the irreducibility decision
==========================================

The atypicality matrix omega decides irreducibility of the induced module:
typical weights give irreducible modules, and in odd characteristic the
typical case defers to the even-part module.  A brute-force closure oracle
cross-checks the verdicts at characteristic 0.
"""

import json

from glmn.theorems import closure_oracle, decide_irreducible
from glmn.weights import Weight, is_typical, omega_matrix

##############################################################################
# omega_ij = lambda^+_i + lambda^-_j + m + 1 - i - j.  A weight is atypical
# when some entry vanishes (or is divisible by the characteristic).

lam = Weight((1, 0), (2, 1))
print("omega of", lam.render(), "=", omega_matrix(lam))
report = is_typical(lam)
print("typical?", report.typical, " atypical at", report.atypical_positions)

##############################################################################
# The same weight can flip between typical and atypical as the characteristic
# changes: divisibility replaces vanishing.

lam = Weight((2,), (1,))
for p in (0, 3, 5):
    print(f"char {p}:", "typical" if is_typical(lam, p).typical else "atypical")

##############################################################################
# decide_irreducible wraps the verdict with its rationale.  Over the
# rationals typicality settles it outright.

for lam in (Weight((1,), (0,)), Weight((0,), (0,))):
    verdict = decide_irreducible(lam)
    print(lam.render(), "->", json.dumps(verdict.to_json()["induced_irreducible"]))

##############################################################################
# In odd characteristic a typical weight only reduces the question to the
# even-part module; without that verdict the answer is indeterminate.

print(decide_irreducible(Weight((1,), (0,)), 5).to_json()["induced_irreducible"])
print(decide_irreducible(Weight((1,), (0,)), 5,
                         even_verdict=True).to_json()["induced_irreducible"])

##############################################################################
# The closure oracle ignores the theory: it spans the orbit of the highest
# vector under all first-order derivations and compares dimensions.

for lam in (Weight((0,), (0,)), Weight((1,), (0,)), Weight((1, 0), (1,))):
    res = closure_oracle(lam)
    print(lam.render(), "-> closure", res.dim_closure, "of", res.dim_induced,
          "irreducible:", res.irreducible)
