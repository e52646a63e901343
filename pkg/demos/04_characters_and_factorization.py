"""
Characters, hook Schur functions, and the factorization theorem
===============================================================

The character of an induced module is a closed product over the odd pairs
times two ordinary Schur polynomials.  For partitions deep enough in the
hook, it coincides with the tableau-defined hook Schur function and factors
accordingly.
"""

from glmn.characters import (
    char_induced,
    dim_even,
    dim_induced,
    factorization_check,
    hook_schur,
    schur,
)
from glmn.weights import HookPartition, Weight, hook_to_weight, weight_to_hook

##############################################################################
# Ordinary Schur polynomials come from semistandard tableaux.

print("s_(1)(x1,x2)   =", schur((1,), 2).render())
print("s_(2,1)(x1,x2) =", schur((2, 1), 2).render())

##############################################################################
# Hook Schur functions enumerate (m|n)-supertableaux: even letters fill
# weakly along rows, odd letters strictly, transposed rules downward.  The
# function vanishes exactly when the shape leaves the (m|n) hook.

print("HS_(2,1)(x1|y1) =", hook_schur((2, 1), 1, 1).render())
print("HS_(2,2)(x1|y1) =", hook_schur((2, 2), 1, 1).render())

##############################################################################
# The induced character is the product over pairs (i,j) of (1 + y_j/x_i)
# times Schur polynomials in each block.  At all-ones it counts dimensions.

lam = Weight((1,), (1,))
ch = char_induced(lam)
print("char of", lam.render(), "=", ch.render())
print("dimension:", ch.eval_ones(), "=", dim_induced(lam),
      "= 2^(mn) *", dim_even(lam))

##############################################################################
# Hook partitions translate to weights by cutting at row m: the arm gives
# lambda^+, the conjugated leg gives lambda^-.

hp = HookPartition((3, 2, 1))
lam = hook_to_weight((3, 2, 1), 2, 2)
print(hp.render(), "at (2|2) ->", lam.render(),
      "and back ->", weight_to_hook(lam).render())

##############################################################################
# When the partition reaches the corner (lambda_m >= n) the hook Schur
# function factors through the pair product, and the induced character
# equals it on the nose.  Below the corner the two characters differ.

print("factorization for (2,1) at (1|1):", factorization_check((2, 1), 1, 1))
deep = hook_to_weight((2, 1), 1, 1)
print("char == HS:", char_induced(deep) == hook_schur((2, 1), 1, 1))
shallow = hook_to_weight((1, 1), 1, 2)
print("char == HS below the corner:",
      char_induced(shallow) == hook_schur((1, 1), 1, 2))
