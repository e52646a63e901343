"""
Column derivations and highest weight vectors
=============================================

The right superderivations (.)_klD replace column k by column l.  Products of
leading minors, twisted by determinant denominators, realize one-dimensional
weight spaces; the derivations move between them.
"""

from glmn.derivations import (
    derive_loc,
    derive_poly,
    det_minus,
    det_plus,
    highest_vector,
    row_derivation_chain,
    y_entry,
)
from glmn.superalg import RingContext
from glmn.weights import Weight, omega_row_product

##############################################################################
# On a generator the rule is simple replacement: deriving c[a,k] towards
# column l gives c[a,l], and any other column is killed.

ctx = RingContext(1, 1, 0)
print("(c[1,1])_12D =", derive_poly(ctx.gen(1, 1), 1, 2).render())
print("(c[1,2])_12D =", derive_poly(ctx.gen(1, 2), 1, 2).render())

##############################################################################
# On products the derivation acts from the right with a sign that tracks the
# parity it moved past, so powers pick up their exponent as a coefficient.

c11 = ctx.gen(1, 1)
print("(c[1,1]^3)_12D =", derive_poly(c11 * c11 * c11, 1, 2).render())

##############################################################################
# Two families of determinants anchor everything: D^+ over the first s rows
# of chosen even columns, and D^- built from the odd residue classes y_ij.

ctx = RingContext(2, 2, 0)
print("D^+(1,2) =", det_plus(ctx, (1, 2)).render())
print("y[2,3]   =", y_entry(ctx, 2, 3).render())
print("D^-(3)   =", det_minus(ctx, (3,)).render())

##############################################################################
# A dominant weight with nonnegative odd part selects exponents for these
# determinants; the product is the highest vector of the induced module.

lam = Weight((2, 1), (1, 0))
v = highest_vector(ctx, lam)
print("weight", lam.render(), "->", v.render())
print("weight recovered from the element:", v.weight())

##############################################################################
# Applying the whole bottom row of derivations to v multiplies it by the row
# product of atypicality numbers, times the lowering factor y_m.

lam = Weight((1,), (0,))
ctx = RingContext(1, 1, 0)
v = highest_vector(ctx, lam)
chained = row_derivation_chain(v, 1)
print("chain of", lam.render(), "->", chained.render())
print("omega row product:", omega_row_product(lam, 1))
