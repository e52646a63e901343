"""
The coordinate superalgebra and its localization
================================================

A walk through the arithmetic layer: generators and their parities, signs in
products, the even-block determinant, and fractions with determinant
denominators.
"""

from glmn.superalg import LocalizedElement, RingContext, det_c11, loc_eq

##############################################################################
# A context fixes the block sizes (m, n) and the coefficient field: the
# rationals for characteristic 0, or a prime field F_p for odd p.  Generators
# c[i,j] live in an (m+n) x (m+n) matrix; an entry is even when i and j fall
# in the same block and odd otherwise.

ctx = RingContext(2, 1, 0)
for i in (1, 2, 3):
    for j in (1, 2, 3):
        g = ctx.gen(i, j)
        print(f"c[{i},{j}]  parity {g.parity()}")

##############################################################################
# Odd generators anticommute and square to zero; even generators commute with
# everything.  The multiplication keeps track of the signs.

a, b = ctx.gen(1, 3), ctx.gen(2, 3)
print("a*b =", (a * b).render())
print("b*a =", (b * a).render())
print("a*a =", (a * a).render())

##############################################################################
# The determinant of the even-even block C_11 is the element we localize at.
# Fractions are pairs (numerator, power of D); arithmetic cross-multiplies
# and equality compares after clearing denominators.

D = det_c11(ctx)
print("D =", D.render())

half = LocalizedElement(ctx.gen(1, 1), 1)       # c[1,1] / D
print("c[1,1]/D =", half.render())
print("(c[1,1]/D) * D =", (half * LocalizedElement(D, 0)).render())
print("equal to c[1,1]?",
      loc_eq(half * LocalizedElement(D, 0), LocalizedElement(ctx.gen(1, 1), 0)))

##############################################################################
# The same algebra over F_5: coefficients reduce on the way in and stay
# reduced through every operation.

ctx5 = RingContext(2, 1, 5)
c = ctx5.gen(1, 1)
print("7*c over F_5 =", (7 * c).render())
print("(-c) over F_5 =", (-c).render())
