#!/usr/bin/env python3
"""Tour of the supermatrix kernel: Berezinian, supertrace, inverse, rank.

Everything is exact rational arithmetic; no floats appear anywhere.
"""

from supergeom import Context, SuperDim, SuperMatrix

ctx = Context(even=["t"], odd=["theta1", "theta2"])
t = ctx.var("t")
th1 = ctx.var("theta1")
th2 = ctx.var("theta2")

d = SuperDim(1, 1)
s = SuperMatrix(ctx, d, d, [[1 + th1 * th2, th1], [th2, 2]])
u = SuperMatrix(ctx, d, d, [[3, 2 * th1], [th1 - th2, 1 + th1 * th2]])

print("S =")
print(s)
print("Ber(S)  =", s.berezinian())
print("str(S)  =", s.supertrace())
print("srank S =", s.srank())
print()
print("S^{-1} =")
print(s.invert())
print("S S^{-1} == I:", s @ s.invert() == SuperMatrix.identity(ctx, d))
print()

# multiplicativity, the property that makes Ber a determinant at all
print("Ber(SU) =", (s @ u).berezinian())
print("Ber(S) Ber(U) =", s.berezinian() * u.berezinian())
print("equal:", (s @ u).berezinian() == s.berezinian() * u.berezinian())
print()

# both block formulas agree when both diagonal blocks invert
print("primary  :", s.berezinian("primary"))
print("alternate:", s.berezinian("alternate"))
