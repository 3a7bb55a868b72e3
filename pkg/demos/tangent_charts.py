#!/usr/bin/env python3
"""Charts, pullbacks, differentials, and the tangent space of a variety."""

from fractions import Fraction

from supergeom import (
    Context,
    Morphism,
    PointedVariety,
    RationalPoint,
    tangent_space,
)

m = Context(even=["t"], odd=["theta1", "theta2"])
t, th1, th2 = m.var("t"), m.var("theta1"), m.var("theta2")

# the chart t |-> t + theta1*theta2 acts on functions as a first-order
# Taylor shift: f goes to f + theta1*theta2 * f'
chart = Morphism(m, m, [t + th1 * th2, th1, th2])
for f in (t, t**2, t**3):
    print(f"{f}  |->  {chart.pullback(f)}")
print()

point = RationalPoint(m, [Fraction(1)])
print("differential at t=1:")
print(chart.differential_at(point))
print("classification:", chart.classify_at(point))
print()

# the cone x*xi + y*eta = 0 loses one odd direction at (1,1)
p = Context(even=["x", "y"], odd=["xi", "eta"])
w = PointedVariety(
    p,
    [p.var("x") * p.var("xi") + p.var("y") * p.var("eta")],
    RationalPoint(p, [Fraction(1), Fraction(1)]),
)
res = tangent_space(w)
for rel in res.relations:
    print(f"relation: {rel} = 0")
print("tangent dim:", res.dimension)
