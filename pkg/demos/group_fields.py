#!/usr/bin/env python3
"""The group structure on the 1|1 line and its left-invariant fields.

mu((t, theta), (t', theta')) = (t + t' + theta theta', theta + theta')
is associative only because theta theta' picks up the right sign; the
script verifies the axioms, builds the invariant frame, and reads off
the structure constants of the resulting 1|1-dimensional Lie algebra.
"""

from fractions import Fraction

from supergeom import (
    Context,
    GroupLaw,
    Morphism,
    RationalPoint,
    SuperDerivation,
    TangentVector,
    bracket,
    check_group_axioms,
    is_left_invariant,
    left_invariant_field,
    product_context,
)

g = Context(even=["t"], odd=["theta"])
d = product_context(g)

mu = Morphism(
    d, g,
    [d.var("t") + d.var("tp") + d.var("theta") * d.var("thetap"),
     d.var("theta") + d.var("thetap")],
)
inv = Morphism(g, g, [-g.var("t"), -g.var("theta")])
law = GroupLaw(g, mu, RationalPoint(g, [Fraction(0)]), inverse=inv)

for result in check_group_axioms(law):
    print(result)
print()

fields = {}
for name in ("t", "theta"):
    v = TangentVector.coordinate(g, name)
    fields[name] = left_invariant_field(law, v)
    print(f"LIVF from d/d{name} at e:  {fields[name]}")
    print("  left invariant:", is_left_invariant(fields[name], law))

# the naive coordinate field d/dtheta is NOT invariant
naive = SuperDerivation.coordinate(g, "theta")
print(f"coordinate field {naive}:")
print("  left invariant:", is_left_invariant(naive, law))
print()

# [D_theta, D_theta] = -2 d/dt: one odd generator squaring to the even one
dth = fields["theta"]
print("[D_theta, D_theta] =", bracket(dth, dth))
print("[D_t, D_theta]     =", bracket(fields["t"], dth))
