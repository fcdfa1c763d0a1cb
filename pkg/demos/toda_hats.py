"""
Toda's hat elements for N = 6
=============================

A = F2[x1..x6] with the coaction x_r -> sum C(6-i, r-i) t^(r-i) x_i.
"""

from quadinv import hat_elements, make_ring, toda_context, toda_generators

ctx = toda_context(6)
x = make_ring("TodaA", 6)

for k, h in enumerate(hat_elements(6), 1):
    comps = {i: str(p) for i, p in ctx.components(h).items() if i}
    print(f"x^_{k} = {h}")
    print(f"   nonzero d_i: {comps}")

# the s/t recursion reproduces the hats from index 3 on
print(ctx.recursion_discrepancies())

# primitive generators
for label, p in toda_generators(6):
    print(label, ctx.is_primitive(p), p)
