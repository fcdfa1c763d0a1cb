"""
Quadric invariants in rank 4
============================

The coaction B(mu)^* adds a variable t of degree 2; an element is an
invariant exactly when its image has no t.
"""

from quadinv import action_even, make_ring, normal_form, ph_generators, primitive_witness

r = make_ring("BGO_even", 4)
act = action_even(2)

# the coaction on every generator
for name in r.names:
    print(f"{name:8s} -> {act(r[name])}")

# b4 alone is not invariant, the defect is a1^2 t
print(primitive_witness(r["b4"]))

# but a1 a3 + b4 is
for label, p in ph_generators(r):
    print(label, "->", primitive_witness(p) or "invariant")

# relations are handled by the faithful embedding, not rewriting
print(normal_form(r["d{1,2}"] ** 2))
