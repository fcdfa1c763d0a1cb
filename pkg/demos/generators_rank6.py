"""
Constructing the rank-6 invariants and their boundaries
=======================================================

"""

from quadinv import boundary_even_to_odd, construct_rank_4m2_generators, primitive_check

gens = construct_rank_4m2_generators(1)

for label, p in gens:
    print(f"{label:14s} deg {p.degree():2d}  {p}")

# every constructed element is an invariant
print(all(primitive_check(p) for p in gens.polys))

# degenerate to rank 5
for label, p in gens:
    print(f"d({label}) = {boundary_even_to_odd(p, 2)}")
