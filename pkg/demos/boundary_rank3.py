"""
Boundaries of a family of rank-3 quadrics degenerating to rank 2
=================================================================

"""

from quadinv import boundary_odd_to_even, make_ring

odd = make_ring("BGO_odd", 3)
wh2, wh3, c = odd["wh2"], odd["wh3"], odd["c"]

# invariants of the generic fibre live in F2[wh2, wh3]; c is not invariant
for h in (wh3, wh2 ** 3, wh2 * wh3, wh2 ** 2):
    print(f"d({h}) = {boundary_odd_to_even(h, 1)}")

# with even parity every boundary vanishes
print(boundary_odd_to_even(wh2 ** 3, 1, parity=0))

# squares always die
for k in range(1, 4):
    assert not boundary_odd_to_even(wh2 ** (2 * k), 1)
