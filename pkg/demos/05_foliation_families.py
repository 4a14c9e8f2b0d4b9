"""Numeric invariants of the minimal-degree foliation families.

Each family is reduced to integers: codimension, twist of the normal sheaf,
degree, tangent-sheaf rank and first Chern class, and the parameter space
that labels its members.
"""

from cominuscule import (
    cayley_family,
    foliation_atlas,
    orthogonal_family,
    rect_family,
    symplectic_family,
)


def show(r):
    print(f"  {r.space:7s} p={r.p:2d} twist={r.l:2d} degree={r.degree:3d} "
          f"{r.kind:22s} rk T={r.tf_rank:3d} c1 T={r.tf_c1:2d}  {r.parameter_space}")


# Rectangles on ordinary Grassmannians: a p = d*e rectangle in the box gives
# a flag-parametrized family of twist d + e, minimal exactly when d, e solve
# x^2 - l(p) x + p = 0.
print("rectangle families:")
for (k, n, p) in [(3, 6, 4), (2, 5, 3), (3, 10, 12), (3, 8, 6)]:
    for r in rect_family(k, n, p):
        show(r)

# Projection families in the symplectic and orthogonal flavors, at the
# triangular codimensions 2p = a(a+1).
print("\nsymplectic and orthogonal projection families:")
for a in range(1, 4):
    show(symplectic_family(5, a))
for a in range(1, 4):
    show(orthogonal_family(6, a))

# The codimension-8 family on the Cayley plane, cut out by octonionic lines.
print("\nthe Cayley plane family:")
fam = cayley_family()
show(fam)
print("  note:", fam.notes[0])

# The atlas: every minimal-degree family the catalog affords up to rank 6.
atlas = foliation_atlas(6)
print(f"\natlas at rank 6: {len(atlas)} families; degree-0 members:")
for r in atlas:
    if r.degree == 0:
        show(r)
