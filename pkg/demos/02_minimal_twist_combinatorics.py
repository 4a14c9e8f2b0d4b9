"""Young-diagram combinatorics of minimal twists.

For p-forms on a Grassmannian of k-planes the first twist with sections is
governed by partitions of p: minimize (first row) + (first column) over the
k x (n-k) box.  The symplectic and orthogonal flavors replace the box by the
hook classes with arm = leg + 1 and arm = leg - 1.
"""

from cominuscule import (
    dual,
    hooks_q1,
    hooks_qm1,
    min_twist_grass,
    min_twist_grass_oracle,
    min_twist_lagr,
    min_twist_lagr_oracle,
    min_twist_spinor,
    min_twist_spinor_oracle,
)

# The two classic examples for k = 3.
for n, p in [(9, 7), (12, 10)]:
    w = min_twist_grass_oracle(3, n, p)
    print(f"k=3, p={p}: l(p) = {w.l}, minimizers {list(w.partitions)}")
    assert w.l == min_twist_grass(3, n, p)

# Hook classes: the members of each class biject with partitions of p into
# distinct parts, and the two classes are exchanged by conjugation.
print("\narm = leg + 1 class of 2p = 6:", hooks_q1(3, 6))
print("arm = leg - 1 class of 2p = 6:", hooks_qm1(3, 6))
assert {dual(mu) for mu in hooks_q1(3, 6)} == set(hooks_qm1(3, 6))

# Symplectic: l(p) = ceil(sqrt(2p) + 1/2).  At triangular 2p = a(a+1) the
# minimizer is the unique (a+1) x a rectangle.
print("\nsymplectic minimal twists:")
for p in (1, 2, 3, 6, 10):
    w = min_twist_lagr_oracle(10, p)
    print(f"  p={p}: l = {min_twist_lagr(p)}, minimizers {list(w.partitions)}")

# Orthogonal: l(p) = 2a except the hook-removal corner b = a - 1 > 0.
print("\northogonal minimal twists:")
for p in (1, 2, 3, 5, 6):
    w = min_twist_spinor_oracle(10, p)
    print(f"  p={p}: l = {min_twist_spinor(p)}, minimizers {list(w.partitions)}")
