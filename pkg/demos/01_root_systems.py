"""Exact root-system arithmetic: Cartan data, pairings, dimensions.

Everything below is exact integer/rational arithmetic; run it and compare
with your favorite tables.
"""

from fractions import Fraction

from cominuscule import root_system

# Cartan matrices and positive roots for the two exceptional actors.
for name in ("E6", "E7"):
    rs = root_system(name)
    print(f"{name}: rank {rs.rank}, {len(rs.positive_roots)} positive roots")
    print("  Cartan matrix:")
    for row in rs.cartan:
        print("   ", row)

# The invariant pairing in the fundamental-weight basis.  With long roots
# normalized to squared length 2, the type-C values are half the classically
# tabulated ones (a global scale that cancels in every ratio), while the
# type-D values match on the nose.
C4 = root_system("C4")
print("\nC4 pairings <l_j, l_4>:",
      [C4.pairing(tuple(int(i == j) for i in range(4)), (0, 0, 0, 1))
       for j in range(4)])
D5 = root_system("D5")
print("D5 <l_4, l_5> =", D5.pairing((0, 0, 0, 1, 0), (0, 0, 0, 0, 1)),
      "(= (n-2)/4 at n=5)")
assert D5.pairing((0, 0, 0, 1, 0), (0, 0, 0, 0, 1)) == Fraction(3, 4)

# Weyl dimension formula: some familiar numbers.
E6 = root_system("E6")
print("\ndim V(l1) over E6 =", E6.weyl_dim((1, 0, 0, 0, 0, 0)))   # 27
print("dim V(l2) over E6 =", E6.weyl_dim((0, 1, 0, 0, 0, 0)))     # 78, adjoint
print("dim half-spin of D5 =", D5.weyl_dim((0, 0, 0, 0, 1)))      # 16

# Minuscule means one Weyl orbit: the 27 of E6 really is its own orbit.
orbit = E6.weyl_orbit((1, 0, 0, 0, 0, 0))
print("orbit size of l1 over E6 =", len(orbit))

# Freudenthal multiplicities: the A2 adjoint has the famous double zero.
A2 = root_system("A2")
print("\nA2 adjoint weight multiplicities:")
for w, m in sorted(A2.weight_system((1, 1)).items()):
    print(f"  {w}: {m}")
