"""Exact root-system arithmetic for the simple types A-D, E6, E7.

Weights are integer tuples in the fundamental-weight basis, with Bourbaki
node numbering throughout (E6 and E7 are numbered so that the branch node
attaches at node 4).  All arithmetic is exact: rationals for the invariant
pairing, arbitrary-precision integers everywhere else; no floating point.

The invariant form is normalized so that long roots have squared length 2.
Published tables sometimes use a different global scale (e.g. the type-C
pairing values ``<l_j, l_n> = j`` correspond to twice our values); every
quantity consumed downstream (Weyl dimensions, twist coefficients, string
lengths) is a ratio of pairings, so the scale is immaterial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

Weight = tuple[int, ...]

# Closed-form positive-root counts, used as a self-test of the closure
# construction (one generation code path for all seven types).
_POSITIVE_COUNTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63}[r],
}

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6}


@dataclass(frozen=True)
class LieType:
    """A simple Lie type: family letter plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B", "C", "D", "E"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "E" and self.rank not in (6, 7):
            raise ValueError("only E6 and E7 are supported")
        if self.rank < _MIN_RANK[self.family]:
            raise ValueError(f"{self.family}_{self.rank}: rank too small")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(lie_type: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix C with C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki order."""
    r = lie_type.rank
    fam = lie_type.family
    mat = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def bond(i, j, cij=-1, cji=-1):
        mat[i][j] = cij
        mat[j][i] = cji

    if fam in ("A", "B", "C"):
        for i in range(r - 1):
            bond(i, i + 1)
        if fam == "B" and r >= 2:
            mat[r - 1][r - 2] = -2  # alpha_r short
        if fam == "C" and r >= 2:
            mat[r - 2][r - 1] = -2  # alpha_r long
    elif fam == "D":
        for i in range(r - 2):
            bond(i, i + 1)
        bond(r - 3, r - 1)
    else:  # E6 / E7: chain 1-3-4-5-...-r with node 2 hanging off node 4
        chain = [0] + list(range(2, r))
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    return tuple(tuple(row) for row in mat)


def _half_norms(lie_type: LieType) -> tuple[Fraction, ...]:
    """(alpha_i, alpha_i)/2 with long roots normalized to squared length 2."""
    r = lie_type.rank
    if lie_type.family == "B":
        return tuple([Fraction(1)] * (r - 1) + [Fraction(1, 2)])
    if lie_type.family == "C":
        return tuple([Fraction(1, 2)] * (r - 1) + [Fraction(1)])
    return tuple([Fraction(1)] * r)


def _invert_exact(mat) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(row for row in range(col, n) if aug[row][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for row in range(n):
            if row != col and aug[row][col] != 0:
                f = aug[row][col]
                aug[row] = [x - f * y for x, y in zip(aug[row], aug[col])]
    return [row[n:] for row in aug]


def is_dominant(w: Weight) -> bool:
    """Dominance in the fundamental-weight basis: all coordinates >= 0."""
    return all(x >= 0 for x in w)


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def negate(w: Weight) -> Weight:
    return tuple(-x for x in w)


class RootSystem:
    """Cartan data and exact weight arithmetic for one simple type.

    Instances are immutable after construction and safe to share across
    threads; all operations are pure.  Use the cached :func:`root_system`
    factory rather than constructing directly.
    """

    def __init__(self, lie_type: LieType):
        self.lie_type = lie_type
        self.rank = lie_type.rank
        self.cartan = cartan_matrix(lie_type)
        inv = _invert_exact(self.cartan)
        self.inverse_cartan = tuple(tuple(row) for row in inv)
        self.simple_root_norms = tuple(2 * d for d in _half_norms(lie_type))
        self._half_norms = _half_norms(lie_type)

        # Integerized data.  inverse_cartan = _inv_num / _inv_den;
        # the Gram matrix of fundamental weights is D @ C^{-1} = _gram_num / _gram_den.
        self._inv_den = lcm(*[f.denominator for row in inv for f in row])
        self._inv_num = tuple(
            tuple(int(f * self._inv_den) for f in row) for row in inv
        )
        gram = [[self._half_norms[i] * inv[i][j] for j in range(self.rank)]
                for i in range(self.rank)]
        self._gram_den = lcm(*[f.denominator for row in gram for f in row])
        self._gram_num = tuple(
            tuple(int(f * self._gram_den) for f in row) for row in gram
        )
        for i in range(self.rank):
            for j in range(self.rank):
                if self._gram_num[i][j] != self._gram_num[j][i]:
                    raise AssertionError("pairing matrix must be symmetric")

        # Fundamental coordinates of alpha_i = i-th column of the Cartan matrix.
        self.simple_roots = tuple(
            tuple(self.cartan[i][j] for i in range(self.rank))
            for j in range(self.rank)
        )
        self.weyl_vector: Weight = (1,) * self.rank
        # Scaled height functional: height_key(w) is a positive multiple of
        # the sum of w's simple-root coordinates, so w < v in dominance order
        # implies height_key(w) < height_key(v).
        self._height_vec = tuple(
            sum(self._inv_num[j][i] for j in range(self.rank))
            for i in range(self.rank)
        )
        self.positive_roots, self.positive_root_coords = self._generate_positive_roots()
        expected = _POSITIVE_COUNTS[lie_type.family](self.rank)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"{lie_type}: got {len(self.positive_roots)} positive roots, "
                f"expected {expected}"
            )
        self._all_nodes = tuple(range(self.rank))
        # per-chamber (full system or one Levi) precomputed pairing rows,
        # shared across spec instances since root systems are cached
        self._chamber_cache: dict = {}

    # -- construction helpers -------------------------------------------------

    def _generate_positive_roots(self):
        """All positive roots by string closure from the simple roots.

        Roots are produced by height; alpha + alpha_i is a root iff the
        i-string through alpha descends further than <alpha, alpha_i^vee>.
        """
        coords = {}  # simple-root coordinates -> fundamental coordinates
        level = []
        for i in range(self.rank):
            c = tuple(1 if j == i else 0 for j in range(self.rank))
            coords[c] = self.simple_roots[i]
            level.append(c)
        while level:
            nxt = []
            for c in level:
                w = coords[c]
                for i in range(self.rank):
                    # length of the descending i-string from this root
                    down = 0
                    probe = list(c)
                    while True:
                        probe[i] -= 1
                        t = tuple(probe)
                        if any(x < 0 for x in t) or (t not in coords and any(t)):
                            break
                        down += 1
                        if not any(t):
                            break
                    if down - w[i] > 0:
                        c2 = tuple(x + (1 if j == i else 0) for j, x in enumerate(c))
                        if c2 not in coords:
                            coords[c2] = _add(w, self.simple_roots[i])
                            nxt.append(c2)
            level = nxt
        ordered = sorted(coords, key=lambda c: (sum(c), c))
        return (
            tuple(coords[c] for c in ordered),
            tuple(ordered),
        )

    # -- exact pairing ---------------------------------------------------------

    def pairing(self, a: Weight, b: Weight) -> Fraction:
        """Invariant pairing <a, b> induced by the Killing form.

        Computed as a^T (D C^{-1}) b where C is the Cartan matrix and D the
        diagonal of simple-root half-norms; symmetric and bilinear.
        """
        if len(a) != self.rank or len(b) != self.rank:
            raise ValueError(f"weights must have length {self.rank}")
        return Fraction(self._pair_scaled(a, b), self._gram_den)

    def _pair_scaled(self, a: Weight, b: Weight) -> int:
        g = self._gram_num
        return sum(a[i] * sum(g[i][j] * b[j] for j in range(self.rank))
                   for i in range(self.rank))

    def _gram_apply(self, w: Weight) -> Weight:
        g = self._gram_num
        return tuple(sum(g[i][j] * w[j] for j in range(self.rank))
                     for i in range(self.rank))

    # -- Weyl group actions ----------------------------------------------------

    def reflect(self, w: Weight, i: int) -> Weight:
        """Simple reflection s_i(w) = w - w_i alpha_i (i is 0-based)."""
        if not w[i]:
            return w
        ai = self.simple_roots[i]
        c = w[i]
        return tuple(x - c * y for x, y in zip(w, ai))

    def dominant_representative(self, w: Weight, nodes=None) -> Weight:
        """The unique dominant element of the Weyl orbit of w.

        With ``nodes`` restricted to a subset of simple reflections, the
        unique element of the parabolic orbit that is nonnegative on those
        nodes.
        """
        nodes = self._all_nodes if nodes is None else nodes
        w = tuple(w)
        while True:
            for i in nodes:
                if w[i] < 0:
                    w = self.reflect(w, i)
                    break
            else:
                return w

    def weyl_orbit(self, w: Weight, nodes=None) -> set[Weight]:
        """Closure of {w} under the (possibly parabolic) simple reflections."""
        nodes = self._all_nodes if nodes is None else nodes
        seen = {tuple(w)}
        frontier = [tuple(w)]
        while frontier:
            nxt = []
            for v in frontier:
                for i in nodes:
                    u = self.reflect(v, i)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return seen

    def height_key(self, w: Weight) -> int:
        """Monotone-under-dominance integer key (scaled root-lattice height)."""
        return sum(h * x for h, x in zip(self._height_vec, w))

    # -- cone membership ---------------------------------------------------------

    def root_cone_level(self, diff: Weight, nodes=None) -> int | None:
        """Total height of diff as a nonnegative integer combination of the
        simple roots indexed by ``nodes``; None if diff is not in that cone."""
        nodes = self._all_nodes if nodes is None else nodes
        allowed = set(nodes)
        den = self._inv_den
        level = 0
        for i in range(self.rank):
            num = sum(self._inv_num[i][j] * diff[j] for j in range(self.rank))
            if i not in allowed:
                if num != 0:
                    return None
                continue
            if num < 0 or num % den:
                return None
            level += num // den
        return level

    # -- dimensions and characters ----------------------------------------------

    def weyl_dim(self, w: Weight) -> int:
        """Dimension of the irreducible module with highest weight w.

        Weyl dimension formula: prod over positive roots of
        <w + rho, alpha> / <rho, alpha>, an exact integer.
        """
        if not is_dominant(w):
            raise ValueError(f"weight {w} is not dominant")
        two_rho = tuple(2 * x for x in self.weyl_vector)
        return self._chamber_dim(w, self.positive_roots, two_rho, key=None)

    def _chamber_rows(self, key, pos_roots, two_rho):
        """Cached (gram @ alpha, <2 rho, alpha>) per positive root."""
        data = self._chamber_cache.get(key)
        if data is None:
            galphas = [self._gram_apply(alpha) for alpha in pos_roots]
            dens = [sum(x * y for x, y in zip(two_rho, ga)) for ga in galphas]
            data = (galphas, dens)
            self._chamber_cache[key] = data
        return data

    def _chamber_dim(self, w: Weight, pos_roots, two_rho, key) -> int:
        galphas, dens = self._chamber_rows(key, pos_roots, two_rho)
        num = 1
        den = 1
        doubled = tuple(2 * x + r for x, r in zip(w, two_rho))
        for ga, d in zip(galphas, dens):
            num *= sum(x * y for x, y in zip(doubled, ga))
            den *= d
        q, r = divmod(num, den)
        if r:
            raise AssertionError("Weyl dimension did not come out integral")
        return q

    def dominant_weight_multiplicities(self, w: Weight) -> dict[Weight, int]:
        """Freudenthal multiplicities at the dominant weights of V_w."""
        if not is_dominant(w):
            raise ValueError(f"weight {w} is not dominant")
        two_rho = tuple(2 * x for x in self.weyl_vector)
        return self._freudenthal(w, self._all_nodes, self.positive_roots,
                                 two_rho, key=None)

    def weight_system(self, w: Weight) -> dict[Weight, int]:
        """Full weight multiset of V_w, extended from the dominant chamber by
        Weyl symmetry.  Total multiplicity equals weyl_dim(w)."""
        out: dict[Weight, int] = {}
        for dom, mult in self.dominant_weight_multiplicities(w).items():
            for v in self.weyl_orbit(dom):
                out[v] = mult
        return out

    def _freudenthal(self, highest, nodes, pos_roots, two_rho, key) -> dict[Weight, int]:
        """Freudenthal recursion restricted to the (parabolic) dominant chamber.

        Works in full fundamental coordinates with the ambient pairing; for a
        Levi subsystem this is legitimate because the orthogonal complement of
        the subsystem's root span pairs to zero with its roots, so every
        pairing in the recursion only sees the subsystem component.
        """
        highest = tuple(highest)
        # Candidate set: all chamber-dominant weights below the highest weight
        # in the subsystem root cone.  Closure under "step by one positive
        # root, then dominantize" in both directions is exhaustive.
        cands = {highest: 0}
        frontier = [highest]
        while frontier:
            nxt = []
            for mu in frontier:
                for alpha in pos_roots:
                    for nu0 in (_sub(mu, alpha), _add(mu, alpha)):
                        nu = self.dominant_representative(nu0, nodes)
                        if nu in cands:
                            continue
                        lev = self.root_cone_level(_sub(highest, nu), nodes)
                        if lev is None:
                            continue
                        cands[nu] = lev
                        nxt.append(nu)
            frontier = nxt

        galphas, _ = self._chamber_rows(key, pos_roots, two_rho)
        alpha_sq = [sum(x * y for x, y in zip(a, ga))
                    for a, ga in zip(pos_roots, galphas)]
        top_shift = _add(_add(highest, highest), two_rho)  # 2(highest + rho)

        mults: dict[Weight, int] = {highest: 1}
        dom_cache: dict[Weight, Weight] = {}
        for mu in sorted(cands, key=cands.get)[1:]:
            rhs = 0
            for alpha, ga, a2 in zip(pos_roots, galphas, alpha_sq):
                base = sum(x * y for x, y in zip(mu, ga))
                j = 1
                nu = _add(mu, alpha)
                while True:
                    rep = dom_cache.get(nu)
                    if rep is None:
                        rep = self.dominant_representative(nu, nodes)
                        dom_cache[nu] = rep
                    m = mults.get(rep, 0)
                    if not m:
                        break
                    rhs += m * (base + j * a2)
                    j += 1
                    nu = _add(nu, alpha)
            diff = _sub(highest, mu)
            lhs = sum(x * y for x, y in
                      zip(diff, self._gram_apply(_sub(top_shift, diff))))
            # lhs = <highest+rho,highest+rho> - <mu+rho,mu+rho>, scaled
            if lhs <= 0:
                raise AssertionError("Freudenthal denominator must be positive")
            q, r = divmod(2 * rhs, lhs)
            if r or q <= 0:
                raise AssertionError("Freudenthal multiplicity must be a positive integer")
            mults[mu] = q
        return mults

    # -- reporting ---------------------------------------------------------------

    def dump(self) -> dict:
        """Cartan data as plain JSON-ready values (debug interface)."""
        return {
            "type": str(self.lie_type),
            "rank": self.rank,
            "node_numbering": "Bourbaki",
            "cartan": [list(row) for row in self.cartan],
            "inverse_cartan": [[str(f) for f in row] for row in self.inverse_cartan],
            "simple_root_norms": [str(f) for f in self.simple_root_norms],
            "positive_root_count": len(self.positive_roots),
            "positive_roots": [list(r) for r in self.positive_roots],
        }

    def __repr__(self) -> str:
        return f"RootSystem({self.lie_type})"


class LeviSubsystem:
    """The Levi root subsystem of a maximal parabolic: the ambient diagram
    minus one marked node, acting on full ambient weight coordinates.

    ``node`` is 1-based (Bourbaki).  Levi-dominance means nonnegativity on
    every coordinate except the marked one, which records the twist.
    """

    def __init__(self, ambient: RootSystem, node: int):
        if not 1 <= node <= ambient.rank:
            raise ValueError(f"node {node} out of range for {ambient.lie_type}")
        self.ambient = ambient
        self.node = node
        self._k = node - 1
        self.nodes = tuple(i for i in range(ambient.rank) if i != self._k)
        self.positive_roots = tuple(
            root for root, coord in zip(ambient.positive_roots,
                                        ambient.positive_root_coords)
            if coord[self._k] == 0
        )
        self.two_rho = (0,) * ambient.rank
        for alpha in self.positive_roots:
            self.two_rho = _add(self.two_rho, alpha)

    def is_dominant(self, w: Weight) -> bool:
        return all(w[i] >= 0 for i in self.nodes)

    def dominant_representative(self, w: Weight) -> Weight:
        return self.ambient.dominant_representative(w, self.nodes)

    def weyl_dim(self, w: Weight) -> int:
        """Dimension of the irreducible Levi module with highest weight w."""
        if not self.is_dominant(w):
            raise ValueError(f"weight {w} is not Levi-dominant")
        return self.ambient._chamber_dim(w, self.positive_roots, self.two_rho,
                                         key=self.node)

    def dominant_weight_multiplicities(self, w: Weight) -> dict[Weight, int]:
        """Freudenthal multiplicities at the Levi-dominant weights of the
        Levi module V_w (full ambient coordinates)."""
        if not self.is_dominant(w):
            raise ValueError(f"weight {w} is not Levi-dominant")
        return self.ambient._freudenthal(w, self.nodes, self.positive_roots,
                                         self.two_rho, key=self.node)

    def dual_highest_weight(self, w: Weight) -> Weight:
        """Highest weight of the dual Levi module: the dominant representative
        of -w under the Levi Weyl group."""
        return self.dominant_representative(negate(w))

    def __repr__(self) -> str:
        return f"LeviSubsystem({self.ambient.lie_type}, node={self.node})"


@lru_cache(maxsize=None)
def root_system(family: str, rank: int | None = None) -> RootSystem:
    """Cached root-system factory.  Accepts ('A', 4) or 'E6' style arguments."""
    if rank is None:
        fam, rank = family[0], int(family[1:])
    else:
        fam = family
    return RootSystem(LieType(fam, int(rank)))
