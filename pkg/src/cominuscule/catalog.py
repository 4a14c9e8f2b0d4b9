"""Catalog of the irreducible cominuscule Grassmannians.

Each space is an ambient simple type with one marked (cominuscule) node:

====================  =============  ===========  ==============
space                 ambient        marked node  name grammar
====================  =============  ===========  ==============
k-planes in n-space   A_{n-1}        k            ``G:k:n``
odd quadric Q^m       B_{(m+1)/2}    1            ``Q:m``
even quadric Q^m      D_{m/2+1}      1            ``Q:m``
Lagrangian, IG(n,2n)  C_n            n            ``IG:n``
spinor, OG(n,2n)      D_n            n            ``OG:n``
Cayley plane          E6             1            ``E6``
Freudenthal variety   E7             7            ``E7``
====================  =============  ===========  ==============

All derived data (dimension, index, cotangent weight, Levi) is recomputed
from the root system, never copied from a table; ``check_table1`` compares
the recomputation against the hard-coded reference values.  Isomorphic
small cases (``IG:2`` vs ``Q:3``, ``OG:4`` vs ``Q:6``, ...) are distinct
specs on purpose: formulas are stated per presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .rootsys import (
    LeviSubsystem,
    RootSystem,
    Weight,
    negate,
    root_system,
)

FAMILIES = (
    "grassmannian",
    "quadric_odd",
    "quadric_even",
    "lagrangian",
    "spinor",
    "cayley",
    "freudenthal",
)


@dataclass(frozen=True)
class GrassmannianSpec:
    """One cominuscule space: ambient type, marked node, derived data."""

    family: str
    params: tuple[int, ...]
    name: str
    marked_node: int  # 1-based Bourbaki node
    dim: int
    index_c1: int
    cotangent_weight: Weight
    ambient: RootSystem = field(compare=False, repr=False)
    levi: LeviSubsystem = field(compare=False, repr=False)

    def __str__(self) -> str:
        return self.name


def nilradical_roots(spec: GrassmannianSpec) -> list[Weight]:
    """Positive roots supported on the marked node.

    For a cominuscule node the marked coefficient is always exactly 1; the
    negatives of these roots are the weights of the cotangent bundle, and
    there are dim X of them.
    """
    k = spec.marked_node - 1
    out = []
    for root, coord in zip(spec.ambient.positive_roots,
                           spec.ambient.positive_root_coords):
        if coord[k]:
            if coord[k] != 1:
                raise AssertionError(
                    f"{spec.name}: node {spec.marked_node} is not cominuscule")
            out.append(root)
    return out


def _build(family: str, params: tuple[int, ...], name: str,
           ambient: RootSystem, node: int) -> GrassmannianSpec:
    k = node - 1
    nil = [root for root, coord in zip(ambient.positive_roots,
                                       ambient.positive_root_coords)
           if coord[k]]
    dim = len(nil)
    total = [0] * ambient.rank
    for root in nil:
        for i, x in enumerate(root):
            total[i] += x
    if any(total[i] for i in range(ambient.rank) if i != k):
        raise AssertionError(f"{name}: sum of nilradical roots is not along the marked node")
    c1 = total[k]
    cotangent = negate(ambient.simple_roots[k])
    spec = GrassmannianSpec(
        family=family,
        params=params,
        name=name,
        marked_node=node,
        dim=dim,
        index_c1=c1,
        cotangent_weight=cotangent,
        ambient=ambient,
        levi=LeviSubsystem(ambient, node),
    )
    return spec


def grassmannian(k: int, n: int) -> GrassmannianSpec:
    """G(k, n): k-planes in n-space, ambient A_{n-1} marked at node k."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"G({k},{n}): need 1 <= k <= n-1, n >= 2")
    return _build("grassmannian", (k, n), f"G:{k}:{n}",
                  root_system("A", n - 1), k)


def quadric(m: int) -> GrassmannianSpec:
    """The m-dimensional quadric: B-type for odd m, D-type for even m."""
    if m < 3:
        raise ValueError(f"Q:{m}: need dimension >= 3")
    if m % 2:
        r = (m + 1) // 2
        return _build("quadric_odd", (m,), f"Q:{m}", root_system("B", r), 1)
    r = m // 2 + 1
    return _build("quadric_even", (m,), f"Q:{m}", root_system("D", r), 1)


def lagrangian(n: int) -> GrassmannianSpec:
    """IG(n, 2n): maximal isotropic subspaces for a symplectic form."""
    if n < 2:
        raise ValueError(f"IG:{n}: need n >= 2")
    return _build("lagrangian", (n,), f"IG:{n}", root_system("C", n), n)


def spinor(n: int) -> GrassmannianSpec:
    """OG(n, 2n): one family of maximal isotropics for a symmetric form."""
    if n < 3:
        raise ValueError(f"OG:{n}: need n >= 3")
    return _build("spinor", (n,), f"OG:{n}", root_system("D", n), n)


def cayley() -> GrassmannianSpec:
    return _build("cayley", (), "E6", root_system("E6"), 1)


def freudenthal() -> GrassmannianSpec:
    return _build("freudenthal", (), "E7", root_system("E7"), 7)


_CONSTRUCTORS = {
    "grassmannian": grassmannian,
    "quadric_odd": quadric,
    "quadric_even": quadric,
    "lagrangian": lagrangian,
    "spinor": spinor,
    "cayley": cayley,
    "freudenthal": freudenthal,
}


def make_spec(family: str, *params: int) -> GrassmannianSpec:
    """Build a spec by family name; params as for the named constructors."""
    if family not in _CONSTRUCTORS:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return _CONSTRUCTORS[family](*params)


def parse_space(text: str) -> GrassmannianSpec:
    """Parse the space grammar ``G:k:n | Q:m | IG:n | OG:n | E6 | E7``."""
    tokens = text.strip().split(":")
    head = tokens[0].upper()
    try:
        if head == "E6" and len(tokens) == 1:
            return cayley()
        if head == "E7" and len(tokens) == 1:
            return freudenthal()
        if head == "G" and len(tokens) == 3:
            return grassmannian(int(tokens[1]), int(tokens[2]))
        if head == "Q" and len(tokens) == 2:
            return quadric(int(tokens[1]))
        if head == "IG" and len(tokens) == 2:
            return lagrangian(int(tokens[1]))
        if head == "OG" and len(tokens) == 2:
            return spinor(int(tokens[1]))
    except ValueError as exc:
        raise ValueError(f"bad space {text!r}: {exc}") from None
    raise ValueError(
        f"bad space {text!r}: token {tokens[0]!r} does not match "
        "G:k:n | Q:m | IG:n | OG:n | E6 | E7")


@dataclass(frozen=True)
class Table1Check:
    """Conformance record for one catalog row: recomputed values against the
    reference dimension/index formulas and cotangent weight."""

    space: str
    computed: dict
    expected: dict
    matches: bool
    notes: tuple[str, ...] = ()


def check_table1(spec: GrassmannianSpec) -> Table1Check:
    """Compare a spec's derived data against the reference table values.

    Mismatches are reported, not fatal.  The ordinary-Grassmannian row is
    indexed by n = dim V (the reference table's r plays that role; its
    ambient rank is n - 1), which is recorded as a note rather than resolved
    silently.
    """
    notes: list[str] = []
    if spec.family == "grassmannian":
        k, n = spec.params
        expected = {"dim": k * (n - k), "c1": n}
        notes.append("table row reads G(k,r) with r = dim V = ambient rank + 1")
    elif spec.family == "quadric_odd":
        (m,) = spec.params
        r = spec.ambient.rank
        expected = {"dim": 2 * r - 1, "c1": 2 * r - 1}
    elif spec.family == "quadric_even":
        (m,) = spec.params
        r = spec.ambient.rank
        expected = {"dim": 2 * r - 2, "c1": 2 * r - 2}
    elif spec.family == "lagrangian":
        (n,) = spec.params
        expected = {"dim": n * (n + 1) // 2, "c1": n + 1}
    elif spec.family == "spinor":
        (n,) = spec.params
        expected = {"dim": n * (n - 1) // 2, "c1": 2 * n - 2}
    elif spec.family == "cayley":
        expected = {"dim": 16, "c1": 12,
                    "cotangent": (-2, 0, 1, 0, 0, 0)}
    else:
        expected = {"dim": 27, "c1": 18,
                    "cotangent": (0, 0, 0, 0, 0, 1, -2)}

    computed = {"dim": spec.dim, "c1": spec.index_c1,
                "cotangent": spec.cotangent_weight}
    keys = set(expected)
    matches = all(computed[key] == expected[key] for key in keys)
    return Table1Check(
        space=spec.name,
        computed={k: computed[k] for k in sorted(computed)},
        expected={k: expected[k] for k in sorted(expected)},
        matches=matches,
        notes=tuple(notes),
    )


def iter_catalog_specs(max_rank: int,
                       families: tuple[str, ...] | None = None,
                       ) -> Iterator[GrassmannianSpec]:
    """All catalog specs whose ambient rank is at most max_rank, normalized
    to k <= n - k for ordinary Grassmannians.  Deterministic order."""
    if max_rank < 2:
        raise ValueError("need max_rank >= 2")
    wanted = set(families) if families is not None else set(FAMILIES)
    for n in range(2, max_rank + 2):  # ambient A_{n-1}
        for k in range(1, n // 2 + 1):
            if "grassmannian" in wanted:
                yield grassmannian(k, n)
    for r in range(2, max_rank + 1):  # B_r
        if "quadric_odd" in wanted:
            yield quadric(2 * r - 1)
    for r in range(3, max_rank + 1):  # D_r, node 1
        if "quadric_even" in wanted:
            yield quadric(2 * r - 2)
    for n in range(2, max_rank + 1):
        if "lagrangian" in wanted:
            yield lagrangian(n)
    for n in range(3, max_rank + 1):
        if "spinor" in wanted:
            yield spinor(n)
    if max_rank >= 6 and "cayley" in wanted:
        yield cayley()
    if max_rank >= 7 and "freudenthal" in wanted:
        yield freudenthal()
