"""Numeric invariants of the minimal-degree foliation families.

Only integers are modeled: codimension, twist of the normal sheaf, degree
(the twist shifted by codimension plus one), rank and first Chern class of
the tangent sheaf, and a textual descriptor of the parameter space.  The
geometry behind them (rational maps, Schubert base loci, tangent-sheaf
extensions, integrability) is proof material with no computable surface and
stays out of scope.

Families:

* rectangle families on ordinary Grassmannians, cut out by flags: a p = d*e
  rectangle inside the k x (n-k) box gives a family of twist d + e, minimal
  exactly when d and e solve x^2 - l(p) x + p = 0 (so l(p)^2 - 4p must be a
  perfect square);
* symplectic and orthogonal projection families with 2p = a(a+1);
* the octonionic-line pencil on the Cayley plane at p = 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .catalog import GrassmannianSpec, cayley, iter_catalog_specs
from .partitions import min_twist_grass, min_twist_lagr, min_twist_spinor
from .twists import min_twist


@dataclass(frozen=True, eq=False)
class FoliationFamilyReport:
    """One family of foliations, reduced to its numeric invariants."""

    space: str
    p: int
    l: int  # c1 of the normal sheaf
    degree: int  # l - p - 1
    kind: str  # rect_flag | araujo_druel | symplectic_projection | orthogonal_projection | cayley_lines
    params: dict
    parameter_space: str
    tf_rank: int
    tf_c1: int
    minimal: bool
    notes: tuple[str, ...] = ()


def _flag_text(a: int, b: int, n: int) -> str:
    if a == 0 and b == n:
        return "point"
    if a == 0:
        return f"G({b}, C^{n})"
    if b == n:
        return f"G({a}, C^{n})"
    return f"Flag({a}, {b}; C^{n})"


def rect_family(k: int, n: int, p: int) -> list[FoliationFamilyReport]:
    """All rectangle families on G(k,n) in codimension p.

    One report per factorization p = d*e with e <= k rows and d <= n-k
    columns; both orientations of a rectangle appear when both fit the box.
    The minimal ones are exactly those with d + e = l(p); reports are sorted
    minimal-first, then by decreasing width.
    """
    if n < 2 * k:
        raise ValueError(f"rect families need n >= 2k, got k={k}, n={n}")
    h = n - k
    if not 1 <= p <= k * h:
        raise ValueError(f"p={p} out of range 1..{k * h}")
    l_min = min_twist_grass(k, n, p)
    out = []
    for e in range(1, min(k, p) + 1):
        if p % e:
            continue
        d = p // e
        if d > h:
            continue
        l = d + e
        minimal = l == l_min
        kind = "araujo_druel" if e == k else "rect_flag"
        params = {"d": d, "e": e, "h": h}
        notes = []
        if kind == "araujo_druel":
            m = n - k - d
            params["m"] = m
            notes.append(f"linear-projection case: c1 of the normal sheaf is n - m = {n - m}")
        out.append(FoliationFamilyReport(
            space=f"G:{k}:{n}",
            p=p,
            l=l,
            degree=l - p - 1,
            kind=kind,
            params=params,
            parameter_space=_flag_text(h - d, h + e, n),
            tf_rank=k * h - d * e,
            tf_c1=n - d - e,
            minimal=minimal,
            notes=tuple(notes),
        ))
    if l_min * l_min - 4 * p >= 0:
        delta = isqrt(l_min * l_min - 4 * p)
        if delta * delta == l_min * l_min - 4 * p:
            # The minimal rectangle dims are the integer roots of
            # x^2 - l(p) x + p; they may still fail the box bounds.
            d, e = (l_min + delta) // 2, (l_min - delta) // 2
            assert d * e == p and d + e == l_min
    out.sort(key=lambda r: (not r.minimal, -r.params["d"]))
    return out


def symplectic_family(n: int, a: int) -> FoliationFamilyReport:
    """Isotropic-reduction family on IG(n,2n): codimension p = a(a+1)/2,
    twist a+1, degree -a(a-1)/2, parametrized by IG(n-a, 2n)."""
    if not 1 <= a <= n - 1:
        raise ValueError(f"need 1 <= a <= n-1, got a={a}, n={n}")
    p = a * (a + 1) // 2
    l = a + 1
    if l != min_twist_lagr(p):
        raise AssertionError("symplectic family twist must be minimal")
    dim = n * (n + 1) // 2
    return FoliationFamilyReport(
        space=f"IG:{n}",
        p=p,
        l=l,
        degree=l - p - 1,
        kind="symplectic_projection",
        params={"a": a, "n": n},
        parameter_space=f"IG({n - a}, C^{2 * n})",
        tf_rank=dim - p,
        tf_c1=(n + 1) - l,
        minimal=True,
    )


def orthogonal_family(n: int, a: int) -> FoliationFamilyReport:
    """Isotropic-reduction family on OG(n,2n): codimension p = a(a+1)/2,
    twist 2a, degree -(a-1)(a-2)/2, parametrized by OG(n-a-1, 2n)."""
    if not 1 <= a <= n - 2:
        raise ValueError(f"need 1 <= a <= n-2, got a={a}, n={n}")
    p = a * (a + 1) // 2
    l = 2 * a
    if l != min_twist_spinor(p):
        raise AssertionError("orthogonal family twist must be minimal")
    dim = n * (n - 1) // 2
    return FoliationFamilyReport(
        space=f"OG:{n}",
        p=p,
        l=l,
        degree=l - p - 1,
        kind="orthogonal_projection",
        params={"a": a, "n": n},
        parameter_space=f"OG({n - a - 1}, C^{2 * n})",
        tf_rank=dim - p,
        tf_c1=(2 * n - 2) - l,
        minimal=True,
    )


def cayley_family() -> FoliationFamilyReport:
    """The octonionic-line family on the Cayley plane: codimension 8 with
    normal twist 8, hence degree -1, parametrized by the dual plane.

    Cross-checked against the weight engine: l(8) = 8 with unique witness
    -8 l1 + 4 l6.  The twisted witness weight is 4 l6; its dual 4 l1 names
    the same section space in the opposite duality convention, and both
    carry the same dimension, so both are recorded.
    """
    spec = cayley()
    report = min_twist(spec, 8)
    if report.l != 8 or len(report.witnesses) != 1:
        raise AssertionError("Cayley p=8 engine check failed")
    witness = report.witnesses[0].highest_weight
    if witness != (-8, 0, 0, 0, 0, 4):
        raise AssertionError(f"unexpected Cayley witness {witness}")
    dim_dual = spec.ambient.weyl_dim((4, 0, 0, 0, 0, 0))
    if dim_dual != report.h0_dim:
        raise AssertionError("dual weight dimension mismatch")
    return FoliationFamilyReport(
        space="E6",
        p=8,
        l=8,
        degree=-1,
        kind="cayley_lines",
        params={},
        parameter_space="dual Cayley plane (E6 marked at node 6)",
        tf_rank=8,
        tf_c1=4,
        minimal=True,
        notes=(
            "witness summand -8l1+4l6; twisted section weight 4l6, dual 4l1, "
            f"dimension {report.h0_dim} either way",
        ),
    )


def foliation_atlas(max_rank: int) -> list[FoliationFamilyReport]:
    """All minimal-degree families the catalog affords up to an ambient rank:
    minimal rectangles, all symplectic/orthogonal parameters, and the Cayley
    family.  Sorted by (space, p) for deterministic output."""
    rows: list[FoliationFamilyReport] = []
    for spec in iter_catalog_specs(max_rank, families=("grassmannian",)):
        k, n = spec.params
        if n < 2 * k:
            continue
        for p in range(1, k * (n - k) + 1):
            rows.extend(r for r in rect_family(k, n, p) if r.minimal)
    for spec in iter_catalog_specs(max_rank, families=("lagrangian",)):
        n = spec.params[0]
        rows.extend(symplectic_family(n, a) for a in range(1, n))
    for spec in iter_catalog_specs(max_rank, families=("spinor",)):
        n = spec.params[0]
        rows.extend(orthogonal_family(n, a) for a in range(1, n - 1))
    if max_rank >= 6:
        rows.append(cayley_family())
    rows.sort(key=lambda r: (r.space, r.p, -r.params.get("d", 0)))
    return rows
