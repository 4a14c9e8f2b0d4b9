"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line
and asserting at the stated tolerance (exact integers throughout; time and
memory budgets where specified).

Two criteria fail by design against the reference material and the failures
are intentional:

* criterion 1 expects the recomputed Cayley-plane table to match the
  transcription exactly, but the transcribed p = 8 row carries a typo in one
  coefficient (see the assertion message; the recomputed row is pinned by
  the exact rank identity);
* criterion 4 names a two-element minimizer set for (k, p) = (3, 10), but
  exhaustive enumeration finds a third partition of equal cost in every box
  convention, so the named set cannot equal the full minimizer set.

Everything else passes.  Run with ``pytest tests/test_acceptance.py -v -s``
to see the per-criterion lines.
"""

import resource
import time
from fractions import Fraction
from math import comb

from cominuscule.catalog import (
    cayley,
    grassmannian,
    iter_catalog_specs,
    lagrangian,
    quadric,
    spinor,
)
from cominuscule.foliations import cayley_family, orthogonal_family, symplectic_family
from cominuscule.partitions import (
    min_twist_grass,
    min_twist_grass_oracle,
    min_twist_lagr,
    min_twist_lagr_oracle,
    min_twist_spinor,
    min_twist_spinor_oracle,
)
from cominuscule.plethysm import _DP_CACHE, omega_decompose
from cominuscule.twists import h0_dim, min_twist, nonvanishing_scan, table_audit

GIB = 2 ** 30


def _line(num: int, ok: bool, desc: str) -> bool:
    print(f"ACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'}: {desc}")
    return ok


def _peak_rss() -> int:
    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024


def test_criterion_01_e6_table_reproduction():
    t0 = time.monotonic()
    audit = table_audit("E6")
    elapsed = time.monotonic() - t0
    peak = _peak_rss()
    exact = audit.ok and len(audit.rows) == 15
    ok = exact and elapsed <= 60 and peak <= GIB
    _line(1, ok, f"E6 table: {sum(r.ok for r in audit.rows)}/15 rows match, "
                 f"{elapsed:.1f}s, peak {peak / GIB:.2f} GiB")
    assert elapsed <= 60 and peak <= GIB
    assert len(audit.rows) == 15 and all(r.l_match for r in audit.rows)
    assert audit.ok, (
        "one transcribed cell differs from the recomputation: row p=8 prints "
        "a middle summand with coefficient 6 on the last fundamental weight, "
        "but the engine computes coefficient 2.  The engine value is forced: "
        "the three computed summand dimensions 660 + 8085 + 4125 equal "
        "binom(16,8) = 12870 exactly, while the printed weight has Levi "
        "dimension 462462.  The transcription is kept verbatim and the audit "
        f"reports the diff, as designed.  Mismatching rows: "
        f"{[r.p for r in audit.mismatches]}")


def test_criterion_02_e7_table_reproduction():
    t0 = time.monotonic()
    audit = table_audit("E7")
    elapsed = time.monotonic() - t0
    peak = _peak_rss()
    ok = audit.ok and len(audit.rows) == 26 and elapsed <= 600 and peak <= 4 * GIB
    _line(2, ok, f"E7 table: {sum(r.ok for r in audit.rows)}/26 rows match, "
                 f"{elapsed:.1f}s, peak {peak / GIB:.2f} GiB, duality shortcut "
                 f"horizon {_DP_CACHE['E7'][0]}")
    assert elapsed <= 600 and peak <= 4 * GIB
    assert len(audit.rows) == 26
    # the high grades must come from the duality shortcut, not direct DP
    assert _DP_CACHE["E7"][0] <= 14
    # the interleaved-twist row surfaces as an explicit, crash-free verdict
    row15 = next(r for r in audit.rows if r.p == 15)
    assert isinstance(row15.weights_match, bool)
    assert (0, 0, 3, 0, 0, 0, -14) in row15.computed_weights
    assert audit.ok, [r.p for r in audit.mismatches]


def test_criterion_03_closed_form_vs_oracle():
    t0 = time.monotonic()
    for k in range(1, 9):
        for n in range(2 * k, 17):
            for p in range(1, k * (n - k) + 1):
                assert min_twist_grass(k, n, p) == \
                    min_twist_grass_oracle(k, n, p).l, (k, n, p)
    for n in range(2, 11):
        for p in range(1, n * (n + 1) // 2 + 1):
            assert min_twist_lagr(p) == min_twist_lagr_oracle(n, p).l, (n, p)
    for n in range(3, 11):
        for p in range(1, n * (n - 1) // 2 + 1):
            assert min_twist_spinor(p) == min_twist_spinor_oracle(n, p).l, (n, p)
    elapsed = time.monotonic() - t0
    ok = elapsed <= 60
    _line(3, ok, f"closed form equals oracle on all three families, {elapsed:.1f}s")
    assert ok


def test_criterion_04_named_minimal_partition_sets():
    w7 = min_twist_grass_oracle(3, 9, 7)
    p7_ok = set(w7.partitions) == {(4, 3), (3, 3, 1), (3, 2, 2)}
    w10 = min_twist_grass_oracle(3, 10, 10)
    named = {(2, 2, 2, 2, 2), (3, 3, 3, 1)}
    p10_ok = set(w10.partitions) == named
    _line(4, p7_ok and p10_ok,
          f"named minimizer sets: p=7 {'ok' if p7_ok else 'mismatch'}, "
          f"p=10 {'ok' if p10_ok else 'mismatch'}")
    assert p7_ok, w7.partitions
    assert p10_ok, (
        "the named two-element set cannot be the complete minimizer set: "
        f"in the at-most-k-rows box the oracle finds {w10.partitions} "
        "(all of cost 7), whose conjugates are (2,2,2,2,2), (3,3,2,2) and "
        "(3,3,3,1).  The named set omits the cost-7 minimizer (3,3,2,2) "
        "(equivalently (4,4,2)); no box convention reproduces it exactly, "
        "so the oracle stays exhaustive and this criterion is reported red.")


def test_criterion_05_rank_identity():
    t0 = time.monotonic()
    specs = []
    for k in range(1, 7):
        for n in range(2 * k, 38):
            if k * (n - k) <= 36:
                specs.append(grassmannian(k, n))
    specs += [lagrangian(n) for n in range(2, 9)]
    specs += [spinor(n) for n in range(3, 10)]
    specs += [quadric(m) for m in range(3, 13)]
    checked = 0
    for spec in specs:
        for p in range(0, spec.dim + 1):
            expected, got = omega_decompose(spec, p).rank_identity()
            assert expected == got == comb(spec.dim, p), (spec.name, p)
            checked += 1
    for p in range(0, 17):
        expected, got = omega_decompose(cayley(), p).rank_identity()
        assert expected == got == comb(16, p), p
        checked += 1
    elapsed = time.monotonic() - t0
    ok = elapsed <= 120
    _line(5, ok, f"rank identity on {checked} (space, p) pairs, {elapsed:.1f}s")
    assert ok


def test_criterion_06_path_agreement():
    t0 = time.monotonic()
    specs = []
    for k in range(1, 5):
        for n in range(2 * k, 23):
            if k * (n - k) <= 21:
                specs.append(grassmannian(k, n))
    specs += [lagrangian(n) for n in range(2, 7)]
    specs += [spinor(n) for n in range(3, 8)]
    checked = 0
    for spec in specs:
        for p in range(0, spec.dim + 1):
            fast = omega_decompose(spec, p)
            dp = omega_decompose(spec, p, method="WeightDP")
            assert fast.weights() == dp.weights(), (spec.name, p)
            assert [s.levi_dim for s in fast.summands] == \
                [s.levi_dim for s in dp.summands], (spec.name, p)
            checked += 1
    elapsed = time.monotonic() - t0
    _line(6, True, f"fast paths equal weight engine on {checked} instances, "
                   f"{elapsed:.1f}s")


def test_criterion_07_low_twist_scan():
    scan = nonvanishing_scan(6)
    no_violations = not scan.violations
    exceptions = scan.exceptions
    all_lagr_p3 = all(e.p == 3 and e.l == 3 and "Lagrangian" in e.note
                      for e in exceptions)
    ig_spaces = {s.name for s in iter_catalog_specs(6, families=("lagrangian",))
                 if s.dim >= 3}
    seen = {e.space for e in exceptions}
    ig_all_present = ig_spaces <= seen
    extras = seen - ig_spaces
    only_iso_extras = extras <= {"Q:3"}  # the Lagrangian in quadric clothing
    ok = no_violations and all_lagr_p3 and ig_all_present and only_iso_extras
    _line(7, ok, f"scan at rank 6: {len(scan.violations)} violations, "
                 f"exceptions {sorted(seen)}")
    assert no_violations and all_lagr_p3 and ig_all_present and only_iso_extras


def test_criterion_08_quadric_closed_form():
    for m in range(3, 13):
        spec = quadric(m)
        for p in range(1, m):
            report = min_twist(spec, p)
            assert report.l == p + 1, (m, p)
            vanish = sum(h0_dim(spec, s, p)
                         for s in omega_decompose(spec, p).summands)
            assert vanish == 0, (m, p)
    _line(8, True, "quadrics 3..12: no sections at twist p, first sections at p+1")


def test_criterion_09_family_consistency():
    for n in range(2, 11):
        for a in range(1, n - 1):
            fam = symplectic_family(n, a)
            assert fam.l == min_twist_lagr_oracle(n, fam.p).l, (n, a)
    for n in range(3, 11):
        for a in range(1, n - 1):
            fam = orthogonal_family(n, a)
            assert fam.l == min_twist_spinor_oracle(n, fam.p).l, (n, a)
    fam = cayley_family()
    audit_row8 = next(r for r in table_audit("E6").rows if r.p == 8)
    assert (fam.p, fam.l, fam.degree) == (8, 8, -1)
    assert fam.l == audit_row8.computed_l == audit_row8.table_l
    _line(9, True, "projection families match oracles; Cayley family "
                   "consistent with the recomputed p=8 row")


def test_criterion_10_twist_identity_cross_check():
    checked = 0
    specs = []
    for k in range(1, 6):
        for n in range(2 * k, 29):
            if k * (n - k) <= 27:
                specs.append(grassmannian(k, n))
    specs += [lagrangian(n) for n in range(2, 7)]
    specs += [spinor(n) for n in range(3, 8)]
    specs += [quadric(m) for m in range(3, 13)]
    specs += [cayley(), lagrangian(2)]
    from cominuscule.catalog import freudenthal
    specs.append(freudenthal())
    for spec in specs:
        rs = spec.ambient
        k = spec.marked_node - 1
        lam_k = tuple(1 if i == k else 0 for i in range(rs.rank))
        kk = rs.pairing(lam_k, lam_k)
        lam = spec.cotangent_weight
        for p in range(0, spec.dim + 1):
            for s in omega_decompose(spec, p).summands:
                rho = tuple(0 if i == k else x
                            for i, x in enumerate(s.highest_weight))
                a = (Fraction(p) * rs.pairing(lam, lam_k)
                     - rs.pairing(rho, lam_k)) / kk
                assert a.denominator == 1, (spec.name, p, s.highest_weight)
                assert int(a) == s.highest_weight[k], (spec.name, p)
                checked += 1
    _line(10, True, f"twist slope identity exact on {checked} summands")
