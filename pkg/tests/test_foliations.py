import pytest

from cominuscule.foliations import (
    cayley_family,
    foliation_atlas,
    orthogonal_family,
    rect_family,
    symplectic_family,
)
from cominuscule.partitions import (
    min_twist_lagr_oracle,
    min_twist_spinor_oracle,
)


def test_rect_family_square_case():
    (report,) = rect_family(3, 6, 4)
    assert report.minimal
    assert (report.params["d"], report.params["e"]) == (2, 2)
    assert (report.l, report.degree) == (4, -1)
    assert (report.tf_rank, report.tf_c1) == (5, 2)
    assert report.parameter_space == "Flag(1, 5; C^6)"


def test_rect_family_degree_zero_case():
    (report,) = rect_family(2, 5, 3)
    assert report.minimal
    assert (report.params["d"], report.params["e"]) == (3, 1)
    assert (report.l, report.degree) == (4, 0)
    assert report.tf_rank == 2 * 3 - 3
    assert report.tf_c1 == 5 - 4


def test_rect_family_araujo_druel_subcase():
    reports = rect_family(3, 10, 12)
    minimal = [r for r in reports if r.minimal]
    assert len(minimal) == 1
    r = minimal[0]
    assert r.kind == "araujo_druel"
    assert (r.params["d"], r.params["e"], r.params["m"]) == (4, 3, 3)
    assert (r.l, r.degree) == (7, -6)
    assert r.tf_c1 == 10 - 7
    assert any("n - m = 7" in note for note in r.notes)
    # the 6 x 2 rectangle also fits the box but is not of minimal degree
    others = [r for r in reports if not r.minimal]
    assert [(r.params["d"], r.params["e"]) for r in others] == [(6, 2)]
    assert others[0].l == 8


def test_rect_family_emits_both_orientations():
    reports = rect_family(3, 8, 6)
    minimal = [(r.params["d"], r.params["e"]) for r in reports if r.minimal]
    assert set(minimal) == {(3, 2), (2, 3)}
    for r in reports:
        if r.minimal:
            assert r.tf_c1 == 8 - 5 and r.degree == 5 - 6 - 1


def test_rect_family_no_rectangle():
    assert rect_family(2, 6, 5) == []


def test_rect_family_validation():
    with pytest.raises(ValueError):
        rect_family(3, 5, 2)  # needs n >= 2k
    with pytest.raises(ValueError):
        rect_family(2, 6, 9)


def test_symplectic_family_values():
    fam = symplectic_family(3, 2)
    assert (fam.p, fam.l, fam.degree) == (3, 3, -1)
    assert fam.parameter_space == "IG(1, C^6)"
    fam = symplectic_family(5, 1)
    assert (fam.p, fam.l, fam.degree) == (1, 2, 0)
    fam = symplectic_family(5, 3)
    assert (fam.p, fam.l, fam.degree) == (6, 4, -3)
    assert fam.tf_rank == 15 - 6 and fam.tf_c1 == 6 - 4
    with pytest.raises(ValueError):
        symplectic_family(4, 4)


def test_orthogonal_family_values():
    fam = orthogonal_family(5, 2)
    assert (fam.p, fam.l, fam.degree) == (3, 4, 0)
    assert fam.parameter_space == "OG(2, C^10)"
    fam = orthogonal_family(5, 1)
    assert (fam.p, fam.l, fam.degree) == (1, 2, 0)
    fam = orthogonal_family(6, 3)
    assert (fam.p, fam.l, fam.degree) == (6, 6, -1)
    with pytest.raises(ValueError):
        orthogonal_family(5, 4)


@pytest.mark.parametrize("n", range(2, 11))
def test_family_twists_match_oracles(n):
    for a in range(1, n):
        fam = symplectic_family(n, a)
        assert fam.l == min_twist_lagr_oracle(n, fam.p).l
    if n >= 3:
        for a in range(1, n - 1):
            fam = orthogonal_family(n, a)
            assert fam.l == min_twist_spinor_oracle(n, fam.p).l


def test_degree_shift_invariant():
    for fam in [symplectic_family(6, 4), orthogonal_family(7, 3),
                cayley_family()] + rect_family(3, 9, 6):
        assert fam.degree == fam.l - fam.p - 1


def test_cayley_family():
    fam = cayley_family()
    assert (fam.p, fam.l, fam.degree) == (8, 8, -1)
    assert fam.kind == "cayley_lines"
    assert (fam.tf_rank, fam.tf_c1) == (8, 4)
    assert fam.minimal
    note = fam.notes[0]
    assert "4l6" in note and "4l1" in note  # both duality conventions recorded


def test_atlas_sorted_and_minimal():
    atlas = foliation_atlas(6)
    keys = [(r.space, r.p) for r in atlas]
    assert keys == sorted(keys)
    assert all(r.minimal for r in atlas)
    assert any(r.kind == "cayley_lines" for r in atlas)
    assert any(r.space == "IG:5" for r in atlas)
    spaces = {r.space for r in atlas}
    assert "OG:6" in spaces
