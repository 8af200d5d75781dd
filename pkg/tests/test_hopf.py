"""Structure axioms, fault injection, and group-like detection."""

import dataclasses

import pytest

from hopfcheck import (
    CYC_MINUS_ONE,
    CYC_ONE,
    CYC_ZERO,
    Cyc,
    Functional,
    Mat,
    Tensor3,
    find_group_likes,
    full_axiom_suite,
    standard_zoo,
    sweedler,
)
from hopfcheck.errors import DimMismatch
from hopfcheck.hopf import (
    group_like_closure_check,
    is_group_like,
    same_structure,
    verify_algebra,
    verify_antipode,
    verify_bialgebra,
    verify_coalgebra,
)

AXIOM_CHECKS = ("algebra", "coalgebra", "bialgebra", "antipode",
                "antipode-derived", "star")


def test_axiom_suite_clean_on_whole_zoo(zoo):
    for h in zoo.values():
        for check in full_axiom_suite(h):
            assert check.status != "FAIL", f"{h.name}: {check.line()}"
            assert check.name in AXIOM_CHECKS


def test_star_skips_only_without_star(zoo):
    for h in zoo.values():
        star = [c for c in full_axiom_suite(h) if c.name == "star"][0]
        assert star.status == ("SKIP" if h.star is None else "PASS")


def _tweak_tensor(t, i, j, k, delta):
    entries = list(t.entries)
    entries[(i * t.dim + j) * t.dim + k] = t.get(i, j, k) + delta
    return Tensor3(t.dim, tuple(entries))


def _tweak_mat(m, r, c, value):
    flat = list(m.entries)
    flat[r * m.cols + c] = value
    return Mat(m.rows, m.cols, tuple(flat))


def test_corrupted_product_fails_associativity():
    h = sweedler()
    bad = dataclasses.replace(h, mult=_tweak_tensor(h.mult, 1, 2, 0, CYC_ONE))
    check = verify_algebra(bad)
    assert check.status == "FAIL"
    assert "assoc" in check.detail or "unit" in check.detail


def test_corrupted_counit_fails_bialgebra():
    h = sweedler()
    coords = list(h.counit.coords)
    coords[2] = CYC_ONE  # the nilpotent generator must have counit zero
    bad = dataclasses.replace(h, counit=Functional(tuple(coords)))
    assert verify_coalgebra(bad).status == "FAIL"
    assert verify_bialgebra(bad).status == "FAIL"


def test_corrupted_antipode_sign_fails():
    h = sweedler()
    bad = dataclasses.replace(
        h, antipode=_tweak_mat(h.antipode, 3, 2, CYC_ONE)
    )
    assert verify_antipode(bad).status == "FAIL"
    assert "S" in verify_antipode(bad).identity


def test_dim_mismatch_rejected():
    h = sweedler()
    from hopfcheck import Elem
    with pytest.raises(DimMismatch):
        dataclasses.replace(h, unit=Elem((CYC_ONE,)))
    with pytest.raises(DimMismatch):
        dataclasses.replace(h, antipode=Mat.identity(3))


def test_group_likes_of_cyclic_group_algebra(zoo):
    likes = find_group_likes(zoo["C[Z2]"])
    coords = [tuple(c.text() for c in e.coords) for e in likes]
    assert coords == [("0", "1"), ("1", "0")]
    check = group_like_closure_check(zoo["C[Z2]"], likes)
    assert check.status == "PASS"
    assert "2" in check.detail


def test_group_likes_of_function_algebra_are_characters(zoo):
    # characters of Z3 need zeta_3 coordinates even though the
    # structure constants are rational
    h = zoo["F(Z3)"]
    likes = find_group_likes(h)
    assert len(likes) == 3
    z = Cyc.root(3)
    expected = [
        (CYC_ONE, CYC_ONE, CYC_ONE),
        (CYC_ONE, z, z * z),
        (CYC_ONE, z * z, z),
    ]
    for e in likes:
        assert is_group_like(h, e)
        assert any(all(a == b for a, b in zip(e.coords, exp))
                   for exp in expected)
    assert group_like_closure_check(h, likes).status == "PASS"


def test_group_like_counts_across_zoo(pipelines):
    expected = {
        # characters of S3 factor through its abelianization, so F(S3)
        # has only the trivial and sign characters
        "C[Z2]": 2, "C[Z3]": 3, "C[Z6]": 6, "C[S3]": 6,
        "F(Z2)": 2, "F(Z3)": 3, "F(Z6)": 6, "F(S3)": 2,
        "sweedler": 2, "taft(2)": 2, "taft(3)": 3,
        "sweedler(x)C[Z2]": 4, "sweedler(x)sweedler": 4,
    }
    for name, res in pipelines.items():
        assert len(res.values["group_likes"]) == expected[name], name


def test_is_group_like_rejects_non_group_likes():
    h = sweedler()
    assert is_group_like(h, h.basis(1))      # the grouplike generator
    assert not is_group_like(h, h.basis(2))  # the skew-primitive one
    assert not is_group_like(h, h.zero())
    two = h.elem([Cyc.rational(2), CYC_ZERO, CYC_ZERO, CYC_ZERO])
    assert not is_group_like(h, two)


def test_same_structure():
    zoo = {h.name: h for h in standard_zoo()}
    assert same_structure(zoo["C[Z2]"], zoo["C[Z2]"])
    assert not same_structure(zoo["C[Z2]"], zoo["F(Z2)"], include_star=True)
    assert not same_structure(zoo["sweedler"], zoo["taft(3)"])


def test_mul_and_coprod_sweedler_relations():
    h = sweedler()
    one, g, x, gx = (h.basis(i) for i in range(4))
    assert h.mul(g, g) == one
    assert h.mul(g, x) == gx
    assert h.mul(x, x).is_zero()
    assert h.mul(x, g) == h.elem([CYC_ZERO, CYC_ZERO, CYC_ZERO, CYC_MINUS_ONE])
    # anticommutation: xg = -gx
    lhs = h.mul(x, g)
    rhs = h.elem([-c for c in h.mul(g, x).coords])
    assert lhs == rhs
    terms = h.coprod(x)
    assert terms == {(2, 0): CYC_ONE, (1, 2): CYC_ONE}  # x(x)1 + g(x)x
    assert h.antipode_of(x) == h.elem(
        [CYC_ZERO, CYC_ZERO, CYC_ZERO, CYC_MINUS_ONE]
    )
    assert h.counit_of(g) == CYC_ONE
    assert h.counit_of(x) == CYC_ZERO
