import pytest

from sysroots import linalg as la
from sysroots.catalog import (FAMILIES, CatalogError, all_families, build_family, canonical_family,
                              check_simplicity, expected_nilradical_dim, restrict,
                              simple_positive_roots, simplicity_violations)
from sysroots.roots import RootSet

from conftest import one_dim, v


def test_restrict_examples():
    f4 = [v(0, 0, 1, -1), v(0, 0, 0, 2), v(1, -1, -1, -1)]
    assert restrict(v(1, 1, 0, 0), f4) == v(0, 0, 0)
    assert restrict(v(-1, 0, 0, 0), f4) == v(0, 0, -1)
    assert restrict(v(-1, 2, -1), [v(1, -1, 0)]) == v(-3)
    with pytest.raises(CatalogError):
        restrict(v(1, 0), [v(1, 0, 0)])


def test_family_entries_use_listed_functionals(f4tilde):
    e = f4tilde
    hs = [h for _, h in e.cartan_basis]
    assert la.is_zero(restrict(e.zeta_unrestricted, hs))
    assert sorted(restrict(f, hs) for _, f in e.unrestricted) == list(e.restricted.roots)


@pytest.mark.parametrize("family, rank, nroots, dim", [
    ("Ctilde", 3, 6, 7), ("G1tilde", None, 2, 3), ("G2tilde", None, 4, 5),
    ("F4tilde", None, 14, 15), ("E6tilde", None, 20, 21), ("E7tilde", None, 32, 33),
])
def test_counts(family, rank, nroots, dim):
    e = build_family(family, rank)
    assert len(e.restricted) == nroots
    assert e.nilradical_dim == dim == expected_nilradical_dim(family, rank)
    assert 2 * e.m == nroots
    assert la.is_zero(e.zeta_restricted)


def test_ctilde_ranks():
    for l in range(1, 9):
        e = build_family("Ctilde", l)
        assert e.m == l and e.restricted.dimension == l


def test_pi_hat_partition():
    for e in all_families():
        pos = set(e.pi_hat)
        neg = {la.neg(a) for a in e.pi_hat}
        assert not pos & neg
        assert pos | neg == set(e.restricted.roots)


def test_pi_hat_examples(g2tilde):
    assert g2tilde.pi_hat == (v(1), v(3))
    assert simple_positive_roots(one_dim(1, -1)) == (v(1),)
    with pytest.raises(CatalogError, match="no partner"):
        simple_positive_roots(one_dim(1, -1, 2))


def test_simplicity():
    for e in all_families():
        assert check_simplicity(e)
    rs = one_dim(1, -1, 2, -2)
    assert not check_simplicity(rs)
    assert (v(2), v(1), v(1)) in simplicity_violations(rs, simple_positive_roots(rs))


def test_errata():
    g1 = build_family("G1tilde")
    assert g1.errata and g1.restricted.roots == (v(-1), v(1))
    with pytest.raises(CatalogError, match="restricts to zero"):
        build_family("G1tilde", unpatched=True)
    assert build_family("E7tilde").errata
    with pytest.raises(CatalogError, match="expected 33"):
        build_family("E7tilde", unpatched=True)
    assert not build_family("E6tilde").errata


def test_bad_parameters():
    with pytest.raises(CatalogError):
        build_family("Ctilde")
    with pytest.raises(CatalogError):
        build_family("Ctilde", 0)
    with pytest.raises(CatalogError):
        build_family("F4tilde", 2)
    with pytest.raises(CatalogError, match="unknown family"):
        canonical_family("H4")
    assert canonical_family("e6") == "E6tilde"
    assert set(FAMILIES) == {canonical_family(f) for f in FAMILIES}


def test_entry_json(g2tilde):
    data = g2tilde.to_json()
    assert data["m"] == 2 and data["nilradical_dim"] == 5
    assert data["zeta"]["restricted"] == ["0"]
    assert RootSet.from_json(data["restricted"]) == g2tilde.restricted
