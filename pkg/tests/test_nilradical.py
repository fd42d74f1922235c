import pytest

from sysroots import linalg as la
from sysroots.catalog import all_families, build_family
from sysroots.linalg import Matrix
from sysroots.nilradical import (NilradicalError, adjoint_matrix, build_nilradical, check_antisymmetry,
                                 check_jacobi, check_sandwich, decompose_adjoint, derived_rank,
                                 rep_matrices, root_subalgebra, sandwich_index)

from conftest import one_dim, v


@pytest.mark.parametrize("family, dim", [("G1tilde", 3), ("G2tilde", 5), ("F4tilde", 15)])
def test_dimensions(family, dim):
    alg = build_nilradical(build_family(family))
    assert alg.dim == dim
    assert alg.labels[alg.centre] == "zeta"
    assert len(alg.brackets) == dim - 1


def test_structure(g2tilde):
    alg = build_nilradical(g2tilde)
    assert not check_jacobi(alg)
    assert not check_antisymmetry(alg)
    assert not check_sandwich(alg)
    assert derived_rank(alg) == 1
    assert sandwich_index(alg) == 2
    assert alg.basis == (v(1), v(3), v(-3), v(-1), v(0))


def test_adjoint_examples(g1tilde):
    alg = build_nilradical(g1tilde)
    assert adjoint_matrix(alg, "zeta").is_zero()
    ad = adjoint_matrix(alg, v(-1))
    # X_-a sends X_a to -X_zeta
    assert ad.apply(alg.unit(alg.index(v(1)))) == la.scale(-1, alg.unit(alg.centre))
    assert ad.rank() == 1
    assert la.nilpotency_index(ad) == 2
    assert la.jordan_type(ad) == [2, 1]
    with pytest.raises(NilradicalError):
        alg.index("nope")
    with pytest.raises(NilradicalError):
        alg.index(99)


def test_bare_rootset():
    alg = build_nilradical(roots=one_dim(1, -1, 2, -2))
    assert alg.dim == 5 and alg.labels[0] == "X(1)"
    with pytest.raises(NilradicalError):
        build_nilradical()


def test_root_subalgebra(g2tilde):
    alg = build_nilradical(g2tilde)
    sub = root_subalgebra(alg, v(3))
    assert sub.relations_hold()
    assert sub.generators() == {"X+": 1, "X-": 2, "H": 4}
    with pytest.raises(NilradicalError):
        root_subalgebra(alg, v(-1))


def test_rep_matrices_small():
    r0 = rep_matrices(0)
    assert r0.rho_x.is_zero() and r0.rho_y.is_zero() and r0.rho_h.is_zero() and r0.rho_x.shape == (1, 1)
    r1 = rep_matrices(1)
    assert r1.rho_y == Matrix.lower_jordan_block(2) and r1.rho_x.is_zero() and r1.rho_h.is_zero()
    r2 = rep_matrices(2)
    assert r2.rho_h[2, 0] == 2
    assert sum(1 for row in r2.rho_h.rows for x in row if x) == 1
    assert la.commutator(r2.rho_x, r2.rho_y) == r2.rho_h
    with pytest.raises(ValueError):
        rep_matrices(-1)


@pytest.mark.parametrize("n", range(7))
def test_rep_matrices_relations(n):
    r = rep_matrices(n)
    assert r.relations_hold()
    assert la.nilpotency_index(r.rho_y) == n + 1
    assert r.to_json()["n"] == n


def test_decompose_g1(g1tilde):
    alg = build_nilradical(g1tilde)
    rep = decompose_adjoint(alg, root_subalgebra(alg, alg.pi_hat[0]))
    assert rep.jordan_type == (2, 1)
    (space,) = rep.chain_spaces
    assert space.dim == 3 and (space.q, space.p) == (2, 0)
    assert space.invariant and not space.matches_irreducible


def test_decompose_g2_single_root_space(g2tilde):
    alg = build_nilradical(g2tilde)
    rep = decompose_adjoint(alg, root_subalgebra(alg, v(1)))
    space = next(c for c in rep.chain_spaces if c.top == v(3))
    assert space.dim == 1 and space.invariant and space.matches_irreducible
    assert sum(c.dim for c in rep.chain_spaces) == alg.dim


def test_decompose_partitions_every_family():
    for e in all_families(range(1, 4)):
        alg = build_nilradical(e)
        for a in alg.pi_hat:
            rep = decompose_adjoint(alg, root_subalgebra(alg, a))
            idx = sorted(i for c in rep.chain_spaces for i in c.indices)
            assert idx == list(range(alg.dim))
            assert rep.jordan_type == (2,) + (1,) * (alg.dim - 2)
            assert all(c.invariant for c in rep.chain_spaces)
