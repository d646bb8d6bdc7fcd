"""Exact-core oracles: HNF/SNF, kernels, saturation, charpoly, cyclotomics."""

import random
from math import gcd

import pytest

from afftool.intlinalg import (
    IntLattice,
    IntMatrix,
    complete_basis,
    hnf,
    image_lattice,
    int_rank,
    kernel_lattice,
    snf,
)
from afftool.intpoly import (
    IntPoly,
    cyclotomic,
    cyclotomic_factorization,
    cyclotomic_part,
    euler_phi,
    poly_gcd,
    squarefree_decomposition,
)


def random_unimodular(n, rng, steps=8, bound=3):
    """Product of random shears and signed permutations; entries grow with steps."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        for r in range(n):
            m[r][j] += c * m[r][i]
        if max(abs(x) for row in m for x in row) > bound * 100:
            break
    if rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        for r in range(n):
            m[r][i], m[r][j] = m[r][j], -m[r][i]
    return IntMatrix(m)


def random_int_matrix(n, m, rng, bound=3):
    return IntMatrix([[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)])


# -- hnf ---------------------------------------------------------------------


def test_hnf_spec_example():
    m = IntMatrix([[2, 4], [0, 6]])
    h, u = hnf(m)
    assert h == IntMatrix([[2, 0], [0, 6]])
    assert abs(u.det()) == 1
    assert m * u == h


def test_hnf_identity_and_zero():
    ident = IntMatrix.identity(3)
    h, u = hnf(ident)
    assert h == ident and u == ident
    z = IntMatrix.zeros(2, 2)
    h, u = hnf(z)
    assert h == z and u == IntMatrix.identity(2)


def test_hnf_random_properties():
    rng = random.Random(11)
    for _ in range(60):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        a = random_int_matrix(n, m, rng)
        h, u = hnf(a)
        assert abs(u.det()) == 1
        assert a * u == h
        # echelon shape: pivot rows strictly increase, zero columns trail
        pivots = []
        for j in range(h.ncols):
            col = h.column(j)
            nz = [i for i in range(n) if col[i] != 0]
            if not nz:
                assert all(not any(h.column(k)) for k in range(j, h.ncols))
                break
            pivots.append(nz[0])
        assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
        for rank_j, prow in enumerate(pivots):
            piv = h[prow, rank_j]
            assert piv > 0
            for left in range(rank_j):
                assert 0 <= h[prow, left] < piv


def test_hnf_canonical_for_equal_lattices():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(2, 4)
        a = random_int_matrix(n, n, rng)
        u = random_unimodular(n, rng)
        l1 = IntLattice.from_generators(n, IntMatrix(a.rows).columns())
        l2 = IntLattice.from_generators(n, (a * u).columns())
        assert l1 == l2


# -- snf ---------------------------------------------------------------------


def test_snf_random_properties():
    rng = random.Random(23)
    for _ in range(60):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        a = random_int_matrix(n, m, rng)
        d, p, q = snf(a)
        assert abs(p.det()) == 1 and abs(q.det()) == 1
        assert p * a * q == d
        diag = [d[i, i] for i in range(min(n, m))]
        for i in range(n):
            for j in range(m):
                if i != j:
                    assert d[i, j] == 0
        for x, y in zip(diag, diag[1:]):
            assert x >= 0 and y >= 0
            if x:
                assert y % x == 0 or y == 0


# -- kernel / saturation -----------------------------------------------------


def test_kernel_lattice_example_1_linear_part():
    a = IntMatrix([[1, 0, 0], [1, 1, 0], [2, 1, 1]])
    k = kernel_lattice(a - IntMatrix.identity(3))
    assert k.rank == 1


def test_kernel_identity_and_zero():
    assert kernel_lattice(IntMatrix.identity(3)).rank == 0
    k = kernel_lattice(IntMatrix.zeros(2, 2))
    assert k == IntLattice.full(2)


def test_kernel_is_saturated_and_annihilated():
    rng = random.Random(7)
    for _ in range(40):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        a = random_int_matrix(n, m, rng)
        k = kernel_lattice(a)
        assert k.rank == m - int_rank(a)
        for v in k.basis_vectors():
            assert all(x == 0 for x in a.apply(v))
        assert k.saturate() == k


def test_saturate_examples():
    l = IntLattice.from_generators(2, [(2, 0)])
    assert l.saturate() == IntLattice.from_generators(2, [(1, 0)])
    # an already-saturated lattice is a fixed point
    s = IntLattice.from_generators(2, [(1, 0)])
    assert s.saturate() == s
    # index check per spec: det drops from 8 to 2
    l2 = IntLattice.from_generators(2, [(2, 2), (0, 4)])
    sat = l2.saturate()
    assert abs(l2.basis.det()) == 8
    assert abs(sat.basis.det()) == 2
    assert sat == IntLattice.from_generators(2, [(1, 1), (0, 2)])


def test_saturate_idempotent_random():
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(1, 5)
        r = rng.randint(1, n)
        gens = [tuple(rng.randint(-4, 4) for _ in range(n)) for _ in range(r)]
        l = IntLattice.from_generators(n, gens)
        s = l.saturate()
        assert s.saturate() == s
        assert s.contains_lattice(l)


def test_complete_basis():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 5)
        r = rng.randint(0, n)
        gens = [tuple(rng.randint(-4, 4) for _ in range(n)) for _ in range(r)]
        lat = IntLattice.from_generators(n, gens).saturate()
        v = complete_basis(lat)
        assert abs(v.det()) == 1
        for j, col in enumerate(lat.basis_vectors()):
            assert v.column(j) == col


# -- charpoly ----------------------------------------------------------------


def test_charpoly_cat_map():
    a = IntMatrix([[2, 1], [1, 1]])
    assert a.charpoly() == IntPoly([1, -3, 1])


def test_charpoly_identity_and_companion():
    ident = IntMatrix.identity(3)
    assert ident.charpoly() == IntPoly([-1, 3, -3, 1])  # (x-1)^3
    p = IntPoly([1, -3, 0, 1])  # x^3 - 3x + 1
    assert IntMatrix.companion(p).charpoly() == p


def test_charpoly_similarity_invariant():
    rng = random.Random(42)
    for _ in range(30):
        n = rng.randint(2, 5)
        a = random_int_matrix(n, n, rng)
        u = random_unimodular(n, rng)
        b = u * a * u.inverse_unimodular()
        assert a.charpoly() == b.charpoly()


# -- cyclotomics -------------------------------------------------------------


def test_cyclotomic_small_values():
    assert cyclotomic(1) == IntPoly([-1, 1])
    assert cyclotomic(2) == IntPoly([1, 1])
    assert cyclotomic(4) == IntPoly([1, 0, 1])
    assert cyclotomic(6) == IntPoly([1, -1, 1])


def test_cyclotomic_product_identity():
    # prod over d | k of Phi_d = x^k - 1
    for k in (1, 2, 3, 4, 6, 8, 12):
        prod = IntPoly.one()
        for d in range(1, k + 1):
            if k % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == IntPoly.monomial(k) - IntPoly.one()


def test_euler_phi():
    assert [euler_phi(k) for k in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_part_examples():
    assert cyclotomic_part(IntPoly([1, -3, 1])).is_one()
    p = IntPoly([-1, 3, -3, 1])  # (x-1)^3
    assert cyclotomic_part(p) == p
    q = IntPoly([-1, 1]) * IntPoly([1, -3, 1])
    assert cyclotomic_part(q) == IntPoly([-1, 1])


def test_cyclotomic_part_degree_counts_gcd():
    # product over k of gcd-extracted factors matches cyclotomic_part, with multiplicity
    rng = random.Random(17)
    pool = [cyclotomic(1), cyclotomic(2), cyclotomic(3), cyclotomic(6)]
    hyp = IntPoly([1, -3, 1])
    for _ in range(20):
        p = IntPoly.one()
        for f in pool:
            for _ in range(rng.randint(0, 2)):
                p = p * f
        p = p * hyp ** rng.randint(0, 1)
        cp = cyclotomic_part(p)
        expected = IntPoly.one()
        for k, mult in cyclotomic_factorization(p):
            expected = expected * cyclotomic(k) ** mult
        assert cp == expected
        assert cp.divides(p)
        rest = p.try_divide(cp)
        assert rest is not None
        assert cyclotomic_part(rest).is_one()


def test_poly_gcd_and_squarefree():
    a = IntPoly([-1, 1]) ** 2 * IntPoly([1, -3, 1])
    b = IntPoly([-1, 1]) * IntPoly([1, 1])
    assert poly_gcd(a, b) == IntPoly([-1, 1])
    dec = squarefree_decomposition(a)
    assert (IntPoly([1, -3, 1]), 1) in dec
    assert (IntPoly([-1, 1]), 2) in dec


def test_matrix_power_and_inverse():
    a = IntMatrix([[2, 1], [1, 1]])
    assert a ** -1 == IntMatrix([[1, -1], [-1, 2]])
    assert a ** 0 == IntMatrix.identity(2)
    assert a ** 3 == a * a * a
    assert a ** -2 == (a ** -1) * (a ** -1)


def test_lattice_membership_and_restriction():
    lat = IntLattice.from_generators(3, [(1, 0, 2), (0, 2, 0)])
    assert lat.contains((1, 2, 2))
    assert not lat.contains((0, 1, 0))
    a = IntMatrix([[1, 0, 0], [0, 1, 0], [2, 0, 1]])
    sub = IntLattice.from_generators(3, [(1, 0, 2)])
    # a maps (1,0,2) to (1,0,4) which is not in sub
    assert not sub.is_invariant_under(a)
    fix = kernel_lattice(a - IntMatrix.identity(3))
    r = fix.restriction_matrix(a)
    assert r.is_identity()
