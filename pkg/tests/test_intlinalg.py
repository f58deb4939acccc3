"""Exact integer linear algebra: frozen examples plus randomized certificates."""

import random
from itertools import combinations
from math import gcd

import pytest

from ck_invariants.intlinalg import (
    DimensionError,
    FgAbelianGroup,
    IntMatrix,
    cokernel_invariants,
    det,
    hnf,
    kernel_basis,
    lattices_equal,
    snf,
    solve_linear,
)


def random_matrix(rng, max_dim=6, lo=-9, hi=9, allow_empty=False):
    low = 0 if allow_empty else 1
    rows = rng.randrange(low, max_dim + 1)
    cols = rng.randrange(low, max_dim + 1)
    return IntMatrix.from_rows(
        [[rng.randrange(lo, hi + 1) for _ in range(cols)] for _ in range(rows)], cols=cols
    )


def det_recursive(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * det_recursive(minor)
    return total


def naive_invariant_factors(rows):
    """Independent oracle: invariant factors via determinantal divisors.

    The gcd of all k-by-k minors is the k-th determinantal divisor, and
    consecutive quotients are the invariant factors.  No elimination, no
    shared code with the library path.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    prev = 1
    factors = []
    for k in range(1, min(n_rows, n_cols) + 1):
        g = 0
        for ri in combinations(range(n_rows), k):
            for ci in combinations(range(n_cols), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = gcd(g, det_recursive(sub))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors


class TestHnf:
    def test_worked_example(self):
        m = IntMatrix.from_rows([[2, 4], [1, 1]])
        h, u = hnf(m)
        assert h.to_lists() == [[1, 1], [0, 2]]
        assert u @ m == h
        assert abs(det(u)) == 1

    def test_identity_fixed(self):
        eye = IntMatrix.identity(4)
        h, u = hnf(eye)
        assert h == eye and u == eye

    def test_zero_matrix(self):
        z = IntMatrix.zeros(3, 2)
        h, u = hnf(z)
        assert h == z and u == IntMatrix.identity(3)

    def test_shape_properties_random(self):
        rng = random.Random(101)
        for _ in range(150):
            m = random_matrix(rng, allow_empty=True)
            h, u = hnf(m)
            assert u @ m == h
            assert abs(det(u)) == 1
            pivots = []
            for i in range(h.rows):
                row = h.row(i)
                col = next((j for j, v in enumerate(row) if v != 0), None)
                if col is None:
                    # all rows below an empty row are empty too
                    assert all(v == 0 for r in range(i, h.rows) for v in h.row(r))
                    break
                assert h.at(i, col) > 0
                if pivots:
                    assert col > pivots[-1]
                for r in range(i):
                    assert 0 <= h.at(r, col) < h.at(i, col)
                pivots.append(col)


class TestSnf:
    def test_worked_examples(self):
        cert = snf(IntMatrix.from_rows([[0, -1], [-1, 0]]))
        assert cert.diagonal() == [1, 1]
        cert = snf(IntMatrix.from_rows([[6, 0], [0, 4]]))
        assert cert.diagonal() == [2, 12]
        cert = snf(IntMatrix.zeros(3, 3))
        assert cert.diagonal() == [0, 0, 0]

    def test_empty_matrices(self):
        for rows, cols in [(0, 0), (0, 3), (3, 0)]:
            m = IntMatrix.zeros(rows, cols)
            cert = snf(m)
            assert cert.holds_for(m)
            assert cert.u == IntMatrix.identity(rows)
            assert cert.v == IntMatrix.identity(cols)

    def test_certificates_random(self):
        rng = random.Random(202)
        for _ in range(200):
            m = random_matrix(rng, allow_empty=True)
            cert = snf(m)
            assert cert.holds_for(m)

    def test_transpose_same_factors(self):
        rng = random.Random(303)
        for _ in range(60):
            m = random_matrix(rng)
            assert snf(m).invariant_factors() == snf(m.transpose()).invariant_factors()

    def test_matches_determinantal_divisors(self):
        rng = random.Random(404)
        for _ in range(40):
            m = random_matrix(rng, max_dim=4, lo=-5, hi=5)
            assert snf(m).invariant_factors() == naive_invariant_factors(m.to_lists())


class TestKernel:
    def test_worked_examples(self):
        k = kernel_basis(IntMatrix.from_rows([[1, 1]]))
        assert k.cols == 1 and sorted(k.column(0)) == [-1, 1]
        k = kernel_basis(IntMatrix.from_rows([[0]]))
        assert k.to_lists() == [[1]]
        k = kernel_basis(IntMatrix.from_rows([[2, 1], [1, 1]]))  # det 1
        assert k.cols == 0

    def test_annihilation_and_saturation(self):
        rng = random.Random(505)
        for _ in range(120):
            m = random_matrix(rng, allow_empty=True)
            cert = snf(m)
            k = kernel_basis(m)
            for j in range(k.cols):
                assert all(v == 0 for v in m.apply(k.column(j)))
            assert k.cols == m.cols - len(cert.invariant_factors())
            if k.cols:
                # primitive basis: it extends to a basis of the ambient lattice
                assert all(f == 1 for f in snf(k).invariant_factors())

    def test_appending_kernel_vector_does_not_grow_lattice(self):
        rng = random.Random(606)
        for _ in range(40):
            m = random_matrix(rng, max_dim=4)
            k = kernel_basis(m)
            if k.cols == 0:
                continue
            coeffs = [rng.randrange(-3, 4) for _ in range(k.cols)]
            extra = k.apply(coeffs)
            grown = IntMatrix.from_columns(
                [k.column(j) for j in range(k.cols)] + [extra], rows=m.cols
            )
            assert lattices_equal(k, grown)


class TestCokernel:
    def test_worked_examples(self):
        assert cokernel_invariants(IntMatrix.from_rows([[0, -1], [-1, 0]])).is_trivial
        for n in range(2, 9):
            m = IntMatrix.from_rows(
                [[(1 if i == j else 0) - 1 for j in range(n)] for i in range(n)]
            )
            expected = FgAbelianGroup(0) if n == 2 else FgAbelianGroup(0, (n - 1,))
            assert cokernel_invariants(m) == expected
        assert cokernel_invariants(IntMatrix.zeros(2, 0)) == FgAbelianGroup(2)

    def test_unimodular_invariance(self):
        rng = random.Random(707)
        for _ in range(40):
            m = random_matrix(rng, max_dim=4)
            base = cokernel_invariants(m)
            left = random_unimodular(rng, m.rows)
            right = random_unimodular(rng, m.cols)
            assert cokernel_invariants((left @ m) @ right) == base


def random_unimodular(rng, n):
    """Product of random elementary row operations on the identity."""
    m = IntMatrix.identity(n).to_lists()
    for _ in range(3 * n):
        i = rng.randrange(n) if n else 0
        j = rng.randrange(n) if n else 0
        if n < 2 or i == j:
            continue
        op = rng.randrange(3)
        if op == 0:
            m[i], m[j] = m[j], m[i]
        elif op == 1:
            m[i] = [-v for v in m[i]]
        else:
            q = rng.randrange(-2, 3)
            m[i] = [a + q * b for a, b in zip(m[i], m[j])]
    return IntMatrix.from_rows(m, cols=n)


class TestSolve:
    def test_worked_examples(self):
        assert solve_linear(IntMatrix.from_rows([[2]]), [4]) == [2]
        assert solve_linear(IntMatrix.from_rows([[2]]), [3]) is None
        x = solve_linear(IntMatrix.from_rows([[1, 1]]), [5])
        assert x is not None and sum(x) == 5

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            solve_linear(IntMatrix.from_rows([[1, 2]]), [1, 2])

    def test_against_snf_solvability(self):
        rng = random.Random(808)
        for _ in range(150):
            m = random_matrix(rng, max_dim=4, lo=-4, hi=4)
            if rng.randrange(2):
                xs = [rng.randrange(-3, 4) for _ in range(m.cols)]
                b = m.apply(xs)
            else:
                b = [rng.randrange(-6, 7) for _ in range(m.rows)]
            x = solve_linear(m, b)
            # independent solvability criterion through the Smith form
            cert = snf(m)
            y = cert.u.apply(b)
            diag = cert.diagonal()
            solvable = True
            for i in range(m.rows):
                d = diag[i] if i < len(diag) else 0
                if d == 0:
                    solvable = solvable and y[i] == 0
                else:
                    solvable = solvable and y[i] % d == 0
            assert (x is not None) == solvable
            if x is not None:
                assert m.apply(x) == b


class TestFgAbelianGroup:
    def test_canonical_form_rules(self):
        with pytest.raises(ValueError):
            FgAbelianGroup(-1)
        with pytest.raises(ValueError):
            FgAbelianGroup(0, (1,))
        with pytest.raises(ValueError):
            FgAbelianGroup(0, (4, 6))  # 4 does not divide 6

    def test_describe(self):
        assert FgAbelianGroup(0).describe() == "0"
        assert FgAbelianGroup(1).describe() == "Z"
        assert FgAbelianGroup(2).describe() == "Z^2"
        assert FgAbelianGroup(1, (2, 6)).describe() == "Z + Z/2 + Z/6"
        assert FgAbelianGroup(0, (3,)).describe() == "Z/3"
