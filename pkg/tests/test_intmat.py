import doctest
import random

import numpy as np
import pytest

import cellspec.intmat as intmat_module
from cellspec.fibpoly import IntPolynomial
from cellspec.intmat import (
    IntMatrix,
    charpoly,
    gram,
    is_irreducible_nonneg,
    minpoly_symmetric,
    pf_vector,
    spectrum_in_range,
)
from oracles import charpoly_by_permutation_expansion


def test_doctests():
    assert doctest.testmod(intmat_module).failed == 0


class TestBasics:
    def test_construction(self):
        m = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert m.shape == (2, 2)
        assert m.rows == ((1, 2), (3, 4))
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])
        with pytest.raises(ValueError):
            IntMatrix.from_rows([])

    def test_identity_and_zeros(self):
        assert IntMatrix.identity(2).rows == ((1, 0), (0, 1))
        assert IntMatrix.zeros(2, 3).rows == ((0, 0, 0), (0, 0, 0))

    def test_arithmetic_matches_numpy(self):
        rng = random.Random(7)
        for _ in range(30):
            r, k, c = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4)
            a = IntMatrix.from_rows(
                [[rng.randint(-5, 5) for _ in range(k)] for _ in range(r)]
            )
            b = IntMatrix.from_rows(
                [[rng.randint(-5, 5) for _ in range(c)] for _ in range(k)]
            )
            prod = (a @ b).to_numpy()
            assert np.array_equal(prod, a.to_numpy() @ b.to_numpy())
            assert np.array_equal(
                a.transpose().to_numpy(), a.to_numpy().T
            )
        a = IntMatrix.from_rows([[1, 2], [3, 4]])
        b = IntMatrix.from_rows([[5, 6], [7, 8]])
        assert (a + b).rows == ((6, 8), (10, 12))
        assert (a - b).rows == ((-4, -4), (-4, -4))
        assert (3 * a).rows == ((3, 6), (9, 12))

    def test_trace_symmetry(self):
        m = IntMatrix.from_rows([[2, 1], [1, 2]])
        assert m.trace() == 4
        assert m.is_symmetric()
        assert not IntMatrix.from_rows([[1, 2], [3, 4]]).is_symmetric()

    def test_gram(self):
        b = IntMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
        assert gram(b, side="left").rows == ((2, 1), (1, 2))
        assert gram(b, side="right").rows == ((1, 1, 0), (1, 2, 1), (0, 1, 1))


class TestCharpoly:
    def test_against_permutation_expansion(self):
        rng = random.Random(99)
        for _ in range(60):
            n = rng.randint(1, 5)
            m = IntMatrix.from_rows(
                [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
            )
            assert charpoly(m) == charpoly_by_permutation_expansion(m.rows)

    def test_known(self):
        m = IntMatrix.from_rows([[2, 1], [1, 2]])
        assert charpoly(m) == IntPolynomial((3, -4, 1))
        assert str(charpoly(IntMatrix.identity(3))) == "x^3 - 3x^2 + 3x - 1"

    def test_minpoly_symmetric(self):
        d = IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
        assert minpoly_symmetric(d) == IntPolynomial((2, -3, 1))
        with pytest.raises(ValueError):
            minpoly_symmetric(IntMatrix.from_rows([[1, 2], [3, 4]]))


class TestSpectrum:
    def test_endpoints(self):
        assert spectrum_in_range(IntMatrix.from_rows([[0]]), 0, 4)
        assert spectrum_in_range(IntMatrix.from_rows([[3]]), 0, 4)
        assert not spectrum_in_range(IntMatrix.from_rows([[4]]), 0, 4)
        assert not spectrum_in_range(IntMatrix.from_rows([[-1]]), 0, 4)

    def test_two_by_two(self):
        assert not spectrum_in_range(
            IntMatrix.from_rows([[2, 2], [2, 2]]), 0, 4
        )  # eigenvalues 0 and 4
        assert spectrum_in_range(IntMatrix.from_rows([[2, 1], [1, 2]]), 0, 4)

    def test_matches_numpy_on_random_symmetric(self):
        rng = random.Random(4242)
        for _ in range(80):
            n = rng.randint(1, 5)
            raw = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
            sym = [
                [raw[i][j] + raw[j][i] for j in range(n)] for i in range(n)
            ]
            m = IntMatrix.from_rows(sym)
            eigs = np.linalg.eigvalsh(m.to_numpy())
            # stay away from numerically ambiguous boundary cases
            if np.any(np.abs(eigs) < 1e-9) or np.any(np.abs(eigs - 4) < 1e-9):
                continue
            expected = bool(np.all(eigs >= 0) and np.all(eigs < 4))
            assert spectrum_in_range(m, 0, 4) == expected, sym


class TestIrreducibility:
    def test_examples(self):
        assert is_irreducible_nonneg(IntMatrix.from_rows([[0, 1], [1, 0]]))
        assert not is_irreducible_nonneg(IntMatrix.from_rows([[1, 0], [0, 1]]))
        assert not is_irreducible_nonneg(IntMatrix.from_rows([[0, 1], [0, 0]]))
        assert is_irreducible_nonneg(IntMatrix.from_rows([[1]]))
        assert not is_irreducible_nonneg(IntMatrix.from_rows([[0]]))
        with pytest.raises(ValueError):
            is_irreducible_nonneg(IntMatrix.from_rows([[0, -1], [1, 0]]))

    def test_block_diagonal_is_reducible(self):
        m = IntMatrix.from_rows(
            [[2, 1, 0, 0], [1, 2, 0, 0], [0, 0, 2, 1], [0, 0, 1, 2]]
        )
        assert not is_irreducible_nonneg(m)


class TestPerronFrobenius:
    def test_against_numpy(self):
        rng = random.Random(31337)
        for _ in range(25):
            n = rng.randint(2, 6)
            raw = [[rng.randint(0, 3) for _ in range(n)] for _ in range(n)]
            sym = [
                [raw[i][j] + raw[j][i] + (2 if i == j else 0) for j in range(n)]
                for i in range(n)
            ]
            m = IntMatrix.from_rows(sym)
            if not is_irreducible_nonneg(m):
                continue
            lam, vec = pf_vector(m)
            eigs = np.linalg.eigvalsh(m.to_numpy())
            assert abs(lam - eigs[-1]) < 1e-8
            assert np.all(vec > 0)
            assert abs(np.max(vec) - 1) < 1e-12
            residual = m.to_numpy() @ vec - lam * vec
            assert np.max(np.abs(residual)) < 1e-8
