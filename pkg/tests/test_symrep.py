import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exgates.symrep import (
    GroupAlgebraElement,
    Partition,
    Permutation,
    StandardTableau,
    axial_distance,
    rep_adjacent,
    rep_element,
    rep_permutation,
    rep_transposition,
    standard_tableaux,
)

P21 = Partition((2, 1))
P3 = Partition((3,))
P33 = Partition((3, 3))
P42 = Partition((4, 2))


def brute_force_tableaux(parts):
    """Independent enumeration: filter all fillings for standardness."""
    n = sum(parts)
    found = []
    for perm in itertools.permutations(range(1, n + 1)):
        rows, k = [], 0
        for p in parts:
            rows.append(perm[k:k + p])
            k += p
        if any(a >= b for row in rows for a, b in zip(row, row[1:])):
            continue
        ok = True
        for r in range(1, len(rows)):
            for c in range(len(rows[r])):
                if rows[r - 1][c] >= rows[r][c]:
                    ok = False
        if ok:
            found.append(rows)
    return found


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))
        with pytest.raises(ValueError):
            Partition(())

    def test_size_and_parts(self):
        p = Partition((4, 2))
        assert p.size == 6
        assert len(p) == 2


class TestStandardTableaux:
    def test_trivial_shape(self):
        tabs = standard_tableaux(P3)
        assert [t.rows for t in tabs] == [((1, 2, 3),)]

    def test_shape_21(self):
        tabs = standard_tableaux(P21)
        assert {t.rows for t in tabs} == {((1, 3), (2,)), ((1, 2), (3,))}
        assert len(tabs) == 2

    @pytest.mark.parametrize("shape,count", [(P33, 5), (P42, 9)])
    def test_counts_match_brute_force(self, shape, count):
        tabs = standard_tableaux(shape)
        assert len(tabs) == count
        brute = brute_force_tableaux(shape.parts)
        assert sorted(t.rows for t in tabs) == sorted(
            tuple(tuple(r) for r in rows) for rows in brute
        )

    def test_descending_row_word_order(self):
        tabs = standard_tableaux(P42)
        words = [t.row_word() for t in tabs]
        assert words == sorted(words, reverse=True)

    def test_invalid_tableau_rejected(self):
        with pytest.raises(ValueError):
            StandardTableau(((1, 2), (2,)))
        with pytest.raises(ValueError):
            StandardTableau(((2, 1), (3,)))
        with pytest.raises(ValueError):
            StandardTableau(((1, 2), (4,)))


class TestAxialDistance:
    def test_hand_values(self):
        assert axial_distance(StandardTableau(((1, 2), (3,))), 1, 2) == 1
        assert axial_distance(StandardTableau(((1, 3), (2,))), 1, 2) == -1

    def test_same_index_is_zero(self):
        for t in standard_tableaux(P42):
            assert axial_distance(t, 4, 4) == 0

    def test_antisymmetric(self):
        for t in standard_tableaux(P33):
            assert axial_distance(t, 2, 5) == -axial_distance(t, 5, 2)

    def test_out_of_range(self):
        t = standard_tableaux(P21)[0]
        with pytest.raises(IndexError):
            axial_distance(t, 0, 2)
        with pytest.raises(IndexError):
            axial_distance(t, 1, 4)


class TestRepAdjacent:
    def test_shape_21_generators(self):
        m12 = rep_adjacent(P21, 1).matrix
        m23 = rep_adjacent(P21, 2).matrix
        assert np.allclose(m12, np.diag([-1.0, 1.0]), atol=1e-15)
        s = np.sqrt(3) / 2
        assert np.allclose(m23, [[0.5, s], [s, -0.5]], atol=1e-15)

    def test_trivial_irrep(self):
        for i in (1, 2):
            assert np.allclose(rep_adjacent(P3, i).matrix, [[1.0]])

    @pytest.mark.parametrize("shape", [P21, P33, P42])
    def test_symmetric_orthogonal_involution(self, shape):
        dim = len(standard_tableaux(shape))
        for i in range(1, shape.size):
            m = rep_adjacent(shape, i).matrix
            assert np.allclose(m, m.T, atol=1e-12)
            assert np.allclose(m @ m, np.eye(dim), atol=1e-12)
            assert np.allclose(m @ m.T, np.eye(dim), atol=1e-12)

    def test_index_range(self):
        with pytest.raises(ValueError):
            rep_adjacent(P21, 3)


class TestRepElement:
    def test_identity(self):
        x = GroupAlgebraElement.identity(6)
        m = rep_element(P42, x).matrix
        assert np.allclose(m, np.eye(9), atol=0)

    def test_transposition_13_via_conjugation(self):
        lhs = rep_transposition(P21, 1, 3).matrix
        m12 = rep_adjacent(P21, 1).matrix
        m23 = rep_adjacent(P21, 2).matrix
        assert np.allclose(lhs, m23 @ m12 @ m23, atol=1e-14)

    @pytest.mark.parametrize("shape,c", [(P33, 3.0), (P42, 5.0)])
    def test_central_transposition_sum(self, shape, c):
        total = GroupAlgebraElement.from_transpositions(
            6, {(i, j): 1.0 for i in range(1, 7) for j in range(i + 1, 7)}
        )
        m = rep_element(shape, total).matrix
        assert np.max(np.abs(m - c * np.eye(m.shape[0]))) <= 1e-12

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            rep_element(P42, GroupAlgebraElement.identity(3))

    def test_linear(self):
        x = GroupAlgebraElement.transposition(6, 1, 4, 2.0)
        y = GroupAlgebraElement.transposition(6, 2, 5, -0.5j)
        lhs = rep_element(P42, x + y).matrix
        rhs = rep_element(P42, x).matrix + rep_element(P42, y).matrix
        assert np.allclose(lhs, rhs, atol=1e-14)


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(1, 7)), st.permutations(range(1, 7)))
def test_homomorphism_property(a_images, b_images):
    a = Permutation(tuple(a_images))
    b = Permutation(tuple(b_images))
    for shape in (P33, P42):
        lhs = rep_permutation(shape, a * b).matrix
        rhs = rep_permutation(shape, a).matrix @ rep_permutation(shape, b).matrix
        assert np.max(np.abs(lhs - rhs)) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(1, 7)))
def test_adjacent_word_reconstructs_permutation(images):
    perm = Permutation(tuple(images))
    prod = Permutation.identity(6)
    for a in perm.adjacent_word():
        prod = prod * Permutation.transposition(6, a, a + 1)
    assert prod == perm


class TestPermutation:
    def test_composition_applies_right_first(self):
        s12 = Permutation.transposition(3, 1, 2)
        s23 = Permutation.transposition(3, 2, 3)
        assert (s12 * s23).images == (2, 3, 1)

    def test_inverse(self):
        p = Permutation((3, 1, 4, 2))
        assert (p * p.inverse()).is_identity()

    def test_validation(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 2))


class TestGroupAlgebra:
    def test_zero_terms_dropped(self):
        x = GroupAlgebraElement.transposition(6, 1, 2) - GroupAlgebraElement.transposition(6, 1, 2)
        assert len(x) == 0

    def test_product_expands_term_by_term(self):
        x = GroupAlgebraElement.transposition(3, 1, 2, 2.0)
        y = GroupAlgebraElement.transposition(3, 2, 3, 3.0)
        z = x * y
        assert len(z) == 1
        ((perm, coeff),) = z.terms.items()
        assert coeff == 6.0
        assert perm.images == (2, 3, 1)

    def test_product_matches_rep_product(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            a = Permutation(tuple(int(v) for v in rng.permutation(6) + 1))
            b = Permutation(tuple(int(v) for v in rng.permutation(6) + 1))
            x = GroupAlgebraElement(6, {a: 1.5})
            y = GroupAlgebraElement(6, {b: -2.0j})
            lhs = rep_element(P42, x * y).matrix
            rhs = rep_element(P42, x).matrix @ rep_element(P42, y).matrix
            assert np.allclose(lhs, rhs, atol=1e-12)

    def test_adjoint_is_hermitian_conjugate(self):
        rng = np.random.default_rng(6)
        x = GroupAlgebraElement(6)
        for _ in range(4):
            p = Permutation(tuple(int(v) for v in rng.permutation(6) + 1))
            x = x + GroupAlgebraElement(6, {p: complex(rng.normal(), rng.normal())})
        m = rep_element(P42, x).matrix
        madj = rep_element(P42, x.adjoint()).matrix
        assert np.allclose(madj, m.conj().T, atol=1e-12)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            GroupAlgebraElement.identity(3) + GroupAlgebraElement.identity(6)


def test_irrep_matrix_json_round_trip():
    m = rep_adjacent(P21, 2)
    data = m.to_json()
    assert data["irrep"] == [2, 1]
    entries = np.array([[complex(re, im) for re, im in row] for row in data["entries"]])
    assert np.allclose(entries, m.matrix)
