import random

import pytest

from censym.basis import (
    BasisIndex,
    CentroMatrix,
    SymSeq,
    basis_matrix,
    canon_index,
    canonical_basis,
    canonical_indices,
    coords,
    exchange_coords,
    fill_square,
    formula_applicable,
    formula_product,
    from_coords,
    half_ceil,
    idempotents,
    is_symmetric_sequence,
    matrix_to_seq,
    peirce_component,
    rank_of,
    seq_to_matrix,
    structure_constants,
)
from censym.matrices import Matrix, exchange, is_centrosymmetric, matrix_unit

from conftest import GF2, GF5, Q, Z


def labels(ring, n):
    return {ix.label: u for u, ix in enumerate(canonical_indices(n))}


def test_is_centrosymmetric_examples():
    assert is_centrosymmetric(exchange(Z, 4))
    assert is_centrosymmetric(Matrix.identity(Z, 5))
    assert not is_centrosymmetric(matrix_unit(Z, 2, 1, 1))


def test_centro_matrix_certifies():
    with pytest.raises(ValueError):
        CentroMatrix(matrix_unit(Z, 2, 1, 1))
    cm = CentroMatrix(exchange(Z, 3))
    assert cm.n == 3


def test_canonical_basis_n3():
    b = canonical_basis(Z, 3)
    assert [ix.label for ix, _ in b] == ["f1_1", "f1_2", "f1_3", "f2_1", "f2_2"]
    mats = {ix.label: m.inner for ix, m in b}
    assert mats["f1_1"] == matrix_unit(Z, 3, 1, 1) + matrix_unit(Z, 3, 3, 3)
    assert mats["f2_2"] == matrix_unit(Z, 3, 2, 2)
    assert mats["f1_2"] == matrix_unit(Z, 3, 1, 2) + matrix_unit(Z, 3, 3, 2)
    assert mats["f1_3"] == matrix_unit(Z, 3, 1, 3) + matrix_unit(Z, 3, 3, 1)
    assert mats["f2_1"] == matrix_unit(Z, 3, 2, 1) + matrix_unit(Z, 3, 2, 3)


def test_canonical_basis_small():
    b2 = canonical_basis(Z, 2)
    assert [ix.label for ix, _ in b2] == ["f1_1", "f1_2"]
    assert b2[0][1].inner == Matrix.identity(Z, 2)
    b1 = canonical_basis(Z, 1)
    assert len(b1) == 1 and b1[0][1].inner == Matrix.identity(Z, 1)


def test_rank_counts():
    for n in range(1, 13):
        assert len(canonical_indices(n)) == rank_of(n) == (n * n + 1) // 2


def test_canon_index():
    assert canon_index(3, 3, 1) == (1, 3)
    assert canon_index(3, 2, 3) == (2, 1)
    assert canon_index(4, 3, 2) == (2, 3)
    assert canon_index(5, 3, 5) == (3, 1)
    with pytest.raises(IndexError):
        canon_index(3, 0, 1)


def test_coords_examples():
    v = coords(CentroMatrix(Matrix.identity(Z, 3)))
    # basis order is lexicographic on (i, j): f1_1, f1_2, f1_3, f2_1, f2_2
    assert v == [1, 0, 0, 0, 1]
    assert exchange_coords(Z, 3) == [0, 0, 1, 0, 1]
    lab = labels(Z, 3)
    u = [0] * 5
    u[lab["f1_2"]] = 1
    assert coords(CentroMatrix(basis_matrix(Z, 3, 1, 2))) == u


def test_coords_round_trip(any_ring):
    rng = random.Random(13)
    for n in range(1, 9):
        for _ in range(5):
            v = [any_ring.sample(rng) for _ in range(rank_of(n))]
            assert coords(from_coords(any_ring, n, v)) == v


def test_from_coords_errors():
    with pytest.raises(ValueError):
        from_coords(Z, 3, [1, 2, 3])


def test_structure_constants_pinned_products():
    lab = labels(Z, 3)
    sc = structure_constants(Z, 3)

    def product(lu, lv):
        return {w: c for w, c in sc.get((lab[lu], lab[lv]), ())}

    assert product("f1_2", "f2_1") == {lab["f1_1"]: 1, lab["f1_3"]: 1}
    assert product("f2_1", "f1_2") == {lab["f2_2"]: 2}
    assert product("f1_3", "f1_3") == {lab["f1_1"]: 1}
    assert product("f1_1", "f1_2") == {lab["f1_2"]: 1}
    assert product("f2_2", "f2_2") == {lab["f2_2"]: 1}


@pytest.mark.parametrize("ring", [Z, GF2], ids=lambda r: r.literal())
def test_formula_matches_oracle(ring):
    for n in range(1, 9):
        idxs = canonical_indices(n)
        table = structure_constants(ring, n)
        for u, a in enumerate(idxs):
            for v, b in enumerate(idxs):
                f = formula_product(ring, n, a, b)
                if f is None:
                    assert not formula_applicable(n, a, b)
                    continue
                oracle = {(idxs[w].i, idxs[w].j): c for w, c in table.get((u, v), ())}
                assert oracle == f, (n, a.label, b.label)


def test_formula_degenerate_pairs_are_excluded():
    # the middle-row-times-middle-column products double up
    assert not formula_applicable(3, BasisIndex(3, 2, 1), BasisIndex(3, 1, 2))
    assert not formula_applicable(3, BasisIndex(3, 2, 2), BasisIndex(3, 2, 1))
    assert formula_applicable(3, BasisIndex(3, 1, 2), BasisIndex(3, 2, 1))
    assert formula_applicable(4, BasisIndex(4, 2, 2), BasisIndex(4, 2, 2))


def test_squares_of_antidiagonal_elements():
    # f[i, n+1-j] squared is f[i,j] when i == j, f[i,n+1-j] when i+j == n+1,
    # zero otherwise
    for n in range(2, 7):
        lab = labels(Z, n)
        sc = structure_constants(Z, n)
        k = half_ceil(n)
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                ci, cj = canon_index(n, i, n + 1 - j)
                u = lab[f"f{ci}_{cj}"]
                got = {w: c for w, c in sc.get((u, u), ())}
                if i == j:
                    expect = {lab["f%d_%d" % canon_index(n, i, j)]: 1}
                elif i + j == n + 1:
                    expect = {lab[f"f{ci}_{cj}"]: 1}
                else:
                    expect = {}
                assert got == expect, (n, i, j)


def test_idempotents():
    ids5 = idempotents(Z, 5)
    assert len(ids5) == 3
    assert ids5[2].inner == matrix_unit(Z, 5, 3, 3)
    total = ids5[0]
    for f in ids5[1:]:
        total = total + f
    assert total.inner == Matrix.identity(Z, 5)

    ids4 = idempotents(Z, 4)
    assert ids4[0].inner == matrix_unit(Z, 4, 1, 1) + matrix_unit(Z, 4, 4, 4)
    assert ids4[1].inner == matrix_unit(Z, 4, 2, 2) + matrix_unit(Z, 4, 3, 3)

    assert idempotents(Z, 1)[0].inner == Matrix.identity(Z, 1)

    for n in (2, 3, 4, 5, 6):
        ids = idempotents(Q, n)
        for i, fi in enumerate(ids):
            assert fi * fi == fi
            for j, fj in enumerate(ids):
                if i != j:
                    assert (fi * fj).inner == Matrix.zero(Q, n)


def test_peirce_components():
    assert [ix.label for ix, _ in peirce_component(Z, 3, 1, 1)] == ["f1_1", "f1_3"]
    assert [ix.label for ix, _ in peirce_component(Z, 3, 2, 2)] == ["f2_2"]
    assert [ix.label for ix, _ in peirce_component(Z, 4, 1, 2)] == ["f1_2", "f1_3"]
    with pytest.raises(IndexError):
        peirce_component(Z, 3, 1, 3)
    for n in range(1, 9):
        k = half_ceil(n)
        total = sum(
            len(peirce_component(Z, n, i, j))
            for i in range(1, k + 1)
            for j in range(1, k + 1)
        )
        assert total == rank_of(n)


def test_peirce_spans_are_corners():
    # every component element is fixed by f_i on the left and f_j on the right
    for n in (3, 4, 5):
        ids = idempotents(Z, n)
        k = half_ceil(n)
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                for _, m in peirce_component(Z, n, i, j):
                    assert ids[i - 1] * m * ids[j - 1] == m


def test_transpose_permutes_basis():
    for n in range(1, 8):
        idxs = canonical_indices(n)
        index_set = {(ix.i, ix.j) for ix in idxs}
        for ix in idxs:
            t = basis_matrix(Z, n, ix.i, ix.j).transpose()
            ti, tj = canon_index(n, ix.j, ix.i)
            assert (ti, tj) in index_set
            assert t == basis_matrix(Z, n, ti, tj)
            fixed = (ti, tj) == (ix.i, ix.j)
            assert fixed == (ix.i == ix.j or ix.i + ix.j == n + 1)


def test_seq_codec():
    s = SymSeq(Z, [7, 2, 2, 7])
    m = seq_to_matrix(s)
    assert m.inner == Matrix(Z, 2, [7, 2, 2, 7])
    assert matrix_to_seq(m) == s

    s9 = SymSeq(Z, [1, 2, 3, 4, 5, 4, 3, 2, 1])
    m9 = seq_to_matrix(s9)
    assert m9.inner == Matrix(Z, 3, [1, 2, 3, 4, 5, 4, 3, 2, 1])
    assert is_centrosymmetric(m9.inner)

    const = SymSeq(Q, [Q.one()] * 4)
    assert is_centrosymmetric(seq_to_matrix(const).inner)


def test_seq_codec_round_trip(any_ring):
    rng = random.Random(17)
    for n in (1, 2, 3, 4):
        total = n * n
        half = [any_ring.sample(rng) for _ in range((total + 1) // 2)]
        full = half + [half[total - 1 - i] for i in range(len(half), total)]
        s = SymSeq(any_ring, full)
        assert matrix_to_seq(seq_to_matrix(s)) == s


def test_seq_iff_centrosymmetric():
    rng = random.Random(19)
    for _ in range(20):
        entries = [Z.sample(rng) for _ in range(9)]
        m = fill_square(Z, entries)
        assert is_symmetric_sequence(entries) == is_centrosymmetric(m)


def test_seq_errors():
    with pytest.raises(ValueError):
        SymSeq(Z, [1, 2, 3])  # not symmetric
    with pytest.raises(ValueError):
        seq_to_matrix(SymSeq(Z, [1, 2, 1]))  # length 3 is not a square


def test_closure_on_basis_pairs():
    for ring in (Z, GF5):
        for n in (2, 3, 4, 5):
            b = canonical_basis(ring, n)
            for _, fu in b:
                for _, fv in b:
                    assert is_centrosymmetric((fu * fv).inner)


def test_from_coords_pinned_values():
    assert from_coords(Z, 3, [0, 0, 0, 0, 0]).inner == Matrix.zero(Z, 3)
    # unit coordinates sit at the diagonal indices (1,1) and (2,2)
    assert from_coords(Z, 3, [1, 0, 0, 0, 1]).inner == Matrix.identity(Z, 3)
