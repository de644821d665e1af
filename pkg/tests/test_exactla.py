import random
from fractions import Fraction

import pytest

from chowcheck import exactla


def reference_rank(rows):
    """Plain Gauss elimination over Fraction, as an independent oracle."""
    rows = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_rank_small_cases():
    assert exactla.rank([[1, 2], [2, 4]]) == 1
    assert exactla.rank([[1, 0], [0, 1]]) == 2
    assert exactla.rank([[0, 0], [0, 0]]) == 0
    assert exactla.rank([]) == 0
    assert exactla.rank([[Fraction(1, 2), Fraction(1, 3)]]) == 1


def test_rank_matches_reference_on_random_matrices():
    rng = random.Random(20240817)
    for _ in range(60):
        m = rng.randrange(1, 7)
        n = rng.randrange(1, 7)
        rows = [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(m)]
        # salt in structured dependencies so low ranks actually occur
        if m >= 2 and rng.random() < 0.5:
            k = rng.randrange(rng.randrange(1, m) + 1)
            rows[-1] = [sum(r[j] for r in rows[:k]) if k else 0
                        for j in range(n)]
        assert exactla.rank(rows) == reference_rank(rows)


def test_rank_survives_many_elimination_steps():
    # regression shape: an f == 0 row must keep the uniform minor scaling,
    # otherwise a later exact division silently floors
    rng = random.Random(7)
    rows = []
    for i in range(14):
        row = [0] * 12
        for j in range(12):
            if rng.random() < 0.4:
                row[j] = rng.randrange(-30, 31)
        rows.append(row)
    assert exactla.rank(rows) == reference_rank(rows)


def test_kernel_basis_is_canonical_and_annihilating():
    rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]
    basis = exactla.kernel_basis(rows)
    assert len(basis) == 4 - exactla.rank(rows)
    for vec in basis:
        assert all(v == 0 for v in exactla.matvec(rows, vec))
    # one unit entry per free column, zeros at the other free columns
    free_cols = [j for j, vec in enumerate(zip(*basis)) if any(vec)]
    for vec in basis:
        units = [j for j, v in enumerate(vec) if v == 1]
        assert units


def test_rank_nullity_random():
    rng = random.Random(99)
    for _ in range(30):
        m, n = rng.randrange(1, 6), rng.randrange(1, 8)
        rows = [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(m)]
        assert exactla.rank(rows) + len(exactla.kernel_basis(rows)) == n


def test_modular_rank_certificate():
    cert = exactla.modular_rank([[1, 2], [3, 4]], prime=1000003)
    assert cert.rank == 2 and cert.certified
    cert = exactla.modular_rank([[1, 2], [2, 4]], prime=1000003)
    assert cert.rank == 1 and not cert.certified
    # caller-supplied upper bound
    cert = exactla.modular_rank([[1, 2], [2, 4]], prime=1000003, upper_bound=1)
    assert cert.certified


def test_modular_rank_rejects_bad_primes():
    with pytest.raises(exactla.BadPrime):
        exactla.modular_rank([[Fraction(1, 7)]], prime=7)
    with pytest.raises(exactla.BadPrime):
        exactla.modular_rank([[1]], prime=1)
    with pytest.raises(exactla.BadPrime):
        exactla.modular_rank([[1]], prime=2**62)


def test_modular_rank_never_exceeds_exact_rank():
    rng = random.Random(3)
    for _ in range(20):
        rows = [[rng.randrange(-20, 21) for _ in range(5)] for _ in range(4)]
        exact = exactla.rank(rows)
        assert exactla.modular_rank(rows, prime=1000003).rank <= exact


def test_hermite_normal_form_known_case():
    assert exactla.hermite_normal_form([[2, 4], [6, 8]]) == [[2, 0], [0, 4]]
    assert exactla.hermite_normal_form([[0, 0], [0, 0]]) == []
    assert exactla.hermite_normal_form([[3]]) == [[3]]
    assert exactla.hermite_normal_form([[-3]]) == [[3]]


def test_hermite_normal_form_idempotent_and_tracked():
    rng = random.Random(11)
    for _ in range(25):
        m, n = rng.randrange(1, 5), rng.randrange(1, 5)
        rows = [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(m)]
        hnf, U = exactla.hermite_normal_form(rows, transform=True)
        assert exactla.hermite_normal_form(hnf) == hnf
        for urow, hrow in zip(U, hnf):
            prod = [sum(u * rows[i][j] for i, u in enumerate(urow))
                    for j in range(n)]
            assert prod == hrow


def test_hnf_pivot_shape():
    hnf = exactla.hermite_normal_form([[4, 1, 0], [0, 3, 1], [2, 2, 2]])
    prev = -1
    for row in hnf:
        pc = next(j for j, x in enumerate(row) if x)
        assert pc > prev
        assert row[pc] > 0
        for above in hnf:
            if above is row:
                break
            assert 0 <= above[pc] < row[pc]
        prev = pc


def test_minimal_multiple_torsion_thirteen():
    rows = [[3, 1, -4], [1, -4, 3]]
    found = exactla.minimal_multiple_in_lattice(rows, [1, -1, 0])
    assert found.n == 13
    assert found.witness == [3, 4]
    target = [13, -13, 0]
    check = [sum(w * row[j] for w, row in zip(found.witness, rows))
             for j in range(3)]
    assert check == target


def test_minimal_multiple_edge_cases():
    rows = [[4, -4]]
    found = exactla.minimal_multiple_in_lattice(rows, [1, -1])
    assert found.n == 4 and found.witness == [1]
    # outside the rational span
    assert exactla.minimal_multiple_in_lattice([[1, 0]], [0, 1]) is None
    # the zero vector is trivially inside
    assert exactla.minimal_multiple_in_lattice([], [0, 0]).n == 1
    assert exactla.minimal_multiple_in_lattice([], [1, 0]) is None


def test_lattice_contains():
    rows = [[3, 1, -4], [1, -4, 3]]
    assert exactla.lattice_contains(rows, [13, -13, 0])
    assert not exactla.lattice_contains(rows, [1, -1, 0])
    assert exactla.lattice_contains(rows, [4, -3, -1])


def test_minimal_multiple_scaling_property():
    rng = random.Random(5)
    for _ in range(10):
        rows = [[rng.randrange(-4, 5) for _ in range(4)] for _ in range(3)]
        vec = [sum(r[j] for r in rows[:2]) for j in range(4)]
        found = exactla.minimal_multiple_in_lattice(rows, vec)
        assert found is not None and found.n == 1


def test_matrix_wrappers_reject_ragged_rows():
    with pytest.raises(ValueError):
        exactla.IntMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        exactla.ExactMatrix([[1], [2, 3]])
    m = exactla.IntMatrix([[1, 2], [3, 4]])
    assert m.rows() == [[1, 2], [3, 4]]
    assert exactla.rank(m) == 2
