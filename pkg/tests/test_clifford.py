import numpy as np
import pytest

from cliffstring.clifford import TensorVector, cliff_conj, cliff_inner, gram_matrix
from cliffstring.matrices import hermiticity_residual
from cliffstring.octonion import Octonion

rng = np.random.default_rng(2718)


def rand_oct():
    return Octonion(rng.uniform(-1, 1, 8))


def basis_vector(kind, k, n):
    return TensorVector(n, {(kind, k): Octonion.unit(0)})


def rand_vector(n, n_terms=3):
    terms = {}
    for _ in range(n_terms):
        kind = ("E", "Estar", "F", "Fstar")[rng.integers(4)]
        k = int(rng.integers(1, n + 1))
        terms[(kind, k)] = rand_oct()
    return TensorVector(n, terms)


def test_basis_inner_products():
    """B(e_i, e_j*) = delta_ij and B(f_i, f_j*) = -delta_ij; same-kind pairs vanish."""
    n = 4
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            delta = 1.0 if i == j else 0.0
            ee = cliff_inner(basis_vector("E", i, n), basis_vector("Estar", j, n))
            ff = cliff_inner(basis_vector("F", i, n), basis_vector("Fstar", j, n))
            assert ee.c[0] == delta and np.all(ee.c[1:] == 0)
            assert ff.c[0] == -delta and np.all(ff.c[1:] == 0)
            for kind in ("E", "F"):
                same = cliff_inner(basis_vector(kind, i, n), basis_vector(kind, j, n))
                assert same.norm() == 0.0


def test_inner_is_real_bilinear():
    n = 3
    for _ in range(100):
        u, v, w = rand_vector(n), rand_vector(n), rand_vector(n)
        alpha = float(rng.uniform(-2, 2))
        lhs = cliff_inner(u.scale_left(Octonion.from_real(alpha)) + w, v)
        rhs = alpha * cliff_inner(u, v) + cliff_inner(w, v)
        assert (lhs - rhs).norm() <= 1e-12 * max(rhs.norm(), 1.0)


def test_conjugation_swaps_star_and_conjugates_coefficients():
    n = 2
    z = rand_oct()
    v = TensorVector(n, {("E", 1): z, ("Fstar", 2): rand_oct()})
    vc = cliff_conj(v)
    assert set(vc.terms) == {("Estar", 1), ("F", 2)}
    assert np.array_equal(vc.terms[("Estar", 1)].c, z.conj().c)


def test_inner_hermitian_symmetry():
    # inner(u, conj v) is the octonion conjugate of inner(v, conj u)
    n = 3
    for _ in range(100):
        u, v = rand_vector(n), rand_vector(n)
        a = cliff_inner(u, cliff_conj(v))
        b = cliff_inner(v, cliff_conj(u))
        assert (a - b.conj()).norm() <= 1e-12


def test_gram_matrix_is_exactly_hermitian():
    n = 4
    vs = [rand_vector(n) for _ in range(n)]
    g = gram_matrix(vs)
    assert g.n == n
    assert hermiticity_residual(g.data) == 0.0


def test_gram_entries_match_inner_products():
    n = 3
    vs = [rand_vector(n) for _ in range(n)]
    g = gram_matrix(vs)
    for i in range(n):
        for j in range(n):
            direct = cliff_inner(vs[i], cliff_conj(vs[j]))
            assert np.max(np.abs(g.data[i, j] - direct.c)) <= 1e-12


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        cliff_inner(rand_vector(2), rand_vector(3))


def test_bad_generator_index_rejected():
    with pytest.raises(ValueError):
        TensorVector(2, {("E", 3): Octonion.unit(0)})
    with pytest.raises(ValueError):
        TensorVector(2, {("G", 1): Octonion.unit(0)})


def test_json_roundtrip():
    v = rand_vector(3)
    w = TensorVector.from_json(v.to_json())
    assert w.n == v.n and set(w.terms) == set(v.terms)
    for key in v.terms:
        assert np.array_equal(w.terms[key].c, v.terms[key].c)
