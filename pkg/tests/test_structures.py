import pytest
from hypothesis import given, strategies as st

from homassoc import (
    GF,
    QQ,
    BilinearMap,
    Coproduct,
    HomAlgebra,
    HomCoalgebra,
    LinearMap,
    bilinear_eval,
    apply_linear,
    check_algebra_morphism,
    check_associative,
    check_hom_algebra,
    check_hom_coalgebra,
    check_infinitesimal_compat,
    induce_algebra_by_composition,
)
from homassoc.errors import NotAssociative, NotMorphism
from homassoc.search import LIBRARY, library_algebra, random_hom_algebra, random_associative_algebra

import oracle
from conftest import dual_numbers, to_oracle, zero_algebra
from strategies import arrays, rngs

N2 = [[[0, 1], [1, 0]], [[0, 0], [0, 0]]]


def test_known_hom_algebras():
    assert check_hom_algebra(zero_algebra()).passed
    assert check_hom_algebra(dual_numbers()).passed


def test_n2_first_witness():
    A = HomAlgebra.from_arrays(QQ, N2, None, ("a", "b"))
    report = check_hom_algebra(A)
    assert not report.passed
    w = report.first
    assert w.identity == "hom-associativity"
    assert w.at == (0, 0, 0)
    # (a a) a = b a = 0, a (a a) = a b = a
    assert list(w.lhs) == [0, 0] and list(w.rhs) == [1, 0]


def test_coalgebra_examples(D):
    zero = Coproduct.zero(QQ, 2)
    assert check_hom_coalgebra(HomCoalgebra(QQ, zero, LinearMap.diag(QQ, [1, 2]))).passed
    # Delta(1) = 1 (x) x: (Delta (x) id) Delta(1) = 1 (x) x (x) x, (id (x) Delta) Delta(1) = 0
    bad = Coproduct(QQ, [[[0, 1], [0, 0]], [[0, 0], [0, 0]]])
    report = check_hom_coalgebra(HomCoalgebra(QQ, bad, D.alpha))
    assert report.failed_identities() == ["hom-coassociativity"]
    assert report.first.at == (0,)


def test_quasitriangular_coproduct_is_coassociative(D):
    # Delta'(1) = 0, Delta'(x) = x (x) x
    dp = Coproduct(QQ, [[[0, 0], [0, 0]], [[0, 0], [0, 1]]])
    assert check_hom_coalgebra(HomCoalgebra(QQ, dp, D.alpha)).passed
    assert check_infinitesimal_compat(D, dp).passed


def test_infinitesimal_compat_failure(D):
    assert check_infinitesimal_compat(D, Coproduct.zero(QQ, 2)).passed
    bad = Coproduct(QQ, [[[1, 0], [0, 0]], [[0, 0], [0, 0]]])
    report = check_infinitesimal_compat(D, bad)
    w = report.first
    assert w.at == (0, 0)
    # lhs = 1 (x) 1, rhs = 2 (1 (x) 1)
    assert w.lhs[0] == 1 and w.rhs[0] == 2


def test_induce_by_composition():
    f = GF(5)
    D5 = dual_numbers(f)
    assert induce_algebra_by_composition(D5, LinearMap.identity(f, 2)) == D5
    out = induce_algebra_by_composition(D5, LinearMap.diag(f, [1, 2]))
    assert list(out.mu.c[0, 1]) == [0, 2] and list(out.mu.c[1, 1]) == [0, 0]
    assert check_hom_algebra(out).passed
    with pytest.raises(NotMorphism):
        induce_algebra_by_composition(D5, LinearMap(f, [[0, 0], [1, 0]]))
    with pytest.raises(NotAssociative):
        induce_algebra_by_composition(HomAlgebra.from_arrays(f, N2), LinearMap.identity(f, 2))


# -- properties ----------------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3])
@given(data=st.data())
def test_checker_matches_oracle_on_arbitrary_tables(p, data):
    f = GF(p)
    n = data.draw(st.integers(1, 3))
    A = HomAlgebra.from_arrays(f, data.draw(arrays(f, (n, n, n))), data.draw(arrays(f, (n, n))))
    O = to_oracle(A)
    assert check_hom_algebra(A, multiplicative=False).passed == oracle.hom_associative(O)
    assert check_hom_algebra(A).passed == (oracle.hom_associative(O) and oracle.multiplicative(O))


@given(rng=rngs(), p=st.sampled_from([2, 3, 5]), n=st.integers(1, 3))
def test_checker_matches_oracle_on_hom_algebras(rng, p, n):
    A = random_hom_algebra(GF(p), n, rng)
    O = to_oracle(A)
    assert check_hom_algebra(A).passed
    assert oracle.hom_associative(O) and oracle.multiplicative(O)


def _random_vectors_agree(A, rng, trials=100):
    f = A.field
    for _ in range(trials):
        x, y, z = (f.random_array(rng, (A.dim,), bound=f.p or 3) for _ in range(3))
        lhs = bilinear_eval(A.mu, bilinear_eval(A.mu, x, y), apply_linear(A.alpha, z))
        rhs = bilinear_eval(A.mu, apply_linear(A.alpha, x), bilinear_eval(A.mu, y, z))
        if list(lhs) != list(rhs):
            return False
    return True


@given(rng=rngs(), data=st.data())
def test_basis_verdict_matches_random_vectors(rng, data):
    f = GF(5)
    n = data.draw(st.integers(1, 3))
    if data.draw(st.booleans()):
        A = random_hom_algebra(f, n, rng)
    else:
        A = HomAlgebra.from_arrays(f, data.draw(arrays(f, (n, n, n))), data.draw(arrays(f, (n, n))))
    basis_verdict = check_hom_algebra(A, multiplicative=False).passed
    assert basis_verdict == _random_vectors_agree(A, rng)


@given(rng=rngs(), n=st.integers(1, 3))
def test_induced_algebra_always_passes(rng, n):
    f = GF(3)
    A = random_associative_algebra(f, n, rng)
    phi = LinearMap(f, f.random_array(rng, (n, n), bound=3))
    if not check_algebra_morphism(A.mu, phi).passed:
        with pytest.raises(NotMorphism):
            induce_algebra_by_composition(A, phi)
        return
    assert check_hom_algebra(induce_algebra_by_composition(A, phi)).passed


@pytest.mark.parametrize("name", sorted(LIBRARY))
def test_identity_twist_is_plain_associativity(name):
    A = library_algebra(name, GF(3))
    assert check_hom_algebra(A).passed == check_associative(A.mu).passed


@given(data=st.data())
def test_identity_twist_degenerates_on_random_tables(data):
    f = GF(2)
    n = data.draw(st.integers(1, 3))
    mu = BilinearMap(f, data.draw(arrays(f, (n, n, n))))
    A = HomAlgebra(f, mu, LinearMap.identity(f, n))
    assert check_hom_algebra(A).passed == check_associative(mu).passed
