import pytest

from origami_engine.errors import NegativeRadicand, OutOfRange, ReduciblePolynomial, UnsupportedTower
from origami_engine.fields import (
    Verdict,
    factorize,
    format_factors,
    is_pierpont_prime,
    is_prime,
    ngon_constructible,
    origami_degree_check,
    root_of_unity_thalian,
    thalian_classify,
    totally_real_quadratic,
)


# test the n-gon criterion on both sides of the line
@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8, 9, 12, 13, 17, 19, 27, 36, 73])
def test_ngon_constructible(n):
    assert ngon_constructible(n).constructible


@pytest.mark.parametrize("n", [11, 22, 23, 25, 29, 49])
def test_ngon_not_constructible(n):
    assert not ngon_constructible(n).constructible


# test verdict text names the failing prime
def test_ngon_reason():
    assert str(ngon_constructible(11)) == "not constructible: 11 − 1 = 2·5"
    assert "repeated" in ngon_constructible(25).reason
    assert str(ngon_constructible(36)) == "constructible: 36 = 2^2·3^2"
    with pytest.raises(OutOfRange):
        ngon_constructible(2)


# test primes and factorizations
def test_primes():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert format_factors(factorize(360)) == "2^3·3^2·5"
    assert format_factors(factorize(1)) == "1"
    assert [p for p in (5, 7, 11, 13, 97) if is_pierpont_prime(p)] == [5, 7, 13, 97]


def test_factorize_limits():
    with pytest.raises(OutOfRange):
        factorize(0)
    with pytest.raises(OutOfRange):
        factorize(10**7, bound=100)


# test factors far past trial division
def test_factorize_large():
    assert factorize(600851475143, bound=10**12) == [(71, 1), (839, 1), (1471, 1), (6857, 1)]  # noqa: PLR2004
    verdict = ngon_constructible(3 * 257 * 65537, bound=10**8)
    assert verdict.constructible
    assert not ngon_constructible(2 * 1000003, bound=10**7).constructible


# test sqrt(D) for negative squarefree D is not Thalian
@pytest.mark.parametrize("d", [-2, -3, -5, -6])
def test_imaginary_quadratic_not_thalian(d):
    result = thalian_classify(0, -d)
    assert result.verdict is Verdict.NON_THALIAN
    assert not result.passed


# test Gaussian rationals are Thalian
def test_gaussian_rationals_thalian():
    assert thalian_classify(0, 1).verdict is Verdict.THALIAN
    result = thalian_classify(1, 4, b_is_rational=True)
    assert result.verdict is Verdict.THALIAN
    assert result.certificate["b"] == "2"


def test_thalian_rejects_unsupported():
    with pytest.raises(UnsupportedTower):
        thalian_classify(1, 0)
    with pytest.raises(UnsupportedTower):
        thalian_classify(1, 2, b_is_rational=True)


# test roots of unity are Thalian exactly when 4 divides the order
@pytest.mark.parametrize("m", range(3, 25))
def test_root_of_unity(m):
    assert root_of_unity_thalian(m) == (m % 4 == 0)


def test_root_of_unity_small_order():
    with pytest.raises(OutOfRange):
        root_of_unity_thalian(2)


# test the degree condition on irreducible polynomials
def test_degree_check():
    cube = origami_degree_check([1, 0, 0, -2])
    assert cube.verdict is Verdict.DEGREE_PASS
    assert cube.certificate["factorization"] == "3"
    quartic = origami_degree_check([1, 0, -10, 0, 1])
    assert quartic.verdict is Verdict.DEGREE_PASS
    quintic = origami_degree_check([1, 0, 0, 0, -1, -1])
    assert quintic.verdict is Verdict.DEGREE_FAIL
    assert quintic.certificate["degree"] == 5  # noqa: PLR2004
    assert quintic.lines()[0] == "DegreeConditionFail"


def test_degree_check_rejects_reducible():
    with pytest.raises(ReduciblePolynomial):
        origami_degree_check([1, 0, -1])
    with pytest.raises(ReduciblePolynomial):
        origami_degree_check([3])


# test totally-real nested radicals and their conjugate certificate
def test_totally_real_quadratic():
    accepted = totally_real_quadratic(4, 2, 2)
    assert accepted.verdict is Verdict.TOTALLY_REAL
    assert accepted.certificate["conjugate_radicand_sign"] == 1
    rejected = totally_real_quadratic(2, 2, 2)
    assert rejected.verdict is Verdict.NOT_TOTALLY_REAL
    assert rejected.certificate["conjugate_radicand_sign"] == -1
    assert totally_real_quadratic(3, 1, 4).passed


def test_totally_real_rejects_negative():
    with pytest.raises(NegativeRadicand):
        totally_real_quadratic(1, -1, 4)
    with pytest.raises(NegativeRadicand):
        totally_real_quadratic(1, 1, -2)
