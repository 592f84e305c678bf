import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from monosextic.polyz import (
    IntPolynomial,
    bareiss_determinant,
    discriminant_via_resultant,
    integer_roots_monic,
    resultant,
    sextic_discriminant,
    swan_discriminant,
    sylvester_matrix,
)

X = sympy.Symbol("x")
coef = st.integers(-60, 60).filter(bool)


@pytest.mark.parametrize(
    "args, value",
    [((6, 3, -1, 1), -19683), ((2, 1, 0, -1), 4), ((6, 3, 2, 2), -186624), ((3, 1, -3, 1), 81)],
)
def test_swan_examples(args, value):
    assert swan_discriminant(*args) == value


def test_sextic_discriminant_examples():
    assert sextic_discriminant(1, 1) == sextic_discriminant(-1, 1) == -19683 == -(3**9)
    assert sextic_discriminant(9, 2) == 4 * 729 * 389017 == 2**2 * 3**6 * (81 - 8) ** 3
    assert sextic_discriminant(28, 37) == 3**6 * 37**2 * (28**2 - 148) ** 3


@pytest.mark.parametrize(
    "coeffs, value",
    [((1, 0, 0, -1, 0, 0, 1), -19683), ((1, 0, 1), -4), ((1, -3, 0, 1), 81)],
)
def test_discriminant_via_resultant_examples(coeffs, value):
    assert discriminant_via_resultant(IntPolynomial(coeffs)) == value


def test_non_monic_rejected():
    with pytest.raises(ValueError):
        discriminant_via_resultant(IntPolynomial((1, 0, 2)))


@pytest.mark.parametrize("n", range(2, 10))
def test_swan_matches_resultant_and_sympy(n):
    for m in range(1, n):
        for A, B in ((3, -5), (-7, 2), (1, 1), (12, -9)):
            f = IntPolynomial.trinomial(n, m, A, B)
            want = int(sympy.discriminant(X**n + A * X**m + B, X))
            assert swan_discriminant(n, m, A, B) == discriminant_via_resultant(f) == want


@given(coef, coef)
def test_sextic_discriminant_triple(A, B):
    d = sextic_discriminant(A, B)
    assert d == swan_discriminant(6, 3, A, B) == discriminant_via_resultant(IntPolynomial.sextic(A, B))


@given(st.lists(st.lists(st.integers(-20, 20), min_size=5, max_size=5), min_size=5, max_size=5))
def test_bareiss_matches_sympy(rows):
    assert bareiss_determinant(rows) == sympy.Matrix(rows).det()


def test_resultant_of_coprime_and_shared_root():
    f = IntPolynomial((-1, 0, 1))  # x^2 - 1
    g = IntPolynomial((-1, 1))  # x - 1
    assert resultant(f, g) == 0
    h = IntPolynomial((2, 1))
    assert resultant(f, h) == int(sympy.resultant(X**2 - 1, X + 2, X))
    assert len(sylvester_matrix(f, h)) == 3


@pytest.mark.parametrize(
    "coeffs, roots",
    [((1, -3, 0, 1), []), ((4, -6, 0, 1), [2]), ((0, -1, 0, 1), [-1, 0, 1]), ((-3, 4, -1, 1), [])],
)
def test_integer_roots_examples(coeffs, roots):
    assert integer_roots_monic(IntPolynomial(coeffs)) == roots


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=4))
def test_integer_roots_from_constructed_polynomials(roots):
    # (x - r1)...(x - rk)(x^2 + 1)
    poly = sympy.Poly(sympy.prod([X - r for r in roots]) * (X**2 + 1), X)
    f = IntPolynomial(tuple(int(a) for a in reversed(poly.all_coeffs())))
    assert integer_roots_monic(f) == sorted(set(roots))


def test_polynomial_rendering_and_eval():
    f = IntPolynomial.sextic(-1, 1)
    assert str(f) == "x^6 - x^3 + 1"
    assert str(IntPolynomial((4, -6, 0, 1))) == "x^3 - 6x + 4"
    assert f(2) == 57 and f.degree == 6 and f.is_monic()
    assert f.derivative().coeffs == (0, 0, -3, 0, 0, 6)
    with pytest.raises(ValueError):
        IntPolynomial((0, 0))
