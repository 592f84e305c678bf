"""Integer polynomials: trinomial discriminants, resultants, integer roots."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .numtheory import divisors


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        if not c:
            raise ValueError("the zero polynomial has no degree")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def trinomial(cls, n: int, m: int, A: int, B: int) -> IntPolynomial:
        """x^n + A x^m + B."""
        c = [0] * (n + 1)
        c[n] += 1
        c[m] += A
        c[0] += B
        return cls(tuple(c))

    @classmethod
    def sextic(cls, A: int, B: int) -> IntPolynomial:
        return cls.trinomial(6, 3, A, B)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:] or (0,))

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = (str(mag) if mag != 1 or not mono else "") + mono
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign} {body}")
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def swan_discriminant(n: int, m: int, A: int, B: int) -> int:
    """Discriminant of x^n + A x^m + B via the closed trinomial formula."""
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got n={n}, m={m}")
    d = gcd(n, m)
    inner = n ** (n // d) * B ** ((n - m) // d) - (-1) ** (n // d) * (n - m) ** (
        (n - m) // d
    ) * m ** (m // d) * A ** (n // d)
    return (-1) ** (n * (n - 1) // 2) * B ** (m - 1) * inner**d


def sextic_discriminant(A: int, B: int) -> int:
    """Discriminant of x^6 + A x^3 + B, i.e. 3^6 B^2 (A^2 - 4B)^3."""
    return 729 * B * B * (A * A - 4 * B) ** 3


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    fh, gh = f.coeffs[::-1], g.coeffs[::-1]
    rows = []
    for i in range(n):
        rows.append([0] * i + list(fh) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(gh) + [0] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    return bareiss_determinant(sylvester_matrix(f, g))


def discriminant_via_resultant(f: IntPolynomial) -> int:
    """(-1)^(n(n-1)/2) Res(f, f') for monic f, computed exactly."""
    if not f.is_monic():
        raise ValueError("discriminant_via_resultant needs a monic polynomial")
    n = f.degree
    if n < 2:
        raise ValueError("degree must be at least 2")
    return (-1) ** (n * (n - 1) // 2) * resultant(f, f.derivative())


def integer_roots_monic(f: IntPolynomial) -> list[int]:
    """Distinct integer roots of a monic integer polynomial, ascending."""
    if not f.is_monic():
        raise ValueError("integer_roots_monic needs a monic polynomial")
    coeffs = f.coeffs
    roots = set()
    if coeffs[0] == 0:
        roots.add(0)
        k = next(i for i, c in enumerate(coeffs) if c != 0)
        coeffs = coeffs[k:]
    if len(coeffs) > 1:
        g = IntPolynomial(coeffs)
        for d in divisors(coeffs[0]):
            for r in (d, -d):
                if g(r) == 0:
                    roots.add(r)
    return sorted(roots)
