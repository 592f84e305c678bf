"""Polynomials over prime fields F_p and their factorization.

Coefficient lists are ascending; the zero polynomial is ``[]``. Python integers
make every product exact, so moduli up to 2^63 and beyond are safe.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .numtheory import _seed, is_prime


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(q), _trim(a[:db])


def _mod(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gcd(a, b, p):
    while b:
        a, b = b, _mod(a, b, p)
    return _monic(a, p)


def _powmod(base, e, f, p):
    result = [1]
    base = _mod(base, f, p)
    while e:
        if e & 1:
            result = _mod(_mul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _mod(_mul(base, base, p), f, p)
    return result


def _deriv(a, p):
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _pth_root(a, p):
    # a(x) = b(x^p) with p | every exponent; over F_p, b(x)^p = b(x^p).
    return [a[i] for i in range(0, len(a), p)]


@dataclass(frozen=True)
class ModPolynomial:
    """Polynomial over F_p with coefficients reduced into [0, p)."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        p = self.modulus
        if p < 2:
            raise ValueError(f"modulus {p} is not prime")
        object.__setattr__(self, "coeffs", tuple(_trim([int(c) % p for c in self.coeffs])))

    @classmethod
    def reduce(cls, coeffs, p: int) -> ModPolynomial:
        return cls(p, tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> ModPolynomial:
        return ModPolynomial(self.modulus, tuple(_monic(list(self.coeffs), self.modulus)))

    def _check(self, other: ModPolynomial) -> int:
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
        return self.modulus

    def __add__(self, other):
        p = self._check(other)
        return ModPolynomial(p, tuple(_add(list(self.coeffs), list(other.coeffs), p)))

    def __sub__(self, other):
        p = self._check(other)
        return ModPolynomial(p, tuple(_sub(list(self.coeffs), list(other.coeffs), p)))

    def __mul__(self, other):
        p = self._check(other)
        return ModPolynomial(p, tuple(_mul(list(self.coeffs), list(other.coeffs), p)))

    def __divmod__(self, other):
        p = self._check(other)
        q, r = _divmod(list(self.coeffs), list(other.coeffs), p)
        return ModPolynomial(p, tuple(q)), ModPolynomial(p, tuple(r))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        out = ModPolynomial(self.modulus, (1,))
        for _ in range(e):
            out = out * self
        return out

    def derivative(self) -> ModPolynomial:
        return ModPolynomial(self.modulus, tuple(_deriv(list(self.coeffs), self.modulus)))

    def __str__(self):
        terms = [
            (f"{c}" if c != 1 or i == 0 else "") + ("" if i == 0 else "x" if i == 1 else f"x^{i}")
            for i, c in reversed(list(enumerate(self.coeffs)))
            if c
        ]
        return (" + ".join(terms) or "0") + f" (mod {self.modulus})"


def gcd_mod_p(u: ModPolynomial, v: ModPolynomial) -> ModPolynomial:
    """Monic gcd; gcd(u, 0) is monic(u)."""
    p = u._check(v)
    return ModPolynomial(p, tuple(_gcd(list(u.coeffs), list(v.coeffs), p)))


def squarefree_decomposition(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Monic squarefree factors with multiplicities (Yun, adapted to characteristic p)."""
    f = _monic(f, p)
    out: list[tuple[list[int], int]] = []
    if len(f) <= 1:
        return out
    df = _deriv(f, p)
    if not df:
        for g, e in squarefree_decomposition(_pth_root(f, p), p):
            out.append((g, e * p))
        return out
    c = _gcd(f, df, p)
    w = _divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = _gcd(w, c, p)
        z = _divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w, c = y, _divmod(c, y, p)[0]
    if len(c) > 1:
        for g, e in squarefree_decomposition(_pth_root(c, p), p):
            out.append((g, e * p))
    return out


def distinct_degree_factorization(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split a monic squarefree f into products of irreducibles of equal degree d."""
    out = []
    h = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd(f, _sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod(f, g, p)[0]
            h = _mod(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree_split(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t, s = a, a
            for _ in range(d - 1):
                s = _mod(_mul(s, s, p), f, p)
                t = _add(t, s, p)
            cand = t
        else:
            cand = _sub(_powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = _gcd(f, cand, p)
        if 1 < len(g) < len(f):
            return _equal_degree_split(g, d, p, rng) + _equal_degree_split(_divmod(f, g, p)[0], d, p, rng)


def factor_mod_p(f: ModPolynomial) -> list[tuple[ModPolynomial, int]]:
    """Factor f into monic irreducibles over F_p.

    Returns ``[(factor, multiplicity), ...]`` sorted by (degree, coefficients).
    The leading coefficient of f times the product of the factors is f.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    p = f.modulus
    rng = random.Random(f"{_seed()}:{p}:{f.coeffs}")
    result = []
    for part, e in squarefree_decomposition(list(f.coeffs), p):
        for block, d in distinct_degree_factorization(part, p):
            for g in _equal_degree_split(block, d, p, rng):
                result.append((ModPolynomial(p, tuple(g)), e))
    result.sort(key=lambda fe: (fe[0].degree, fe[0].coeffs[::-1], fe[1]))
    return result


def is_squarefree_mod_p(f: ModPolynomial) -> bool:
    return gcd_mod_p(f, f.derivative()).degree == 0


def cycle_type_mod_p(f: ModPolynomial) -> tuple[int, ...]:
    """Degrees of the irreducible factors of a squarefree f, descending."""
    if f.is_zero() or not is_squarefree_mod_p(f):
        raise ValueError(f"{f} is not squarefree")
    p = f.modulus
    degs = []
    for block, d in distinct_degree_factorization(_monic(list(f.coeffs), p), p):
        degs += [d] * ((len(block) - 1) // d)
    return tuple(sorted(degs, reverse=True))


def is_irreducible_mod_p(f: ModPolynomial) -> bool:
    """Rabin's test: x^(p^n) = x mod f and gcd(f, x^(p^(n/q)) - x) = 1 for primes q | n."""
    n = f.degree
    if n < 1:
        return False
    p = f.modulus
    g = _monic(list(f.coeffs), p)
    for q in (q for q in range(2, n + 1) if n % q == 0 and is_prime(q)):
        h = _powmod([0, 1], p ** (n // q), g, p)
        if len(_gcd(g, _sub(h, [0, 1], p), p)) > 1:
            return False
    return _mod(_sub(_powmod([0, 1], p**n, g, p), [0, 1], p), g, p) == []
