"""Exact integer arithmetic: factorization, squarefree tests, valuations, roots, CRT."""
from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from functools import lru_cache

TRIAL_BOUND = 100_000
DEFAULT_SEED = 20240601


def _seed() -> int:
    return int(os.environ.get("MONOSEXTIC_SEED", DEFAULT_SEED))


@lru_cache(maxsize=1)
def small_primes() -> tuple[int, ...]:
    """All primes below ``TRIAL_BOUND``."""
    n = TRIAL_BOUND
    sieve = bytearray([1]) * n
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n, i)))
    return tuple(i for i in range(n) if sieve[i])


# --- primality -----------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Miller-Rabin on the bases above is deterministic below this bound.
_MR_DETERMINISTIC = 3_317_044_064_679_887_385_961_981


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    if is_square(n):
        return False
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -d - 2 if d > 0 else -d + 2
    p, q = 1, (1 - d) // 4
    k, s = n + 1, 0
    while k % 2 == 0:
        k //= 2
        s += 1
    inv2 = (n + 1) // 2
    u, v, qk = 0, 2, 1
    # left-to-right binary Lucas chain for U_k, V_k
    for bit in bin(k)[2:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) * inv2 % n, (d * u + p * v) * inv2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test: deterministic Miller-Rabin below 3.3e24, Baillie-PSW above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    if not all(_strong_probable_prime(n, a) for a in _MR_BASES):
        return False
    if n < _MR_DETERMINISTIC:
        return True
    return _strong_lucas_prp(n)


# --- factorization -------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """``value == sign * prod(p**e for p, e in factors)`` with primes increasing."""

    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value == 0:
            raise ValueError("0 has no prime factorization")
        if self.sign not in (-1, 1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        prod = self.sign
        for p, e in self.factors:
            if e < 1 or not is_prime(p):
                raise ValueError(f"invalid factor {p}^{e}")
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors do not recompose to {self.value}")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __str__(self):
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        return ("-" if self.sign < 0 else "") + (body or "1")


def _brent_rho(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int], rng: random.Random) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = perfect_power_root(m, 2)
        if r is not None:
            stack += [r, r]
            continue
        d = _brent_rho(m, rng)
        stack += [d, m // d]


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Complete prime factorization of a nonzero integer.

    Trial division by primes below 1e5, then Brent's rho seeded from ``n``
    (and ``MONOSEXTIC_SEED``) so results and timings are reproducible.
    """
    if n == 0:
        raise ValueError("cannot factorize 0")
    sign = -1 if n < 0 else 1
    m = abs(n)
    found: dict[int, int] = {}
    for p in small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        if m < TRIAL_BOUND * TRIAL_BOUND or is_prime(m):
            found[m] = found.get(m, 0) + 1
        else:
            _split_large(m, found, random.Random(f"{_seed()}:{n}"))
    return Factorization(n, sign, tuple(sorted(found.items())))


def is_squarefree(n: int) -> bool:
    """True iff no prime square divides ``n``; units count as squarefree."""
    if n == 0:
        raise ValueError("squarefreeness of 0 is undefined")
    return all(e == 1 for _, e in factorize(n).factors)


def padic_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    if p < 2:
        raise ValueError(f"{p} is not a prime")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def integer_nth_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if k == 2:
        return math.isqrt(n)
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def perfect_power_root(n: int, k: int) -> int | None:
    """Integer c with c**k == n, or None. For even k the root is nonnegative."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 0:
        if k % 2 == 0:
            return None
        c = perfect_power_root(-n, k)
        return None if c is None else -c
    c = integer_nth_root(n, k)
    return c if c**k == n else None


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine x = r1 (mod m1), x = r2 (mod m2) into (r, m1*m2)."""
    if m1 < 1 or m2 < 1:
        raise ValueError("moduli must be positive")
    if math.gcd(m1, m2) != 1:
        raise ValueError(f"moduli {m1} and {m2} are not coprime")
    m = m1 * m2
    r = (r1 + m1 * ((r2 - r1) * pow(m1, -1, m2) % m2)) % m if m2 > 1 else r1 % m
    return r, m


def divisors(n: int) -> list[int]:
    """Positive divisors of a nonzero integer, ascending."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)
