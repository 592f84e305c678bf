"""Monogenicity of trinomials x^n + A x^m + B with m | n.

Two layers live here. ``jks_prime_divides_index`` evaluates the general
Jakhar-Khanduja-Sangwan criterion for one prime. ``is_monogenic_sextic`` applies
the sextic specialization, whose mod-4 and mod-9 residue tables are regenerated
from the general criterion by ``derive_condition_tables`` rather than copied.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache

from .numtheory import factorize, padic_valuation
from .polyfq import ModPolynomial, gcd_mod_p
from .polyz import swan_discriminant


class DegenerateExponentWarning(UserWarning):
    """A p-exponent (j or l) is zero, so b1 or a1 collapses to 0."""


@dataclass(frozen=True)
class JksContext:
    n: int
    m: int
    A: int
    B: int
    p: int
    t: int
    j: int | None = None
    l: int | None = None
    a1: int | None = None
    a2: int | None = None
    b1: int | None = None
    b2: int | None = None
    k: int | None = None
    s: int | None = None
    s_prime: int | None = None
    H1: tuple[int, ...] | None = None
    H2: tuple[int, ...] | None = None
    degenerate: bool = False


def _poly_pow(c: list[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        nxt = [0] * (len(out) + len(c) - 1)
        for i, x in enumerate(out):
            for j, y in enumerate(c):
                nxt[i + j] += x * y
        out = nxt
    return out


def jks_context(n: int, m: int, A: int, B: int, p: int) -> JksContext:
    """Collect the auxiliary quantities the criterion needs for prime ``p``."""
    if not 0 < m < n or n % m:
        raise ValueError(f"m={m} must be a proper divisor of n={n}")
    t = n // m
    kw: dict = {}
    degenerate = False
    pA, pB = A % p == 0, B % p == 0
    if pA and not pB:
        j = padic_valuation(t * m, p)
        degenerate |= j == 0
        kw.update(j=j, a2=A // p, b1=(B + (-B) ** (p**j)) // p)
    if pB and not pA:
        l = padic_valuation((t - 1) * m, p)
        degenerate |= l == 0
        kw.update(l=l, b2=B // p, a1=(A + (-A) ** (p**l)) // p)
    if not pA and not pB and m % p == 0:
        k = padic_valuation(m, p)
        s, s_prime = m // p**k, n // p**k
        h1 = [0] * (s_prime + 1)
        h1[s_prime] += 1
        h1[s] += A
        h1[0] += B
        # (-A x^s - B)^(p^k), then add A x^(s p^k) + B and divide by p exactly
        base = [0] * (s + 1)
        base[s] -= A
        base[0] -= B
        h2 = _poly_pow(base, p**k)
        h2[s * p**k] += A
        h2[0] += B
        if any(c % p for c in h2):
            raise AssertionError("H2 does not have integer coefficients")
        kw.update(k=k, s=s, s_prime=s_prime, H1=tuple(h1), H2=tuple(c // p for c in h2))
    return JksContext(n, m, A, B, p, t, degenerate=degenerate, **kw)


def condition_id(ctx: JksContext) -> int:
    pA, pB, pm = ctx.A % ctx.p == 0, ctx.B % ctx.p == 0, ctx.m % ctx.p == 0
    if pA and pB:
        return 1
    if pA:
        return 2
    if pB:
        return 3
    return 4 if pm else 5


def jks_condition_holds(ctx: JksContext) -> bool:
    """True iff the applicable condition holds, i.e. p does not divide the index."""
    p, A, B, m, t = ctx.p, ctx.A, ctx.B, ctx.m, ctx.t
    cid = condition_id(ctx)
    if cid == 1:
        return B % (p * p) != 0
    if cid == 2:
        a2, b1 = ctx.a2, ctx.b1
        return (a2 % p == 0 and b1 % p != 0) or (a2 * (a2**t * B + (-b1) ** t)) % p != 0
    if cid == 3:
        a1, b2 = ctx.a1, ctx.b2
        return (a1 % p == 0 and b2 % p != 0) or (
            a1 * b2 ** (m - 1) * (A * a1 ** (t - 1) + (-b2) ** (t - 1))
        ) % p != 0
    if cid == 4:
        h1 = ModPolynomial(p, ctx.H1)
        h2 = ModPolynomial(p, ctx.H2)
        return gcd_mod_p(h1, h2).degree == 0
    return (t**t * B ** (t - 1) - (-1) ** t * (t - 1) ** (t - 1) * A**t) % (p * p) != 0


def jks_prime_divides_index(n: int, m: int, A: int, B: int, p: int) -> bool:
    """Whether p divides [Z_K : Z[theta]] for theta a root of x^n + A x^m + B.

    The trinomial must be irreducible and ``p`` must divide its discriminant.
    """
    if not 0 < m < n or n % m:
        raise ValueError(f"m={m} must be a proper divisor of n={n}")
    if swan_discriminant(n, m, A, B) % p:
        raise ValueError(f"{p} does not divide the discriminant")
    ctx = jks_context(n, m, A, B, p)
    if ctx.degenerate:
        warnings.warn(
            f"p={p}: valuation exponent is 0, auxiliary value taken literally",
            DegenerateExponentWarning,
            stacklevel=2,
        )
    return not jks_condition_holds(ctx)


# --- sextic specialization ------------------------------------------------

@dataclass(frozen=True)
class ConditionTables:
    p2_pairs: frozenset[tuple[int, int]]
    p3_cond2: frozenset[tuple[int, int]]
    p3_cond3: frozenset[tuple[int, int]]
    p3_cond4: frozenset[tuple[int, int]]

    def as_dict(self) -> dict[str, list[list[int]]]:
        return {
            "p2_pairs": sorted([list(x) for x in self.p2_pairs]),
            "p3_cond2": sorted([list(x) for x in self.p3_cond2]),
            "p3_cond3": sorted([list(x) for x in self.p3_cond3]),
            "p3_cond4": sorted([list(x) for x in self.p3_cond4]),
        }


def _holds_for_residues(p: int, ra: int, rb: int) -> bool:
    mod = p * p
    verdicts = set()
    for la, lb in ((1, 1), (1, 2), (2, 1), (3, -2), (-1, 3)):
        A = ra + mod * la
        B = rb + mod * lb
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DegenerateExponentWarning)
            verdicts.add(jks_condition_holds(jks_context(6, 3, A, B, p)))
    if len(verdicts) != 1:
        raise AssertionError(f"condition at p={p} is not determined by ({ra}, {rb}) mod {mod}")
    return verdicts.pop()


@lru_cache(maxsize=1)
def derive_condition_tables() -> ConditionTables:
    """Residue pairs mod p^2 (p = 2, 3) satisfying the general criterion for n=6, m=3."""
    p2 = {
        (a, b)
        for a in range(4)
        for b in range(4)
        if a % 2 == 0 and b % 2 == 1 and _holds_for_residues(2, a, b)
    }
    units = [r for r in range(9) if r % 3]
    thirds = [r for r in range(9) if r % 3 == 0]
    c2 = {(a, b) for a in thirds for b in units if _holds_for_residues(3, a, b)}
    c3 = {(a, b) for a in units for b in thirds if _holds_for_residues(3, a, b)}
    c4 = {(a, b) for a in units for b in units if _holds_for_residues(3, a, b)}
    return ConditionTables(frozenset(p2), frozenset(c2), frozenset(c3), frozenset(c4))


@dataclass(frozen=True)
class PrimeRecord:
    p: int
    condition: int
    outcome: bool


@dataclass(frozen=True)
class MonogenicityCertificate:
    trinomial: tuple[int, int]
    verdict: bool
    prime_records: tuple[PrimeRecord, ...] = field(default_factory=tuple)
    failing_prime: int | None = None

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "failing_prime": self.failing_prime,
            "primes": [
                {"p": r.p, "condition": r.condition, "outcome": r.outcome}
                for r in self.prime_records
            ],
        }


def sextic_prime_condition(A: int, B: int, p: int) -> tuple[int, bool]:
    """(condition id, holds) for prime p | disc(x^6 + A x^3 + B), via the tables."""
    tables = derive_condition_tables()
    pA, pB = A % p == 0, B % p == 0
    if pA and pB:
        return 1, B % (p * p) != 0
    if pA:
        if p == 2:
            return 2, (A % 4, B % 4) in tables.p2_pairs
        if p == 3:
            return 2, (A % 9, B % 9) in tables.p3_cond2
        return 2, False
    if pB:
        ok = B % (p * p) != 0
        if p == 3:
            ok = ok and (A % 9, B % 9) in tables.p3_cond3
        return 3, ok
    if p == 3:
        return 4, (A % 9, B % 9) in tables.p3_cond4
    return 5, (A * A - 4 * B) % (p * p) != 0


def is_monogenic_sextic(A: int, B: int) -> MonogenicityCertificate:
    """Per-prime monogenicity certificate for an irreducible x^6 + A x^3 + B."""
    if A == 0 or B == 0:
        raise ValueError("A and B must be nonzero")
    from .classify import Trinomial, is_irreducible

    if not is_irreducible(Trinomial(A, B)):
        raise ValueError(f"x^6 + {A}x^3 + {B} is reducible")
    delta = A * A - 4 * B
    primes = sorted({3} | set(factorize(B).primes) | set(factorize(delta).primes))
    records = []
    failing = None
    for p in primes:
        cid, ok = sextic_prime_condition(A, B, p)
        records.append(PrimeRecord(p, cid, ok))
        if not ok and failing is None:
            failing = p
    return MonogenicityCertificate((A, B), failing is None, tuple(records), failing)


def gamma(A: int, B: int) -> int:
    """A^2 - 4B with every factor 2 and 3 removed, sign kept."""
    delta = A * A - 4 * B
    if delta == 0:
        raise ValueError("A^2 = 4B")
    for p in (2, 3):
        while delta % p == 0:
            delta //= p
    return delta
