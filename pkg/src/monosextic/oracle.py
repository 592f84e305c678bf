"""Independent checks: Dedekind's index criterion and Frobenius fingerprints."""
from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import islice

from . import _kernels
from .classify import GaloisLabel, Trinomial, galois_group, is_irreducible
from .numtheory import is_prime, small_primes
from .polyfq import ModPolynomial, cycle_type_mod_p, factor_mod_p, gcd_mod_p
from .polyz import IntPolynomial, sextic_discriminant


def dedekind_divides_index(f: IntPolynomial, p: int) -> bool:
    """Dedekind's criterion: does p divide [Z_K : Z[theta]] for theta a root of f?"""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not f.is_monic():
        raise ValueError("f must be monic")
    fbar = ModPolynomial(p, f.coeffs)
    factors = factor_mod_p(fbar)
    g = ModPolynomial(p, (1,))
    for q, _ in factors:
        g = g * q
    h = fbar // g
    # lift with coefficients in [0, p) and form (g*h - f) / p over Z
    gh = [0] * (len(g.coeffs) + len(h.coeffs) - 1)
    for i, x in enumerate(g.coeffs):
        for j, y in enumerate(h.coeffs):
            gh[i + j] += x * y
    diff = [gh[i] - (f.coeffs[i] if i < len(f.coeffs) else 0) for i in range(max(len(gh), len(f.coeffs)))]
    if any(c % p for c in diff):
        raise AssertionError("g*h - f is not divisible by p")
    T = ModPolynomial(p, tuple(c // p for c in diff))
    return gcd_mod_p(T, gcd_mod_p(g, h)).degree > 0


def frobenius_cycle_type(t: Trinomial, p: int) -> tuple[int, ...]:
    """Factor-degree partition of f mod an unramified prime p."""
    if sextic_discriminant(t.A, t.B) % p == 0:
        raise ValueError(f"{p} ramifies (divides the discriminant)")
    return cycle_type_mod_p(ModPolynomial(p, t.polynomial().coeffs))


@dataclass(frozen=True)
class CycleTypeFingerprint:
    sample_size: int
    histogram: dict[tuple[int, ...], int] = field(default_factory=dict)
    primes: tuple[int, ...] = ()

    @property
    def split_density(self) -> float:
        return self.histogram.get((1,) * 6, 0) / self.sample_size

    @property
    def irred_density(self) -> float:
        return self.histogram.get((6,), 0) / self.sample_size


def unramified_primes(t: Trinomial, count: int) -> list[int]:
    disc = sextic_discriminant(t.A, t.B)
    return list(islice((p for p in small_primes() if disc % p), count))


def fingerprint(t: Trinomial, num_primes: int) -> CycleTypeFingerprint:
    """Cycle-type histogram over the first ``num_primes`` unramified primes."""
    if num_primes < 1:
        raise ValueError("num_primes must be positive")
    if not is_irreducible(t):
        raise ValueError(f"{t} is reducible")
    primes = unramified_primes(t, num_primes)
    if len(primes) < num_primes:
        raise ValueError(f"only {len(primes)} unramified primes below the trial bound")
    types = _kernels.frobenius_cycle_types(t.A, t.B, primes)
    return CycleTypeFingerprint(len(primes), dict(Counter(types)), tuple(primes))


# --- transitive groups of degree 6 ------------------------------------------------

# Generators on points 0..5 in the standard transitive-group numbering.
TRANSITIVE_GENERATORS: dict[GaloisLabel, tuple[tuple[int, ...], ...]] = {
    # 6T1: <(0 1 2 3 4 5)>
    GaloisLabel.C6: ((1, 2, 3, 4, 5, 0),),
    # 6T2: S3 acting regularly, <(0 1 2)(3 5 4), (0 3)(1 4)(2 5)>
    GaloisLabel.S3: ((1, 2, 0, 5, 3, 4), (3, 4, 5, 0, 1, 2)),
    # 6T3: dihedral group of the hexagon, D6 = S3 x C2
    GaloisLabel.C2xS3: ((1, 2, 3, 4, 5, 0), (0, 5, 4, 3, 2, 1)),
    # 6T5: C3 wr C2 = C3 x S3 on blocks {0,1,2}, {3,4,5}
    GaloisLabel.C3xS3: ((1, 2, 0, 3, 4, 5), (3, 4, 5, 0, 1, 2)),
    # 6T9: S3 x S3 = 3^2:2^2, adds the simultaneous transposition (1 2)(4 5)
    GaloisLabel.S3xS3: ((1, 2, 0, 3, 4, 5), (3, 4, 5, 0, 1, 2), (0, 2, 1, 3, 5, 4)),
}
EXPECTED_ORDERS = {
    GaloisLabel.C6: 6,
    GaloisLabel.S3: 6,
    GaloisLabel.C2xS3: 12,
    GaloisLabel.C3xS3: 18,
    GaloisLabel.S3xS3: 36,
}


def _compose(a, b):
    return tuple(a[b[i]] for i in range(len(b)))


def generate_group(gens) -> frozenset[tuple[int, ...]]:
    identity = tuple(range(len(gens[0])))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _compose(s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(seen)


def cycle_type(perm) -> tuple[int, ...]:
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        n, i = 0, start
        while i not in seen:
            seen.add(i)
            i = perm[i]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def _is_abelian(group) -> bool:
    return all(_compose(a, b) == _compose(b, a) for a in group for b in group)


def _center_order(group) -> int:
    return sum(all(_compose(z, g) == _compose(g, z) for g in group) for z in group)


@lru_cache(maxsize=None)
def transitive_group(label: GaloisLabel) -> frozenset[tuple[int, ...]]:
    group = generate_group(TRANSITIVE_GENERATORS[label])
    if len(group) != EXPECTED_ORDERS[label]:
        raise AssertionError(f"{label.value}: order {len(group)}, expected {EXPECTED_ORDERS[label]}")
    if {g[0] for g in group} != set(range(6)):
        raise AssertionError(f"{label.value}: not transitive")
    return group


@lru_cache(maxsize=None)
def cycle_type_distribution(label: GaloisLabel) -> dict[tuple[int, ...], Fraction]:
    group = transitive_group(label)
    counts = Counter(cycle_type(g) for g in group)
    return {k: Fraction(v, len(group)) for k, v in counts.items()}


def reference_fingerprint(label: GaloisLabel) -> tuple[Fraction, Fraction]:
    """(fraction of identity elements, fraction of 6-cycles) in the group."""
    dist = cycle_type_distribution(label)
    return dist.get((1,) * 6, Fraction(0)), dist.get((6,), Fraction(0))


def _check_references_distinct() -> None:
    pairs = [reference_fingerprint(g) for g in GaloisLabel]
    if len(set(pairs)) != len(pairs):
        raise AssertionError("reference fingerprints do not separate the five groups")


class FingerprintMismatchWarning(UserWarning):
    """Sampled cycle types point to a different group than the algebraic label."""


def nearest_reference(fp: CycleTypeFingerprint) -> GaloisLabel:
    def dist(label):
        s, i = reference_fingerprint(label)
        return (fp.split_density - float(s)) ** 2 + (fp.irred_density - float(i)) ** 2

    return min(GaloisLabel, key=dist)


@dataclass(frozen=True)
class FingerprintCheck:
    label: GaloisLabel
    nearest: GaloisLabel
    fingerprint: CycleTypeFingerprint
    split_error: float
    irred_error: float

    @property
    def agrees(self) -> bool:
        return self.label is self.nearest


def check_fingerprint(t: Trinomial, num_primes: int = 500) -> FingerprintCheck:
    _check_references_distinct()
    label = galois_group(t)
    fp = fingerprint(t, num_primes)
    s, i = reference_fingerprint(label)
    nearest = nearest_reference(fp)
    if nearest is not label:
        warnings.warn(f"{t}: sampled fingerprint is nearest {nearest.value}, label is {label.value}", FingerprintMismatchWarning, stacklevel=2)
    return FingerprintCheck(
        label,
        nearest,
        fp,
        abs(fp.split_density - float(s)),
        abs(fp.irred_density - float(i)),
    )
