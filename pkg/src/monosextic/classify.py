"""Irreducibility and Galois group of x^6 + A x^3 + B, and the combined report."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .jks import MonogenicityCertificate, gamma, is_monogenic_sextic
from .numtheory import is_square, perfect_power_root
from .polyz import IntPolynomial, integer_roots_monic, sextic_discriminant


@dataclass(frozen=True)
class Trinomial:
    A: int
    B: int

    def __post_init__(self):
        if self.A == 0 or self.B == 0:
            raise ValueError(f"need AB != 0, got A={self.A}, B={self.B}")

    @property
    def delta(self) -> int:
        return self.A * self.A - 4 * self.B

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial.sextic(self.A, self.B)

    def __str__(self):
        return str(self.polynomial())


class GaloisLabel(enum.Enum):
    C6 = "C6"
    S3 = "S3"
    C2xS3 = "C2xS3"
    C3xS3 = "C3xS3"
    S3xS3 = "S3xS3"

    @property
    def t_notation(self) -> str:
        return _T_NOTATION[self]

    @property
    def order(self) -> int:
        return _ORDER[self]


_T_NOTATION = {
    GaloisLabel.C6: "6T1",
    GaloisLabel.S3: "6T2",
    GaloisLabel.C2xS3: "6T3",
    GaloisLabel.C3xS3: "6T5",
    GaloisLabel.S3xS3: "6T9",
}
_ORDER = {
    GaloisLabel.C6: 6,
    GaloisLabel.S3: 6,
    GaloisLabel.C2xS3: 12,
    GaloisLabel.C3xS3: 18,
    GaloisLabel.S3xS3: 36,
}


@dataclass(frozen=True)
class Irreducibility:
    """Irreducibility verdict with witnesses when f factors.

    ``quadratic_roots``: integer roots r1, r2 of x^2 + A x + B, so that
    f = (x^3 - r1)(x^3 - r2). ``cube_witness``: (m, n) with B = n^3 and
    A = m^3 - 3mn, so that x^2 + m x + n divides f.
    """

    irreducible: bool
    quadratic_roots: tuple[int, int] | None = None
    cube_witness: tuple[int, int] | None = None

    def __bool__(self):
        return self.irreducible

    def describe(self) -> str:
        if self.irreducible:
            return "irreducible"
        parts = []
        if self.quadratic_roots:
            r1, r2 = self.quadratic_roots
            parts.append(f"(x^3 - {r1})(x^3 - {r2})".replace("- -", "+ "))
        if self.cube_witness:
            m, n = self.cube_witness
            parts.append(f"B = {n}^3, A = {m}^3 - 3*{m}*{n}")
        return "reducible: " + "; ".join(parts)


def is_irreducible(t: Trinomial) -> Irreducibility:
    """Decide irreducibility of x^6 + A x^3 + B over Q exactly."""
    A, B = t.A, t.B
    quad = None
    if is_square(t.delta):
        r = perfect_power_root(t.delta, 2)
        quad = ((-A - r) // 2, (-A + r) // 2)
    cube = None
    n = perfect_power_root(B, 3)
    if n is not None:
        # integer m with m^3 - 3 n m - A = 0
        ms = integer_roots_monic(IntPolynomial((-A, -3 * n, 0, 1)))
        if ms:
            cube = (ms[-1], n)
    if quad is None and cube is None:
        return Irreducibility(True)
    return Irreducibility(False, quad, cube)


def resolvent_cubic(t: Trinomial) -> IntPolynomial:
    """x^3 - 3B x + AB."""
    return IntPolynomial((t.A * t.B, -3 * t.B, 0, 1))


@dataclass(frozen=True)
class GaloisEvidence:
    minus3delta_square: bool
    resolvent_irreducible: bool
    b_cube: bool


def galois_evidence(t: Trinomial) -> GaloisEvidence:
    return GaloisEvidence(
        is_square(-3 * t.delta),
        not integer_roots_monic(resolvent_cubic(t)),
        perfect_power_root(t.B, 3) is not None,
    )


def galois_group(t: Trinomial) -> GaloisLabel:
    if not is_irreducible(t):
        raise ValueError(f"{t} is reducible")
    ev = galois_evidence(t)
    sq, irr, cube = ev.minus3delta_square, ev.resolvent_irreducible, ev.b_cube
    if not sq:
        return GaloisLabel.S3xS3 if irr and not cube else GaloisLabel.C2xS3
    if irr:
        return GaloisLabel.C6 if cube else GaloisLabel.C3xS3
    if not cube:
        return GaloisLabel.S3
    raise AssertionError(f"{t}: -3*delta square, R reducible and B a cube is impossible for irreducible f")


@dataclass(frozen=True)
class ClassificationReport:
    trinomial: Trinomial
    irreducibility: Irreducibility
    discriminant: int
    delta: int
    gamma: int | None
    galois: GaloisLabel | None = None
    monogenic: MonogenicityCertificate | None = None
    family: str | None = None

    @property
    def irreducible(self) -> bool:
        return self.irreducibility.irreducible

    @property
    def is_monogenic(self) -> bool:
        return self.monogenic is not None and self.monogenic.verdict

    def as_dict(self) -> dict:
        cert = self.monogenic
        return {
            "a": self.trinomial.A,
            "b": self.trinomial.B,
            "irreducible": self.irreducible,
            "reducibility": None if self.irreducible else self.irreducibility.describe(),
            "discriminant": self.discriminant,
            "delta": self.delta,
            "gamma": self.gamma,
            "galois": self.galois.value if self.galois else None,
            "t_notation": self.galois.t_notation if self.galois else None,
            "monogenic": cert.verdict if cert else None,
            "family": self.family,
            "certificate": [
                {"p": r.p, "condition": r.condition, "outcome": r.outcome}
                for r in (cert.prime_records if cert else ())
            ],
        }


def classify(t: Trinomial) -> ClassificationReport:
    from .families import match_family

    irr = is_irreducible(t)
    delta = t.delta
    disc = sextic_discriminant(t.A, t.B)
    gam = gamma(t.A, t.B) if delta else None
    if not irr:
        return ClassificationReport(t, irr, disc, delta, gam)
    label = galois_group(t)
    cert = is_monogenic_sextic(t.A, t.B)
    family = match_family(t.A, t.B, label, cert.verdict)
    return ClassificationReport(t, irr, disc, delta, gam, label, cert, family)
