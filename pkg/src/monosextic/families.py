"""Monogenic families F1-F5, the S3 x S3 residue-class cases, and distinctness.

The S3 x S3 cases combine one 2-adic alternative with one 3-adic alternative
drawn from the regenerated condition tables:

* 144 primary cases: {(A,B) = (0,1) mod 4, (A,B) = (2,3) mod 4, A odd} crossed
  with the 12 + 8 + 28 mod-9 pairs;
* 72 supplementary cases covering condition (1) (p | A and p || B), which the
  primary construction leaves out: A even with B = 2 mod 4, and
  3 | A with B = 3, 6 mod 9.

Every case carries the side conditions "B squarefree" and "Gamma squarefree";
the Galois-theoretic exclusions are checked per member.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from .classify import GaloisLabel, Trinomial, classify
from .jks import derive_condition_tables, gamma
from .numtheory import crt_pair, is_squarefree
from .polyz import sextic_discriminant


def _sf(n: int) -> bool:
    return n != 0 and is_squarefree(n)


def omega(A: int) -> int:
    """(A^2 + 4) / gcd(A^2 + 4, 4)."""
    v = A * A + 4
    return v // math.gcd(v, 4)


def in_f1(A: int, B: int) -> bool:
    return (A, B) in ((-1, 1), (1, 1))


def in_f2(A: int, B: int) -> bool:
    return (A, B) in ((-2, 2), (2, 2))


def in_f3(A: int, B: int) -> bool:
    return B == 1 and A % 9 != 0 and abs(A) != 1 and _sf(A - 2) and _sf(A + 2)


def in_f4(A: int, B: int) -> bool:
    return B == -1 and A % 4 != 0 and A % 9 not in (0, 4, 5) and _sf(omega(A))


def in_f5(A: int, B: int) -> bool:
    return A % 2 == 1 and abs(A) != 1 and 4 * B == A * A + 3 and _sf(B)


@dataclass(frozen=True)
class FamilyDescriptor:
    id: str
    galois: GaloisLabel
    a_residue: tuple[int, int]
    b_residue: tuple[int, int]
    side_conditions: tuple[str, ...]
    label: str = ""
    p2_case: str | None = None
    p3_case: tuple[int, tuple[int, int]] | None = None
    supplementary: bool = False

    def matches_residues(self, A: int, B: int) -> bool:
        (ra, ma), (rb, mb) = self.a_residue, self.b_residue
        return A % ma == ra and B % mb == rb

    def to_text(self) -> str:
        (ra, ma), (rb, mb) = self.a_residue, self.b_residue
        parts = [self.id, f"A≡{ra} (mod {ma})", f"B≡{rb} (mod {mb})"]
        return "; ".join(parts + list(self.side_conditions))


NAMED_FAMILIES = (
    FamilyDescriptor("F1", GaloisLabel.C6, (0, 1), (1, 1), ("(A, B) in {(-1, 1), (1, 1)}",)),
    FamilyDescriptor("F2", GaloisLabel.C2xS3, (0, 2), (2, 4), ("(A, B) in {(-2, 2), (2, 2)}",)),
    FamilyDescriptor(
        "F3",
        GaloisLabel.C2xS3,
        (0, 1),
        (0, 1),
        ("B = 1", "A mod 9 != 0", "A != ±1", "A - 2 squarefree", "A + 2 squarefree"),
    ),
    FamilyDescriptor(
        "F4",
        GaloisLabel.C2xS3,
        (0, 1),
        (0, 1),
        ("B = -1", "A mod 4 != 0", "A mod 9 not in {0, 4, 5}", "Ω = (A^2+4)/gcd(A^2+4, 4) squarefree"),
    ),
    FamilyDescriptor(
        "F5",
        GaloisLabel.C3xS3,
        (1, 2),
        (0, 1),
        ("A != ±1", "B = (A^2+3)/4", "B squarefree"),
    ),
)

_NAMED_PREDICATES = {"F1": in_f1, "F2": in_f2, "F3": in_f3, "F4": in_f4, "F5": in_f5}

_S3S3_CONDITIONS = (
    "B squarefree",
    "Γ squarefree",
    "f irreducible",
    "B not a cube",
    "-3δ not a square",
    "R(x) has no integer root",
)


def _p3_alternatives(include_cond1: bool) -> list[tuple[int, tuple[int, int]]]:
    tables = derive_condition_tables()
    alts = [(2, pair) for pair in sorted(tables.p3_cond2)]
    alts += [(3, pair) for pair in sorted(tables.p3_cond3)]
    alts += [(4, pair) for pair in sorted(tables.p3_cond4)]
    if include_cond1:
        alts += [(1, (a, b)) for a in (0, 3, 6) for b in (3, 6)]
    return alts


# (name, A residue, B residue) with B residue None meaning "no constraint mod 4"
_P2_PRIMARY = (
    ("pair(0,1)", (0, 4), (1, 4)),
    ("pair(2,3)", (2, 4), (3, 4)),
    ("odd-A", (1, 2), None),
)
_P2_COND1 = ("cond1(2|A, B≡2 mod 4)", (0, 2), (2, 4))


def _p2_text(name: str) -> str:
    return {
        "pair(0,1)": "(A,B)≡(0,1) mod 4",
        "pair(2,3)": "(A,B)≡(2,3) mod 4",
        "odd-A": "2∤A",
    }.get(name, "2|A, B≡2 mod 4")


def _p3_text(cid: int, pair: tuple[int, int]) -> str:
    head = {1: "3|A, 3|B", 2: "3|A", 3: "3∤A, 3|B", 4: "3∤AB"}[cid]
    return f"{head}, {pair}"


def _build_case(case_id: str, p2, p3, supplementary: bool) -> FamilyDescriptor:
    name, (ra2, ma2), b2 = p2
    cid, (ra3, rb3) = p3
    a_res = crt_pair(ra2, ma2, ra3, 9)
    b_res = crt_pair(b2[0], b2[1], rb3, 9) if b2 else (rb3, 9)
    rb, mb = b_res
    conds = list(_S3S3_CONDITIONS)
    for unit in (1, -1):
        if unit % mb == rb:
            conds.append(f"B != {unit}")
    return FamilyDescriptor(
        case_id,
        GaloisLabel.S3xS3,
        a_res,
        b_res,
        tuple(conds),
        label=f"{_p2_text(name)}; {_p3_text(cid, (ra3, rb3))}",
        p2_case=name,
        p3_case=(cid, (ra3, rb3)),
        supplementary=supplementary,
    )


@lru_cache(maxsize=1)
def generate_s3s3_cases() -> tuple[FamilyDescriptor, ...]:
    """The 144 primary residue-class cases."""
    cases = []
    for p2 in _P2_PRIMARY:
        for p3 in _p3_alternatives(include_cond1=False):
            cases.append(_build_case(f"S3S3-case-{len(cases) + 1}", p2, p3, False))
    return tuple(cases)


@lru_cache(maxsize=1)
def generate_supplementary_cases() -> tuple[FamilyDescriptor, ...]:
    """The 72 cases where condition (1) governs p = 2 or p = 3."""
    cases = []
    cond1_p3 = [alt for alt in _p3_alternatives(True) if alt[0] == 1]
    for p2 in _P2_PRIMARY:
        for p3 in cond1_p3:
            cases.append(_build_case(f"S3S3-supp-{len(cases) + 1}", p2, p3, True))
    for p3 in _p3_alternatives(include_cond1=True):
        cases.append(_build_case(f"S3S3-supp-{len(cases) + 1}", _P2_COND1, p3, True))
    return tuple(cases)


def all_descriptors(include_supplementary: bool = False) -> tuple[FamilyDescriptor, ...]:
    out = NAMED_FAMILIES + generate_s3s3_cases()
    if include_supplementary:
        out += generate_supplementary_cases()
    return out


@lru_cache(maxsize=None)
def _descriptor_index() -> dict[str, FamilyDescriptor]:
    return {d.id: d for d in all_descriptors(include_supplementary=True)}


def descriptor(family_id: str) -> FamilyDescriptor:
    try:
        return _descriptor_index()[family_id]
    except KeyError:
        raise ValueError(f"unknown family id {family_id!r}") from None


def named_family_of(A: int, B: int) -> str | None:
    for fid, pred in _NAMED_PREDICATES.items():
        if pred(A, B):
            return fid
    return None


def _case_by_residues(A: int, B: int, supplementary: bool) -> FamilyDescriptor | None:
    pool = generate_s3s3_cases() + (generate_supplementary_cases() if supplementary else ())
    hits = [d for d in pool if d.matches_residues(A, B)]
    if len(hits) > 1:
        raise AssertionError(f"({A}, {B}) lies in several cases: {[d.id for d in hits]}")
    return hits[0] if hits else None


def _s3s3_side_conditions(A: int, B: int) -> bool:
    delta = A * A - 4 * B
    return _sf(B) and delta != 0 and _sf(gamma(A, B))


def match_family(A: int, B: int, galois: GaloisLabel, monogenic: bool, supplementary: bool = True) -> str | None:
    """Family tag given an already computed Galois label and monogenicity verdict."""
    named = named_family_of(A, B)
    if named is not None:
        return named
    if galois is not GaloisLabel.S3xS3 or not monogenic or not _s3s3_side_conditions(A, B):
        return None
    case = _case_by_residues(A, B, supplementary)
    return case.id if case else None


def family_of(t: Trinomial) -> str | None:
    """F1..F5, a primary case id, a supplementary case id, or None."""
    return classify(t).family


def s3s3_case_of(t: Trinomial, supplementary: bool = False) -> str | None:
    """The S3 x S3 case containing t, verified monogenic with group S3 x S3."""
    A, B = t.A, t.B
    case = _case_by_residues(A, B, supplementary)
    if case is None or not _s3s3_side_conditions(A, B):
        return None
    report = classify(t)
    if report.irreducible and report.is_monogenic and report.galois is GaloisLabel.S3xS3:
        return case.id
    return None


class FamilyViolation(AssertionError):
    """A candidate satisfying a family's defining conditions failed re-verification."""


def _centered_range(residue: int, modulus: int, bound: int) -> range:
    start = -bound + (residue + bound) % modulus
    return range(start, bound + 1, modulus)


def _named_candidates(fid: str, bound: int):
    if fid == "F1":
        return [(-1, 1), (1, 1)]
    if fid == "F2":
        return [(-2, 2), (2, 2)]
    if fid == "F3":
        return [(A, 1) for A in range(-bound, bound + 1)]
    if fid == "F4":
        return [(A, -1) for A in range(-bound, bound + 1)]
    return [(A, (A * A + 3) // 4) for A in range(-bound, bound + 1) if A % 2]


def enumerate_family(family_id: str, bound: int) -> list[Trinomial]:
    """Verified members with |A| <= bound (and |B| <= bound for the S3 x S3 cases)."""
    if bound < 1:
        raise ValueError("bound must be positive")
    desc = descriptor(family_id)
    members = []
    if family_id in _NAMED_PREDICATES:
        pred = _NAMED_PREDICATES[family_id]
        for A, B in _named_candidates(family_id, bound):
            if abs(A) > bound or not pred(A, B):
                continue
            rep = classify(Trinomial(A, B))
            if not (rep.irreducible and rep.is_monogenic and rep.galois is desc.galois):
                raise FamilyViolation(f"{family_id} member ({A}, {B}) failed verification")
            members.append(Trinomial(A, B))
    else:
        for A in _centered_range(*desc.a_residue, bound):
            for B in _centered_range(*desc.b_residue, bound):
                if A == 0 or B == 0 or not _s3s3_side_conditions(A, B):
                    continue
                rep = classify(Trinomial(A, B))
                if not rep.irreducible:
                    continue
                if not rep.is_monogenic:
                    raise FamilyViolation(f"{family_id}: ({A}, {B}) has squarefree B and Γ but is not monogenic")
                if rep.galois is GaloisLabel.S3xS3:
                    members.append(Trinomial(A, B))
    return sorted(members, key=lambda t: (t.A, t.B))


def family_coverage(bound: int, include_supplementary: bool = True) -> dict[str, int]:
    """Number of verified members found per family up to ``bound``."""
    return {
        d.id: len(enumerate_family(d.id, bound))
        for d in all_descriptors(include_supplementary)
    }


def residue_classes_intersect(d1: FamilyDescriptor, d2: FamilyDescriptor) -> bool:
    """Whether two descriptors' residue constraints admit a common (A, B)."""
    (ra1, ma1), (rb1, mb1) = d1.a_residue, d1.b_residue
    (ra2, ma2), (rb2, mb2) = d2.a_residue, d2.b_residue
    return (ra1 - ra2) % math.gcd(ma1, ma2) == 0 and (rb1 - rb2) % math.gcd(mb1, mb2) == 0


class Distinctness(enum.Enum):
    DISTINCT = "Distinct"
    INCONCLUSIVE = "Inconclusive"


def distinct_by_discriminant(t1: Trinomial, t2: Trinomial) -> Distinctness:
    """Distinct fields whenever the two discriminants differ; otherwise undecided."""
    if t1 == t2:
        raise ValueError("the two trinomials are equal")
    if sextic_discriminant(t1.A, t1.B) != sextic_discriminant(t2.A, t2.B):
        return Distinctness.DISTINCT
    return Distinctness.INCONCLUSIVE


def discriminant_collisions(members: list[Trinomial]) -> list[tuple[Trinomial, Trinomial]]:
    """Pairs the discriminant criterion cannot separate (equal discriminants)."""
    by_disc: dict[int, list[Trinomial]] = {}
    for t in members:
        by_disc.setdefault(sextic_discriminant(t.A, t.B), []).append(t)
    return [
        (group[i], group[j])
        for group in by_disc.values()
        for i in range(len(group))
        for j in range(i + 1, len(group))
    ]
