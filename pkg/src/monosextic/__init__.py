"""Exact classification of sextic trinomials x^6 + A x^3 + B."""
from .classify import ClassificationReport, GaloisLabel, Irreducibility, Trinomial, classify, galois_group, is_irreducible
from .families import descriptor, enumerate_family, family_of, generate_s3s3_cases, s3s3_case_of
from .jks import derive_condition_tables, is_monogenic_sextic, jks_prime_divides_index
from .oracle import check_fingerprint, dedekind_divides_index

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "GaloisLabel",
    "Irreducibility",
    "Trinomial",
    "check_fingerprint",
    "classify",
    "dedekind_divides_index",
    "derive_condition_tables",
    "descriptor",
    "enumerate_family",
    "family_of",
    "galois_group",
    "generate_s3s3_cases",
    "is_irreducible",
    "is_monogenic_sextic",
    "jks_prime_divides_index",
    "s3s3_case_of",
]
