import itertools
import warnings
from fractions import Fraction

import pytest

from monosextic.classify import GaloisLabel, Trinomial, galois_group, is_irreducible
from monosextic.jks import DegenerateExponentWarning, jks_prime_divides_index
from monosextic.numtheory import factorize
from monosextic.oracle import (
    EXPECTED_ORDERS,
    _center_order,
    _is_abelian,
    check_fingerprint,
    cycle_type_distribution,
    dedekind_divides_index,
    fingerprint,
    frobenius_cycle_type,
    nearest_reference,
    reference_fingerprint,
    transitive_group,
    unramified_primes,
)
from monosextic.polyfq import ModPolynomial, cycle_type_mod_p
from monosextic.polyz import IntPolynomial, sextic_discriminant

REFERENCE = {
    GaloisLabel.C6: (Fraction(1, 6), Fraction(1, 3)),
    GaloisLabel.S3: (Fraction(1, 6), Fraction(0)),
    GaloisLabel.C2xS3: (Fraction(1, 12), Fraction(1, 6)),
    GaloisLabel.C3xS3: (Fraction(1, 18), Fraction(1, 3)),
    GaloisLabel.S3xS3: (Fraction(1, 36), Fraction(1, 3)),
}


@pytest.mark.parametrize("A, B, p, divides", [(1, 1, 3, False), (7, 1, 3, True), (3, 3, 3, False), (3, 9, 3, True)])
def test_dedekind_examples(A, B, p, divides):
    assert dedekind_divides_index(IntPolynomial.sextic(A, B), p) is divides


def test_dedekind_rejects_bad_input():
    with pytest.raises(ValueError):
        dedekind_divides_index(IntPolynomial.sextic(1, 1), 4)
    with pytest.raises(ValueError):
        dedekind_divides_index(IntPolynomial((1, 0, 2)), 3)


def test_dedekind_classic_cases():
    # x^2 + 3: index 2 at p = 2 (Z[sqrt(-3)] is not maximal); x^2 + 1 maximal
    assert dedekind_divides_index(IntPolynomial((3, 0, 1)), 2)
    assert not dedekind_divides_index(IntPolynomial((1, 0, 1)), 2)
    # x^2 - 5: p = 2 divides the index
    assert dedekind_divides_index(IntPolynomial((-5, 0, 1)), 2)


def test_dedekind_agrees_with_jks_on_grid():
    disagreements = []
    for A, B in itertools.product(range(-60, 61), repeat=2):
        if A * B == 0:
            continue
        t = Trinomial(A, B)
        if not is_irreducible(t):
            continue
        f = t.polynomial()
        for p in factorize(sextic_discriminant(A, B)).primes:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", DegenerateExponentWarning)
                if jks_prime_divides_index(6, 3, A, B, p) != dedekind_divides_index(f, p):
                    disagreements.append((A, B, p))
    assert disagreements == []


def test_frobenius_cycle_type():
    t = Trinomial(1, 1)
    assert frobenius_cycle_type(t, 2) == (6,)
    assert frobenius_cycle_type(t, 19) == (1,) * 6
    with pytest.raises(ValueError):
        frobenius_cycle_type(t, 3)


def test_fingerprint_histogram_matches_polyfq():
    t = Trinomial(9, 2)
    fp = fingerprint(t, 300)
    assert fp.sample_size == 300 and sum(fp.histogram.values()) == 300
    primes = unramified_primes(t, 300)
    assert fp.primes == tuple(primes)
    direct = {}
    for p in primes:
        ct = cycle_type_mod_p(ModPolynomial(p, t.polynomial().coeffs))
        direct[ct] = direct.get(ct, 0) + 1
    assert fp.histogram == direct


def test_fingerprint_rejects_reducible():
    with pytest.raises(ValueError):
        fingerprint(Trinomial(2, 1), 10)


@pytest.mark.parametrize("label", list(GaloisLabel))
def test_transitive_groups(label):
    g = transitive_group(label)
    assert len(g) == EXPECTED_ORDERS[label] == label.order
    assert _is_abelian(g) == (label is GaloisLabel.C6)
    assert _center_order(g) == {"C6": 6, "S3": 1, "C2xS3": 2, "C3xS3": 3, "S3xS3": 1}[label.value]
    assert reference_fingerprint(label) == REFERENCE[label]
    assert sum(cycle_type_distribution(label).values()) == 1


def test_regular_s3_has_no_fixed_points_outside_identity():
    dist = cycle_type_distribution(GaloisLabel.S3)
    assert set(dist) == {(1,) * 6, (3, 3), (2, 2, 2)}


@pytest.mark.parametrize("A, B", [(1, 1), (1, -1), (3, 3), (9, 2), (-54, 1029)])
def test_fingerprint_agrees_with_label(A, B):
    t = Trinomial(A, B)
    chk = check_fingerprint(t, 500)
    assert chk.label is galois_group(t)
    assert chk.agrees
    assert chk.split_error <= 0.08 and chk.irred_error <= 0.08


def test_nearest_reference_of_exact_pairs():
    from monosextic.oracle import CycleTypeFingerprint

    for label, (s, i) in REFERENCE.items():
        fp = CycleTypeFingerprint(36 * 18, {(1,) * 6: int(s * 648), (6,): int(i * 648)})
        assert nearest_reference(fp) is label


def test_reference_pairs_pairwise_distinct():
    pairs = [reference_fingerprint(g) for g in GaloisLabel]
    assert len(set(pairs)) == 5


def test_mismatch_warns(monkeypatch):
    import monosextic.oracle as oracle

    monkeypatch.setattr(oracle, "nearest_reference", lambda fp: GaloisLabel.S3)
    with pytest.warns(oracle.FingerprintMismatchWarning):
        chk = oracle.check_fingerprint(Trinomial(1, 1), 50)
    assert not chk.agrees
