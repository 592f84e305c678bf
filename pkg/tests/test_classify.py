import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy
from sympy.polys.numberfields.galoisgroups import galois_group as sympy_galois_group

from monosextic.classify import (
    GaloisLabel,
    Trinomial,
    classify,
    galois_evidence,
    galois_group,
    is_irreducible,
    resolvent_cubic,
)
from monosextic.polyz import sextic_discriminant

X = sympy.Symbol("x")
SYMPY_NAMES = {"C6": GaloisLabel.C6, "S3": GaloisLabel.S3, "D6": GaloisLabel.C2xS3, "G18": GaloisLabel.C3xS3, "G36m": GaloisLabel.S3xS3}


def _grid(bound):
    return [(A, B) for A, B in itertools.product(range(-bound, bound + 1), repeat=2) if A * B]


def _poly_div_exact(num, den):
    """Exact division of integer coefficient lists (descending); None if not exact."""
    num = [Fraction(c) for c in num]
    out = []
    while len(num) >= len(den):
        q = num[0] / den[0]
        out.append(q)
        for i, d in enumerate(den):
            num[i] -= q * d
        num.pop(0)
    if any(num):
        return None
    return out


def brute_force_reducible(A, B):
    """Try every monic candidate factor built from 1..3 numerical roots."""
    f = [1, 0, 0, A, 0, 0, B]
    roots = np.roots(f)
    for k in (1, 2, 3):
        for subset in itertools.combinations(range(6), k):
            coeffs = np.real(np.poly(roots[list(subset)]))
            cand = [int(round(c)) for c in coeffs]
            if max(abs(c - r) for c, r in zip(cand, coeffs)) > 1e-6:
                continue
            q = _poly_div_exact(f, cand)
            if q is not None and all(c.denominator == 1 for c in q):
                return True
    return False


@pytest.mark.parametrize(
    "A, B, irreducible, quad, cube",
    [(2, 1, False, (-1, -1), (2, 1)), (1, 1, True, None, None), (5, 4, False, (-4, -1), None)],
)
def test_irreducible_examples(A, B, irreducible, quad, cube):
    irr = is_irreducible(Trinomial(A, B))
    assert bool(irr) is irreducible
    assert irr.quadratic_roots == quad and irr.cube_witness == cube


def test_trinomial_rejects_zero():
    for A, B in ((0, 1), (1, 0), (0, 0)):
        with pytest.raises(ValueError):
            Trinomial(A, B)


def test_irreducible_matches_brute_force():
    for A, B in _grid(20):
        assert bool(is_irreducible(Trinomial(A, B))) != brute_force_reducible(A, B), (A, B)


def test_irreducible_matches_sympy_factoring():
    for A, B in _grid(12):
        factors = sympy.factor_list(X**6 + A * X**3 + B)[1]
        sympy_irred = len(factors) == 1 and factors[0][1] == 1
        assert bool(is_irreducible(Trinomial(A, B))) == sympy_irred


def test_witness_factors_divide():
    for A, B in _grid(30):
        irr = is_irreducible(Trinomial(A, B))
        f = sympy.Poly(X**6 + A * X**3 + B, X)
        if irr.cube_witness:
            m, n = irr.cube_witness
            assert f.rem(sympy.Poly(X**2 + m * X + n, X)).is_zero
        if irr.quadratic_roots:
            r1, r2 = irr.quadratic_roots
            assert f == sympy.Poly((X**3 - r1) * (X**3 - r2), X)


@pytest.mark.parametrize("A, B, coeffs", [(1, 1, (1, -3, 0, 1)), (2, 2, (4, -6, 0, 1)), (-3, 5, (-15, -15, 0, 1))])
def test_resolvent_cubic(A, B, coeffs):
    assert resolvent_cubic(Trinomial(A, B)).coeffs == coeffs


@pytest.mark.parametrize("A, B, label", [(1, 1, "C6"), (1, -1, "C2xS3"), (3, 3, "C3xS3"), (9, 2, "S3xS3"), (2, 2, "C2xS3")])
def test_galois_examples(A, B, label):
    assert galois_group(Trinomial(A, B)).value == label


def test_galois_reducible_rejected():
    with pytest.raises(ValueError):
        galois_group(Trinomial(2, 1))


def test_galois_matches_sympy():
    seen = set()
    for A, B in _grid(12):
        t = Trinomial(A, B)
        if not is_irreducible(t):
            continue
        G, _ = sympy_galois_group(sympy.Poly(X**6 + A * X**3 + B, X), by_name=True)
        assert galois_group(t) is SYMPY_NAMES[G.name], (A, B)
        seen.add(G.name)
    # irreducible S3 needs B > A^2/4 and first appears at |B| = 1029
    assert seen == set(SYMPY_NAMES) - {"S3"}


@pytest.mark.parametrize("A, B", [(-54, 1029), (54, 1029), (-40, 1372), (40, 1372)])
def test_smallest_s3_trinomials_match_sympy(A, B):
    t = Trinomial(A, B)
    assert is_irreducible(t) and galois_group(t) is GaloisLabel.S3
    G, _ = sympy_galois_group(sympy.Poly(X**6 + A * X**3 + B, X), by_name=True)
    assert G.name == "S3"


def test_forbidden_combination_never_fires():
    for A, B in _grid(50):
        t = Trinomial(A, B)
        if not is_irreducible(t):
            continue
        ev = galois_evidence(t)
        assert not (ev.minus3delta_square and not ev.resolvent_irreducible and ev.b_cube)


def test_delta_nonzero_when_irreducible():
    for A, B in _grid(50):
        t = Trinomial(A, B)
        if is_irreducible(t):
            assert t.delta != 0


def test_classify_examples():
    r = classify(Trinomial(9, 2))
    assert r.irreducible and r.is_monogenic and r.galois is GaloisLabel.S3xS3
    assert r.family == "S3S3-case-97"
    r = classify(Trinomial(1, 1))
    assert r.galois is GaloisLabel.C6 and r.is_monogenic and r.family == "F1"
    assert r.discriminant == -19683 and r.gamma == -1
    r = classify(Trinomial(2, 1))
    assert not r.irreducible
    assert r.galois is None and r.monogenic is None and r.family is None
    d = r.as_dict()
    assert d["galois"] is None and d["certificate"] == []


def test_report_schema():
    keys = {"a", "b", "irreducible", "discriminant", "delta", "gamma", "galois", "t_notation", "monogenic", "family", "certificate"}
    for A, B in ((28, 37), (2, 1), (3, 6)):
        d = classify(Trinomial(A, B)).as_dict()
        assert keys <= set(d)
        assert d["discriminant"] == sextic_discriminant(A, B)
    d = classify(Trinomial(28, 37)).as_dict()
    assert d["gamma"] == 53 and d["t_notation"] == "6T9"


def test_desk_scale_monogenic_theorem():
    for A, B in _grid(40):
        r = classify(Trinomial(A, B))
        if not r.is_monogenic:
            continue
        g = r.galois
        assert g is not GaloisLabel.S3
        assert (g is GaloisLabel.C6) == ((A, B) in {(1, 1), (-1, 1)})
        assert (g is GaloisLabel.C2xS3) == (r.family in {"F2", "F3", "F4"})
        assert (g is GaloisLabel.C3xS3) == (r.family == "F5")
