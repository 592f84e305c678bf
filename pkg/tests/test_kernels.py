import numpy as np
import pytest

from monosextic import _kernels
from monosextic.numtheory import is_squarefree, small_primes
from monosextic.polyfq import ModPolynomial, cycle_type_mod_p
from monosextic.polyz import sextic_discriminant

BACKENDS = ("numba", "numpy")


@pytest.mark.parametrize("backend", BACKENDS)
def test_squarefree_table(backend):
    t = _kernels.squarefree_table(5000, backend)
    assert not t[0]
    assert [bool(t[n]) for n in range(1, 5001)] == [is_squarefree(n) for n in range(1, 5001)]


def test_squarefree_backends_identical():
    assert np.array_equal(_kernels.squarefree_table(10**6, "numba"), _kernels.squarefree_table(10**6, "numpy"))


def test_signature_table_is_a_bijection():
    assert len(set(_kernels.SIGNATURE_TO_PARTITION.values())) == 11


@pytest.mark.parametrize("backend", BACKENDS)
def test_cycle_types_match_polyfq(backend):
    rng = np.random.default_rng(1)
    primes = [p for p in small_primes()[:400]] + [2**31 - 1, 2147483629, 2147483587]
    for _ in range(40):
        a, b = (int(x) for x in rng.integers(-10**6, 10**6, size=2))
        if a * b == 0:
            continue
        disc = sextic_discriminant(a, b)
        ps = [p for p in primes if disc % p]
        got = _kernels.frobenius_cycle_types(a, b, ps, backend)
        want = [cycle_type_mod_p(ModPolynomial(p, (b, 0, 0, a, 0, 0, 1))) for p in ps]
        assert got == want


def test_backends_agree_on_signatures():
    primes = list(small_primes()[:2000])
    for a, b in ((1, 1), (9, 2), (-54, 1029), (123456789, -987654321)):
        assert np.array_equal(
            _kernels.frobenius_signatures(a, b, primes, "numba"),
            _kernels.frobenius_signatures(a, b, primes, "numpy"),
        )


def test_ramified_prime_rejected():
    with pytest.raises(ValueError):
        _kernels.frobenius_cycle_types(1, 1, [3])


def test_prime_bound():
    with pytest.raises(ValueError):
        _kernels.frobenius_signatures(1, 1, [2**31 + 11])
    assert _kernels.frobenius_signatures(1, 1, []).shape == (0, 3)


def test_backend_env_validation(monkeypatch):
    import importlib

    monkeypatch.setenv("MONOSEXTIC_BACKEND", "fortran")
    with pytest.raises(ImportError):
        importlib.reload(_kernels)
    monkeypatch.setenv("MONOSEXTIC_BACKEND", "numpy")
    importlib.reload(_kernels)
    assert _kernels.BACKEND == "numpy"
    monkeypatch.delenv("MONOSEXTIC_BACKEND")
    importlib.reload(_kernels)
    assert _kernels.BACKEND == "numba"
