"""Hot loops: squarefree sieve and batched Frobenius cycle types.

Each kernel has a numba implementation and a pure-numpy implementation with
identical results. ``MONOSEXTIC_BACKEND=numpy`` forces the numpy path; the
default is numba when it imports, numpy otherwise.

Frobenius cycle types come from Berlekamp-matrix ranks. For squarefree f of
degree 6 over F_p with factor degrees d_i, the Frobenius map on F_p[x]/(f)
has dim ker(Frob^k - 1) = sum_i gcd(d_i, k). The triple for k = 1, 2, 3
separates all eleven partitions of 6.
"""
from __future__ import annotations

import os
from math import gcd

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

BACKEND = os.environ.get("MONOSEXTIC_BACKEND", "numba" if numba is not None else "numpy")
if BACKEND not in ("numba", "numpy"):
    raise ImportError(f"MONOSEXTIC_BACKEND must be 'numba' or 'numpy', got {BACKEND!r}")
if BACKEND == "numba" and numba is None:  # pragma: no cover
    raise ImportError("MONOSEXTIC_BACKEND=numba but numba is not installed")

# products of two residues must fit in int64
MAX_KERNEL_PRIME = 2**31 - 1


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


SIGNATURE_TO_PARTITION = {
    tuple(sum(gcd(d, k) for d in part) for k in (1, 2, 3)): part for part in _partitions(6)
}
assert len(SIGNATURE_TO_PARTITION) == 11


# --- squarefree sieve ---------------------------------------------------------

def _squarefree_numpy(n_max):
    flags = np.ones(n_max + 1, dtype=np.bool_)
    flags[0] = False
    i = 2
    while i * i <= n_max:
        flags[i * i :: i * i] = False
        i += 1
    return flags


def _squarefree_loop(n_max):
    flags = np.ones(n_max + 1, dtype=np.bool_)
    flags[0] = False
    i = 2
    while i * i <= n_max:
        sq = i * i
        for j in range(sq, n_max + 1, sq):
            flags[j] = False
        i += 1
    return flags


# --- Frobenius signatures -----------------------------------------------------

def _frob_signatures_loop(a, b, primes):
    """(P, 3) kernel dimensions for x^6 + a[i] x^3 + b[i] over primes[i]."""
    n = primes.shape[0]
    out = np.zeros((n, 3), dtype=np.int64)
    prod = np.zeros(11, dtype=np.int64)
    base = np.zeros(6, dtype=np.int64)
    res = np.zeros(6, dtype=np.int64)
    tmp = np.zeros(6, dtype=np.int64)
    frob = np.zeros((6, 6), dtype=np.int64)
    work = np.zeros((6, 6), dtype=np.int64)
    power = np.zeros((6, 6), dtype=np.int64)
    nxt = np.zeros((6, 6), dtype=np.int64)
    for idx in range(n):
        p = primes[idx]
        ar = a[idx]
        br = b[idx]
        # x^p mod f by square-and-multiply
        for i in range(6):
            base[i] = 0
            res[i] = 0
        base[1] = 1
        res[0] = 1
        e = p
        while e > 0:
            if e & 1:
                for i in range(11):
                    prod[i] = 0
                for i in range(6):
                    for j in range(6):
                        prod[i + j] = (prod[i + j] + res[i] * base[j] % p) % p
                for d in range(10, 5, -1):
                    c = prod[d]
                    if c != 0:
                        prod[d - 3] = (prod[d - 3] - ar * c % p + p) % p
                        prod[d - 6] = (prod[d - 6] - br * c % p + p) % p
                        prod[d] = 0
                for i in range(6):
                    res[i] = prod[i]
            e >>= 1
            if e > 0:
                for i in range(11):
                    prod[i] = 0
                for i in range(6):
                    for j in range(6):
                        prod[i + j] = (prod[i + j] + base[i] * base[j] % p) % p
                for d in range(10, 5, -1):
                    c = prod[d]
                    if c != 0:
                        prod[d - 3] = (prod[d - 3] - ar * c % p + p) % p
                        prod[d - 6] = (prod[d - 6] - br * c % p + p) % p
                        prod[d] = 0
                for i in range(6):
                    base[i] = prod[i]
        # column j of the Frobenius matrix is (x^p)^j mod f
        for i in range(6):
            tmp[i] = 0
        tmp[0] = 1
        for j in range(6):
            for i in range(6):
                frob[i, j] = tmp[i]
            for i in range(11):
                prod[i] = 0
            for i in range(6):
                for k in range(6):
                    prod[i + k] = (prod[i + k] + tmp[i] * res[k] % p) % p
            for d in range(10, 5, -1):
                c = prod[d]
                if c != 0:
                    prod[d - 3] = (prod[d - 3] - ar * c % p + p) % p
                    prod[d - 6] = (prod[d - 6] - br * c % p + p) % p
                    prod[d] = 0
            for i in range(6):
                tmp[i] = prod[i]
        for i in range(6):
            for j in range(6):
                power[i, j] = frob[i, j]
        for step in range(3):
            if step > 0:
                for i in range(6):
                    for j in range(6):
                        s = 0
                        for k in range(6):
                            s = (s + power[i, k] * frob[k, j] % p) % p
                        nxt[i, j] = s
                for i in range(6):
                    for j in range(6):
                        power[i, j] = nxt[i, j]
            for i in range(6):
                for j in range(6):
                    work[i, j] = power[i, j]
                work[i, i] = (work[i, i] - 1 + p) % p
            # fraction-free elimination mod p; scaling rows keeps the rank
            rank = 0
            for col in range(6):
                piv = -1
                for r in range(rank, 6):
                    if work[r, col] != 0:
                        piv = r
                        break
                if piv < 0:
                    continue
                for j in range(6):
                    t = work[rank, j]
                    work[rank, j] = work[piv, j]
                    work[piv, j] = t
                pv = work[rank, col]
                for r in range(rank + 1, 6):
                    f = work[r, col]
                    if f != 0:
                        for j in range(6):
                            work[r, j] = (work[r, j] * pv % p - f * work[rank, j] % p + p) % p
                rank += 1
            out[idx, step] = 6 - rank
    return out


def _mulmod_batch(x, y, a, b, p):
    """Row-wise product of residues-mod-f arrays of shape (P, 6)."""
    prod = np.zeros((x.shape[0], 11), dtype=np.int64)
    pc = p[:, None]
    for i in range(6):
        prod[:, i : i + 6] = (prod[:, i : i + 6] + x[:, i : i + 1] * y % pc) % pc
    for d in range(10, 5, -1):
        c = prod[:, d]
        prod[:, d - 3] = (prod[:, d - 3] - a * c % p) % p
        prod[:, d - 6] = (prod[:, d - 6] - b * c % p) % p
    return prod[:, :6]


def _rank_batch(mat, p):
    """Row rank mod p of each (6, 6) block, by fraction-free elimination."""
    work = mat.copy()
    n = work.shape[0]
    rows = np.arange(n)
    rank = np.zeros(n, dtype=np.int64)
    pc = p[:, None]
    for col in range(6):
        idx = np.arange(6)[None, :]
        cand = (work[:, :, col] != 0) & (idx >= rank[:, None])
        has = cand.any(axis=1)
        rsafe = np.minimum(rank, 5)
        piv = np.where(has, cand.argmax(axis=1), rsafe)
        top = work[rows, rsafe].copy()
        pivrow = work[rows, piv].copy()
        work[rows, rsafe] = np.where(has[:, None], pivrow, top)
        work[rows, piv] = np.where(has[:, None], top, pivrow)
        pv = work[rows, rsafe, col]
        for r in range(6):
            below = has & (r > rank)
            f = work[:, r, col]
            new = (work[:, r, :] * pv[:, None] % pc - f[:, None] * work[rows, rsafe] % pc) % pc
            work[:, r, :] = np.where(below[:, None], new, work[:, r, :])
        rank = rank + has
    return rank


def _frob_signatures_numpy(a, b, primes):
    p = primes.astype(np.int64)
    n = p.shape[0]
    ar, br = a, b
    base = np.zeros((n, 6), dtype=np.int64)
    base[:, 1] = 1
    res = np.zeros((n, 6), dtype=np.int64)
    res[:, 0] = 1
    bits = int(p.max()).bit_length()
    for bit in range(bits):
        on = ((p >> bit) & 1).astype(bool)
        res = np.where(on[:, None], _mulmod_batch(res, base, ar, br, p), res)
        base = _mulmod_batch(base, base, ar, br, p)
    frob = np.zeros((n, 6, 6), dtype=np.int64)
    col = np.zeros((n, 6), dtype=np.int64)
    col[:, 0] = 1
    for j in range(6):
        frob[:, :, j] = col
        col = _mulmod_batch(col, res, ar, br, p)
    out = np.zeros((n, 3), dtype=np.int64)
    power = frob.copy()
    pc = p[:, None, None]
    eye = np.eye(6, dtype=np.int64)[None]
    for step in range(3):
        if step:
            acc = np.zeros_like(power)
            for k in range(6):
                acc = (acc + power[:, :, k : k + 1] * frob[:, k : k + 1, :] % pc) % pc
            power = acc
        out[:, step] = 6 - _rank_batch((power - eye) % pc, p)
    return out


if numba is not None:
    _squarefree_numba = numba.njit(cache=True)(_squarefree_loop)
    _frob_signatures_numba = numba.njit(cache=True)(_frob_signatures_loop)
else:  # pragma: no cover
    _squarefree_numba = _frob_signatures_numba = None


def squarefree_table(n_max: int, backend: str | None = None) -> np.ndarray:
    """Boolean array ``t`` with ``t[n]`` true iff n is squarefree (``t[0]`` false)."""
    backend = backend or BACKEND
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if backend == "numba":
        return _squarefree_numba(int(n_max))
    return _squarefree_numpy(int(n_max))


def frobenius_signatures(a: int, b: int, primes, backend: str | None = None) -> np.ndarray:
    backend = backend or BACKEND
    primes = np.asarray(primes, dtype=np.int64)
    if primes.size and primes.max() > MAX_KERNEL_PRIME:
        raise ValueError(f"kernel primes must be below {MAX_KERNEL_PRIME}")
    if primes.size == 0:
        return np.zeros((0, 3), dtype=np.int64)
    plist = primes.tolist()
    ar = np.array([a % p for p in plist], dtype=np.int64)
    br = np.array([b % p for p in plist], dtype=np.int64)
    fn = _frob_signatures_numba if backend == "numba" else _frob_signatures_numpy
    return fn(ar, br, primes)


def frobenius_cycle_types(a: int, b: int, primes, backend: str | None = None) -> list[tuple[int, ...]]:
    """Cycle type of x^6 + a x^3 + b modulo each prime (which must not divide the discriminant)."""
    sigs = frobenius_signatures(a, b, primes, backend)
    out = []
    for p, sig in zip(np.asarray(primes).tolist(), sigs.tolist()):
        part = SIGNATURE_TO_PARTITION.get(tuple(sig))
        if part is None:
            raise ValueError(f"x^6 + {a}x^3 + {b} is not squarefree mod {p}")
        out.append(part)
    return out
