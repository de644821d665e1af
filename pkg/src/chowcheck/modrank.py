"""Dense Gaussian elimination over a prime field GF(p).

This is the one genuinely hot numeric loop in the package: modular rank
certificates reduce big exact eliminations to int64 arithmetic.  Two
interchangeable backends are provided:

* a numba ``@njit`` kernel (default when numba imports cleanly), and
* a vectorised pure-numpy fallback.

The backend is chosen once at import time from the ``CHOWCHECK_BACKEND``
environment variable (``numba`` or ``numpy``).  Both backends run the
same elimination and always return identical ranks; the flag trades
compilation time against per-call speed and exists only so the package
works, and can be benchmarked, without a working numba install.

All arithmetic stays below 2**63: entries are reduced into [0, p) and
p is capped so that p*p fits in int64.

Run ``python -m chowcheck.modrank`` for a backend comparison benchmark.
"""

from __future__ import annotations

import os
import time

import numpy as np

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        def wrap(func):
            return func
        if args and callable(args[0]):
            return args[0]
        return wrap


DEFAULT_PRIME = 1000003

# largest p with (p-1)**2 < 2**63, so products of reduced entries fit int64
MAX_PRIME = 3037000499


def _select_backend():
    choice = os.environ.get("CHOWCHECK_BACKEND", "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not NUMBA_AVAILABLE:
            raise RuntimeError("CHOWCHECK_BACKEND=numba but numba is not importable")
        return "numba"
    if choice:
        raise RuntimeError(f"unknown CHOWCHECK_BACKEND value: {choice!r}")
    return "numba" if NUMBA_AVAILABLE else "numpy"


_BACKEND = _select_backend()


def active_backend():
    """Name of the elimination backend in use ('numba' or 'numpy')."""
    return _BACKEND


@njit(cache=True)
def _powmod(base, exp, p):  # pragma: no cover - compiled
    result = 1
    base %= p
    while exp > 0:
        if exp & 1:
            result = result * base % p
        base = base * base % p
        exp >>= 1
    return result


@njit(cache=True)
def _rank_mod_njit(a, p):  # pragma: no cover - compiled
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv == -1:
            continue
        if piv != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _powmod(a[r, c], p - 2, p)
        for j in range(c, cols):
            a[r, j] = a[r, j] * inv % p
        for i in range(r + 1, rows):
            f = a[i, c]
            if f != 0:
                for j in range(c, cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        r += 1
        if r == rows:
            break
    return r


def _rank_mod_numpy(a, p):
    """Reference elimination with vectorised row updates.

    Parameters
    ----------
    a : ndarray of int64, shape (rows, cols)
        Matrix with entries already reduced into [0, p).  Destroyed.
    p : int
        Prime modulus.

    Returns
    -------
    int
        Rank of the matrix over GF(p).
    """
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = a[r, c:] * inv % p
        f = a[r + 1:, c]
        hit = np.nonzero(f)[0]
        if hit.size:
            block = a[r + 1:, c:]
            block[hit] = (block[hit] - f[hit, None] * a[r, c:]) % p
        r += 1
        if r == rows:
            break
    return r


def rank_mod(matrix, p=DEFAULT_PRIME):
    """Rank of an integer matrix over GF(p).

    Parameters
    ----------
    matrix : sequence of rows, or 2-D ndarray
        Integer entries; they are reduced mod p on entry.
    p : int
        Prime modulus, at most MAX_PRIME.

    Returns
    -------
    int
    """
    if p < 2 or p > MAX_PRIME:
        raise ValueError(f"modulus {p} out of supported range")
    a = np.array([[x % p for x in row] for row in matrix], dtype=np.int64)
    if a.size == 0:
        return 0
    a = a.reshape(len(matrix), -1)
    if _BACKEND == "numba":
        return int(_rank_mod_njit(a, p))
    return int(_rank_mod_numpy(a, p))


def run_benchmark(shapes=((120, 180), (300, 450), (500, 800)),
                  p=DEFAULT_PRIME, seed=0, repeats=3):
    """Time both backends on random matrices and check they agree.

    Returns
    -------
    list of dict
        One entry per shape with keys ``shape``, ``numpy_s``, ``numba_s``
        (None when numba is unavailable), and ``rank``.
    """
    rng = np.random.default_rng(seed)
    results = []
    for shape in shapes:
        base = rng.integers(0, p, size=shape, dtype=np.int64)
        if NUMBA_AVAILABLE:
            _rank_mod_njit(base.copy(), p)  # warm the JIT cache
        t0 = time.perf_counter()
        for _ in range(repeats):
            rank_np = _rank_mod_numpy(base.copy(), p)
        numpy_s = (time.perf_counter() - t0) / repeats
        numba_s = None
        rank_nb = rank_np
        if NUMBA_AVAILABLE:
            t0 = time.perf_counter()
            for _ in range(repeats):
                rank_nb = int(_rank_mod_njit(base.copy(), p))
            numba_s = (time.perf_counter() - t0) / repeats
        if rank_nb != rank_np:
            raise AssertionError(f"backend mismatch at {shape}: {rank_nb} != {rank_np}")
        results.append({"shape": shape, "numpy_s": numpy_s,
                        "numba_s": numba_s, "rank": rank_np})
    return results


def print_benchmark_results(results):
    print(f"modular elimination benchmark (backend flag: {_BACKEND})")
    print(f"{'shape':>12} {'rank':>6} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>9}")
    for row in results:
        shape = f"{row['shape'][0]}x{row['shape'][1]}"
        numpy_ms = row["numpy_s"] * 1e3
        if row["numba_s"] is None:
            print(f"{shape:>12} {row['rank']:>6} {numpy_ms:>12.2f} {'n/a':>12} {'n/a':>9}")
        else:
            numba_ms = row["numba_s"] * 1e3
            print(f"{shape:>12} {row['rank']:>6} {numpy_ms:>12.2f} "
                  f"{numba_ms:>12.2f} {numpy_ms / numba_ms:>8.1f}x")


if __name__ == "__main__":
    print_benchmark_results(run_benchmark())
