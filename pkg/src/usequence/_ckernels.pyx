# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular kernels.  Same contracts as ``_pykernels``.

Moduli must stay below 2**32 so that every product fits in 64 bits; the
dispatcher in ``kernels`` routes larger moduli to the Python versions.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport malloc, free


cdef int64_t _inverse(int64_t a, int64_t m) except -1:
    cdef int64_t t = 0, newt = 1, r = m, newr, q, tmp
    newr = a % m
    if newr < 0:
        newr += m
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if r != 1:
        raise ZeroDivisionError(f"{a} is not invertible modulo {m}")
    if t < 0:
        t += m
    return t


cdef uint64_t _powmod(uint64_t b, uint64_t e, uint64_t m) nogil:
    cdef uint64_t r = 1 % m
    b %= m
    while e:
        if e & 1:
            r = r * b % m
        b = b * b % m
        e >>= 1
    return r


def inv_power_sum(long long start, long long stop, long long step,
                  long long k, long long m, bint alternate=False):
    cdef uint64_t total = 0, term, um = m
    cdef long long x
    cdef bint negative = False
    if step <= 0:
        raise ValueError("step must be positive")
    x = start
    while x < stop:
        if k:
            term = _powmod(<uint64_t>_inverse(x, m), <uint64_t>k, um)
        else:
            term = 1 % um
        if negative:
            total = (total + um - term) % um
        else:
            total = (total + term) % um
        if alternate:
            negative = not negative
        x += step
    return total


def u_residues(long long nmax, long long m):
    cdef uint64_t um = m
    cdef uint64_t *row = <uint64_t *>malloc((nmax + 2) * sizeof(uint64_t))
    cdef uint64_t *u = <uint64_t *>malloc((nmax + 1) * sizeof(uint64_t))
    cdef long long n, j, kk
    cdef uint64_t s
    if row == NULL or u == NULL:
        free(row)
        free(u)
        raise MemoryError()
    try:
        # row[j] holds C(n, j) mod m, updated in place row by row
        row[0] = 1 % um
        u[0] = 1 % um
        for n in range(1, nmax + 1):
            row[n] = 1 % um
            j = n - 1
            while j > 0:
                row[j] = (row[j] + row[j - 1]) % um
                j -= 1
            if n % 2:
                u[n] = 0
                continue
            s = 0
            for kk in range(1, n // 2 + 1):
                s = (s + row[2 * kk] * u[n - 2 * kk] % um) % um
            u[n] = (um - (2 * s) % um) % um
        return [u[n] for n in range(nmax + 1)]
    finally:
        free(row)
        free(u)
