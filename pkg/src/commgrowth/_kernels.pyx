# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; see ``_kernels_py`` for the reference versions."""

from libc.stdlib cimport malloc, calloc, free


def symplectic_kernel_count(long long alpha, long long beta, long long modulus):
    cdef long long M = modulus
    cdef long long x, y, t, total = 0
    cdef long long *hist = <long long *> calloc(M, sizeof(long long))
    if hist == NULL:
        raise MemoryError()
    try:
        alpha %= M
        beta %= M
        if alpha < 0:
            alpha += M
        if beta < 0:
            beta += M
        t = 0
        for y in range(M):
            hist[t] += 1
            t += alpha
            if t >= M:
                t -= M
        t = 0
        for x in range(M):
            total += hist[t]
            t += beta
            if t >= M:
                t -= M
        return total
    finally:
        free(hist)


def heisenberg_tally(long long p, int n):
    cdef long long M = 1
    cdef int i
    for i in range(n):
        M *= p
    cdef int *exps = <int *> malloc(M * sizeof(int))
    cdef long long *out = <long long *> calloc(n + 1, sizeof(long long))
    cdef long long a, b, x
    cdef int v, ea, eb
    if exps == NULL or out == NULL:
        free(exps)
        free(out)
        raise MemoryError()
    try:
        exps[0] = 0
        for a in range(1, M):
            v = 0
            x = a
            while x % p == 0:
                x //= p
                v += 1
            exps[a] = n - v
        for a in range(M):
            ea = exps[a]
            for b in range(M):
                eb = exps[b]
                out[ea if ea > eb else eb] += 1
        return [out[i] for i in range(n + 1)]
    finally:
        free(exps)
        free(out)


def pgl2_canonical_counts(long long p, int n):
    cdef long long M = 1
    cdef int i
    for i in range(n):
        M *= p
    cdef char *units = <char *> malloc(M)
    cdef long long a, b, c, d, bc, r, total = 0, borel = 0
    if units == NULL:
        raise MemoryError()
    try:
        for a in range(M):
            units[a] = (a % p) != 0
        for b in range(M):
            for c in range(M):
                bc = (b * c) % M
                for d in range(M):
                    r = d - bc
                    if r < 0:
                        r += M
                    if units[r]:
                        total += 1
                        if c == 0:
                            borel += 1
        for a in range(0, M, p):
            for c in range(M):
                for d in range(M):
                    r = (a * d - c) % M
                    if r < 0:
                        r += M
                    if units[r]:
                        total += 1
                        if c == 0:
                            borel += 1
        return total, borel
    finally:
        free(units)
