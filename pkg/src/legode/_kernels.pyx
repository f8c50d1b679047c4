# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for banded basis-matrix construction and accumulation.

Same semantics as legode._kernels_py; internal generator recurrences and
entry products run in C long double so that matrix entries stay accurate
to a few 1e-16 relative even for bands of several hundred diagonals.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport sqrtl
from libc.stdlib cimport free, malloc

cnp.import_array()

ctypedef long double ld

BACKEND = "cython"


cdef void _fill_generators(int d, int nh, int nt, ld* hv, ld* tv) nogil:
    # hv[i] = h(d, d + 2i) ; tv[i] = t(d, d - 2i)
    cdef int i, j
    cdef ld acc = 1.0, g, a
    for j in range(1, d + 1):
        acc *= (<ld>(2 * j)) / (<ld>(2 * j - 1))
    hv[0] = acc / (<ld>(2 * d + 1))
    for i in range(nh - 1):
        g = <ld>(d + 2 * i)
        hv[i + 1] = hv[i] * ((g + d + 1) / (g + d + 3)) \
            * ((g + d + 2) / (g + d + 1)) * ((g - d + 1) / (g - d + 2))
    acc = 1.0
    for j in range(1, d + 1):
        acc *= (<ld>(2 * j - 1)) / (<ld>(2 * j))
    tv[0] = acc / sqrtl(2.0)
    for i in range(nt - 1):
        a = <ld>(d - 2 * i)
        tv[i + 1] = tv[i] * ((d - a + 2) * (d - a + 1) / ((d + a) * (d + a - 1))) \
            * (((d + a) / 2) * ((d + a) / 2)) / (((d - a) / 2 + 1) * ((d - a) / 2 + 1))


cdef inline ld _ht(int d, int k, int c, ld* hv, ld* tv) nogil:
    # h(d, k+c) * t(d, |k-c|) under the selection rules; 0 outside.
    cdef int g = k + c
    cdef int al = k - c
    if al < 0:
        al = -al
    if g < d or al > d or ((g + d) & 1):
        return 0.0
    return hv[(g - d) >> 1] * tv[(d - al) >> 1]


cdef int _accumulate(int d, int M, double complex w, double complex* band,
                     int row0, int stride, ld* sq) except -1 nogil:
    # band[(row0 + o + d + 1)*stride + l] += w * b^(d)_{l+o, l}
    cdef int nh = M + 2
    cdef int nt = d // 2 + 1
    cdef ld* hv = <ld*> malloc(nh * sizeof(ld))
    cdef ld* tv = <ld*> malloc(nt * sizeof(ld))
    if hv == NULL or tv == NULL:
        if hv != NULL:
            free(hv)
        if tv != NULL:
            free(tv)
        with gil:
            raise MemoryError()
    _fill_generators(d, nh, nt, hv, tv)
    cdef int o, l, k, r, lmin, lmax
    cdef ld term, val
    for o in range(-(d + 1), d + 2):
        r = row0 + o + d + 1
        lmin = -o if o < 0 else 0
        lmax = M - o if o > 0 else M
        for l in range(lmin, lmax):
            k = l + o
            term = _ht(d, k, l + 1, hv, tv)
            if l == 0:
                term = term + _ht(d, k, 0, hv, tv)
            else:
                term = term - _ht(d, k, l - 1, hv, tv)
            if term != 0.0:
                val = term * sq[2 * d + 1] * sq[2 * k + 1] / sq[2 * l + 1]
                band[r * stride + l] += w * <double> val
    free(hv)
    free(tv)
    return 0


cdef ld* _sqrt_table(int n) except NULL:
    cdef ld* sq = <ld*> malloc(n * sizeof(ld))
    if sq == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        sq[i] = sqrtl(<ld> i)
    return sq


def basis_block(int d, int M):
    """Band of B^(d)_M, shape (2d+3, M); row o + d + 1 holds offset o."""
    out = np.zeros((2 * d + 3, M), dtype=complex)
    cdef double complex[:, ::1] view = out
    cdef ld* sq = _sqrt_table(2 * (M + d) + 4)
    try:
        _accumulate(d, M, 1.0, &view[0, 0], 0, M, sq)
    finally:
        free(sq)
    return out.real.copy()


def assemble_band(cnp.ndarray alpha_in, int M):
    """Band of sum_d alpha[d] * B^(d)_M, shape (2N+3, M), N = len(alpha)-1."""
    alpha = np.ascontiguousarray(alpha_in, dtype=complex)
    cdef double complex[::1] al = alpha
    cdef int N = alpha.shape[0] - 1
    out = np.zeros((2 * N + 3, M), dtype=complex)
    cdef double complex[:, ::1] view = out
    cdef ld* sq = _sqrt_table(2 * (M + N) + 4)
    cdef int d
    try:
        with nogil:
            for d in range(N + 1):
                if al[d] != 0:
                    _accumulate(d, M, al[d], &view[0, 0], N - d, M, sq)
    finally:
        free(sq)
    return out
