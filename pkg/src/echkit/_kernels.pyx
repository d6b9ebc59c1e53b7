# cython: language_level=3
"""Compiled max-plus kernels; float-only twin of ``_pykernels``."""

from libc.math cimport sqrt


cdef inline long _ball_index(long k) nogil:
    cdef long d = <long>((sqrt(8.0 * k + 1.0) - 1.0) / 2.0)
    # float sqrt may be off by one near perfect squares
    while (d + 1) * (d + 2) // 2 <= k:
        d += 1
    while d * (d + 1) // 2 > k:
        d -= 1
    return d


def ball_index(long k):
    return _ball_index(k)


def ball_sequence(double a, long kmax):
    cdef long k
    return [a * _ball_index(k) for k in range(kmax + 1)]


def maxplus_convolve(acc, seq):
    cdef double[::1] A = _as_doubles(acc)
    cdef double[::1] S = _as_doubles(seq)
    cdef Py_ssize_t n = A.shape[0]
    if S.shape[0] < n:
        raise ValueError("seq shorter than acc")
    cdef double[::1] out = _as_doubles([0.0] * n)
    cdef Py_ssize_t k, j
    cdef double best, v
    with nogil:
        for k in range(n):
            best = A[0] + S[k]
            for j in range(1, k + 1):
                v = A[j] + S[k - j]
                if v > best:
                    best = v
            out[k] = best
    return list(out)


cdef double[::1] _as_doubles(obj):
    from array import array
    return array("d", obj)
