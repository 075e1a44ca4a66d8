# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled centroid kernel.

Keep the arithmetic in lockstep with ``_centroid_py.centroid``: same
operations in the same order, plain doubles, so both kernels produce
bit-identical results (the build also disables FP contraction).
"""

BACKEND = "compiled"


def centroid(const double[::1] xs, const double[::1] table, const double[::1] clips):
    cdef Py_ssize_t npts = xs.shape[0]
    cdef Py_ssize_t nterms = clips.shape[0]
    cdef Py_ssize_t last = npts - 1
    cdef double num = 0.0
    cdef double den = 0.0
    cdef double mu, m, ck, v, w, t
    cdef Py_ssize_t i, k
    for i in range(npts):
        mu = 0.0
        for k in range(nterms):
            m = table[k * npts + i]
            ck = clips[k]
            v = ck if ck < m else m
            if v > mu:
                mu = v
        w = 0.5 if (i == 0 or i == last) else 1.0
        t = w * mu
        den += t
        num += t * xs[i]
    return num / den
