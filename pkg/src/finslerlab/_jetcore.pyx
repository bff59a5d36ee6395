# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled hot loop for truncated multivariate Taylor products."""


def mul_into(const double[::1] a, const double[::1] b, double[::1] out,
             const int[::1] ii, const int[::1] jj, const int[::1] kk):
    """out[kk[t]] += a[ii[t]] * b[jj[t]] for every table row t, in order."""
    cdef Py_ssize_t t
    cdef Py_ssize_t m = ii.shape[0]
    for t in range(m):
        out[kk[t]] += a[ii[t]] * b[jj[t]]
