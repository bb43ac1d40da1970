# cython: language_level=3, boundscheck=False, wraparound=False

cdef extern from "altsum.h":
    void zk_alt_binom_sum(long N, long k0, double shift, double s_re, double s_im,
                          double *out_re, double *out_im) nogil

BACKEND = "compiled"


def alt_binom_sum(long N, long k0, double shift, s):
    """sum_{k=k0}^{N} (-1)^k C(N,k) (k+shift)^(-s) in binary128 arithmetic."""
    cdef double sr, si, re = 0.0, im = 0.0
    z = complex(s)
    sr = z.real
    si = z.imag
    with nogil:
        zk_alt_binom_sum(N, k0, shift, sr, si, &re, &im)
    return complex(re, im)
