#ifndef ZETAKIT_ALTSUM_H
#define ZETAKIT_ALTSUM_H

/* sum_{k=k0}^{N} (-1)^k C(N,k) (k+shift)^(-s), accumulated in binary128.
   Result rounded to double. */
void zk_alt_binom_sum(long N, long k0, double shift, double s_re, double s_im,
                      double *out_re, double *out_im);

#endif
