#include <quadmath.h>
#include "altsum.h"

void zk_alt_binom_sum(long N, long k0, double shift, double s_re, double s_im,
                      double *out_re, double *out_im)
{
    __float128 binom = 1.0Q; /* C(N, k), updated incrementally */
    __float128 acc_re = 0.0Q, acc_im = 0.0Q;
    __float128 sr = s_re, si = s_im;
    long k;

    for (k = 0; k < k0 && k <= N; k++)
        binom = binom * (__float128)(N - k) / (__float128)(k + 1);

    for (k = k0; k <= N; k++) {
        __float128 base = (__float128)k + (__float128)shift;
        __float128 lb = logq(base);
        __float128 mag = expq(-sr * lb);
        __float128 ph = -si * lb;
        __float128 term = (k & 1) ? -binom : binom;
        acc_re += term * mag * cosq(ph);
        acc_im += term * mag * sinq(ph);
        binom = binom * (__float128)(N - k) / (__float128)(k + 1);
    }
    *out_re = (double)acc_re;
    *out_im = (double)acc_im;
}
