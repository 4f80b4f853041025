/* Row-wise x -> x**alpha for non-negative x, with an AVX2 path backed by
   glibc's libmvec when the build found it and the CPU supports it. */
#ifndef SOCIOGROW_SIMD_H
#define SOCIOGROW_SIMD_H

#include <math.h>
#include <stddef.h>

static double sg_pow_row_scalar(double *x, ptrdiff_t n, double alpha)
{
    double total = 0.0;
    for (ptrdiff_t j = 0; j < n; j++) {
        double v = x[j];
        if (v > 0.0) {
            v = pow(v, alpha);
            x[j] = v;
            total += v;
        }
    }
    return total;
}

#if defined(SOCIOGROW_HAVE_MVEC) && defined(__x86_64__) && defined(__GNUC__)
#include <immintrin.h>

extern __m256d _ZGVdN4vv_pow(__m256d x, __m256d y);

__attribute__((target("avx2,fma")))
static double sg_pow_row_avx2(double *x, ptrdiff_t n, double alpha)
{
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d tiny = _mm256_set1_pd(1.0);
    __m256d acc = zero;
    ptrdiff_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d v = _mm256_loadu_pd(x + j);
        __m256d pos = _mm256_cmp_pd(v, zero, _CMP_GT_OQ);
        /* feed 1.0 to the zero lanes so pow never sees 0, then mask them off */
        __m256d r = _ZGVdN4vv_pow(_mm256_blendv_pd(tiny, v, pos), va);
        r = _mm256_and_pd(r, pos);
        _mm256_storeu_pd(x + j, r);
        acc = _mm256_add_pd(acc, r);
    }
    double lanes[4];
    _mm256_storeu_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    return total + sg_pow_row_scalar(x + j, n - j, alpha);
}

static int sg_simd_level(void)
{
    static int level = -1;
    if (level < 0) {
        __builtin_cpu_init();
        level = (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) ? 1 : 0;
    }
    return level;
}

static double sg_pow_row(double *x, ptrdiff_t n, double alpha, int allow_simd)
{
    if (allow_simd && sg_simd_level() == 1)
        return sg_pow_row_avx2(x, n, alpha);
    return sg_pow_row_scalar(x, n, alpha);
}

#else

static int sg_simd_level(void) { return 0; }

static double sg_pow_row(double *x, ptrdiff_t n, double alpha, int allow_simd)
{
    (void)allow_simd;
    return sg_pow_row_scalar(x, n, alpha);
}

#endif
#endif
