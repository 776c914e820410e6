// AVX2 kernel variants.  This TU is the only one compiled with -mavx2;
// callers must check cpuid before dispatching here.  Only mul/add lanes are
// used (no fma, contraction disabled), so every variant produces bitwise
// identical results to the scalar reference.
#include <cstddef>
#include <immintrin.h>

namespace cglab::kernels::avx2 {

void axpby(double a, const double* x, double b, const double* y, double* out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x + i)),
                                        _mm256_mul_pd(vb, _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void axpy(double a, const double* x, double* acc, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r =
            _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(acc + i, r);
    }
    for (; i < n; ++i) acc[i] += a * x[i];
}

void scale(double a, const double* x, double* out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) out[i] = a * x[i];
}

void syr2(double a, const double* u, const double* v, double* h, std::size_t d) {
    const __m256d va = _mm256_set1_pd(a);
    for (std::size_t i = 0; i < d; ++i) {
        const __m256d ui = _mm256_set1_pd(u[i]);
        const __m256d vi = _mm256_set1_pd(v[i]);
        double* row = h + i * d;
        std::size_t j = 0;
        for (; j + 4 <= d; j += 4) {
            // keep the two products separately rounded so the update stays
            // exactly symmetric
            const __m256d t = _mm256_add_pd(_mm256_mul_pd(ui, _mm256_loadu_pd(v + j)),
                                            _mm256_mul_pd(vi, _mm256_loadu_pd(u + j)));
            _mm256_storeu_pd(row + j, _mm256_add_pd(_mm256_loadu_pd(row + j), _mm256_mul_pd(va, t)));
        }
        for (; j < d; ++j) row[j] += a * (u[i] * v[j] + v[i] * u[j]);
    }
}

} // namespace cglab::kernels::avx2
