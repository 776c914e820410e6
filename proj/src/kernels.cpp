#include "cglab/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#if defined(__aarch64__) || defined(__ARM_NEON)
#define CGLAB_NEON 1
#include <arm_neon.h>
#else
#define CGLAB_NEON 0
#endif

namespace cglab::kernels {

namespace ref {

void axpby(double a, const double* x, double b, const double* y, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void axpy(double a, const double* x, double* acc, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += a * x[i];
}

void scale(double a, const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i];
}

void syr2(double a, const double* u, const double* v, double* h, std::size_t d) {
    // rounding is arranged so the update is exactly symmetric: u[i]*v[j] and
    // v[j]*u[i] round identically, and the outer sum/product order matches
    // across the diagonal
    for (std::size_t i = 0; i < d; ++i) {
        const double ui = u[i];
        const double vi = v[i];
        double* row = h + i * d;
        for (std::size_t j = 0; j < d; ++j) row[j] += a * (ui * v[j] + vi * u[j]);
    }
}

} // namespace ref

#if CGLAB_NEON
namespace neon {

void axpby(double a, const double* x, double b, const double* y, double* out, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t r =
            vaddq_f64(vmulq_f64(va, vld1q_f64(x + i)), vmulq_f64(vb, vld1q_f64(y + i)));
        vst1q_f64(out + i, r);
    }
    for (; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void axpy(double a, const double* x, double* acc, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(acc + i,
                  vaddq_f64(vld1q_f64(acc + i), vmulq_f64(va, vld1q_f64(x + i))));
    for (; i < n; ++i) acc[i] += a * x[i];
}

void scale(double a, const double* x, double* out, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(va, vld1q_f64(x + i)));
    for (; i < n; ++i) out[i] = a * x[i];
}

void syr2(double a, const double* u, const double* v, double* h, std::size_t d) {
    const float64x2_t va = vdupq_n_f64(a);
    for (std::size_t i = 0; i < d; ++i) {
        const float64x2_t ui = vdupq_n_f64(u[i]);
        const float64x2_t vi = vdupq_n_f64(v[i]);
        double* row = h + i * d;
        std::size_t j = 0;
        for (; j + 2 <= d; j += 2) {
            // keep the two products separately rounded so the update stays
            // exactly symmetric
            const float64x2_t t =
                vaddq_f64(vmulq_f64(ui, vld1q_f64(v + j)), vmulq_f64(vi, vld1q_f64(u + j)));
            vst1q_f64(row + j, vaddq_f64(vld1q_f64(row + j), vmulq_f64(va, t)));
        }
        for (; j < d; ++j) row[j] += a * (u[i] * v[j] + v[i] * u[j]);
    }
}

} // namespace neon
#endif // CGLAB_NEON

#if defined(CGLAB_HAVE_AVX2_TU)
namespace avx2 {
void axpby(double a, const double* x, double b, const double* y, double* out, std::size_t n);
void axpy(double a, const double* x, double* acc, std::size_t n);
void scale(double a, const double* x, double* out, std::size_t n);
void syr2(double a, const double* u, const double* v, double* h, std::size_t d);
} // namespace avx2
#endif

namespace {

bool isa_supported(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(CGLAB_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::neon:
        return CGLAB_NEON != 0;
    }
    return false;
}

Isa detect() {
    if (const char* env = std::getenv("CG_LAB_SIMD")) {
        const std::string want(env);
        if (want == "scalar") return Isa::scalar;
        if (want == "avx2" && isa_supported(Isa::avx2)) return Isa::avx2;
        if (want == "neon" && isa_supported(Isa::neon)) return Isa::neon;
        return Isa::scalar; // unknown or unsupported request: fall back
    }
    if (isa_supported(Isa::avx2)) return Isa::avx2;
    if (isa_supported(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

struct Table {
    void (*axpby)(double, const double*, double, const double*, double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale)(double, const double*, double*, std::size_t);
    void (*syr2)(double, const double*, const double*, double*, std::size_t);
};

Table table_for(Isa isa) {
    switch (isa) {
#if defined(CGLAB_HAVE_AVX2_TU)
    case Isa::avx2:
        return {avx2::axpby, avx2::axpy, avx2::scale, avx2::syr2};
#endif
#if CGLAB_NEON
    case Isa::neon:
        return {neon::axpby, neon::axpy, neon::scale, neon::syr2};
#endif
    default:
        return {ref::axpby, ref::axpy, ref::scale, ref::syr2};
    }
}

Isa g_isa = detect();
Table g_table = table_for(g_isa);

} // namespace

Isa active() { return g_isa; }

const char* isa_name(Isa isa) {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "?";
}

void force(Isa isa) {
    if (!isa_supported(isa))
        throw std::invalid_argument(std::string("isa not supported on this host: ") + isa_name(isa));
    g_isa = isa;
    g_table = table_for(isa);
}

void axpby(double a, const double* x, double b, const double* y, double* out, std::size_t n) {
    g_table.axpby(a, x, b, y, out, n);
}
void axpy(double a, const double* x, double* acc, std::size_t n) { g_table.axpy(a, x, acc, n); }
void scale(double a, const double* x, double* out, std::size_t n) { g_table.scale(a, x, out, n); }
void syr2(double a, const double* u, const double* v, double* h, std::size_t d) {
    g_table.syr2(a, u, v, h, d);
}

} // namespace cglab::kernels
