#pragma once
// Array kernels behind the jet arithmetic.  Every kernel has a scalar
// reference implementation and (on x86) an AVX2 variant; the active variant
// is picked once at startup from cpuid and can be overridden with the
// environment variable CG_LAB_SIMD=scalar|avx2 or force().  All variants
// use plain mul/add rounding (fp contraction off), so they are bitwise
// equivalent and symmetric updates stay exactly symmetric.
#include <cstddef>

namespace cglab::kernels {

enum class Isa { scalar, avx2, neon };

Isa active();
const char* isa_name(Isa isa);

// Override dispatch; throws std::invalid_argument if the ISA is not
// supported on this host.
void force(Isa isa);

// out[i] = a*x[i] + b*y[i]
void axpby(double a, const double* x, double b, const double* y, double* out, std::size_t n);
// acc[i] += a*x[i]
void axpy(double a, const double* x, double* acc, std::size_t n);
// out[i] = a*x[i]
void scale(double a, const double* x, double* out, std::size_t n);
// h[i*d+j] += a*(u[i]*v[j] + v[i]*u[j]), dense d x d symmetric rank-2 update
void syr2(double a, const double* u, const double* v, double* h, std::size_t d);

// Scalar reference implementations, always available (equivalence tests
// compare the dispatched kernels against these).
namespace ref {
void axpby(double a, const double* x, double b, const double* y, double* out, std::size_t n);
void axpy(double a, const double* x, double* acc, std::size_t n);
void scale(double a, const double* x, double* out, std::size_t n);
void syr2(double a, const double* u, const double* v, double* h, std::size_t d);
} // namespace ref

} // namespace cglab::kernels
