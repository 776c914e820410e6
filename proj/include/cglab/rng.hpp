#pragma once
// splitmix64-based generator: deterministic across platforms and standard
// libraries, which keeps seeded test points and goldens byte-stable.
#include <cstdint>
#include <vector>

namespace cglab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform in the closed ball |x| <= radius (rejection from the cube)
    std::vector<double> ball(int dim, double radius) {
        std::vector<double> x(dim);
        for (;;) {
            double n2 = 0.0;
            for (int i = 0; i < dim; ++i) {
                x[i] = uniform(-1.0, 1.0);
                n2 += x[i] * x[i];
            }
            if (n2 <= 1.0) break;
        }
        for (auto& v : x) v *= radius;
        return x;
    }

private:
    std::uint64_t state_;
};

} // namespace cglab
