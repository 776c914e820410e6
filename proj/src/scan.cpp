#include "cglab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "cglab/closed_forms.hpp"

namespace cglab {

int worker_count(int jobs) {
    int cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap <= 0) cap = 1;
    if (const char* env = std::getenv("CG_LAB_THREADS")) {
        const int want = std::atoi(env);
        if (want > 0) cap = std::min(cap, want);
    }
    return std::max(1, std::min(cap, jobs));
}

void parallel_for(int count, const std::function<void(int)>& fn, int threads) {
    if (count <= 0) return;
    const int workers = threads > 0 ? std::min(threads, count) : worker_count(count);
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

double halton(std::uint64_t index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

void RegionScanConfig::validate() const {
    if (n < 2) throw std::invalid_argument("region scan needs n >= 2");
    if (c_steps < 2 || k_steps < 2) throw std::invalid_argument("region scan needs >= 2 steps per axis");
    if (!(k_min > 0.0)) throw std::invalid_argument("region scan needs k_min > 0");
    if (!(c_min <= c_max) || !(k_min <= k_max) || !std::isfinite(c_min) || !std::isfinite(c_max) ||
        !std::isfinite(k_min) || !std::isfinite(k_max))
        throw std::invalid_argument("region scan ranges must be finite and ordered");
    if (static_cast<long long>(c_steps) * k_steps > 1000000LL)
        throw std::invalid_argument("region scan grid exceeds 10^6 cells");
    if (sample_points < 1) throw std::invalid_argument("region scan needs sample_points >= 1");
    if (!(z_max > 0.0) || !(f_max > 0.0)) throw std::invalid_argument("region sample box must be positive");
}

std::vector<RegionCell> region_scan(const RegionScanConfig& config, RegionMode mode, int threads) {
    config.validate();
    const int cells = config.c_steps * config.k_steps;
    std::vector<RegionCell> out(cells);

    // s^A depends on the fiber point only through (|Z|, |F|), so the box is
    // sampled once, in norm space, and shared by every cell.
    std::vector<std::pair<double, double>> norms;
    if (mode != RegionMode::closed) {
        norms.reserve(config.sample_points + 1);
        norms.emplace_back(0.0, 0.0);  // the zero section is always in the box
        for (int s = 0; s < config.sample_points; ++s) {
            const std::uint64_t h = config.seed + static_cast<std::uint64_t>(s);
            const double z = config.z_max * halton(h, 2);
            const double f = config.f_max * halton(h, 3);
            norms.emplace_back(z * z, f * f);
        }
    }

    parallel_for(
        cells,
        [&](int idx) {
            const int ci = idx / config.k_steps;
            const int ki = idx % config.k_steps;
            RegionCell cell;
            cell.c = config.c_min + ci * (config.c_max - config.c_min) / (config.c_steps - 1);
            cell.k = config.k_min + ki * (config.k_max - config.k_min) / (config.k_steps - 1);
            cell.closed_positive = positivity_predicate(config.n, cell.c, cell.k);
            if (mode != RegionMode::closed) {
                double lo = atiyah_scalar_from_norms(config.n, cell.c, cell.k, 0.0, 0.0);
                for (const auto& [z2, f2] : norms)
                    lo = std::min(lo, atiyah_scalar_from_norms(config.n, cell.c, cell.k, z2, f2));
                cell.empirical_min = lo;
                cell.disagree = cell.closed_positive != (lo > 0.0);
            }
            out[idx] = cell;
        },
        threads);
    return out;
}

std::string region_csv(const std::vector<RegionCell>& cells, RegionMode mode) {
    std::string s = "c,k,closed_positive";
    if (mode != RegionMode::closed) s += ",empirical_min";
    if (mode == RegionMode::both) s += ",disagree";
    s += "\n";
    char buf[128];
    for (const auto& cell : cells) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%s", cell.c, cell.k,
                      cell.closed_positive ? "true" : "false");
        s += buf;
        if (mode != RegionMode::closed) {
            std::snprintf(buf, sizeof(buf), ",%.12g", cell.empirical_min);
            s += buf;
        }
        if (mode == RegionMode::both) s += cell.disagree ? ",true" : ",false";
        s += "\n";
    }
    return s;
}

} // namespace cglab
