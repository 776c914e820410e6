#pragma once
// (c,k) positivity-region scans and the small worker pool behind them.
// Cells are distributed across threads and reduced in grid order, so output
// is byte-identical for any worker count.
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cglab {

// CG_LAB_THREADS caps the pool; 0 picks the hardware count.
int worker_count(int jobs);
void parallel_for(int count, const std::function<void(int)>& fn, int threads = 0);

// Halton low-discrepancy sequence in [0,1)
double halton(std::uint64_t index, int base);

struct RegionScanConfig {
    int n = 2;
    double c_min = -1.0, c_max = 1.0;
    int c_steps = 2;
    double k_min = 0.5, k_max = 8.0;
    int k_steps = 2;
    int sample_points = 128;
    std::uint64_t seed = 1;
    double z_max = 10.0, f_max = 10.0;  // empirical sample box |Z| <= z_max, |F| <= f_max

    void validate() const;  // throws std::invalid_argument (usage errors)
};

enum class RegionMode { closed, empirical, both };

struct RegionCell {
    double c = 0.0, k = 0.0;
    bool closed_positive = false;
    double empirical_min = 0.0;  // min sampled atiyah scalar (empirical / both)
    bool disagree = false;       // both mode: closed verdict vs sign of empirical_min
};

std::vector<RegionCell> region_scan(const RegionScanConfig& config, RegionMode mode,
                                    int threads = 0);

std::string region_csv(const std::vector<RegionCell>& cells, RegionMode mode);

} // namespace cglab
