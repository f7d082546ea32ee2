// Threshold sweep harness: seeded Monte Carlo trials of the spanning-sphere
// event across a p-grid, with Wilson confidence intervals and CSV output.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hamsphere/search.hpp"

namespace hamsphere {

struct SweepConfig {
    int n = 12;
    std::vector<double> p_values;          // explicit grid; or use pc_multiples
    std::vector<double> pc_multiples;      // multiples of p_c(n), used when p_values empty
    int trials = 60;
    std::uint64_t master_seed = 0;
    SearchBudget budget{10'000'000, 0};
    int threads = 1;
};

struct SweepRecord {
    int n = 0;
    double p = 0;
    int trials = 0;
    int successes = 0;
    int timeouts = 0;
    double phat = 0;  // successes / (trials - timeouts); 0 when undefined
    double ci_low = 0, ci_high = 1;  // Wilson score, 95%
    double mean_nodes = 0;
};

// Wilson score interval at 95% for s successes out of t trials.
std::pair<double, double> wilson_ci(int successes, int trials);

// One record per p value, deterministic in the master seed; trial t of grid
// point i uses trial_seed(master, i * trials + t). Timeouts are censored,
// never counted as failures.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

// CSV with header n,p,trials,successes,timeouts,phat,ci_low,ci_high,mean_nodes;
// p printed to 10 significant digits, '\n' newlines, no locale formatting.
void emit_csv(std::ostream& out, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_csv(std::istream& in);

}  // namespace hamsphere
