#include "hamsphere/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hamsphere/exact.hpp"
#include "hamsphere/moments.hpp"

namespace hamsphere {

std::pair<double, double> wilson_ci(int successes, int trials) {
    if (trials <= 0) return {0.0, 1.0};
    const double z = 1.959963984540054;  // 95%
    double nn = trials, s = successes;
    double phat = s / nn;
    double z2 = z * z;
    double center = (phat + z2 / (2 * nn)) / (1 + z2 / nn);
    double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / (1 + z2 / nn);
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials >= 1 required");
    std::vector<double> ps = cfg.p_values;
    if (ps.empty()) {
        double pc = critical_probability(cfg.n).mid();
        for (double mult : cfg.pc_multiples) ps.push_back(mult * pc);
    }
    for (double p : ps)
        if (p < 0 || p > 1) throw std::invalid_argument("p values must lie in [0,1]");
    if (ps.empty()) return {};

    struct TrialResult {
        SearchOutcome outcome;
        std::uint64_t nodes;
    };
    const int total = static_cast<int>(ps.size()) * cfg.trials;
    std::vector<TrialResult> results(total);
    std::atomic<int> next{0};
    auto work = [&]() {
        for (int job; (job = next.fetch_add(1)) < total;) {
            int pi = job / cfg.trials;
            Complex2 c = sample_complex(cfg.n, ps[pi],
                                        trial_seed(Seed{cfg.master_seed}, job));
            SearchResult r = find_spanning_sphere(c, cfg.budget);
            results[job] = {r.outcome, r.stats.nodes};
        }
    };
    int workers = std::max(1, cfg.threads);
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::vector<SweepRecord> records;
    for (size_t pi = 0; pi < ps.size(); ++pi) {
        SweepRecord rec;
        rec.n = cfg.n;
        rec.p = ps[pi];
        rec.trials = cfg.trials;
        double node_sum = 0;
        for (int t = 0; t < cfg.trials; ++t) {
            const TrialResult& tr = results[pi * cfg.trials + t];
            if (tr.outcome == SearchOutcome::Found) ++rec.successes;
            if (tr.outcome == SearchOutcome::Timeout) ++rec.timeouts;
            node_sum += static_cast<double>(tr.nodes);
        }
        int effective = rec.trials - rec.timeouts;
        rec.phat = effective > 0 ? double(rec.successes) / effective : 0.0;
        auto [lo, hi] = wilson_ci(rec.successes, effective);
        rec.ci_low = lo;
        rec.ci_high = hi;
        rec.mean_nodes = node_sum / rec.trials;
        records.push_back(rec);
    }
    return records;
}

void emit_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << "n,p,trials,successes,timeouts,phat,ci_low,ci_high,mean_nodes\n";
    char buf[256];
    for (const SweepRecord& r : records) {
        std::snprintf(buf, sizeof buf, "%d,%.10g,%d,%d,%d,%.6f,%.6f,%.6f,%.1f\n", r.n, r.p,
                      r.trials, r.successes, r.timeouts, r.phat, r.ci_low, r.ci_high,
                      r.mean_nodes);
        out << buf;
    }
}

std::vector<SweepRecord> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) ||
        line != "n,p,trials,successes,timeouts,phat,ci_low,ci_high,mean_nodes")
        throw std::runtime_error("bad CSV header");
    std::vector<SweepRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        SweepRecord r;
        if (std::sscanf(line.c_str(), "%d,%lf,%d,%d,%d,%lf,%lf,%lf,%lf", &r.n, &r.p,
                        &r.trials, &r.successes, &r.timeouts, &r.phat, &r.ci_low,
                        &r.ci_high, &r.mean_nodes) != 9)
            throw std::runtime_error("bad CSV row: " + line);
        out.push_back(r);
    }
    return out;
}

}  // namespace hamsphere
