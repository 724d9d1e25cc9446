#include "corrcp/signflip.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>

#include "corrcp/parallel.hpp"
#include "corrcp/rng.hpp"

namespace corrcp {

namespace {

void validate(const SignflipConfig& cfg) {
    if (cfg.trials < 1) throw TrialCountZero();
    if (!(cfg.alpha > 0.0) || cfg.alpha > 1.0)
        throw InvalidConfig("alpha must lie in (0, 1]");
}

// Exact k-th order statistic of a value stream spilled to disk: histogram
// passes narrow the containing range until the candidates fit in memory,
// then the rank is selected directly.
class SpilledPool {
public:
    SpilledPool() {
        namespace fs = std::filesystem;
        std::random_device rd;
        path_ = fs::temp_directory_path() /
                ("corrcp-pool-" + std::to_string(rd()) + "-" + std::to_string(rd()) + ".bin");
        out_.open(path_, std::ios::binary);
        if (!out_) throw IoError("cannot create temporary pool file " + path_.string());
    }
    ~SpilledPool() {
        out_.close();
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }

    void append(const Eigen::VectorXd& values) {
        out_.write(reinterpret_cast<const char*>(values.data()),
                   static_cast<std::streamsize>(values.size() * sizeof(double)));
        count_ += static_cast<std::size_t>(values.size());
        for (int i = 0; i < values.size(); ++i) {
            max_ = std::max(max_, values[i]);
            min_ = std::min(min_, values[i]);
        }
    }

    std::size_t count() const { return count_; }
    double max() const { return max_; }

    double kth_smallest(std::size_t k) {  // 1-based rank
        out_.flush();
        double lo = min_, hi = max_;
        std::size_t rank = k;
        constexpr int kBuckets = 1 << 16;
        constexpr std::size_t kDirectLimit = 1 << 21;

        for (;;) {
            if (!(hi > lo)) return lo;
            // Count entries below the current range, inside each bucket.
            std::vector<std::size_t> bucket(kBuckets, 0);
            std::size_t below = 0;
            const double width = (hi - lo) / kBuckets;
            scan([&](double v) {
                if (v < lo)
                    ++below;
                else if (v <= hi) {
                    int b = std::min(kBuckets - 1, static_cast<int>((v - lo) / width));
                    ++bucket[static_cast<std::size_t>(b)];
                }
            });
            if (rank <= below) {
                // Range guess was too high; fall back to direct selection.
                return direct_select(k);
            }
            std::size_t remaining = rank - below;
            int chosen = 0;
            for (; chosen < kBuckets; ++chosen) {
                if (remaining <= bucket[static_cast<std::size_t>(chosen)]) break;
                remaining -= bucket[static_cast<std::size_t>(chosen)];
            }
            if (chosen >= kBuckets) return hi;
            double nlo = lo + chosen * width;
            double nhi = chosen == kBuckets - 1 ? hi : nlo + width;
            std::size_t in_bucket = bucket[static_cast<std::size_t>(chosen)];
            if (in_bucket <= kDirectLimit) {
                std::vector<double> candidates;
                candidates.reserve(in_bucket);
                scan([&](double v) {
                    if (v >= nlo && v <= nhi) {
                        int b = std::min(kBuckets - 1, static_cast<int>((v - lo) / width));
                        if (b == chosen) candidates.push_back(v);
                    }
                });
                std::nth_element(candidates.begin(),
                                 candidates.begin() + static_cast<std::ptrdiff_t>(remaining - 1),
                                 candidates.end());
                return candidates[remaining - 1];
            }
            // Narrow to the chosen bucket and rescan with the global rank.
            lo = nlo;
            hi = nhi;
            rank = k;
        }
    }

private:
    template <typename Fn>
    void scan(Fn&& fn) {
        std::ifstream in(path_, std::ios::binary);
        if (!in) throw IoError("cannot reopen temporary pool file");
        std::vector<double> buf(1 << 16);
        while (in) {
            in.read(reinterpret_cast<char*>(buf.data()),
                    static_cast<std::streamsize>(buf.size() * sizeof(double)));
            std::streamsize got = in.gcount() / static_cast<std::streamsize>(sizeof(double));
            for (std::streamsize i = 0; i < got; ++i) fn(buf[static_cast<std::size_t>(i)]);
        }
    }

    double direct_select(std::size_t k) {
        std::vector<double> all;
        all.reserve(count_);
        scan([&](double v) { all.push_back(v); });
        std::nth_element(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k - 1), all.end());
        return all[k - 1];
    }

    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t count_ = 0;
    double max_ = -std::numeric_limits<double>::infinity();
    double min_ = std::numeric_limits<double>::infinity();
};

}  // namespace

double lower_quantile(std::vector<double>& pooled, double alpha) {
    if (pooled.empty()) return 0.0;
    const std::size_t n = pooled.size();
    std::size_t k = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n)));
    k = std::clamp<std::size_t>(k, 1, n);
    std::nth_element(pooled.begin(), pooled.begin() + static_cast<std::ptrdiff_t>(k - 1),
                     pooled.end());
    return pooled[k - 1];
}

Eigen::MatrixXd rademacher_matrix(int p, int T, std::uint64_t seed, int trial_index) {
    Eigen::MatrixXd signs(p, T);
    for (int i = 0; i < p; ++i)
        for (int t = 0; t < T; ++t)
            signs(i, t) = rng::rademacher_sign(seed, static_cast<std::uint32_t>(trial_index),
                                               static_cast<std::uint32_t>(i),
                                               static_cast<std::uint32_t>(t));
    return signs;
}

HalfVector signflip_trial(const ObservationMatrix& data, int trial_index, std::uint64_t seed) {
    ObservationMatrix flipped;
    flipped.values = data.values.cwiseProduct(rademacher_matrix(data.p(), data.T(), seed,
                                                                trial_index));
    return compute_w(standardize(flipped));
}

ThresholdReport compute_thresholds(const ObservationMatrix& data, const SignflipConfig& cfg) {
    validate(cfg);

    ThresholdReport report;
    report.trials = cfg.trials;
    report.alpha = cfg.alpha;
    report.seed = cfg.seed;

    const std::size_t per_trial = static_cast<std::size_t>(pair_count(data.p()));
    const std::size_t pooled_size = per_trial * static_cast<std::size_t>(cfg.trials);
    if (pooled_size == 0) return report;  // p = 1: no pairs, thresholds stay 0

    if (pooled_size <= cfg.pooled_memory_budget) {
        std::vector<HalfVector> trials(static_cast<std::size_t>(cfg.trials));
        parallel_for(static_cast<std::size_t>(cfg.trials), 1, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t m = lo; m < hi; ++m)
                trials[m] = signflip_trial(data, static_cast<int>(m), cfg.seed);
        });

        std::vector<double> pooled;
        pooled.reserve(pooled_size);
        for (const auto& trial : trials)
            pooled.insert(pooled.end(), trial.entries.data(),
                          trial.entries.data() + trial.entries.size());

        report.tau1 = *std::max_element(pooled.begin(), pooled.end());
        report.tau2 = lower_quantile(pooled, cfg.alpha);
        if (cfg.store_trials) report.trial_vectors = std::move(trials);
        return report;
    }

    // Spill path: run trials in memory-bounded batches, stream entries to a
    // temporary file, then select the quantile rank in passes over the file.
    SpilledPool pool;
    const std::size_t batch =
        std::max<std::size_t>(1, cfg.pooled_memory_budget / std::max<std::size_t>(1, per_trial));
    std::vector<HalfVector> slots(batch);
    for (std::size_t first = 0; first < static_cast<std::size_t>(cfg.trials); first += batch) {
        const std::size_t last = std::min<std::size_t>(first + batch,
                                                       static_cast<std::size_t>(cfg.trials));
        parallel_for(last - first, 1, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t m = lo; m < hi; ++m)
                slots[m] = signflip_trial(data, static_cast<int>(first + m), cfg.seed);
        });
        for (std::size_t m = 0; m < last - first; ++m) pool.append(slots[m].entries);
    }

    report.tau1 = pool.max();
    std::size_t k = static_cast<std::size_t>(
        std::ceil(cfg.alpha * static_cast<double>(pool.count())));
    k = std::clamp<std::size_t>(k, 1, pool.count());
    report.tau2 = pool.kth_smallest(k);
    return report;
}

}  // namespace corrcp
