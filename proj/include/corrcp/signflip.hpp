#pragma once

#include <cstdint>
#include <vector>

#include "corrcp/core.hpp"

namespace corrcp {

struct SignflipConfig {
    int trials = 30;
    double alpha = 0.95;  // quantile level for tau2, in (0, 1]
    std::uint64_t seed = 0;
    bool store_trials = false;  // retain the q trial vectors in the report
    // Above this many pooled entries (trials * p(p-1)/2) the pooled values
    // are spilled to a temporary file and the quantile is selected in two
    // passes instead of being held in memory.
    std::size_t pooled_memory_budget = 10'000'000;

    static SignflipConfig detection(std::uint64_t seed) {
        SignflipConfig cfg;
        cfg.trials = 30;
        cfg.seed = seed;
        return cfg;
    }
    static SignflipConfig estimation(std::uint64_t seed) {
        SignflipConfig cfg;
        cfg.trials = 20;
        cfg.seed = seed;
        return cfg;
    }
};

struct ThresholdReport {
    double tau1 = 0.0;  // max of all pooled trial entries
    double tau2 = 0.0;  // lower empirical alpha-quantile of the same pool
    int trials = 0;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    bool surrogate = false;  // produced by the vech-pipeline calibrator
    std::vector<HalfVector> trial_vectors;  // kept only when requested
};

// Lower empirical quantile: the order statistic at rank ceil(alpha * n),
// 1-based.  Never exceeds the maximum; alpha = 1 returns the maximum.
// Reorders `pooled` in place.
double lower_quantile(std::vector<double>& pooled, double alpha);

// One trial of the threshold recipe: flip every raw entry by an independent
// Rademacher sign keyed (seed, trial_index, var, time), re-standardize the
// flipped matrix from scratch, and take its weighted statistic.  Identical
// inputs give bit-identical output regardless of execution order.
HalfVector signflip_trial(const ObservationMatrix& data, int trial_index, std::uint64_t seed);

// Materialized sign matrix for one trial; the same signs signflip_trial
// applies internally.  Exported so independent recomputation paths can apply
// the flips themselves.
Eigen::MatrixXd rademacher_matrix(int p, int T, std::uint64_t seed, int trial_index);

// Runs cfg.trials independent trials and pools all entries: tau1 is the
// pooled maximum, tau2 the lower alpha-quantile of the pool.
ThresholdReport compute_thresholds(const ObservationMatrix& data, const SignflipConfig& cfg);

}  // namespace corrcp
