#pragma once

#include <cstdint>
#include <optional>

#include "corrcp/estimate.hpp"

namespace corrcp {

struct SmoteConfig {
    double gamma = 0.9;      // minority window is columns floor(gamma*T)+1 .. T
    double epsilon = 1e-3;   // convergence tolerance on |beta0 - beta1|
    int max_iterations = 25; // safety cap on augmentation rounds
    int k_neighbors = 5;     // fixed by the recipe
    std::uint64_t seed = 0;
    std::optional<double> forced_u;  // test hook: overrides the interpolation draw
};

// Original columns followed by the synthetic ones; the first original_T
// columns equal the input bit-for-bit.
struct AugmentedSeries {
    ObservationMatrix values;
    int original_T = 0;
    int synthetic_count = 0;
};

// Generates ceil((1-gamma)*T) synthetic columns: each picks a base column
// uniformly from the minority window, one of its 5 nearest window neighbours
// (fewer when the window is smaller than 6, distance ties broken by column
// index), draws u ~ U(0,1) and emits base + u*(neighbour - base).  Synthetic
// columns are appended after column T so the original prefix keeps its time
// indexing.
AugmentedSeries smote_generate(const ObservationMatrix& data, const SmoteConfig& cfg);

// Iterated augment-and-reestimate: the location estimate is recomputed on
// the cumulatively inflated series until it stabilizes within epsilon.
// beta_hat is reported in original-time coordinates: t_hat <= T maps to
// t_hat/T, anything beyond is clamped to 1 - 1/T with the boundary flag set.
// smote_iterations counts augmentation rounds (>= 1); reaching the cap sets
// nonconvergence instead of throwing.
EstimationReport smote_space(const ObservationMatrix& data, const SignflipConfig& sf_cfg,
                             const SmoteConfig& sm_cfg);

}  // namespace corrcp
