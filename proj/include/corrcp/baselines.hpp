#pragma once

#include "corrcp/estimate.hpp"
#include "corrcp/signflip.hpp"

namespace corrcp {

// ---- vech indexing (lower triangle including the diagonal) --------------
//
// Column-major order (1,1),(2,1),...,(p,1),(2,2),...; 0-based offset for
// a <= b is a*p - a*(a-1)/2 + (b - a).

inline int vech_count(int p) { return p * (p + 1) / 2; }
inline int vech_offset(int a, int b, int p) { return a * p - a * (a - 1) / 2 + (b - a); }

// Length-p(p+1)/2 comparison vector of within-segment and cross-segment
// U-statistic products of vech(ydot ydot'), weighted over splits.
struct DetteVector {
    Eigen::VectorXd entries;
    int p = 0;
};

// The detection vector: demean the data, form a_i = vech(ydot_i ydot_i'),
// and average over t = 2..T-2 with weight t(T-t)/T the combination
//   A_t + B_t - C_t,
//   A_t = (sum_{i<=t} a_i)^2 - sum_{i<=t} a_i^2, divided by t(t-1)   (i != j)
//   B_t = same over the right segment, divided by (T-t)(T-t-1)
//   C_t = 2 (sum_left a_i) o (sum_right a_j) / (t(T-t))
// all entrywise, via running prefix sums (O(T p^2) total).
DetteVector dette_d(const ObservationMatrix& data);

// Surrogate threshold calibrator: the published recipe defers the critical
// value to a bootstrap that is not reproduced here, so this applies the same
// signflip machinery to the vech pipeline (pooled max for detection, pooled
// alpha-quantile for estimation).  Reports are marked surrogate.
ThresholdReport dette_surrogate_thresholds(const ObservationMatrix& data,
                                           const SignflipConfig& cfg);

// Location estimator: restrict vech(ydot_i ydot_i') to the entries where
// D > tau, then take the argmax over t = 2..T-2 of the quadruple sum with
// the i=s and j=l diagonals excluded, expanded into prefix sums.
EstimationReport dette_estimate(const ObservationMatrix& data, double tau);

// Kernel estimator: Gaussian kernel with the median pairwise distance as
// bandwidth; argmin of the within-segment scatter sum over t = 2..T-2.
EstimationReport kcp_estimate(const ObservationMatrix& data);

}  // namespace corrcp
