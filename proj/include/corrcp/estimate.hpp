#pragma once

#include <vector>

#include "corrcp/detect.hpp"

namespace corrcp {

// d x T panel whose column k is the subvector of the pair products
// x_{a,k} * x_{b,k} restricted to the support pairs.
struct ReducedSeries {
    Eigen::MatrixXd z;
    SupportIndexSet support;

    int d() const { return static_cast<int>(z.rows()); }
    int T() const { return static_cast<int>(z.cols()); }
};

// Keeps pairs with w(i,j) strictly above tau2; throws EmptySupport when no
// pair qualifies (the caller decides what to do -- there is no silent
// fallback to tau1 or to the full vector).
ReducedSeries reduce_dimension(const HalfVector& w, double tau2, const StandardizedSeries& x);

// U_T(t) = ||T Z_t - t Z_T||^2 / T^4 over t = 2..T-2, where Z_t is the
// running column sum of z; equal to the squared norm of
// t(T-t)(left mean - right mean).  O(T d) via prefix sums.
struct CusumCurve {
    std::vector<double> values;
    int t_begin = 2;

    int argmax_t() const;  // smallest t on ties
    double max_value() const;
};

CusumCurve cusum_curve(const ReducedSeries& reduced);

struct EstimationReport {
    double beta_hat = 0.0;
    int t_hat = 0;  // index into the series the cusum was computed on
    CusumCurve cusum;
    SupportIndexSet support;
    ThresholdReport thresholds;
    int smote_iterations = 0;   // 0 for a plain estimate
    bool boundary = false;      // argmax at the scan edge, or clamped remap
    bool nonconvergence = false;
    int original_T = 0;         // frame in which beta_hat is expressed
};

// Full location-estimation pipeline: standardize, weighted statistic,
// signflip tau2, dimension reduction, CUSUM argmax, beta = t_hat / T.
EstimationReport space_estimate(const ObservationMatrix& data, const SignflipConfig& cfg);

// Same tail of the pipeline when w and the thresholds are already available
// (e.g. reusing a detection report).
EstimationReport space_from_w(const StandardizedSeries& x, const HalfVector& w,
                              const ThresholdReport& thresholds);

}  // namespace corrcp
