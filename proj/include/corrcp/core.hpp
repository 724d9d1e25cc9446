#pragma once

#include <Eigen/Dense>
#include <utility>

#include "corrcp/errors.hpp"

namespace corrcp {

// Raw p x T panel: row = variable, column = time-ordered observation y_t.
struct ObservationMatrix {
    Eigen::MatrixXd values;

    int p() const { return static_cast<int>(values.rows()); }
    int T() const { return static_cast<int>(values.cols()); }

    // Checks that the matrix is non-empty and every entry is finite.
    static ObservationMatrix validated(Eigen::MatrixXd m);
};

// x_t = D^{-1/2} (y_t - ybar), with ybar the full-sample mean and D the
// diagonal of the full-sample covariance (divisor T-1).  Standardization is
// global: the per-split segment "correlations" downstream are plain product
// averages of these columns with divisors t and T-t, not per-segment
// re-centered correlations.
struct StandardizedSeries {
    Eigen::MatrixXd values;       // p x T
    Eigen::VectorXd column_mean;  // ybar
    Eigen::VectorXd scale;        // sqrt(diag D)

    int p() const { return static_cast<int>(values.rows()); }
    int T() const { return static_cast<int>(values.cols()); }

    // Wraps a matrix that the caller asserts is already standardized
    // (mean recorded as 0, scale as 1).  Used when data are constructed to
    // have exact population moments and the estimation step is intentional.
    static StandardizedSeries assume_standardized(Eigen::MatrixXd m);
};

// ---- canonical pair indexing -------------------------------------------
//
// Half-vector entries follow the strictly-lower-triangular entries in
// column-major order: (2,1),(3,1),...,(p,1),(3,2),...  With 0-based variable
// indices a < b this is offset(a,b) = a*p - a*(a+1)/2 + (b-a-1); the same
// fixed bijection is shared by every module.

inline int pair_count(int p) { return p * (p - 1) / 2; }

inline int pair_to_offset(int a, int b, int p) {
    return a * p - a * (a + 1) / 2 + (b - a - 1);
}

std::pair<int, int> offset_to_pair(int offset, int p);  // inverse, 0-based (a, b)

// Length-p(p-1)/2 vector indexed by canonical pair offsets; carries v_t, w
// and their signflipped analogues.
struct HalfVector {
    Eigen::VectorXd entries;
    int p = 0;

    int size() const { return static_cast<int>(entries.size()); }
};

// vecho: strictly-lower-triangular entries of a symmetric matrix in
// canonical order.  Reads the lower triangle.
HalfVector vecho(const Eigen::MatrixXd& symmetric);

// Segment products around a split: left(a,b) = (1/t) sum_{k<=t} x_ka x_kb,
// right(a,b) = (1/(T-t)) sum_{k>t} x_ka x_kb.  Computed by direct summation;
// serves as the independent route against the prefix-sum path.
struct SegmentCorrelations {
    HalfVector left;
    HalfVector right;
    int split_index = 0;
};

SegmentCorrelations segment_correlations(const StandardizedSeries& x, int t);

StandardizedSeries standardize(const ObservationMatrix& data);

// v_t = squared entrywise difference of the two running product averages,
// valid for 2 <= t <= T-2.
HalfVector compute_vt(const StandardizedSeries& x, int t);

// w = (1/(T-3)) sum_{t=2}^{T-2} (t(T-t)/T) v_t, computed in a single sweep of
// running prefix sums (O(T p^2) total).  Parallelizes over fixed-size pair
// blocks, so results are bit-stable across thread counts.  Prefix sums and
// the t-scan switch to compensated summation when T exceeds 10^4.
HalfVector compute_w(const StandardizedSeries& x);

}  // namespace corrcp
