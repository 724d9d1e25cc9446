#pragma once

#include <utility>
#include <vector>

#include "corrcp/core.hpp"
#include "corrcp/signflip.hpp"

namespace corrcp {

// Ordered set of variable pairs exceeding a threshold -- the recovered
// support of the correlation change.  Pairs are stored as canonical offsets;
// StrictLower offsets index half-vector entries (i < j), LowerWithDiagonal
// offsets index vech entries (i <= j, used by the vech-pipeline baseline).
struct SupportIndexSet {
    enum class Layout { StrictLower, LowerWithDiagonal };

    std::vector<int> offsets;  // strictly increasing canonical offsets
    int p = 0;
    Layout layout = Layout::StrictLower;

    std::size_t size() const { return offsets.size(); }
    bool empty() const { return offsets.empty(); }
    // 1-based (i, j) with i <= j for the k-th member.
    std::pair<int, int> pair_at(std::size_t k) const;
};

// All offsets with w(off) strictly greater than tau; ties do not qualify.
SupportIndexSet exceedances(const HalfVector& w, double tau);

struct DetectionReport {
    bool rejected = false;  // true iff support is nonempty
    SupportIndexSet support;
    HalfVector w;
    ThresholdReport thresholds;
};

// The break test: weighted statistic on the original data, threshold tau1
// from signflip trials, reject when any component exceeds it.
DetectionReport spad_detect(const ObservationMatrix& data, const SignflipConfig& cfg);

}  // namespace corrcp
