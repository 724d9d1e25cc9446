#include "corrcp/detect.hpp"

namespace corrcp {

namespace {

// Inverse of the vech (lower-triangle-with-diagonal) offset: column-major
// order (1,1),(2,1),...,(p,1),(2,2),...
std::pair<int, int> vech_offset_to_pair(int offset, int p) {
    int a = 0;
    int base = 0;
    while (a < p - 1 && base + (p - a) <= offset) {
        base += p - a;
        ++a;
    }
    return {a, a + (offset - base)};
}

}  // namespace

std::pair<int, int> SupportIndexSet::pair_at(std::size_t k) const {
    const int off = offsets[k];
    if (layout == Layout::StrictLower) {
        auto [a, b] = offset_to_pair(off, p);
        return {a + 1, b + 1};
    }
    auto [a, b] = vech_offset_to_pair(off, p);
    return {a + 1, b + 1};
}

SupportIndexSet exceedances(const HalfVector& w, double tau) {
    SupportIndexSet out;
    out.p = w.p;
    for (int off = 0; off < w.size(); ++off)
        if (w.entries[off] > tau) out.offsets.push_back(off);
    return out;
}

DetectionReport spad_detect(const ObservationMatrix& data, const SignflipConfig& cfg) {
    DetectionReport report;
    report.w = compute_w(standardize(data));
    report.thresholds = compute_thresholds(data, cfg);
    report.support = exceedances(report.w, report.thresholds.tau1);
    report.rejected = !report.support.empty();
    return report;
}

}  // namespace corrcp
