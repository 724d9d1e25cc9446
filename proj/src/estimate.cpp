#include "corrcp/estimate.hpp"

#include <algorithm>

namespace corrcp {

ReducedSeries reduce_dimension(const HalfVector& w, double tau2, const StandardizedSeries& x) {
    if (tau2 < 0.0) throw InvalidConfig("tau2 must be nonnegative");
    if (w.p != x.p()) throw MethodError("w and x disagree on the number of variables");

    ReducedSeries out;
    out.support = exceedances(w, tau2);
    if (out.support.empty()) throw EmptySupport();

    const int d = static_cast<int>(out.support.size());
    const int T = x.T();
    out.z.resize(d, T);
    for (int r = 0; r < d; ++r) {
        auto [a, b] = offset_to_pair(out.support.offsets[static_cast<std::size_t>(r)], w.p);
        for (int k = 0; k < T; ++k) out.z(r, k) = x.values(a, k) * x.values(b, k);
    }
    return out;
}

int CusumCurve::argmax_t() const {
    int best = 0;
    for (int i = 1; i < static_cast<int>(values.size()); ++i)
        if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(best)]) best = i;
    return t_begin + best;
}

double CusumCurve::max_value() const {
    return values[static_cast<std::size_t>(argmax_t() - t_begin)];
}

CusumCurve cusum_curve(const ReducedSeries& reduced) {
    const int T = reduced.T();
    const int d = reduced.d();
    if (T < 4) throw SeriesTooShort(T);

    const Eigen::VectorXd total = reduced.z.rowwise().sum();  // Z_T
    const double scale = 1.0 / (static_cast<double>(T) * T * T * T);

    CusumCurve curve;
    curve.t_begin = 2;
    curve.values.resize(static_cast<std::size_t>(T - 3));

    Eigen::VectorXd running = reduced.z.col(0);  // Z_1
    for (int t = 2; t <= T - 2; ++t) {
        running += reduced.z.col(t - 1);  // Z_t
        double norm2 = 0.0;
        for (int r = 0; r < d; ++r) {
            const double v = T * running[r] - static_cast<double>(t) * total[r];
            norm2 += v * v;
        }
        curve.values[static_cast<std::size_t>(t - 2)] = norm2 * scale;
    }
    return curve;
}

EstimationReport space_from_w(const StandardizedSeries& x, const HalfVector& w,
                              const ThresholdReport& thresholds) {
    EstimationReport report;
    report.thresholds = thresholds;

    ReducedSeries reduced = reduce_dimension(w, thresholds.tau2, x);
    report.support = reduced.support;
    report.cusum = cusum_curve(reduced);
    report.t_hat = report.cusum.argmax_t();
    report.original_T = x.T();
    report.beta_hat = static_cast<double>(report.t_hat) / report.original_T;
    report.boundary = report.t_hat == 2 || report.t_hat == x.T() - 2;
    return report;
}

EstimationReport space_estimate(const ObservationMatrix& data, const SignflipConfig& cfg) {
    StandardizedSeries x = standardize(data);
    HalfVector w = compute_w(x);
    ThresholdReport thresholds = compute_thresholds(data, cfg);
    return space_from_w(x, w, thresholds);
}

}  // namespace corrcp
