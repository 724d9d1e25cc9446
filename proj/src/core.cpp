#include "corrcp/core.hpp"

#include <cmath>
#include <vector>

#include "corrcp/parallel.hpp"

namespace corrcp {

namespace {

constexpr double kVarianceFloor = 1e-300;
constexpr int kCompensatedSummationThreshold = 10000;  // switch point in T
constexpr std::size_t kPairGrain = 2048;               // pairs per parallel chunk

struct PlainSum {
    double s = 0.0;
    void add(double v) { s += v; }
    double value() const { return s; }
};

struct KahanSum {
    double s = 0.0;
    double c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

// Per-pair sweep shared by compute_w.  xa/xb are the two variables' series
// (contiguous, length T); weight[t] = t(T-t)/T.
template <typename Accum>
double weighted_pair_sweep(const double* xa, const double* xb, int T, const double* weight) {
    Accum total;
    for (int k = 0; k < T; ++k) total.add(xa[k] * xb[k]);
    const double grand = total.value();

    Accum run;
    run.add(xa[0] * xb[0]);  // S_1
    Accum acc;
    for (int t = 2; t <= T - 2; ++t) {
        run.add(xa[t - 1] * xb[t - 1]);  // S_t
        const double s = run.value();
        const double diff = s / t - (grand - s) / (T - t);
        acc.add(weight[t] * diff * diff);
    }
    return acc.value() / (T - 3);
}

}  // namespace

ObservationMatrix ObservationMatrix::validated(Eigen::MatrixXd m) {
    if (m.rows() < 1 || m.cols() < 1) throw DataError("observation matrix is empty");
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (!std::isfinite(m(i, j))) throw NonFiniteCell(i + 1, j + 1);
    return ObservationMatrix{std::move(m)};
}

StandardizedSeries StandardizedSeries::assume_standardized(Eigen::MatrixXd m) {
    StandardizedSeries out;
    out.column_mean = Eigen::VectorXd::Zero(m.rows());
    out.scale = Eigen::VectorXd::Ones(m.rows());
    out.values = std::move(m);
    return out;
}

std::pair<int, int> offset_to_pair(int offset, int p) {
    // Largest a with a*p - a*(a+1)/2 <= offset; closed form plus a guard step
    // against floating-point dust.
    double disc = (2.0 * p - 1) * (2.0 * p - 1) - 8.0 * offset;
    int a = static_cast<int>((2.0 * p - 1 - std::sqrt(disc)) / 2.0);
    if (a > 0 && pair_to_offset(a, a + 1, p) > offset) --a;
    while (a + 1 < p - 1 && pair_to_offset(a + 1, a + 2, p) <= offset) ++a;
    int b = offset - (a * p - a * (a + 1) / 2) + a + 1;
    return {a, b};
}

HalfVector vecho(const Eigen::MatrixXd& symmetric) {
    if (symmetric.rows() != symmetric.cols())
        throw MethodError("vecho requires a square matrix");
    const int p = static_cast<int>(symmetric.rows());
    if (p < 2) throw DimensionTooSmall(p);

    HalfVector out;
    out.p = p;
    out.entries.resize(pair_count(p));
    int off = 0;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) out.entries[off++] = symmetric(b, a);
    return out;
}

StandardizedSeries standardize(const ObservationMatrix& data) {
    const int p = data.p();
    const int T = data.T();
    if (T < 2) throw ZeroVarianceRow(1);

    StandardizedSeries out;
    out.column_mean = data.values.rowwise().mean();
    Eigen::MatrixXd centered = data.values.colwise() - out.column_mean;
    Eigen::VectorXd variance = centered.array().square().rowwise().sum() / (T - 1);

    out.scale.resize(p);
    for (int i = 0; i < p; ++i) {
        if (!(variance[i] > kVarianceFloor)) throw ZeroVarianceRow(i + 1);
        out.scale[i] = std::sqrt(variance[i]);
    }
    out.values = centered.array().colwise() / out.scale.array();
    return out;
}

SegmentCorrelations segment_correlations(const StandardizedSeries& x, int t) {
    const int p = x.p();
    const int T = x.T();
    if (t < 1 || t > T - 1) throw SplitOutOfRange(t, T);

    SegmentCorrelations out;
    out.split_index = t;
    out.left.p = out.right.p = p;
    out.left.entries.resize(pair_count(p));
    out.right.entries.resize(pair_count(p));

    int off = 0;
    for (int a = 0; a < p; ++a) {
        for (int b = a + 1; b < p; ++b, ++off) {
            double left = 0.0, right = 0.0;
            for (int k = 0; k < t; ++k) left += x.values(a, k) * x.values(b, k);
            for (int k = t; k < T; ++k) right += x.values(a, k) * x.values(b, k);
            out.left.entries[off] = left / t;
            out.right.entries[off] = right / (T - t);
        }
    }
    return out;
}

HalfVector compute_vt(const StandardizedSeries& x, int t) {
    const int p = x.p();
    const int T = x.T();
    if (t < 2 || t > T - 2) throw SplitOutOfRange(t, T);

    // Time-major copy: column a holds variable a's series contiguously.
    Eigen::MatrixXd xt = x.values.transpose();

    HalfVector out;
    out.p = p;
    out.entries.resize(pair_count(p));

    parallel_for(static_cast<std::size_t>(out.size()), kPairGrain,
                 [&](std::size_t lo, std::size_t hi) {
                     for (std::size_t off = lo; off < hi; ++off) {
                         auto [a, b] = offset_to_pair(static_cast<int>(off), p);
                         const double* xa = xt.col(a).data();
                         const double* xb = xt.col(b).data();
                         double left = 0.0, grand = 0.0;
                         for (int k = 0; k < T; ++k) {
                             double prod = xa[k] * xb[k];
                             grand += prod;
                             if (k < t) left += prod;
                         }
                         double diff = left / t - (grand - left) / (T - t);
                         out.entries[static_cast<int>(off)] = diff * diff;
                     }
                 });
    return out;
}

HalfVector compute_w(const StandardizedSeries& x) {
    const int p = x.p();
    const int T = x.T();
    if (T < 5) throw SeriesTooShort(T);

    Eigen::MatrixXd xt = x.values.transpose();

    std::vector<double> weight(static_cast<std::size_t>(T), 0.0);
    for (int t = 2; t <= T - 2; ++t)
        weight[static_cast<std::size_t>(t)] = static_cast<double>(t) * (T - t) / T;

    HalfVector out;
    out.p = p;
    out.entries.resize(pair_count(p));
    const bool compensated = T > kCompensatedSummationThreshold;

    parallel_for(static_cast<std::size_t>(out.size()), kPairGrain,
                 [&](std::size_t lo, std::size_t hi) {
                     for (std::size_t off = lo; off < hi; ++off) {
                         auto [a, b] = offset_to_pair(static_cast<int>(off), p);
                         const double* xa = xt.col(a).data();
                         const double* xb = xt.col(b).data();
                         out.entries[static_cast<int>(off)] =
                             compensated ? weighted_pair_sweep<KahanSum>(xa, xb, T, weight.data())
                                         : weighted_pair_sweep<PlainSum>(xa, xb, T, weight.data());
                     }
                 });
    return out;
}

}  // namespace corrcp
