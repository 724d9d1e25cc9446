#include "corrcp/smote.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "corrcp/rng.hpp"

namespace corrcp {

namespace {

// floor/ceil of fraction * count with protection against floating-point dust
// in products like 0.7 * 100.
int floor_index(double x) { return static_cast<int>(std::floor(x + 1e-9)); }
int ceil_count(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

void validate(const SmoteConfig& cfg) {
    if (cfg.gamma < 0.9 || cfg.gamma >= 1.0)
        throw InvalidConfig("gamma must lie in [0.9, 1)");
    if (!(cfg.epsilon > 0.0)) throw InvalidConfig("epsilon must be positive");
    if (cfg.k_neighbors != 5) throw InvalidConfig("the neighbour count is fixed at 5");
    if (cfg.max_iterations < 1) throw InvalidConfig("max_iterations must be at least 1");
}

}  // namespace

AugmentedSeries smote_generate(const ObservationMatrix& data, const SmoteConfig& cfg) {
    validate(cfg);
    const int p = data.p();
    const int T = data.T();

    const int window_begin = floor_index(cfg.gamma * T);  // 0-based first minority column
    const int m = T - window_begin;
    if (m < 2) throw MinorityWindowTooSmall(m);
    const int n_synthetic = std::max(1, ceil_count((1.0 - cfg.gamma) * T));

    // Exact pairwise distances inside the window (m is at most ~0.1 T).
    Eigen::MatrixXd dist2(m, m);
    for (int i = 0; i < m; ++i) {
        dist2(i, i) = 0.0;
        for (int j = i + 1; j < m; ++j) {
            double d2 = (data.values.col(window_begin + i) - data.values.col(window_begin + j))
                            .squaredNorm();
            dist2(i, j) = dist2(j, i) = d2;
        }
    }

    // k nearest neighbours of each window column, ties broken by index.
    const int k = std::min(cfg.k_neighbors, m - 1);
    std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(m) - 1);
        for (int j = 0; j < m; ++j)
            if (j != i) order.push_back(j);
        std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
            if (dist2(i, lhs) != dist2(i, rhs)) return dist2(i, lhs) < dist2(i, rhs);
            return lhs < rhs;
        });
        order.resize(static_cast<std::size_t>(k));
        neighbours[static_cast<std::size_t>(i)] = std::move(order);
    }

    AugmentedSeries out;
    out.original_T = T;
    out.synthetic_count = n_synthetic;
    out.values.values.resize(p, T + n_synthetic);
    out.values.values.leftCols(T) = data.values;

    for (int s = 0; s < n_synthetic; ++s) {
        rng::CounterRng gen(cfg.seed,
                            rng::stream_id(rng::Domain::Smote, static_cast<std::uint64_t>(s)));
        const int base = gen.next_index(m);
        const auto& cand = neighbours[static_cast<std::size_t>(base)];
        const int neighbour = cand[static_cast<std::size_t>(gen.next_index(k))];
        const double u = cfg.forced_u ? *cfg.forced_u : gen.next_double();

        auto base_col = data.values.col(window_begin + base);
        auto nb_col = data.values.col(window_begin + neighbour);
        out.values.values.col(T + s) = base_col + u * (nb_col - base_col);
    }
    return out;
}

EstimationReport smote_space(const ObservationMatrix& data, const SignflipConfig& sf_cfg,
                             const SmoteConfig& sm_cfg) {
    validate(sm_cfg);
    const int T0 = data.T();

    double beta0 = space_estimate(data, sf_cfg).beta_hat;

    ObservationMatrix working = data;
    EstimationReport report;
    int round = 0;
    for (;;) {
        ++round;
        SmoteConfig round_cfg = sm_cfg;
        round_cfg.seed = rng::derive_seed(sm_cfg.seed, static_cast<std::uint64_t>(round));
        working = smote_generate(working, round_cfg).values;

        SignflipConfig flip_cfg = sf_cfg;
        flip_cfg.seed = rng::derive_seed(sf_cfg.seed, 1000 + static_cast<std::uint64_t>(round));
        report = space_estimate(working, flip_cfg);

        // Map the inflated-series argmax back to original-time coordinates.
        double beta1;
        if (report.t_hat <= T0) {
            beta1 = static_cast<double>(report.t_hat) / T0;
        } else {
            beta1 = 1.0 - 1.0 / T0;
            report.boundary = true;
        }
        report.beta_hat = beta1;
        report.original_T = T0;

        if (std::abs(beta0 - beta1) <= sm_cfg.epsilon) break;
        beta0 = beta1;
        if (round >= sm_cfg.max_iterations) {
            report.nonconvergence = true;
            break;
        }
    }
    report.smote_iterations = round;
    return report;
}

}  // namespace corrcp
