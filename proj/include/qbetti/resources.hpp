// Asymptotic cost formulas evaluated as concrete arithmetic, for the
// predicted-vs-simulated comparison in reports. Polylog factors are dropped
// uniformly (model constants = 1); the point is comparative trends and
// divergence detection, not gate-exact prediction.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

namespace qbetti {

/// C(n,k) in floating point via the multiplicative formula. Exact to
/// rounding for desk-scale n; the cost formulas need no more.
inline double binomial_real(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

/// Grover-based preparation of the uniform simplex state:
/// k*n^2 + n*k*sqrt(C(n,k)/s_k). s_k = 0 yields the infinite-cost marker.
inline double state_prep_cost(int n, int k, std::uint64_t s_k) {
    if (k < 1 || k > n) throw std::invalid_argument("state_prep_cost: k out of range [1, n]");
    if (s_k == 0) return std::numeric_limits<double>::infinity();
    const double nk = binomial_real(n, k);
    return static_cast<double>(k) * n * n +
           static_cast<double>(n) * k * std::sqrt(nk / static_cast<double>(s_k));
}

/// Total cost of the two-stage algorithm:
/// sqrt(beta*s_k) * [ n*k*sqrt(C(n,k)/s_k) + n^2*k/lambda_min ].
/// beta = 0 is evaluated with beta replaced by 1 (one verification pass);
/// the caller flags that substitution in its ledger.
inline double eq1_total(int n, int k, std::uint64_t s_k, int beta, double lambda_min) {
    if (!(lambda_min > 0.0)) throw std::domain_error("eq1_total: lambda_min must be > 0");
    if (beta < 0) throw std::invalid_argument("eq1_total: beta must be >= 0");
    if (s_k == 0) return std::numeric_limits<double>::infinity();
    const double b = beta == 0 ? 1.0 : static_cast<double>(beta);
    const double nk = binomial_real(n, k);
    const double prep = static_cast<double>(n) * k * std::sqrt(nk / static_cast<double>(s_k));
    const double pe = static_cast<double>(n) * n * k / lambda_min;
    return std::sqrt(b * static_cast<double>(s_k)) * (prep + pe);
}

struct LgzCosts {
    double sampling = 0.0;  // n^5 / delta * sqrt(C(n,k)/s_k)
    double betti = 0.0;     // n^5 / delta * sqrt(C(n,k)/beta)
    double exact = 0.0;     // n^5 * sqrt(beta*C(n,k)), i.e. betti at delta = 1/beta
};

inline LgzCosts lgz_costs(int n, int k, std::uint64_t s_k, int beta, double delta) {
    if (!(delta > 0.0)) throw std::domain_error("lgz_costs: delta must be > 0");
    if (s_k == 0) throw std::invalid_argument("lgz_costs: s_k must be >= 1");
    const double n5 = std::pow(static_cast<double>(n), 5.0);
    const double nk = binomial_real(n, k);
    LgzCosts c;
    c.sampling = n5 / delta * std::sqrt(nk / static_cast<double>(s_k));
    if (beta >= 1) {
        c.betti = n5 / delta * std::sqrt(nk / static_cast<double>(beta));
        c.exact = n5 * std::sqrt(static_cast<double>(beta) * nk);
    } else {
        c.betti = std::numeric_limits<double>::infinity();
        c.exact = std::numeric_limits<double>::infinity();
    }
    return c;
}

/// Named cost values for one instance, serialized inside the run report.
struct CostLedger {
    int n = 0;
    int k = 0;
    std::uint64_t s_k = 0;
    int beta = 0;
    std::optional<double> lambda_min;
    double delta = 0.0;
    double state_prep = 0.0;
    double eq1_total = 0.0;  // infinity when lambda_min is absent
    double lgz_sampling = 0.0;
    double lgz_betti = 0.0;
    double lgz_exact = 0.0;
    bool beta_zero_flagged = false;
};

/// Evaluate every formula for one instance. delta defaults to the
/// exact-count regime 1/max(beta,1), where the additive-precision betti
/// cost coincides with the exact-count cost.
inline CostLedger make_ledger(int n, int k, std::uint64_t s_k, int beta,
                              std::optional<double> lambda_min,
                              std::optional<double> delta = std::nullopt) {
    CostLedger led;
    led.n = n;
    led.k = k;
    led.s_k = s_k;
    led.beta = beta;
    led.lambda_min = lambda_min;
    led.delta = delta ? *delta : 1.0 / static_cast<double>(std::max(beta, 1));
    led.beta_zero_flagged = (beta == 0);
    led.state_prep = state_prep_cost(n, k, s_k);
    led.eq1_total = (lambda_min && *lambda_min > 0.0 && s_k > 0)
                        ? eq1_total(n, k, s_k, beta, *lambda_min)
                        : std::numeric_limits<double>::infinity();
    if (s_k > 0) {
        const LgzCosts lgz = lgz_costs(n, k, s_k, beta, led.delta);
        led.lgz_sampling = lgz.sampling;
        led.lgz_betti = lgz.betti;
        led.lgz_exact = lgz.exact;
    } else {
        led.lgz_sampling = std::numeric_limits<double>::infinity();
        led.lgz_betti = std::numeric_limits<double>::infinity();
        led.lgz_exact = std::numeric_limits<double>::infinity();
    }
    return led;
}

}  // namespace qbetti
