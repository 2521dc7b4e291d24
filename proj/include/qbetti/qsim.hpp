// Desk-scale simulation of the quantum pipeline: Grover-type preparation of
// the uniform simplex mixture with query accounting, exact phase-estimation
// outcome distributions for e^{iB} on the dimension-k sector, and quantum
// counting that reads the Betti number off the zero-outcome weight.
//
// The simulation never touches the 2^n qubit space. Phase estimation on the
// Dirac operator restricted to sector k reduces to the phases +-sqrt(lambda)
// of the Laplacian spectrum (every lifted eigenvalue squares to lambda), and
// the outcome-0 mass of a t-bit register depends only on |phase|, so the
// unknown +- weight split never affects the zero-outcome probability.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "qbetti/combinadic.hpp"
#include "qbetti/homology.hpp"
#include "qbetti/resources.hpp"

namespace qbetti {

namespace detail {

/// Uniform integer in [0, bound) from a mt19937_64 stream, by rejection.
/// Hand-rolled so identical seeds give identical streams on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be > 0");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

/// Uniform double in [0,1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Outcome of one simulated preparation of the uniform simplex state.
struct GroverPrepReport {
    std::uint64_t universe_size = 0;  // C(n,k)
    std::uint64_t marked = 0;         // |S_k|
    std::uint64_t oracle_queries = 0;
    bool succeeded = false;
    std::uint64_t approx_count_queries = 0;  // booked for making the preparation unitary
};

/// Simulate the unknown-number-of-targets Grover schedule: the iteration cap
/// m grows by the factor 6/5 up to ceil(sqrt(universe)); each stage runs a
/// uniformly chosen j < m iterations (j oracle queries plus one to check the
/// measured item) and succeeds with probability sin^2((2j+1) theta), where
/// sin^2 theta = marked/universe. With no marked items the schedule is cut
/// off once cumulative queries reach ceil(3 sqrt(universe)).
inline GroverPrepReport simulate_bbht_prep(std::uint64_t universe, std::uint64_t marked,
                                           std::uint64_t rng_seed) {
    if (universe < 1) throw std::invalid_argument("simulate_bbht_prep: universe must be >= 1");
    if (marked > universe) throw std::invalid_argument("simulate_bbht_prep: marked > universe");

    GroverPrepReport rep;
    rep.universe_size = universe;
    rep.marked = marked;
    rep.approx_count_queries = static_cast<std::uint64_t>(
        std::ceil(std::sqrt(static_cast<double>(universe) * static_cast<double>(marked))));

    std::mt19937_64 rng(rng_seed);
    const double theta = std::asin(std::sqrt(static_cast<double>(marked) / universe));
    const std::uint64_t m_cap =
        static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(universe))));
    const std::uint64_t cutoff =
        static_cast<std::uint64_t>(std::ceil(3.0 * std::sqrt(static_cast<double>(universe))));

    std::uint64_t m = 1;
    while (true) {
        if (marked == 0 && rep.oracle_queries >= cutoff) {
            rep.succeeded = false;
            return rep;
        }
        const std::uint64_t j = detail::uniform_below(rng, m);
        rep.oracle_queries += j + 1;
        if (marked > 0) {
            const double s = std::sin((2.0 * static_cast<double>(j) + 1.0) * theta);
            if (detail::uniform_unit(rng) < s * s) {
                rep.succeeded = true;
                return rep;
            }
        }
        m = std::min(static_cast<std::uint64_t>(std::ceil(1.2 * static_cast<double>(m))), m_cap);
    }
}

/// Eigenvalue-register width t and spectral scale c. The simulated unitary
/// is e^{iB/c} with c = (9/8) sqrt(lambda_max), so every phase
/// sqrt(lambda)/(2 pi c) sits inside (-1/2, 1/2); t is sized so every
/// nonzero phase is at least 2^(margin_bits - t).
struct RegisterSizing {
    int t = 1;
    double c = 1.0;
};

inline RegisterSizing register_sizing(const SpectrumReport& report, int margin_bits) {
    if (margin_bits < 0) throw std::invalid_argument("register_sizing: margin_bits must be >= 0");
    if (report.kernel_dim == report.size()) return RegisterSizing{1, 1.0};
    if (!report.lambda_min)
        throw std::logic_error("register_sizing: nonzero eigenvalues exist but lambda_min absent");

    RegisterSizing rs;
    rs.c = 9.0 / 8.0 * std::sqrt(report.lambda_max);
    const double ratio = 2.0 * std::numbers::pi * rs.c / std::sqrt(*report.lambda_min);
    rs.t = static_cast<int>(std::ceil(std::log2(ratio))) + margin_bits;
    if (rs.t < 1) rs.t = 1;
    return rs;
}

/// Exact outcome distribution of t-bit phase estimation on the uniform
/// mixture over the dimension-k sector.
struct PhaseEstimationModel {
    int t = 1;
    double c = 1.0;
    std::vector<double> spectrum;      // the Laplacian eigenvalues, ascending
    double p_zero = 0.0;               // probability of outcome 0
    std::vector<double> distribution;  // probability over outcomes 0..2^t-1
};

namespace detail {

/// Probability that t-bit phase estimation on eigenphase phi yields outcome
/// y: the Fejer kernel |sin(2^t pi delta) / (2^t sin(pi delta))|^2 at
/// delta = phi - y/2^t, with the delta -> 0 limit handled exactly.
inline double pe_outcome_probability(double phi, int t, std::uint64_t y) {
    const double delta = phi - static_cast<double>(y) / std::ldexp(1.0, t);
    const double denom = std::sin(std::numbers::pi * delta);
    if (denom == 0.0) return 1.0;
    const double num = std::sin(std::ldexp(1.0, t) * std::numbers::pi * delta);
    const double r = num / (std::ldexp(1.0, t) * denom);
    return r * r;
}

}  // namespace detail

/// Each eigenvalue contributes weight 1/|S_k|. Exact zeros (classified by
/// the integer kernel dimension, not by threshold) put all their mass on
/// outcome 0; nonzero eigenvalues contribute through the Fejer kernel at
/// phase sqrt(lambda)/(2 pi c).
inline PhaseEstimationModel pe_distribution(const SpectrumReport& report, int t, double c) {
    if (t < 1) throw std::invalid_argument("pe_distribution: t must be >= 1");
    if (t > 26) throw std::invalid_argument("pe_distribution: register too large to materialize");
    if (report.size() < 1) throw std::invalid_argument("pe_distribution: empty spectrum");
    if (c < std::sqrt(std::max(report.lambda_max, 0.0)) * (1.0 - 1e-12))
        throw std::domain_error("pe_distribution: c below the spectral radius wraps phases");

    PhaseEstimationModel model;
    model.t = t;
    model.c = c;
    model.spectrum = report.eigenvalues;
    const std::uint64_t outcomes = std::uint64_t{1} << t;
    model.distribution.assign(outcomes, 0.0);

    const double weight = 1.0 / static_cast<double>(report.size());
    model.distribution[0] += weight * report.kernel_dim;
    for (int i = report.kernel_dim; i < report.size(); ++i) {
        const double lambda = report.eigenvalues[static_cast<std::size_t>(i)];
        const double phi = std::sqrt(std::max(lambda, 0.0)) / (2.0 * std::numbers::pi * c);
        for (std::uint64_t y = 0; y < outcomes; ++y)
            model.distribution[y] += weight * detail::pe_outcome_probability(phi, t, y);
    }
    model.p_zero = model.distribution[0];
    return model;
}

/// Multinomial draw from the model's outcome distribution; bit-identical
/// results for identical seeds.
inline std::vector<std::uint64_t> sample_outcomes(const PhaseEstimationModel& model,
                                                  std::uint64_t shots, std::uint64_t rng_seed) {
    if (shots < 1) throw std::invalid_argument("sample_outcomes: shots must be >= 1");
    std::mt19937_64 rng(rng_seed);
    std::vector<std::uint64_t> hist(model.distribution.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = detail::uniform_unit(rng);
        double acc = 0.0;
        std::size_t outcome = model.distribution.size() - 1;
        for (std::size_t y = 0; y < model.distribution.size(); ++y) {
            acc += model.distribution[y];
            if (u < acc) {
                outcome = y;
                break;
            }
        }
        ++hist[outcome];
    }
    return hist;
}

enum class CountMode { exact_count, sampled };

/// Betti estimate plus the Grover-round budget that quantum counting would
/// spend to certify it; each round is costed as one state preparation plus
/// one phase estimation.
struct CountReport {
    int beta_estimate = 0;
    std::uint64_t grover_rounds = 0;
    CountMode mode = CountMode::exact_count;
};

/// Idealized exact counting of the zero-phase subspace: the estimate is the
/// recovered subspace dimension itself; rounds follow
/// ceil(sqrt(set_size * max(beta,1))).
inline CountReport quantum_count_betti(int p_zero_subspace_dim, int set_size) {
    if (set_size < 0 || p_zero_subspace_dim < 0 || p_zero_subspace_dim > set_size)
        throw std::invalid_argument("quantum_count_betti: need 0 <= dim <= set_size");
    CountReport rep;
    rep.beta_estimate = p_zero_subspace_dim;
    rep.grover_rounds = static_cast<std::uint64_t>(std::ceil(std::sqrt(
        static_cast<double>(set_size) * static_cast<double>(std::max(p_zero_subspace_dim, 1)))));
    rep.mode = CountMode::exact_count;
    return rep;
}

/// Betti estimate from a sampled outcome histogram: the zero-outcome
/// frequency scaled back up by the set size.
inline CountReport count_from_samples(const std::vector<std::uint64_t>& histogram, int set_size) {
    if (histogram.empty()) throw std::invalid_argument("count_from_samples: empty histogram");
    std::uint64_t shots = 0;
    for (std::uint64_t h : histogram) shots += h;
    if (shots == 0) throw std::invalid_argument("count_from_samples: no shots");
    const double freq0 = static_cast<double>(histogram[0]) / static_cast<double>(shots);
    const int est = static_cast<int>(std::lround(freq0 * static_cast<double>(set_size)));
    CountReport rep = quantum_count_betti(std::min(est, set_size), set_size);
    rep.mode = CountMode::sampled;
    return rep;
}

struct SimConfig {
    int margin_bits = 4;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;  // 0 = exact distribution only, no sampling
};

/// Everything one (graph, k) cell produces: the classical oracle value, the
/// simulated quantum estimate, spectral diagnostics, query accounting and
/// the cost-formula ledger.
struct EndToEndResult {
    int n = 0;
    int k = 0;
    std::uint64_t s_k = 0;
    int beta_exact = 0;
    int beta_quantum = 0;
    bool empty_complex = false;
    SpectrumReport spectral;   // meaningful iff !empty_complex
    RegisterSizing sizing;
    PhaseEstimationModel pe;
    GroverPrepReport prep;
    CountReport count;
    std::vector<std::uint64_t> histogram;  // nonempty iff shots > 0
    CostLedger ledger;
};

/// Run the whole pipeline on one graph and dimension: enumerate, build the
/// boundary chain, take the spectrum, size the register, evaluate the exact
/// phase-estimation distribution, and read the Betti number off the
/// zero-outcome weight. The quantum estimate is round(p_zero * |S_k|),
/// which matches the classical oracle whenever register sizing succeeded.
inline EndToEndResult end_to_end_betti(const EpsilonGraph& g, int k, const SimConfig& config) {
    if (k < 1 || k > g.n) throw std::invalid_argument("end_to_end_betti: k out of range [1, n]");

    EndToEndResult res;
    res.n = g.n;
    res.k = k;

    const PascalTable table(g.n);
    const std::uint64_t universe =
        static_cast<std::uint64_t>(table.choose(g.n, k));

    const ChainComplex cc = build_chain(g);
    if (k > cc.top_dimension()) {
        res.empty_complex = true;
        res.s_k = 0;
        res.beta_exact = 0;
        res.beta_quantum = 0;
        res.prep = simulate_bbht_prep(universe, 0, config.seed);
        res.count = quantum_count_betti(0, 0);
        res.ledger = make_ledger(g.n, k, 0, 0, std::nullopt);
        return res;
    }

    const SimplexSet& sk = cc.sets[static_cast<std::size_t>(k) - 1];
    res.s_k = sk.size();
    res.beta_exact = betti_exact(cc.lower_of(k), cc.upper_of(k));

    res.spectral = spectrum(laplacian(cc.lower_of(k), cc.upper_of(k)));
    res.sizing = register_sizing(res.spectral, config.margin_bits);
    res.pe = pe_distribution(res.spectral, res.sizing.t, res.sizing.c);

    const int zero_dim = std::min(
        static_cast<int>(std::lround(res.pe.p_zero * static_cast<double>(res.s_k))),
        static_cast<int>(res.s_k));
    res.count = quantum_count_betti(zero_dim, static_cast<int>(res.s_k));
    res.beta_quantum = res.count.beta_estimate;

    res.prep = simulate_bbht_prep(universe, res.s_k, config.seed);
    if (config.shots > 0) res.histogram = sample_outcomes(res.pe, config.shots, config.seed + 1);

    res.ledger = make_ledger(g.n, k, res.s_k, res.beta_exact, res.spectral.lambda_min);
    return res;
}

}  // namespace qbetti
