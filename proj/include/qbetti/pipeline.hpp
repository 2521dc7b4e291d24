// Batch front end: (epsilon, k) sweep, JSON/CSV report assembly, exit codes.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbetti/io.hpp"
#include "qbetti/qsim.hpp"

namespace qbetti {

enum class PipelineMode { oracle_only, full_sim };

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input_path;
    InputFormat format = InputFormat::points;
    std::vector<double> epsilons;
    std::vector<int> ks;
    PipelineMode mode = PipelineMode::full_sim;
    int margin_bits = 4;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string out_path;   // empty: stdout
    std::string csv_path;   // empty: no CSV summary
    bool dump_matrices = false;
};

/// Inclusive epsilon grid with `steps` points from min to max.
inline std::vector<double> epsilon_grid(double min, double max, int steps) {
    if (steps < 1) throw ConfigError("epsilon grid needs at least one step");
    if (max < min) throw ConfigError("epsilon grid: max < min");
    std::vector<double> eps;
    if (steps == 1) {
        eps.push_back(min);
    } else {
        for (int i = 0; i < steps; ++i)
            eps.push_back(min + (max - min) * static_cast<double>(i) / (steps - 1));
    }
    return eps;
}

struct CellRecord {
    double epsilon = 0.0;
    int k = 0;
    bool simulated = false;  // full_sim ran on this cell
    EndToEndResult result;   // quantum fields meaningful iff simulated
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Stable per-cell seed: independent of evaluation order.
inline std::uint64_t cell_seed(std::uint64_t base, std::size_t eps_index, int k) {
    return splitmix64(base ^ splitmix64(static_cast<std::uint64_t>(eps_index) * 0x10001ULL +
                                        static_cast<std::uint64_t>(k)));
}

/// Oracle-only evaluation: classical Betti number, spectrum diagnostics and
/// the cost ledger, no quantum simulation.
inline EndToEndResult oracle_cell(const EpsilonGraph& g, int k) {
    EndToEndResult res;
    res.n = g.n;
    res.k = k;
    const ChainComplex cc = build_chain(g);
    if (k > cc.top_dimension()) {
        res.empty_complex = true;
        res.ledger = make_ledger(g.n, k, 0, 0, std::nullopt);
        return res;
    }
    res.s_k = cc.sets[static_cast<std::size_t>(k) - 1].size();
    res.beta_exact = betti_exact(cc.lower_of(k), cc.upper_of(k));
    res.spectral = spectrum(laplacian(cc.lower_of(k), cc.upper_of(k)));
    res.ledger = make_ledger(g.n, k, res.s_k, res.beta_exact, res.spectral.lambda_min);
    return res;
}

inline void dump_cell_matrices(const EpsilonGraph& g, int k, const std::string& prefix) {
    const ChainComplex cc = build_chain(g);
    if (k > cc.top_dimension()) return;
    auto dump = [&](const IntMatrix& m, const std::string& tag) {
        std::ofstream os(prefix + "." + tag + ".txt");
        if (!os) throw std::runtime_error("cannot open matrix dump file: " + prefix);
        write_triplets(m, os);
    };
    dump(cc.lower_of(k).m, "boundary-k" + std::to_string(k));
    dump(cc.upper_of(k).m, "boundary-k" + std::to_string(k + 1));
    dump(laplacian(cc.lower_of(k), cc.upper_of(k)).m, "laplacian-k" + std::to_string(k));
}

}  // namespace detail

inline void validate_config(const RunConfig& config, int n) {
    if (config.epsilons.empty()) throw ConfigError("epsilon grid is empty");
    for (double e : config.epsilons)
        if (!(e >= 0.0)) throw ConfigError("epsilon values must be >= 0");
    if (config.ks.empty()) throw ConfigError("no k values given");
    for (int k : config.ks)
        if (k < 1 || k > n)
            throw ConfigError("k = " + std::to_string(k) + " out of range [1, " +
                              std::to_string(n) + "]");
    if (config.margin_bits < 0) throw ConfigError("margin-bits must be >= 0");
}

/// Evaluate every (epsilon, k) cell, sorted by epsilon then k. Cells are
/// independent; the per-cell seed depends only on the base seed and the
/// cell's grid position.
inline std::vector<CellRecord> run_cells(const DistanceMatrix& d, const RunConfig& config) {
    validate_config(config, d.size());

    std::vector<double> eps = config.epsilons;
    std::sort(eps.begin(), eps.end());
    std::vector<int> ks = config.ks;
    std::sort(ks.begin(), ks.end());

    std::vector<CellRecord> cells;
    for (std::size_t ei = 0; ei < eps.size(); ++ei) {
        const EpsilonGraph g = build_graph(d, eps[ei]);
        for (int k : ks) {
            CellRecord cell;
            cell.epsilon = eps[ei];
            cell.k = k;
            if (config.mode == PipelineMode::full_sim) {
                SimConfig sim;
                sim.margin_bits = config.margin_bits;
                sim.shots = config.shots;
                sim.seed = detail::cell_seed(config.seed, ei, k);
                cell.result = end_to_end_betti(g, k, sim);
                cell.simulated = true;
            } else {
                cell.result = detail::oracle_cell(g, k);
            }
            if (config.dump_matrices && !config.out_path.empty()) {
                std::ostringstream tag;
                tag << config.out_path << ".cell" << cells.size();
                detail::dump_cell_matrices(g, k, tag.str());
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

namespace detail {

inline nlohmann::ordered_json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

}  // namespace detail

inline nlohmann::ordered_json report_json(const std::vector<CellRecord>& cells,
                                          const RunConfig& config, int n) {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["mode"] = config.mode == PipelineMode::full_sim ? "full-sim" : "oracle-only";
    doc["margin_bits"] = config.margin_bits;
    doc["shots"] = config.shots;
    doc["seed"] = config.seed;
    doc["cells"] = nlohmann::ordered_json::array();

    for (const CellRecord& cell : cells) {
        const EndToEndResult& r = cell.result;
        nlohmann::ordered_json c;
        c["n"] = r.n;
        c["k"] = r.k;
        c["epsilon"] = cell.epsilon;
        c["S_k"] = r.s_k;
        c["beta_exact"] = r.beta_exact;
        c["empty_complex"] = r.empty_complex;
        if (cell.simulated) {
            c["beta_quantum"] = r.beta_quantum;
            c["p_zero"] = r.empty_complex ? nlohmann::ordered_json(nullptr)
                                          : nlohmann::ordered_json(r.pe.p_zero);
            c["t"] = r.empty_complex ? nlohmann::ordered_json(nullptr)
                                     : nlohmann::ordered_json(r.sizing.t);
            c["c"] = r.empty_complex ? nlohmann::ordered_json(nullptr)
                                     : nlohmann::ordered_json(r.sizing.c);
        } else {
            c["beta_quantum"] = nullptr;
            c["p_zero"] = nullptr;
            c["t"] = nullptr;
            c["c"] = nullptr;
        }
        if (!r.empty_complex && r.spectral.size() > 0) {
            c["lambda_min"] = r.spectral.lambda_min
                                  ? nlohmann::ordered_json(*r.spectral.lambda_min)
                                  : nlohmann::ordered_json(nullptr);
            c["lambda_max"] = r.spectral.lambda_max;
            c["gershgorin"] = r.spectral.gershgorin_bound;
        } else {
            c["lambda_min"] = nullptr;
            c["lambda_max"] = nullptr;
            c["gershgorin"] = nullptr;
        }
        if (cell.simulated) {
            c["queries"] = {{"prep", r.prep.oracle_queries},
                            {"count", r.count.grover_rounds},
                            {"approx_count", r.prep.approx_count_queries}};
        } else {
            c["queries"] = nullptr;
        }
        c["eq1_prediction"] = detail::finite_or_null(r.ledger.eq1_total);
        c["ledger"] = {{"state_prep", detail::finite_or_null(r.ledger.state_prep)},
                       {"lgz_sampling", detail::finite_or_null(r.ledger.lgz_sampling)},
                       {"lgz_betti", detail::finite_or_null(r.ledger.lgz_betti)},
                       {"lgz_exact", detail::finite_or_null(r.ledger.lgz_exact)},
                       {"delta", r.ledger.delta},
                       {"beta_zero_flagged", r.ledger.beta_zero_flagged}};
        if (cell.simulated && !r.histogram.empty()) {
            std::uint64_t shots = 0;
            for (std::uint64_t h : r.histogram) shots += h;
            c["sampled_zero_frequency"] =
                static_cast<double>(r.histogram[0]) / static_cast<double>(shots);
            c["beta_sampled"] =
                count_from_samples(r.histogram, static_cast<int>(r.s_k)).beta_estimate;
        }
        doc["cells"].push_back(std::move(c));
    }
    return doc;
}

inline std::string report_csv(const std::vector<CellRecord>& cells) {
    std::ostringstream os;
    os.precision(17);
    os << "epsilon,k,S_k,beta_oracle,beta_sim,p_zero\n";
    for (const CellRecord& cell : cells) {
        const EndToEndResult& r = cell.result;
        os << cell.epsilon << ',' << cell.k << ',' << r.s_k << ',' << r.beta_exact << ',';
        if (cell.simulated) os << r.beta_quantum;
        os << ',';
        if (cell.simulated && !r.empty_complex) os << r.pe.p_zero;
        os << '\n';
    }
    return os.str();
}

/// Exit codes: 0 success, 1 oracle/sim mismatch in any cell, 2 input or
/// configuration error.
inline int run_pipeline(const RunConfig& config) {
    try {
        const DistanceMatrix d = parse_input_file(config.input_path, config.format);
        const std::vector<CellRecord> cells = run_cells(d, config);

        const nlohmann::ordered_json doc = report_json(cells, config, d.size());
        if (config.out_path.empty()) {
            std::cout << doc.dump(2) << '\n';
        } else {
            std::ofstream os(config.out_path);
            if (!os) throw std::runtime_error("cannot open output file: " + config.out_path);
            os << doc.dump(2) << '\n';
        }
        if (!config.csv_path.empty()) {
            std::ofstream os(config.csv_path);
            if (!os) throw std::runtime_error("cannot open CSV file: " + config.csv_path);
            os << report_csv(cells);
        }

        for (const CellRecord& cell : cells)
            if (cell.simulated && !cell.result.empty_complex &&
                cell.result.beta_quantum != cell.result.beta_exact) {
                std::cerr << "mismatch: epsilon=" << cell.epsilon << " k=" << cell.k
                          << " oracle=" << cell.result.beta_exact
                          << " simulated=" << cell.result.beta_quantum << '\n';
                return 1;
            }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace qbetti
