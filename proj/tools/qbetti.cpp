// Command-line front end: filtration sweeps, combinadic helpers, point generator.
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbetti/combinadic.hpp"
#include "qbetti/pipeline.hpp"

namespace {

std::vector<double> parse_grid_spec(const std::string& spec) {
    double lo = 0.0, hi = 0.0;
    int steps = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(spec);
    if (!(is >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':' || !is.eof())
        throw qbetti::ConfigError("--eps-grid expects min:max:steps, got '" + spec + "'");
    return qbetti::epsilon_grid(lo, hi, steps);
}

int do_run(qbetti::RunConfig config, const std::string& format, const std::string& mode,
           const std::vector<double>& eps, const std::string& grid_spec) {
    config.format = qbetti::parse_format(format);
    config.mode = mode == "oracle-only" ? qbetti::PipelineMode::oracle_only
                                        : qbetti::PipelineMode::full_sim;
    config.epsilons = eps;
    if (!grid_spec.empty()) {
        std::vector<double> grid = parse_grid_spec(grid_spec);
        config.epsilons.insert(config.epsilons.end(), grid.begin(), grid.end());
    }
    return qbetti::run_pipeline(config);
}

int do_rank(const std::string& bits) {
    std::vector<int> vertices;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            vertices.push_back(static_cast<int>(i));
        else if (bits[i] != '0')
            throw qbetti::ConfigError("bitstring must contain only 0 and 1");
    }
    if (vertices.empty()) throw qbetti::ConfigError("bitstring has no set bits");
    const int n = static_cast<int>(bits.size());
    const qbetti::Simplex s(vertices, n);
    const qbetti::PascalTable table = qbetti::build_pascal(n);
    std::cout << qbetti::combinadic_rank(s, table).value << '\n';
    return 0;
}

int do_unrank(int n, int k, const std::string& rank_text) {
    qbetti::BigInt value;
    try {
        value = qbetti::BigInt(rank_text);
    } catch (const std::exception&) {
        throw qbetti::ConfigError("rank must be a decimal natural number, got '" + rank_text +
                                  "'");
    }
    if (value < 0) throw qbetti::ConfigError("rank must be nonnegative");
    const qbetti::PascalTable table = qbetti::build_pascal(n);
    std::cout << qbetti::combinadic_unrank(value, n, k, table).bits() << '\n';
    return 0;
}

int do_gen_squares(int m, double separation, const std::string& out) {
    const std::vector<std::vector<double>> pts = qbetti::squares_points(m, separation);
    if (out.empty()) {
        std::cout.precision(17);
        for (const auto& p : pts) {
            for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p[i];
            std::cout << '\n';
        }
    } else {
        qbetti::write_point_file(out, pts);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Betti numbers of Vietoris-Rips complexes: exact classical homology "
        "alongside a faithful simulation of the quantum counting pipeline"};
    app.require_subcommand(1);

    qbetti::RunConfig config;
    std::string format = "points";
    std::string mode = "full-sim";
    std::string grid_spec;
    std::vector<double> eps;

    CLI::App* run = app.add_subcommand("run", "sweep (epsilon, k) cells over an input file");
    run->add_option("--input", config.input_path, "input file path")->required();
    run->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"points", "distance-matrix", "edge-list"}))
        ->capture_default_str();
    run->add_option("--eps", eps, "epsilon value (repeatable)");
    run->add_option("--eps-grid", grid_spec, "inclusive grid min:max:steps");
    run->add_option("--k", config.ks, "simplex dimension (repeatable, k vertices per simplex)")
        ->required();
    run->add_option("--mode", mode, "oracle-only skips the quantum simulation")
        ->check(CLI::IsMember({"oracle-only", "full-sim"}))
        ->capture_default_str();
    run->add_option("--margin-bits", config.margin_bits, "extra phase-register bits")
        ->capture_default_str();
    run->add_option("--shots", config.shots, "sampled phase-estimation shots (0 = none)");
    run->add_option("--seed", config.seed, "base RNG seed");
    run->add_option("--out", config.out_path, "JSON report path (default stdout)");
    run->add_option("--csv", config.csv_path, "CSV summary path");
    run->add_flag("--dump-matrices", config.dump_matrices,
                  "write per-cell boundary and Laplacian matrices next to --out");

    std::string bits;
    CLI::App* rank = app.add_subcommand("rank", "combinadic rank of a simplex bitstring");
    rank->add_option("bits", bits, "n-character bitstring, vertex 0 leftmost")->required();

    int un_n = 0, un_k = 0;
    std::string rank_text;
    CLI::App* unrank = app.add_subcommand("unrank", "simplex bitstring for a combinadic rank");
    unrank->add_option("--n", un_n, "vertex count")->required();
    unrank->add_option("--k", un_k, "simplex dimension")->required();
    unrank->add_option("value", rank_text, "decimal rank in [0, C(n,k))")->required();

    int gen_m = 0;
    double gen_sep = 10.0;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen-squares",
                                       "point cloud of m+1 distant squares, edge of square i "
                                       "is 2^(i/2)");
    gen->add_option("--m", gen_m, "largest square index")->required();
    gen->add_option("--separation", gen_sep, "center spacing factor (>= 10)")
        ->capture_default_str();
    gen->add_option("--out", gen_out, "point file path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return do_run(config, format, mode, eps, grid_spec);
        if (rank->parsed()) return do_rank(bits);
        if (unrank->parsed()) return do_unrank(un_n, un_k, rank_text);
        if (gen->parsed()) return do_gen_squares(gen_m, gen_sep, gen_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
