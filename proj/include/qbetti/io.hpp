// File ingestion and the distant-squares point generator.
#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbetti/complex.hpp"

namespace qbetti {

enum class InputFormat { distance_matrix, points, edge_list };

inline InputFormat parse_format(const std::string& name) {
    if (name == "distance-matrix") return InputFormat::distance_matrix;
    if (name == "points") return InputFormat::points;
    if (name == "edge-list") return InputFormat::edge_list;
    throw std::invalid_argument("unknown input format: " + name +
                                " (expected distance-matrix|points|edge-list)");
}

/// Parse error carrying the source name and 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

inline std::vector<double> parse_numbers(const std::string& text, const std::string& source,
                                         int line) {
    std::istringstream is(text);
    std::vector<double> row;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw ParseError(source, line, "non-numeric token '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError(source, line, "non-numeric token '" + tok + "'");
        row.push_back(v);
    }
    return row;
}

}  // namespace detail

/// Distance-matrix format: first line n, then n rows of n space-separated
/// decimals.
///
/// Points format: one point per line, space-separated coordinates, all of
/// equal dimension; distances are Euclidean.
///
/// Edge-list format: first line n, then one "i j" pair per line; encoded as
/// the 0/1/2 distance matrix (0 on the diagonal, 1 for listed edges, 2
/// otherwise) so a sweep at epsilon = 1 reproduces the graph.
inline DistanceMatrix parse_input(std::istream& is, InputFormat format,
                                  const std::string& source) {
    std::string line;
    int lineno = 0;

    auto next_content_line = [&](std::string& out) {
        while (std::getline(is, line)) {
            ++lineno;
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok && tok[0] != '#') {
                out = line;
                return true;
            }
        }
        return false;
    };

    if (format == InputFormat::points) {
        std::vector<std::vector<double>> pts;
        std::string content;
        while (next_content_line(content)) {
            std::vector<double> p = detail::parse_numbers(content, source, lineno);
            if (!pts.empty() && p.size() != pts[0].size())
                throw ParseError(source, lineno, "ragged point dimensions");
            pts.push_back(std::move(p));
        }
        if (pts.empty()) throw ParseError(source, lineno, "no points in file");
        return DistanceMatrix::from_points(pts);
    }

    std::string content;
    if (!next_content_line(content)) throw ParseError(source, lineno, "missing vertex count");
    std::vector<double> head = detail::parse_numbers(content, source, lineno);
    if (head.size() != 1 || head[0] != std::floor(head[0]) || head[0] < 1)
        throw ParseError(source, lineno, "first line must be the vertex count n");
    const int n = static_cast<int>(head[0]);

    if (format == InputFormat::distance_matrix) {
        std::vector<double> d;
        d.reserve(static_cast<std::size_t>(n) * n);
        for (int r = 0; r < n; ++r) {
            if (!next_content_line(content))
                throw ParseError(source, lineno, "expected " + std::to_string(n) + " matrix rows");
            std::vector<double> row = detail::parse_numbers(content, source, lineno);
            if (row.size() != static_cast<std::size_t>(n))
                throw ParseError(source, lineno,
                                 "ragged row: expected " + std::to_string(n) + " entries, got " +
                                     std::to_string(row.size()));
            d.insert(d.end(), row.begin(), row.end());
        }
        try {
            return DistanceMatrix(n, std::move(d));
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, lineno, e.what());
        }
    }

    // edge list
    std::vector<double> d(static_cast<std::size_t>(n) * n, 2.0);
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = 0.0;
    while (next_content_line(content)) {
        std::vector<double> pair = detail::parse_numbers(content, source, lineno);
        if (pair.size() != 2 || pair[0] != std::floor(pair[0]) || pair[1] != std::floor(pair[1]))
            throw ParseError(source, lineno, "expected an integer vertex pair");
        const int a = static_cast<int>(pair[0]), b = static_cast<int>(pair[1]);
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ParseError(source, lineno, "vertex index out of range [0, n)");
        if (a == b) throw ParseError(source, lineno, "self-loop not allowed");
        d[static_cast<std::size_t>(a) * n + b] = 1.0;
        d[static_cast<std::size_t>(b) * n + a] = 1.0;
    }
    return DistanceMatrix(n, std::move(d));
}

inline DistanceMatrix parse_input_file(const std::string& path, InputFormat format) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open input file: " + path);
    return parse_input(is, format, path);
}

/// Corner points of m+1 well-separated axis-aligned squares in the plane;
/// square i has edge length 2^(i/2) and the centers sit separation_factor *
/// 2^(m/2) apart on the x axis, far enough that no inter-square edge appears
/// at any scale in the sweep range.
inline std::vector<std::vector<double>> squares_points(int m, double separation_factor) {
    if (m < 0) throw std::invalid_argument("squares_points: m must be >= 0");
    if (!(separation_factor >= 10.0))
        throw std::invalid_argument("squares_points: separation_factor must be >= 10");
    std::vector<std::vector<double>> pts;
    const double spacing = separation_factor * std::pow(2.0, m / 2.0);
    for (int i = 0; i <= m; ++i) {
        const double cx = static_cast<double>(i) * spacing;
        const double h = std::pow(2.0, i / 2.0) / 2.0;  // half edge
        pts.push_back({cx - h, -h});
        pts.push_back({cx + h, -h});
        pts.push_back({cx - h, h});
        pts.push_back({cx + h, h});
    }
    return pts;
}

inline void write_point_file(const std::string& path, const std::vector<std::vector<double>>& pts) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os.precision(17);
    for (const auto& p : pts) {
        for (std::size_t c = 0; c < p.size(); ++c) os << (c ? " " : "") << p[c];
        os << '\n';
    }
}

}  // namespace qbetti
