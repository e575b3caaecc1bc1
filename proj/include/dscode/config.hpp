#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dscode/code.hpp"

namespace dscode {

/// A single analysis job: the family plus the analyses to run on it.
///
/// Config files are line-oriented:
///
///   # comment
///   p 3
///   m 3
///   block {1,2} {3}
///   block {1}
///   analyze weights griesmer distance_optimal singleton
///   locality 3
///   availability 3 2
///   cm_bound 2 3
///   max_pm 10000000
///   max_brute_n 24
///
/// Subset indices are 1-based. A bare `block` line keeps the whole
/// projective space for that block.
struct JobConfig {
    int p = 0;
    int m = 0;
    std::vector<std::vector<IndexSet>> blocks;

    bool weights = false;
    bool griesmer = false;
    bool distance_optimal = false;
    bool singleton = false;
    std::optional<std::pair<int, int>> cm_bound;      // (r, delta)
    std::optional<int> locality_delta;
    std::optional<std::pair<int, int>> availability;  // (delta, t)

    long long max_pm = kDefaultMaxPm;
    int max_brute_n = 24;
};

namespace detail {

inline IndexSet parse_subset_token(const std::string& token, int line_no) {
    auto fail = [&](const std::string& msg) {
        return CodeError(Errc::config_invalid,
                         "line " + std::to_string(line_no) + ": " + msg + " in '" + token + "'");
    };
    if (token.size() < 2 || token.front() != '{' || token.back() != '}')
        throw fail("subset must look like {1,2}");
    IndexSet out;
    std::string body = token.substr(1, token.size() - 2);
    if (body.empty()) return out;
    std::istringstream in(body);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            throw fail("bad index '" + piece + "'");
        }
    }
    return out;
}

}  // namespace detail

inline JobConfig parse_config(const std::string& text) {
    JobConfig cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_p = false, saw_m = false;

    auto fail = [&](const std::string& msg) {
        return CodeError(Errc::config_invalid, "line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;

        auto read_int = [&](const char* what) {
            long long v;
            if (!(ls >> v)) throw fail(std::string("expected integer for ") + what);
            return v;
        };

        if (key == "p") {
            cfg.p = static_cast<int>(read_int("p"));
            saw_p = true;
        } else if (key == "m") {
            cfg.m = static_cast<int>(read_int("m"));
            saw_m = true;
        } else if (key == "block") {
            std::vector<IndexSet> block;
            std::string token;
            while (ls >> token) block.push_back(detail::parse_subset_token(token, line_no));
            cfg.blocks.push_back(std::move(block));
        } else if (key == "analyze") {
            std::string flag;
            bool any = false;
            while (ls >> flag) {
                any = true;
                if (flag == "weights") cfg.weights = true;
                else if (flag == "griesmer") cfg.griesmer = true;
                else if (flag == "distance_optimal") cfg.distance_optimal = true;
                else if (flag == "singleton") cfg.singleton = true;
                else throw fail("unknown analysis flag '" + flag + "'");
            }
            if (!any) throw fail("analyze line lists no flags");
        } else if (key == "locality") {
            cfg.locality_delta = static_cast<int>(read_int("locality delta"));
        } else if (key == "availability") {
            const int delta = static_cast<int>(read_int("availability delta"));
            const int t = static_cast<int>(read_int("availability t"));
            cfg.availability = {delta, t};
        } else if (key == "cm_bound") {
            const int r = static_cast<int>(read_int("cm_bound r"));
            const int delta = static_cast<int>(read_int("cm_bound delta"));
            cfg.cm_bound = {r, delta};
        } else if (key == "max_pm") {
            cfg.max_pm = read_int("max_pm");
        } else if (key == "max_brute_n") {
            cfg.max_brute_n = static_cast<int>(read_int("max_brute_n"));
        } else {
            throw fail("unknown directive '" + key + "'");
        }
        std::string extra;
        if (ls >> extra) throw fail("trailing token '" + extra + "'");
    }

    line_no = 0;  // validation messages are field-level, not line-level
    auto invalid = [](const std::string& field, const std::string& msg) {
        return CodeError(Errc::config_invalid, field + ": " + msg);
    };
    if (!saw_p) throw invalid("p", "missing");
    if (!saw_m) throw invalid("m", "missing");
    if (cfg.p < 2) throw invalid("p", "must be at least 2");
    if (!is_prime(cfg.p)) throw invalid("p", std::to_string(cfg.p) + " is not prime (NotPrime)");
    if (cfg.p > kMaxPrime) throw invalid("p", "exceeds supported limit");
    if (cfg.m < 1) throw invalid("m", "must be positive");
    if (cfg.blocks.empty()) throw invalid("block", "at least one block required");
    for (const auto& block : cfg.blocks)
        for (const auto& s : block)
            for (int i : s)
                if (i < 1 || i > cfg.m)
                    throw invalid("block", "index " + std::to_string(i) + " outside [1," +
                                               std::to_string(cfg.m) + "]");
    if (cfg.locality_delta && (*cfg.locality_delta < 2 || *cfg.locality_delta > cfg.p))
        throw invalid("locality", "delta must satisfy 2 <= delta <= p");
    if (cfg.availability) {
        if (!cfg.locality_delta)
            throw invalid("availability", "requires a locality line with the same delta");
        if (cfg.availability->first != *cfg.locality_delta)
            throw invalid("availability", "delta differs from the locality delta");
        if (cfg.availability->second < 1) throw invalid("availability", "t must be positive");
    }
    if (cfg.cm_bound && (cfg.cm_bound->first < 1 || cfg.cm_bound->second < 2))
        throw invalid("cm_bound", "need r >= 1 and delta >= 2");
    if (cfg.max_pm < 2) throw invalid("max_pm", "too small");
    if (cfg.max_brute_n < 1) throw invalid("max_brute_n", "too small");
    return cfg;
}

}  // namespace dscode
