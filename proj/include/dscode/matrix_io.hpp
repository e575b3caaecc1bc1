#pragma once

#include <sstream>
#include <string>

#include "dscode/code.hpp"

namespace dscode {

/// Generator matrix as text: header line "p m n", then m rows of n
/// space-separated residues. Round-trips bit-exactly.
inline std::string export_matrix(const DefiningCode& code) {
    std::ostringstream out;
    out << code.field().p() << ' ' << code.m() << ' ' << code.n() << '\n';
    for (int row = 0; row < code.m(); ++row) {
        for (int col = 0; col < code.n(); ++col) {
            if (col) out << ' ';
            out << code.columns()[col][row];
        }
        out << '\n';
    }
    return out.str();
}

inline DefiningCode import_matrix(const std::string& text, long long max_pm = kDefaultMaxPm) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    auto fail = [&](int column, const std::string& msg) -> CodeError {
        return CodeError(Errc::parse_error, "line " + std::to_string(line_no) + ", column " +
                                                std::to_string(column) + ": " + msg);
    };

    if (!std::getline(in, line)) {
        line_no = 1;
        throw fail(1, "missing header line");
    }
    ++line_no;
    long long p = 0, m = 0, n = 0;
    {
        std::istringstream hdr(line);
        if (!(hdr >> p >> m >> n)) throw fail(1, "header must be 'p m n'");
        std::string extra;
        if (hdr >> extra) throw fail(1, "trailing tokens after 'p m n'");
    }
    if (p < 2 || !is_prime(p)) throw fail(1, "p must be prime");
    if (p > kMaxPrime) throw fail(1, "p exceeds supported limit");
    if (m < 1) throw fail(1, "m must be positive");
    if (n < 1) throw fail(1, "n must be positive");

    const PrimeField field(static_cast<int>(p));
    std::vector<FpVector> columns(static_cast<std::size_t>(n),
                                  FpVector(static_cast<std::size_t>(m), 0));
    for (int row = 0; row < m; ++row) {
        if (!std::getline(in, line)) {
            ++line_no;
            throw fail(1, "expected " + std::to_string(m) + " rows, got " + std::to_string(row));
        }
        ++line_no;
        std::istringstream rs(line);
        for (int col = 0; col < n; ++col) {
            long long v;
            if (!(rs >> v)) throw fail(col + 1, "expected " + std::to_string(n) + " entries");
            if (v < 0 || v >= p) throw fail(col + 1, "entry " + std::to_string(v) + " outside [0,p)");
            columns[col][row] = static_cast<int>(v);
        }
        std::string extra;
        if (rs >> extra) throw fail(static_cast<int>(n) + 1, "trailing tokens in row");
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            throw fail(1, "unexpected content after matrix rows");
    }
    return DefiningCode::from_columns(field, static_cast<int>(m), std::move(columns), max_pm);
}

}  // namespace dscode
