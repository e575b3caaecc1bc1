#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dscode/code.hpp"

namespace dscode {

/// All projective lines of a space plus, per point, the incident line ids.
struct LineIndex {
    std::vector<std::vector<int>> lines;     // each: sorted point indices
    std::vector<std::vector<int>> incident;  // point index -> line ids
};

inline LineIndex build_line_index(const ProjSpace& space) {
    const std::size_t np = space.points.size();
    if (np > 20'000)
        throw CodeError(Errc::scale_limit_exceeded, "line index limited to 20000 points");
    LineIndex idx;
    idx.incident.resize(np);
    std::vector<std::vector<bool>> paired(np);
    for (auto& row : paired) row.assign(np, false);
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = i + 1; j < np; ++j) {
            if (paired[i][j]) continue;
            const auto line = line_through(space.field, space.points[i], space.points[j]);
            std::vector<int> ids;
            ids.reserve(line.size());
            for (const auto& pt : line) ids.push_back(static_cast<int>(index_of(space, pt)));
            std::sort(ids.begin(), ids.end());
            for (std::size_t a = 0; a < ids.size(); ++a)
                for (std::size_t b = a + 1; b < ids.size(); ++b)
                    paired[ids[a]][ids[b]] = true;
            const int line_id = static_cast<int>(idx.lines.size());
            for (int pt : ids) idx.incident[pt].push_back(line_id);
            idx.lines.push_back(std::move(ids));
        }
    }
    return idx;
}

/// Minimum distance of the code restricted to the given columns, via
/// row-space enumeration (p^rank words).
inline long long punctured_min_distance(const PrimeField& f,
                                        const std::vector<FpVector>& all_columns,
                                        const std::vector<int>& indices) {
    const int m = static_cast<int>(all_columns.at(0).size());
    const int t = static_cast<int>(indices.size());
    std::vector<FpVector> rows(m, FpVector(t, 0));
    for (int c = 0; c < t; ++c)
        for (int r = 0; r < m; ++r) rows[r][c] = all_columns[indices[c]][r];

    std::vector<FpVector> basis;
    std::vector<int> pivots;
    for (auto& row : rows) {
        FpVector r = row;
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (r[pivots[b]] != 0) r = vec_sub(f, r, vec_scale(f, r[pivots[b]], basis[b]));
        int piv = -1;
        for (int j = 0; j < t; ++j)
            if (r[j] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        basis.push_back(vec_scale(f, f.inv(r[piv]), r));
        pivots.push_back(piv);
    }
    if (basis.empty()) return 0;

    long long best = t + 1;
    FpVector word(t, 0);
    // Odometer over coefficient vectors, skipping the all-zero word.
    std::vector<int> coef(basis.size(), 0);
    const long long total = ipow(f.p(), static_cast<int>(basis.size()));
    for (long long step = 1; step < total; ++step) {
        int lev = 0;
        while (true) {
            for (int j = 0; j < t; ++j) word[j] = f.add(word[j], basis[lev][j]);
            coef[lev] += 1;
            if (coef[lev] < f.p()) break;
            coef[lev] = 0;
            ++lev;
        }
        long long w = 0;
        for (int v : word)
            if (v != 0) ++w;
        if (w < best) best = w;
    }
    return best;
}

struct RepairSet {
    std::vector<int> columns;  // the set I, excluding the certified coordinate
    std::string method;
};

struct CoordinateWitness {
    int column = -1;
    std::vector<RepairSet> repair_sets;
};

struct LocalityCertificate {
    int r = 2;
    int delta = 0;
    int t = 1;
    bool certified = false;
    std::optional<int> blocking_coordinate;
    int achieved_t_at_blocking = 0;
    std::vector<CoordinateWitness> witnesses;
    /// Block-local line-scan profile: best delta per coordinate.
    std::vector<int> per_coordinate_best_delta;
};

namespace detail {

/// Per-block lookup from point to the owning column index.
struct BlockPoints {
    std::vector<std::pair<FpVector, int>> sorted;  // (normalized rep, column)

    std::optional<int> column_of(const FpVector& rep) const {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), rep,
                                   [](const auto& a, const FpVector& b) { return a.first < b; });
        if (it != sorted.end() && it->first == rep) return it->second;
        return std::nullopt;
    }
};

struct CertifyContext {
    const DefiningCode* code;
    std::shared_ptr<const ProjSpace> space;
    LineIndex line_index;
    std::vector<BlockPoints> blocks;
    std::vector<std::optional<ProjPoint>> column_point;  // null for zero columns

    explicit CertifyContext(const DefiningCode& c) : code(&c) {
        space = c.space();
        if (!space)
            space = std::make_shared<const ProjSpace>(
                enumerate_projective(c.field(), c.m()));
        line_index = build_line_index(*space);
        blocks.resize(c.s());
        column_point.resize(c.n());
        for (int i = 0; i < c.n(); ++i) {
            if (is_zero_vector(c.columns()[i])) continue;
            const ProjPoint pt = normalize(c.field(), c.columns()[i]);
            column_point[i] = pt;
            auto& vec = blocks[c.block_of(i)].sorted;
            vec.emplace_back(pt.rep, i);
        }
        for (auto& b : blocks) {
            std::sort(b.sorted.begin(), b.sorted.end());
            // Keep the first column for duplicated points within a block.
            b.sorted.erase(std::unique(b.sorted.begin(), b.sorted.end(),
                                       [](const auto& a, const auto& b2) {
                                           return a.first == b2.first;
                                       }),
                           b.sorted.end());
        }
    }

    long long block_distinct_points(int b) const {
        return static_cast<long long>(blocks[b].sorted.size());
    }

    /// Columns of block b whose points lie on the given line, excluding the
    /// anchor point; preserves line construction order.
    std::vector<int> line_columns_in_block(int line_id, int b, const ProjPoint& anchor) const {
        std::vector<int> out;
        for (int pt_idx : line_index.lines[line_id]) {
            const ProjPoint& pt = space->points[pt_idx];
            if (pt == anchor) continue;
            if (auto col = blocks[b].column_of(pt.rep)) out.push_back(*col);
        }
        return out;
    }

    /// Distinct points of the line present in any block, excluding the
    /// anchor; each mapped to its first owning column.
    std::vector<int> line_columns_global(int line_id, const ProjPoint& anchor) const {
        std::vector<int> out;
        for (int pt_idx : line_index.lines[line_id]) {
            const ProjPoint& pt = space->points[pt_idx];
            if (pt == anchor) continue;
            for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
                if (auto col = blocks[b].column_of(pt.rep)) {
                    out.push_back(*col);
                    break;
                }
            }
        }
        return out;
    }
};

inline bool verify_repair_set(const DefiningCode& code, int coordinate,
                              const std::vector<int>& repair, int delta) {
    std::vector<int> sel = repair;
    sel.push_back(coordinate);
    std::sort(sel.begin(), sel.end());
    if (static_cast<int>(sel.size()) > 2 + delta - 1) return false;
    return punctured_min_distance(code.field(), code.columns(), sel) >= delta;
}

}  // namespace detail

/// Best locality level a single line can provide for one column of one
/// block: delta* = (largest number of the block's points on a line through
/// the column's point) - 1, plus the witnessing line as column indices.
struct LineScanResult {
    int best_delta = 0;
    std::vector<int> witness_columns;  // the line's block columns, excluding the scanned one
};

inline LineScanResult line_locality_scan_impl(const detail::CertifyContext& ctx, int block_index,
                                              int column) {
    const auto& pt = ctx.column_point.at(column);
    if (!pt) return {};
    LineScanResult best;
    const int pt_idx = static_cast<int>(index_of(*ctx.space, *pt));
    for (int line_id : ctx.line_index.incident[pt_idx]) {
        auto cols = ctx.line_columns_in_block(line_id, block_index, *pt);
        const int delta_here = static_cast<int>(cols.size());  // |L ∩ D| - 1
        if (delta_here > best.best_delta) {
            best.best_delta = delta_here;
            best.witness_columns = std::move(cols);
        }
    }
    return best;
}

inline LineScanResult line_locality_scan(const DefiningCode& code, int block_index, int column) {
    if (column < 0 || column >= code.n())
        throw CodeError(Errc::index_out_of_range, "column " + std::to_string(column));
    if (block_index < 0 || block_index >= code.s() || code.block_of(column) != block_index)
        throw CodeError(Errc::point_not_in_block, "column " + std::to_string(column) +
                                                      " is not in block " +
                                                      std::to_string(block_index));
    detail::CertifyContext ctx(code);
    return line_locality_scan_impl(ctx, block_index, column);
}

/// Constructive companion point for line-based repair sets. For g with all
/// coordinates nonzero (case 1, needs p >= 5): h = (1, -a_j g_2, ..., -a_j g_m),
/// giving [h + a_i g] all-nonzero for every i in [p-2] except j. Otherwise
/// (case 2): ones on the leading zeros, ones on the interior zeros, g
/// elsewhere, giving [h + a_i g] all-nonzero for every i in [p-2].
inline ProjPoint lemma42_h(const PrimeField& f, const ProjPoint& g, int j) {
    const int p = f.p();
    const int m = static_cast<int>(g.rep.size());
    if (j < 1 || j > p - 2) throw CodeError(Errc::invalid_params, "need 1 <= j <= p-2");
    FpVector h(m, 0);
    if (in_restricted(g)) {
        if (p < 5)
            throw CodeError(Errc::unsupported_prime,
                            "all-nonzero case needs p >= 5");
        h[0] = 1;
        for (int i = 1; i < m; ++i) h[i] = f.neg(f.mul(j, g.rep[i]));
        for (int i = 1; i <= p - 2; ++i) {
            if (i == j) continue;
            const auto combo = normalize(f, vec_add(f, h, vec_scale(f, i, g.rep)));
            if (!in_restricted(combo))
                throw CodeError(Errc::inconsistent_theorem, "companion point violates promise");
        }
        return ProjPoint{h};
    }
    const std::size_t lead = g.leading();
    for (std::size_t i = 0; i <= lead; ++i) h[i] = 1;
    for (std::size_t i = lead + 1; i < static_cast<std::size_t>(m); ++i)
        h[i] = g.rep[i] == 0 ? 1 : g.rep[i];
    for (int i = 1; i <= p - 2; ++i) {
        const auto combo = normalize(f, vec_add(f, h, vec_scale(f, i, g.rep)));
        if (!in_restricted(combo))
            throw CodeError(Errc::inconsistent_theorem, "companion point violates promise");
    }
    return ProjPoint{h};
}

namespace detail {

/// Try the constructive strategies for one coordinate; returns delta
/// in-block columns or nothing.
inline std::optional<RepairSet> constructive_repair(const CertifyContext& ctx, int column,
                                                    int delta) {
    const DefiningCode& code = *ctx.code;
    const PrimeField& f = code.field();
    const int p = f.p();
    const int m = code.m();
    const int b = code.block_of(column);
    const ProjPoint& g = *ctx.column_point[column];
    if (delta > p - 1) return std::nullopt;

    auto in_block = [&](const ProjPoint& pt) { return ctx.blocks[b].column_of(pt.rep); };

    auto take_line_witness = [&](const ProjPoint& h, const std::string& method)
        -> std::optional<RepairSet> {
        std::vector<int> cols;
        for (const auto& pt : line_through(f, g, h)) {
            if (pt == g) continue;
            if (auto col = in_block(pt)) cols.push_back(*col);
        }
        if (static_cast<int>(cols.size()) < delta) return std::nullopt;
        cols.resize(delta);
        if (!verify_repair_set(code, column, cols, delta)) return std::nullopt;
        return RepairSet{std::move(cols), method};
    };

    if (!in_restricted(g)) {
        if (p >= 3 && m >= 2) {
            const ProjPoint h = lemma42_h(f, g, 1);
            // Candidates h and [h + a_i g] are all-nonzero, hence in the
            // block whenever every removed subset is proper.
            if (auto rs = take_line_witness(h, "lemma42")) return rs;
        }
        return std::nullopt;
    }
    if (delta <= p - 2 && p >= 5) {
        const ProjPoint h = lemma42_h(f, g, p - 2);
        std::vector<int> cols;
        if (auto col = in_block(h)) cols.push_back(*col);
        for (int i = 1; i <= p - 3 && static_cast<int>(cols.size()) < delta; ++i) {
            const auto combo = normalize(f, vec_add(f, h.rep, vec_scale(f, i, g.rep)));
            if (auto col = in_block(combo)) cols.push_back(*col);
        }
        if (static_cast<int>(cols.size()) >= delta) {
            cols.resize(delta);
            if (verify_repair_set(*ctx.code, column, cols, delta))
                return RepairSet{std::move(cols), "lemma42"};
        }
    }
    if (delta == p - 1 && m >= 2) {
        // A hyperplane companion: drop one coordinate of g (case by whether
        // it is the first), so the line through g and h keeps p points in
        // the block when some size-(m-1) support avoids every removed
        // subset. Each candidate is checked directly.
        for (int drop = 1; drop <= m; ++drop) {
            FpVector hv(m, 0);
            if (drop == 1) {
                for (int i = 1; i < m; ++i) hv[i] = g.rep[i];
            } else {
                hv[0] = 1;
                for (int i = 1; i < m; ++i) hv[i] = (i == drop - 1) ? 0 : g.rep[i];
            }
            if (is_zero_vector(hv)) continue;
            const ProjPoint h = normalize(f, hv);
            if (h == g) continue;
            if (auto rs = take_line_witness(h, "theorem44-Astar")) return rs;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Certify (2,delta)-locality for every coordinate via line-based repair
/// sets. Strategy order per coordinate: the counting shortcut (few enough
/// removed points force a fully surviving line), the constructive
/// companion-point recipes, the in-block line scan, then a line scan across
/// all blocks, and for delta = 2 a duplicated column. Every emitted witness
/// is re-verified by puncturing.
inline LocalityCertificate certify_locality(const DefiningCode& code, int delta) {
    const int p = code.field().p();
    if (delta < 2 || delta > p)
        throw CodeError(Errc::invalid_params, "need 2 <= delta <= p");
    detail::CertifyContext ctx(code);
    LocalityCertificate cert;
    cert.delta = delta;
    cert.t = 1;
    cert.certified = true;

    const long long lines_per_point =
        (ipow(p, code.m() - 1) - 1) / (p - 1);

    for (int i = 0; i < code.n(); ++i) {
        const int b = code.block_of(i);
        const auto scan = line_locality_scan_impl(ctx, b, i);
        cert.per_coordinate_best_delta.push_back(scan.best_delta);

        if (!ctx.column_point[i]) {
            cert.certified = false;
            cert.blocking_coordinate = i;
            return cert;
        }
        const ProjPoint& g = *ctx.column_point[i];

        std::optional<RepairSet> found;
        const long long complement =
            static_cast<long long>(ctx.space->points.size()) - ctx.block_distinct_points(b);
        if (complement < lines_per_point) {
            // A full line through g survives in the block; take the first.
            const int pt_idx = static_cast<int>(index_of(*ctx.space, g));
            for (int line_id : ctx.line_index.incident[pt_idx]) {
                auto cols = ctx.line_columns_in_block(line_id, b, g);
                if (static_cast<int>(cols.size()) == p) {
                    cols.resize(delta);
                    if (detail::verify_repair_set(code, i, cols, delta)) {
                        found = RepairSet{std::move(cols), "theorem47-counting"};
                        break;
                    }
                }
            }
        }
        if (!found) found = detail::constructive_repair(ctx, i, delta);
        if (!found && scan.best_delta >= delta) {
            std::vector<int> cols = scan.witness_columns;
            cols.resize(delta);
            if (detail::verify_repair_set(code, i, cols, delta))
                found = RepairSet{std::move(cols), "line-scan"};
        }
        if (!found) {
            const int pt_idx = static_cast<int>(index_of(*ctx.space, g));
            for (int line_id : ctx.line_index.incident[pt_idx]) {
                auto cols = ctx.line_columns_global(line_id, g);
                if (static_cast<int>(cols.size()) >= delta) {
                    cols.resize(delta);
                    if (detail::verify_repair_set(code, i, cols, delta)) {
                        found = RepairSet{std::move(cols), "line-scan-global"};
                        break;
                    }
                }
            }
        }
        if (!found && delta == 2) {
            for (int jcol = 0; jcol < code.n(); ++jcol) {
                if (jcol == i || !ctx.column_point[jcol]) continue;
                if (*ctx.column_point[jcol] == g) {
                    std::vector<int> cols{jcol};
                    if (detail::verify_repair_set(code, i, cols, delta)) {
                        found = RepairSet{std::move(cols), "duplicate-pair"};
                        break;
                    }
                }
            }
        }
        if (!found) {
            cert.certified = false;
            cert.blocking_coordinate = i;
            return cert;
        }
        cert.witnesses.push_back(CoordinateWitness{i, {std::move(*found)}});
    }
    return cert;
}

/// Certify (2,delta)_t availability: t pairwise disjoint line-based repair
/// sets per coordinate. The default strategy takes one repair set per
/// block, then further lines through the point, then (delta = 2) duplicate
/// columns.
inline LocalityCertificate certify_availability(const DefiningCode& code, int delta, int t) {
    const int p = code.field().p();
    if (delta < 2 || delta > p)
        throw CodeError(Errc::invalid_params, "need 2 <= delta <= p");
    if (t < 1) throw CodeError(Errc::invalid_params, "need t >= 1");
    detail::CertifyContext ctx(code);
    LocalityCertificate cert;
    cert.delta = delta;
    cert.t = t;
    cert.certified = true;

    for (int i = 0; i < code.n(); ++i) {
        if (!ctx.column_point[i]) {
            cert.certified = false;
            cert.blocking_coordinate = i;
            cert.achieved_t_at_blocking = 0;
            return cert;
        }
        const ProjPoint& g = *ctx.column_point[i];
        const int pt_idx = static_cast<int>(index_of(*ctx.space, g));
        std::vector<RepairSet> sets;
        std::vector<std::pair<int, int>> used;  // (line, block) pairs already taken

        auto try_pair = [&](int line_id, int b, const std::string& method) {
            if (static_cast<int>(sets.size()) >= t) return;
            for (const auto& u : used)
                if (u.first == line_id && u.second == b) return;
            auto cols = ctx.line_columns_in_block(line_id, b, g);
            if (static_cast<int>(cols.size()) < delta) return;
            cols.resize(delta);
            if (!detail::verify_repair_set(code, i, cols, delta)) return;
            used.emplace_back(line_id, b);
            sets.push_back(RepairSet{std::move(cols), method});
        };

        // One repair set per block first, mirroring the availability
        // construction for multi-block codes.
        for (int b = 0; b < code.s() && static_cast<int>(sets.size()) < t; ++b)
            for (int line_id : ctx.line_index.incident[pt_idx]) {
                const std::size_t before = sets.size();
                try_pair(line_id, b, "per-block");
                if (sets.size() > before) break;
            }
        // Then any remaining (line, block) pair; distinct lines meet only
        // at g, so the sets stay disjoint.
        for (int line_id : ctx.line_index.incident[pt_idx])
            for (int b = 0; b < code.s() && static_cast<int>(sets.size()) < t; ++b)
                try_pair(line_id, b, "extra-line");
        if (delta == 2 && static_cast<int>(sets.size()) < t) {
            std::vector<bool> taken(code.n(), false);
            for (const auto& rs : sets)
                for (int c : rs.columns) taken[c] = true;
            for (int jcol = 0; jcol < code.n() && static_cast<int>(sets.size()) < t; ++jcol) {
                if (jcol == i || taken[jcol] || !ctx.column_point[jcol]) continue;
                if (*ctx.column_point[jcol] == g) {
                    std::vector<int> cols{jcol};
                    if (detail::verify_repair_set(code, i, cols, delta))
                        sets.push_back(RepairSet{std::move(cols), "duplicate-pair"});
                }
            }
        }

        if (static_cast<int>(sets.size()) < t) {
            cert.certified = false;
            cert.blocking_coordinate = i;
            cert.achieved_t_at_blocking = static_cast<int>(sets.size());
            return cert;
        }
        cert.witnesses.push_back(CoordinateWitness{i, std::move(sets)});
    }
    return cert;
}

struct BruteForceResult {
    bool certified = false;
    std::optional<int> blocking_coordinate;
    std::vector<CoordinateWitness> witnesses;
};

/// Ground-truth (r,delta) check straight from the definition: for every
/// coordinate, search all column subsets of size at most r+delta-1
/// containing it for one whose punctured code has minimum distance at
/// least delta. Branches whose column rank already exceeds r are pruned
/// (the Singleton bound rules them out regardless of extension).
inline BruteForceResult brute_force_rdelta(const DefiningCode& code, int r, int delta,
                                           int max_n = 24) {
    if (r < 1 || delta < 2) throw CodeError(Errc::invalid_params, "need r >= 1, delta >= 2");
    if (code.n() > max_n)
        throw CodeError(Errc::scale_limit_exceeded,
                        "brute force limited to n <= " + std::to_string(max_n));
    if (r + delta - 1 > 8)
        throw CodeError(Errc::scale_limit_exceeded, "brute force limited to r+delta-1 <= 8");

    const PrimeField& f = code.field();
    const int cap = r + delta - 1;
    BruteForceResult out;
    out.certified = true;

    for (int i = 0; i < code.n(); ++i) {
        std::vector<int> chosen{i};
        std::vector<FpVector> basis;
        std::optional<std::vector<int>> witness;

        auto rank_with = [&](std::vector<FpVector>& bas, const FpVector& col) -> bool {
            // Returns whether col extends the basis; mutates bas when so.
            FpVector v = col;
            for (const auto& bvec : bas) {
                int lead = -1;
                for (std::size_t j = 0; j < bvec.size(); ++j)
                    if (bvec[j] != 0) {
                        lead = static_cast<int>(j);
                        break;
                    }
                if (lead >= 0 && v[lead] != 0)
                    v = vec_sub(f, v, vec_scale(f, f.mul(v[lead], f.inv(bvec[lead])), bvec));
            }
            if (is_zero_vector(v)) return false;
            bas.push_back(std::move(v));
            return true;
        };

        std::vector<FpVector> base0;
        rank_with(base0, code.columns()[i]);

        // Depth-first over ascending column indices.
        auto dfs = [&](auto&& self, int next, std::vector<FpVector>& bas) -> bool {
            if (static_cast<int>(chosen.size()) >= delta) {
                if (punctured_min_distance(f, code.columns(), chosen) >= delta) {
                    witness = chosen;
                    return true;
                }
            }
            if (static_cast<int>(chosen.size()) == cap) return false;
            for (int c = next; c < code.n(); ++c) {
                if (c == i) continue;
                std::vector<FpVector> bas2 = bas;
                const bool extended = rank_with(bas2, code.columns()[c]);
                if (extended && static_cast<int>(bas2.size()) > r) continue;
                chosen.push_back(c);
                if (self(self, c + 1, bas2)) return true;
                chosen.pop_back();
            }
            return false;
        };
        dfs(dfs, 0, base0);

        if (!witness) {
            out.certified = false;
            out.blocking_coordinate = i;
            return out;
        }
        std::vector<int> repair;
        for (int c : *witness)
            if (c != i) repair.push_back(c);
        out.witnesses.push_back(CoordinateWitness{i, {RepairSet{std::move(repair), "brute"}}});
    }
    return out;
}

}  // namespace dscode
