#pragma once

#include <algorithm>
#include <vector>

#include "dscode/field.hpp"

namespace dscode {

/// A projective point stored by its canonical representative: the unique
/// scalar multiple whose first nonzero coordinate is 1.
struct ProjPoint {
    FpVector rep;

    std::size_t leading() const {
        std::size_t lead = 0;
        while (lead < rep.size() && rep[lead] == 0) ++lead;
        return lead;
    }

    bool operator==(const ProjPoint& o) const { return rep == o.rep; }
    bool operator!=(const ProjPoint& o) const { return rep != o.rep; }

    /// Stratified order: leading-1 position ascending, then lexicographic
    /// by the remaining coordinates.
    bool operator<(const ProjPoint& o) const {
        const std::size_t la = leading(), lb = o.leading();
        if (la != lb) return la < lb;
        return rep < o.rep;
    }
};

inline bool proj_less(const ProjPoint& a, const ProjPoint& b) { return a < b; }

/// Scale f so its first nonzero coordinate becomes 1.
inline ProjPoint normalize(const PrimeField& f, const FpVector& v) {
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) throw CodeError(Errc::zero_vector, "cannot normalize the zero vector");
    return ProjPoint{vec_scale(f, f.inv(v[lead]), v)};
}

/// All points of the projective space of F_p^m in canonical order.
struct ProjSpace {
    PrimeField field;
    int m;
    std::vector<ProjPoint> points;
};

inline ProjSpace enumerate_projective(const PrimeField& f, int m) {
    if (m < 1) throw CodeError(Errc::invalid_dimension, "ambient dimension must be positive");
    const int p = f.p();
    ProjSpace space{f, m, {}};
    space.points.reserve(static_cast<std::size_t>((ipow(p, m) - 1) / (p - 1)));
    for (int lead = 0; lead < m; ++lead) {
        const int tail = m - lead - 1;
        const long long count = ipow(p, tail);
        for (long long idx = 0; idx < count; ++idx) {
            FpVector v(m, 0);
            v[lead] = 1;
            long long rest = idx;
            for (int j = m - 1; j > lead; --j) {
                v[j] = static_cast<int>(rest % p);
                rest /= p;
            }
            space.points.push_back(ProjPoint{std::move(v)});
        }
    }
    return space;
}

/// 1-based sorted index set, a subset of [m].
using IndexSet = std::vector<int>;

inline bool supported_on(const FpVector& v, const IndexSet& a) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int pos = static_cast<int>(i) + 1;
        while (k < a.size() && a[k] < pos) ++k;
        const bool in_a = k < a.size() && a[k] == pos;
        if (!in_a && v[i] != 0) return false;
    }
    return true;
}

/// P_A: the points of P_[m] supported on A, in canonical order. P_empty is
/// the empty list.
inline std::vector<ProjPoint> projective_subspace(const ProjSpace& space, const IndexSet& a) {
    for (int i : a)
        if (i < 1 || i > space.m)
            throw CodeError(Errc::index_out_of_range,
                            "index " + std::to_string(i) + " outside [1," + std::to_string(space.m) + "]");
    std::vector<ProjPoint> out;
    for (const auto& pt : space.points)
        if (supported_on(pt.rep, a)) out.push_back(pt);
    return out;
}

/// The points (1, a_2, ..., a_m) with every coordinate nonzero.
inline std::vector<ProjPoint> restricted_points(const ProjSpace& space) {
    std::vector<ProjPoint> out;
    for (const auto& pt : space.points) {
        bool all_nonzero = true;
        for (int c : pt.rep)
            if (c == 0) {
                all_nonzero = false;
                break;
            }
        if (all_nonzero) out.push_back(pt);
    }
    return out;
}

inline bool in_restricted(const ProjPoint& pt) {
    for (int c : pt.rep)
        if (c == 0) return false;
    return true;
}

/// The p+1 points of the projective line through g and h, materialized as
/// {g, h, [h-g], [h+a_1 g], ..., [h+a_{p-2} g]} with a_i the i-th element of
/// 1..p-2.
inline std::vector<ProjPoint> line_through(const PrimeField& f, const ProjPoint& g,
                                           const ProjPoint& h) {
    if (g == h) throw CodeError(Errc::degenerate_line, "line through a single point");
    std::vector<ProjPoint> line;
    line.reserve(f.p() + 1);
    line.push_back(g);
    line.push_back(h);
    line.push_back(normalize(f, vec_sub(f, h.rep, g.rep)));
    for (int alpha = 1; alpha <= f.p() - 2; ++alpha)
        line.push_back(normalize(f, vec_add(f, h.rep, vec_scale(f, alpha, g.rep))));
    return line;
}

/// Canonical order doubles as sorted order, so membership is a binary search.
inline std::size_t index_of(const ProjSpace& space, const ProjPoint& pt) {
    const auto it = std::lower_bound(space.points.begin(), space.points.end(), pt, proj_less);
    if (it == space.points.end() || !(*it == pt))
        throw CodeError(Errc::point_not_in_space, "point not in the space");
    return static_cast<std::size_t>(it - space.points.begin());
}

/// All (p^{m-1}-1)/(p-1) lines containing g; they partition P_[m]\{g} into
/// sets of size p.
inline std::vector<std::vector<ProjPoint>> lines_through(const ProjSpace& space,
                                                         const ProjPoint& g) {
    std::vector<bool> covered(space.points.size(), false);
    covered[index_of(space, g)] = true;
    std::vector<std::vector<ProjPoint>> lines;
    for (std::size_t i = 0; i < space.points.size(); ++i) {
        if (covered[i]) continue;
        auto line = line_through(space.field, g, space.points[i]);
        for (const auto& pt : line)
            if (pt != g) covered[index_of(space, pt)] = true;
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace dscode
